"""Graph algebra: induced subgraphs, complements, joins and unions."""

from collections.abc import Iterable, Mapping
from itertools import combinations
from typing import Any

import networkx as nx

from flag_reconstruction.datamodel.graph import Graph, Vertex, normalize_graph_data
from flag_reconstruction.errors import LabelCollisionError, UnknownVertexError


def build_graph(vertices: Iterable[Any], edges: Iterable[Iterable[Any]] = ()) -> Graph:
    """Construct a graph, raising the package's errors instead of a ValidationError."""
    labels, normalized = normalize_graph_data(vertices, edges)
    return Graph(vertices=labels, edges=normalized)


def _check_known(g: Graph, vertices: Iterable[Vertex]) -> set[Vertex]:
    subset = {str(v) for v in vertices}
    unknown = sorted(v for v in subset if not g.has_vertex(v))
    if unknown:
        raise UnknownVertexError(unknown)
    return subset


def full_subgraph(g: Graph, t: Iterable[Vertex]) -> Graph:
    """The induced subgraph on `t`, keeping the vertex order of `g`."""
    subset = _check_known(g, t)
    return Graph(
        vertices=tuple(v for v in g.vertices if v in subset),
        edges=tuple(e for e in g.edges if e[0] in subset and e[1] in subset),
    )


def vertex_deleted(g: Graph, s: Vertex) -> Graph:
    _check_known(g, [s])
    return full_subgraph(g, (v for v in g.vertices if v != s))


def complement(g: Graph) -> Graph:
    return Graph(
        vertices=g.vertices,
        edges=tuple(
            (g.vertices[i], g.vertices[j])
            for i, j in combinations(range(g.order), 2)
            if j not in g.adjacency[i]
        ),
    )


def _check_disjoint(g1: Graph, g2: Graph) -> None:
    shared = sorted(set(g1.vertices) & set(g2.vertices))
    if shared:
        raise LabelCollisionError(shared)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    _check_disjoint(g1, g2)
    return Graph(vertices=g1.vertices + g2.vertices, edges=g1.edges + g2.edges)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two graphs.

    For right-angled Coxeter systems this is the direct product of the groups.
    """
    _check_disjoint(g1, g2)
    between = tuple((u, v) for u in g1.vertices for v in g2.vertices)
    return Graph(
        vertices=g1.vertices + g2.vertices,
        edges=g1.edges + g2.edges + between,
    )


def relabel(g: Graph, mapping: Mapping[Vertex, Any]) -> Graph:
    """Rename vertices; labels missing from `mapping` are kept."""
    new = {v: str(mapping.get(v, v)) for v in g.vertices}
    return build_graph(
        (new[v] for v in g.vertices),
        ((new[u], new[v]) for u, v in g.edges),
    )


def is_clique(g: Graph, t: Iterable[Vertex]) -> bool:
    positions = [g.index(v) for v in _check_known(g, t)]
    return all(j in g.adjacency[i] for i, j in combinations(positions, 2))


def universal_vertices(g: Graph) -> tuple[Vertex, ...]:
    """Vertices adjacent to every other vertex (cone points)."""
    return tuple(v for i, v in enumerate(g.vertices) if len(g.adjacency[i]) == g.order - 1)


def to_networkx(g: Graph) -> nx.Graph:
    """A networkx copy whose node iteration order is the vertex order of `g`."""
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def from_networkx(h: nx.Graph) -> Graph:
    return build_graph(list(h.nodes), list(h.edges))
