"""Flag complexes and the simplicial operations used on them."""

import logging
from collections.abc import Iterable
from itertools import combinations
from typing import Any

import networkx as nx

from flag_reconstruction.canonical import is_isomorphic
from flag_reconstruction.datamodel.complex import Simplex, SimplicialComplex
from flag_reconstruction.datamodel.graph import Graph
from flag_reconstruction.errors import (
    DimensionCapExceededError,
    InvalidParameterError,
    NotASimplexError,
    UnknownVertexError,
)
from flag_reconstruction.graphs import to_networkx

logger = logging.getLogger(__name__)


def clique_complex(g: Graph, *, max_dimension: int | None = None) -> SimplicialComplex:
    """The flag complex whose 1-skeleton is `g`.

    Maximal cliques come from networkx's pivoting Bron-Kerbosch and are then
    closed downward. A clique above `max_dimension` is an error, never a
    silent truncation.
    """
    maximal = [
        sorted(g.index(v) for v in clique) for clique in nx.find_cliques(to_networkx(g))
    ]
    top = max((len(c) - 1 for c in maximal), default=-1)
    if max_dimension is not None and top > max_dimension:
        raise DimensionCapExceededError(top, max_dimension)

    simplices: set[tuple[int, ...]] = set()
    for clique in maximal:
        for size in range(1, len(clique) + 1):
            simplices.update(combinations(clique, size))
    logger.debug(
        "Flag complex of %d vertices: %d maximal cliques, %d simplices, dimension %d",
        g.order,
        len(maximal),
        len(simplices),
        top,
    )
    return SimplicialComplex.from_positions(g.vertices, simplices)


def one_skeleton(L: SimplicialComplex) -> Graph:
    return Graph(vertices=L.vertices, edges=tuple((u, v) for u, v in L.level(1)))


def full_subcomplex(L: SimplicialComplex, t: Iterable[Any]) -> SimplicialComplex:
    subset = {str(v) for v in t}
    unknown = sorted(subset.difference(L.vertices))
    if unknown:
        raise UnknownVertexError(unknown)
    vertices = [v for v in L.vertices if v in subset]
    return SimplicialComplex(
        vertices=tuple(vertices),
        simplices=tuple(
            level
            for level in (
                tuple(s for s in L.level(k) if subset.issuperset(s))
                for k in range(L.dimension + 1)
            )
            if level
        ),
    )


def _require_simplex(L: SimplicialComplex, sigma: Iterable[Any]) -> Simplex:
    labels = tuple(str(v) for v in sigma)
    try:
        simplex = L.normalize(labels)
    except UnknownVertexError as e:
        raise NotASimplexError(labels) from e
    if simplex and not L.contains(simplex):
        raise NotASimplexError(labels)
    return simplex


def link(L: SimplicialComplex, sigma: Iterable[Any]) -> SimplicialComplex:
    """Lk(sigma, L): simplices disjoint from sigma whose union with it lies in L.

    The link of the empty simplex is L itself; the link of a facet is empty.
    """
    simplex = _require_simplex(L, sigma)
    if not simplex:
        return L
    core = set(simplex)
    found = {
        L.positions(tuple(v for v in tau if v not in core))
        for tau in L.all_simplices()
        if len(tau) > len(simplex) and core.issubset(tau)
    }
    used = sorted({i for s in found for i in s})
    vertices = [L.vertices[i] for i in used]
    reindex = {i: k for k, i in enumerate(used)}
    return SimplicialComplex.from_positions(
        vertices, (tuple(reindex[i] for i in s) for s in found)
    )


def antistar(L: SimplicialComplex, sigma: Iterable[Any]) -> SimplicialComplex:
    """Subcomplex of simplices not containing sigma; |L| minus the barycenter retracts onto it."""
    simplex = _require_simplex(L, sigma)
    core = set(simplex)
    kept = {L.positions(tau) for tau in L.all_simplices() if not core.issubset(tau)}
    used = sorted({i for s in kept for i in s})
    reindex = {i: k for k, i in enumerate(used)}
    return SimplicialComplex.from_positions(
        [L.vertices[i] for i in used], (tuple(reindex[i] for i in s) for s in kept)
    )


def is_flag(L: SimplicialComplex) -> bool:
    """Whether every clique of the 1-skeleton spans a simplex."""
    rebuilt = clique_complex(one_skeleton(L))
    return [set(level) for level in rebuilt.simplices] == [
        set(level) for level in L.simplices
    ]


def f_vector(L: SimplicialComplex) -> list[int]:
    return L.f_vector()


def euler_characteristic(L: SimplicialComplex) -> int:
    return sum((-1) ** k * f for k, f in enumerate(L.f_vector()))


def complexes_isomorphic(L1: SimplicialComplex, L2: SimplicialComplex) -> bool:
    """Isomorphism of flag complexes, decided on their 1-skeleta."""
    for L in (L1, L2):
        if not is_flag(L):
            msg = "complexes_isomorphic only decides flag complexes"
            raise InvalidParameterError(msg)
    return is_isomorphic(one_skeleton(L1), one_skeleton(L2))

