from collections import Counter
from collections.abc import Iterable
from typing import Any, Self

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from flag_reconstruction.errors import InvalidParameterError, UnknownVertexError

Vertex = str
Edge = tuple[Vertex, Vertex]


def normalize_graph_data(
    vertices: Iterable[Any],
    edges: Iterable[Iterable[Any]],
) -> tuple[tuple[Vertex, ...], tuple[Edge, ...]]:
    """Stringify labels, drop duplicate edges and order everything by vertex position.

    The errors raised are `ValueError`s, so inside model validation pydantic
    reports them as a `ValidationError`; `graphs.build_graph` calls this first
    to surface them unwrapped.
    """
    labels = tuple(str(v) for v in vertices)
    index = {v: i for i, v in enumerate(labels)}
    if len(index) != len(labels):
        duplicates = sorted(v for v, count in Counter(labels).items() if count > 1)
        msg = f"Duplicate vertex labels: {duplicates}"
        raise InvalidParameterError(msg)

    pairs: set[tuple[int, int]] = set()
    for edge in edges:
        ends = tuple(str(v) for v in edge)
        if len(ends) != 2:
            msg = f"Edges must have exactly two endpoints, got {list(ends)}"
            raise InvalidParameterError(msg)
        u, v = ends
        if u not in index or v not in index:
            raise UnknownVertexError([w for w in ends if w not in index])
        if u == v:
            msg = f"Self-loop at vertex {u!r}"
            raise InvalidParameterError(msg)
        i, j = sorted((index[u], index[v]))
        pairs.add((i, j))

    ordered = tuple((labels[i], labels[j]) for i, j in sorted(pairs))
    return labels, ordered


class Graph(BaseModel):
    """A finite simple graph over opaque string labels.

    Labels are kept for reporting; algorithms work on the dense integer
    positions exposed by `adjacency`.
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[Vertex, ...] = Field(
        description="Vertex labels, in the order that defines their integer positions",
    )
    edges: tuple[Edge, ...] = Field(
        default=(),
        description="Edges as label pairs, each ordered by vertex position",
    )

    _index: dict[Vertex, int] = PrivateAttr(default_factory=dict)
    _adjacency: tuple[frozenset[int], ...] = PrivateAttr(default=())

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if isinstance(data, dict) and "vertices" in data:
            vertices, edges = normalize_graph_data(
                data["vertices"], data.get("edges", ())
            )
            data = {**data, "vertices": vertices, "edges": edges}
        return data

    def model_post_init(self, context: Any, /) -> None:
        self._index = {v: i for i, v in enumerate(self.vertices)}
        neighbours: list[set[int]] = [set() for _ in self.vertices]
        for u, v in self.edges:
            i, j = self._index[u], self._index[v]
            neighbours[i].add(j)
            neighbours[j].add(i)
        self._adjacency = tuple(frozenset(n) for n in neighbours)

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """Neighbour sets by integer vertex position."""
        return self._adjacency

    def index(self, vertex: Vertex) -> int:
        return self._index[vertex]

    def has_vertex(self, vertex: Vertex) -> bool:
        return vertex in self._index

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        if u not in self._index or v not in self._index:
            return False
        return self._index[v] in self._adjacency[self._index[u]]

    def neighbors(self, vertex: Vertex) -> frozenset[Vertex]:
        return frozenset(self.vertices[j] for j in self._adjacency[self._index[vertex]])

    def degree(self, vertex: Vertex) -> int:
        return len(self._adjacency[self._index[vertex]])

    def sort_vertices(self, vertices: Iterable[Vertex]) -> tuple[Vertex, ...]:
        """Order labels by their position in this graph."""
        return tuple(sorted(set(vertices), key=self._index.__getitem__))

    def same_as(self, other: Self) -> bool:
        """Equal as labeled graphs, ignoring the order of the vertex list."""
        return set(self.vertices) == set(other.vertices) and {
            frozenset(e) for e in self.edges
        } == {frozenset(e) for e in other.edges}


class CanonicalForm(BaseModel):
    """Exact certificate of an isomorphism class.

    `certificate` packs the order (4 bytes, big-endian) followed by the upper
    triangle of the canonically relabeled adjacency matrix, column by column.
    Equal certificates mean isomorphic graphs and vice versa.
    """

    model_config = ConfigDict(frozen=True, ser_json_bytes="hex", val_json_bytes="hex")

    order: int = Field(
        description="Number of vertices of the graph",
        ge=0,
    )
    certificate: bytes = Field(
        description="Packed canonical adjacency bits, prefixed by the order",
    )

    def sort_key(self) -> tuple[int, bytes]:
        return (self.order, self.certificate)

    def edge_bits(self) -> list[int]:
        pair_count = self.order * (self.order - 1) // 2
        value = int.from_bytes(self.certificate[4:], "big")
        return [(value >> (pair_count - 1 - k)) & 1 for k in range(pair_count)]

    def to_graph(self) -> Graph:
        """The canonical representative, labeled "0".."n-1"."""
        labels = [str(i) for i in range(self.order)]
        bits = iter(self.edge_bits())
        edges = [
            (labels[i], labels[j])
            for j in range(1, self.order)
            for i in range(j)
            if next(bits)
        ]
        return Graph(vertices=tuple(labels), edges=tuple(edges))
