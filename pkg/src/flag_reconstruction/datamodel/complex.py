from collections.abc import Iterable, Iterator, Sequence
from itertools import combinations
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from flag_reconstruction.datamodel.graph import Vertex
from flag_reconstruction.errors import UnknownVertexError

Simplex = tuple[Vertex, ...]


class SimplicialComplex(BaseModel):
    """A finite abstract simplicial complex, simplices grouped by dimension.

    `simplices[k]` holds the k-simplices as label tuples sorted by vertex
    position, and the levels themselves are sorted. The empty complex has no
    vertices and no levels, so its dimension is -1.
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[Vertex, ...] = Field(
        default=(),
        description="Vertex labels, in the order that defines simplex sorting",
    )
    simplices: tuple[tuple[Simplex, ...], ...] = Field(
        default=(),
        description="Level k lists the k-dimensional simplices",
    )

    _index: dict[Vertex, int] = PrivateAttr(default_factory=dict)
    _members: frozenset[Simplex] = PrivateAttr(default=frozenset())

    @model_validator(mode="after")
    def _check_structure(self) -> "SimplicialComplex":
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            msg = "Vertex labels must be unique"
            raise ValueError(msg)
        if self.simplices and self.simplices[0] != tuple((v,) for v in self.vertices):
            msg = "Level 0 must list exactly the vertices, in order"
            raise ValueError(msg)
        if not self.simplices and self.vertices:
            msg = "A complex with vertices needs a level 0"
            raise ValueError(msg)
        members = {s for level in self.simplices for s in level}
        for k, level in enumerate(self.simplices):
            if not level:
                msg = f"Level {k} is empty; trailing levels must be dropped"
                raise ValueError(msg)
            for simplex in level:
                if len(simplex) != k + 1:
                    msg = f"{list(simplex)} stored at level {k}"
                    raise ValueError(msg)
                positions = [index.get(v, -1) for v in simplex]
                if -1 in positions or positions != sorted(set(positions)):
                    msg = f"{list(simplex)} is not sorted by vertex position"
                    raise ValueError(msg)
                if k > 0 and any(
                    face not in members for face in combinations(simplex, k)
                ):
                    msg = f"A face of {list(simplex)} is missing"
                    raise ValueError(msg)
        return self

    def model_post_init(self, context: Any, /) -> None:
        self._index = {v: i for i, v in enumerate(self.vertices)}
        self._members = frozenset(s for level in self.simplices for s in level)

    @classmethod
    def from_simplices(
        cls,
        simplices: Iterable[Iterable[Any]],
        vertices: Sequence[Any] | None = None,
    ) -> "SimplicialComplex":
        """Close a collection of simplices downward.

        Without an explicit vertex list, vertices are ordered by first
        appearance.
        """
        given = [tuple(str(v) for v in s) for s in simplices]
        if vertices is None:
            order = list(dict.fromkeys(v for s in given for v in s))
        else:
            order = [str(v) for v in vertices]
        index = {v: i for i, v in enumerate(order)}
        unknown = sorted({v for s in given for v in s if v not in index})
        if unknown:
            raise UnknownVertexError(unknown)

        closed: set[tuple[int, ...]] = {(i,) for i in range(len(order))}
        for simplex in given:
            positions = tuple(sorted({index[v] for v in simplex}))
            for size in range(1, len(positions) + 1):
                closed.update(combinations(positions, size))
        return cls.from_positions(order, closed)

    @classmethod
    def from_positions(
        cls,
        vertices: Sequence[Vertex],
        simplices: Iterable[tuple[int, ...]],
    ) -> "SimplicialComplex":
        """Build from face-closed, sorted position tuples over `vertices`."""
        levels: dict[int, list[tuple[int, ...]]] = {}
        for s in simplices:
            levels.setdefault(len(s) - 1, []).append(s)
        top = max(levels, default=-1)
        return cls(
            vertices=tuple(vertices),
            simplices=tuple(
                tuple(tuple(vertices[i] for i in s) for s in sorted(levels[k]))
                for k in range(top + 1)
            ),
        )

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def f_vector(self) -> list[int]:
        return [len(level) for level in self.simplices]

    def level(self, k: int) -> tuple[Simplex, ...]:
        if 0 <= k < len(self.simplices):
            return self.simplices[k]
        return ()

    def all_simplices(self) -> Iterator[Simplex]:
        """Every simplex, by increasing dimension."""
        for level in self.simplices:
            yield from level

    def contains(self, simplex: Iterable[Any]) -> bool:
        try:
            return self.normalize(simplex) in self._members
        except UnknownVertexError:
            return False

    def index(self, vertex: Vertex) -> int:
        return self._index[vertex]

    def normalize(self, simplex: Iterable[Any]) -> Simplex:
        """Sort labels by vertex position, rejecting unknown vertices."""
        labels = {str(v) for v in simplex}
        unknown = sorted(v for v in labels if v not in self._index)
        if unknown:
            raise UnknownVertexError(unknown)
        return tuple(sorted(labels, key=self._index.__getitem__))

    def positions(self, simplex: Simplex) -> tuple[int, ...]:
        return tuple(self._index[v] for v in simplex)
