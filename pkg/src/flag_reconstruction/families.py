"""Named graph families used as test corpora and by `flagrecon gen`."""

from collections.abc import Callable
from itertools import combinations

import networkx as nx

from flag_reconstruction.datamodel.graph import Graph
from flag_reconstruction.errors import InvalidParameterError
from flag_reconstruction.graphs import build_graph, from_networkx, join


def _require(condition: bool, message: str) -> None:  # noqa: FBT001
    if not condition:
        raise InvalidParameterError(message)


def _labels(n: int) -> list[str]:
    return [str(i) for i in range(n)]


def empty(n: int) -> Graph:
    _require(n >= 0, f"empty(n) needs n >= 0, got {n}")
    return build_graph(_labels(n))


def path(n: int) -> Graph:
    _require(n >= 1, f"path(n) needs n >= 1, got {n}")
    labels = _labels(n)
    return build_graph(labels, zip(labels, labels[1:]))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle(n) needs n >= 3, got {n}")
    labels = _labels(n)
    return build_graph(labels, zip(labels, labels[1:] + labels[:1]))


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete(n) needs n >= 1, got {n}")
    labels = _labels(n)
    return build_graph(labels, combinations(labels, 2))


def complete_multipartite(*parts: int) -> Graph:
    _require(len(parts) >= 1, "complete_multipartite needs at least one part")
    _require(all(p >= 1 for p in parts), f"part sizes must be positive, got {list(parts)}")
    labels = _labels(sum(parts))
    owner: list[int] = []
    for part, size in enumerate(parts):
        owner.extend([part] * size)
    return build_graph(
        labels,
        ((u, v) for u, v in combinations(labels, 2) if owner[int(u)] != owner[int(v)]),
    )


def cross_polytope(k: int) -> Graph:
    """1-skeleton of the boundary of the k-dimensional cross-polytope, a flag (k-1)-sphere."""
    _require(k >= 1, f"cross_polytope(k) needs k >= 1, got {k}")
    return complete_multipartite(*([2] * k))


def wheel(n: int) -> Graph:
    """Cone over an n-cycle; the hub is labeled "hub"."""
    return join(cycle(n), build_graph(["hub"]))


def torus_grid(p: int, q: int) -> Graph:
    """Triangulated p x q torus: square grid plus one consistent diagonal per square.

    Vertex (i, j) is labeled "i,j". For p, q >= 4 the triangles are exactly the
    3-cliques, so the flag complex is the torus.
    """
    _require(p >= 4 and q >= 4, f"torus_grid(p, q) needs p, q >= 4, got ({p}, {q})")

    def label(i: int, j: int) -> str:
        return f"{i % p},{j % q}"

    labels = [label(i, j) for i in range(p) for j in range(q)]
    edges = [
        (label(i, j), label(i + di, j + dj))
        for i in range(p)
        for j in range(q)
        for di, dj in ((1, 0), (0, 1), (1, 1))
    ]
    return build_graph(labels, edges)


def icosahedron() -> Graph:
    """The icosahedron, a flag triangulation of the 2-sphere."""
    return from_networkx(nx.icosahedral_graph())


FAMILIES: dict[str, Callable[..., Graph]] = {
    "complete": complete,
    "complete_multipartite": complete_multipartite,
    "cross_polytope": cross_polytope,
    "cycle": cycle,
    "empty": empty,
    "icosahedron": icosahedron,
    "path": path,
    "torus_grid": torus_grid,
    "wheel": wheel,
}


def generate(family: str, *params: int) -> Graph:
    try:
        builder = FAMILIES[family]
    except KeyError as e:
        msg = f"Unknown graph family {family!r}; choose from {sorted(FAMILIES)}"
        raise InvalidParameterError(msg) from e
    try:
        return builder(*params)
    except TypeError as e:
        msg = f"Wrong number of parameters for {family}: {list(params)}"
        raise InvalidParameterError(msg) from e
