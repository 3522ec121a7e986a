"""Exact canonical labeling by individualization and refinement.

The canonical form of a graph is the largest adjacency bit string over all
leaves of the search tree. The tree is built from isomorphism-invariant
choices only, so isomorphic graphs explore the same set of leaf strings.
Twin vertices in a target cell are explored once: swapping twins is an
automorphism that fixes the current coloring, so their subtrees give the
same strings.
"""

import logging
from collections.abc import Sequence
from itertools import permutations
from typing import Any

from flag_reconstruction.datamodel.graph import CanonicalForm, Graph, Vertex

logger = logging.getLogger(__name__)

Adjacency = Sequence[frozenset[int]]

# Brute force is only the test oracle; 8! permutations is already slow.
BRUTE_FORCE_LIMIT = 8


def _rank(signatures: Sequence[Any]) -> list[int]:
    order = {s: r for r, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def refine(adjacency: Adjacency, colors: Sequence[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition below `colors`.

    A vertex's new colour is its old colour followed by the sorted multiset
    of neighbour colours, re-ranked. The old colour leads the signature, so
    the relative order of existing cells never changes.
    """
    current = list(colors)
    while True:
        signatures = [
            (current[v], tuple(sorted(current[u] for u in adjacency[v])))
            for v in range(len(adjacency))
        ]
        refined = _rank(signatures)
        if len(set(refined)) == len(set(current)):
            return refined
        current = refined


def _target_cell(colors: Sequence[int]) -> list[int]:
    """First smallest non-singleton cell, in colour order."""
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    candidates = [cell for _, cell in sorted(cells.items()) if len(cell) > 1]
    return min(candidates, key=len) if candidates else []


def _individualize(colors: Sequence[int], v: int) -> list[int]:
    return _rank([(c, 0 if u == v else 1) for u, c in enumerate(colors)])


def _twin_representatives(adjacency: Adjacency, cell: Sequence[int]) -> list[int]:
    representatives: list[int] = []
    seen: set[tuple[frozenset[int], frozenset[int]]] = set()
    for v in cell:
        # open and closed neighbourhoods cover non-adjacent and adjacent twins
        open_nbhd = adjacency[v]
        closed_nbhd = adjacency[v] | {v}
        if (open_nbhd, frozenset()) in seen or (frozenset(), closed_nbhd) in seen:
            continue
        seen.add((open_nbhd, frozenset()))
        seen.add((frozenset(), closed_nbhd))
        representatives.append(v)
    return representatives


def _leaf_value(adjacency: Adjacency, colors: Sequence[int]) -> int:
    """Adjacency bits of the relabeled graph, pairs in graph6 column order."""
    n = len(adjacency)
    vertex_at = [0] * n
    for v, c in enumerate(colors):
        vertex_at[c] = v
    value = 0
    for j in range(1, n):
        neighbours = adjacency[vertex_at[j]]
        for i in range(j):
            value = (value << 1) | (vertex_at[i] in neighbours)
    return value


def _search(adjacency: Adjacency) -> tuple[int, list[int]]:
    """Best leaf value and a discrete colouring attaining it."""
    best_value = -1
    best_colors: list[int] = []
    leaves = 0
    stack = [refine(adjacency, [len(adjacency[v]) for v in range(len(adjacency))])]
    while stack:
        colors = stack.pop()
        cell = _target_cell(colors)
        if not cell:
            leaves += 1
            value = _leaf_value(adjacency, colors)
            if value > best_value:
                best_value, best_colors = value, colors
            continue
        for v in _twin_representatives(adjacency, cell):
            stack.append(refine(adjacency, _individualize(colors, v)))
    logger.debug("Canonical search on %d vertices visited %d leaves", len(adjacency), leaves)
    return best_value, best_colors


def _pack(order: int, value: int) -> CanonicalForm:
    pair_count = order * (order - 1) // 2
    payload = value.to_bytes((pair_count + 7) // 8, "big") if pair_count else b""
    return CanonicalForm(order=order, certificate=order.to_bytes(4, "big") + payload)


def canonical_form(g: Graph) -> CanonicalForm:
    if g.order == 0:
        return _pack(0, 0)
    value, _ = _search(g.adjacency)
    return _pack(g.order, value)


def canonical_labeling(g: Graph) -> dict[Vertex, int]:
    """Position of each vertex in the canonical relabeling."""
    if g.order == 0:
        return {}
    _, colors = _search(g.adjacency)
    return {v: colors[i] for i, v in enumerate(g.vertices)}


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.order == g2.order and canonical_form(g1) == canonical_form(g2)


def brute_force_canonical_form(g: Graph) -> CanonicalForm:
    """Largest adjacency string over every vertex ordering.

    A complete invariant computed independently of the search tree; it is
    generally a different string from `canonical_form`, so only equality
    patterns can be compared between the two.
    """
    if g.order > BRUTE_FORCE_LIMIT:
        msg = f"Brute force canonical form is limited to {BRUTE_FORCE_LIMIT} vertices"
        raise ValueError(msg)
    best = 0
    for perm in permutations(range(g.order)):
        best = max(best, _leaf_value(g.adjacency, perm))
    return _pack(g.order, best)


def find_isomorphism(g1: Graph, g2: Graph) -> dict[Vertex, Vertex] | None:
    """Explicit isomorphism by degree-pruned backtracking, independent of canonical forms."""
    if g1.order != g2.order or g1.size != g2.size:
        return None
    a1, a2 = g1.adjacency, g2.adjacency
    if sorted(map(len, a1)) != sorted(map(len, a2)):
        return None
    n = g1.order
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or len(a1[v]) != len(a2[w]):
                continue
            if any((image[u] in a2[w]) != (u in a1[v]) for u in range(v)):
                continue
            image[v], used[w] = w, True
            if extend(v + 1):
                return True
            image[v], used[w] = -1, False
        return False

    if not extend(0):
        return None
    return {g1.vertices[v]: g2.vertices[image[v]] for v in range(n)}
