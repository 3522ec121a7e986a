"""Smith normal form over the integers.

Matrices are numpy arrays with ``dtype=object`` holding Python ints, so
entries never overflow however large elimination makes them.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

IntegerMatrix = npt.NDArray[np.object_]


def integer_matrix(rows: Sequence[Sequence[int]], cols: int | None = None) -> IntegerMatrix:
    """Copy `rows` into an exact matrix; `cols` fixes the width of a row-less matrix."""
    width = cols if cols is not None else (len(rows[0]) if rows else 0)
    matrix = np.zeros((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != width:
            msg = f"Row {i} has {len(row)} entries, expected {width}"
            raise ValueError(msg)
        for j, x in enumerate(row):
            matrix[i, j] = int(x)
    return matrix


def identity(n: int) -> IntegerMatrix:
    matrix = np.zeros((n, n), dtype=object)
    for i in range(n):
        matrix[i, i] = 1
    return matrix


@dataclass(frozen=True)
class SmithForm:
    """D = U @ m @ V with U, V unimodular and D diagonal, d1 | d2 | ... | dr.

    `invariant_factors` are the nonzero diagonal entries, positive and in
    divisibility order. U and V are only present when transforms were tracked.
    """

    diagonal: IntegerMatrix
    rank: int
    invariant_factors: tuple[int, ...]
    left: IntegerMatrix | None = None
    right: IntegerMatrix | None = None

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


class _Elimination:
    def __init__(self, m: IntegerMatrix, *, track: bool) -> None:
        self.D = np.array(m, dtype=object).copy()
        rows, cols = self.D.shape
        self.U = identity(rows) if track else None
        self.V = identity(cols) if track else None

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.D[[i, j]] = self.D[[j, i]]
        if self.U is not None:
            self.U[[i, j]] = self.U[[j, i]]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        self.D[:, [i, j]] = self.D[:, [j, i]]
        if self.V is not None:
            self.V[:, [i, j]] = self.V[:, [j, i]]

    def add_row(self, target: int, source: int, factor: int) -> None:
        """row[target] += factor * row[source]"""
        self.D[target] = self.D[target] + factor * self.D[source]
        if self.U is not None:
            self.U[target] = self.U[target] + factor * self.U[source]

    def add_col(self, target: int, source: int, factor: int) -> None:
        self.D[:, target] = self.D[:, target] + factor * self.D[:, source]
        if self.V is not None:
            self.V[:, target] = self.V[:, target] + factor * self.V[:, source]

    def negate_row(self, i: int) -> None:
        self.D[i] = -self.D[i]
        if self.U is not None:
            self.U[i] = -self.U[i]

    def smallest_pivot(self, t: int) -> tuple[int, int] | None:
        """Position of the first entry of least nonzero magnitude in D[t:, t:]."""
        best: tuple[int, int] | None = None
        best_size = 0
        rows, cols = self.D.shape
        for i in range(t, rows):
            for j in range(t, cols):
                size = abs(self.D[i, j])
                if size and (best is None or size < best_size):
                    best, best_size = (i, j), size
                    if size == 1:
                        return best
        return best

    def clear_cross(self, t: int) -> bool:
        """Reduce row t and column t modulo the pivot; True once both are zero."""
        pivot = self.D[t, t]
        clear = True
        rows, cols = self.D.shape
        for i in range(t + 1, rows):
            if self.D[i, t]:
                self.add_row(i, t, -(self.D[i, t] // pivot))
                clear = clear and not self.D[i, t]
        for j in range(t + 1, cols):
            if self.D[t, j]:
                self.add_col(j, t, -(self.D[t, j] // pivot))
                clear = clear and not self.D[t, j]
        return clear

    def indivisible_row(self, t: int) -> int | None:
        pivot = self.D[t, t]
        rows, cols = self.D.shape
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if self.D[i, j] % pivot:
                    return i
        return None

    def run(self) -> int:
        rows, cols = self.D.shape
        for t in range(min(rows, cols)):
            while True:
                position = self.smallest_pivot(t)
                if position is None:
                    return t
                self.swap_rows(t, position[0])
                self.swap_cols(t, position[1])
                if not self.clear_cross(t):
                    continue
                # d_t must divide everything left below it
                row = self.indivisible_row(t)
                if row is None:
                    break
                self.add_row(t, row, 1)
            if self.D[t, t] < 0:
                self.negate_row(t)
        return min(rows, cols)


def smith_normal_form(m: IntegerMatrix, *, with_transforms: bool = False) -> SmithForm:
    """Smith normal form by elimination, always pivoting on the smallest magnitude."""
    elimination = _Elimination(m, track=with_transforms)
    rank = elimination.run()
    D = elimination.D
    return SmithForm(
        diagonal=D,
        rank=rank,
        invariant_factors=tuple(int(D[i, i]) for i in range(rank)),
        left=elimination.U,
        right=elimination.V,
    )
