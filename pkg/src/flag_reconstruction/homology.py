"""Integer simplicial homology and cohomology of finite complexes.

Everything is reduced unless stated otherwise. The chain complex is
augmented by C_-1 = Z, so the empty complex is the (-1)-sphere with
H_-1 = Z and every nonempty complex has trivial H_-1.
"""

import logging
from collections.abc import Iterable, Sequence
from typing import Any, Literal

import numpy as np

from flag_reconstruction.datamodel.complex import Simplex, SimplicialComplex
from flag_reconstruction.datamodel.groups import AbelianGroup, GradedGroups
from flag_reconstruction.errors import InvalidParameterError
from flag_reconstruction.flag_complex import link
from flag_reconstruction.smith import IntegerMatrix, SmithForm, smith_normal_form

logger = logging.getLogger(__name__)

CohomologyMethod = Literal["uct", "cochain"]


def _chain_basis(L: SimplicialComplex, k: int, *, reduced: bool) -> Sequence[Simplex]:
    if k == -1 and reduced:
        return [()]
    return L.level(k)


def _boundary(
    rows: Sequence[Simplex], cols: Sequence[Simplex]
) -> IntegerMatrix:
    position = {s: i for i, s in enumerate(rows)}
    matrix = np.zeros((len(rows), len(cols)), dtype=object)
    for j, simplex in enumerate(cols):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1 :]
            if face in position:
                matrix[position[face], j] = (-1) ** i
    return matrix


def boundary_matrix(L: SimplicialComplex, k: int, *, reduced: bool = True) -> IntegerMatrix:
    """The boundary map C_k -> C_(k-1) over the sorted simplex bases.

    With `reduced`, C_-1 = Z and the k = 0 map is the augmentation. Degrees
    outside the complex give matrices with zero rows or columns.
    """
    return _boundary(
        _chain_basis(L, k - 1, reduced=reduced), _chain_basis(L, k, reduced=reduced)
    )


def _snf(matrix: IntegerMatrix) -> SmithForm:
    logger.debug("Smith normal form of a %dx%d matrix", *matrix.shape)
    return smith_normal_form(matrix)


def _from_ranks(
    dims: dict[int, int], forms: dict[int, SmithForm], degrees: Iterable[int]
) -> GradedGroups:
    """H_k = ker d_k / im d_(k+1), read off the Smith forms of every d_k."""

    def rank(k: int) -> int:
        return forms[k].rank if k in forms else 0

    return GradedGroups(
        groups={
            k: AbelianGroup.from_diagonal(
                dims.get(k, 0) - rank(k) - rank(k + 1),
                forms[k + 1].invariant_factors if k + 1 in forms else (),
            )
            for k in degrees
        }
    )


def reduced_homology(L: SimplicialComplex) -> GradedGroups:
    """Reduced integral homology in degrees -1 through dim(L)."""
    top = L.dimension
    dims = {k: len(_chain_basis(L, k, reduced=True)) for k in range(-1, top + 1)}
    forms = {k: _snf(boundary_matrix(L, k)) for k in range(top + 2)}
    return _from_ranks(dims, forms, range(-1, top + 1))


def _cohomology_by_uct(L: SimplicialComplex) -> GradedGroups:
    homology = reduced_homology(L)
    return GradedGroups(
        groups={
            k: AbelianGroup(
                rank=homology.degree(k).rank,
                torsion=homology.degree(k - 1).torsion,
            )
            for k in range(-1, L.dimension + 1)
        }
    )


def _cohomology_by_cochains(L: SimplicialComplex) -> GradedGroups:
    # coboundary d^k : C^k -> C^(k+1) is the transpose of the boundary d_(k+1)
    top = L.dimension
    dims = {k: len(_chain_basis(L, k, reduced=True)) for k in range(-1, top + 1)}
    coboundary = {k: _snf(boundary_matrix(L, k + 1).T.copy()) for k in range(-1, top + 1)}

    def rank(k: int) -> int:
        return coboundary[k].rank if k in coboundary else 0

    return GradedGroups(
        groups={
            k: AbelianGroup.from_diagonal(
                dims[k] - rank(k) - rank(k - 1),
                coboundary[k - 1].invariant_factors if k - 1 in coboundary else (),
            )
            for k in range(-1, top + 1)
        }
    )


def reduced_cohomology(L: SimplicialComplex, *, method: CohomologyMethod = "uct") -> GradedGroups:
    """Reduced integral cohomology.

    "uct" applies universal coefficients to the homology: the free part of
    H^k is that of H_k, the torsion is that of H_(k-1). "cochain" computes
    the transposed complex directly. Both must agree.
    """
    if method == "uct":
        return _cohomology_by_uct(L)
    if method == "cochain":
        return _cohomology_by_cochains(L)
    msg = f"Unknown cohomology method {method!r}"
    raise InvalidParameterError(msg)


def local_homology(L: SimplicialComplex, sigma: Iterable[Any]) -> GradedGroups:
    """H_i(|L|, |L| - interior point of sigma), as H~_(i - dim sigma - 1) of the link.

    An empty link contributes Z in degree -1, so a facet of an n-complex
    reports Z in degree n.
    """
    simplex = {str(v) for v in sigma}
    return reduced_homology(link(L, simplex)).shifted(len(simplex))


def relative_homology(L: SimplicialComplex, A: SimplicialComplex) -> GradedGroups:
    """Unreduced H_*(L, A) from the quotient chain complex C(L) / C(A)."""
    inside = set(A.all_simplices())
    if not inside.issubset(L.all_simplices()):
        msg = "relative_homology needs A to be a subcomplex of L"
        raise InvalidParameterError(msg)
    top = L.dimension
    bases = {
        k: [s for s in L.level(k) if s not in inside] for k in range(-1, top + 2)
    }
    forms = {k: _snf(_boundary(bases[k - 1], bases[k])) for k in range(top + 2)}
    dims = {k: len(bases[k]) for k in range(top + 1)}
    return _from_ranks(dims, forms, range(top + 1))


def betti_numbers(L: SimplicialComplex) -> list[int]:
    """Unreduced Betti numbers b_0 .. b_dim."""
    homology = reduced_homology(L)
    betti = [homology.degree(k).rank for k in range(L.dimension + 1)]
    if betti:
        betti[0] += 1
    return betti


def reduced_euler_characteristic(L: SimplicialComplex) -> int:
    """Alternating sum of reduced ranks from degree -1; equals chi(L) - 1."""
    return reduced_homology(L).rank_alternating_sum()
