"""Homology manifolds, generalized homology spheres and their boundaries."""

import logging
from itertools import combinations

from flag_reconstruction.datamodel.complex import SimplicialComplex
from flag_reconstruction.datamodel.graph import Vertex
from flag_reconstruction.datamodel.groups import GradedGroups
from flag_reconstruction.datamodel.topology import (
    GHSVerdict,
    LocalHomologyWitness,
    ManifoldVerdict,
)
from flag_reconstruction.errors import (
    BoundaryExtractionError,
    EmptyComplexError,
    InvalidParameterError,
)
from flag_reconstruction.homology import local_homology, reduced_homology

logger = logging.getLogger(__name__)


def detect_dimension(L: SimplicialComplex) -> int:
    return L.dimension


def _require_nonempty(L: SimplicialComplex, operation: str) -> None:
    if L.is_empty:
        msg = f"{operation} is undefined on the empty complex"
        raise EmptyComplexError(msg)


def maximal_simplices(L: SimplicialComplex) -> list[tuple[Vertex, ...]]:
    maximal = []
    for k in range(L.dimension + 1):
        covered = {
            face for s in L.level(k + 1) for face in combinations(s, k + 1)
        }
        maximal.extend(s for s in L.level(k) if s not in covered)
    return maximal


def is_pure(L: SimplicialComplex, n: int) -> bool:
    """Whether every maximal simplex has dimension exactly n."""
    _require_nonempty(L, "is_pure")
    return all(len(s) == n + 1 for s in maximal_simplices(L))


def is_homology_manifold(L: SimplicialComplex, n: int) -> ManifoldVerdict:
    """Check that every simplex has the local homology of an interior point of R^n.

    Each simplex sigma must have a link with the reduced homology of
    S^(n - dim sigma - 1), the empty link counting as S^-1. This covers
    purity: a maximal simplex below dimension n has an empty link of the
    wrong dimension. Connectivity is not required.
    """
    if n < 0:
        msg = f"Manifold dimension must be nonnegative, got {n}"
        raise InvalidParameterError(msg)
    _require_nonempty(L, "is_homology_manifold")

    expected = GradedGroups.sphere(n)
    witnesses: list[LocalHomologyWitness] = []
    verified: dict[int, int] = {}
    for simplex in L.all_simplices():
        found = local_homology(L, simplex)
        if found.matches(expected):
            verified[len(simplex) - 1] = verified.get(len(simplex) - 1, 0) + 1
        else:
            witnesses.append(
                LocalHomologyWitness(simplex=simplex, local_homology=found, expected=expected)
            )
    if witnesses:
        logger.debug(
            "Not a homology %d-manifold: %d failing simplices, first %s",
            n,
            len(witnesses),
            witnesses[0].simplex,
        )
    return ManifoldVerdict(
        is_manifold=not witnesses,
        dimension=n,
        witnesses=witnesses,
        verified=verified,
    )


def is_generalized_homology_sphere(
    L: SimplicialComplex, n: int, *, manifold: ManifoldVerdict | None = None
) -> GHSVerdict:
    """A homology n-manifold with the reduced homology of S^n.

    The empty complex is accepted as the generalized homology (-1)-sphere.
    A `manifold` verdict already computed for (L, n) is reused.
    """
    if L.is_empty:
        if n == -1:
            return GHSVerdict(is_sphere=True, dimension=-1, homology=reduced_homology(L))
        msg = f"The empty complex is only the (-1)-sphere, not an {n}-sphere"
        raise EmptyComplexError(msg)
    homology = reduced_homology(L)
    if n < 0:
        return GHSVerdict(is_sphere=False, dimension=n, homology=homology)
    if manifold is None or manifold.dimension != n:
        manifold = is_homology_manifold(L, n)
    return GHSVerdict(
        is_sphere=manifold.is_manifold and homology.matches(GradedGroups.sphere(n)),
        dimension=n,
        manifold=manifold,
        homology=homology,
    )


def boundary_of(L: SimplicialComplex, n: int) -> frozenset[Vertex]:
    """Vertices where L looks like the boundary of a homology n-manifold.

    Every vertex must show either the interior pattern (Z in degree n) or
    trivial local homology; the latter form the boundary.
    """
    _require_nonempty(L, "boundary_of")
    for simplex in maximal_simplices(L):
        if len(simplex) != n + 1:
            reason = f"maximal simplex {list(simplex)} has dimension {len(simplex) - 1}, not {n}"
            raise BoundaryExtractionError(simplex[0], reason)

    interior = GradedGroups.sphere(n)
    boundary = set()
    for vertex in L.vertices:
        found = local_homology(L, [vertex])
        if found.is_trivial:
            boundary.add(vertex)
        elif not found.matches(interior):
            reason = f"local homology is {found}, neither trivial nor Z in degree {n}"
            raise BoundaryExtractionError(vertex, reason)
    return frozenset(boundary)
