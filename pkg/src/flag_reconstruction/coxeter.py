"""Right-angled Coxeter systems, read entirely off their nerve.

The group W generated by the vertices of a graph, with two generators
commuting exactly when they are adjacent, is never built. Every predicate
here goes through its nerve-side equivalent: spherical subsets are cliques,
W is finite when the graph is complete, and W splits as a product when the
graph is a join.
"""

import logging
from collections.abc import Iterable, Iterator
from typing import Any

import networkx as nx

from flag_reconstruction.datamodel.complex import Simplex
from flag_reconstruction.datamodel.coxeter import (
    Condition3Result,
    Condition3Witness,
    JoinDecomposition,
    LemmaKeyReport,
    NerveSystem,
    NotFinitelyGenerated,
    PDVerdict,
)
from flag_reconstruction.datamodel.graph import Graph
from flag_reconstruction.datamodel.groups import AbelianGroup, GradedGroups
from flag_reconstruction.errors import HypothesisError, InvalidParameterError
from flag_reconstruction.flag_complex import clique_complex, full_subcomplex
from flag_reconstruction.graphs import complement, is_clique, to_networkx, universal_vertices
from flag_reconstruction.homology import reduced_cohomology
from flag_reconstruction.manifold import detect_dimension, is_generalized_homology_sphere

logger = logging.getLogger(__name__)

JOIN_SPLIT_LIMIT = 16


def nerve_system(g: Graph, *, max_dimension: int | None = None) -> NerveSystem:
    return NerveSystem(graph=g, complex=clique_complex(g, max_dimension=max_dimension))


def is_spherical(ns: NerveSystem, t: Iterable[Any]) -> bool:
    """Whether W_T is finite; for right-angled systems, whether T is a clique."""
    return is_clique(ns.graph, t)


def spherical_subsets(ns: NerveSystem) -> list[Simplex]:
    """Every nonempty clique, by increasing size, then by vertex position."""
    return list(ns.complex.all_simplices())


def _require_generators(ns: NerveSystem) -> None:
    if not ns.generators:
        msg = "A Coxeter system needs at least one generator"
        raise HypothesisError(msg)


def is_finite_group(ns: NerveSystem) -> bool:
    _require_generators(ns)
    return ns.graph.size == ns.graph.order * (ns.graph.order - 1) // 2


def is_irreducible(ns: NerveSystem) -> bool:
    """No nontrivial splitting W = W_A x W_B, i.e. the complement graph is connected."""
    _require_generators(ns)
    if ns.graph.order == 1:
        return True
    return bool(nx.is_connected(to_networkx(complement(ns.graph))))


def is_join_splittable_bruteforce(g: Graph) -> bool:
    """Search every bipartition for one whose sides are completely joined."""
    n = g.order
    if n < 2:
        return False
    if n > JOIN_SPLIT_LIMIT:
        msg = f"Brute-force join search is limited to {JOIN_SPLIT_LIMIT} vertices, got {n}"
        raise InvalidParameterError(msg)
    adjacency = g.adjacency
    # Vertex 0 always sits on side A; mask selects the rest of A.
    for mask in range(2 ** (n - 1) - 1):
        side_a = [0] + [i for i in range(1, n) if mask >> (i - 1) & 1]
        side_b = [i for i in range(1, n) if not mask >> (i - 1) & 1]
        if all(b in adjacency[a] for a in side_a for b in side_b):
            return True
    return False


def join_decomposition(ns: NerveSystem) -> JoinDecomposition:
    """Peel off the universal vertices as the spherical factor T1."""
    t1 = universal_vertices(ns.graph)
    return JoinDecomposition(
        remainder=tuple(v for v in ns.generators if v not in t1),
        spherical_factor=t1,
    )


def is_virtual_pd(ns: NerveSystem) -> PDVerdict:
    """Davis's criterion: W = W_T0 x W_T1 with T1 spherical and L_T0 a
    generalized homology (n-1)-sphere.

    A complete graph leaves T0 empty; its nerve is then the (-1)-sphere and
    the verdict is dimension 0, marked degenerate.
    """
    decomposition = join_decomposition(ns)
    remainder = full_subcomplex(ns.complex, decomposition.remainder)
    if remainder.is_empty:
        evidence = is_generalized_homology_sphere(remainder, -1)
        return PDVerdict(
            is_vpd=True,
            dimension=0,
            decomposition=decomposition,
            evidence=evidence,
            degenerate=True,
        )
    evidence = is_generalized_homology_sphere(remainder, detect_dimension(remainder))
    logger.debug(
        "Davis peeling: |T1| = %d, L_T0 of dimension %d, sphere: %s",
        len(decomposition.spherical_factor),
        evidence.dimension,
        evidence.is_sphere,
    )
    return PDVerdict(
        is_vpd=evidence.is_sphere,
        dimension=evidence.dimension + 1 if evidence.is_sphere else None,
        decomposition=decomposition,
        evidence=evidence,
    )


def valid_davis_factors(ns: NerveSystem) -> list[Simplex]:
    """Every spherical T1 (empty included) for which W_T0 x W_T1 is a product
    with L_T0 a generalized homology sphere, found by exhaustive search.
    """
    found = []
    for t1 in [(), *spherical_subsets(ns)]:
        t0 = [v for v in ns.generators if v not in t1]
        if not all(ns.graph.has_edge(u, v) for u in t0 for v in t1):
            continue
        remainder = full_subcomplex(ns.complex, t0)
        n = -1 if remainder.is_empty else detect_dimension(remainder)
        if is_generalized_homology_sphere(remainder, n).is_sphere:
            found.append(t1)
    return found


def _complement_cohomology(ns: NerveSystem) -> Iterator[tuple[Simplex, GradedGroups]]:
    for t in spherical_subsets(ns):
        rest = [v for v in ns.generators if v not in t]
        yield t, reduced_cohomology(full_subcomplex(ns.complex, rest))


def condition3_vanishing(ns: NerveSystem) -> Condition3Result:
    """Whether L_(S-T) has trivial reduced cohomology for every nonempty spherical T."""
    checked = 0
    for t, cohomology in _complement_cohomology(ns):
        checked += 1
        failures = cohomology.nontrivial()
        if failures:
            degree = min(failures)
            return Condition3Result(
                holds=False,
                witness=Condition3Witness(subset=t, degree=degree, group=failures[degree]),
                subsets_checked=checked,
            )
    return Condition3Result(holds=True, subsets_checked=checked)


def _require_irreducible(ns: NerveSystem) -> None:
    if not is_irreducible(ns):
        msg = "The Coxeter system is reducible; the graph is a nontrivial join"
        raise HypothesisError(msg)


def coxeter_cohomology_if_fg(ns: NerveSystem, i: int) -> AbelianGroup | NotFinitelyGenerated:
    """H^i(W; ZW), through the nerve.

    It is finitely generated exactly when every H~^(i-1)(L_(S-T)) vanishes,
    and then equals H~^(i-1)(L).
    """
    if i < 0:
        msg = f"Cohomological degree must be nonnegative, got {i}"
        raise InvalidParameterError(msg)
    _require_irreducible(ns)
    for t, cohomology in _complement_cohomology(ns):
        if not cohomology.degree(i - 1).is_trivial:
            return NotFinitelyGenerated(degree=i, subset=t)
    return reduced_cohomology(ns.complex).degree(i - 1)


def vpd_dimension_from_cohomology(ns: NerveSystem) -> int | None:
    """Smallest i with H^i(W; ZW) nonzero, provided every degree is finitely generated."""
    _require_irreducible(ns)
    complements = [cohomology for _, cohomology in _complement_cohomology(ns)]
    if any(not c.is_trivial for c in complements):
        return None
    nerve = reduced_cohomology(ns.complex)
    for i in range(ns.complex.dimension + 2):
        if not nerve.degree(i - 1).is_trivial:
            return i
    return None


def lemma_key_crosscheck(ns: NerveSystem) -> LemmaKeyReport:
    """Evaluate the three equivalent conditions independently and compare them.

    For an irreducible infinite system: W is a virtual Poincare duality group,
    the nerve is a generalized homology sphere, and every L_(S-T) is acyclic.
    """
    _require_irreducible(ns)
    if is_finite_group(ns):
        msg = "The Coxeter group is finite; the graph is complete"
        raise HypothesisError(msg)

    pd = is_virtual_pd(ns)
    sphere = is_generalized_homology_sphere(ns.complex, detect_dimension(ns.complex))
    vanishing = condition3_vanishing(ns)
    cohomological = vpd_dimension_from_cohomology(ns)

    consistent = pd.is_vpd == sphere.is_sphere == vanishing.holds
    if consistent and pd.is_vpd:
        consistent = pd.dimension == cohomological
    if not consistent:
        logger.error(
            "Equivalent conditions disagree on %s: vPD %s (dim %s), sphere %s, "
            "vanishing %s (dim %s)",
            list(ns.generators),
            pd.is_vpd,
            pd.dimension,
            sphere.is_sphere,
            vanishing.holds,
            cohomological,
        )
    return LemmaKeyReport(
        virtual_pd=pd.is_vpd,
        generalized_sphere=sphere.is_sphere,
        vanishing=vanishing.holds,
        vpd_dimension=pd.dimension,
        cohomological_dimension=cohomological,
        consistent=consistent,
    )
