"""Assemble the full analysis of one graph into an `AnalysisReport`."""

import logging
import time
from collections.abc import Iterator
from contextlib import contextmanager

from flag_reconstruction.coxeter import (
    condition3_vanishing,
    is_finite_group,
    is_irreducible,
    is_virtual_pd,
    join_decomposition,
    lemma_key_crosscheck,
)
from flag_reconstruction.datamodel.coxeter import NerveSystem
from flag_reconstruction.datamodel.graph import Graph
from flag_reconstruction.datamodel.groups import GradedGroups
from flag_reconstruction.datamodel.report import (
    AnalysisReport,
    AnalysisSettings,
    ComplexSummary,
    CoxeterSection,
    HomologyRow,
    InputFormatOptions,
    InputSummary,
)
from flag_reconstruction.errors import HypothesisError
from flag_reconstruction.flag_complex import clique_complex, euler_characteristic
from flag_reconstruction.formats import GRAPH6_MAX_ORDER, emit_graph6
from flag_reconstruction.homology import reduced_homology
from flag_reconstruction.manifold import is_generalized_homology_sphere, is_homology_manifold
from flag_reconstruction.reconstruction import certify_reconstructible

logger = logging.getLogger(__name__)


class _StageTimer:
    def __init__(self) -> None:
        self.seconds: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.seconds[name] = time.perf_counter() - start
            logger.debug("Stage %s took %.3fs", name, self.seconds[name])


def homology_rows(groups: GradedGroups) -> list[HomologyRow]:
    return [
        HomologyRow(degree=k, rank=g.rank, torsion=list(g.torsion))
        for k, g in sorted(groups.groups.items())
    ]


def analyze_graph(
    g: Graph,
    settings: AnalysisSettings | None = None,
    input_format: InputFormatOptions = "g6",
) -> AnalysisReport:
    """Run every check on `g`.

    Graphs with fewer than 3 vertices are rejected, as no certificate can
    apply to them. Without timings the report is a pure function of the input.
    """
    settings = settings or AnalysisSettings()
    if g.order < 3:
        msg = f"Analysis needs at least 3 vertices, got {g.order}"
        raise HypothesisError(msg)
    timer = _StageTimer()

    with timer.stage("flag_complex"):
        L = clique_complex(g, max_dimension=settings.max_dimension)
    with timer.stage("homology"):
        homology = reduced_homology(L)
    with timer.stage("manifold"):
        n = L.dimension
        manifold = is_homology_manifold(L, n) if n >= 1 else None
        sphere = is_generalized_homology_sphere(L, n, manifold=manifold)
    with timer.stage("coxeter"):
        ns = NerveSystem(graph=g, complex=L)
        finite = is_finite_group(ns)
        irreducible = is_irreducible(ns)
        coxeter = CoxeterSection(
            finite=finite,
            irreducible=irreducible,
            decomposition=join_decomposition(ns),
            virtual_pd=is_virtual_pd(ns),
            condition3=condition3_vanishing(ns),
            lemma_key=lemma_key_crosscheck(ns) if irreducible and not finite else None,
        )
    with timer.stage("certificate"):
        certificate = certify_reconstructible(
            g, max_dimension=settings.max_dimension, manifold=manifold
        )

    return AnalysisReport(
        input=InputSummary(
            format=input_format,
            vertex_count=g.order,
            edge_count=g.size,
            graph6=emit_graph6(g) if g.order <= GRAPH6_MAX_ORDER else None,
        ),
        complex=ComplexSummary(
            f_vector=L.f_vector(),
            dimension=n,
            euler_characteristic=euler_characteristic(L),
        ),
        homology=homology_rows(homology),
        manifold=manifold,
        sphere=sphere,
        coxeter=coxeter,
        certificate=certificate,
        timings=timer.seconds if settings.include_timings else None,
    )
