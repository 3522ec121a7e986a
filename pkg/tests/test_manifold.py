import pytest

from flag_reconstruction.datamodel.complex import SimplicialComplex
from flag_reconstruction.datamodel.graph import Graph
from flag_reconstruction.datamodel.groups import GradedGroups
from flag_reconstruction.errors import (
    BoundaryExtractionError,
    EmptyComplexError,
    InvalidParameterError,
)
from flag_reconstruction.families import complete, cross_polytope, cycle, empty, path, torus_grid, wheel
from flag_reconstruction.flag_complex import clique_complex
from flag_reconstruction.graphs import build_graph, vertex_deleted
from flag_reconstruction.manifold import (
    boundary_of,
    detect_dimension,
    is_generalized_homology_sphere,
    is_homology_manifold,
    is_pure,
    maximal_simplices,
)
from tests.corpus import manifold_corpus


@pytest.mark.parametrize(
    ("g", "n"),
    [(cycle(n), 1) for n in range(4, 10)] + [(cross_polytope(k), k - 1) for k in (2, 3, 4)],
)
def test_spheres(g: Graph, n: int) -> None:
    L = clique_complex(g)
    assert detect_dimension(L) == n
    verdict = is_generalized_homology_sphere(L, n)
    assert verdict.is_sphere
    assert verdict.manifold is not None
    assert verdict.manifold.witnesses == []
    assert sum(verdict.manifold.verified.values()) == sum(L.f_vector())


def test_torus_is_a_manifold_but_not_a_sphere() -> None:
    L = clique_complex(torus_grid(4, 4))
    assert is_homology_manifold(L, 2).is_manifold
    verdict = is_generalized_homology_sphere(L, 2)
    assert not verdict.is_sphere
    assert verdict.homology.degree(1).rank == 2


def test_projective_plane_is_a_manifold_not_a_sphere(projective_plane: SimplicialComplex) -> None:
    assert is_homology_manifold(projective_plane, 2).is_manifold
    assert not is_generalized_homology_sphere(projective_plane, 2).is_sphere


def test_every_manifold_corpus_entry_passes() -> None:
    for name, g, n in manifold_corpus():
        assert is_homology_manifold(clique_complex(g), n).is_manifold, name


def test_simplex_is_not_a_manifold() -> None:
    verdict = is_homology_manifold(clique_complex(complete(4)), 3)
    assert not verdict.is_manifold
    assert verdict.witnesses[0].simplex == ("0",)
    assert len(verdict.witnesses) == 14
    assert verdict.verified == {3: 1}
    assert verdict.witnesses[0].expected.matches(GradedGroups.sphere(3))
    assert verdict.witnesses[0].local_homology.is_trivial


def test_path_fails_at_its_endpoints() -> None:
    verdict = is_homology_manifold(clique_complex(path(4)), 1)
    assert [w.simplex for w in verdict.witnesses] == [("0",), ("3",)]
    assert verdict.verified == {0: 2, 1: 3}


def test_cone_fails_on_the_rim() -> None:
    verdict = is_homology_manifold(clique_complex(wheel(4)), 2)
    simplices = [w.simplex for w in verdict.witnesses]
    assert simplices[:4] == [("0",), ("1",), ("2",), ("3",)]
    assert len(simplices) == 8
    assert all("hub" not in s for s in simplices)


def test_wrong_dimension_fails() -> None:
    L = clique_complex(cycle(5))
    assert not is_homology_manifold(L, 2).is_manifold
    assert not is_generalized_homology_sphere(L, 2).is_sphere


def test_disconnected_manifold() -> None:
    two_squares = build_graph(
        "abcdwxyz",
        [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("w", "x"), ("x", "y"), ("y", "z"), ("z", "w")],
    )
    L = clique_complex(two_squares)
    assert is_homology_manifold(L, 1).is_manifold
    assert not is_generalized_homology_sphere(L, 1).is_sphere


def test_empty_complex_conventions() -> None:
    nothing = clique_complex(empty(0))
    assert is_generalized_homology_sphere(nothing, -1).is_sphere
    with pytest.raises(EmptyComplexError):
        is_generalized_homology_sphere(nothing, 1)
    with pytest.raises(EmptyComplexError):
        is_homology_manifold(nothing, 0)
    with pytest.raises(EmptyComplexError):
        is_pure(nothing, 0)
    with pytest.raises(InvalidParameterError):
        is_homology_manifold(clique_complex(cycle(4)), -1)


def test_zero_sphere() -> None:
    two_points = clique_complex(empty(2))
    assert is_generalized_homology_sphere(two_points, 0).is_sphere
    assert not is_generalized_homology_sphere(clique_complex(empty(3)), 0).is_sphere


def test_purity() -> None:
    assert is_pure(clique_complex(wheel(4)), 2)
    lollipop = SimplicialComplex.from_simplices([("a", "b", "c"), ("c", "d")])
    assert not is_pure(lollipop, 2)
    assert maximal_simplices(lollipop) == [("c", "d"), ("a", "b", "c")]


def test_boundary_of_path_and_disk() -> None:
    assert boundary_of(clique_complex(path(4)), 1) == {"0", "3"}
    assert boundary_of(clique_complex(wheel(4)), 2) == {"0", "1", "2", "3"}
    assert boundary_of(clique_complex(cycle(5)), 1) == frozenset()


def test_boundary_of_punctured_torus() -> None:
    card = vertex_deleted(torus_grid(5, 5), "0,0")
    assert boundary_of(clique_complex(card), 2) == {"1,0", "0,1", "1,1", "4,0", "0,4", "4,4"}


def test_boundary_extraction_failures() -> None:
    lollipop = SimplicialComplex.from_simplices([("a", "b", "c"), ("c", "d")])
    with pytest.raises(BoundaryExtractionError):
        boundary_of(lollipop, 2)

    figure_eight = build_graph(
        ["c", "a1", "a2", "a3", "b1", "b2", "b3"],
        [
            ("c", "a1"), ("a1", "a2"), ("a2", "a3"), ("a3", "c"),
            ("c", "b1"), ("b1", "b2"), ("b2", "b3"), ("b3", "c"),
        ],
    )
    with pytest.raises(BoundaryExtractionError) as info:
        boundary_of(clique_complex(figure_eight), 1)
    assert info.value.vertex == "c"
