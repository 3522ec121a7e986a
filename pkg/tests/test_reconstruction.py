import random

import pytest
from pydantic import TypeAdapter

from flag_reconstruction.canonical import canonical_form, is_isomorphic
from flag_reconstruction.datamodel.graph import Graph
from flag_reconstruction.datamodel.reconstruction import (
    NO_CERTIFICATE_CAVEAT,
    Certificate,
    Deck,
    DeckCard,
    HomologyManifoldCertificate,
    NoCertificate,
    VirtualPDCertificate,
)
from flag_reconstruction.errors import (
    BoundaryExtractionError,
    DeckMismatchError,
    HypothesisError,
    InvalidParameterError,
    LabelCollisionError,
)
from flag_reconstruction.families import (
    complete,
    cross_polytope,
    cycle,
    empty,
    path,
    wheel,
)
from flag_reconstruction.graphs import disjoint_union, relabel, vertex_deleted
from flag_reconstruction.reconstruction import (
    are_hypomorphic,
    brute_force_oracle,
    certify_reconstructible,
    deck,
    deck_keys,
    enumerate_graphs,
    reconstruct_from_card,
    reconstruct_from_deck,
    verify_hypomorphic_partner,
)
from tests.corpus import labelled_graphs, manifold_corpus, random_graph, shuffled


def test_deck_of_square() -> None:
    d = deck(cycle(4))
    assert d.cards == [DeckCard(form=canonical_form(path(3)), multiplicity=4)]
    assert d.size == 4
    assert d.matching is not None
    assert set(d.matching) == {"0", "1", "2", "3"}


def test_deck_of_path() -> None:
    cards = {card.form: card.multiplicity for card in deck(path(3)).cards}
    assert cards == {canonical_form(path(2)): 2, canonical_form(empty(2)): 1}


def test_deck_of_octahedron() -> None:
    d = deck(cross_polytope(3))
    assert d.cards == [DeckCard(form=canonical_form(wheel(4)), multiplicity=6)]


def test_deck_needs_a_vertex() -> None:
    with pytest.raises(InvalidParameterError):
        deck(empty(0))


def test_deck_is_invariant_under_relabeling(rng: random.Random) -> None:
    for g in [cycle(7), path(5), wheel(5), cross_polytope(3)]:
        assert deck(shuffled(rng, g)).key() == deck(g).key()


def test_classical_two_vertex_pair() -> None:
    f = are_hypomorphic(complete(2), empty(2))
    assert f == {"0": "0", "1": "1"}
    assert not is_isomorphic(complete(2), empty(2))


def test_hypomorphic_bijection_matches_cards(rng: random.Random) -> None:
    g1 = cycle(5)
    g2 = shuffled(rng, g1)
    f = are_hypomorphic(g1, g2)
    assert f is not None
    assert sorted(f.values()) == sorted(g2.vertices)
    for s in g1.vertices:
        assert is_isomorphic(vertex_deleted(g1, s), vertex_deleted(g2, f[s]))


def test_non_hypomorphic_graphs() -> None:
    assert are_hypomorphic(cycle(4), path(4)) is None
    assert are_hypomorphic(path(4), cycle(4)) is None
    assert are_hypomorphic(cycle(4), cycle(5)) is None


def test_hypomorphism_is_symmetric(rng: random.Random) -> None:
    pairs = [(complete(2), empty(2)), (cycle(4), path(4)), (cycle(5), cycle(5))]
    pairs += [(g, shuffled(rng, g)) for g in (random_graph(rng, 6) for _ in range(10))]
    pairs += [(random_graph(rng, 5), random_graph(rng, 5)) for _ in range(20)]
    pairs += [(g, h) for g in labelled_graphs(3) for h in labelled_graphs(3)]
    for g, h in pairs:
        forward, backward = are_hypomorphic(g, h), are_hypomorphic(h, g)
        assert (forward is None) == (backward is None)
        if forward is not None and backward is not None:
            for s, t in forward.items():
                assert is_isomorphic(vertex_deleted(g, s), vertex_deleted(h, t))
            for t, s in backward.items():
                assert is_isomorphic(vertex_deleted(h, t), vertex_deleted(g, s))


def test_certificates() -> None:
    octahedron = certify_reconstructible(cross_polytope(3))
    assert isinstance(octahedron, HomologyManifoldCertificate)
    assert octahedron.dimension == 2
    assert octahedron.vertex_count == 6

    cone = certify_reconstructible(wheel(5))
    assert isinstance(cone, VirtualPDCertificate)
    assert cone.dimension == 2
    assert cone.decomposition.spherical_factor == ("hub",)

    tree = certify_reconstructible(path(4))
    assert isinstance(tree, NoCertificate)
    assert tree.caveat == NO_CERTIFICATE_CAVEAT
    assert tree.manifold is not None
    assert not tree.manifold.is_manifold
    assert tree.pd is not None
    assert not tree.pd.is_vpd


@pytest.mark.parametrize("k", [2, 3])
def test_manifold_certificate_takes_precedence(k: int) -> None:
    certificate = certify_reconstructible(cross_polytope(k))
    assert isinstance(certificate, HomologyManifoldCertificate)
    assert certificate.dimension == k - 1


def test_complete_graphs_get_no_certificate() -> None:
    certificate = certify_reconstructible(complete(4))
    assert isinstance(certificate, NoCertificate)
    assert certificate.pd is not None
    assert certificate.pd.degenerate


def test_disconnected_manifolds_are_certified() -> None:
    two_squares = disjoint_union(cycle(4), relabel(cycle(4), {str(i): f"x{i}" for i in range(4)}))
    certificate = certify_reconstructible(two_squares)
    assert isinstance(certificate, HomologyManifoldCertificate)
    assert certificate.dimension == 1


def test_certify_needs_three_vertices() -> None:
    with pytest.raises(HypothesisError):
        certify_reconstructible(complete(2))


def test_certificate_union_round_trips_through_json() -> None:
    adapter: TypeAdapter[Certificate] = TypeAdapter(Certificate)
    for g in [cross_polytope(3), wheel(5), path(4)]:
        certificate = certify_reconstructible(g)
        restored = adapter.validate_json(adapter.dump_json(certificate))
        assert type(restored) is type(certificate)
        assert restored == certificate


def test_reconstruct_from_single_cards() -> None:
    assert is_isomorphic(reconstruct_from_card(wheel(4), 2), cross_polytope(3))
    assert is_isomorphic(reconstruct_from_card(path(4), 1), cycle(5))
    recovered = reconstruct_from_card(path(4), 1)
    assert recovered.vertices == ("0", "1", "2", "3", "4")
    assert recovered.neighbors("4") == {"0", "3"}


@pytest.mark.parametrize(
    ("name", "g", "n"),
    manifold_corpus(),
    ids=[name for name, _, _ in manifold_corpus()],
)
def test_every_card_reconstructs(name: str, g: Graph, n: int) -> None:
    certificate = certify_reconstructible(g)
    assert isinstance(certificate, HomologyManifoldCertificate)
    assert certificate.dimension == n
    for v in g.vertices:
        recovered = reconstruct_from_card(vertex_deleted(g, v), n, label=v)
        assert recovered.same_as(g), v


def test_reconstruct_from_card_errors() -> None:
    with pytest.raises(InvalidParameterError):
        reconstruct_from_card(path(4), 0)
    with pytest.raises(LabelCollisionError):
        reconstruct_from_card(path(4), 1, label="2")
    with pytest.raises(BoundaryExtractionError):
        reconstruct_from_card(complete(4), 1)


def test_reconstruct_from_deck() -> None:
    octahedron_deck = deck(cross_polytope(3))
    assert is_isomorphic(reconstruct_from_deck(octahedron_deck, 2), cross_polytope(3))
    forms = [canonical_form(vertex_deleted(cycle(6), v)) for v in cycle(6).vertices]
    assert is_isomorphic(reconstruct_from_deck(forms, 1), cycle(6))

    short = Deck(cards=[DeckCard(form=canonical_form(wheel(4)), multiplicity=5)])
    with pytest.raises(DeckMismatchError):
        reconstruct_from_deck(short, 2)
    with pytest.raises(InvalidParameterError):
        reconstruct_from_deck([], 2)


def test_verify_hypomorphic_partner(rng: random.Random) -> None:
    assert verify_hypomorphic_partner(cycle(6), shuffled(rng, cycle(6)))
    assert verify_hypomorphic_partner(cross_polytope(3), shuffled(rng, cross_polytope(3)))
    two_triangles = disjoint_union(cycle(3), relabel(cycle(3), {"0": "a", "1": "b", "2": "c"}))
    with pytest.raises(HypothesisError):
        verify_hypomorphic_partner(cycle(6), two_triangles)
    with pytest.raises(HypothesisError):
        verify_hypomorphic_partner(path(4), path(4))


@pytest.mark.parametrize(("n", "count"), [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_enumeration_counts(n: int, count: int) -> None:
    graphs = enumerate_graphs(n)
    assert len(graphs) == count
    assert len({canonical_form(g) for g in graphs}) == count
    assert all(g.order == n for g in graphs)


def test_enumeration_bounds() -> None:
    with pytest.raises(InvalidParameterError):
        enumerate_graphs(0)
    with pytest.raises(InvalidParameterError):
        enumerate_graphs(8)


def test_oracle_finds_the_two_vertex_pair() -> None:
    groups = brute_force_oracle(enumerate_graphs(2))
    assert len(groups) == 1
    assert len(groups[0].graphs) == 2
    assert groups[0].deck.size == 2


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_oracle_finds_nothing_from_three_vertices(n: int) -> None:
    assert brute_force_oracle(enumerate_graphs(n)) == []


def test_oracle_ignores_duplicate_classes(rng: random.Random) -> None:
    assert brute_force_oracle([cycle(5), shuffled(rng, cycle(5))]) == []


def test_parallel_deck_keys_match_serial() -> None:
    graphs = enumerate_graphs(5)
    assert deck_keys(graphs, jobs=2) == deck_keys(graphs)
    with pytest.raises(InvalidParameterError):
        deck_keys(graphs, jobs=0)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_certificates_are_sound_against_the_oracle(n: int) -> None:
    graphs = enumerate_graphs(n)
    keys = deck_keys(graphs)
    for g, key in zip(graphs, keys, strict=True):
        if isinstance(certify_reconstructible(g), NoCertificate):
            continue
        assert keys.count(key) == 1, g


@pytest.mark.slow
def test_exhaustive_seven_vertex_oracle() -> None:
    graphs = enumerate_graphs(7)
    assert len(graphs) == 1044
    assert brute_force_oracle(graphs) == []
    keys = deck_keys(graphs)
    for g, key in zip(graphs, keys, strict=True):
        if not isinstance(certify_reconstructible(g), NoCertificate):
            assert keys.count(key) == 1, g
