"""Decks, hypomorphisms, reconstructibility certificates and card recovery.

A graph is certified reconstructible when its flag complex is a homology
n-manifold with n >= 1, or when its right-angled Coxeter group is a virtual
Poincare duality group of dimension n >= 1. For the manifold case the
missing vertex of any single card is recovered intrinsically: its
neighbours are exactly the boundary of the card's flag complex.
"""

import logging
from collections import Counter, defaultdict
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor

from flag_reconstruction.canonical import canonical_form, is_isomorphic
from flag_reconstruction.coxeter import is_virtual_pd
from flag_reconstruction.datamodel.coxeter import NerveSystem
from flag_reconstruction.datamodel.graph import CanonicalForm, Graph, Vertex
from flag_reconstruction.datamodel.reconstruction import (
    Certificate,
    Deck,
    DeckCard,
    HomologyManifoldCertificate,
    HypomorphicGroup,
    NoCertificate,
    VirtualPDCertificate,
)
from flag_reconstruction.datamodel.topology import ManifoldVerdict
from flag_reconstruction.errors import (
    DeckMismatchError,
    HypothesisError,
    InvalidParameterError,
    LabelCollisionError,
)
from flag_reconstruction.flag_complex import clique_complex
from flag_reconstruction.graphs import build_graph, vertex_deleted
from flag_reconstruction.manifold import boundary_of, detect_dimension, is_homology_manifold

logger = logging.getLogger(__name__)

ENUMERATION_LIMIT = 7

DeckKey = tuple[tuple[int, bytes, int], ...]


def _card_matching(g: Graph) -> dict[Vertex, CanonicalForm]:
    return {v: canonical_form(vertex_deleted(g, v)) for v in g.vertices}


def deck(g: Graph) -> Deck:
    """The multiset of vertex-deleted subgraphs, up to isomorphism."""
    if not g.order:
        msg = "The empty graph has no deck"
        raise InvalidParameterError(msg)
    matching = _card_matching(g)
    counts = Counter(matching.values())
    cards = [
        DeckCard(form=form, multiplicity=counts[form])
        for form in sorted(counts, key=CanonicalForm.sort_key)
    ]
    return Deck(cards=cards, matching=matching)


def are_hypomorphic(g1: Graph, g2: Graph) -> dict[Vertex, Vertex] | None:
    """A bijection f with G1 - s isomorphic to G2 - f(s) for every s, if one exists.

    Vertices with equal cards are paired in vertex order.
    """
    if g1.order != g2.order:
        return None
    if not g1.order:
        return {}
    cards1, cards2 = _card_matching(g1), _card_matching(g2)
    if Counter(cards1.values()) != Counter(cards2.values()):
        return None

    by_card: dict[CanonicalForm, list[Vertex]] = defaultdict(list)
    for v in g2.vertices:
        by_card[cards2[v]].append(v)
    bijection = {}
    for v in g1.vertices:
        bijection[v] = by_card[cards1[v]].pop(0)
    return bijection


def certify_reconstructible(
    g: Graph,
    *,
    max_dimension: int | None = None,
    manifold: ManifoldVerdict | None = None,
) -> Certificate:
    """Search for a certificate; the homology-manifold path takes precedence.

    A `NoCertificate` result never claims that the graph is non-reconstructible.
    A `manifold` verdict already computed for the flag complex of `g` in its
    top dimension is reused.
    """
    if g.order < 3:
        msg = f"Reconstructibility is only meaningful from 3 vertices on, got {g.order}"
        raise HypothesisError(msg)

    L = clique_complex(g, max_dimension=max_dimension)
    n = detect_dimension(L)
    if n < 1:
        manifold = None
    elif manifold is None or manifold.dimension != n:
        manifold = is_homology_manifold(L, n)
    if manifold is not None and manifold.is_manifold:
        logger.debug("Certified as a homology %d-manifold", n)
        return HomologyManifoldCertificate(dimension=n, vertex_count=g.order, evidence=manifold)

    pd = is_virtual_pd(NerveSystem(graph=g, complex=L))
    if pd.is_vpd and pd.dimension is not None and pd.dimension >= 1:
        logger.debug("Certified as a virtual Poincare duality group of dimension %d", pd.dimension)
        return VirtualPDCertificate(
            dimension=pd.dimension, decomposition=pd.decomposition, evidence=pd
        )
    return NoCertificate(manifold=manifold, pd=pd)


def _fresh_label(card: Graph) -> Vertex:
    used = set(card.vertices)
    i = 0
    while str(i) in used:
        i += 1
    return str(i)


def reconstruct_from_card(card: Graph, n: int, *, label: str | None = None) -> Graph:
    """Add back the deleted vertex, joined to the boundary of the card's flag complex.

    The card must come from a graph whose flag complex is a homology
    n-manifold; otherwise boundary extraction fails.
    """
    if n < 1:
        msg = f"Manifold dimension must be at least 1, got {n}"
        raise InvalidParameterError(msg)
    new = _fresh_label(card) if label is None else label
    if card.has_vertex(new):
        raise LabelCollisionError([new])

    boundary = boundary_of(clique_complex(card), n)
    logger.debug("Recovered vertex %r with %d neighbours", new, len(boundary))
    return build_graph(
        [*card.vertices, new],
        [*card.edges, *((v, new) for v in card.sort_vertices(boundary))],
    )


def reconstruct_from_deck(cards: Deck | Iterable[CanonicalForm], n: int) -> Graph:
    """Rebuild from the first card, then check the result has exactly this deck."""
    given = cards if isinstance(cards, Deck) else _deck_from_forms(cards)
    if not given.cards:
        msg = "Cannot reconstruct from an empty deck"
        raise InvalidParameterError(msg)
    recovered = reconstruct_from_card(given.cards[0].form.to_graph(), n)
    if deck(recovered).key() != given.key():
        msg = "The graph recovered from the first card has a different deck"
        raise DeckMismatchError(msg)
    return recovered


def _deck_from_forms(forms: Iterable[CanonicalForm]) -> Deck:
    counts = Counter(forms)
    return Deck(
        cards=[
            DeckCard(form=form, multiplicity=counts[form])
            for form in sorted(counts, key=CanonicalForm.sort_key)
        ]
    )


def verify_hypomorphic_partner(g: Graph, partner: Graph) -> bool:
    """For a homology-manifold certified graph and a hypomorphic partner, check that
    the partner's flag complex is a homology manifold of the same dimension and
    that the two graphs are isomorphic.
    """
    certificate = certify_reconstructible(g)
    if not isinstance(certificate, HomologyManifoldCertificate):
        msg = "The graph carries no homology-manifold certificate"
        raise HypothesisError(msg)
    if are_hypomorphic(g, partner) is None:
        msg = "The graphs are not hypomorphic"
        raise HypothesisError(msg)

    partner_manifold = is_homology_manifold(clique_complex(partner), certificate.dimension)
    return partner_manifold.is_manifold and is_isomorphic(g, partner)


def enumerate_graphs(n: int) -> list[Graph]:
    """One graph per isomorphism class on n vertices, in canonical form.

    Classes on k vertices come from adding a vertex, with every possible
    neighbourhood, to each class on k - 1 vertices.
    """
    if not 1 <= n <= ENUMERATION_LIMIT:
        msg = f"Enumeration supports 1 to {ENUMERATION_LIMIT} vertices, got {n}"
        raise InvalidParameterError(msg)

    classes = [build_graph(["0"])]
    for k in range(2, n + 1):
        new = str(k - 1)
        found: dict[tuple[int, bytes], Graph] = {}
        for h in classes:
            for mask in range(2 ** (k - 1)):
                neighbours = [v for i, v in enumerate(h.vertices) if mask >> i & 1]
                grown = build_graph([*h.vertices, new], [*h.edges, *((v, new) for v in neighbours)])
                form = canonical_form(grown)
                found.setdefault(form.sort_key(), form.to_graph())
        classes = [found[key] for key in sorted(found)]
        logger.debug("%d isomorphism classes on %d vertices", len(classes), k)
    return classes


def _deck_key(g: Graph) -> DeckKey:
    return deck(g).key()


def deck_keys(graphs: Sequence[Graph], *, jobs: int = 1) -> list[DeckKey]:
    """Deck certificates for many graphs, in input order, optionally in worker processes."""
    if jobs < 1:
        msg = f"jobs must be positive, got {jobs}"
        raise InvalidParameterError(msg)
    if jobs == 1:
        return [_deck_key(g) for g in graphs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_deck_key, graphs, chunksize=16))


def brute_force_oracle(graphs: Sequence[Graph], *, jobs: int = 1) -> list[HypomorphicGroup]:
    """Every set of non-isomorphic input graphs that share a deck."""
    groups: dict[DeckKey, list[Graph]] = defaultdict(list)
    seen: dict[DeckKey, set[tuple[int, bytes]]] = defaultdict(set)
    for g, key in zip(graphs, deck_keys(graphs, jobs=jobs), strict=True):
        form = canonical_form(g).sort_key()
        if form not in seen[key]:
            seen[key].add(form)
            groups[key].append(g)

    hypomorphic = []
    for key in sorted(groups):
        members = groups[key]
        if len(members) >= 2:
            shared = deck(members[0])
            hypomorphic.append(HypomorphicGroup(deck=Deck(cards=shared.cards), graphs=members))
    logger.debug("%d graphs, %d hypomorphic groups", len(graphs), len(hypomorphic))
    return hypomorphic
