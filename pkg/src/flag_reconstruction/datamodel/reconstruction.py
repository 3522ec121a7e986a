from typing import Annotated, Literal

from pydantic import BaseModel, Field, model_validator

from flag_reconstruction.datamodel.coxeter import JoinDecomposition, PDVerdict
from flag_reconstruction.datamodel.graph import CanonicalForm, Graph, Vertex
from flag_reconstruction.datamodel.topology import ManifoldVerdict

NO_CERTIFICATE_CAVEAT = (
    "No certificate: this does not assert that the graph is non-reconstructible. "
    "The homology-manifold and virtual Poincare duality criteria only ever prove "
    "reconstructibility."
)


class DeckCard(BaseModel):
    form: CanonicalForm = Field(
        description="Canonical form of the vertex-deleted subgraph",
    )
    multiplicity: int = Field(
        description="How many vertices produce this card",
        gt=0,
    )


class Deck(BaseModel):
    cards: list[DeckCard] = Field(
        description="Card multiset, sorted by canonical form",
    )
    matching: dict[Vertex, CanonicalForm] | None = Field(
        default=None,
        description="The card obtained by deleting each vertex",
    )

    @model_validator(mode="after")
    def _matching_agrees(self) -> "Deck":
        if self.matching is not None and len(self.matching) != self.size:
            msg = "Deck multiplicities must add up to the number of matched vertices"
            raise ValueError(msg)
        return self

    @property
    def size(self) -> int:
        return sum(card.multiplicity for card in self.cards)

    def key(self) -> tuple[tuple[int, bytes, int], ...]:
        """Hashable multiset certificate; equal keys mean equal decks."""
        return tuple(
            (*card.form.sort_key(), card.multiplicity) for card in self.cards
        )


class HomologyManifoldCertificate(BaseModel):
    path: Literal["homology_manifold"] = "homology_manifold"
    dimension: int = Field(
        description="Dimension n >= 1 of the homology manifold",
        ge=1,
    )
    vertex_count: int = Field(
        description="Number of vertices of the graph",
        ge=3,
    )
    evidence: ManifoldVerdict = Field(
        description="The passing manifold verdict on the flag complex",
    )


class VirtualPDCertificate(BaseModel):
    path: Literal["virtual_poincare_duality"] = "virtual_poincare_duality"
    dimension: int = Field(
        description="Virtual Poincare duality dimension n >= 1",
        ge=1,
    )
    decomposition: JoinDecomposition = Field(
        description="The Davis decomposition W = W_T0 x W_T1",
    )
    evidence: PDVerdict = Field(
        description="The passing virtual Poincare duality verdict",
    )


class NoCertificate(BaseModel):
    path: Literal["none"] = "none"
    caveat: str = Field(
        default=NO_CERTIFICATE_CAVEAT,
        description="Fixed reminder that no claim of non-reconstructibility is made",
    )
    manifold: ManifoldVerdict | None = Field(
        default=None,
        description="The failed manifold verdict, when one was computed",
    )
    pd: PDVerdict | None = Field(
        default=None,
        description="The failed virtual Poincare duality verdict",
    )


Certificate = Annotated[
    HomologyManifoldCertificate | VirtualPDCertificate | NoCertificate,
    Field(discriminator="path"),
]


class HypomorphicGroup(BaseModel):
    deck: Deck = Field(
        description="The deck shared by every graph of the group",
    )
    graphs: list[Graph] = Field(
        description="Pairwise non-isomorphic graphs with that deck",
        min_length=2,
    )
