from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from flag_reconstruction.datamodel.complex import SimplicialComplex
from flag_reconstruction.datamodel.graph import Graph, Vertex
from flag_reconstruction.datamodel.groups import AbelianGroup
from flag_reconstruction.datamodel.topology import GHSVerdict


class NerveSystem(BaseModel):
    """A right-angled Coxeter system, held through its nerve.

    The generators are the graph's vertices; two generators commute exactly
    when they are adjacent. Group elements are never materialized.
    """

    model_config = ConfigDict(frozen=True)

    graph: Graph = Field(
        description="1-skeleton of the nerve",
    )
    complex: SimplicialComplex = Field(
        description="The nerve itself, the flag complex of the graph",
    )

    @model_validator(mode="after")
    def _complex_matches_graph(self) -> "NerveSystem":
        if self.complex.vertices != self.graph.vertices:
            msg = "Nerve complex and graph have different vertex lists"
            raise ValueError(msg)
        edges = {frozenset(e) for e in self.complex.level(1)}
        if edges != {frozenset(e) for e in self.graph.edges}:
            msg = "Nerve complex 1-skeleton differs from the graph"
            raise ValueError(msg)
        return self

    @property
    def generators(self) -> tuple[Vertex, ...]:
        return self.graph.vertices


class JoinDecomposition(BaseModel):
    remainder: tuple[Vertex, ...] = Field(
        description="T0, the generators outside the spherical factor",
    )
    spherical_factor: tuple[Vertex, ...] = Field(
        description="T1, the universal vertices; they span a simplex",
    )


class PDVerdict(BaseModel):
    basis: Literal["Davis product decomposition"] = "Davis product decomposition"
    is_vpd: bool = Field(
        description="Whether W is a virtual Poincare duality group",
    )
    dimension: int | None = Field(
        default=None,
        description="Virtual cohomological dimension n, when is_vpd holds",
    )
    decomposition: JoinDecomposition = Field(
        description="The peeled decomposition W = W_T0 x W_T1",
    )
    evidence: GHSVerdict | None = Field(
        default=None,
        description="Generalized homology sphere check on the nerve of W_T0",
    )
    degenerate: bool = Field(
        default=False,
        description="Set for finite W, reported as dimension 0 with T0 empty",
    )


class Condition3Witness(BaseModel):
    subset: tuple[Vertex, ...] = Field(
        description="The nonempty spherical subset T",
    )
    degree: int = Field(
        description="Degree i with nonvanishing reduced cohomology of L_(S-T)",
    )
    group: AbelianGroup = Field(
        description="The nonvanishing group",
    )


class Condition3Result(BaseModel):
    basis: Literal["spherical complement vanishing"] = "spherical complement vanishing"
    holds: bool = Field(
        description="Whether every L_(S-T) is cohomologically trivial",
    )
    witness: Condition3Witness | None = Field(
        default=None,
        description="First failure found, in spherical-subset order",
    )
    subsets_checked: int = Field(
        description="Number of spherical subsets evaluated",
        ge=0,
    )


class NotFinitelyGenerated(BaseModel):
    degree: int = Field(
        description="The degree i of H^i(W; ZW)",
    )
    subset: tuple[Vertex, ...] = Field(
        description="A spherical subset T with nonvanishing H^(i-1)(L_(S-T))",
    )


class LemmaKeyReport(BaseModel):
    basis: Literal["nerve equivalence lemma"] = "nerve equivalence lemma"
    virtual_pd: bool = Field(
        description="Statement (1): W is a virtual Poincare duality group",
    )
    generalized_sphere: bool = Field(
        description="Statement (2): the nerve is a generalized homology sphere",
    )
    vanishing: bool = Field(
        description="Statement (3): every L_(S-T) has trivial reduced cohomology",
    )
    vpd_dimension: int | None = Field(
        default=None,
        description="Dimension from the Davis decomposition",
    )
    cohomological_dimension: int | None = Field(
        default=None,
        description="Smallest i with H^i(W; ZW) nonzero, computed on the nerve",
    )
    consistent: bool = Field(
        description="All statements agree, and so do both dimensions",
    )
