from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from flag_reconstruction.datamodel.coxeter import (
    Condition3Result,
    JoinDecomposition,
    LemmaKeyReport,
    PDVerdict,
)
from flag_reconstruction.datamodel.reconstruction import Certificate
from flag_reconstruction.datamodel.topology import GHSVerdict, ManifoldVerdict

InputFormatOptions = Literal["g6", "edges"]
REPORT_SCHEMA_VERSION = "1"


class AnalysisSettings(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_dimension: int | None = Field(
        default=None,
        description="Largest simplex dimension the flag complex may reach",
        ge=0,
    )
    include_timings: bool = Field(
        default=False,
        description="Record wall-clock seconds per stage; makes reports non-reproducible",
    )


class InputSummary(BaseModel):
    format: InputFormatOptions
    vertex_count: int = Field(ge=0)
    edge_count: int = Field(ge=0)
    graph6: str | None = Field(
        default=None,
        description="The input graph re-encoded as graph6, when it has at most 62 vertices",
    )


class ComplexSummary(BaseModel):
    f_vector: list[int]
    dimension: int
    euler_characteristic: int


class HomologyRow(BaseModel):
    degree: int
    rank: int = Field(ge=0)
    torsion: list[int] = Field(
        description="Invariant factors of the torsion subgroup",
    )


class CoxeterSection(BaseModel):
    finite: bool = Field(
        description="W is finite, i.e. the graph is complete",
    )
    irreducible: bool = Field(
        description="The complement of the graph is connected",
    )
    decomposition: JoinDecomposition
    virtual_pd: PDVerdict
    condition3: Condition3Result
    lemma_key: LemmaKeyReport | None = Field(
        default=None,
        description="Three-way cross-check; only for irreducible infinite systems",
    )


class AnalysisReport(BaseModel):
    schema_version: Literal["1"] = REPORT_SCHEMA_VERSION
    input: InputSummary
    complex: ComplexSummary
    homology: list[HomologyRow]
    manifold: ManifoldVerdict | None = Field(
        default=None,
        description="Homology manifold test in the complex's own dimension, when it is at least 1",
    )
    sphere: GHSVerdict | None = Field(
        default=None,
        description="Generalized homology sphere test, when the complex is nonempty",
    )
    coxeter: CoxeterSection
    certificate: Certificate
    timings: dict[str, float] | None = Field(
        default=None,
        description="Seconds spent per stage, only when requested",
    )
