from pydantic import BaseModel, Field

from flag_reconstruction.datamodel.complex import Simplex
from flag_reconstruction.datamodel.groups import GradedGroups


class LocalHomologyWitness(BaseModel):
    simplex: Simplex = Field(
        description="The simplex whose local homology is wrong",
    )
    local_homology: GradedGroups = Field(
        description="Local homology found at the simplex",
    )
    expected: GradedGroups = Field(
        description="Local homology an interior point of an n-manifold has",
    )


class ManifoldVerdict(BaseModel):
    is_manifold: bool = Field(
        description="Whether every simplex has the local homology of R^n",
    )
    dimension: int = Field(
        description="The dimension n that was tested",
    )
    witnesses: list[LocalHomologyWitness] = Field(
        default_factory=list,
        description="Simplices that fail the local homology test, by increasing dimension",
    )
    verified: dict[int, int] = Field(
        default_factory=dict,
        description="Number of simplices checked and passing, per dimension",
    )


class GHSVerdict(BaseModel):
    is_sphere: bool = Field(
        description="Whether the complex is a generalized homology n-sphere",
    )
    dimension: int = Field(
        description="The dimension n that was tested",
    )
    manifold: ManifoldVerdict | None = Field(
        default=None,
        description="Manifold check behind the verdict; absent for the empty (-1)-sphere",
    )
    homology: GradedGroups = Field(
        description="Reduced homology of the complex",
    )
