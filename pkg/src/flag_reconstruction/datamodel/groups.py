from collections.abc import Iterable

from pydantic import BaseModel, ConfigDict, Field, field_validator


class AbelianGroup(BaseModel):
    """A finitely generated abelian group Z^rank + Z/t1 + ... + Z/tk."""

    model_config = ConfigDict(frozen=True)

    rank: int = Field(
        default=0,
        description="Rank of the free part",
        ge=0,
    )
    torsion: tuple[int, ...] = Field(
        default=(),
        description="Invariant factors, each at least 2 and dividing the next",
    )

    @field_validator("torsion")
    @classmethod
    def _divisibility_chain(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(t < 2 for t in value):
            msg = f"Invariant factors must be at least 2, got {list(value)}"
            raise ValueError(msg)
        if any(b % a for a, b in zip(value, value[1:])):
            msg = f"Invariant factors must divide each other in turn, got {list(value)}"
            raise ValueError(msg)
        return value

    @classmethod
    def trivial(cls) -> "AbelianGroup":
        return cls()

    @classmethod
    def free(cls, rank: int) -> "AbelianGroup":
        return cls(rank=rank)

    @classmethod
    def from_diagonal(cls, rank: int, diagonal: Iterable[int]) -> "AbelianGroup":
        """Free rank plus the Smith diagonal entries; unit entries are dropped."""
        return cls(rank=rank, torsion=tuple(abs(d) for d in diagonal if abs(d) > 1))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts)


class GradedGroups(BaseModel):
    """Groups indexed by degree; absent degrees are trivial."""

    model_config = ConfigDict(frozen=True)

    groups: dict[int, AbelianGroup] = Field(
        default_factory=dict,
        description="Group in each degree, from -1 up to the dimension of the complex",
    )

    @classmethod
    def sphere(cls, n: int) -> "GradedGroups":
        """Reduced homology of S^n; S^-1 is the empty complex."""
        return cls(groups={n: AbelianGroup.free(1)})

    def degree(self, k: int) -> AbelianGroup:
        return self.groups.get(k, AbelianGroup.trivial())

    def nontrivial(self) -> dict[int, AbelianGroup]:
        return {k: g for k, g in sorted(self.groups.items()) if not g.is_trivial}

    @property
    def is_trivial(self) -> bool:
        return not self.nontrivial()

    def matches(self, other: "GradedGroups") -> bool:
        """Isomorphic in every degree."""
        return self.nontrivial() == other.nontrivial()

    def shifted(self, offset: int) -> "GradedGroups":
        return GradedGroups(groups={k + offset: g for k, g in self.groups.items()})

    def rank_alternating_sum(self) -> int:
        return sum((-1) ** (k % 2) * g.rank for k, g in self.groups.items())

    def __str__(self) -> str:
        nontrivial = self.nontrivial()
        if not nontrivial:
            return "all trivial"
        return ", ".join(f"H{k}={g}" for k, g in nontrivial.items())
