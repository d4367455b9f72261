"""
Validated run configuration for Turannical.

The scan config JSON is parsed into these models; validation failures name
the offending field path.
"""

from fractions import Fraction
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from turannical.config.constants import DEFAULT_BUDGET, SEED_BITS
from turannical.util.numeric import as_fraction

PropertyKind = Literal["exact", "eps", "exact-for-g", "eps-for-g"]
DecisionMode = Literal["solver", "filter"]


class PropertySpec(BaseModel):
    """Which (ε-)Turánnical property a scan decides."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    kind: PropertyKind = "exact"
    eps: Optional[float] = Field(default=None, ge=0)

    @model_validator(mode="after")
    def _eps_matches_kind(self) -> "PropertySpec":
        if self.kind in ("eps", "eps-for-g") and self.eps is None:
            raise ValueError(f"property kind '{self.kind}' needs an eps value")
        if self.kind in ("exact", "exact-for-g") and self.eps is not None:
            raise ValueError(f"property kind '{self.kind}' takes no eps value")
        return self

    @property
    def relative(self) -> bool:
        """True for the properties decided against a host graph G(n, q)."""
        return self.kind.endswith("-for-g")

    @property
    def eps_fraction(self) -> Fraction:
        """ε as an exact rational (0 for the exact properties)."""
        return as_fraction(self.eps) if self.eps is not None else Fraction(0)

    @property
    def label(self) -> str:
        """Compact label used in the curve CSV."""
        if self.eps is None:
            return self.kind
        return f"{self.kind}:{self.eps:.17g}"


def _check_probabilities(values: List[float], axis: str) -> List[float]:
    for value in values:
        if not 0.0 <= value <= 1.0:
            raise ValueError(f"{axis} grid value {value} is not a probability")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValueError(f"{axis} grid must be strictly increasing")
    return values


class GridSpec(BaseModel):
    """Probability grid of a threshold scan."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    p: List[float] = Field(min_length=1)
    q: Optional[List[float]] = None

    @field_validator("p")
    @classmethod
    def _p_grid(cls, values: List[float]) -> List[float]:
        return _check_probabilities(values, "p")

    @field_validator("q")
    @classmethod
    def _q_grid(cls, values: Optional[List[float]]) -> Optional[List[float]]:
        if values is None:
            return None
        if not values:
            raise ValueError("q grid must not be empty when given")
        return _check_probabilities(values, "q")


class ScanConfig(BaseModel):
    """Full configuration of a `turannical scan` run."""

    model_config = ConfigDict(extra="forbid", frozen=True, populate_by_name=True)

    r: int = Field(ge=3)
    n: Optional[int] = Field(default=None, ge=1)
    n_list: Optional[List[int]] = None
    target: PropertySpec = Field(alias="property")
    grid: GridSpec
    trials: int = Field(ge=1)
    seed: int = Field(ge=0, lt=2**SEED_BITS)
    budget: int = Field(default=DEFAULT_BUDGET, ge=1)
    mode: DecisionMode = "solver"

    @field_validator("n_list")
    @classmethod
    def _n_list(cls, values: Optional[List[int]]) -> Optional[List[int]]:
        if values is None:
            return None
        if not values or any(value < 1 for value in values):
            raise ValueError("n_list must hold positive vertex counts")
        return values

    @model_validator(mode="after")
    def _consistent(self) -> "ScanConfig":
        if (self.n is None) == (self.n_list is None):
            raise ValueError("give exactly one of 'n' and 'n_list'")
        if self.target.relative and self.grid.q is None:
            raise ValueError(f"property '{self.target.kind}' needs a q grid")
        if not self.target.relative and self.grid.q is not None:
            raise ValueError(f"property '{self.target.kind}' takes no q grid")
        if self.target.kind == "eps-for-g":
            if self.target.eps_fraction >= Fraction(1, self.r - 2):
                raise ValueError(
                    f"eps must be below 1/(r-2) = 1/{self.r - 2}; otherwise the premise "
                    "(1+eps)(r-2)/(r-1) e(G) > e(G) is never met and every hypergraph "
                    "is vacuously eps-Turannical for G"
                )
        return self

    @property
    def ns(self) -> List[int]:
        """Vertex counts to scan, in the configured order."""
        return [self.n] if self.n is not None else list(self.n_list)
