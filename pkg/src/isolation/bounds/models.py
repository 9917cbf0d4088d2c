from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_serializer

# Absolute slack for comparisons against real-valued (logarithmic) bounds.
REAL_SLACK = 1e-9

Side = Literal["lower", "upper"]


class BoundEntry(BaseModel):
    """One closed-form bound evaluated on one graph."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str = Field(..., description="Stable bound id, e.g. U1 or L3")
    side: Side = Field(..., description="Whether the value bounds the target from below or above")
    target: str = Field("iota_k", description="Quantity bounded: iota_k of the graph, or of a derived graph")
    value: Fraction | float | None = Field(None, description="Exact rational when the formula is rational")
    applicable: bool = Field(..., description="Whether the hypotheses of the bound hold")
    reason: str = Field("", description="Hypothesis that failed, or the formula used")

    @field_serializer("value")
    def _value_as_text(self, value: Fraction | float | None) -> str | None:
        return None if value is None else format_value(value)

    def holds_for(self, exact: int) -> bool:
        """The exact value respects this entry; inapplicable entries always hold."""
        if not self.applicable or self.value is None:
            return True
        if isinstance(self.value, Fraction):
            return self.value <= exact if self.side == "lower" else exact <= self.value
        if self.side == "lower":
            return self.value <= exact + REAL_SLACK
        return exact <= self.value + REAL_SLACK

    def is_tight(self, exact: int) -> bool:
        if not self.applicable or self.value is None:
            return False
        if isinstance(self.value, Fraction):
            return self.value == exact
        return abs(self.value - exact) <= REAL_SLACK


class BoundReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    graph_id: str = Field(..., description="graph6 string, or n=..,m=.. above 62 vertices")
    k: int = Field(..., ge=0, description="Isolation order: the forbidden star is K_1,k+1")
    entries: tuple[BoundEntry, ...] = Field(default=(), description="Every bound, applicable or not")

    def applicable(self, target: str = "iota_k") -> list[BoundEntry]:
        return [e for e in self.entries if e.applicable and e.target == target]

    def violations(self, exact: int, target: str = "iota_k") -> list[BoundEntry]:
        return [e for e in self.applicable(target) if not e.holds_for(exact)]

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def format_value(value: Fraction | float | None) -> str:
    if value is None:
        return "-"
    if isinstance(value, Fraction):
        return str(value)
    return f"{value:.9f}"
