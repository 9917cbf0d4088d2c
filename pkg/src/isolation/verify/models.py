from pydantic import BaseModel, ConfigDict, Field
from ulid import ULID

from src.utils.ulid_tools import new_run_id

TSV_HEADER = "check\tgraphs_tested\tviolations\tequality_count\texample_g6"


class Outcome(BaseModel):
    """Result of one check on one graph."""

    model_config = ConfigDict(frozen=True)

    holds: bool = Field(..., description="The checked statement is true on this graph")
    tight: bool = Field(False, description="The bound is met with equality")
    tight_entries: tuple[str, ...] = Field(default=(), description="Names of the individual bounds met with equality")
    detail: str = Field("", description="Values behind a failure")


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    check: str = Field(..., description="Check id")
    graph6: str = Field(..., description="The violating graph")
    detail: str = Field("", description="Values behind the failure")


class CheckTally(BaseModel):
    """Running totals of one check over a sweep."""

    graphs_tested: int = Field(0, ge=0, description="Graphs on which the check applied")
    violations: int = Field(0, ge=0, description="Graphs on which it failed")
    equality_count: int = Field(0, ge=0, description="Graphs on which its bound is attained")
    example_g6: str | None = Field(
        None,
        description="First violating graph, otherwise the first equality graph, in enumeration order",
    )

    def merge(self, other: "CheckTally") -> "CheckTally":
        """Totals of self followed by other; self's example wins over other's of the same kind."""
        if self.violations or not other.violations:
            example = self.example_g6 if self.example_g6 is not None else other.example_g6
        else:
            example = other.example_g6
        return CheckTally(
            graphs_tested=self.graphs_tested + other.graphs_tested,
            violations=self.violations + other.violations,
            equality_count=self.equality_count + other.equality_count,
            example_g6=example,
        )


class SweepResult(BaseModel):
    """Per-check totals, violating graphs and a tightness histogram of one sweep or sample run."""

    run_id: ULID = Field(default_factory=new_run_id, description="Identifier of the run; logged, never in the TSV")
    n_max: int = Field(..., ge=0, description="Largest order swept, or largest sampled order")
    source: str = Field("exhaustive", description="exhaustive, or the sampled family")
    checks: dict[str, CheckTally] = Field(default_factory=dict, description="Tally per check id")
    violations: list[Violation] = Field(default_factory=list, description="Sorted by check, then graph6")
    tightness: dict[str, int] = Field(default_factory=dict, description="Equality count per check or check:bound")

    @property
    def violation_count(self) -> int:
        return sum(t.violations for t in self.checks.values())

    def to_tsv(self) -> str:
        """Deterministic report: header, then one row per check in id order."""
        rows = [TSV_HEADER]
        for name in sorted(self.checks):
            t = self.checks[name]
            rows.append(f"{name}\t{t.graphs_tested}\t{t.violations}\t{t.equality_count}\t{t.example_g6 or '-'}")
        return "\n".join(rows) + "\n"
