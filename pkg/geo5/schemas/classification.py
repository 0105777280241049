from typing import Any, Literal

from pydantic import BaseModel, Field

from geo5.classify import Classification, InvarianceReport, NotInKey


class TraceStepOut(BaseModel):
    question: str = Field(..., description="Decision node of the identification key")
    answer: str = Field(..., description="Branch taken")
    witness: str = Field("", description="Data that decided the branch")


class InvarianceOut(BaseModel):
    """
    Re-classification under random basis changes.
    """
    trials: int = Field(..., ge=0, description="Number of random basis changes")
    mismatches: int = Field(..., ge=0, description="Trials whose label or trace answers differed")
    invariant: bool = Field(..., description="No mismatches")
    first_mismatch: str | None = Field(None, description="First differing result")

    @classmethod
    def from_report(cls, report: InvarianceReport) -> "InvarianceOut":
        return cls(
            trials=report.trials,
            mismatches=report.mismatches,
            invariant=report.invariant,
            first_mismatch=report.first_mismatch,
        )


class ClassificationResult(BaseModel):
    """
    Outcome of running the identification key on a 5-dimensional solvable algebra.
    """
    label: str | None = Field(None, description="Canonical geometry label, None when not in the key")
    params: dict[str, Any] = Field(default_factory=dict, description="Family parameters")
    leaf: str | None = Field(None, description="Leaf of the key reached")
    trace: list[TraceStepOut] = Field(..., description="Path through the key")
    status: Literal["certified", "unverified", "not_in_key"] = Field(..., description="Result status")
    reason: str | None = Field(None, description="Why the algebra is not in the key")
    fingerprint: dict[str, Any] = Field(..., description="Invariants of the input algebra")
    invariance: InvarianceOut | None = Field(None, description="Basis-change invariance check, when run")

    @classmethod
    def from_result(cls, result: Classification | NotInKey) -> "ClassificationResult":
        trace = [TraceStepOut(question=s.question, answer=s.answer, witness=s.witness) for s in result.trace]
        if isinstance(result, NotInKey):
            return cls(trace=trace, status="not_in_key", reason=result.reason,
                       fingerprint=result.fingerprint.to_dict())
        params = {} if result.label.kind == "named" else result.label.model_dump(exclude={"kind"}, exclude_none=True)
        return cls(
            label=str(result.label),
            params=params,
            leaf=result.leaf,
            trace=trace,
            status=result.status,
            fingerprint=result.fingerprint.to_dict(),
        )
