from typing import Literal

from pydantic import BaseModel, Field

from geo5.exact import format_rat
from geo5.lattices import LatticeReport, SolSearchResult, UnitCubic


class UnitCubicOut(BaseModel):
    """
    Outcome of the unit-cubic gate.
    """
    poly: str = Field(..., description="Polynomial as given")
    accepted: bool = Field(..., description="All checks passed")
    reasons: list[str] = Field(default_factory=list, description="Failed checks")
    companion: list[list[str]] | None = Field(None, description="Companion matrix when accepted")
    det: str | None = Field(None, description="Exact determinant of the companion matrix")

    @classmethod
    def accepted_cubic(cls, cubic: UnitCubic) -> "UnitCubicOut":
        M = cubic.companion
        return cls(poly=str(cubic.poly), accepted=True, companion=M.to_strings(), det=format_rat(M.det()))


class LatticeReportOut(BaseModel):
    """
    Dirichlet-unit lattice Z^3 x| Z in R^3 x| {xyz=1}^0 with its numerical checks.
    """
    poly: str
    companion: list[list[str]] = Field(..., description="Companion matrix M")
    det: str = Field(..., description="det M, exact")
    eigenvalues: list[float] = Field(..., description="Eigenvalues of M, descending")
    eigenvalue_product: float
    log_sum: float = Field(..., description="Sum of log|lambda_i|")
    squared: bool = Field(..., description="M^2 used because M has negative eigenvalues")
    unit: list[list[str]] = Field(..., description="Integer matrix generating the Z factor")
    embedding: list[list[float]] = Field(..., description="Eigenvector embedding E")
    condition: float = Field(..., description="Condition number of the eigenbasis")
    translations: list[list[float]] = Field(..., description="Translation generators (columns of E)")
    torus: list[float] = Field(..., description="Torus element in model coordinates")
    log_roots: list[float] = Field(..., description="log of the eigenvalues of the unit")
    relation_residual: float
    min_displacement: float = Field(..., description="Discreteness proxy over short words")
    words_checked: int
    discrete: bool
    verified: bool
    warnings: list[str] = Field(default_factory=list)

    @classmethod
    def from_report(cls, report: LatticeReport) -> "LatticeReportOut":
        return cls(
            poly=str(report.cubic.poly),
            companion=report.companion.to_strings(),
            det=format_rat(report.det),
            eigenvalues=report.eigenvalues,
            eigenvalue_product=report.eigenvalue_product,
            log_sum=report.log_sum,
            squared=report.squared,
            unit=report.unit.to_strings(),
            embedding=report.embedding.tolist(),
            condition=report.condition,
            translations=[list(t) for t in report.translations],
            torus=list(report.torus),
            log_roots=report.log_roots,
            relation_residual=report.relation_residual,
            min_displacement=report.min_displacement,
            words_checked=report.words_checked,
            discrete=report.discrete,
            verified=report.verified,
            warnings=report.warnings,
        )


class SolSearchRequest(BaseModel):
    """
    Normalized log-root target for the integer characteristic-polynomial search.
    """
    degree: Literal[3, 4] = Field(..., description="3 for Sol^4-type, 4 for R^4 x| R")
    normalized_logs: list[float] = Field(..., description="Log-root vector scaled so its largest entry is 1")
    bound: int = Field(10, ge=1, description="Coefficient bound")


class SolSearchOut(BaseModel):
    verdict: Literal["witness-found", "none-in-bound"]
    degree: int
    normalized_logs: list[float]
    bound: int
    searched: int = Field(..., description="Polynomials examined")
    candidates: int = Field(..., description="Numerical matches sent to Sturm verification")
    witness: list[int] | None = Field(None, description="(m, n) or (m, n, p)")
    polynomial: str | None = None

    @classmethod
    def from_result(cls, result: SolSearchResult) -> "SolSearchOut":
        return cls(
            verdict=result.verdict,
            degree=result.target.degree,
            normalized_logs=list(result.target.normalized_logs),
            bound=result.bound,
            searched=result.searched,
            candidates=result.candidates,
            witness=list(result.witness) if result.witness is not None else None,
            polynomial=str(result.polynomial) if result.polynomial is not None else None,
        )
