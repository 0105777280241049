from pydantic import BaseModel, Field

from geo5.curvature import CurvatureReport
from geo5.exact import format_rat


class ConnectionTerm(BaseModel):
    i: int
    j: int
    k: int
    q: str = Field(..., description="<nabla_{e_i} e_j, e_k>")


class SectionalOut(BaseModel):
    i: int
    j: int
    K: str = Field(..., description="Sectional curvature of the plane e_i, e_j")


class CurvatureReportOut(BaseModel):
    """
    Curvature of the left-invariant metric making the basis orthonormal.
    """
    dim: int
    connection: list[ConnectionTerm] = Field(default_factory=list, description="Nonzero connection coefficients")
    sectional: list[SectionalOut] = Field(..., description="Sectional curvatures of the basis planes")
    ricci: list[list[str]] = Field(..., description="Ricci matrix, row-major")
    ricci_charpoly: str = Field(..., description="Characteristic polynomial of the Ricci matrix")
    ricci_eigenvalues: list[str] = Field(..., description="Ricci eigenvalues, descending")
    ricci_exact: bool = Field(..., description="Eigenvalues are exact rationals")
    scalar: str = Field(..., description="Scalar curvature")
    flat: bool
    checks: dict[str, bool] = Field(..., description="Metric compatibility, torsion, Bianchi, trace")

    @classmethod
    def from_report(cls, report: CurvatureReport) -> "CurvatureReportOut":
        n = report.dim
        connection = [
            ConnectionTerm(i=i, j=j, k=k, q=format_rat(report.gamma[i][j][k]))
            for i in range(n) for j in range(n) for k in range(n) if report.gamma[i][j][k]
        ]
        return cls(
            dim=n,
            connection=connection,
            sectional=[SectionalOut(i=i, j=j, K=format_rat(v)) for (i, j), v in sorted(report.sectional.items())],
            ricci=report.ricci.to_strings(),
            ricci_charpoly=str(report.ricci_charpoly),
            ricci_eigenvalues=[format_rat(v) if report.ricci_exact else f"{v:.12g}" for v in report.ricci_eigenvalues],
            ricci_exact=report.ricci_exact,
            scalar=format_rat(report.scalar),
            flat=report.flat,
            checks={
                "metric_compatible": report.checks.metric_compatible,
                "torsion_free": report.checks.torsion_free,
                "bianchi": report.checks.bianchi,
                "scalar_is_ricci_trace": report.checks.scalar_is_ricci_trace,
            },
        )
