from fastapi import APIRouter, Query

from geo5.atlas import build_algebra
from geo5.curvature import curvature_report
from geo5.depends import http_error
from geo5.errors import Geo5Error
from geo5.schemas.curvature import CurvatureReportOut
from geo5.schemas.lie_algebras import LieAlgebraDocument


router = APIRouter(
    prefix="/curvature",
    tags=["curvature"],
)


@router.post("", response_model=CurvatureReportOut, summary="Curvature of a left-invariant metric")
def curvature(body: LieAlgebraDocument):
    """
    The metric is the one making the given basis orthonormal.
    """
    try:
        return CurvatureReportOut.from_report(curvature_report(body.to_algebra()))
    except Geo5Error as exc:
        raise http_error(exc)


@router.get("/atlas", response_model=CurvatureReportOut, summary="Curvature of an atlas Lie group")
def atlas_curvature(label: str = Query(..., description="Lie-group geometry label")):
    try:
        return CurvatureReportOut.from_report(curvature_report(build_algebra(label)))
    except Geo5Error as exc:
        raise http_error(exc)
