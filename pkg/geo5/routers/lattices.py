from fastapi import APIRouter, Query

from geo5.depends import http_error
from geo5.errors import Geo5Error, PolynomialRejected
from geo5.exact import parse_poly
from geo5.lattices import dirichlet_lattice, make_target, sol_family_model_check, unit_cubic_check
from geo5.schemas.lattices import LatticeReportOut, SolSearchOut, SolSearchRequest, UnitCubicOut


router = APIRouter(
    prefix="/lattices",
    tags=["lattices"],
)


@router.get("/unit-check", response_model=UnitCubicOut, summary="Unit-cubic gate")
async def unit_check(poly: str = Query(..., description="Monic integer cubic, e.g. x^3+x^2-2x-1")):
    """
    A rejected polynomial is a valid answer: it comes back with the failed checks.
    """
    try:
        p = parse_poly(poly)
        return UnitCubicOut.accepted_cubic(unit_cubic_check(p))
    except PolynomialRejected as exc:
        return UnitCubicOut(poly=str(p), accepted=False, reasons=exc.reasons)
    except Geo5Error as exc:
        raise http_error(exc)


@router.get("/dirichlet", response_model=LatticeReportOut, summary="Dirichlet-unit lattice")
def dirichlet(poly: str = Query(..., description="Unit cubic")):
    try:
        return LatticeReportOut.from_report(dirichlet_lattice(parse_poly(poly)))
    except Geo5Error as exc:
        raise http_error(exc)


@router.post("/sol-search", response_model=SolSearchOut, summary="Integer characteristic-polynomial search")
def sol_search(body: SolSearchRequest):
    try:
        target = make_target(body.degree, body.normalized_logs)
        return SolSearchOut.from_result(sol_family_model_check(target, body.bound))
    except Geo5Error as exc:
        raise http_error(exc)
