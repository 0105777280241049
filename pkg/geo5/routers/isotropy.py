from fastapi import APIRouter, Query

from geo5.depends import http_error
from geo5.errors import Geo5Error
from geo5.isotropy import contains, dims, geometries_with_stabilizer, parse_stabilizer
from geo5.schemas.isotropy import ContainsOut, GeometriesOut, StabilizerOut


router = APIRouter(
    prefix="/isotropy",
    tags=["isotropy"],
)


@router.get("/contains", response_model=ContainsOut, summary="Subgroup test in the poset")
async def contains_query(
    a: str = Query(..., description="Larger group"),
    b: str = Query(..., description="Candidate subgroup"),
):
    try:
        return ContainsOut(a=str(parse_stabilizer(a)), b=str(parse_stabilizer(b)), contains=contains(a, b))
    except Geo5Error as exc:
        raise http_error(exc)


@router.get("/dims", response_model=list[StabilizerOut], summary="Nodes of the poset with dimensions")
async def node_dims():
    return [StabilizerOut(name=name, dim=dim) for name, dim in dims().items()]


@router.get("/geometries", response_model=GeometriesOut, summary="Geometries with a given stabilizer")
async def geometries(stabilizer: str = Query(..., description="Point stabilizer")):
    try:
        names = geometries_with_stabilizer(stabilizer)
    except Geo5Error as exc:
        raise http_error(exc)
    return GeometriesOut(stabilizer=str(parse_stabilizer(stabilizer)), geometries=names)
