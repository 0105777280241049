from fastapi import APIRouter, Query

from geo5.depends import http_error
from geo5.errors import Geo5Error
from geo5.groups import NilpotentModel, commutator_derivative_check, model_for_label
from geo5.schemas.groups import GroupCheckOut


router = APIRouter(
    prefix="/groups",
    tags=["groups"],
)

TOLERANCE = 1e-6


@router.get("/check", response_model=GroupCheckOut, summary="Check a group model against its brackets")
def check(
    label: str = Query(..., description="Lie-group geometry label"),
    h: float = Query(1e-4, gt=0, le=1e-2, description="Commutator step"),
):
    """
    Compares the second-order part of group commutators with the structure constants.
    """
    try:
        model = model_for_label(label)
        error = commutator_derivative_check(model, model.algebra, h)
    except Geo5Error as exc:
        raise http_error(exc)
    return GroupCheckOut(
        label=model.name,
        model="nilpotent" if isinstance(model, NilpotentModel) else "semidirect",
        dim=model.dim,
        h=h,
        commutator_error=error,
        passed=error < TOLERANCE,
    )
