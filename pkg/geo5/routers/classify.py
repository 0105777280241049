import numpy as np
from fastapi import APIRouter, Depends, Query

from geo5.classify import classify_solvable5, invariance_check
from geo5.depends import get_rng, http_error
from geo5.errors import Geo5Error
from geo5.schemas.classification import ClassificationResult, InvarianceOut
from geo5.schemas.lie_algebras import LieAlgebraDocument


router = APIRouter(
    prefix="/classify",
    tags=["classify"],
)


@router.post("", response_model=ClassificationResult, summary="Run the identification key")
def classify(
    body: LieAlgebraDocument,
    conjugations: int = Query(0, ge=0, le=100, description="Random basis changes to re-check"),
    rng: np.random.Generator = Depends(get_rng),
):
    """
    Classifies a 5-dimensional solvable Lie algebra into a geometry of the catalog.

    - Algebras outside the key come back with status **not_in_key** and their fingerprint
    - `conjugations` re-runs the key in random bases and reports whether the answer moved
    """
    try:
        L = body.to_algebra()
        result = ClassificationResult.from_result(classify_solvable5(L))
        if conjugations:
            result.invariance = InvarianceOut.from_report(invariance_check(L, conjugations, rng))
    except Geo5Error as exc:
        raise http_error(exc)
    return result
