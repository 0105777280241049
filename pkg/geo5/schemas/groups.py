from pydantic import BaseModel, Field


class GroupCheckOut(BaseModel):
    """
    Consistency of a group model with its structure constants.
    """
    label: str = Field(..., description="Geometry label")
    model: str = Field(..., description="'nilpotent' (BCH coordinates) or 'semidirect'")
    dim: int = Field(..., description="Dimension")
    h: float = Field(..., gt=0, description="Step of the commutator estimate")
    commutator_error: float = Field(..., ge=0, description="Max relative deviation from the brackets")
    passed: bool = Field(..., description="Deviation below the tolerance")
