from pydantic import BaseModel, Field


class StabilizerOut(BaseModel):
    name: str = Field(..., description="Closed connected subgroup of SO(5)")
    dim: int = Field(..., ge=0, description="Dimension")


class ContainsOut(BaseModel):
    a: str = Field(..., description="Larger group")
    b: str = Field(..., description="Candidate subgroup")
    contains: bool = Field(..., description="b is conjugate to a subgroup of a")


class GeometriesOut(BaseModel):
    stabilizer: str = Field(..., description="Point stabilizer")
    geometries: list[str] = Field(..., description="Non-product geometries with this stabilizer")
