from typing import Literal

from pydantic import BaseModel, Field

from geo5.atlas import AtlasEntry, Metadata, ProductSpec, IsotropyRow
from geo5.schemas.lie_algebras import LieAlgebraDocument


class IsotropyRowOut(BaseModel):
    base: str = Field(..., description="Base geometry of the bundle")
    column: Literal["flat", "curved"] = Field(..., description="Flat or curved fibration")

    @classmethod
    def from_row(cls, row: IsotropyRow | None) -> "IsotropyRowOut | None":
        return None if row is None else cls(base=row.base, column=row.column)


class AtlasEntryOut(BaseModel):
    """
    One geometry (or family) of the catalog.
    """
    label: str = Field(..., description="Canonical label")
    kind: str = Field(..., description="Label kind")
    category: int = Field(..., ge=1, le=8, description="Category of the classification")
    stabilizer: str = Field(..., description="Point stabilizer")
    is_lie_group: bool = Field(..., description="Simply transitive on itself")
    is_family: bool = Field(..., description="Parametrized family")
    is_product: bool = Field(..., description="Product of lower-dimensional geometries")
    model: bool = Field(..., description="Admits a compact or finite-volume quotient")
    maximal: bool = Field(..., description="Maximal geometry")
    group: str = Field("", description="Transitive group or construction")
    aliases: list[str] = Field(default_factory=list, description="Alternative names")
    factors: list[str] = Field(default_factory=list, description="Product factors")
    notes: list[str] = Field(default_factory=list, description="Remarks")
    isotropy_row: IsotropyRowOut | None = Field(None, description="Irreducible 4-dimensional isotropy row")
    algebra: LieAlgebraDocument | None = Field(None, description="Structure constants when constructed")

    @classmethod
    def from_entry(cls, entry: AtlasEntry, algebra: LieAlgebraDocument | None = None) -> "AtlasEntryOut":
        return cls(
            label=entry.name,
            kind=entry.label.kind,
            category=entry.category,
            stabilizer=entry.stabilizer,
            is_lie_group=entry.is_lie_group,
            is_family=entry.is_family,
            is_product=entry.is_product,
            model=entry.model,
            maximal=entry.maximal,
            group=entry.group,
            aliases=list(entry.aliases),
            factors=list(entry.factors),
            notes=list(entry.notes),
            isotropy_row=IsotropyRowOut.from_row(entry.isotropy_row),
            algebra=algebra,
        )


class ProductOut(BaseModel):
    name: str = Field(..., description="Product name")
    dims: list[int] = Field(..., description="Factor dimensions")
    shape: str = Field(..., description="Partition of 5, e.g. '4x1'")
    is_family: bool = Field(..., description="Has a family factor")
    stabilizer: str = Field(..., description="Product of factor stabilizers")

    @classmethod
    def from_spec(cls, spec: ProductSpec) -> "ProductOut":
        return cls(name=spec.name, dims=list(spec.dims), shape=spec.shape,
                   is_family=spec.is_family, stabilizer=spec.stabilizer)


class MetadataOut(BaseModel):
    """
    Metadata record of a geometry or family member.
    """
    label: str = Field(..., description="Label with parameters")
    category: int = Field(..., description="Category")
    stabilizer: str = Field(..., description="Point stabilizer")
    stabilizer_dim: int = Field(..., ge=0, description="Dimension of the stabilizer")
    is_lie_group: bool
    is_product: bool
    model: bool
    maximal: bool
    group: str
    isotropy_row: IsotropyRowOut | None = None
    compact_quotients: bool | None = Field(None, description="Known compact-quotient status")
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_metadata(cls, meta: Metadata) -> "MetadataOut":
        return cls(
            label=meta.label,
            category=meta.category,
            stabilizer=meta.stabilizer,
            stabilizer_dim=meta.stabilizer_dim,
            is_lie_group=meta.is_lie_group,
            is_product=meta.is_product,
            model=meta.model,
            maximal=meta.maximal,
            group=meta.group,
            isotropy_row=IsotropyRowOut.from_row(meta.isotropy_row),
            compact_quotients=meta.compact_quotients,
            notes=list(meta.notes),
        )


class CountsOut(BaseModel):
    individual: int = Field(..., description="Individual geometries")
    families: int = Field(..., description="Infinite families")
    by_category: dict[int, tuple[int, int]] = Field(..., description="(individual, families) per category")
