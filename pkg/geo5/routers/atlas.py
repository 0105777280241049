from fastapi import APIRouter, Depends, Query

from geo5.atlas import (
    AtlasEntry,
    build_algebra,
    category_counts,
    counts,
    enumerate_products,
    find,
    list_entries,
    metadata,
)
from geo5.depends import get_catalog, http_error
from geo5.errors import Geo5Error
from geo5.schemas.atlas import AtlasEntryOut, CountsOut, MetadataOut, ProductOut
from geo5.schemas.lie_algebras import LieAlgebraDocument


router = APIRouter(
    prefix="/atlas",
    tags=["atlas"],
)


@router.get("", response_model=list[AtlasEntryOut], summary="List catalog entries")
async def list_atlas(
    category: int | None = Query(None, description="Category 1-8"),
    stabilizer: str | None = Query(None, description="Point stabilizer, e.g. SO(2)"),
    catalog: tuple[AtlasEntry, ...] = Depends(get_catalog),
):
    """
    Returns the 53 geometries and 6 families, optionally filtered.
    """
    try:
        entries = list_entries(category, stabilizer, catalog)
    except Geo5Error as exc:
        raise http_error(exc)
    return [AtlasEntryOut.from_entry(e) for e in entries]


@router.get("/counts", response_model=CountsOut, summary="Catalog counts")
async def atlas_counts():
    individual, families = counts()
    return CountsOut(individual=individual, families=families, by_category=category_counts())


@router.get("/products", response_model=list[ProductOut], summary="Products of lower-dimensional geometries")
async def products():
    return [ProductOut.from_spec(spec) for spec in enumerate_products()]


@router.get("/entry", response_model=AtlasEntryOut, summary="One entry with structure constants")
def entry(label: str = Query(..., description="Geometry label, alias or family member")):
    try:
        found, _ = find(label)
        algebra = None
        if found.is_lie_group and found.constructor is not None:
            algebra = LieAlgebraDocument.from_algebra(build_algebra(label))
    except Geo5Error as exc:
        raise http_error(exc)
    return AtlasEntryOut.from_entry(found, algebra)


@router.get("/metadata", response_model=MetadataOut, summary="Metadata record")
async def entry_metadata(label: str = Query(..., description="Geometry label")):
    try:
        return MetadataOut.from_metadata(metadata(label))
    except Geo5Error as exc:
        raise http_error(exc)
