import numpy as np
from fastapi import HTTPException, Request

from geo5 import config
from geo5.atlas import AtlasEntry
from geo5.errors import Geo5Error


def get_catalog(request: Request) -> tuple[AtlasEntry, ...]:
    """
    Atlas catalog warmed by the application lifespan
    """
    return request.app.state.catalog


def get_rng() -> np.random.Generator:
    """
    Seeded generator for random basis changes, fresh per request
    """
    return np.random.default_rng(config.GEO5_SEED)


def http_error(exc: Geo5Error) -> HTTPException:
    return HTTPException(status_code=exc.status_code, detail=f"{type(exc).__name__}: {exc}")
