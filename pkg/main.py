import logging
from contextlib import asynccontextmanager

import uvicorn
from fastapi import FastAPI

from geo5 import config
from geo5.atlas import catalog
from geo5.classify import leaf_references
from geo5.routers import atlas, classify, curvature, groups, isotropy, lattices


@asynccontextmanager
async def lifespan(app: FastAPI):
    logging.basicConfig(level=config.LOG_LEVEL)
    # atlas and leaf fingerprints are built once per process
    app.state.catalog = catalog()
    app.state.leaf_references = leaf_references()
    yield


app = FastAPI(
    title="geo5",
    version="0.1.0",
    description=(
        "geo5 classifies 5-dimensional solvable Lie algebras into model geometries "
        "and serves the atlas of 5-dimensional maximal model geometries."
    ),
    lifespan=lifespan
)


app.include_router(classify.router)
app.include_router(atlas.router)
app.include_router(isotropy.router)
app.include_router(groups.router)
app.include_router(lattices.router)
app.include_router(curvature.router)


@app.get("/")
async def root():
    return {"status": "ok"}


if __name__ == '__main__':
    uvicorn.run('main:app', reload=True)
