import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from main import app


DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def _doc(name):
    return json.loads((DATA / name).read_text(encoding="utf-8"))


def test_root(client):
    assert client.get("/").json() == {"status": "ok"}


def test_classify(client):
    response = client.post("/classify", json=_doc("a5_2.json"))
    assert response.status_code == 200
    body = response.json()
    assert body["label"] == "A5,2"
    assert body["status"] == "certified"


def test_classify_not_in_key(client):
    body = client.post("/classify", json=_doc("heis5.json")).json()
    assert body["status"] == "not_in_key"
    assert body["label"] is None
    assert body["reason"]


def test_classify_with_conjugations(client):
    body = client.post("/classify?conjugations=2", json=_doc("sol5_diag.json")).json()
    assert body["invariance"]["trials"] == 2
    assert body["invariance"]["invariant"] is True


def test_classify_rejects_bad_documents(client):
    assert client.post("/classify", json={"dim": 5, "brackets": [{"i": 0, "j": 9, "terms": []}]}).status_code == 422
    wrong_dim = {"dim": 3, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "q": "1"}]}]}
    response = client.post("/classify", json=wrong_dim)
    assert response.status_code == 422
    assert response.json()["detail"].startswith("WrongDimension")


def test_atlas(client):
    assert len(client.get("/atlas").json()) == 59
    counts = client.get("/atlas/counts").json()
    assert (counts["individual"], counts["families"]) == (53, 6)
    assert len(client.get("/atlas/products").json()) == 29
    entry = client.get("/atlas/entry", params={"label": "A5,33"}).json()
    assert entry["label"] == "A5,33^{-1,-1}"
    assert client.get("/atlas/entry", params={"label": "nowhere"}).status_code == 404


def test_isotropy(client):
    assert client.get("/isotropy/contains", params={"a": "SO(5)", "b": "SU(2)"}).json()["contains"] is True
    body = client.get("/isotropy/geometries", params={"stabilizer": "U(2)"}).json()
    assert set(body["geometries"]) == {"Heis_5", "~U(2,1)/U(2)"}


def test_groups(client):
    assert client.get("/groups/check", params={"label": "Heis_5"}).json()["passed"] is True
    assert client.get("/groups/check", params={"label": "S^5"}).status_code == 422


def test_lattices(client):
    body = client.get("/lattices/unit-check", params={"poly": "x^3-x"}).json()
    assert body["accepted"] is False
    assert body["poly"] == "x^3 - x"
    assert "reducible over Q" in body["reasons"]
    assert client.get("/lattices/dirichlet", params={"poly": "x^3 + x^2 - 2*x - 1"}).json()["verified"] is True
    search = client.post("/lattices/sol-search", json={"degree": 3, "normalized_logs": [1, 0.2, -1.2], "bound": 1})
    assert search.json()["verdict"] == "none-in-bound"


def test_curvature(client):
    heis = {"dim": 3, "brackets": [{"i": 0, "j": 1, "terms": [{"k": 2, "q": "1"}]}]}
    body = client.post("/curvature", json=heis).json()
    assert body["scalar"] == "-1/2"
    assert client.get("/curvature/atlas", params={"label": "E^5"}).json()["flat"] is True
