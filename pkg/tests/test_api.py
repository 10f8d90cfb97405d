"""HTTP surface: suites, fixtures and corpus sweeps."""

import pytest
from fastapi.testclient import TestClient

from app.fixtures.catalog import fixture_names, raw_fixture
from app.main import app


@pytest.fixture
def client():
    return TestClient(app)


def test_list_suites(client):
    response = client.get("/api/suites")
    assert response.status_code == 200
    assert "nerve-check" in response.json()["suites"]


def test_list_fixtures(client):
    body = client.get("/api/fixtures").json()
    assert [f["name"] for f in body] == fixture_names()
    assert all(f["description"] for f in body)


def test_get_fixture(client):
    body = client.get("/api/fixtures/span").json()
    assert body["name"] == "span"
    assert set(body["categories"]) == {"1", "V"}


def test_unknown_fixture_is_422(client):
    response = client.get("/api/fixtures/nope")
    assert response.status_code == 422
    assert "nope" in response.json()["detail"]


def test_run_suite_on_fixture(client):
    response = client.post("/api/suites/validate", json={"fixture": "span"})
    assert response.status_code == 200
    body = response.json()
    assert body["exit_code"] == 0
    assert body["report"]["command"] == "validate"
    assert "wall_time" not in body["report"]


def test_run_suite_on_posted_document(client):
    response = client.post("/api/suites/kleisli", json={"document": raw_fixture("span")})
    assert response.json()["exit_code"] == 0


def test_law_failure_is_reported_not_raised(client):
    body = client.post("/api/suites/validate", json={"fixture": "broken-unit"}).json()
    assert body["exit_code"] == 1
    failed = [v for v in body["report"]["verdicts"] if not v["passed"]]
    assert failed[0]["check"] == "category:V"


def test_missing_monad_is_422(client):
    response = client.post("/api/suites/kleisli", json={"fixture": "broken-unit"})
    assert response.status_code == 422


def test_capacity_is_413(client, caps):
    caps(MAX_OBJECTS=1)
    response = client.post("/api/suites/validate", json={"fixture": "arrow"})
    assert response.status_code == 413
    assert response.json()["limit"] == 1


def test_bad_payload_is_422(client):
    response = client.post("/api/suites/validate", json={"fixture": "span", "bogus": True})
    assert response.status_code == 422


@pytest.mark.parametrize("suite", ["corpus", "nope"])
def test_suite_route_rejects_corpus_and_unknown(client, suite):
    assert client.post(f"/api/suites/{suite}", json={}).status_code == 404


def test_corpus_route(client):
    payload = {"instance": "quantale", "count": 3, "max_objects": 2, "seed": 1}
    response = client.post("/api/corpus", json=payload)
    assert response.status_code == 200
    body = response.json()
    assert body["exit_code"] == 0
    corpus = [v for v in body["report"]["verdicts"] if v["check"] == "corpus"]
    assert corpus[0]["details"]["instances"] == 3
