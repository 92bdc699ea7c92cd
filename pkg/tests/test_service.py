import pytest
from fastapi.testclient import TestClient

import pebbling.solver
from pebbling.service import create_app


@pytest.fixture(scope="module")
def client():
    with TestClient(create_app()) as c:
        yield c


def test_health(client):
    response = client.get("/health")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_solve_endpoint(client):
    response = client.post(
        "/solve",
        json={
            "graph": {"graph6": "A_"},
            "config": "0,2",
            "target": 0,
            "mode": "at-least-one",
        },
    )
    assert response.status_code == 200
    assert response.json() == {
        "solvable": True,
        "witness": [[1, 0]],
        "states_explored": 1,
    }


def test_solve_blocked_position(client):
    response = client.post(
        "/solve",
        json={
            "graph": {"graph6": "A_"},
            "config": "2,0",
            "target": 0,
            "mode": "exactly-one",
        },
    )
    assert response.status_code == 200
    body = response.json()
    assert body["solvable"] is False and body["witness"] is None


def test_value_endpoints(client):
    response = client.post("/pebbling-number", json={"graph": {"graph6": "A_"}})
    assert response.json() == {
        "graph6": "A_",
        "value": 2,
        "witness_config": "0,1",
        "witness_target": 0,
    }
    response = client.post(
        "/singular-pebbling-number", json={"graph": {"graph6": "A_"}}
    )
    assert response.json()["value"] == 3
    response = client.post(
        "/singular-pebbling-number", json={"graph": {"graph6": "@"}}
    )
    assert response.json() == {
        "graph6": "@",
        "value": "infinite",
        "witness_config": None,
        "witness_target": None,
    }


def test_graph_sources(client):
    response = client.post(
        "/pebbling-number", json={"graph": {"family": "path", "n": 3}}
    )
    assert response.json()["value"] == 4
    response = client.post(
        "/pebbling-number", json={"graph": {"edge_list": "n 3\n0 1\n1 2\n"}}
    )
    assert response.json()["value"] == 4


def test_usage_errors_are_400(client):
    response = client.post(
        "/solve",
        json={
            "graph": {"graph6": "A"},
            "config": "0,2",
            "target": 0,
            "mode": "at-least-one",
        },
    )
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["kind"] == "usage" and "byte 1" in detail["message"]

    response = client.post(
        "/solve",
        json={
            "graph": {"graph6": "A_"},
            "config": "0,2,0",
            "target": 0,
            "mode": "at-least-one",
        },
    )
    assert response.status_code == 400

    response = client.post(
        "/pebbling-number", json={"graph": {"family": "cycle", "n": 2}}
    )
    assert response.status_code == 400


def test_model_validation_is_422(client):
    response = client.post(
        "/solve",
        json={
            "graph": {"graph6": "A_", "family": "path"},
            "config": "0,2",
            "target": 0,
            "mode": "at-least-one",
        },
    )
    assert response.status_code == 422
    response = client.post("/verify", json={"n_max": 99})
    assert response.status_code == 422


def test_search_limit_is_500(client, monkeypatch):
    monkeypatch.setattr(pebbling.solver, "ascent_cap", lambda n: 1)
    response = client.post("/pebbling-number", json={"graph": {"graph6": "Bg"}})
    assert response.status_code == 500
    assert response.json()["detail"]["kind"] == "limit"


def test_verify_endpoint(client):
    response = client.post("/verify", json={"n_max": 3, "jobs": 1})
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert body["n_max"] == 3
    assert len(body["records"]) == 4
    assert {c["name"] for c in body["checks"]} == {
        "fast-path-crosscheck",
        "three-plus-on-target-solvable",
        "pair-on-target-neighbor-reach",
        "first-arrival-equivalence",
        "windowed-singular-reduction",
    }
    record = body["records"][0]
    assert list(record) == [
        "graph6",
        "n",
        "pi",
        "pi_s",
        "equal",
        "witness_config",
        "witness_target",
        "elapsed_ms",
    ]
