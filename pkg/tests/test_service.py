"""Session API over the wire."""

import pytest
from fastapi.testclient import TestClient

from quiverlab.fixtures import FIX_A3
from quiverlab.io import canonical_json, matrix_to_obj
from quiverlab.service import create_app
from quiverlab.session import replay_state


@pytest.fixture
def client():
    return TestClient(create_app())


def create(client, **body):
    response = client.post("/api/session", json=body)
    assert response.status_code == 200, response.text
    return response.json()


def test_create_with_preset_a3(client):
    created = create(client, preset="a3")
    assert created["state"]["cut"] == []
    assert created["state"]["history"] == []


def test_create_with_matrix_object(client):
    created = create(client, B=matrix_to_obj(FIX_A3))
    assert created["state"]["B"]["rows"] == [list(r) for r in FIX_A3.rows]


def test_create_rejects_bad_bodies(client):
    assert client.post("/api/session", json={}).status_code == 400
    assert client.post("/api/session",
                       json={"preset": "a3", "B": {"n": 1, "rows": [[0]]}}
                       ).status_code == 400
    assert client.post("/api/session", json={"preset": "zzz"}).status_code == 400
    bad = {"B": {"n": 2, "rows": [[0, 1], [1, 0]]}}
    assert client.post("/api/session", json=bad).status_code == 400


def test_mutate_a3_gives_cut(client):
    created = create(client, preset="a3")
    sid = created["id"]
    response = client.post(f"/api/session/{sid}/mutate", json={"k": 2})
    assert response.status_code == 200
    state = response.json()
    assert state["cut"] == [[2, 3]]
    assert state["history"] == [2]


def test_mutate_twice_is_involution(client):
    created = create(client, preset="a3")
    sid = created["id"]
    before = client.get(f"/api/session/{sid}").content
    client.post(f"/api/session/{sid}/mutate", json={"k": 2})
    client.post(f"/api/session/{sid}/mutate", json={"k": 2})
    after = client.get(f"/api/session/{sid}").content
    assert before == after


def test_state_equals_offline_replay_bytes(client):
    created = create(client, preset="a3")
    sid = created["id"]
    for k in (2, 1, 3):
        client.post(f"/api/session/{sid}/mutate", json={"k": k})
    wire = client.get(f"/api/session/{sid}").content
    offline = replay_state(FIX_A3, [2, 1, 3])
    assert wire == (canonical_json(offline) + "\n").encode()


def test_undo(client):
    created = create(client, preset="a3")
    sid = created["id"]
    client.post(f"/api/session/{sid}/mutate", json={"k": 2})
    response = client.post(f"/api/session/{sid}/undo")
    assert response.status_code == 200
    assert response.json()["history"] == []
    assert client.post(f"/api/session/{sid}/undo").status_code == 409


def test_unknown_session_404(client):
    assert client.get("/api/session/nope").status_code == 404
    assert client.post("/api/session/nope/mutate", json={"k": 1}).status_code == 404
    assert client.post("/api/session/nope/undo").status_code == 404
    assert client.get("/api/session/nope/find-companion").status_code == 404


def test_mutate_validation(client):
    sid = create(client, preset="a3")["id"]
    assert client.post(f"/api/session/{sid}/mutate", json={"k": 9}).status_code == 400
    assert client.post(f"/api/session/{sid}/mutate", json={}).status_code == 400


def test_find_companion_k4_certificate(client):
    sid = create(client, preset="k4")["id"]
    response = client.get(f"/api/session/{sid}/find-companion")
    assert response.status_code == 200
    body = response.json()
    assert body["found"] is False
    assert len(body["certificate"]["cycles"]) == 4


def test_find_companion_a3_witness(client):
    sid = create(client, preset="a3")["id"]
    body = client.get(f"/api/session/{sid}/find-companion").json()
    assert body["found"] is True
    rows = body["companion"]["A"]
    assert all(rows[i][i] == 2 for i in range(3))


def test_k4_state_has_obstruction(client):
    state = create(client, preset="k4")["state"]
    assert state["admissible"] is False
    assert state["certificate"] is not None


def test_presets_listing(client):
    body = client.get("/api/presets").json()
    assert {"a2", "a3", "c3", "k4", "markov"} <= set(body["presets"])


def test_snapshot_persistence(tmp_path):
    path = tmp_path / "sessions.json"
    app = create_app(snapshot_path=str(path))
    client = TestClient(app)
    sid = create(client, preset="a3")["id"]
    client.post(f"/api/session/{sid}/mutate", json={"k": 2})
    # a fresh app instance reloads the stored session
    revived = TestClient(create_app(snapshot_path=str(path)))
    state = revived.get(f"/api/session/{sid}")
    assert state.status_code == 200
    assert state.json()["history"] == [2]
