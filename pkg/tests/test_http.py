"""HTTP JSON service endpoints (in-process TestClient)."""

from __future__ import annotations

import pytest

fastapi = pytest.importorskip("fastapi")
from fastapi.testclient import TestClient

from affold import diagram, serialize_document, standard_action
from affold.server import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


EX26_DOC = {
    "format": "affold/1",
    "n": 4,
    "b": [[0, -1, 1, 1], [1, 0, -1, -1], [-1, 1, 0, 1], [-1, 1, -1, 0]],
}

EX33_DOC = {
    "format": "affold/1",
    "n": 4,
    "b": [[0, -1, -1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, -1, -1, 0]],
    "action": {"group": "Z2", "generators": [[4, 3, 2, 1]]},
}


def six_cycle_post_mutation_doc():
    from affold import make_exchange_matrix, mutate

    rows = [[0] * 6 for _ in range(6)]
    for i in range(6):
        rows[i][(i + 1) % 6] = 1
        rows[(i + 1) % 6][i] = -1
    m = mutate(mutate(make_exchange_matrix(rows), 3), 0)
    doc = serialize_document(m)
    doc["action"] = {"group": "Z2", "generators": [[4, 5, 6, 1, 2, 3]]}
    return doc


class TestMutate:
    def test_printed_mu3(self, client):
        resp = client.post("/v1/quiver/mutate", json={"doc": EX26_DOC, "k": 3})
        assert resp.status_code == 200
        assert resp.json()["doc"]["b"] == [
            [0, 0, -1, 2], [0, 0, 1, -1], [1, -1, 0, -1], [-2, 1, 1, 0],
        ]

    def test_bad_vertex_is_422(self, client):
        resp = client.post("/v1/quiver/mutate", json={"doc": EX26_DOC, "k": 9})
        assert resp.status_code == 422
        assert resp.json()["code"] == "index_out_of_range"

    def test_malformed_json_is_400_or_422(self, client):
        resp = client.post(
            "/v1/quiver/mutate",
            content=b"{not json",
            headers={"content-type": "application/json"},
        )
        assert resp.status_code in (400, 422)


class TestCheckAndFold:
    def test_fold_golden(self, client):
        resp = client.post("/v1/quiver/fold", json={"doc": EX33_DOC})
        assert resp.status_code == 200
        body = resp.json()
        assert body["doc"]["b"] == [[0, -2], [2, 0]]
        assert body["orbits"] == [[1, 4], [2, 3]]

    def test_check_six_cycle_witness(self, client):
        doc = six_cycle_post_mutation_doc()
        resp = client.post("/v1/quiver/check", json={"doc": doc})
        assert resp.status_code == 200
        body = resp.json()
        assert body["invariant"] is True
        assert body["admissible"] is False
        assert body["witness"] == [2, 5, 3]

    def test_check_requires_action(self, client):
        resp = client.post("/v1/quiver/check", json={"doc": EX26_DOC})
        assert resp.status_code == 422

    def test_orbit_mutate_matches_two_single_steps(self, client):
        resp = client.post(
            "/v1/quiver/orbit-mutate", json={"doc": EX33_DOC, "orbit": 1}
        )
        assert resp.status_code == 200
        one = client.post(
            "/v1/quiver/mutate", json={"doc": EX33_DOC, "k": 1}
        ).json()["doc"]
        two = client.post("/v1/quiver/mutate", json={"doc": one, "k": 4}).json()[
            "doc"
        ]
        assert resp.json()["doc"]["b"] == two["b"]

    def test_fold_non_admissible_is_422(self, client):
        doc = six_cycle_post_mutation_doc()
        resp = client.post("/v1/quiver/fold", json={"doc": doc})
        assert resp.status_code == 422
        assert resp.json()["code"] == "not_admissible"


class TestCatalogAndRecognize:
    def test_catalog_listing(self, client):
        resp = client.get("/v1/catalog")
        assert resp.status_code == 200
        types = {entry["type"]: entry for entry in resp.json()["types"]}
        assert "E~6" in types
        e6 = types["E~6"]
        assert e6["n"] == 7
        assert len(e6["layout"]) == 7
        groups = {a["group"] for a in e6["actions"]}
        assert groups == {"Z3", "Z2"}

    def test_recognize(self, client):
        doc = serialize_document(diagram("A~{1,3}"))
        resp = client.post("/v1/recognize", json={"doc": doc})
        assert resp.json() == {"type": "A~{1,3}", "known": True}

    def test_enumerate_endpoint(self, client):
        doc = serialize_document(diagram("A~{2,2}"))
        resp = client.post("/v1/enumerate", json={"doc": doc})
        assert resp.json() == {"size": 4, "closed": True}

    def test_foldable_endpoint(self, client):
        resp = client.post("/v1/quiver/foldable", json={"doc": EX33_DOC})
        assert resp.status_code == 200
        assert resp.json()["status"] == "foldable"
        doc = six_cycle_post_mutation_doc()
        resp = client.post("/v1/quiver/foldable", json={"doc": doc})
        assert resp.json()["status"] == "not_foldable"

    def test_responses_are_pure(self, client):
        a = client.post("/v1/quiver/mutate", json={"doc": EX26_DOC, "k": 3}).json()
        b = client.post("/v1/quiver/mutate", json={"doc": EX26_DOC, "k": 3}).json()
        assert a == b
