"""HTTP service tests through the in-process test client."""

from fastapi.testclient import TestClient

from fsts.api.app import app

client = TestClient(app)

FANO_TEXT = "3 7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n"


class TestMeta:
    def test_healthz(self):
        r = client.get("/healthz")
        assert r.status_code == 200
        assert r.json()["status"] == "ok"

    def test_version(self):
        r = client.get("/version")
        assert r.json()["name"] == "fsts"


class TestSummary:
    def test_explicit_form(self):
        r = client.post(
            "/hypergraph/summary",
            json={"r": 3, "n": 5, "edges": [[0, 1, 2], [2, 3, 4]]},
        )
        assert r.status_code == 200
        assert r.json()["num_edges"] == 2

    def test_text_form(self):
        r = client.post("/hypergraph/summary", json={"hg_text": FANO_TEXT})
        assert r.json()["shadow_complete"] is True

    def test_both_forms_rejected(self):
        r = client.post(
            "/hypergraph/summary",
            json={"hg_text": FANO_TEXT, "r": 3, "n": 7, "edges": []},
        )
        assert r.status_code == 422


class TestWeight:
    def test_complete_k5(self):
        gen = client.post("/gen", json={"kind": "complete", "n": 5}).json()
        r = client.post("/weight", json={"hypergraph": {"hg_text": gen["hg_text"]}})
        assert r.status_code == 200
        body = r.json()
        assert body["verdict"] is True
        assert set(body["weighting"]["weights"]) == {"1/3"}
        assert body["report"]["all_degrees_one"] is True

    def test_precondition_maps_to_409(self):
        r = client.post("/weight", json={"hypergraph": {"hg_text": FANO_TEXT}})
        assert r.status_code == 409

    def test_parse_error_maps_to_400(self):
        r = client.post("/weight", json={"hypergraph": {"hg_text": "nope"}})
        assert r.status_code == 400


class TestLpSolve:
    def test_feasible(self):
        r = client.post("/lp/solve", json={"hypergraph": {"hg_text": FANO_TEXT}})
        body = r.json()
        assert body["status"] == "feasible"
        assert body["verified"] is True
        assert body["witness"]["weights"] == ["1/1"] * 7

    def test_infeasible_with_certificate(self):
        gen = client.post("/gen", json={"kind": "space-barrier", "n": 6}).json()
        r = client.post("/lp/solve", json={"hypergraph": {"hg_text": gen["hg_text"]}})
        body = r.json()
        assert body["status"] == "infeasible"
        assert body["verified"] is True
        assert body["certificate"]["gap"].endswith("/1")

    def test_all_tuples_mode(self):
        r = client.post(
            "/lp/solve",
            json={
                "hypergraph": {"r": 3, "n": 5, "edges": [[0, 1, 2]]},
                "all_tuples": True,
            },
        )
        assert r.json()["status"] == "infeasible"


class TestOptimize:
    def test_p5(self):
        r = client.post("/optimize", json={"program": "p5", "d": 0.15})
        assert r.json()["value"] > 1.1344

    def test_bad_program_rejected(self):
        r = client.post("/optimize", json={"program": "p9", "d": 0.1})
        assert r.status_code == 422

    def test_domain_maps_to_400(self):
        r = client.post("/optimize", json={"program": "p5", "d": 0.5})
        assert r.status_code == 400


class TestRootChainCertify:
    def test_root(self):
        r = client.post("/root", json={"tol": 1e-10})
        assert abs(r.json()["xstar"] - 0.1421657737) < 1e-9
        assert 0.8578 < r.json()["threshold"] < 0.8579

    def test_verify_chain(self):
        r = client.post("/verify-chain", json={"d": 0.05})
        assert r.json()["ok"] is True

    def test_certify_parity(self):
        gen = client.post(
            "/gen", json={"kind": "parity-blocker", "r": 4, "parts": [3, 3, 3, 4]}
        ).json()
        r = client.post(
            "/certify/parity",
            json={"hypergraph": {"hg_text": gen["hg_text"]}, "parts": [3, 3, 3, 4]},
        )
        body = r.json()
        assert body["transversal_product"] == 27
        assert body["verdict"] is True

    def test_gen_random_deterministic(self):
        a = client.post(
            "/gen", json={"kind": "random", "n": 9, "floor": 6, "seed": 3}
        ).json()
        b = client.post(
            "/gen", json={"kind": "random", "n": 9, "floor": 6, "seed": 3}
        ).json()
        assert a["hg_text"] == b["hg_text"]
