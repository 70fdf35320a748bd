"""CLI tests: exit codes, JSON reports, and file handling."""

import json

from fsts.cli import main

FANO_TEXT = "3 7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    payload = json.loads(captured.out) if captured.out.strip() else None
    return code, payload, captured.err


class TestGen:
    def test_complete_writes_file(self, tmp_path, capsys):
        out = tmp_path / "k7.hg"
        code, payload, err = run(
            capsys, ["gen", "complete", "--r", "3", "--n", "7", "-o", str(out)]
        )
        assert code == 0
        assert out.read_text().startswith("3 7 35\n")
        assert payload["result"]["summary"]["num_edges"] == 35

    def test_space_barrier_summary(self, capsys):
        code, payload, err = run(capsys, ["gen", "space-barrier", "--n", "9"])
        assert code == 0
        assert payload["result"]["summary"]["num_edges"] == 57
        assert payload["result"]["parts"] == [3, 3, 3]

    def test_random_is_seed_reproducible(self, capsys):
        argv = ["gen", "random", "--n", "10", "--floor", "7", "--seed", "5"]
        _, a, _ = run(capsys, argv)
        _, b, _ = run(capsys, argv)
        assert a["result"]["hg_text"] == b["result"]["hg_text"]

    def test_missing_n(self, capsys):
        code, _, err = run(capsys, ["gen", "complete"])
        assert code == 1
        assert "needs n" in err


class TestWeight:
    def test_complete_k7(self, tmp_path, capsys):
        path = tmp_path / "k7.hg"
        run(capsys, ["gen", "complete", "--n", "7", "-o", str(path)])
        code, payload, err = run(capsys, ["weight", str(path)])
        assert code == 0
        result = payload["result"]
        assert result["verdict"] is True
        assert result["weighting"]["weights"][0] == "1/5"
        assert result["nonnegativity"]["min_ordered_weight"] == "1/30"
        assert payload["input_digest"].startswith("sha256:")

    def test_precondition_exit_code(self, tmp_path, capsys):
        path = tmp_path / "fano.hg"
        path.write_text(FANO_TEXT)
        code, _, err = run(capsys, ["weight", str(path)])
        assert code == 2
        assert "precondition" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, ["weight", "/nonexistent/x.hg"])
        assert code == 1


class TestLp:
    def test_feasible_exit_zero(self, tmp_path, capsys):
        path = tmp_path / "fano.hg"
        path.write_text(FANO_TEXT)
        code, payload, _ = run(capsys, ["lp", "solve", str(path)])
        assert code == 0
        assert payload["result"]["status"] == "feasible"
        assert payload["result"]["witness"]["weights"] == ["1/1"] * 7

    def test_infeasible_exit_three(self, tmp_path, capsys):
        path = tmp_path / "sb9.hg"
        run(capsys, ["gen", "space-barrier", "--n", "9", "-o", str(path)])
        code, payload, _ = run(capsys, ["lp", "solve", str(path)])
        assert code == 3
        assert payload["result"]["status"] == "infeasible"
        assert payload["result"]["verified"] is True

    def test_malformed_exit_one(self, tmp_path, capsys):
        path = tmp_path / "bad.hg"
        path.write_text("3 5\n0 1 2\n")
        code, _, err = run(capsys, ["lp", "solve", str(path)])
        assert code == 1
        assert "line 1" in err

    def test_all_tuples_flag(self, tmp_path, capsys):
        path = tmp_path / "one.hg"
        path.write_text("3 5 1\n0 1 2\n")
        code, payload, _ = run(capsys, ["lp", "solve", str(path), "--all-tuples"])
        assert code == 3
        assert payload["result"]["mode"] == "all"


class TestOptimize:
    def test_p5(self, capsys):
        code, payload, _ = run(capsys, ["optimize", "p5", "--d", "0.15"])
        assert code == 0
        assert payload["result"]["value"] > 1.1344

    def test_bad_defect(self, capsys):
        code, _, err = run(capsys, ["optimize", "p5", "--d", "0.9"])
        assert code == 1
        assert "must lie in" in err

    def test_json_out(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        code, payload, _ = run(
            capsys, ["optimize", "p5", "--d", "0.1", "--json-out", str(target)]
        )
        assert code == 0
        on_disk = json.loads(target.read_text())
        assert on_disk["result"] == payload["result"]

    def test_p3_result_payload_reproducible(self, capsys):
        argv = ["optimize", "p3", "--d", "0.05", "--seed", "7"]
        _, a, _ = run(capsys, argv)
        _, b, _ = run(capsys, argv)
        assert a["result"] == b["result"]


class TestRootAndChain:
    def test_root(self, capsys):
        code, payload, _ = run(capsys, ["root", "--tol", "1e-10"])
        assert code == 0
        assert abs(payload["result"]["xstar"] - 0.1421657737) < 1e-9

    def test_verify_chain(self, capsys):
        code, payload, _ = run(capsys, ["verify-chain", "--d", "0.05", "--tol", "1e-4"])
        assert code == 0
        assert payload["result"]["ok"] is True


class TestCertify:
    def test_parity(self, tmp_path, capsys):
        path = tmp_path / "pb.hg"
        run(capsys, ["gen", "parity-blocker", "--parts", "3,3,3", "-o", str(path)])
        code, payload, _ = run(capsys, ["certify", "parity", str(path), "--parts", "3,3,3"])
        assert code == 0
        assert payload["result"]["transversal_product"] == 9
        assert payload["result"]["verdict"] is True

    def test_parts_mismatch(self, tmp_path, capsys):
        path = tmp_path / "pb.hg"
        run(capsys, ["gen", "parity-blocker", "--parts", "3,3,3", "-o", str(path)])
        code, _, err = run(capsys, ["certify", "parity", str(path), "--parts", "3,3"])
        assert code == 1
