import json

import pytest

from modmckay.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasicCommands:
    def test_diameter(self, capsys):
        code, out, _ = run(capsys, "diameter", "--n", "3", "--p", "3")
        assert code == 0 and out == "6\n"

    def test_f(self, capsys):
        code, out, _ = run(capsys, "f", "--n", "5", "--weight", "1,0,0,0")
        assert code == 0 and out == "1\n"

    def test_coeffs(self, capsys):
        code, out, _ = run(capsys, "coeffs", "--weight", "1,0,0,0")
        assert code == 0 and out == "4,3,2,1\n"

    def test_lr_neighbors_text(self, capsys):
        code, out, _ = run(capsys, "lr-neighbors", "--weight", "1,1")
        assert code == 0
        assert out.splitlines() == ["a -> 2,1", "b(1) -> 0,2", "c -> 1,0"]

    def test_canonical_path(self, capsys):
        code, out, _ = run(capsys, "canonical-path", "--n", "2", "--p", "3")
        assert code == 0 and out.splitlines() == ["0", "1", "2"]

    def test_char0_dist(self, capsys):
        code, out, _ = run(
            capsys, "char0-dist", "--from", "0,0", "--to", "2,2", "--budget", "10"
        )
        assert code == 0 and out == "6\n"

    def test_char0_dist_exceeds(self, capsys):
        code, out, _ = run(
            capsys, "char0-dist", "--from", "0,0", "--to", "2,2", "--budget", "3"
        )
        assert code == 0 and out == "exceeds budget\n"

    def test_conormal(self, capsys):
        code, out, _ = run(capsys, "conormal", "--p", "2", "--weight", "1,1")
        assert code == 0
        assert "conormal: 1,2,3" in out

    def test_moves(self, capsys):
        code, out, _ = run(capsys, "moves", "--p", "3", "--weight", "1,0")
        assert code == 0
        assert out.splitlines() == ["add_first -> 2,0", "clear_forward(1) -> 0,1"]


class TestPlanCommand:
    def test_plan_json_matches_golden_path(self, capsys):
        code, out, _ = run(
            capsys,
            "plan",
            "--n", "5",
            "--p", "2",
            "--from", "0,0,0,0",
            "--to", "1,1,1,1",
            "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["length"] == 10
        assert payload["waypoints"][0] == [0, 0, 0, 0]
        assert payload["waypoints"][-1] == [1, 1, 1, 1]
        assert payload["waypoints"][4] == [0, 0, 0, 1]

    def test_plan_text(self, capsys):
        code, out, _ = run(capsys, "plan", "--p", "3", "--from", "2", "--to", "1")
        assert code == 0
        assert "length 1" in out and "add_first -> 1" in out


class TestValidateCommand:
    def test_edge(self, capsys):
        code, out, _ = run(capsys, "validate", "--p", "3", "--from", "2,0", "--to", "1,0")
        assert code == 0 and out == "add_first\n"

    def test_no_edge_exits_1(self, capsys):
        code, out, _ = run(capsys, "validate", "--p", "3", "--from", "1,0", "--to", "1,1")
        assert code == 1 and out.startswith("no-such-edge")


class TestGraphAndBfs:
    def test_graph_summary(self, capsys):
        code, out, _ = run(capsys, "graph", "--n", "2", "--p", "3")
        assert code == 0 and out == "vertices 3\nedges 5\n"

    def test_graph_dot(self, capsys):
        code, out, _ = run(capsys, "graph", "--n", "2", "--p", "2", "--format", "dot")
        assert code == 0 and '"1" -> "1" [label="add_first"];' in out

    def test_bfs_text(self, capsys):
        code, out, _ = run(capsys, "bfs", "--n", "2", "--p", "3", "--from", "0")
        assert code == 0 and out.splitlines() == ["0 0", "1 1", "2 2"]

    def test_bfs_csv(self, capsys):
        code, out, _ = run(capsys, "bfs", "--n", "2", "--p", "3", "--format", "csv")
        assert code == 0 and out.splitlines()[0] == "source,0,1,2"

    def test_bfs_without_source_needs_csv(self, capsys):
        code, _, err = run(capsys, "bfs", "--n", "2", "--p", "3")
        assert code == 2 and "needs --from" in err


class TestVerifyCommand:
    def test_verify_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "3", "--p", "2")
        assert code == 0
        assert "all checks passed" in out
        assert "FAIL" not in out

    def test_verify_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--n", "2", "--p", "3", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["ok"] is True
        assert all(check["ok"] for check in payload["checks"])


class TestErrorHandling:
    def test_malformed_weight_exits_2(self, capsys):
        code, _, err = run(capsys, "f", "--weight", "1,0,x")
        assert code == 2 and "error:" in err

    def test_inconsistent_n_exits_2(self, capsys):
        code, _, err = run(capsys, "f", "--n", "5", "--weight", "1,0")
        assert code == 2 and "--n 5" in err

    def test_nonprime_p_rejected(self, capsys):
        code, _, err = run(capsys, "diameter", "--n", "2", "--p", "4")
        assert code == 2 and "not prime" in err

    def test_nonprime_p_allowed_with_flag(self, capsys):
        code, out, _ = run(
            capsys, "diameter", "--n", "2", "--p", "4", "--allow-nonprime"
        )
        assert code == 0 and out == "3\n"

    def test_budget_exceeded_exits_2(self, capsys):
        code, _, err = run(
            capsys, "graph", "--n", "12", "--p", "7", "--budget", "100"
        )
        assert code == 2 and "exceed" in err

    def test_missing_n_exits_2(self, capsys):
        code, _, err = run(capsys, "diameter", "--p", "3")
        assert code == 2 and "needs --n" in err

    def test_unknown_command_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2


class TestOutputHandling:
    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.txt"
        code = main(["diameter", "--n", "3", "--p", "2", "--output", str(target)])
        capsys.readouterr()
        assert code == 0
        assert target.read_text() == "3\n"

    def test_determinism(self, capsys):
        _, first, _ = run(capsys, "graph", "--n", "3", "--p", "3", "--format", "json")
        _, second, _ = run(capsys, "graph", "--n", "3", "--p", "3", "--format", "json")
        assert first == second

    def test_parallel_diameter_matches(self, capsys):
        _, serial, _ = run(capsys, "diameter", "--n", "4", "--p", "2")
        _, parallel, _ = run(capsys, "diameter", "--n", "4", "--p", "2", "--parallel")
        assert serial == parallel
