import json

import pytest

import proxrem as px
from proxrem.cli import main


@pytest.fixture
def p5_file(tmp_path):
    f = tmp_path / "p5.edges"
    f.write_text(px.render_graph(px.path_graph(5)))
    return str(f)


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCompute:
    def test_p5_json(self, capsys, p5_file):
        code, out, _ = _run(capsys, "compute", p5_file)
        assert code == 0
        doc = json.loads(out)
        assert doc["schema_version"] == "1"
        assert doc["invariants"]["proximity"] == "3/2"
        assert doc["invariants"]["median"] == [2]

    def test_c4_rationals_as_strings(self, capsys, tmp_path):
        f = tmp_path / "c4.edges"
        f.write_text(px.render_graph(px.cycle_graph(4)))
        code, out, _ = _run(capsys, "compute", str(f))
        doc = json.loads(out)
        assert doc["invariants"]["proximity"] == "4/3"
        assert doc["invariants"]["remoteness"] == "4/3"
        assert "." not in doc["invariants"]["proximity"]

    def test_text_format(self, capsys, p5_file):
        code, out, _ = _run(capsys, "compute", p5_file, "--format", "text")
        assert code == 0
        assert "proximity 3/2" in out

    def test_disconnected_exits_2(self, capsys, tmp_path):
        f = tmp_path / "disc.edges"
        f.write_text("0 1\n2 3\n")
        code, _, err = _run(capsys, "compute", str(f))
        assert code == 2
        assert "disconnected" in err

    def test_missing_file_exits_2(self, capsys):
        code, _, err = _run(capsys, "compute", "/nonexistent/file")
        assert code == 2

    def test_malformed_exits_2(self, capsys, tmp_path):
        f = tmp_path / "bad.edges"
        f.write_text("0 0\n")
        code, _, err = _run(capsys, "compute", str(f))
        assert code == 2
        assert "self-loop" in err

    def test_byte_identical_runs(self, capsys, p5_file):
        _, out1, _ = _run(capsys, "compute", p5_file)
        _, out2, _ = _run(capsys, "compute", p5_file)
        assert out1 == out2


class TestVerify:
    def test_k2(self, capsys, tmp_path):
        f = tmp_path / "k2.edges"
        f.write_text("0 1\n")
        code, out, _ = _run(capsys, "verify", str(f))
        assert code == 0
        doc = json.loads(out)
        assert doc["verification"]["proximity"] == "1/1"
        assert doc["verification"]["all_hold"] is True

    def test_p100_order_bound_tight(self, capsys, tmp_path):
        f = tmp_path / "p100.edges"
        f.write_text(px.render_graph(px.path_graph(100)))
        code, out, _ = _run(capsys, "verify", str(f))
        assert code == 0
        doc = json.loads(out)
        assert doc["verification"]["remoteness"] == "50/1"
        assert doc["verification"]["slack"]["remoteness_order"] == "0/1"

    def test_chain_on_extremal_graph(self, capsys, tmp_path):
        g = px.extremal_graph(px.ExtremalParams(20, 3, 8))
        f = tmp_path / "g2083.edges"
        f.write_text(px.render_graph(g))
        code, out, _ = _run(capsys, "verify", str(f), "--chain")
        assert code == 0
        doc = json.loads(out)
        chains = doc["verification"]["proximity_chain"] + doc["verification"]["remoteness_chain"]
        assert chains and all(link["holds"] for link in chains)

    def test_disconnected_exits_2(self, capsys, tmp_path):
        f = tmp_path / "disc.edges"
        f.write_text("0 1\n2 3\n")
        code, _, err = _run(capsys, "verify", str(f))
        assert code == 2


class TestExtremal:
    def test_emit_graph(self, capsys):
        code, out, _ = _run(capsys, "extremal", "--n", "20", "--delta", "3", "--Delta", "8")
        assert code == 0
        g = px.parse_graph(out)
        assert g.n == 20 and px.degree_stats(g) == (3, 8)

    def test_divisibility_failure_exits_2_with_hint(self, capsys):
        code, _, err = _run(capsys, "extremal", "--n", "20", "--delta", "3", "--Delta", "9")
        assert code == 2
        assert "21" in err  # nearest valid order

    def test_sharpness_record(self, capsys):
        code, out, _ = _run(
            capsys, "extremal", "--n", "20", "--delta", "3", "--Delta", "8", "--sharpness"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["sharpness"]["within_limits"] is True

    def test_sweep_csv(self, capsys):
        code, out, _ = _run(capsys, "extremal", "--delta", "3", "--sweep", "16", "22")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("n,delta,Delta,case,")
        assert len(lines) > 1

    def test_output_file(self, capsys, tmp_path):
        dest = tmp_path / "out.edges"
        code, _, _ = _run(
            capsys, "extremal", "--n", "11", "--delta", "3", "--Delta", "7",
            "--output", str(dest),
        )
        assert code == 0
        assert px.parse_graph(dest.read_text()).n == 11


class TestOracle:
    def test_lemma_sweep_small(self, capsys):
        code, out, _ = _run(capsys, "oracle", "lemma-sweep", "--max-n", "6", "--max-order", "4")
        assert code == 0
        doc = json.loads(out)
        assert doc["sweep"]["ok"] is True
        assert doc["sweep"]["violations"] == 0

    def test_budget_exceeded_exits_2(self, capsys):
        code, _, err = _run(capsys, "oracle", "lemma-sweep", "--max-n", "99")
        assert code == 2
        assert "budget" in err

    def test_bound_check_trees(self, capsys):
        code, out, _ = _run(capsys, "oracle", "bound-check", "--trees", "5")
        assert code == 0
        doc = json.loads(out)
        assert doc["bound_check"]["ok"] is True
        assert doc["bound_check"]["path_equality_ok"] is True

    def test_bound_check_random_jobs_identical(self, capsys):
        args = ("oracle", "bound-check", "--random", "20", "--max-n", "18", "--seed", "7")
        _, out1, _ = _run(capsys, *args, "--jobs", "1")
        _, out2, _ = _run(capsys, *args, "--jobs", "4")
        assert out1 == out2

    def test_sweep_csv_file(self, capsys, tmp_path):
        dest = tmp_path / "sweep.csv"
        code, _, _ = _run(
            capsys, "oracle", "lemma-sweep", "--max-n", "5", "--max-order", "3",
            "--csv", str(dest),
        )
        assert code == 0
        lines = dest.read_text().strip().splitlines()
        assert lines[0].startswith("total,heavy,")

    def test_instances_csv_file(self, capsys, tmp_path):
        dest = tmp_path / "inst.csv"
        code, _, _ = _run(
            capsys, "oracle", "lemma-sweep", "--max-n", "5", "--max-order", "3",
            "--instances", str(dest),
        )
        assert code == 0
        assert dest.read_text().startswith("tree_id,weights,")


class TestUsage:
    def test_no_command_exits_2(self, capsys):
        assert main([]) == 2

    def test_unknown_command_exits_2(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_failed_claim_exits_1(self, capsys, p5_file, monkeypatch):
        # force a failing verdict to pin the exit-code contract
        import proxrem.cli as cli_mod

        real = cli_mod.bound_report

        def sabotage(g, include_chains=False, oracle=None):
            report = real(g, include_chains=include_chains, oracle=oracle)
            report.holds["remoteness_order"] = False
            return report

        monkeypatch.setattr(cli_mod, "bound_report", sabotage)
        code, out, _ = _run(capsys, "verify", p5_file)
        assert code == 1
        assert json.loads(out)["verification"]["all_hold"] is False
