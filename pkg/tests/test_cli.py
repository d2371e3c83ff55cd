"""Tests for the command-line front end: outputs, determinism, exit codes."""

import json

import pytest

from crossfree.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_csv_last_row(self, capsys):
        code, out, _ = run(capsys, "count", "--class", "ncp", "--n-max", "11",
                           "--format", "csv")
        assert code == 0
        assert out.splitlines()[0] == "n,value"
        assert out.splitlines()[-1] == "11,1391820"

    def test_json_values_are_strings(self, capsys):
        code, out, _ = run(capsys, "count", "--class", "ncpws", "--n-max", "6",
                           "--format", "json")
        assert code == 0
        data = json.loads(out)
        assert data["values"] == ["1", "0", "1", "3", "10", "35", "128"]

    def test_deterministic(self, capsys):
        _, first, _ = run(capsys, "count", "--class", "ordered", "--n-max", "9",
                          "--format", "json")
        _, second, _ = run(capsys, "count", "--class", "ordered", "--n-max", "9",
                           "--format", "json")
        assert first == second

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "table.csv"
        code, out, _ = run(capsys, "count", "--n-max", "3", "--out", str(target))
        assert code == 0 and out == ""
        assert target.read_text().splitlines()[-1] == "3,7"


class TestEnumerate:
    def test_jsonl_stream(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--class", "ncp", "--n", "3",
                           "--jsonl")
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == 7
        assert all(line["n"] == 3 for line in lines)

    def test_default_mode_reports_total(self, capsys):
        code, out, err = run(capsys, "enumerate", "--class", "ordered", "--n", "4")
        assert code == 0
        assert len(out.splitlines()) == 21
        assert "total 21" in err

    def test_ordered2_variant(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--class", "ordered2",
                           "--variant", "A", "--n", "4", "--jsonl")
        assert code == 0
        assert len(out.splitlines()) == 8

    def test_guard_exit_code(self, capsys):
        code, _, err = run(capsys, "enumerate", "--class", "ncp", "--n", "13")
        assert code == 3
        assert "guard limit" in err


class TestAsymptotics:
    def test_named_relation_json(self, capsys):
        code, out, _ = run(capsys, "asymptotics", "eq22")
        assert code == 0
        data = json.loads(out)
        assert abs(float(data["growth"]) - 4.642126305) < 1e-8

    def test_user_coefficients(self, capsys):
        rows = json.dumps([[zd, wd, c] for (zd, wd), c in
                           {(3, 3): 3, (2, 3): -4, (2, 2): 1, (1, 2): 4,
                            (1, 1): -3, (0, 1): -1, (0, 0): 1}.items()])
        code, out, _ = run(capsys, "asymptotics", "--coeffs", rows)
        assert code == 0
        assert abs(float(json.loads(out)["r"]) - 0.178230289) < 1e-8

    def test_text_format(self, capsys):
        code, out, _ = run(capsys, "asymptotics", "eq8", "--format", "text")
        assert code == 0
        assert out.startswith("relation eq8:")

    def test_missing_relation(self, capsys):
        code, _, err = run(capsys, "asymptotics")
        assert code == 2


class TestOptimize:
    def test_alpha_output(self, capsys):
        code, out, _ = run(capsys, "optimize", "--beta", "4.610718614")
        assert code == 0
        data = json.loads(out)
        assert abs(float(data["alpha_star"]) - 0.1782302) < 1e-5
        assert abs(float(data["growth"]) - 5.610718614) < 1e-6


class TestConstruct:
    def test_count_polygonizations_both(self, capsys):
        code, out, _ = run(capsys, "construct", "count-polygonizations",
                           "--n-upper", "3", "--n-lower", "3")
        assert code == 0
        data = json.loads(out)
        assert data["exact"] == data["geometric"] == "13"

    def test_compose_round_trip(self, capsys, tmp_path):
        request = {"upper": {"n": 2, "paths": [[1, 2]]},
                   "lower": {"n": 2, "paths": [[1, 2]]}}
        src = tmp_path / "pair.json"
        src.write_text(json.dumps(request))
        code, out, _ = run(capsys, "construct", "compose", "--in", str(src))
        assert code == 0
        outcome = json.loads(out)
        assert outcome["status"] == "polygonization"

        graph = tmp_path / "graph.json"
        graph.write_text(json.dumps(outcome["graph"]))
        code, out, _ = run(capsys, "construct", "decompose", "--in", str(graph))
        assert code == 0
        decomposed = json.loads(out)
        assert decomposed["k"] == 1
        assert decomposed["upper"]["paths"] == [[1, 2]]

    def test_hamiltonian_and_close(self, capsys, tmp_path):
        request = {"upper": {"n": 3, "paths": [[1, 2, 3]]},
                   "lower": {"n": 3, "paths": [[1, 2, 3]]}}
        src = tmp_path / "pair.json"
        src.write_text(json.dumps(request))
        code, out, _ = run(capsys, "construct", "hamiltonian", "--in", str(src))
        assert code == 0
        path_graph = json.loads(out)
        src.write_text(json.dumps(path_graph))
        code, out, _ = run(capsys, "construct", "close", "--in", str(src))
        assert code == 0
        closed = json.loads(out)
        assert closed["n_upper"] == 5 and closed["n_lower"] == 5

    def test_ab_family_sizes(self, capsys):
        code, out, _ = run(capsys, "construct", "ab-family", "--i", "5")
        assert code == 0
        data = json.loads(out)
        assert data["a_size"] == "17" and data["b_size"] == "24"

    def test_ab_family_needs_i(self, capsys):
        code, _, err = run(capsys, "construct", "ab-family")
        assert code == 2

    def test_guard_maps_to_exit_3(self, capsys):
        code, _, err = run(capsys, "construct", "count-polygonizations",
                           "--n-upper", "7", "--n-lower", "6")
        assert code == 3

    def test_k_mismatch_is_input_error(self, capsys, tmp_path):
        request = {"upper": {"n": 2, "paths": [[1, 2]]},
                   "lower": {"n": 2, "paths": [[1], [2]]}}
        src = tmp_path / "pair.json"
        src.write_text(json.dumps(request))
        code, _, err = run(capsys, "construct", "compose", "--in", str(src))
        assert code == 2
        assert "path counts differ" in err


class TestRender:
    def test_chain_svg(self, capsys, tmp_path):
        graph = {"n_upper": 2, "n_lower": 2,
                 "edges": [[1, 2], [3, 4], [1, 3], [2, 4]]}
        src = tmp_path / "graph.json"
        src.write_text(json.dumps(graph))
        code, out, _ = run(capsys, "render", "--kind", "chain", "--in", str(src))
        assert code == 0
        assert out.startswith("<svg") and out.rstrip().endswith("</svg>")
        assert out.count("<line") == 4

    def test_partition_svg_deterministic(self, capsys, tmp_path):
        part = {"n": 5, "paths": [[2, 1, 3], [4], [5]]}
        src = tmp_path / "part.json"
        src.write_text(json.dumps(part))
        _, first, _ = run(capsys, "render", "--kind", "partition", "--in", str(src))
        _, second, _ = run(capsys, "render", "--kind", "partition", "--in", str(src))
        assert first == second
        assert first.count("<line") == 2


class TestTables:
    def test_all_rows_pass(self, capsys):
        code, out, _ = run(capsys, "tables")
        assert code == 0
        assert out.count("PASS") == 11
        assert "all rows match" in out


class TestVerifyQuick:
    def test_quick_suite_green(self, capsys):
        code, out, _ = run(capsys, "verify", "--quick")
        assert code == 0
        assert out.count("[PASS]") == 4
        assert "4/4 criteria passed" in out
