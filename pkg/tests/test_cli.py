import json

import pytest

from nearvec.cli import main
from support import G1_MUL_TABLE, G2_MUL_TABLE


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_group_plain(capsys):
    code, out, _ = run_cli(capsys, "group", "--p", "3", "--n", "3")
    assert code == 0
    assert "1 5 7 17" in out
    assert "<3> = {1, 3, 9}" in out
    for row in G1_MUL_TABLE:
        assert " ".join(str(x) for x in row) in " ".join(out.split())


def test_group_tables_match_published(capsys):
    for p, n, table in ((3, 3, G1_MUL_TABLE), (5, 2, G2_MUL_TABLE)):
        code, out, _ = run_cli(capsys, "group", "--p", str(p), "--n", str(n), "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["table"] == table


def test_group_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "group", "--p", "5", "--n", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert out.strip() == json.dumps(payload, indent=2, sort_keys=True)
    assert payload["G"] == [1, 7, 13, 19]
    assert payload["p_coset"] == [1, 5]


def test_group_trivial_notice(capsys):
    code, out, _ = run_cli(capsys, "group", "--p", "2", "--n", "1")
    assert code == 0
    assert "trivial" in out


def test_table_both_matches(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--p", "3", "--n", "3", "--m-range", "4..8", "--method", "both"
    )
    assert code == 0
    assert "all 20 cells MATCH" in out
    totals = out.splitlines()[-2].split()
    assert totals[0] == "total" and totals[1:] == ["10", "14", "22", "30", "43"]


def test_table_csv_layout(capsys):
    code, out, _ = run_cli(
        capsys,
        "table", "--p", "5", "--n", "2", "--m-range", "4..5",
        "--method", "both", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,n,m,N,t_N,T_N,method"
    assert "5,2,4,2,9,6,formula" in lines
    assert "5,2,4,2,9,6,brute" in lines
    # one row per (m, N, method)
    assert len(lines) == 1 + 2 * (4 + 4)


def test_table_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys,
        "table", "--p", "5", "--n", "2", "--m-range", "4..6",
        "--method", "formula", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert out.strip() == json.dumps(payload, indent=2, sort_keys=True)
    by_m = {entry["m"]: entry for entry in payload["results"]}
    assert by_m[4]["total"] == 11
    assert by_m[6]["per_N"] == {"1": 1, "2": 9, "3": 10, "4": 4}


def test_table_single_m(capsys):
    code, out, _ = run_cli(capsys, "table", "--p", "3", "--n", "3", "--m-range", "1..1")
    assert code == 0
    assert out.splitlines()[-1].split() == ["total", "1"]


def test_witness_counterexample(capsys):
    code, out, _ = run_cli(
        capsys,
        "witness", "--p", "3", "--n", "3", "--s1", "1,1,5,5", "--s2", "1,1,7,7",
        "--verify", "sampled",
    )
    assert code == 0
    assert "q = 5" in out
    assert "sigma = 3 4 1 2" in out
    assert "frobenius powers = 0 0 2 2" in out
    assert "component exponents = 1 1 9 9" in out
    assert "VERIFIED (sampled mode)" in out


def test_witness_not_isomorphic(capsys):
    code, out, _ = run_cli(capsys, "witness", "--p", "3", "--n", "3", "--s1", "1,5", "--s2", "1,17")
    assert code == 1
    assert "NOT-ISOMORPHIC" in out


def test_witness_identity(capsys):
    code, out, _ = run_cli(capsys, "witness", "--p", "3", "--n", "3", "--s1", "1,17", "--s2", "1,17")
    assert code == 0
    assert "q = 1" in out


def test_witness_normalizes_with_warning(capsys):
    code, out, err = run_cli(
        capsys, "witness", "--p", "3", "--n", "3", "--s1", "5,1,1,5", "--s2", "1,1,7,7"
    )
    assert code == 0
    assert "q = 5" in out
    assert "normalized --s1" in err


def test_witness_rejects_non_unit(capsys):
    code, _, err = run_cli(
        capsys, "witness", "--p", "3", "--n", "3", "--s1", "1,13", "--s2", "1,13"
    )
    assert code == 2
    assert "unit" in err


def test_classes_plain(capsys):
    code, out, _ = run_cli(capsys, "classes", "--p", "3", "--n", "3", "--m", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("3 classes of 4 sequences")
    assert "N=1 size=1: 1,1" in lines
    assert "N=2 size=2: 1,5" in lines
    assert "N=2 size=1: 1,17" in lines


def test_classes_trivial(capsys):
    code, out, _ = run_cli(capsys, "classes", "--p", "2", "--n", "1", "--m", "3")
    assert code == 0
    assert out.startswith("1 classes of 1 sequences")


def test_classes_json_and_csv(capsys):
    code, out, _ = run_cli(
        capsys, "classes", "--p", "3", "--n", "3", "--m", "4", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert out.strip() == json.dumps(payload, indent=2, sort_keys=True)
    assert payload["total"] == 10
    assert payload["per_N"] == {"1": 1, "2": 5, "3": 3, "4": 1}
    assert len(payload["classes"]) == 10

    code, out, _ = run_cli(
        capsys, "classes", "--p", "3", "--n", "3", "--m", "4", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "p,n,m,N,orbit_size,representative"
    assert len(lines) == 11


def test_axioms_pass(capsys):
    code, out, _ = run_cli(capsys, "axioms", "--p", "2", "--n", "3", "--seq", "1,3")
    assert code == 0
    assert out.count("PASS") == 5
    assert "all axioms satisfied" in out


def test_axioms_default_exponents(capsys):
    code, out, _ = run_cli(capsys, "axioms", "--p", "2", "--n", "2", "--m", "2")
    assert code == 0
    assert "action exponents 1,1" in out


def test_axioms_usage_errors(capsys):
    code, _, err = run_cli(capsys, "axioms", "--p", "2", "--n", "2")
    assert code == 2 and "need --m or --seq" in err
    code, _, err = run_cli(capsys, "axioms", "--p", "2", "--n", "2", "--m", "3", "--seq", "1,1")
    assert code == 2


def test_budget_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("NEARVEC_BUDGET", "10")
    code, _, err = run_cli(
        capsys, "table", "--p", "3", "--n", "3", "--m-range", "8..8", "--method", "brute"
    )
    assert code == 3
    assert "budget" in err


def test_usage_exit_codes(capsys):
    assert run_cli(capsys, "group", "--p", "3")[0] == 2  # missing --n
    assert run_cli(capsys, "nonsense")[0] == 2
    code, _, err = run_cli(capsys, "table", "--p", "3", "--n", "3", "--m-range", "9..4")
    assert code == 2
    code, _, err = run_cli(capsys, "group", "--p", "9", "--n", "1")
    assert code == 2 and "prime" in err
