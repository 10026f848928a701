import json

import pytest

from fixedhooks.cli import main, parse_range, read_config, render_colored
from fixedhooks.partitions import Partition


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_range():
    assert parse_range("3") == (3,)
    assert parse_range("1..4") == (1, 2, 3, 4)
    assert parse_range("-3..2") == (-3, -2, -1, 0, 1, 2)
    with pytest.raises(Exception):
        parse_range("x..y")


def test_render_colored():
    assert render_colored(Partition((7, 1, 1, 1)), Partition(())) == "(7, 1^3)"
    assert render_colored(Partition((6, 1, 1, 1)), Partition((1,))) == "(6, 1r, 1^3)"
    assert render_colored(Partition((2, 2, 2, 2)), Partition((2,))) == "(2r, 2^4)"
    assert render_colored(Partition((1, 1, 1)), Partition((2, 2, 1, 1, 1))) == "(2r^2, 1r^3, 1^3)"


def test_verify_single_case_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--thm", "T11", "--m", "3", "--order", "12")
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_unknown_theorem_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "verify", "--thm", "T99")
    assert code == 2
    assert "unknown theorem" in err


def test_verify_pinned_failing_variant_gives_exit_one(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--thm", "OddBySize", "--m", "2", "--k", "3", "--h", "0",
        "--order", "12", "--variant", "stated",
    )
    assert code == 1
    assert "FAIL" in out
    assert "first mismatch" in out


def test_verify_csv_and_json_formats(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--thm", "T12", "--m", "1..2", "--h", "0..1",
        "--order", "10", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("theorem,")
    assert all("pass" in line for line in lines[1:])

    code, out, _ = run_cli(
        capsys, "verify", "--thm", "T12", "--m", "1", "--h", "0",
        "--order", "10", "--format", "json",
    )
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert {r["check"] for r in rows} == {"by-part", "restricted"}


def test_verify_config_file(tmp_path, capsys):
    cfg = tmp_path / "grid.cfg"
    cfg.write_text("thms = T11\nm = 1..2\norder = 10  # comment\n")
    code, out, _ = run_cli(capsys, "verify", "--config", str(cfg))
    assert code == 0
    assert "T11_ClosedForm m=1" in out
    assert "T11_ClosedForm m=2" in out
    # flags override the file
    code, out, _ = run_cli(capsys, "verify", "--config", str(cfg), "--m", "3")
    assert code == 0
    assert "m=3" in out and "m=1 " not in out


def test_series_output_and_order_zero(capsys):
    code, out, _ = run_cli(capsys, "series", "--thm", "T14", "--m", "1", "--k", "1",
                           "--order", "10")
    assert code == 0
    values = [int(line.split("\t")[1]) for line in out.strip().splitlines()]
    assert values == [0, 1, 1, 2, 3, 5, 7, 11, 15, 22]

    code, out, _ = run_cli(capsys, "series", "--thm", "T11", "--m", "1", "--order", "0")
    assert code == 0
    assert out == ""


def test_series_missing_parameter_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "series", "--thm", "T14", "--m", "1", "--order", "5")
    assert code == 2
    assert "--k" in err


def test_series_precondition_violation_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "series", "--thm", "MFixedByPart", "--m", "3",
                           "--k", "2", "--h", "0", "--order", "8")
    assert code == 2
    assert "column" in err


def test_count_fixed_by_hook_table_reproduction(capsys):
    code, out, _ = run_cli(capsys, "count", "fixed-by-hook", "--n", "10", "--m", "3",
                           "--h", "0", "--sum-k", "--list")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "count: 10"
    assert set(lines[:-1]) == {
        "(6, 4)", "(5, 4, 1)", "(4, 4, 2)", "(4, 4, 1, 1)", "(4, 3, 3)",
        "(3, 3, 3, 1)", "(3, 2, 2, 2, 1)", "(3, 2, 2, 1, 1, 1)",
        "(3, 2, 1, 1, 1, 1, 1)", "(3, 1, 1, 1, 1, 1, 1, 1)",
    }


def test_count_colored_t11_table_reproduction(capsys):
    code, out, _ = run_cli(capsys, "count", "colored-t11", "--n", "10", "--m", "3", "--list")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "count: 10"
    assert set(lines[:-1]) == {
        "(7, 1^3)", "(6, 1r, 1^3)", "(2r, 2^4)", "(2^4, 1r^2)", "(2^4, 1r, 1)",
        "(2^4, 1^2)", "(2r^3, 1r, 1^3)", "(2r^2, 1r^3, 1^3)", "(2r, 1r^5, 1^3)",
        "(1r^7, 1^3)",
    }


def test_count_hooks(capsys):
    code, out, _ = run_cli(capsys, "count", "hooks", "--n", "3", "--k", "1")
    assert code == 0
    assert out.strip() == "count: 4"


def test_count_unknown_oracle(capsys):
    code, _, err = run_cli(capsys, "count", "nonsense", "--n", "3")
    assert code == 2
    assert "unknown oracle" in err


def test_count_json_format(capsys):
    code, out, _ = run_cli(capsys, "count", "restricted-t12", "--n", "6", "--m", "2",
                           "--h", "0", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 2


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--thm", "T14", "--k", "1..4", "--m", "1",
                           "--order", "8", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,k=1,k=2,k=3,k=4"
    assert len(lines) == 9
    assert lines[4].startswith("3,2,1,3,0")


def test_table_json(capsys):
    code, out, _ = run_cli(capsys, "table", "--thm", "OddDistinctTotal", "--k", "1..3",
                           "--order", "6", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert all(row["theorem"] == "OddDistinctTotal" for row in rows)
    assert {row["k"] for row in rows} == {1, 2, 3}


def test_table_empty_range_gives_header_only(capsys):
    code, out, _ = run_cli(capsys, "table", "--thm", "T14", "--k", "3..2", "--m", "1",
                           "--order", "8", "--format", "csv")
    assert code == 0
    assert out.strip() == "n"


def test_table_two_varying_parameters_rejected(capsys):
    code, _, err = run_cli(capsys, "table", "--thm", "T14", "--k", "1..2", "--m", "1..2",
                           "--order", "8")
    assert code == 2
    assert "at most one" in err


def test_out_file(tmp_path, capsys):
    target = tmp_path / "series.csv"
    code, out, _ = run_cli(capsys, "series", "--thm", "T11", "--m", "1", "--order", "6",
                           "--format", "csv", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text().splitlines()[0] == "n,coefficient"


def test_read_config_rejects_garbage(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("just words\n")
    with pytest.raises(Exception):
        read_config(str(bad))


def test_deterministic_output_across_runs(capsys):
    args = ("verify", "--thm", "MFixedByHook", "--m", "1..2", "--k", "1..3",
            "--h", "0..1", "--order", "10", "--format", "csv")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert (code1, out1) == (code2, out2)
