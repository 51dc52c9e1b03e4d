"""CLI behaviour: output formats, determinism, round-trips, exit codes."""

import json

import pytest

from heckemarkov import cli
from heckemarkov.characters import hecke_char_table
from heckemarkov.ratfun import ratfun_eq
from heckemarkov.serialize import ratfun_from_json

CHI2_CSV = """\
;(2);(1,1)
(2);q;1
(1,1);-1;1
"""


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_table_chi_csv_golden(capsys):
    code, out = run_cli(capsys, "table", "chi", "--n", "2", "--format", "csv")
    assert code == 0
    assert out == CHI2_CSV


def test_spec_schur_golden(capsys):
    code, out = run_cli(capsys, "spec", "schur", "--partition", "2")
    assert code == 0
    assert out == "(1+r)(1+q*r)/((1-q)(1-q^2))\n"


def test_output_is_byte_stable(capsys):
    runs = set()
    for _ in range(3):
        _, out = run_cli(capsys, "table", "tau", "--n", "3")
        runs.add(out)
    assert len(runs) == 1


def test_json_table_round_trip(capsys):
    code, out = run_cli(capsys, "table", "chi", "--n", "3")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == ["3", "2,1", "1,1,1"]
    table = hecke_char_table(3)
    for row, json_row in zip(table.entries, data["entries"]):
        for entry, json_entry in zip(row, json_row):
            assert ratfun_eq(entry, ratfun_from_json(json_entry))


def test_verify_pass_exit_zero(capsys):
    code, out = run_cli(capsys, "verify", "duality", "--n", "3")
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "pass"
    assert report["failures"] == []


def test_verify_failure_exit_one(capsys, monkeypatch):
    from heckemarkov.tables import Report

    def failing(args):
        report = Report("duality", args.n)
        report.add_failure((2,), (2,), "lhs", "rhs")
        return report

    monkeypatch.setitem(cli.VERIFIERS, "duality", failing)
    code, out = run_cli(capsys, "verify", "duality", "--n", "2")
    assert code == 1
    assert json.loads(out)["status"] == "fail"


def test_verify_limit_takes_N(capsys):
    code, out = run_cli(capsys, "verify", "limit", "--n", "3", "--N", "2")
    assert code == 0
    report = json.loads(out)
    assert report["notes"]["common_constant"] == "1/8"


def test_usage_errors_exit_two():
    for argv in (
        ["table", "chi", "--n", "9"],
        ["table", "chi", "--n", "0"],
        ["verify", "bogus", "--n", "2"],
        ["spec", "schur", "--partition", "1,3"],
        ["spec", "schur", "--partition", "x"],
    ):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2


def test_force_overrides_cap(capsys):
    code, out = run_cli(capsys, "table", "sn", "--n", "7", "--force")
    assert code == 0
    assert json.loads(out)["n"] == 7


def test_output_file(tmp_path, capsys):
    path = tmp_path / "chi2.csv"
    code, _ = run_cli(
        capsys,
        "table",
        "chi",
        "--n",
        "2",
        "--format",
        "csv",
        "--output",
        str(path),
    )
    assert code == 0
    assert path.read_text() == CHI2_CSV


def test_molien_kinds(capsys):
    for kind in ("sym", "ext", "symext"):
        code, out = run_cli(
            capsys, "table", "molien", "--n", "2", "--kind", kind
        )
        assert code == 0
        json.loads(out)
    code, _ = run_cli(capsys, "table", "coinv", "--n", "3")
    assert code == 0


def test_latex_format(capsys):
    code, out = run_cli(capsys, "table", "sn", "--n", "2", "--format", "latex")
    assert code == 0
    assert out.startswith("\\begin{array}")
    assert out.rstrip().endswith("\\end{array}")
