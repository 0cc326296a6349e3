import json

import pytest

from osculate.harness.cli import main
from osculate.variety import catalog, parse_variety


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_catalog_name(capsys):
    code, out, _ = run(capsys, "analyze", "togliatti")
    assert code == 0 and '"dims":[2,4,5]' in out


def test_analyze_file(tmp_path, capsys):
    f = tmp_path / "conic.var"
    f.write_text("vars=u; P0=1; P1=u; P2=u^2\n")
    code, out, _ = run(capsys, "analyze", str(f), "--format", "markdown")
    assert code == 0 and out.startswith("# conic")


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "analyze", "veronese", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["dims"] == [2, 5, 5]


def test_catalog_listing(capsys):
    code, out, _ = run(capsys, "catalog", "--list")
    assert code == 0 and out.split() == [V.name for V in catalog()]
    code, out, _ = run(capsys, "catalog", "--name", "togliatti")
    assert parse_variety(out).name == "togliatti"


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all")
    data = json.loads(out)
    assert code == 0 and data["summary"]["FAIL"] == 0
    assert [r["variety"] for r in data["reports"]] == [V.name for V in catalog()]


@pytest.mark.parametrize("argv, code", [
    (["analyze", "no-such-variety"], 2),
    (["analyze", "togliatti", "--max-order", "1"], 2),
    (["catalog", "--name", "nope"], 2),
    (["analyze", "togliatti", "--max-order", "30"], 3),
])
def test_error_exit_codes(capsys, argv, code):
    assert main(argv) == code
    assert capsys.readouterr().err.startswith("osculate:")


def test_parse_error_exit_code(tmp_path, capsys):
    f = tmp_path / "bad.var"
    f.write_text("vars=u; P0=1; P1=w")
    assert main(["analyze", str(f)]) == 2
    assert "line 1, column 18" in capsys.readouterr().err


def test_genericity_exit_code(monkeypatch, capsys):
    from osculate.errors import GenericityFailure
    from osculate.harness import cli

    def fail(V, cfg):
        raise GenericityFailure("no generic sample")

    monkeypatch.setattr(cli, "run_suite", fail)
    assert main(["analyze", "togliatti"]) == 4
    assert "genericity" in capsys.readouterr().err
