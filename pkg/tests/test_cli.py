import json
import logging
from dataclasses import replace

import pytest
from click.testing import CliRunner

from skewcat.__main__ import cli
from skewcat.cli.commands import check, fixtures, mw, normalize, prof, report, theorem2, warping
from skewcat.core.io import dump, load_input
from skewcat.utils.logger import PACKAGE, set_verbosity


@pytest.fixture
def runner():
    return CliRunner()


def read_report(path):
    with open(path) as f:
        return json.load(f)


def test_commands_are_discovered(runner):
    result = runner.invoke(cli, ["--help"])
    assert result.exit_code == 0
    for name in ("check", "mw", "normalize", "theorem2", "warping"):
        assert name in result.output


def test_quiet_flag_raises_log_level(runner):
    root = logging.getLogger(PACKAGE)
    try:
        result = runner.invoke(cli, ["-q", "fixtures", "list"])
        assert result.exit_code == 0
        assert root.level == logging.WARNING
    finally:
        set_verbosity(0)


def test_check_fixture(runner):
    result = runner.invoke(check.main, ["fixture", "z2-strict"])
    assert result.exit_code == 0


def test_check_category_json(runner, tmp_path):
    out = tmp_path / "ch3.json"
    result = runner.invoke(check.main, ["category", "fixture:ch3", "--format", "json", "-o", str(out)])
    assert result.exit_code == 0
    data = read_report(out)
    assert data["status"] == "pass"
    assert data["entries"]


def test_failing_axiom_exits_1(runner, z2_strict, write_json, tmp_path):
    path = write_json("bad.json", dump(replace(z2_strict, rho={"*": "1"})))
    out = tmp_path / "report.json"
    result = runner.invoke(check.main, ["skew-moncat", path, "--format", "json", "-o", str(out)])
    assert result.exit_code == 1
    assert path in read_report(out)["meta"]["inputs"]


def test_unreadable_input_exits_2(runner, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{")
    assert runner.invoke(check.main, ["category", str(path)]).exit_code == 2
    assert runner.invoke(check.main, ["category", "fixture:z2-strict"]).exit_code == 2


def test_mw_enumerate(runner):
    result = runner.invoke(mw.main, ["enumerate", "fixture:ch3"])
    assert result.exit_code == 0
    assert "4 mw-monads on Ch3" in result.output


def test_normalize_writes_modules(runner, tmp_path):
    modcat = tmp_path / "modcat.json"
    out = tmp_path / "report.json"
    result = runner.invoke(normalize.main, ["fixture:skew-ch3", "--modcat", str(modcat),
                                            "--format", "json", "-o", str(out)])
    assert result.exit_code == 0
    assert read_report(out)["meta"]["modules"] == 1
    kind, _ = load_input(str(modcat))
    assert kind == "skew-moncat"


def test_warping_redundancy(runner):
    result = runner.invoke(warping.main, ["redundancy", "fixture:identity-warping-z2"])
    assert result.exit_code == 0


def test_set_valued_homcat(runner, tmp_path):
    out = tmp_path / "sets.json"
    result = runner.invoke(prof.main, ["homcat", "fixture:hom-ch2", "--values", "sets",
                                       "--format", "json", "-o", str(out)])
    assert result.exit_code == 0
    data = read_report(out)
    assert data["meta"]["right_normal"] is False
    assert data["meta"]["objects"][0] == "i"


def test_theorem2_needs_inputs(runner):
    assert runner.invoke(theorem2.main, []).exit_code == 2


def test_theorem2_from_bundle(runner):
    assert runner.invoke(theorem2.main, ["--bundle", "fixture:hom-ch2"]).exit_code == 0


def test_report_tags(runner):
    result = runner.invoke(report.main, ["tags"])
    assert result.exit_code == 0
    assert "normalization (11)" in result.output


def test_report_show_and_coverage(runner, tmp_path):
    out = tmp_path / "report.json"
    runner.invoke(check.main, ["fixture", "z2-strict", "--format", "json", "-o", str(out)])
    shown = runner.invoke(report.main, ["show", str(out)])
    assert shown.exit_code == 0
    assert "z2" in shown.output.lower()
    coverage = runner.invoke(report.main, ["coverage", str(out)])
    assert coverage.exit_code == 1
    assert "missing" in coverage.output


def test_fixtures_list(runner):
    result = runner.invoke(fixtures.main, ["list"])
    assert result.exit_code == 0
    assert "hom-ch3" in result.output


def test_fixtures_show(runner, tmp_path):
    out = tmp_path / "z2.json"
    assert runner.invoke(fixtures.main, ["show", "z2-strict", "-o", str(out)]).exit_code == 0
    kind, _ = load_input(str(out))
    assert kind == "skew-moncat"
