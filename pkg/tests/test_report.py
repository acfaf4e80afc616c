import json

import pytest

from skewcat import __version__
from skewcat.core.report import (FAIL, FALSIFICATION, PASS, PRECONDITION, STRUCTURAL, TAG_INVENTORY,
                                 Report, label)
from skewcat.utils.errors import BoundExceededError, StructuralError


def sample_report():
    report = Report("sample", "test")
    report.law("commutes", [({"x": "a"}, 1, 1), ({"x": ("b", "c")}, 2, 3)], tag="skew-pentagon")
    report.predicate("holds", [({"x": "a"}, True)], tag="skew-unit-unit")
    return report


def test_tag_inventory_sizes():
    sizes = {family: len(tags) for family, tags in TAG_INVENTORY.items()}
    assert sizes == {
        "mw-monad": 3,
        "mw-algebra": 2,
        "skew-axioms": 5,
        "warping-axioms": 5,
        "algebra-axioms": 3,
        "hom-monoid": 3,
        "normalization": 11,
    }
    every = [tag for tags in TAG_INVENTORY.values() for tag in tags]
    assert len(every) == len(set(every))


def test_law_stops_at_first_mismatch():
    report = sample_report()
    entry = report.entry("commutes")
    assert entry.status == FAIL
    assert entry.checked == 2
    assert entry.witness == {"x": "<b,c>", "lhs": "2", "rhs": "3"}
    assert report.passed("holds")
    assert report.exit_code == 1


def test_falsification_and_severity():
    report = Report("s")
    report.law("derived", [({}, 0, 1)], falsification=True)
    assert report.status == FALSIFICATION
    assert report.exit_code == 4
    report.record("broken", STRUCTURAL)
    assert report.status == STRUCTURAL
    assert report.exit_code == 2


def test_structural_error_inside_law():
    def cases():
        yield {}, 1, 1
        raise StructuralError("missing component")

    report = Report("s")
    entry = report.law("partial", cases())
    assert entry.status == STRUCTURAL
    assert "missing component" in entry.detail


def test_guard_records_preconditions():
    report = Report("s")

    def exceed():
        raise BoundExceededError("too many")

    assert report.guard("bounded", exceed) is None
    assert report.entry("bounded").status == PRECONDITION
    assert report.exit_code == 3
    assert report.guard("fine", lambda: 7) == 7


def test_json_round_trip():
    report = sample_report()
    report.meta["seed"] = 3
    data = json.loads(report.to_json())
    assert data["version"] == __version__
    assert data["summary"][FAIL] == 1
    again = Report.from_dict(data)
    assert again.to_dict() == report.to_dict()
    assert again.tags() == ["skew-pentagon", "skew-unit-unit"]


def test_merge_prefixes_names():
    report = Report("outer")
    report.merge(sample_report(), prefix="inner.")
    assert [e.name for e in report.entries] == ["inner.commutes", "inner.holds"]
    with pytest.raises(KeyError):
        report.entry("commutes")


def test_text_rendering_lists_failures():
    text = sample_report().to_text()
    assert "=== sample (test) ===" in text
    assert "--- commutes: fail ---" in text


def test_digest(tmp_path):
    path = tmp_path / "input.json"
    path.write_text("{}")
    report = Report("s")
    report.add_digest(path)
    assert report.meta["inputs"][str(path)] == (
        "44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a"
    )


@pytest.mark.parametrize("value,text", [
    ("x", "x"),
    (3, "3"),
    (("a", ("b", 1)), "<a,<b,1>>"),
    (frozenset({"b", "a"}), "{a,b}"),
])
def test_label(value, text):
    assert label(value) == text


def test_empty_report_passes():
    assert Report("empty").status == PASS
