import json

import pytest

from skewcat.core.fincat import cyclic_group_category, validate_category
from skewcat.core.io import dump, dump_skew_moncat, load_document, load_input, read_json, write_json
from skewcat.modules.fixtures import FIXTURES, load_fixture
from skewcat.modules.mwmonads import mw_from_closure
from skewcat.modules.profhom import truncate
from skewcat.utils.errors import FormatError


def skew_doc(**overrides):
    doc = dump_skew_moncat(load_fixture("skew-ch3"))
    doc.update(overrides)
    return doc


def test_skew_moncat_survives_json(skew_ch3, tmp_path):
    path = tmp_path / "skew.json"
    write_json(dump(skew_ch3), path)
    kind, value = load_input(str(path))
    assert kind == "skew-moncat"
    assert value == skew_ch3


def test_missing_field_names_its_location():
    doc = skew_doc()
    del doc["rho"]
    with pytest.raises(FormatError) as info:
        load_document(doc, location="skew.json")
    assert "'rho' is a required property" in str(info.value)
    assert info.value.location == "skew.json:/"


def test_bad_identifier_names_its_path():
    with pytest.raises(FormatError) as info:
        load_document(skew_doc(unit={"not": "an identifier"}), location="skew.json")
    assert info.value.location == "skew.json:/unit"


@pytest.mark.parametrize("doc,kind", [
    ({"objects": []}, None),
    ({"kind": "sheaf"}, None),
    ({"kind": "category", "builder": "chain", "n": 2}, "skew-moncat"),
])
def test_kind_problems(doc, kind):
    with pytest.raises(FormatError):
        load_document(doc, kind)


def test_dangling_reference_is_a_format_error():
    doc = {"kind": "skew-bicat", "cells0": ["*"], "homs": [],
           "composition": [{"cells": ["*", "*", "*"], "obj": [], "mor": []}],
           "units": [], "alpha": [], "lambda": [], "rho": []}
    with pytest.raises(FormatError, match="inconsistent skew-bicat"):
        load_document(doc)


def test_invalid_json_reports_line_and_column(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"kind": "category",\n  "builder": }')
    with pytest.raises(FormatError) as info:
        read_json(path)
    assert info.value.location == f"{path}:2:14"


def test_missing_file(tmp_path):
    with pytest.raises(FormatError):
        read_json(tmp_path / "absent.json")


def test_monoid_builder():
    doc = {"kind": "category", "builder": "monoid", "elements": ["e", "a"], "unit": "e",
           "table": [["e", "e", "e"], ["e", "a", "a"], ["a", "e", "a"], ["a", "a", "e"]]}
    _, c = load_document(doc)
    assert validate_category(c).ok
    assert c.objects == ("*",)
    assert c.identity["*"] == "e"
    assert c.compose("a", "a") == "e"


def test_preorder_builder():
    doc = {"kind": "category", "builder": "preorder", "objects": ["a", "b", "c"],
           "leq": [["a", "b"], ["b", "c"], ["a", "c"]]}
    _, c = load_document(doc)
    assert validate_category(c).ok
    assert c.hom("a", "c") == ("a<=c",)
    assert c.hom("c", "a") == ()


def test_mw_monad_extension_rows(ch2):
    doc = {
        "kind": "mw-monad",
        "base": {"builder": "chain", "n": 2},
        "D": [["0", "1"], ["1", "1"]],
        "K": [["0", "0<=1"], ["1", "1<=1"]],
        "T": [["0", "0", "0<=1", "1<=1"], ["0", "1", "0<=1", "1<=1"],
              ["1<=1", "0", "1<=1"], ["1<=1", "1", "1<=1"]],
    }
    _, t = load_document(doc)
    assert dict(t.T) == dict(mw_from_closure(ch2, {"0": "1", "1": "1"}).T)


def test_relation_shorthand_in_hom_bundle():
    doc = {"kind": "hom-bundle", "base": {"builder": "chain", "n": 2},
           "hom": [{"name": "P", "relation": [["0", "0"], ["1", "0"]]}]}
    _, bundle = load_document(doc)
    (P,) = bundle.hom
    assert P.dom.is_discrete()
    assert truncate(P) == {("0", "0"), ("1", "0")}


def test_hom_bundle_fixture_survives_json():
    doc = json.loads(write_json(dump(load_fixture("hom-ch2"))))
    _, bundle = load_document(doc)
    assert len(bundle.hom_moncat().relations) == 3


def test_fixture_references():
    kind, c = load_input("fixture:z3")
    assert kind == "category"
    assert c == cyclic_group_category(3)
    with pytest.raises(FormatError):
        load_input("fixture:nothing")
    with pytest.raises(FormatError):
        load_input("fixture:z3", ["skew-moncat"])


def test_every_fixture_kind_is_known():
    from skewcat.core.io import SCHEMAS
    assert {f.kind for f in FIXTURES.values()} <= set(SCHEMAS)


def test_dump_rejects_unknown_values():
    with pytest.raises(FormatError):
        dump(object())
