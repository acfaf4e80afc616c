from dataclasses import replace

import pytest

from skewcat.core.fincat import chain_category, cyclic_group_category
from skewcat.core.report import FALSIFICATION, PASS, PRECONDITION, STRUCTURAL
from skewcat.modules.mwmonads import (enumerate_mw, enumerate_mw_algebras, identity_mw, kleisli_mw,
                                      mw_from_closure)
from skewcat.modules.skewstruct import (check_skew_bicat, locally_discrete, suspension,
                                        underlying_category)
from skewcat.modules.warpings import (axiom_trace, check_redundancy_algebra, check_redundancy_warping,
                                      check_skew_warping, check_warping_algebra, free_algebra,
                                      identity_warping, is_warping, kleisli_warping,
                                      mw_algebra_as_warping_algebra, mw_as_warping, warping_as_mw)
from skewcat.utils.errors import PreconditionError


@pytest.fixture
def sz2(z2_strict):
    return suspension(z2_strict)


def test_identity_warping_on_strict_z2(sz2):
    w = identity_warping(sz2)
    report = check_skew_warping(w)
    assert report.ok
    assert report.tags() == ["warping-pentagon", "warping-right-unit", "warping-left-unit",
                             "warping-unit-associator", "warping-unit-unit"]
    assert is_warping(w)


def test_identity_warping_on_a_skew_ambient(skew_ch3):
    w = identity_warping(suspension(skew_ch3))
    assert check_skew_warping(w).ok
    assert not is_warping(w)
    assert check_skew_bicat(kleisli_warping(w)).ok


def test_axiom_trace_of_identity_warping(skew_ch3):
    report = axiom_trace(identity_warping(suspension(skew_ch3)))
    assert [e.status for e in report.entries] == [PASS] * 5
    assert report.entry("axiom-1").uses == ["ambient.axiom-1", "warping.axiom-1"]


def test_missing_component_is_structural(sz2):
    w = replace(identity_warping(sz2), v0={})
    report = check_skew_warping(w)
    assert report.status == STRUCTURAL
    assert axiom_trace(w).status == STRUCTURAL


def test_twisted_unit_component_fails(sz2):
    w = identity_warping(sz2)
    twisted = replace(w, k={key: "1" for key in w.k})
    report = check_skew_warping(twisted)
    assert report.passed("naturality.k")
    assert not report.passed("axiom-5")
    assert report.exit_code == 1


@pytest.mark.parametrize("c", [chain_category(3), cyclic_group_category(2)])
def test_mw_monads_are_warpings_on_locally_discrete(c):
    for t in enumerate_mw(c):
        w = mw_as_warping(t)
        assert check_skew_warping(w).ok
        assert dict(warping_as_mw(w).T) == dict(t.T)


def test_broken_mw_monad_gives_mistyped_warping(z2):
    t = replace(identity_mw(z2), K={"*": "1"})
    report = check_skew_warping(mw_as_warping(t))
    assert report.entry("structure.warping").status == STRUCTURAL


def test_warping_as_mw_needs_locally_discrete(sz2):
    with pytest.raises(PreconditionError):
        warping_as_mw(identity_warping(sz2))


@pytest.mark.parametrize("c", [chain_category(3), cyclic_group_category(2)])
def test_kleisli_construction_agrees_with_mw_kleisli(c):
    for t in enumerate_mw(c):
        bt = kleisli_warping(mw_as_warping(t))
        assert check_skew_bicat(bt).ok
        under = underlying_category(bt)
        expected = kleisli_mw(t)
        assert set(under.morphisms) == set(expected.morphisms)
        assert dict(under.comp) == dict(expected.comp)
        assert dict(under.identity) == dict(expected.identity)


@pytest.mark.parametrize("b", [locally_discrete(chain_category(3)), locally_discrete(cyclic_group_category(3))])
def test_redundancy_on_identity_warpings(b):
    report = check_redundancy_warping(identity_warping(b))
    assert [e.name for e in report.entries] == ["axiom-3", "axiom-4", "axiom-5"]
    assert report.ok


def test_redundancy_needs_a_bicategory(skew_ch3):
    report = check_redundancy_warping(identity_warping(suspension(skew_ch3)))
    assert report.entry("precondition.bicategory").status == PRECONDITION
    assert report.exit_code == 3


def test_redundancy_needs_axioms_1_and_2(sz2):
    w = identity_warping(sz2)
    twisted = replace(w, k={key: "1" for key in w.k})
    report = check_redundancy_warping(twisted)
    assert report.entry("precondition.axioms-1-2").status == PRECONDITION
    assert FALSIFICATION not in {e.status for e in report.entries}


def test_free_algebras(sz2):
    w = identity_warping(sz2)
    report = check_warping_algebra(free_algebra(w, "*"))
    assert report.ok
    assert report.tags() == ["algebra-pentagon", "algebra-unit", "algebra-unit-associator"]


def test_free_algebras_of_closures(ch3):
    w = mw_as_warping(mw_from_closure(ch3, {"0": "1", "1": "1", "2": "2"}))
    for x in ch3.objects:
        assert check_warping_algebra(free_algebra(w, x)).ok


def test_mw_algebras_become_warping_algebras(ch3):
    t = mw_from_closure(ch3, {"0": "2", "1": "2", "2": "2"}, name="top")
    w = mw_as_warping(t)
    for a in enumerate_mw_algebras(t):
        assert check_warping_algebra(mw_algebra_as_warping_algebra(a, w)).ok


def test_algebra_redundancy(ch3):
    w = identity_warping(locally_discrete(ch3))
    report = check_redundancy_algebra(free_algebra(w, "0"))
    assert [e.name for e in report.entries] == ["axiom-3"]
    assert report.ok


def test_algebra_redundancy_needs_a_warping(skew_ch3):
    w = identity_warping(suspension(skew_ch3))
    report = check_redundancy_algebra(free_algebra(w, "*"))
    assert report.status == PRECONDITION
