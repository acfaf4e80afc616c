from dataclasses import replace

import pytest

from skewcat.core.fincat import chain_category, cyclic_group_category, validate_category
from skewcat.core.report import FAIL, FALSIFICATION, STRUCTURAL
from skewcat.modules.skewstruct import (Monoid, check_composition_functors, check_monoid,
                                        check_monoidal_functor, check_skew_bicat, check_skew_moncat,
                                        desuspension, enumerate_monoids, functor_as_monoid,
                                        identity_monoidal_functor, is_bicategory, is_normal,
                                        is_right_normal, locally_discrete, monoid_as_functor,
                                        suspension, terminal_skew_moncat, underlying_category)
from skewcat.utils.config import BoundsConfig
from skewcat.utils.errors import BoundExceededError, PreconditionError


def test_terminal_is_skew_monoidal():
    report = check_skew_moncat(terminal_skew_moncat())
    assert report.ok
    assert report.tags() == ["skew-pentagon", "skew-unit-middle", "skew-left-unit",
                             "skew-right-unit", "skew-unit-unit"]


def test_strict_cyclic_is_right_normal(z2_strict):
    assert check_skew_moncat(z2_strict).ok
    assert is_right_normal(z2_strict)


def test_right_projection_is_skew_but_not_right_normal(skew_ch3):
    report = check_skew_moncat(skew_ch3)
    assert report.ok
    assert report.kind == "skew-moncat"
    assert not is_right_normal(skew_ch3)
    assert not is_bicategory(suspension(skew_ch3))


def test_broken_rho_fails_unit_unit(z2_strict):
    broken = replace(z2_strict, rho={"*": "1"})
    report = check_skew_moncat(broken)
    assert report.entry("axiom-5").status == FAIL
    assert report.entry("axiom-5").witness["object"] == "*"
    assert report.exit_code == 1


def test_falsification_is_reported_separately(z2_strict):
    broken = replace(z2_strict, rho={"*": "1"})
    report = check_skew_moncat(broken, axioms=[5], falsify=[5])
    assert report.entry("axiom-5").status == FALSIFICATION
    assert report.exit_code == 4


def test_missing_component_is_structural(z2_strict):
    report = check_skew_moncat(replace(z2_strict, rho={}))
    assert report.status == STRUCTURAL
    assert [e.name for e in report.entries] == ["structure.rho"]


def test_suspension_round_trip(skew_ch3):
    b = suspension(skew_ch3)
    assert b.cells0 == ("*",)
    assert desuspension(b) == skew_ch3
    assert check_skew_bicat(b).ok


def test_desuspension_needs_one_object():
    with pytest.raises(PreconditionError):
        desuspension(locally_discrete(chain_category(2)))


@pytest.mark.parametrize("c", [chain_category(3), cyclic_group_category(2), cyclic_group_category(3)])
def test_locally_discrete_categories_are_bicategories(c):
    b = locally_discrete(c)
    assert check_composition_functors(b).ok
    assert check_skew_bicat(b).ok
    assert is_bicategory(b)
    under = underlying_category(b)
    assert validate_category(under).ok
    assert set(under.morphisms) == set(c.morphisms)


def test_monoids_of_strict_z2(z2_strict):
    found = enumerate_monoids(z2_strict)
    assert [(m.carrier, m.mult, m.unit) for m in found] == [("*", "0", "0"), ("*", "1", "1")]


def test_monoids_of_right_projection(skew_ch3):
    (m,) = enumerate_monoids(skew_ch3)
    assert (m.carrier, m.mult, m.unit) == ("2", "2<=2", "2<=2")


def test_mistyped_monoid(skew_ch3):
    report = check_monoid(Monoid(skew_ch3, "0", "0<=0", "0<=0"))
    assert report.status == STRUCTURAL


def test_monoid_enumeration_bound(z2_strict):
    with pytest.raises(BoundExceededError):
        enumerate_monoids(z2_strict, BoundsConfig(max_candidates=3))


def test_monoids_are_monoidal_functors_from_terminal(z2_strict):
    for m in enumerate_monoids(z2_strict):
        F = monoid_as_functor(m)
        assert check_monoidal_functor(F).ok
        assert functor_as_monoid(F) == m


def test_functor_as_monoid_needs_terminal_domain(z2_strict):
    with pytest.raises(PreconditionError):
        functor_as_monoid(identity_monoidal_functor(z2_strict))


def test_identity_monoidal_functor(skew_ch3):
    F = identity_monoidal_functor(skew_ch3)
    assert check_monoidal_functor(F).ok
    assert is_normal(F)
