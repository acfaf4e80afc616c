from dataclasses import replace
from itertools import product

import pytest
from hypothesis import given, settings

from skewcat.core.fincat import (FinCat, FinFunctor, NatTrans, check_functor, check_nat_trans,
                                 chain_category, cyclic_group_category, discrete_category,
                                 enumerate_functors, find_inverse, identity_functor, make_category,
                                 monoid_category, opposite_category, product_category,
                                 terminal_category, validate_category)
from skewcat.core.report import FAIL, PASS, STRUCTURAL
from skewcat.utils.errors import BoundExceededError, StructuralError

from strategies import BASE_CATEGORIES, magma_tables, preorders


def oracle_is_category(c: FinCat) -> bool:
    """Triple loop over all morphisms, independent of validate_category."""
    for f in c.morphisms:
        if c.comp.get((c.identity[c.tgt[f]], f)) != f:
            return False
        if c.comp.get((f, c.identity[c.src[f]])) != f:
            return False
    for h, g, f in product(c.morphisms, repeat=3):
        if c.tgt[f] == c.src[g] and c.tgt[g] == c.src[h]:
            if c.comp[(h, c.comp[(g, f)])] != c.comp[(c.comp[(h, g)], f)]:
                return False
    return True


@pytest.mark.parametrize("name", sorted(BASE_CATEGORIES))
def test_base_categories_validate(name):
    report = validate_category(BASE_CATEGORIES[name]())
    assert report.ok
    assert report.exit_code == 0


def test_chain_has_expected_homs(ch3):
    assert ch3.hom("0", "2") == ("0<=2",)
    assert ch3.hom("2", "0") == ()
    assert ch3.compose("1<=2", "0<=1") == "0<=2"


def test_compose_rejects_non_composable(ch3):
    with pytest.raises(StructuralError):
        ch3.compose("0<=1", "1<=2")


def test_broken_composite_is_reported(ch2):
    comp = dict(ch2.comp)
    comp[("0<=1", "0<=0")] = "0<=0"
    report = validate_category(replace(ch2, comp=comp))
    assert report.entry("composite-endpoints").status == FAIL
    assert report.exit_code == 1


def test_dangling_identity_is_structural():
    c = make_category(["x"], [("f", "x", "x")], {"x": "missing"}, {("f", "f"): "f"})
    report = validate_category(c)
    assert report.status == STRUCTURAL
    assert report.exit_code == 2


def test_non_associative_monoid_table():
    # (ab)a = a but a(ba) = e
    table = {("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a", ("a", "a"): "e",
             ("e", "b"): "b", ("b", "e"): "b", ("b", "b"): "b", ("a", "b"): "b", ("b", "a"): "a"}
    c = monoid_category(["e", "a", "b"], lambda g, f: table[(g, f)], "e")
    report = validate_category(c)
    assert report.entry("associativity").status == FAIL
    assert not oracle_is_category(c)


@settings(max_examples=100, deadline=None)
@given(magma_tables())
def test_validator_agrees_with_oracle_on_tables(c):
    assert validate_category(c).ok == oracle_is_category(c)


@settings(max_examples=100, deadline=None)
@given(preorders())
def test_preorders_are_categories(c):
    assert validate_category(c).ok
    assert oracle_is_category(c)


def test_product_and_opposite(ch2, z2):
    p = product_category(ch2, z2)
    assert validate_category(p).ok
    assert len(p.objects) == 2
    assert len(p.morphisms) == 3 * 2
    op = opposite_category(ch2)
    assert op.hom("1", "0") == ("0<=1",)
    assert validate_category(op).ok


@pytest.mark.parametrize("dom,cod,count", [
    (lambda: chain_category(2), lambda: chain_category(2), 3),
    (lambda: chain_category(3), lambda: chain_category(3), 10),
    (lambda: cyclic_group_category(2), lambda: cyclic_group_category(2), 2),
    (lambda: cyclic_group_category(3), lambda: cyclic_group_category(3), 3),
    (lambda: cyclic_group_category(2), lambda: cyclic_group_category(3), 1),
    (terminal_category, lambda: chain_category(3), 3),
])
def test_enumerate_functors_counts(dom, cod, count):
    found = enumerate_functors(dom(), cod())
    assert len(found) == count
    assert all(check_functor(F).ok for F in found)


def test_enumerate_functors_bound():
    with pytest.raises(BoundExceededError):
        enumerate_functors(chain_category(3), chain_category(3), max_candidates=2)


def test_check_functor_detects_broken_composition(z2):
    F = FinFunctor(z2, z2, {"*": "*"}, {"0": "0", "1": "0"}, name="zero")
    assert check_functor(F).ok
    G = FinFunctor(z2, z2, {"*": "*"}, {"0": "1", "1": "1"}, name="bad")
    assert not check_functor(G).ok


def test_check_functor_totality(ch2):
    F = FinFunctor(ch2, ch2, {"0": "0"}, {}, name="partial")
    assert check_functor(F).status == STRUCTURAL


def test_naturality(ch2):
    I = identity_functor(ch2)
    top = FinFunctor(ch2, ch2, {"0": "1", "1": "1"},
                     {"0<=0": "1<=1", "0<=1": "1<=1", "1<=1": "1<=1"}, name="top")
    assert check_nat_trans(NatTrans(I, top, {"0": "0<=1", "1": "1<=1"})).status == PASS
    assert check_nat_trans(NatTrans(I, top, {"0": "0<=0", "1": "1<=1"})).status == STRUCTURAL


def test_find_inverse(z3, ch2):
    assert find_inverse(z3, "1") == "2"
    assert find_inverse(ch2, "0<=1") is None


def test_discrete_category():
    d = discrete_category(["a", "b"])
    assert d.is_discrete()
    assert validate_category(d).ok


@pytest.fixture
def z3():
    return cyclic_group_category(3)
