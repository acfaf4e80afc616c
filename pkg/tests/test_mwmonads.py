from dataclasses import replace

import pytest

from skewcat.core.fincat import chain_category, cyclic_group_category, is_iso, validate_category
from skewcat.core.report import FAIL, STRUCTURAL
from skewcat.modules.mwmonads import (check_mw_algebra, check_mw_monad, em_to_mw_algebra,
                                      enumerate_em_algebras, enumerate_monads, enumerate_mw,
                                      enumerate_mw_algebras, identity_mw, kleisli_id, kleisli_mw, monad_to_mw,
                                      mw_algebra_to_em, mw_from_closure, mw_to_monad, require_valid)
from skewcat.utils.config import BoundsConfig
from skewcat.utils.errors import BoundExceededError, PreconditionError, StructuralError

TOP = {"0": "2", "1": "2", "2": "2"}


def monad_tables(m):
    return (dict(m.D.obj_map), dict(m.D.mor_map), dict(m.mult.components), dict(m.unit.components))


def classical_kleisli(m):
    """(g, f) -> m_Z o Dg o f on raw arrows X -> DY."""
    c, D = m.base, m.D
    comp = {}
    for x in c.objects:
        for y in c.objects:
            for f in c.hom(x, D.ob(y)):
                for z in c.objects:
                    for g in c.hom(y, D.ob(z)):
                        comp[((g, z), (f, y))] = (c.compose(m.mult[z], D(g), f), z)
    return comp


@pytest.mark.parametrize("c,count", [
    (chain_category(2), 2),
    (chain_category(3), 4),
    (cyclic_group_category(2), 2),
])
def test_monads_and_mw_monads_match_in_number(c, count):
    assert len(enumerate_monads(c)) == count
    assert len(enumerate_mw(c)) == count


def test_closure_mw_monads_on_ch3(ch3):
    found = enumerate_mw(ch3)
    images = sorted(tuple(t.D[x] for x in ch3.objects) for t in found)
    assert images == [("0", "1", "2"), ("0", "2", "2"), ("1", "1", "2"), ("2", "2", "2")]


def test_identity_and_top_closure(ch3):
    assert check_mw_monad(identity_mw(ch3)).ok
    report = check_mw_monad(mw_from_closure(ch3, TOP, name="top"))
    assert report.ok
    assert report.tags() == ["mw-extension-composition", "mw-extension-unit", "mw-unit-extension"]


@pytest.mark.parametrize("closure", [
    {"0": "2", "1": "1", "2": "2"},
    {"0": "1", "1": "2", "2": "2"},
    {"0": "0", "1": "0", "2": "2"},
])
def test_non_closures_are_rejected(ch3, closure):
    with pytest.raises(StructuralError):
        mw_from_closure(ch3, closure)


def test_wrong_unit_fails_extension_unit(z2):
    t = replace(identity_mw(z2), K={"*": "1"})
    report = check_mw_monad(t)
    assert report.entry("extension-unit").status == FAIL
    with pytest.raises(PreconditionError):
        require_valid(t)


def test_missing_extension_is_structural(ch3):
    report = check_mw_monad(replace(identity_mw(ch3), T={}))
    assert report.status == STRUCTURAL
    assert report.entry("structure.mw").witness["f"] == "0<=0"


@pytest.mark.parametrize("c", [chain_category(3), cyclic_group_category(2)])
def test_monad_round_trip(c):
    for m in enumerate_monads(c):
        back = mw_to_monad(monad_to_mw(m))
        assert monad_tables(back) == monad_tables(m)


@pytest.mark.parametrize("c", [chain_category(3), cyclic_group_category(2)])
def test_mw_round_trip(c):
    for t in enumerate_mw(c):
        back = monad_to_mw(mw_to_monad(t))
        assert dict(back.T) == dict(t.T)
        assert dict(back.K) == dict(t.K)
        assert dict(back.D) == dict(t.D)


@pytest.mark.parametrize("c", [chain_category(3), cyclic_group_category(2)])
def test_kleisli_matches_classical_construction(c):
    for t in enumerate_mw(c):
        k = kleisli_mw(t)
        assert validate_category(k).ok
        for ((g, z), (f, y)), (h, w) in classical_kleisli(mw_to_monad(t)).items():
            assert k.comp[(kleisli_id(t, g, z), kleisli_id(t, f, y))] == kleisli_id(t, h, w)


def test_top_closure_kleisli_is_codiscrete(ch3):
    k = kleisli_mw(mw_from_closure(ch3, TOP, name="top"))
    assert len(k.morphisms) == 9
    assert all(is_iso(k, m) for m in k.morphisms)


def test_identity_kleisli_is_the_base(ch3):
    k = kleisli_mw(identity_mw(ch3))
    assert set(k.morphisms) == set(ch3.morphisms)
    assert dict(k.comp) == dict(ch3.comp)


def test_enumeration_bound(ch3):
    with pytest.raises(BoundExceededError):
        enumerate_mw(ch3, BoundsConfig(max_morphisms=3))
    with pytest.raises(BoundExceededError):
        enumerate_mw(ch3, BoundsConfig(max_base_objects=2))
    with pytest.raises(BoundExceededError):
        enumerate_monads(ch3, BoundsConfig(max_candidates=1))


@pytest.mark.parametrize("closure,carriers", [
    ({"0": "0", "1": "1", "2": "2"}, ["0", "1", "2"]),
    ({"0": "1", "1": "1", "2": "2"}, ["1", "2"]),
    (TOP, ["2"]),
])
def test_algebras_are_fixed_points(ch3, closure, carriers):
    t = mw_from_closure(ch3, closure)
    found = enumerate_mw_algebras(t)
    assert [a.carrier for a in found] == carriers
    assert all(check_mw_algebra(a).ok for a in found)
    em = enumerate_em_algebras(mw_to_monad(t))
    assert sorted(a for a, _ in em) == carriers


def test_algebra_translation(ch3):
    t = mw_from_closure(ch3, TOP, name="top")
    (m_alg,) = enumerate_em_algebras(mw_to_monad(t))
    a = em_to_mw_algebra(t, *m_alg)
    assert check_mw_algebra(a).ok
    assert mw_algebra_to_em(a) == m_alg[1]


def test_mistyped_algebra(ch3):
    t = identity_mw(ch3)
    (a, *_) = enumerate_mw_algebras(t)
    report = check_mw_algebra(replace(a, E={}))
    assert report.status == STRUCTURAL
