from itertools import product

import pytest

from skewcat.core.colimits import (Cofork, check_preservation_by_right_tensor, coequalizer_search,
                                   preservation_failure)
from skewcat.core.fincat import find_inverse, validate_category
from skewcat.core.report import TAG_INVENTORY
from skewcat.modules.fixtures import hom_bundle
from skewcat.modules.mwmonads import check_monad
from skewcat.modules.normalize import (count_factorizations, enumerate_imodules, factor_through_normalization,
                                       factorizes, is_imodule, module_category, normalize,
                                       right_normal_inverses, theorem2_instance, unit_monad, wedge, wedge_pair)
from skewcat.modules.profhom import POINT, hom_tensor, hom_unit, hom_wedge, truncate
from skewcat.modules.skewstruct import (check_monoidal_functor, check_skew_moncat, enumerate_monoids,
                                        functor_as_monoid, identity_monoidal_functor, is_right_normal,
                                        monoid_as_functor, terminal_skew_moncat)
from skewcat.utils.config import BoundsConfig
from skewcat.utils.errors import BoundExceededError, PreconditionError


@pytest.mark.parametrize("pick", ["z2_strict", "skew_ch3"])
def test_unit_monad(pick, request):
    c = request.getfixturevalue(pick)
    assert check_monad(unit_monad(c)).ok


def test_modules_of_right_projection(skew_ch3):
    (m,) = enumerate_imodules(skew_ch3)
    assert m.key == ("2", "2<=2")
    assert not is_imodule(skew_ch3, "0", "0<=0")


def test_module_enumeration_bound(z2_strict):
    with pytest.raises(BoundExceededError):
        enumerate_imodules(z2_strict, BoundsConfig(max_hom_size=1))


def test_module_category(z2_strict):
    modules = enumerate_imodules(z2_strict)
    assert [m.key for m in modules] == [("*", "0")]
    base = module_category(z2_strict, modules)
    assert validate_category(base).ok
    assert len(base.morphisms) == 2


def test_wedge_of_unit_module(skew_ch3):
    (m,) = enumerate_imodules(skew_ch3)
    module, q = wedge(skew_ch3, m, m)
    assert module.key == m.key
    assert q == "2<=2"


@pytest.mark.parametrize("pick", ["z2_strict", "skew_ch3"])
def test_normalization_checks_every_diagram(pick, request):
    n = normalize(request.getfixturevalue(pick))
    assert n.report.ok
    assert set(n.report.tags()) == set(TAG_INVENTORY["normalization"])
    assert is_right_normal(n.modcat)
    assert check_monoidal_functor(n.U).ok


def test_normalization_of_a_non_right_normal_category(skew_ch3):
    assert not is_right_normal(skew_ch3)
    n = normalize(skew_ch3)
    assert len(n.modcat.base.objects) == 1
    assert len(right_normal_inverses(n)) == 1


def test_normalization_of_terminal():
    n = normalize(terminal_skew_moncat())
    assert n.report.ok
    assert len(n.modules) == 1


@pytest.mark.parametrize("bundle,modules", [("hom_ch2", 2), ("hom_ch3", 5)])
def test_normalization_of_hom_fragments(bundle, modules, request):
    n = normalize(request.getfixturevalue(bundle).hom_moncat().moncat)
    assert n.report.ok
    assert len(n.modules) == modules


def test_right_normal_functors_factor_uniquely(z2_strict):
    n = normalize(z2_strict)
    M = identity_monoidal_functor(z2_strict)
    N = factor_through_normalization(M, n)
    assert factorizes(M, N, n)
    assert check_monoidal_functor(N).ok
    assert count_factorizations(M, n) == 1


def test_factorization_needs_right_normal_domain(skew_ch3):
    n = normalize(skew_ch3)
    with pytest.raises(PreconditionError):
        factor_through_normalization(identity_monoidal_functor(skew_ch3), n)


@pytest.mark.parametrize("bundle", ["hom_ch2", "hom_ch3"])
def test_endo_category_matches_normalized_hom_category(bundle, request):
    b = request.getfixturevalue(bundle)
    report = theorem2_instance(b.B, b.endo, b.hom)
    assert report.ok
    for name in ("coequalizer-cofork", "wedge-restriction", "wedge-fragment", "fully-faithful",
                 "essentially-surjective", "monoid-bijection"):
        assert report.passed(name)


def test_endo_comparison_on_terminal():
    b = hom_bundle(0)
    assert theorem2_instance(b.B, b.endo, b.hom).ok


def test_reflection_is_skew_monoidal_but_not_right_normal(reflect):
    assert check_skew_moncat(reflect).ok
    assert not is_right_normal(reflect)
    assert len(reflect.base.hom("X", "Y")) == 2


def test_wedges_in_a_finite_category_do_not_quotient(reflect):
    n = normalize(reflect)
    assert n.report.ok
    assert [m.X for m in n.modules] == ["0", "X", "Y", "M"]
    assert is_right_normal(n.modcat)
    for m1, m2 in product(n.modules, repeat=2):
        u, v = wedge_pair(reflect, m1, m2)
        assert u == v
        _, q = wedge(reflect, m1, m2)
        assert find_inverse(reflect.base, q) is not None


def test_wedge_table_matches_pointwise_coequalizer(hom_ch2):
    h = hom_ch2.hom_moncat()
    n = normalize(h.moncat)
    i = hom_unit(h.B)
    for k1, k2 in product([m.key for m in n.modules], repeat=2):
        M, N = h.profunctor(k1[0]), h.profunctor(k2[0])
        action = {cell: dict.fromkeys(xs, POINT) for cell, xs in hom_tensor(M, i).values.items()}
        W, q = hom_wedge(M, action, N)
        assert truncate(W) == h.relations[n.modcat.ot(k1, k2)[0]]
        assert all(set(table.values()) == set(W.values[cell]) for cell, table in q.items())


def test_monoids_factor_through_normalization(reflect):
    n = normalize(reflect)
    moved = []
    for m in enumerate_monoids(reflect):
        M = monoid_as_functor(m)
        N = factor_through_normalization(M, n)
        assert factorizes(M, N, n)
        assert count_factorizations(M, n) == 1
        moved.append(functor_as_monoid(N))
    modules = enumerate_monoids(n.modcat)
    assert len(moved) == len(modules) == 4
    assert {(m.carrier, m.mult, m.unit) for m in moved} == {(m.carrier, m.mult, m.unit) for m in modules}


def test_right_tensor_does_not_preserve_a_coequalizer(reflect):
    cofork = coequalizer_search(reflect.base, "u", "v")
    assert cofork == Cofork("u", "v", "k")
    for z in reflect.base.objects:
        assert not check_preservation_by_right_tensor(reflect, cofork, z)
        assert preservation_failure(reflect.right_tensor(z), cofork) == {"apex": "K", "r": "k", "factorizations": "0"}
