import pytest

from skewcat.core.fincat import (FinFunctor, chain_category, compose_functors, discrete_category,
                                 identity_functor)
from skewcat.core.report import STRUCTURAL, TAG_INVENTORY
from skewcat.modules.fixtures import (chain_closures, closure_carriers, hom_bundle, preorder_functor,
                                      two_point_profunctor)
from skewcat.modules.mwmonads import check_mw_monad, enumerate_mw
from skewcat.modules.normalize import normalize
from skewcat.modules.profhom import (check_hom_structure, check_prof, check_triangle_identities, counit_cofork_cases,
                                     endo_moncat, find_prof_iso, hom_prof, hom_skew_moncat, hom_tensor, hom_unit,
                                     hom_wedge, inclusion_functor, is_functor_valued, lower_star,
                                     monoid_dictionary, monoid_to_mw, mw_to_monoid, natural_families,
                                     prof_compose, relation_prof, restrict, restriction_action, truncate,
                                     u_functor, upper_star)
from skewcat.modules.skewstruct import (check_monoidal_functor, check_skew_moncat, enumerate_monoids, is_normal,
                                        is_right_normal)
from skewcat.utils.config import BoundsConfig
from skewcat.utils.errors import BoundExceededError, PreconditionError, StructuralError


def coend_sizes(g, f):
    """Connected components of the coend graph per cell, by depth-first search."""
    A, B, C = f.dom, f.cod, g.cod
    sizes = {}
    for c in C.objects:
        for a in A.objects:
            nodes = {(b, x, y) for b in B.objects for x in g.values[(c, b)] for y in f.values[(b, a)]}
            edges = {n: set() for n in nodes}
            for beta in B.morphisms:
                for x in g.values[(c, B.src[beta])]:
                    for y in f.values[(B.tgt[beta], a)]:
                        u = (B.tgt[beta], g.right[(beta, c)][x], y)
                        v = (B.src[beta], x, f.left[(beta, a)][y])
                        edges[u].add(v)
                        edges[v].add(u)
            seen, components = set(), 0
            for n in nodes:
                if n in seen:
                    continue
                components += 1
                stack = [n]
                while stack:
                    m = stack.pop()
                    if m not in seen:
                        seen.add(m)
                        stack.extend(edges[m] - seen)
            sizes[(c, a)] = components
    return sizes


def z2_functors(z2):
    return [identity_functor(z2), FinFunctor(z2, z2, {"*": "*"}, {"0": "0", "1": "0"}, name="zero")]


def ch3_closures():
    c = chain_category(3)
    return [preorder_functor(c, c, d, name="cl" + "".join(d[a] for a in c.objects)) for d in chain_closures(3)]


def test_closure_operators_on_chains():
    assert len(chain_closures(2)) == 2
    assert len(chain_closures(3)) == 4
    assert all(d["2"] == "2" for d in chain_closures(3))


@pytest.mark.parametrize("P", [
    lambda: hom_prof(chain_category(3)),
    lambda: upper_star(preorder_functor(chain_category(2), chain_category(3), {"0": "0", "1": "2"})),
    lambda: closure_carriers(3)[0],
])
def test_profunctors_validate(P):
    assert check_prof(P()).ok


def test_relation_must_be_down_closed(ch2):
    A = discrete_category(ch2.objects)
    report = check_prof(relation_prof(A, ch2, frozenset({("1", "1")})))
    assert report.entry("structure.left").status == STRUCTURAL


def test_composition_needs_matching_middle(ch2, ch3):
    with pytest.raises(StructuralError):
        prof_compose(hom_prof(ch2), hom_prof(ch3))


@pytest.mark.parametrize("pick", ["ch3", "z2"])
def test_composite_of_lower_stars(pick, z2):
    functors = ch3_closures() if pick == "ch3" else z2_functors(z2)
    for g in functors:
        for f in functors:
            gf = prof_compose(lower_star(g), lower_star(f))
            assert check_prof(gf).ok
            expected = lower_star(compose_functors(g, f))
            assert {cell: len(v) for cell, v in gf.values.items()} == coend_sizes(lower_star(g), lower_star(f))
            assert find_prof_iso(gf, expected) is not None


def test_hom_is_a_unit_for_composition(z2):
    P = lower_star(z2_functors(z2)[1])
    assert find_prof_iso(prof_compose(hom_prof(z2), P), P) is not None
    assert find_prof_iso(prof_compose(P, hom_prof(z2)), P) is not None


def test_natural_families(z2):
    H = hom_prof(z2)
    assert len(natural_families(H, H)) == 2
    assert len(natural_families(H, H, bijective=True)) == 2
    with pytest.raises(BoundExceededError):
        natural_families(H, H, max_candidates=1)


@pytest.mark.parametrize("f", [
    lambda z2: identity_functor(z2),
    lambda z2: z2_functors(z2)[1],
    lambda z2: preorder_functor(chain_category(2), chain_category(3), {"0": "0", "1": "2"}),
])
def test_triangle_identities(f, z2):
    assert check_triangle_identities(f(z2)).ok


def test_unit_only_fragment(ch3):
    h = hom_skew_moncat(ch3)
    assert list(h.relations) == ["i"]
    assert check_skew_moncat(h.moncat).ok


@pytest.mark.parametrize("bundle,count,right_normal", [
    ("hom_ch2", 3, False),
    ("hom_ch3", 5, True),
])
def test_hom_fragments_are_skew_monoidal(bundle, count, right_normal, request):
    h = request.getfixturevalue(bundle).hom_moncat()
    assert len(h.relations) == count
    assert check_skew_moncat(h.moncat).ok
    assert is_right_normal(h.moncat) == right_normal


def test_fragment_of_terminal_category():
    h = hom_bundle(0).hom_moncat()
    assert check_skew_moncat(h.moncat).ok
    assert monoid_dictionary(h).ok


def test_fragment_needs_discrete_domain(ch3):
    with pytest.raises(PreconditionError):
        hom_skew_moncat(ch3, closure_carriers(3))


def test_fragment_must_be_closed_when_asked(hom_ch2):
    with pytest.raises(PreconditionError):
        hom_skew_moncat(hom_ch2.B, hom_ch2.hom, closure=False)


def test_fragment_bound(hom_ch3):
    with pytest.raises(BoundExceededError):
        hom_ch3.hom_moncat(BoundsConfig(closure_bound=3))


def test_restriction_forgets_the_right_action(hom_ch3):
    P = hom_ch3.endo[1]
    R = restrict(P)
    assert R.dom.is_discrete()
    assert truncate(R) == truncate(P)
    assert check_prof(R).ok
    assert is_functor_valued(R)


def test_non_functor_valued_carrier(hom_ch2):
    assert not is_functor_valued(hom_ch2.hom[0])


@pytest.mark.parametrize("bundle", ["hom_ch2", "hom_ch3"])
def test_u_is_a_normal_monoidal_functor(bundle, request):
    b = request.getfixturevalue(bundle)
    u = u_functor(b.endo_moncat(), b.hom_moncat())
    assert check_monoidal_functor(u).ok
    assert is_normal(u)


def test_u_needs_an_endo_fragment(hom_ch3):
    h = hom_ch3.hom_moncat()
    with pytest.raises(PreconditionError):
        u_functor(h, h)


def test_u_builds_its_target(hom_ch3):
    u = u_functor(endo_moncat(hom_ch3.B, hom_ch3.endo))
    assert check_monoidal_functor(u).ok


@pytest.mark.parametrize("bundle,monoids", [("hom_ch2", 2), ("hom_ch3", 4)])
def test_monoids_match_mw_monads(bundle, monoids, request):
    h = request.getfixturevalue(bundle).hom_moncat()
    report = monoid_dictionary(h)
    assert report.ok
    assert report.meta == {"monoids": monoids, "functor_valued": monoids, "mw_monads": monoids}
    assert report.tags() == []
    assert report.passed("bijection")


def test_mw_monad_carriers_round_trip(hom_ch3):
    h = hom_ch3.hom_moncat()
    for t in enumerate_mw(h.B):
        m = mw_to_monoid(t, h)
        back = monoid_to_mw(m, h)
        assert check_mw_monad(back).ok
        assert dict(back.D) == dict(t.D)


def test_mw_translation_needs_a_thin_base(z2):
    h = hom_skew_moncat(z2)
    (m,) = enumerate_monoids(h.moncat)
    with pytest.raises(PreconditionError, match="not thin"):
        monoid_to_mw(m, h)


def test_set_valued_tensor_keeps_elements(ch2):
    i = hom_unit(ch2)
    T = hom_tensor(i, i)
    assert check_prof(T).ok
    assert [len(T.values[("0", a)]) for a in ch2.objects] == [1, 2]
    coend = prof_compose(i, prof_compose(upper_star(inclusion_functor(ch2)), i))
    assert find_prof_iso(T, coend) is not None


def test_set_valued_tensor_needs_discrete_domain(ch2):
    with pytest.raises(PreconditionError):
        hom_tensor(hom_prof(ch2), hom_prof(ch2))


def test_set_valued_structure_over_a_chain(hom_ch2):
    objects = [hom_ch2.hom[0], restrict(hom_ch2.endo[0])]
    report = check_hom_structure(hom_ch2.B, objects)
    assert report.ok
    assert report.passed("tensor-coend")
    assert set(report.tags()) == set(TAG_INVENTORY["skew-axioms"])
    assert report.meta["right_normal"] is False


def test_set_valued_fragment_is_not_thin():
    P = two_point_profunctor()
    h = hom_skew_moncat(P.cod, [P], values="sets")
    assert h.set_valued
    assert list(h.profs) == ["i", "P", "(P*P)"]
    assert h.profunctor("P") is h.profs["P"]
    assert len(h.moncat.base.hom("P", "P")) == 4
    assert len(h.moncat.base.morphisms) == 8
    assert check_skew_moncat(h.moncat).ok
    assert is_right_normal(h.moncat)
    n = normalize(h.moncat)
    assert n.report.ok
    assert len(n.modules) == 3


def test_set_valued_fragment_over_a_chain_does_not_close(ch2):
    with pytest.raises(BoundExceededError):
        hom_skew_moncat(ch2, values="sets", bounds=BoundsConfig(closure_bound=6))


def test_set_valued_fragment_must_be_closed_when_asked():
    P = two_point_profunctor()
    with pytest.raises(PreconditionError):
        hom_skew_moncat(P.cod, [P], values="sets", closure=False)


def test_unknown_hom_values(ch2):
    with pytest.raises(ValueError):
        hom_skew_moncat(ch2, values="bags")


def test_unit_wedge_quotients_the_tensor(ch2):
    i = hom_unit(ch2)
    W, q = hom_wedge(i, restriction_action(hom_prof(ch2)), i)
    assert check_prof(W).ok
    assert hom_tensor(i, i).size() == 4
    assert W.size() == 3
    assert find_prof_iso(W, i) is not None
    assert q[("0", "1")][("0", "0<=0", "0<=1")] == q[("0", "1")][("1", "0<=1", "1<=1")]


def test_wedge_of_restrictions_is_restriction_of_composite(hom_ch3):
    for g in hom_ch3.endo:
        for f in hom_ch3.endo:
            W, _ = hom_wedge(restrict(g), restriction_action(g), restrict(f))
            assert find_prof_iso(W, restrict(prof_compose(g, f))) is not None


@pytest.mark.parametrize("pick", ["hom", "carriers"])
def test_counit_exhibits_a_coequalizer(pick, ch2, hom_ch2):
    carriers = [hom_prof(ch2)] if pick == "hom" else hom_ch2.endo
    i = inclusion_functor(ch2)
    E = prof_compose(lower_star(i), upper_star(i))
    for g in carriers:
        cases = list(counit_cofork_cases(g))
        assert cases and all(ok for _, ok in cases)
        assert prof_compose(g, E).size() > g.size()
