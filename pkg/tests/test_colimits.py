import pytest
from hypothesis import given, settings, strategies as st

from skewcat.core.colimits import (Cofork, UnionFind, check_preservation, check_preservation_by_right_tensor,
                                   coequalizer_finset, coequalizer_search, factor_through, is_colimiting,
                                   quotient)
from skewcat.core.fincat import (FinFunctor, FinSetMap, FinSetObj, chain_category,
                                 cyclic_group_category, make_category, monoid_category)
from skewcat.utils.errors import PreconditionError, StructuralError

from strategies import preorders


def naive_colimiting(c, u, v):
    """Every q under (u, v) through which each cofork factors exactly once."""
    y = c.tgt[u]
    coforks = [q for q in c.morphisms if c.src[q] == y and c.comp[(q, u)] == c.comp[(q, v)]]
    found = []
    for q in coforks:
        unique = all(
            len([s for s in c.morphisms
                 if c.src[s] == c.tgt[q] and c.tgt[s] == c.tgt[r] and c.comp[(s, q)] == r]) == 1
            for r in coforks
        )
        if unique:
            found.append(q)
    return found


def idempotent_monoid():
    table = {("e", "e"): "e", ("e", "z"): "z", ("z", "e"): "z", ("z", "z"): "z"}
    return monoid_category(["e", "z"], lambda g, f: table[(g, f)], "e", name="Idem")


def fork_category():
    """u, v: X -> Y made equal by q: Y -> Q."""
    return make_category(
        ["X", "Y", "Q"],
        [("1X", "X", "X"), ("1Y", "Y", "Y"), ("1Q", "Q", "Q"),
         ("u", "X", "Y"), ("v", "X", "Y"), ("q", "Y", "Q"), ("w", "X", "Q")],
        {"X": "1X", "Y": "1Y", "Q": "1Q"},
        {
            ("1X", "1X"): "1X", ("1Y", "1Y"): "1Y", ("1Q", "1Q"): "1Q",
            ("u", "1X"): "u", ("1Y", "u"): "u", ("v", "1X"): "v", ("1Y", "v"): "v",
            ("q", "1Y"): "q", ("1Q", "q"): "q", ("w", "1X"): "w", ("1Q", "w"): "w",
            ("q", "u"): "w", ("q", "v"): "w",
        },
        name="Fork",
    )


def test_union_find_counts_merges():
    uf = UnionFind("abcd")
    assert uf.union("a", "b")
    assert uf.union("c", "b")
    assert not uf.union("a", "c")
    assert uf.merges == 2
    assert uf.size[uf.find("a")] == 3


def test_quotient_names_classes_by_least_member():
    reps, projection = quotient([1, 2, 3, 4], [(3, 1), (4, 4)])
    assert reps == (1, 2, 4)
    assert projection[3] == 1


def test_coequalizer_of_finite_sets():
    X = FinSetObj((0, 1), name="X")
    Y = FinSetObj(("a", "b", "c"), name="Y")
    u = FinSetMap(X, Y, {0: "a", 1: "b"})
    v = FinSetMap(X, Y, {0: "b", 1: "b"})
    Q, q = coequalizer_finset(u, v)
    assert Q.elements == ("a", "c")
    assert q("b") == "a"
    assert all(q(u(x)) == q(v(x)) for x in X)


def test_coequalizer_of_non_parallel_maps():
    X = FinSetObj((0,), name="X")
    Y = FinSetObj(("a",), name="Y")
    with pytest.raises(StructuralError):
        coequalizer_finset(FinSetMap(X, Y, {0: "a"}), FinSetMap(Y, Y, {"a": "a"}))


def test_reflexive_pair_in_chain(ch3):
    cofork = coequalizer_search(ch3, "0<=1", "0<=1")
    assert cofork == Cofork("0<=1", "0<=1", "1<=1")


def test_fork_is_coequalized_by_q():
    c = fork_category()
    assert coequalizer_search(c, "u", "v") == Cofork("u", "v", "q")
    assert factor_through(c, "q", "q") == "1Q"


def test_no_coequalizer_in_groups():
    z2 = cyclic_group_category(2)
    assert coequalizer_search(z2, "0", "1") is None
    assert naive_colimiting(z2, "0", "1") == []


def test_no_coequalizer_in_idempotent_monoid():
    c = idempotent_monoid()
    assert coequalizer_search(c, "e", "z") is None
    with pytest.raises(PreconditionError):
        factor_through(c, "z", "z")


def test_search_rejects_non_parallel(ch3):
    with pytest.raises(StructuralError):
        coequalizer_search(ch3, "0<=1", "1<=2")


@pytest.mark.parametrize("build", [idempotent_monoid, fork_category,
                                   lambda: cyclic_group_category(3), lambda: chain_category(3)])
def test_search_matches_exhaustive_enumeration(build):
    c = build()
    for u in c.morphisms:
        for v in c.hom(c.src[u], c.tgt[u]):
            found = naive_colimiting(c, u, v)
            result = coequalizer_search(c, u, v)
            assert (result is None) == (not found)
            assert result is None or result.q in found


@settings(max_examples=60, deadline=None)
@given(preorders(), st.data())
def test_search_matches_exhaustive_enumeration_on_preorders(c, data):
    u = data.draw(st.sampled_from(c.morphisms))
    found = naive_colimiting(c, u, u)
    result = coequalizer_search(c, u, u)
    assert result is not None
    assert result.q in found


def test_preservation_failure():
    c = fork_category()
    cofork = coequalizer_search(c, "u", "v")
    assert is_colimiting(c, cofork)
    F = FinFunctor(c, c, {"X": "Y", "Y": "Y", "Q": "Q"},
                   {"1X": "1Y", "1Y": "1Y", "1Q": "1Q", "u": "1Y", "v": "1Y", "q": "q", "w": "q"},
                   name="collapse")
    assert not check_preservation(F, cofork)
    identity = FinFunctor(c, c, {x: x for x in c.objects}, {m: m for m in c.morphisms})
    assert check_preservation(identity, cofork)


def test_right_tensor_preserves_identity_cofork(skew_ch3):
    cofork = coequalizer_search(skew_ch3.base, "0<=0", "0<=0")
    assert cofork.q == "0<=0"
    for z in skew_ch3.base.objects:
        assert check_preservation_by_right_tensor(skew_ch3, cofork, z)
    with pytest.raises(PreconditionError):
        check_preservation_by_right_tensor(skew_ch3, Cofork("0<=0", "0<=0", "0<=1"), "2")
