"""
Named structures shipped with the package.

Every fixture passes its own validator; `fixture:NAME` can stand in for a
file argument on the command line.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence

from ..core.fincat import (FinCat, FinFunctor, Ident, chain_category, cyclic_group_category,
                           discrete_category, make_category, terminal_category, validate_category)
from ..core.report import Report
from ..utils.config import BoundsConfig
from ..utils.errors import FormatError
from .mwmonads import check_mw_monad, mw_from_closure
from .profhom import FinProf, HomSkewMonCat, endo_moncat, hom_skew_moncat, lower_star, relation_prof, restrict
from .skewstruct import (SkewMonCat, check_skew_bicat, check_skew_moncat, locally_discrete,
                         skew_moncat_from_functions, suspension, terminal_skew_moncat)
from .warpings import check_skew_warping, identity_warping


@dataclass(frozen=True)
class HomBundle:
    """A category B with object lists for K(B, B) and K(A, B).

    The K(A, B) fragment is generated by the hom list together with the
    restrictions P.i of the endo list.
    """
    B: FinCat
    endo: Sequence[FinProf]
    hom: Sequence[FinProf]

    def generators(self) -> List[FinProf]:
        return list(self.hom) + [restrict(P) for P in self.endo]

    def hom_moncat(self, bounds: Optional[BoundsConfig] = None, values: str = "truth") -> HomSkewMonCat:
        return hom_skew_moncat(self.B, self.generators(), bounds, values=values)

    def endo_moncat(self, bounds: Optional[BoundsConfig] = None) -> HomSkewMonCat:
        return endo_moncat(self.B, self.endo, bounds)


@dataclass(frozen=True)
class Fixture:
    name: str
    kind: str
    build: Callable[[], Any] = field(repr=False)
    description: str = ""


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def strict_cyclic_moncat(n: int) -> SkewMonCat:
    """Z/n as a strict monoidal category with one object; tensor is addition."""
    c = cyclic_group_category(n)
    return skew_moncat_from_functions(
        c, lambda x, y: "*", lambda f, g: str((int(f) + int(g)) % n), "*",
        {("*", "*", "*"): "0"}, {"*": "0"}, {"*": "0"}, name=f"Z{n}-strict",
    )


def right_projection_moncat(n: int) -> SkewMonCat:
    """Ch_n with X (x) Y = Y and unit the top; rho is not invertible for n > 1."""
    c = chain_category(n)
    top = c.objects[-1]
    return skew_moncat_from_functions(
        c, lambda x, y: y, lambda f, g: g, top,
        {(x, y, z): f"{z}<={z}" for x in c.objects for y in c.objects for z in c.objects},
        {x: f"{x}<={x}" for x in c.objects},
        {x: f"{x}<={top}" for x in c.objects},
        name=f"skew-Ch{n}",
    )


def reflection_category() -> FinCat:
    """0 initial, u, v: X -> Y coequalized by k: Y -> K, and e: K -> M.

    Every other hom set has at most one arrow: c = ku = kv, m = ek and
    d = mu = mv = ec.
    """
    objects = ["0", "X", "Y", "K", "M"]
    identity = {x: f"1_{x}" for x in objects}
    arrows = [("u", "X", "Y"), ("v", "X", "Y"), ("k", "Y", "K"), ("e", "K", "M"),
              ("m", "Y", "M"), ("c", "X", "K"), ("d", "X", "M")]
    morphisms = [(identity[x], x, x) for x in objects] + arrows + [(f"!{x}", "0", x) for x in objects[1:]]
    src = {f: s for f, s, _ in morphisms}
    tgt = {f: t for f, _, t in morphisms}
    composites = {("k", "u"): "c", ("k", "v"): "c", ("e", "k"): "m",
                  ("e", "c"): "d", ("m", "u"): "d", ("m", "v"): "d"}
    comp = {}
    for g, middle, _ in morphisms:
        for f in (f for f, _, t in morphisms if t == middle):
            if f == identity[middle]:
                comp[(g, f)] = g
            elif g == identity[middle]:
                comp[(g, f)] = f
            elif src[f] == "0":
                comp[(g, f)] = f"!{tgt[g]}"
            else:
                comp[(g, f)] = composites[(g, f)]
    return make_category(objects, morphisms, identity, comp, name="Refl")


def reflection_moncat() -> SkewMonCat:
    """X (x) Y = GX for the reflection G onto the full subcategory without K.

    G sends K to M and eta_K = e; unit the initial object, alpha identities,
    lambda the maps out of 0 and rho = eta. Not right normal, and - (x) Z
    does not preserve the coequalizer k of u and v.
    """
    c = reflection_category()
    G_ob = {x: x for x in c.objects}
    G_ob["K"] = "M"
    G = {f: f for f in c.morphisms}
    G.update({"k": "m", "c": "d", "e": "1_M", "1_K": "1_M", "!K": "!M"})
    eta = {x: c.identity[x] for x in c.objects}
    eta["K"] = "e"
    return skew_moncat_from_functions(
        c, lambda x, y: G_ob[x], lambda f, g: G[f], "0",
        {(x, y, z): c.identity[G_ob[x]] for x in c.objects for y in c.objects for z in c.objects},
        {x: c.identity["0"] if x == "0" else f"!{x}" for x in c.objects},
        eta,
        name="reflect-Refl",
    )


def two_point_profunctor() -> FinProf:
    """P on the discrete category {0, 1} with P(0, 1) = {x, y} and nothing else."""
    B = discrete_category(["0", "1"], name="D2")
    A = discrete_category(B.objects, name=f"ob{B.name}")
    values = {(b, a): ("x", "y") if (b, a) == ("0", "1") else () for b in B.objects for a in A.objects}
    left = {(beta, a): {x: x for x in values[(B.tgt[beta], a)]} for beta in B.morphisms for a in A.objects}
    right = {(alpha, b): {x: x for x in values[(b, A.src[alpha])]} for alpha in A.morphisms for b in B.objects}
    return FinProf(A, B, values, left, right, name="P")


def set_valued_moncat() -> SkewMonCat:
    """The set-valued fragment of K(ob D2, D2) on P: objects i, P and P i^* P = 0."""
    P = two_point_profunctor()
    return hom_skew_moncat(P.cod, [P], values="sets").moncat


def preorder_functor(c: FinCat, d: FinCat, obj_map: Mapping[Ident, Ident], name: str = "F") -> FinFunctor:
    """A monotone map between preorders with 'x<=y' arrows, as a functor."""
    return FinFunctor(
        c, d, dict(obj_map),
        {m: f"{obj_map[c.src[m]]}<={obj_map[c.tgt[m]]}" for m in c.morphisms},
        name=name,
    )


def chain_closures(n: int) -> List[Dict[str, str]]:
    """Closure operators on Ch_n: one per set of fixed points containing the top."""
    objects = [str(i) for i in range(n)]
    found = []
    for size in range(n):
        for rest in combinations(objects[:-1], size):
            fixed = sorted(set(rest) | {objects[-1]}, key=int)
            found.append({a: min((s for s in fixed if int(s) >= int(a)), key=int) for a in objects})
    return found


def closure_carriers(n: int) -> List[FinProf]:
    """d_* for every closure operator d on Ch_n, as profunctors Ch_n -|-> Ch_n."""
    c = chain_category(n)
    out = []
    for d in chain_closures(n):
        name = "cl" + "".join(d[a] for a in c.objects)
        P = lower_star(preorder_functor(c, c, d, name=name))
        out.append(FinProf(P.dom, P.cod, P.values, P.left, P.right, name=name))
    return out


def hom_bundle(n: int) -> HomBundle:
    """Ch_n (n = 0 gives the terminal category) with its closure carriers.

    For n = 2 the K(A, B) list also holds P(b, a) = [a = 0], which is not
    functor-valued.
    """
    if n == 0:
        return HomBundle(terminal_category(), [], [])
    B = chain_category(n)
    hom: List[FinProf] = []
    if n == 2:
        A = discrete_category(B.objects, name=f"ob{B.name}")
        hom.append(relation_prof(A, B, frozenset({("0", "0"), ("1", "0")}), name="P"))
    return HomBundle(B, closure_carriers(n), hom)


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

FIXTURES: Dict[str, Fixture] = {
    f.name: f for f in [
        Fixture("one", "category", terminal_category, "the terminal category 1"),
        Fixture("ch2", "category", lambda: chain_category(2), "the chain 0 <= 1"),
        Fixture("ch3", "category", lambda: chain_category(3), "the chain 0 <= 1 <= 2"),
        Fixture("z2", "category", lambda: cyclic_group_category(2), "Z/2 with one object"),
        Fixture("z3", "category", lambda: cyclic_group_category(3), "Z/3 with one object"),
        Fixture("terminal-moncat", "skew-moncat", terminal_skew_moncat, "the terminal skew monoidal category"),
        Fixture("z2-strict", "skew-moncat", lambda: strict_cyclic_moncat(2), "Z/2 strict monoidal"),
        Fixture("z3-strict", "skew-moncat", lambda: strict_cyclic_moncat(3), "Z/3 strict monoidal"),
        Fixture("skew-ch3", "skew-moncat", lambda: right_projection_moncat(3),
                "Ch3 with X (x) Y = Y and I = 2; not right normal"),
        Fixture("reflect", "skew-moncat", reflection_moncat,
                "left projection through a reflection; not right normal, wedges not preserved"),
        Fixture("sets-d2", "skew-moncat", set_valued_moncat,
                "set-valued K(A, B) over two discrete objects; not thin"),
        Fixture("ld-ch3", "skew-bicat", lambda: locally_discrete(chain_category(3)),
                "Ch3 as a locally discrete skew bicategory"),
        Fixture("ld-z2", "skew-bicat", lambda: locally_discrete(cyclic_group_category(2)),
                "Z/2 as a locally discrete skew bicategory"),
        Fixture("sz2-strict", "skew-bicat", lambda: suspension(strict_cyclic_moncat(2)),
                "suspension of strict Z/2"),
        Fixture("mw-ch3-top", "mw-monad",
                lambda: mw_from_closure(chain_category(3), {"0": "2", "1": "2", "2": "2"}, name="top"),
                "the closure sending everything to 2"),
        Fixture("identity-warping-z2", "warping",
                lambda: identity_warping(suspension(strict_cyclic_moncat(2))),
                "identity warping on suspended strict Z/2"),
        Fixture("hom-one", "hom-bundle", lambda: hom_bundle(0), "K(A, 1) and K(1, 1)"),
        Fixture("hom-ch2", "hom-bundle", lambda: hom_bundle(2),
                "closure carriers on Ch2 and a non-functor-valued P"),
        Fixture("hom-ch3", "hom-bundle", lambda: hom_bundle(3), "the four closure carriers on Ch3"),
    ]
}


def get_fixture(name: str) -> Fixture:
    """[RAISES] FormatError for an unknown name."""
    try:
        return FIXTURES[name]
    except KeyError:
        raise FormatError(f"unknown fixture '{name}'", location=f"fixture:{name}")


def load_fixture(name: str) -> Any:
    return get_fixture(name).build()


def validate_fixture(name: str, bounds: Optional[BoundsConfig] = None) -> Report:
    """Run the validator matching the fixture's kind."""
    fixture = get_fixture(name)
    value = fixture.build()
    if fixture.kind == "category":
        return validate_category(value)
    if fixture.kind == "skew-moncat":
        return check_skew_moncat(value)
    if fixture.kind == "skew-bicat":
        return check_skew_bicat(value)
    if fixture.kind == "mw-monad":
        return check_mw_monad(value)
    if fixture.kind == "warping":
        return check_skew_warping(value)
    return check_skew_moncat(value.hom_moncat(bounds).moncat)
