"""
Right normalization of a skew monoidal category.

The functor - (x) I carries a monad whose algebras, the I-modules, form the
category C^I. Modules (X, x) and (Y, y) are wedged by the reflexive
coequalizer

    (XI)Y  --x(x)1-->           XY  --q-->  X^Y
           --(1(x)lambda)alpha-->

and C^I with ^ is right normal. U: C^I -> C forgets the action, with U2 = q
and U0 the identity.

Module objects are identified by (X, x), module morphisms by
(source module, f, target module).
"""

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..core.colimits import (Cofork, coequalizer_search, factorizations,
                             check_preservation_by_right_tensor,
                             preservation_failure)
from ..core.fincat import (FinCat, FinFunctor, Ident, compose_functors, discrete_category,
                           find_inverse, make_category)
from ..core.report import FALSIFICATION, PASS, Report, label
from ..utils.config import BoundsConfig
from ..utils.errors import BoundExceededError, ConsistencyError, PreconditionError, StructuralError
from ..utils.logger import setup_logger, log_execution
from .mwmonads import Monad, check_monad, make_monad
from .profhom import (FinProf, counit_cofork_cases, endo_moncat, find_prof_iso, hom_prof, hom_skew_moncat,
                      hom_wedge, prof_compose, relation_prof, restrict, restriction_action, u_functor)
from .skewstruct import (MonoidalFunctor, SkewMonCat, check_monoidal_functor,
                         check_skew_moncat, enumerate_monoids, is_right_normal,
                         skew_moncat_from_functions, transport_monoid)

logger = setup_logger(__name__)

# axiom of C^I -> diagram it is checked as
_AXIOM_DIAGRAMS = {
    1: "wedge-pentagon",
    2: "wedge-triple-unit",
    3: "wedge-associator-left-unit",
    4: "wedge-associator-right-unit",
    5: "wedge-unit-unit",
}


@dataclass(frozen=True)
class IModule:
    """An algebra x: XI -> X for the monad - (x) I."""
    ambient: SkewMonCat
    X: Ident
    action: Ident

    @property
    def key(self) -> Tuple[Ident, Ident]:
        return (self.X, self.action)


@dataclass(frozen=True)
class WedgeData:
    module: IModule
    q: Ident
    cofork: Cofork


@dataclass
class NormalizationResult:
    """C^I together with the data it was built from.

    [ATTRIBUTES]
    source : SkewMonCat
        The skew monoidal category C
    modcat : SkewMonCat
        C^I: module objects, wedge tensor, unit (I, lambda_I)
    modules : List[IModule]
        Every I-module of C
    q : Dict
        (M, N) -> quotient XY -> X^Y
    c : Dict
        (M, N) -> action on X^Y
    U : MonoidalFunctor
        The forgetful functor C^I -> C
    report : Report
        Diagram-by-diagram checks
    """
    source: SkewMonCat
    modcat: SkewMonCat
    modules: List[IModule]
    q: Dict[Tuple, Ident]
    c: Dict[Tuple, Ident]
    U: MonoidalFunctor
    report: Report

    def module(self, key: Tuple[Ident, Ident]) -> IModule:
        for m in self.modules:
            if m.key == key:
                return m
        raise StructuralError(f"no module {label(key)} in {self.modcat.name}")


# ---------------------------------------------------------------------------
# the unit monad and its algebras
# ---------------------------------------------------------------------------

def unit_monad(c: SkewMonCat) -> Monad:
    """- (x) I with multiplication (1 (x) lambda) alpha and unit rho."""
    I = c.unit
    D = c.right_tensor(I)
    mult = {x: c.compose(c.mt(c.id(x), c.lam[I]), c.alpha[(x, I, I)]) for x in c.base.objects}
    return make_monad(D, mult, dict(c.rho), name=f"-({label(I)})")


def module_cases(c: SkewMonCat, X: Ident, x: Ident) -> Iterator[Tuple[Dict[str, Ident], Ident, Ident]]:
    I = c.unit
    yield {"X": X, "law": "unit"}, c.compose(x, c.rho[X]), c.id(X)
    yield ({"X": X, "law": "associativity"},
           c.compose(x, c.mt(x, c.id(I))),
           c.compose(x, c.mt(c.id(X), c.lam[I]), c.alpha[(X, I, I)]))


def is_imodule(c: SkewMonCat, X: Ident, x: Ident) -> bool:
    b = c.base
    if b.src.get(x) != c.ot(X, c.unit) or b.tgt.get(x) != X:
        return False
    return all(lhs == rhs for _, lhs, rhs in module_cases(c, X, x))


def _guard(c: SkewMonCat, bounds: BoundsConfig) -> None:
    b = c.base
    largest = max((len(b.hom(x, y)) for x in b.objects for y in b.objects), default=0)
    if largest > bounds.max_hom_size:
        raise BoundExceededError(f"{c.name} has a hom set of size {largest} > {bounds.max_hom_size}")
    total = sum(len(b.hom(c.ot(x, c.unit), x)) for x in b.objects)
    if total > bounds.max_candidates:
        raise BoundExceededError(f"{total} module candidates in {c.name} exceed {bounds.max_candidates}")


def enumerate_imodules(c: SkewMonCat, bounds: Optional[BoundsConfig] = None) -> List[IModule]:
    """Every I-module of c, in (object, action) order.

    [RAISES]
    BoundExceededError
        If a hom set exceeds bounds.max_hom_size
    """
    bounds = bounds or BoundsConfig()
    _guard(c, bounds)
    return [IModule(c, X, x)
            for X in c.base.objects
            for x in c.base.hom(c.ot(X, c.unit), X)
            if is_imodule(c, X, x)]


def is_module_morphism(c: SkewMonCat, m1: IModule, m2: IModule, f: Ident) -> bool:
    return c.compose(m2.action, c.mt(f, c.id(c.unit))) == c.compose(f, m1.action)


def module_category(c: SkewMonCat, modules: Sequence[IModule], name: Optional[str] = None) -> FinCat:
    """C^I restricted to the given modules."""
    b = c.base
    morphisms, identity = [], {}
    for m1 in modules:
        for m2 in modules:
            for f in b.hom(m1.X, m2.X):
                if is_module_morphism(c, m1, m2, f):
                    morphisms.append(((m1.key, f, m2.key), m1.key, m2.key))
        identity[m1.key] = (m1.key, b.identity[m1.X], m1.key)
    present = {m for m, _, _ in morphisms}
    comp = {}
    for g, _, _ in morphisms:
        for f, _, _ in morphisms:
            if f[2] == g[0]:
                h = (f[0], b.comp[(g[1], f[1])], g[2])
                if h not in present:
                    raise ConsistencyError(f"module morphisms are not closed under composition at {label(h)}")
                comp[(g, f)] = h
    return make_category([m.key for m in modules], morphisms, identity, comp,
                         name=name or f"{c.name}^I")


# ---------------------------------------------------------------------------
# the wedge
# ---------------------------------------------------------------------------

def tensor_action(c: SkewMonCat, m1: IModule, m2: IModule) -> Ident:
    """The action (1 (x) y) alpha on XY."""
    return c.compose(c.mt(c.id(m1.X), m2.action), c.alpha[(m1.X, m2.X, c.unit)])


def wedge_pair(c: SkewMonCat, m1: IModule, m2: IModule) -> Tuple[Ident, Ident]:
    X, Y = m1.X, m2.X
    u = c.mt(m1.action, c.id(Y))
    v = c.compose(c.mt(c.id(X), c.lam[Y]), c.alpha[(X, c.unit, Y)])
    return u, v


def _wedge(c: SkewMonCat, m1: IModule, m2: IModule, zs: Sequence[Ident]) -> WedgeData:
    u, v = wedge_pair(c, m1, m2)
    cofork = coequalizer_search(c.base, u, v)
    if cofork is None:
        raise PreconditionError(
            f"no coequalizer of {label(u)} and {label(v)} at ({label(m1.key)}, {label(m2.key)})")
    for z in zs:
        if not check_preservation_by_right_tensor(c, cofork, z):
            witness = preservation_failure(c.right_tensor(z), cofork)
            raise PreconditionError(
                f"- ({label(z)}) does not preserve the coequalizer {label(cofork.q)}: "
                + ", ".join(f"{k}={label(w)}" for k, w in (witness or {}).items()))
    W, q = cofork.apex(c.base), cofork.q
    r = c.compose(q, tensor_action(c, m1, m2))
    found = factorizations(c.base, c.mt(q, c.id(c.unit)), r)
    if len(found) != 1:
        raise ConsistencyError(f"action on {label(W)} has {len(found)} lifts")
    module = IModule(c, W, found[0])
    if not is_imodule(c, W, module.action):
        raise ConsistencyError(f"lifted action on {label(W)} is not a module")
    return WedgeData(module, q, cofork)


def wedge(c: SkewMonCat, m1: IModule, m2: IModule,
          zs: Optional[Sequence[Ident]] = None) -> Tuple[IModule, Ident]:
    """X^Y with its lifted action, and the quotient q: XY -> X^Y.

    [PARAMETERS]
    c : SkewMonCat
        Ambient skew monoidal category
    m1, m2 : IModule
        Modules to wedge
    zs : Optional[Sequence[Ident]]
        Objects Z for which - (x) Z must preserve the coequalizer; defaults to I

    [RAISES]
    PreconditionError
        If the coequalizer is missing or not preserved; the message names the witness
    """
    data = _wedge(c, m1, m2, [c.unit] if zs is None else zs)
    return data.module, data.q


def _unique(c: SkewMonCat, q: Ident, r: Ident, what: str) -> Ident:
    found = factorizations(c.base, q, r)
    if len(found) != 1:
        raise ConsistencyError(f"{what}: {len(found)} factorizations of {label(r)} through {label(q)}")
    return found[0]


# ---------------------------------------------------------------------------
# normalization
# ---------------------------------------------------------------------------

def _summarize(report: Report, name: str, tag: str, sub: Report) -> None:
    checked = sum(e.checked for e in sub.entries)
    if sub.ok:
        report.record(name, PASS, tag, checked)
    else:
        first = sub.failures[0]
        report.record(name, FALSIFICATION, tag, checked,
                      detail=f"{first.name}: {first.status} {first.witness or ''}".strip())


@log_execution
def normalize(c: SkewMonCat, bounds: Optional[BoundsConfig] = None) -> NormalizationResult:
    """Build C^I, U and the diagram-by-diagram report.

    [WORKFLOW]
    1. Enumerate I-modules and check the unit monad
    2. Wedge every pair, checking coequalizer existence and preservation
    3. Factor alpha' through q (x) 1 then q, lambda' through q, set rho' = q rho
    4. Check C^I, right normality, U and monoid counts

    [RAISES]
    PreconditionError
        If some wedge does not exist or is not preserved
    ConsistencyError
        If a factorization the construction relies on does not exist
    """
    bounds = bounds or BoundsConfig()
    report = Report(f"{c.name}^I", "normalization")
    I = c.unit
    b = c.base

    _summarize(report, "unit-monad-laws", "unit-monad-laws", check_monad(unit_monad(c)))
    modules = enumerate_imodules(c, bounds)
    by_key = {m.key: m for m in modules}
    unit_module = IModule(c, I, c.lam[I])
    report.predicate("unit-module", [({"I": I}, is_imodule(c, I, c.lam[I]))],
                     tag="unit-module", falsification=True)
    if unit_module.key not in by_key:
        raise ConsistencyError(f"(I, lambda) is not a module of {c.name}")
    report.predicate("tensor-module-action", (
        ({"M": m1.key, "N": m2.key},
         is_imodule(c, c.ot(m1.X, m2.X), tensor_action(c, m1, m2)))
        for m1 in modules for m2 in modules
    ), tag="tensor-module-action", falsification=True)

    zs = list(dict.fromkeys([I] + [m.X for m in modules]))
    wedges: Dict[Tuple, WedgeData] = {}
    for m1 in modules:
        for m2 in modules:
            wedges[(m1.key, m2.key)] = _wedge(c, m1, m2, zs)
    logger.info(f"{len(modules)} modules, {len(wedges)} wedges in {c.name}")

    def ob(k1, k2):
        return wedges[(k1, k2)].module.key

    def q(k1, k2):
        return wedges[(k1, k2)].q

    def mor(f, g):
        k1, k2 = f[0], g[0]
        l1, l2 = f[2], g[2]
        h = _unique(c, q(k1, k2), c.compose(q(l1, l2), c.mt(f[1], g[1])), "wedge of morphisms")
        return (ob(k1, k2), h, ob(l1, l2))

    alpha, lifts = {}, {}
    for m1, m2, m3 in product(modules, repeat=3):
        k1, k2, k3 = m1.key, m2.key, m3.key
        k12, k23 = ob(k1, k2), ob(k2, k3)
        r = c.compose(q(k1, k23), c.mt(c.id(m1.X), q(k2, k3)), c.alpha[(m1.X, m2.X, m3.X)])
        first = factorizations(b, c.mt(q(k1, k2), c.id(m3.X)), r)
        second = factorizations(b, q(k12, k3), first[0]) if len(first) == 1 else []
        lifts[(k1, k2, k3)] = (len(first), len(second))
        if len(first) == 1 and len(second) == 1:
            alpha[(k1, k2, k3)] = (ob(k12, k3), second[0], ob(k1, k23))
    report.predicate("wedge-associator-lift", (
        ({"M": k[0], "N": k[1], "P": k[2], "counts": counts}, counts == (1, 1))
        for k, counts in lifts.items()
    ), tag="wedge-associator-lift", falsification=True)

    lam, rho, left_ok = {}, {}, []
    unit_key = unit_module.key
    for m in modules:
        found = factorizations(b, q(unit_key, m.key), c.lam[m.X])
        module_map = len(found) == 1 and is_module_morphism(c, wedges[(unit_key, m.key)].module, m, found[0])
        left_ok.append(({"M": m.key, "factorizations": len(found)}, module_map))
        if len(found) == 1:
            lam[m.key] = (ob(unit_key, m.key), found[0], m.key)
        rho[m.key] = (m.key, c.compose(q(m.key, unit_key), c.rho[m.X]), ob(m.key, unit_key))
    report.predicate("wedge-left-unit-factorization", left_ok,
                     tag="wedge-left-unit-factorization", falsification=True)
    report.law("split-coequalizer", _split_cases(c, modules), tag="split-coequalizer", falsification=True)

    if len(alpha) != len(lifts) or len(lam) != len(modules):
        raise ConsistencyError(f"structure of {c.name}^I does not factor through the wedge")

    base = module_category(c, modules)
    modcat = skew_moncat_from_functions(base, ob, mor, unit_key, alpha, lam, rho, name=f"{c.name}^I")
    checks = check_skew_moncat(modcat)
    rest = Report(modcat.name, "skew-moncat")
    for entry in checks.entries:
        if entry.name.startswith("axiom-"):
            n = int(entry.name.split("-")[1])
            report.record(_AXIOM_DIAGRAMS[n], PASS if entry.ok else FALSIFICATION,
                          _AXIOM_DIAGRAMS[n], entry.checked, entry.witness, entry.detail)
        else:
            rest.add(entry)
    report.merge(rest, prefix="modcat.")

    report.law("right-normal", (
        ({"M": k}, find_inverse(base, rho[k]) is not None, True) for k in base.objects
    ), falsification=True)

    U = MonoidalFunctor(
        modcat, c,
        FinFunctor(base, b, {k: k[0] for k in base.objects}, {m: m[1] for m in base.morphisms}, name="U"),
        {(k1, k2): q(k1, k2) for k1 in base.objects for k2 in base.objects},
        c.id(I),
        name="U",
    )
    report.merge(check_monoidal_functor(U), prefix="U.")
    report.law("monoid-count", [(
        {"source": c.name},
        len(enumerate_monoids(modcat, bounds)),
        len(enumerate_monoids(c, bounds)),
    )], falsification=True)

    return NormalizationResult(
        source=c,
        modcat=modcat,
        modules=modules,
        q={key: w.q for key, w in wedges.items()},
        c={key: w.module.action for key, w in wedges.items()},
        U=U,
        report=report,
    )


def _split_cases(c: SkewMonCat, modules: Sequence[IModule]):
    """x: XI -> X splits the pair at (M, (I, lambda)) with s = rho_X, t = rho_XI."""
    I = c.unit
    for m in modules:
        X, x = m.X, m.action
        u = c.mt(x, c.id(I))
        v = c.compose(c.mt(c.id(X), c.lam[I]), c.alpha[(X, I, I)])
        s, t = c.rho[X], c.rho[c.ot(X, I)]
        yield {"M": m.key, "equation": "xs"}, c.compose(x, s), c.id(X)
        yield {"M": m.key, "equation": "vt"}, c.compose(v, t), c.id(c.ot(X, I))
        yield {"M": m.key, "equation": "ut"}, c.compose(u, t), c.compose(s, x)
        yield {"M": m.key, "equation": "xu"}, c.compose(x, u), c.compose(x, v)


def right_normal_inverses(n: NormalizationResult) -> Dict[Tuple, Ident]:
    """rho' inverse for every module."""
    base = n.modcat.base
    out = {}
    for k in base.objects:
        inverse = find_inverse(base, n.modcat.rho[k])
        if inverse is None:
            raise ConsistencyError(f"rho' at {label(k)} is not invertible")
        out[k] = inverse
    return out


# ---------------------------------------------------------------------------
# the universal property of U
# ---------------------------------------------------------------------------

def _induced_action(M: MonoidalFunctor, x: Ident, rho_inverse: Ident) -> Ident:
    D, C, G = M.dom, M.cod, M.F
    return C.compose(G(rho_inverse), M.F2[(x, D.unit)], C.mt(C.id(G.ob(x)), M.F0))


def _assemble(M: MonoidalFunctor, n: NormalizationResult,
              keys: Mapping[Ident, Tuple[Ident, Ident]]) -> Optional[MonoidalFunctor]:
    D, C = M.dom, M.cod
    base = n.modcat.base
    present = set(base.morphisms)
    mor = {f: (keys[D.base.src[f]], M.F(f), keys[D.base.tgt[f]]) for f in D.base.morphisms}
    if any(m not in present for m in mor.values()):
        return None
    N2 = {}
    for x in D.base.objects:
        for y in D.base.objects:
            w = n.modcat.ot(keys[x], keys[y])
            found = factorizations(C.base, n.q[(keys[x], keys[y])], M.F2[(x, y)])
            if len(found) != 1 or (w, found[0], keys[D.ot(x, y)]) not in present:
                return None
            N2[(x, y)] = (w, found[0], keys[D.ot(x, y)])
    N0 = (n.modcat.unit, M.F0, keys[D.unit])
    if N0 not in present:
        return None
    return MonoidalFunctor(D, n.modcat, FinFunctor(D.base, base, dict(keys), mor, name="N"), N2, N0, name="N")


def factor_through_normalization(M: MonoidalFunctor, n: NormalizationResult) -> MonoidalFunctor:
    """The monoidal N: D -> C^I with UN = M, for right normal D.

    N sends X to MX with action M(rho^-1) M2 (1 (x) M0), and N2 is M2
    passed to the quotient.

    [RAISES]
    PreconditionError
        If D is not right normal or an induced module is missing
    ConsistencyError
        If M does not factor
    """
    D, C = M.dom, M.cod
    if C != n.source:
        raise StructuralError(f"{M.name} does not land in {n.source.name}")
    if not is_right_normal(D):
        raise PreconditionError(f"{D.name} is not right normal")
    keys = {}
    for x in D.base.objects:
        key = (M.F.ob(x), _induced_action(M, x, find_inverse(D.base, D.rho[x])))
        if key not in set(n.modcat.base.objects):
            raise PreconditionError(f"induced module {label(key)} is not among the modules of {C.name}")
        keys[x] = key
    N = _assemble(M, n, keys)
    if N is None:
        raise ConsistencyError(f"{M.name} does not factor through U")
    return N


def factorizes(M: MonoidalFunctor, N: MonoidalFunctor, n: NormalizationResult) -> bool:
    """Whether UN = M on functor tables and monoidal structure."""
    UN = compose_functors(n.U.F, N.F)
    if dict(UN.obj_map) != dict(M.F.obj_map) or dict(UN.mor_map) != dict(M.F.mor_map):
        return False
    C = n.source
    return all(
        C.compose(N.F2[(x, y)][1], n.U.F2[(N.F.ob(x), N.F.ob(y))]) == M.F2[(x, y)]
        for x, y in M.F2
    ) and C.compose(N.F0[1], n.U.F0) == M.F0


def count_factorizations(M: MonoidalFunctor, n: NormalizationResult,
                         bounds: Optional[BoundsConfig] = None) -> int:
    """Monoidal functors N with UN = M, by exhaustive search over module assignments.

    [RAISES]
    BoundExceededError
        If the number of assignments exceeds bounds.max_candidates
    """
    bounds = bounds or BoundsConfig()
    D = M.dom
    options = [[m.key for m in n.modules if m.X == M.F.ob(x)] for x in D.base.objects]
    total = 1
    for o in options:
        total *= max(len(o), 1)
    if total > bounds.max_candidates:
        raise BoundExceededError(f"{total} factorization candidates exceed {bounds.max_candidates}")
    count = 0
    for choice in product(*options):
        N = _assemble(M, n, dict(zip(D.base.objects, choice)))
        if N is not None and factorizes(M, N, n) and check_monoidal_functor(N).ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# K(A, B)^I and K(B, B)
# ---------------------------------------------------------------------------

@log_execution
def theorem2_instance(B: FinCat,
                      endo_list: Sequence[FinProf],
                      hom_list: Sequence[FinProf],
                      bounds: Optional[BoundsConfig] = None) -> Report:
    """Compare K(B, B) with the normalization of K(A, B) on finite lists.

    [WORKFLOW]
    1. Close endo_list in K(B, B), restrict along i and close with hom_list in K(A, B)
    2. Normalize K(A, B) and factor u: K(B, B) -> K(A, B) through U as v
    3. Check on the set-valued carriers: g ii^*ii^* => g ii^* -> g is a
       coequalizer at every cell, and the wedge of gi and fi is isomorphic
       to (gf)i
    4. Check in the fragments: the wedge of the images is the image of the
       tensor; v is fully faithful on endo_list and reaches every module
       induced by hom_list; v is a bijection on monoids

    [OUTPUT]
    Report
        u.*, normalization.* and coequalizer-cofork, wedge-restriction, wedge-fragment, fully-faithful,
        essentially-surjective and monoid-bijection, falsification on failure
    """
    bounds = bounds or BoundsConfig()
    report = Report(f"K({B.name},{B.name}) vs K(ob{B.name},{B.name})^I", "theorem2")
    endo = endo_moncat(B, endo_list, bounds)
    A = discrete_category(B.objects, name=f"ob{B.name}")
    restricted = [relation_prof(A, B, r, name=f"{name}.i") for name, r in endo.relations.items()]
    h = hom_skew_moncat(B, list(hom_list) + restricted, bounds)
    u = u_functor(endo, h)
    report.merge(check_monoidal_functor(u), prefix="u.")
    n = normalize(h.moncat, bounds)
    report.merge(n.report, prefix="normalization.")

    e = endo.moncat
    listed = [name for name in endo.relations if name in {P.name for P in endo_list}] or list(endo.relations)
    carriers = list(endo_list) or [hom_prof(B)]

    report.predicate("coequalizer-cofork", (
        case for g in carriers for case in counit_cofork_cases(g)
    ), falsification=True)

    def restriction_case(g, f):
        W, _ = hom_wedge(restrict(g), restriction_action(g), restrict(f))
        return find_prof_iso(W, restrict(prof_compose(g, f)), bounds.max_candidates) is not None

    report.predicate("wedge-restriction", (
        ({"g": g.name, "f": f.name}, restriction_case(g, f)) for g in carriers for f in carriers
    ), falsification=True)

    module_of = {m.X: m.key for m in n.modules}
    image = u.F.obj_map

    def fragment_case(g, f):
        k1, k2 = module_of.get(image[g]), module_of.get(image[f])
        if k1 is None or k2 is None:
            return False
        w = n.modcat.ot(k1, k2)[0]
        return any(find_inverse(h.moncat.base, m) is not None
                   for m in h.moncat.base.hom(w, image[e.ot(g, f)]))

    report.predicate("wedge-fragment", (
        ({"g": g, "f": f}, fragment_case(g, f)) for g in listed for f in listed
    ), falsification=True)

    v = report.guard("comparison", lambda: factor_through_normalization(u, n))
    if v is None:
        return report
    report.merge(check_monoidal_functor(v), prefix="v.")
    mb = n.modcat.base
    report.predicate("fully-faithful", (
        ({"g": g, "f": f},
         sorted(map(label, (v.F(m)[1] for m in e.base.hom(g, f)))) ==
         sorted(map(label, (m[1] for m in mb.hom(v.F.ob(g), v.F.ob(f))))))
        for g in listed for f in listed
    ), falsification=True)

    c = h.moncat
    free = {P.name: (c.ot(P.name, c.unit),
                     c.compose(c.mt(c.id(P.name), c.lam[c.unit]), c.alpha[(P.name, c.unit, c.unit)]))
            for P in hom_list if P.name in h.relations}
    report.predicate("essentially-surjective", (
        ({"P": name, "module": key},
         any(find_inverse(mb, m) is not None for g in e.base.objects for m in mb.hom(v.F.ob(g), key)))
        for name, key in free.items()
    ), falsification=True)

    endo_monoids = enumerate_monoids(e, bounds)
    mod_monoids = {(m.carrier, m.mult, m.unit) for m in enumerate_monoids(n.modcat, bounds)}
    moved = [transport_monoid(v, m) for m in endo_monoids]
    moved_keys = [(m.carrier, m.mult, m.unit) for m in moved]
    report.law("monoid-bijection", [(
        {"endo": len(endo_monoids), "modules": len(mod_monoids)},
        (len(set(moved_keys)), set(moved_keys)),
        (len(endo_monoids), mod_monoids),
    )], falsification=True)
    return report
