"""
Finite profunctors and the skew monoidal hom category K(A, B).

A profunctor P: A -|-> B has a finite set P(b, a) for each pair, a left action
of B (contravariant in b) and a right action of A (covariant in a):

    left[(beta, a)]  : P(b, a) -> P(b', a)   for beta: b' -> b
    right[(alpha, b)]: P(b, a) -> P(b, a')   for alpha: a -> a'

Composition is the coend, computed by quotient. Hom fragments come in two
flavours. Truth-valued ones (each P(b, a) empty or a point) are thin: every
natural family is an inclusion and the tensor g i^* f reduces to relational
composition through the objects of B. Set-valued ones keep the elements:

    (g i^* f)(b, a) = sum over a' of g(b, a') x f(a', a)

with alpha reassociating, lambda acting by the arrow carried in i_* and rho
inserting an identity. Their morphisms are all natural families, so a
set-valued fragment is not thin.
"""

import logging
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Dict, FrozenSet, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..core.colimits import coequalizer_finset, quotient
from ..core.fincat import (FinCat, FinFunctor, FinSetMap, FinSetObj, Ident, discrete_category, identity_functor,
                           make_category, preorder_category)
from ..core.report import FAIL, PASS, STRUCTURAL, Report, label
from ..utils.config import BoundsConfig
from ..utils.errors import BoundExceededError, ConsistencyError, PreconditionError, StructuralError
from ..utils.logger import setup_logger, log_execution
from .mwmonads import MwMonad, check_mw_monad, enumerate_mw, mw_from_closure
from .skewstruct import (AXIOM_TAGS, Monoid, MonoidalFunctor, SkewMonCat, enumerate_monoids,
                         skew_moncat_from_functions)

logger = setup_logger(__name__)

Relation = FrozenSet[Tuple[Ident, Ident]]
POINT = "*"


@dataclass(frozen=True)
class FinProf:
    """A finite profunctor dom -|-> cod."""
    dom: FinCat
    cod: FinCat
    values: Mapping[Tuple[Ident, Ident], Tuple[Ident, ...]]
    left: Mapping[Tuple[Ident, Ident], Mapping[Ident, Ident]]
    right: Mapping[Tuple[Ident, Ident], Mapping[Ident, Ident]]
    name: str = field(default="P", compare=False)

    def at(self, b: Ident, a: Ident) -> Tuple[Ident, ...]:
        try:
            return self.values[(b, a)]
        except KeyError:
            raise StructuralError(f"{self.name} has no value at ({label(b)}, {label(a)})")

    def act_left(self, beta: Ident, a: Ident, x: Ident) -> Ident:
        return self.left[(beta, a)][x]

    def act_right(self, alpha: Ident, b: Ident, x: Ident) -> Ident:
        return self.right[(alpha, b)][x]

    def cells(self) -> Iterator[Tuple[Ident, Ident]]:
        for b in self.cod.objects:
            for a in self.dom.objects:
                yield b, a

    def size(self) -> int:
        return sum(len(v) for v in self.values.values())

    def signature(self) -> Tuple[FrozenSet, FrozenSet, FrozenSet]:
        """Hashable form of the tables, for identity comparisons."""
        return (
            frozenset((k, frozenset(v)) for k, v in self.values.items()),
            frozenset((k, frozenset(t.items())) for k, t in self.left.items()),
            frozenset((k, frozenset(t.items())) for k, t in self.right.items()),
        )


@dataclass(frozen=True)
class HomSkewMonCat:
    """A finite fragment of K(A, B) (or of K(B, B)) as a skew monoidal category.

    [ATTRIBUTES]
    moncat : SkewMonCat
        Objects are profunctor names, morphisms 'P<=Q' inclusions
    B : FinCat
        The category B
    A : FinCat
        Discrete category on the objects of B, or B itself for the endo fragment
    relations : Mapping[str, Relation]
        Cells (b, a) where each object is inhabited
    endo : bool
        True for the K(B, B) fragment under composition
    profs : Mapping[str, FinProf]
        Set-valued objects; empty for a truth-valued fragment, whose
        morphisms are then inclusions
    """
    moncat: SkewMonCat
    B: FinCat
    A: FinCat
    relations: Mapping[str, Relation]
    endo: bool = False
    profs: Mapping[str, FinProf] = field(default_factory=dict)

    @property
    def set_valued(self) -> bool:
        return bool(self.profs)

    def name_of(self, relation: Relation) -> Optional[str]:
        for name, r in self.relations.items():
            if r == relation:
                return name
        return None

    def profunctor(self, name: str) -> FinProf:
        if name in self.profs:
            return self.profs[name]
        return relation_prof(self.A, self.B, self.relations[name], name=name)


# ---------------------------------------------------------------------------
# validation and construction
# ---------------------------------------------------------------------------

def check_prof(P: FinProf) -> Report:
    """Totality, functoriality of both actions and their commutation."""
    report = Report(P.name, "profunctor")
    A, B = P.dom, P.cod
    for b, a in P.cells():
        if (b, a) not in P.values:
            report.record("structure.values", STRUCTURAL, witness={"b": b, "a": a}, detail="missing value")
            return report
    for beta in B.morphisms:
        for a in A.objects:
            table = P.left.get((beta, a))
            target = set(P.values[(B.src[beta], a)])
            if table is None or any(table.get(x) not in target for x in P.values[(B.tgt[beta], a)]):
                report.record("structure.left", STRUCTURAL, witness={"beta": beta, "a": a},
                              detail="left action missing or mistyped")
                return report
    for alpha in A.morphisms:
        for b in B.objects:
            table = P.right.get((alpha, b))
            target = set(P.values[(b, A.tgt[alpha])])
            if table is None or any(table.get(x) not in target for x in P.values[(b, A.src[alpha])]):
                report.record("structure.right", STRUCTURAL, witness={"alpha": alpha, "b": b},
                              detail="right action missing or mistyped")
                return report

    report.law("left-identity", (
        ({"b": b, "a": a, "x": x}, P.act_left(B.identity[b], a, x), x)
        for b, a in P.cells() for x in P.values[(b, a)]
    ))
    report.law("left-composition", (
        ({"beta": g, "beta'": f, "x": x},
         P.act_left(B.comp[(g, f)], a, x),
         P.act_left(f, a, P.act_left(g, a, x)))
        for g, f in B.composable_pairs() for a in A.objects for x in P.values[(B.tgt[g], a)]
    ))
    report.law("right-identity", (
        ({"b": b, "a": a, "x": x}, P.act_right(A.identity[a], b, x), x)
        for b, a in P.cells() for x in P.values[(b, a)]
    ))
    report.law("right-composition", (
        ({"alpha": g, "alpha'": f, "x": x},
         P.act_right(A.comp[(g, f)], b, x),
         P.act_right(g, b, P.act_right(f, b, x)))
        for g, f in A.composable_pairs() for b in B.objects for x in P.values[(b, A.src[f])]
    ))
    report.law("actions-commute", (
        ({"beta": beta, "alpha": alpha, "x": x},
         P.act_right(alpha, B.src[beta], P.act_left(beta, A.src[alpha], x)),
         P.act_left(beta, A.tgt[alpha], P.act_right(alpha, B.tgt[beta], x)))
        for beta in B.morphisms for alpha in A.morphisms
        for x in P.values[(B.tgt[beta], A.src[alpha])]
    ))
    return report


def lower_star(f: FinFunctor) -> FinProf:
    """f_*(b, a) = B(b, fa)."""
    A, B = f.dom, f.cod
    values = {(b, a): B.hom(b, f.ob(a)) for b in B.objects for a in A.objects}
    left = {(beta, a): {x: B.comp[(x, beta)] for x in values[(B.tgt[beta], a)]}
            for beta in B.morphisms for a in A.objects}
    right = {(alpha, b): {x: B.comp[(f(alpha), x)] for x in values[(b, A.src[alpha])]}
             for alpha in A.morphisms for b in B.objects}
    return FinProf(A, B, values, left, right, name=f"{f.name}_*")


def upper_star(f: FinFunctor) -> FinProf:
    """f^*(a, b) = B(fa, b), a profunctor B -|-> A."""
    A, B = f.dom, f.cod
    values = {(a, b): B.hom(f.ob(a), b) for a in A.objects for b in B.objects}
    left = {(alpha, b): {x: B.comp[(x, f(alpha))] for x in values[(A.tgt[alpha], b)]}
            for alpha in A.morphisms for b in B.objects}
    right = {(beta, a): {x: B.comp[(beta, x)] for x in values[(a, B.src[beta])]}
             for beta in B.morphisms for a in A.objects}
    return FinProf(B, A, values, left, right, name=f"{f.name}^*")


def hom_prof(B: FinCat) -> FinProf:
    """The identity profunctor B(b, b')."""
    P = lower_star(identity_functor(B))
    return FinProf(P.dom, P.cod, P.values, P.left, P.right, name=f"hom_{B.name}")


def relation_prof(A: FinCat, B: FinCat, relation: Relation, name: str = "R") -> FinProf:
    """The truth-valued profunctor inhabited exactly on relation."""
    values = {(b, a): (POINT,) if (b, a) in relation else () for b in B.objects for a in A.objects}
    left = {(beta, a): dict.fromkeys(values[(B.tgt[beta], a)], POINT)
            for beta in B.morphisms for a in A.objects}
    right = {(alpha, b): dict.fromkeys(values[(b, A.src[alpha])], POINT)
             for alpha in A.morphisms for b in B.objects}
    return FinProf(A, B, values, left, right, name=name)


def truncate(P: FinProf) -> Relation:
    """Cells where P is inhabited."""
    return frozenset(cell for cell, v in P.values.items() if v)


def functor_relation(f: FinFunctor) -> Relation:
    """Truncation of f_*: pairs (b, a) with an arrow b -> fa."""
    B = f.cod
    return frozenset((b, a) for b in B.objects for a in f.dom.objects if B.hom(b, f.ob(a)))


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------

@log_execution(level=logging.DEBUG)
def prof_compose(g: FinProf, f: FinProf) -> FinProf:
    """Coend composite g.f: A -|-> C of f: A -|-> B and g: B -|-> C.

    [WORKFLOW]
    1. Per cell (c, a), list triples (b, x, y) with x in g(c, b), y in f(b, a)
    2. Identify (b', x.beta, y) with (b, x, beta.y) for every beta: b -> b'
    3. Name classes by their least triple and induce both actions on them
    4. Verify the induced actions do not depend on the chosen representative

    [RAISES]
    StructuralError
        If the middle categories differ
    ConsistencyError
        If an induced action is not well defined
    """
    if g.dom != f.cod:
        raise StructuralError(f"cannot compose {g.name} after {f.name}: middle categories differ")
    A, B, C = f.dom, f.cod, g.cod
    values, projection = {}, {}
    for c in C.objects:
        for a in A.objects:
            elements = [(b, x, y) for b in B.objects for x in g.values[(c, b)] for y in f.values[(b, a)]]
            relations = [
                ((B.tgt[beta], g.right[(beta, c)][x], y), (B.src[beta], x, f.left[(beta, a)][y]))
                for beta in B.morphisms
                for x in g.values[(c, B.src[beta])]
                for y in f.values[(B.tgt[beta], a)]
            ]
            reps, proj = quotient(elements, relations)
            values[(c, a)] = reps
            projection[(c, a)] = proj

    def induced(cell_from, cell_to, move):
        table = {}
        for triple, rep in projection[cell_from].items():
            image = projection[cell_to][move(triple)]
            if table.setdefault(rep, image) != image:
                raise ConsistencyError(f"action on {g.name}.{f.name} is not well defined at {label(rep)}")
        return table

    left = {(gamma, a): induced((C.tgt[gamma], a), (C.src[gamma], a),
                                lambda t, gamma=gamma: (t[0], g.left[(gamma, t[0])][t[1]], t[2]))
            for gamma in C.morphisms for a in A.objects}
    right = {(alpha, c): induced((c, A.src[alpha]), (c, A.tgt[alpha]),
                                 lambda t, alpha=alpha: (t[0], t[1], f.right[(alpha, t[0])][t[2]]))
             for alpha in A.morphisms for c in C.objects}
    return FinProf(A, C, values, left, right, name=f"{g.name}.{f.name}")


def coend_classes(g: FinProf, f: FinProf) -> Dict[Tuple[Ident, Ident], Dict[Tuple, Tuple]]:
    """Representative of every triple of the coend, per cell."""
    A, B, C = f.dom, f.cod, g.cod
    out = {}
    for c in C.objects:
        for a in A.objects:
            elements = [(b, x, y) for b in B.objects for x in g.values[(c, b)] for y in f.values[(b, a)]]
            relations = [
                ((B.tgt[beta], g.right[(beta, c)][x], y), (B.src[beta], x, f.left[(beta, a)][y]))
                for beta in B.morphisms
                for x in g.values[(c, B.src[beta])]
                for y in f.values[(B.tgt[beta], a)]
            ]
            out[(c, a)] = quotient(elements, relations)[1]
    return out


# ---------------------------------------------------------------------------
# natural families
# ---------------------------------------------------------------------------

def _constraints(P: FinProf) -> List[Tuple[Tuple, Tuple, Mapping, Mapping, str, Ident]]:
    out = []
    for beta in P.cod.morphisms:
        for a in P.dom.objects:
            out.append(((P.cod.tgt[beta], a), (P.cod.src[beta], a), "left", (beta, a)))
    for alpha in P.dom.morphisms:
        for b in P.cod.objects:
            out.append(((b, P.dom.src[alpha]), (b, P.dom.tgt[alpha]), "right", (alpha, b)))
    return out


def natural_families(P: FinProf, Q: FinProf,
                     bijective: bool = False,
                     max_candidates: int = 200000) -> List[Dict[Tuple[Ident, Ident], Dict[Ident, Ident]]]:
    """Every natural transformation P => Q, by backtracking over cells.

    [RAISES]
    BoundExceededError
        If more than max_candidates partial assignments are visited
    """
    if P.dom != Q.dom or P.cod != Q.cod:
        raise StructuralError(f"{P.name} and {Q.name} are not parallel")
    cells = list(P.cells())
    order = {cell: i for i, cell in enumerate(cells)}
    checks: Dict[int, List] = {i: [] for i in range(len(cells))}
    for source, target, side, key in _constraints(P):
        checks[max(order[source], order[target])].append((source, target, side, key))

    def options(cell):
        xs, ys = P.values[cell], Q.values[cell]
        if bijective:
            if len(xs) != len(ys):
                return []
            return [dict(zip(xs, perm)) for perm in permutations(ys)]
        return [dict(zip(xs, choice)) for choice in product(ys, repeat=len(xs))]

    found, visited = [], 0
    assignment: Dict[Tuple[Ident, Ident], Dict[Ident, Ident]] = {}

    def commutes(source, target, side, key):
        act_p = P.left[key] if side == "left" else P.right[key]
        act_q = Q.left[key] if side == "left" else Q.right[key]
        return all(assignment[target][act_p[x]] == act_q[assignment[source][x]] for x in P.values[source])

    def extend(i):
        nonlocal visited
        if i == len(cells):
            found.append(dict(assignment))
            return
        for component in options(cells[i]):
            visited += 1
            if visited > max_candidates:
                raise BoundExceededError(f"natural families {P.name} => {Q.name} exceed {max_candidates}")
            assignment[cells[i]] = component
            if all(commutes(*c) for c in checks[i]):
                extend(i + 1)
        assignment.pop(cells[i], None)

    extend(0)
    return found


def find_prof_iso(P: FinProf, Q: FinProf,
                  max_candidates: int = 200000) -> Optional[Dict[Tuple[Ident, Ident], Dict[Ident, Ident]]]:
    """A natural isomorphism P => Q, or None."""
    if any(len(P.values[cell]) != len(Q.values[cell]) for cell in P.cells()):
        return None
    isos = natural_families(P, Q, bijective=True, max_candidates=max_candidates)
    return isos[0] if isos else None


# ---------------------------------------------------------------------------
# the adjunction f_* -| f^*
# ---------------------------------------------------------------------------

def adjunction_units(f: FinFunctor):
    """Unit hom_A => f^*.f_* and counit f_*.f^* => hom_B as component tables.

    [OUTPUT]
    Tuple[Dict, Dict]
        eta[(a', a)][alpha] is the class of (fa', 1, f(alpha));
        eps[(b, b')][(a, x, y)] = y o x
    """
    A, B = f.dom, f.cod
    fl, fu = lower_star(f), upper_star(f)
    inner = coend_classes(fu, fl)
    eta = {}
    for a2 in A.objects:
        for a1 in A.objects:
            eta[(a2, a1)] = {
                alpha: inner[(a2, a1)][(f.ob(a2), B.identity[f.ob(a2)], f(alpha))]
                for alpha in A.hom(a2, a1)
            }
    outer = prof_compose(fl, fu)
    eps = {(b, b2): {t: B.comp[(t[2], t[1])] for t in outer.values[(b, b2)]}
           for b in B.objects for b2 in B.objects}
    return eta, eps


def check_triangle_identities(f: FinFunctor) -> Report:
    """Both triangle identities, computed on coend representatives."""
    A, B = f.dom, f.cod
    report = Report(f"{f.name}_* -| {f.name}^*", "adjunction")
    eta, eps = adjunction_units(f)

    def rep(a):
        return eta[(a, a)][A.identity[a]]

    report.law("triangle-lower", (
        ({"b": b, "a": a, "y": y},
         B.compose(rep(a)[2], rep(a)[1], y),
         y)
        for b in B.objects for a in A.objects for y in B.hom(b, f.ob(a))
    ))
    report.law("triangle-upper", (
        ({"a": a, "b": b, "x": x},
         B.compose(x, rep(a)[2], rep(a)[1]),
         x)
        for a in A.objects for b in B.objects for x in B.hom(f.ob(a), b)
    ))
    report.law("counit-evaluation", (
        ({"cell": cell, "triple": t}, eps[cell][t], B.comp[(t[2], t[1])])
        for cell in eps for t in eps[cell]
    ))
    return report


# ---------------------------------------------------------------------------
# hom fragments
# ---------------------------------------------------------------------------

def _relation_of(P: FinProf, B: FinCat, endo: bool) -> Relation:
    if P.cod != B:
        raise StructuralError(f"{P.name} does not land in {B.name}")
    if not endo and not P.dom.is_discrete():
        raise PreconditionError(f"{P.name} has a non-discrete domain")
    report = check_prof(P)
    if not report.ok:
        raise StructuralError(f"{P.name} is not a profunctor: {report.failures[0].name} fails")
    return truncate(P)


def _fragment(B: FinCat, A: FinCat, unit: Tuple[str, Relation],
              given: Sequence[Tuple[str, Relation]],
              multiply, endo: bool, closure: bool, bound: int) -> HomSkewMonCat:
    relations: Dict[str, Relation] = {}

    def add(name, relation):
        for existing, r in relations.items():
            if r == relation:
                return existing
        if len(relations) >= bound:
            raise BoundExceededError(f"hom fragment over {B.name} exceeds {bound} objects")
        relations[name] = relation
        return name

    add(*unit)
    for name, relation in given:
        add(name, relation)
    changed = True
    while changed:
        changed = False
        for g, f in list(product(list(relations), repeat=2)):
            r = multiply(relations[g], relations[f])
            if r not in relations.values():
                if not closure:
                    raise PreconditionError(f"object list is not closed: {g}*{f} is missing")
                add(f"({g}*{f})", r)
                changed = True

    names = list(relations)
    base = preorder_category(names, lambda p, q: relations[p] <= relations[q],
                             name=f"K({A.name},{B.name})" if not endo else f"K({B.name},{B.name})")
    by_relation = {r: n for n, r in relations.items()}

    def ob(g, f):
        return by_relation[multiply(relations[g], relations[f])]

    def arrow(p, q):
        return f"{p}<={q}"

    def mor(u, v):
        (g1, g2), (f1, f2) = u.split("<="), v.split("<=")
        return arrow(ob(g1, f1), ob(g2, f2))

    unit_name = names[0]
    moncat = skew_moncat_from_functions(
        base, ob, mor, unit_name,
        alpha={(x, y, z): arrow(ob(ob(x, y), z), ob(x, ob(y, z))) for x in names for y in names for z in names},
        lam={x: arrow(ob(unit_name, x), x) for x in names},
        rho={x: arrow(x, ob(x, unit_name)) for x in names},
        name=base.name,
    )
    return HomSkewMonCat(moncat, B, A, relations, endo=endo)


def relational_tensor(B: FinCat):
    """(g (x) f)(b, a) inhabited iff g(b, a') and f(a', a) for some object a'."""
    def multiply(g: Relation, f: Relation) -> Relation:
        return frozenset((b, a) for b in B.objects for a in B.objects
                         if any((b, m) in g and (m, a) in f for m in B.objects))
    return multiply


@log_execution
def hom_skew_moncat(B: FinCat,
                    objects: Sequence[FinProf] = (),
                    bounds: Optional[BoundsConfig] = None,
                    closure: bool = True,
                    values: str = "truth") -> HomSkewMonCat:
    """The skew monoidal fragment of K(A, B) generated by i_* and objects.

    A is discrete on the objects of B and i the inclusion. The tensor is
    g i^* f, unit i_*, lambda from the counit and rho from the unit of
    i_* -| i^*.

    [PARAMETERS]
    B : FinCat
        The category B
    objects : Sequence[FinProf]
        Profunctors A -|-> B
    bounds : Optional[BoundsConfig]
        closure_bound caps the number of objects
    closure : bool
        Close the list under the tensor; otherwise require it to be closed
    values : str
        'truth' truncates every object to its inhabited cells, giving a thin
        fragment with identity alpha; 'sets' keeps the elements, takes
        objects up to isomorphism and all natural families as morphisms

    [RAISES]
    PreconditionError
        If a profunctor has a non-discrete domain, or the list is not closed
    BoundExceededError
        If closing the list exceeds bounds.closure_bound objects; a set-valued
        fragment over a non-discrete B always does, since i_* i^* i_* is
        strictly larger than i_*
    """
    bounds = bounds or BoundsConfig()
    if values == "sets":
        h = _set_fragment(B, objects, closure, bounds)
        logger.info(f"{len(h.profs)} set-valued objects in {h.moncat.name}")
        return h
    if values != "truth":
        raise ValueError(f"unknown hom values {values!r}")
    A = discrete_category(B.objects, name=f"ob{B.name}")
    unit = frozenset((b, a) for b in B.objects for a in B.objects if B.hom(b, a))
    given = [(P.name, _relation_of(P, B, endo=False)) for P in objects]
    h = _fragment(B, A, ("i", unit), given, relational_tensor(B), endo=False,
                  closure=closure, bound=bounds.closure_bound)
    logger.info(f"{len(h.relations)} objects in {h.moncat.name}")
    return h


def endo_moncat(B: FinCat,
                objects: Sequence[FinProf] = (),
                bounds: Optional[BoundsConfig] = None,
                closure: bool = True) -> HomSkewMonCat:
    """The monoidal fragment of K(B, B) under composition, unit hom_B."""
    bounds = bounds or BoundsConfig()
    unit = frozenset((b, a) for b in B.objects for a in B.objects if B.hom(b, a))
    given = [(P.name, _relation_of(P, B, endo=True)) for P in objects]
    return _fragment(B, B, ("hom", unit), given, relational_tensor(B), endo=True,
                     closure=closure, bound=bounds.closure_bound)


def u_functor(endo: HomSkewMonCat, target: Optional[HomSkewMonCat] = None,
              bounds: Optional[BoundsConfig] = None) -> MonoidalFunctor:
    """u = K(i, 1): restriction of endo-profunctors along i.

    u2 and u0 are identities of relations, so u is normal.

    [RAISES]
    PreconditionError
        If target lacks the image of some object
    """
    if not endo.endo:
        raise PreconditionError("u starts at an endo fragment K(B, B)")
    B = endo.B
    if target is None:
        target = hom_skew_moncat(B, [relation_prof(discrete_category(B.objects), B, r, name=n)
                                     for n, r in endo.relations.items()], bounds)
    image = {}
    for name, relation in endo.relations.items():
        found = target.name_of(relation)
        if found is None:
            raise PreconditionError(f"u({name}) is not an object of {target.moncat.name}")
        image[name] = found
    c, d = endo.moncat, target.moncat

    def arrow(p, q):
        return f"{p}<={q}"

    F = FinFunctor(
        c.base, d.base, image,
        {m: arrow(image[c.base.src[m]], image[c.base.tgt[m]]) for m in c.base.morphisms},
        name="u",
    )
    F2 = {(x, y): arrow(d.ot(image[x], image[y]), image[c.ot(x, y)])
          for x in c.base.objects for y in c.base.objects}
    return MonoidalFunctor(c, d, F, F2, arrow(d.unit, image[c.unit]), name="u")


# ---------------------------------------------------------------------------
# set-valued K(A, B)
# ---------------------------------------------------------------------------

Family = Dict[Tuple[Ident, Ident], Dict[Ident, Ident]]


def inclusion_functor(B: FinCat) -> FinFunctor:
    """i: A -> B from the discrete category on the objects of B."""
    A = discrete_category(B.objects, name=f"ob{B.name}")
    return FinFunctor(A, B, {a: a for a in A.objects},
                      {A.identity[a]: B.identity[a] for a in A.objects}, name="i")


def hom_unit(B: FinCat) -> FinProf:
    """i_*(b, a) = B(b, a), the unit of K(A, B)."""
    P = lower_star(inclusion_functor(B))
    return FinProf(P.dom, P.cod, P.values, P.left, P.right, name="i")


def identity_family(P: FinProf) -> Family:
    return {cell: {x: x for x in P.values[cell]} for cell in P.cells()}


def compose_families(psi: Family, phi: Family) -> Family:
    """psi after phi, cell by cell."""
    return {cell: {x: psi[cell][y] for x, y in table.items()} for cell, table in phi.items()}


def invert_family(phi: Family) -> Family:
    return {cell: {y: x for x, y in table.items()} for cell, table in phi.items()}


def family_key(phi: Family) -> FrozenSet:
    return frozenset((cell, frozenset(table.items())) for cell, table in phi.items())


def _hom_pair(g: FinProf, f: FinProf) -> None:
    if g.dom != f.dom or g.cod != f.cod:
        raise StructuralError(f"{g.name} and {f.name} are not objects of the same K(A, B)")
    if not g.dom.is_discrete() or set(g.dom.objects) != set(g.cod.objects):
        raise PreconditionError(f"{g.name} is not a profunctor from the objects of {g.cod.name}")


def hom_tensor(g: FinProf, f: FinProf, name: Optional[str] = None) -> FinProf:
    """g i^* f with the coend over A reduced away.

    Elements of (b, a) are triples (a', x, y) with x in g(b, a') and
    y in f(a', a); B acts on x, and A, being discrete, acts trivially.

    [RAISES]
    StructuralError
        If g and f are not parallel
    PreconditionError
        If their domain is not the discrete category on the objects of B
    """
    _hom_pair(g, f)
    A, B = g.dom, g.cod
    values = {
        (b, a): tuple((m, x, y) for m in A.objects for x in g.values[(b, m)] for y in f.values[(m, a)])
        for b in B.objects for a in A.objects
    }
    left = {(beta, a): {(m, x, y): (m, g.left[(beta, m)][x], y) for m, x, y in values[(B.tgt[beta], a)]}
            for beta in B.morphisms for a in A.objects}
    right = {(A.identity[a], b): {t: t for t in values[(b, a)]} for a in A.objects for b in B.objects}
    return FinProf(A, B, values, left, right, name=name or f"{g.name}*{f.name}")


def tensor_families(phi: Family, psi: Family, g: FinProf, f: FinProf) -> Family:
    """phi (x) psi on g i^* f, for phi out of g and psi out of f."""
    T = hom_tensor(g, f)
    return {(b, a): {(m, x, y): (m, phi[(b, m)][x], psi[(m, a)][y]) for m, x, y in T.values[(b, a)]}
            for b, a in T.cells()}


def hom_alpha(h: FinProf, g: FinProf, f: FinProf) -> Family:
    """(h g) f => h (g f): (a2, (a1, z, x), y) goes to (a1, z, (a2, x, y))."""
    T = hom_tensor(hom_tensor(h, g), f)
    return {cell: {(m2, (m1, z, x), y): (m1, z, (m2, x, y)) for m2, (m1, z, x), y in T.values[cell]}
            for cell in T.cells()}


def hom_lambda(f: FinProf) -> Family:
    """i f => f, acting on f by the arrow carried in i."""
    T = hom_tensor(hom_unit(f.cod), f)
    return {(b, a): {(m, beta, y): f.left[(beta, a)][y] for m, beta, y in T.values[(b, a)]}
            for b, a in T.cells()}


def hom_rho(f: FinProf) -> Family:
    """f => f i: x goes to (a, x, 1_a)."""
    B = f.cod
    return {(b, a): {x: (a, x, B.identity[a]) for x in f.values[(b, a)]} for b, a in f.cells()}


def _element_cases(witness: Dict, lhs: Family, rhs: Family) -> Iterator[Tuple[Dict, Ident, Ident]]:
    for cell, table in lhs.items():
        for x, y in table.items():
            yield {**witness, "cell": cell, "element": x}, y, rhs[cell][x]


@log_execution
def check_hom_structure(B: FinCat,
                        objects: Sequence[FinProf] = (),
                        bounds: Optional[BoundsConfig] = None) -> Report:
    """The set-valued skew structure of K(A, B) on i_* and the given profunctors.

    Nothing is closed under the tensor, so B need not be discrete: each
    axiom is evaluated element by element on tensors of the generators.

    [OUTPUT]
    Report
        tensor-coend, naturality.lambda, naturality.rho and axiom-1 .. axiom-5;
        meta right_normal is False when some rho is not surjective

    [RAISES]
    StructuralError
        If an object is not a profunctor into B
    PreconditionError
        If an object's domain is not the discrete category on the objects of B
    """
    bounds = bounds or BoundsConfig()
    i = hom_unit(B)
    for P in objects:
        _hom_pair(P, i)
        if not check_prof(P).ok:
            raise StructuralError(f"{P.name} is not a profunctor")
    gens = [i] + list(objects)
    report = Report(f"K(ob{B.name},{B.name}) on {', '.join(P.name for P in gens)}", "hom-structure")
    T, ident = hom_tensor, identity_family
    istar = upper_star(inclusion_functor(B))

    report.predicate("tensor-coend", (
        ({"g": g.name, "f": f.name},
         find_prof_iso(T(g, f), prof_compose(g, prof_compose(istar, f)), bounds.max_candidates) is not None)
        for g in gens for f in gens
    ))
    report.law("naturality.lambda", (
        case
        for f, f2 in product(gens, repeat=2)
        for phi in natural_families(f, f2, max_candidates=bounds.max_candidates)
        for case in _element_cases(
            {"from": f.name, "to": f2.name},
            compose_families(phi, hom_lambda(f)),
            compose_families(hom_lambda(f2), tensor_families(ident(i), phi, i, f)))
    ))
    report.law("naturality.rho", (
        case
        for f, f2 in product(gens, repeat=2)
        for phi in natural_families(f, f2, max_candidates=bounds.max_candidates)
        for case in _element_cases(
            {"from": f.name, "to": f2.name},
            compose_families(hom_rho(f2), phi),
            compose_families(tensor_families(phi, ident(i), f, i), hom_rho(f)))
    ))

    def pentagon():
        for w, x, y, z in product(gens, repeat=4):
            wx, xy = T(w, x), T(x, y)
            lhs = compose_families(
                tensor_families(ident(w), hom_alpha(x, y, z), w, T(xy, z)),
                compose_families(hom_alpha(w, xy, z),
                                 tensor_families(hom_alpha(w, x, y), ident(z), T(wx, y), z)))
            rhs = compose_families(hom_alpha(w, x, T(y, z)), hom_alpha(wx, y, z))
            yield from _element_cases({"w": w.name, "x": x.name, "y": y.name, "z": z.name}, lhs, rhs)

    def unit_middle():
        for x, y in product(gens, repeat=2):
            lhs = compose_families(
                tensor_families(ident(x), hom_lambda(y), x, T(i, y)),
                compose_families(hom_alpha(x, i, y), tensor_families(hom_rho(x), ident(y), x, y)))
            yield from _element_cases({"x": x.name, "y": y.name}, lhs, ident(T(x, y)))

    def left_unit():
        for x, y in product(gens, repeat=2):
            lhs = compose_families(hom_lambda(T(x, y)), hom_alpha(i, x, y))
            rhs = tensor_families(hom_lambda(x), ident(y), T(i, x), y)
            yield from _element_cases({"x": x.name, "y": y.name}, lhs, rhs)

    def right_unit():
        for x, y in product(gens, repeat=2):
            lhs = compose_families(hom_alpha(x, y, i), hom_rho(T(x, y)))
            rhs = tensor_families(ident(x), hom_rho(y), x, y)
            yield from _element_cases({"x": x.name, "y": y.name}, lhs, rhs)

    def unit_unit():
        yield from _element_cases({}, compose_families(hom_lambda(i), hom_rho(i)), ident(i))

    for n, cases in enumerate((pentagon, unit_middle, left_unit, right_unit, unit_unit), start=1):
        report.law(f"axiom-{n}", cases(), tag=AXIOM_TAGS[n])
    report.meta["right_normal"] = all(
        len(P.values[cell]) == len(T(P, i).values[cell]) for P in gens for cell in P.cells()
    )
    return report


def _classify(P: FinProf, profs: Dict[str, FinProf], bound: int, budget: int) -> Tuple[str, Family]:
    """Name of an object isomorphic to P and an iso into it, adding P if new."""
    for name, Q in profs.items():
        iso = find_prof_iso(P, Q, budget)
        if iso is not None:
            return name, iso
    if len(profs) >= bound:
        raise BoundExceededError(f"set-valued hom fragment over {P.cod.name} exceeds {bound} objects")
    profs[P.name] = P
    return P.name, identity_family(P)


def _set_fragment(B: FinCat, objects: Sequence[FinProf], closure: bool, bounds: BoundsConfig) -> HomSkewMonCat:
    """Objects up to isomorphism, morphisms every natural family.

    Each tensor g i^* f is replaced by the chosen representative of its
    isomorphism class; the tensor of morphisms and the constraints are
    carried across those isomorphisms.
    """
    i = hom_unit(B)
    A = i.dom
    for P in objects:
        _hom_pair(P, i)
        if not check_prof(P).ok:
            raise StructuralError(f"{P.name} is not a profunctor")
    bound, budget = bounds.closure_bound, bounds.max_candidates
    profs: Dict[str, FinProf] = {}
    _classify(i, profs, bound, budget)
    for P in objects:
        name, _ = _classify(P, profs, bound, budget)
        if name != P.name:
            logger.debug(f"{P.name} is isomorphic to {name}")

    theta: Dict[Tuple[str, str], Tuple[str, Family]] = {}
    changed = True
    while changed:
        changed = False
        for g, f in list(product(list(profs), repeat=2)):
            if (g, f) in theta:
                continue
            known = len(profs)
            theta[(g, f)] = _classify(hom_tensor(profs[g], profs[f], name=f"({g}*{f})"), profs, bound, budget)
            if len(profs) > known and not closure:
                raise PreconditionError(f"object list is not closed: {g}*{f} is missing")
            changed = True

    names = list(profs)
    families: Dict[Ident, Family] = {}
    morphisms, lookup = [], {}
    for p in names:
        for q in names:
            for k, phi in enumerate(natural_families(profs[p], profs[q], max_candidates=budget)):
                m = f"{p}=>{q}#{k}"
                morphisms.append((m, p, q))
                families[m] = phi
                lookup[(p, q, family_key(phi))] = m

    def find(p, q, phi):
        try:
            return lookup[(p, q, family_key(phi))]
        except KeyError:
            raise ConsistencyError(f"no morphism {p} => {q} with the computed components")

    ends = {m: (p, q) for m, p, q in morphisms}
    identity = {p: find(p, p, identity_family(profs[p])) for p in names}
    comp = {
        (g, f): find(ends[f][0], ends[g][1], compose_families(families[g], families[f]))
        for f, _, q in morphisms for g, p, _ in morphisms if p == q
    }
    base = make_category(names, morphisms, identity, comp, name=f"K({A.name},{B.name})")

    def ob(g, f):
        return theta[(g, f)][0]

    def into(g, f):
        return theta[(g, f)][1]

    def mor(u, v):
        (g, g2), (f, f2) = ends[u], ends[v]
        phi = tensor_families(families[u], families[v], profs[g], profs[f])
        fam = compose_families(into(g2, f2), compose_families(phi, invert_family(into(g, f))))
        return find(ob(g, f), ob(g2, f2), fam)

    def alpha_at(x, y, z):
        xy, yz = ob(x, y), ob(y, z)
        P = {n: profs[n] for n in (x, y, z, xy)}
        unfold = tensor_families(invert_family(into(x, y)), identity_family(P[z]), P[xy], P[z])
        fold = tensor_families(identity_family(P[x]), into(y, z), P[x], hom_tensor(P[y], P[z]))
        fam = compose_families(into(x, yz), compose_families(fold, compose_families(
            hom_alpha(P[x], P[y], P[z]), compose_families(unfold, invert_family(into(xy, z))))))
        return find(ob(xy, z), ob(x, yz), fam)

    unit = names[0]
    moncat = skew_moncat_from_functions(
        base, ob, mor, unit,
        alpha={(x, y, z): alpha_at(x, y, z) for x in names for y in names for z in names},
        lam={x: find(ob(unit, x), x, compose_families(hom_lambda(profs[x]), invert_family(into(unit, x))))
             for x in names},
        rho={x: find(x, ob(x, unit), compose_families(into(x, unit), hom_rho(profs[x]))) for x in names},
        name=base.name,
    )
    relations = {n: truncate(P) for n, P in profs.items()}
    return HomSkewMonCat(moncat, B, A, relations, endo=False, profs=profs)


# ---------------------------------------------------------------------------
# modules over i_* and their wedge
# ---------------------------------------------------------------------------

def restriction_action(g: FinProf) -> Family:
    """The right i_*-action on g.i of an endo-profunctor g: (a', x, beta) goes to x.beta."""
    M = restrict(g)
    T = hom_tensor(M, hom_unit(g.cod))
    return {(b, a): {(m, x, beta): g.right[(beta, b)][x] for m, x, beta in T.values[(b, a)]}
            for b, a in T.cells()}


def hom_wedge(M: FinProf, m: Family, N: FinProf, n: Optional[Family] = None,
              name: Optional[str] = None) -> Tuple[FinProf, Family]:
    """Coequalizer of m (x) 1 and (1 (x) n).alpha on (M i) N, cell by cell.

    m: M i => M and n: i N => N are the actions, n defaulting to lambda_N
    (only the left B-action of N takes part). The coequalizer is taken in
    sets at every (b, a) and B acts on classes.

    [OUTPUT]
    Tuple[FinProf, Family]
        The wedge W and the quotient M i^* N => W

    [RAISES]
    ConsistencyError
        If the induced left action is not well defined
    """
    i = hom_unit(M.cod)
    A, B = N.dom, M.cod
    if n is None:
        n = hom_lambda(N)
    pair_dom, target = hom_tensor(hom_tensor(M, i), N), hom_tensor(M, N)
    u = tensor_families(m, identity_family(N), hom_tensor(M, i), N)
    v = compose_families(tensor_families(identity_family(M), n, M, hom_tensor(i, N)), hom_alpha(M, i, N))
    values, q = {}, {}
    for cell in target.cells():
        X = FinSetObj(pair_dom.values[cell], name=f"{pair_dom.name}{label(cell)}")
        Y = FinSetObj(target.values[cell], name=f"{target.name}{label(cell)}")
        Q, proj = coequalizer_finset(FinSetMap(X, Y, u[cell]), FinSetMap(X, Y, v[cell]))
        values[cell], q[cell] = Q.elements, dict(proj.table)

    left = {}
    for beta in B.morphisms:
        for a in A.objects:
            table = {}
            for t, cls in q[(B.tgt[beta], a)].items():
                image = q[(B.src[beta], a)][target.left[(beta, a)][t]]
                if table.setdefault(cls, image) != image:
                    raise ConsistencyError(f"action on the wedge of {M.name} and {N.name} is not well defined")
            left[(beta, a)] = table
    right = {}
    for alpha in A.morphisms:
        for b in B.objects:
            table = {}
            for t, cls in q[(b, A.src[alpha])].items():
                image = q[(b, A.tgt[alpha])][target.right[(alpha, b)][t]]
                if table.setdefault(cls, image) != image:
                    raise ConsistencyError(f"action on the wedge of {M.name} and {N.name} is not well defined")
            right[(alpha, b)] = table
    W = FinProf(A, B, values, left, right, name=name or f"{M.name}|{N.name}")
    return W, q


def counit_cofork_cases(g: FinProf) -> Iterator[Tuple[Dict, bool]]:
    """g.eps exhibits g as the coequalizer of g.eps.E and g.E.eps, with E = i_* i^*.

    One case per cell (c, a): the coequalizer of the two legs
    g.E.E => g.E is computed in sets and must map bijectively onto g(c, a)
    through g.eps.
    """
    B = g.cod
    inc = inclusion_functor(B)
    E = prof_compose(lower_star(inc), upper_star(inc))
    GE = prof_compose(g, E)
    GEE = prof_compose(GE, E)
    classes = coend_classes(g, E)

    def eps(e):
        return B.comp[(e[2], e[1])]

    for c, a in GE.cells():
        X = FinSetObj(GEE.values[(c, a)], name="gEE")
        Y = FinSetObj(GE.values[(c, a)], name="gE")
        u = FinSetMap(X, Y, {
            (b, (b2, x, e1), e2): classes[(c, a)][(b, g.right[(eps(e1), c)][x], e2)]
            for b, (b2, x, e1), e2 in X
        })
        v = FinSetMap(X, Y, {(b, z, e2): GE.right[(eps(e2), c)][z] for b, z, e2 in X})
        Q, proj = coequalizer_finset(u, v)
        induced = {}
        well_defined = True
        for b, x, e in Y:
            image = g.right[(eps(e), c)][x]
            well_defined &= induced.setdefault(proj((b, x, e)), image) == image
        bijective = well_defined and sorted(map(str, induced.values())) == sorted(map(str, g.values[(c, a)]))
        yield {"profunctor": g.name, "cell": (c, a), "classes": len(Q), "size": len(g.values[(c, a)])}, bijective


# ---------------------------------------------------------------------------
# monoids and mw-monads
# ---------------------------------------------------------------------------

MONOID_MW_CORRESPONDENCE = {
    "monoid-associativity": "mw-extension-composition",
    "monoid-left-unit": "mw-unit-extension",
    "monoid-right-unit": "mw-extension-unit",
}


def is_thin(B: FinCat) -> bool:
    return all(len(B.hom(x, y)) <= 1 for x in B.objects for y in B.objects)


def representing_object(P: FinProf, a: Ident) -> Optional[Tuple[Ident, Ident]]:
    """(r, u) with beta -> beta.u a bijection B(b, r) -> P(b, a) for all b."""
    B = P.cod
    for r in B.objects:
        for u in P.values[(r, a)]:
            if all(
                sorted(map(str, (P.act_left(beta, a, u) for beta in B.hom(b, r)))) ==
                sorted(map(str, P.values[(b, a)])) and len(B.hom(b, r)) == len(P.values[(b, a)])
                for b in B.objects
            ):
                return r, u
    return None


def is_functor_valued(P: FinProf) -> bool:
    """Whether every P(-, a) is representable."""
    return all(representing_object(P, a) is not None for a in P.dom.objects)


def restrict(P: FinProf) -> FinProf:
    """P.i for P: B -|-> B: the right action is forgotten."""
    A = discrete_category(P.dom.objects, name=f"ob{P.dom.name}")
    right = {(A.identity[a], b): {x: x for x in P.values[(b, a)]} for a in A.objects for b in P.cod.objects}
    left = {(beta, a): P.left[(beta, a)] for beta in P.cod.morphisms for a in A.objects}
    return FinProf(A, P.cod, dict(P.values), left, right, name=f"{P.name}.i")


def monoid_to_mw(m: Monoid, h: HomSkewMonCat) -> MwMonad:
    """The mw-monad of a monoid with functor-valued carrier, for thin B.

    Only the object part D of the mw-monad is read off the carrier; the
    extension is rebuilt by mw_from_closure, which takes x <= Dy in B as
    the only data. Over a non-thin B an mw-monad carries a choice of arrows
    that a hom fragment of representing objects does not determine, so
    the translation is refused there.

    [RAISES]
    PreconditionError
        If B is not thin (some B(x, y) has two arrows), or the carrier is not
        functor-valued at some object
    ConsistencyError
        If the rebuilt mw-monad fails its laws
    """
    B = h.B
    if not is_thin(B):
        raise PreconditionError(f"{B.name} is not thin")
    carrier = h.profunctor(m.carrier)
    D = {}
    for a in B.objects:
        found = representing_object(carrier, a)
        if found is None:
            raise PreconditionError(f"{m.carrier} is not functor-valued at {label(a)}")
        D[a] = found[0]
    t = mw_from_closure(B, D, name=f"mw({m.carrier})")
    if not check_mw_monad(t).ok:
        raise ConsistencyError(f"monoid on {m.carrier} does not give an mw-monad")
    return t


def mw_to_monoid(t: MwMonad, h: HomSkewMonCat) -> Monoid:
    """The monoid with carrier d_*(b, a) = B(b, Da).

    [RAISES]
    PreconditionError
        If B is not thin or d_* is not an object of h
    """
    B = h.B
    if not is_thin(B):
        raise PreconditionError(f"{B.name} is not thin")
    relation = frozenset((b, a) for b in B.objects for a in B.objects if B.hom(b, t.D[a]))
    carrier = h.name_of(relation)
    if carrier is None:
        raise PreconditionError(f"the carrier of {t.name} is not an object of {h.moncat.name}")
    c = h.moncat
    mult = c.base.hom(c.ot(carrier, carrier), carrier)
    unit = c.base.hom(c.unit, carrier)
    if not mult or not unit:
        raise ConsistencyError(f"{t.name} does not induce a monoid structure on {carrier}")
    return Monoid(c, carrier, mult[0], unit[0])


@log_execution
def monoid_dictionary(h: HomSkewMonCat, bounds: Optional[BoundsConfig] = None) -> Report:
    """Monoids with functor-valued carrier against the mw-monads on B.

    [WORKFLOW]
    1. Enumerate the monoids of the fragment and keep the functor-valued ones
    2. Enumerate the mw-monads on B
    3. Send each side across and back; the counts must agree

    [RAISES]
    PreconditionError
        If B is not thin, or an mw-monad's carrier is missing from h
    """
    bounds = bounds or BoundsConfig()
    report = Report(f"monoids of {h.moncat.name}", "hom-monoid")
    monoids = enumerate_monoids(h.moncat, bounds)
    carried = [m for m in monoids if is_functor_valued(h.profunctor(m.carrier))]
    mws = enumerate_mw(h.B, bounds)
    report.meta.update(monoids=len(monoids), functor_valued=len(carried), mw_monads=len(mws))

    pairs = [(m, monoid_to_mw(m, h)) for m in carried]
    report.predicate("monoid-to-mw", (({"carrier": m.carrier}, check_mw_monad(t).ok) for m, t in pairs))
    report.predicate("monoid-roundtrip", (
        ({"carrier": m.carrier}, mw_to_monoid(t, h).carrier == m.carrier) for m, t in pairs
    ))
    report.predicate("mw-roundtrip", (
        ({"mw": t.name}, dict(monoid_to_mw(mw_to_monoid(t, h), h).D) == dict(t.D)) for t in mws
    ))
    distinct = len({m.carrier for m in carried}) == len(carried)
    report.record("bijection", PASS if distinct and len(carried) == len(mws) else FAIL,
                  checked=len(carried) + len(mws),
                  detail=f"{len(carried)} functor-valued monoids, {len(mws)} mw-monads")
    return report
