"""
Monads and mw-monads on finite categories.

An mw-monad is presented without iterating D: an object function D, units
K_X: X -> DX and an extension T sending f: X -> DY to Tf: DX -> DY. Since D
need not be injective on objects, T is keyed by the pair (f, Y).
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from ..core.fincat import (FinCat, FinFunctor, NatTrans, Ident, check_functor, check_nat_trans,
                           compose_functors, enumerate_functors, identity_functor)
from ..core.report import Report, STRUCTURAL, label
from ..utils.config import BoundsConfig
from ..utils.errors import BoundExceededError, ConsistencyError, PreconditionError, StructuralError
from ..utils.logger import setup_logger, log_execution

logger = setup_logger(__name__)


@dataclass(frozen=True)
class Monad:
    base: FinCat
    D: FinFunctor
    mult: NatTrans
    unit: NatTrans
    name: str = field(default="D", compare=False)


@dataclass(frozen=True)
class MwMonad:
    """An mw-monad.

    [ATTRIBUTES]
    base : FinCat
        Underlying category
    D : Mapping[Ident, Ident]
        Object function
    T : Mapping[Tuple[Ident, Ident], Ident]
        (f, Y) -> Tf: DX -> DY for every f: X -> DY
    K : Mapping[Ident, Ident]
        X -> K_X: X -> DX
    """
    base: FinCat
    D: Mapping[Ident, Ident]
    T: Mapping[Tuple[Ident, Ident], Ident]
    K: Mapping[Ident, Ident]
    name: str = field(default="T", compare=False)

    def ext(self, f: Ident, y: Ident) -> Ident:
        try:
            return self.T[(f, y)]
        except KeyError:
            raise StructuralError(f"T undefined on ({label(f)}, {label(y)}) in {self.name}")

    def extension_keys(self) -> Iterator[Tuple[Ident, Ident]]:
        """Every (f, Y) with f: X -> DY, in canonical order."""
        c = self.base
        for x in c.objects:
            for y in c.objects:
                for f in c.hom(x, self.D[y]):
                    yield f, y


@dataclass(frozen=True)
class MwAlgebra:
    """An mw-algebra: E sends g: Y -> A to Eg: DY -> A."""
    ambient: MwMonad
    carrier: Ident
    E: Mapping[Ident, Ident]
    name: str = field(default="A", compare=False)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def make_monad(D: FinFunctor,
               mult: Mapping[Ident, Ident],
               unit: Mapping[Ident, Ident],
               name: str = "D") -> Monad:
    """Package component tables as a Monad."""
    c = D.dom
    return Monad(
        c, D,
        NatTrans(compose_functors(D, D), D, dict(mult), name="m"),
        NatTrans(identity_functor(c), D, dict(unit), name="K"),
        name=name,
    )


def identity_mw(c: FinCat) -> MwMonad:
    return MwMonad(
        c, {x: x for x in c.objects},
        {(f, c.tgt[f]): f for f in c.morphisms},
        {x: c.identity[x] for x in c.objects},
        name=f"1_{c.name}",
    )


def mw_from_closure(c: FinCat, closure: Mapping[Ident, Ident], name: str = "cl") -> MwMonad:
    """An mw-monad on a preorder from an object map; every T value is forced.

    [RAISES]
    StructuralError
        If a required arrow does not exist
    """
    def arrow(x, y):
        found = c.hom(x, y)
        if not found:
            raise StructuralError(f"no arrow {label(x)} -> {label(y)} in {c.name}")
        return found[0]

    T = {}
    for x in c.objects:
        for y in c.objects:
            for f in c.hom(x, closure[y]):
                T[(f, y)] = arrow(closure[x], closure[y])
    return MwMonad(c, dict(closure), T, {x: arrow(x, closure[x]) for x in c.objects}, name=name)


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def check_monad(m: Monad) -> Report:
    """Functoriality, naturality and the monad laws, componentwise."""
    report = Report(m.name, "monad")
    report.merge(check_functor(m.D), prefix="D.")
    if report.ok:
        report.merge(check_nat_trans(m.mult), prefix="mult.")
        report.merge(check_nat_trans(m.unit), prefix="unit.")
    if not report.ok:
        return report
    c, D = m.base, m.D
    report.law("associativity", (
        ({"object": x},
         c.compose(m.mult[x], D(m.mult[x])),
         c.compose(m.mult[x], m.mult[D.ob(x)]))
        for x in c.objects
    ))
    report.law("left-unit", (
        ({"object": x}, c.compose(m.mult[x], m.unit[D.ob(x)]), c.identity[D.ob(x)])
        for x in c.objects
    ))
    report.law("right-unit", (
        ({"object": x}, c.compose(m.mult[x], D(m.unit[x])), c.identity[D.ob(x)])
        for x in c.objects
    ))
    return report


def _mw_structure(t: MwMonad) -> Optional[Tuple[str, Dict[str, Ident]]]:
    c = t.base
    for x in c.objects:
        if t.D.get(x) not in c.object_index:
            return "D undefined or outside the category", {"object": x}
    for x in c.objects:
        k = t.K.get(x)
        if k not in c.morphism_index or (c.src[k], c.tgt[k]) != (x, t.D[x]):
            return "unit missing or mistyped", {"object": x}
    for f, y in t.extension_keys():
        tf = t.T.get((f, y))
        if tf not in c.morphism_index or (c.src[tf], c.tgt[tf]) != (t.D[c.src[f]], t.D[y]):
            return "extension missing or mistyped", {"f": f, "Y": y}
    return None


def check_mw_monad(t: MwMonad) -> Report:
    """The three mw-monad equations over all valid arguments.

    [OUTPUT]
    Report
        structure.mw on malformed tables, otherwise extension-composition,
        extension-unit, unit-extension

    [EXAMPLE]
    >>> check_mw_monad(identity_mw(chain_category(3))).ok
    True
    """
    report = Report(t.name, "mw-monad")
    problem = _mw_structure(t)
    if problem:
        report.record("structure.mw", STRUCTURAL, witness=problem[1], detail=problem[0])
        return report
    c = t.base

    def composition_cases():
        for f, y in t.extension_keys():
            tf = t.T[(f, y)]
            for z in c.objects:
                for g in c.hom(y, t.D[z]):
                    tg = t.T[(g, z)]
                    yield ({"f": f, "g": g},
                           c.compose(tg, tf),
                           t.ext(c.compose(tg, f), z))

    report.law("extension-composition", composition_cases(), tag="mw-extension-composition")
    report.law("extension-unit", (
        ({"f": f}, c.compose(t.T[(f, y)], t.K[c.src[f]]), f) for f, y in t.extension_keys()
    ), tag="mw-extension-unit")
    report.law("unit-extension", (
        ({"object": x}, t.ext(t.K[x], x), c.identity[t.D[x]]) for x in c.objects
    ), tag="mw-unit-extension")
    return report


# ---------------------------------------------------------------------------
# the two constructions
# ---------------------------------------------------------------------------

def induced_functor(t: MwMonad) -> FinFunctor:
    """D on morphisms: f: X -> Y goes to T(K_Y o f)."""
    c = t.base
    return FinFunctor(
        c, c, dict(t.D),
        {f: t.ext(c.compose(t.K[c.tgt[f]], f), c.tgt[f]) for f in c.morphisms},
        name="D",
    )


def mw_to_monad(t: MwMonad) -> Monad:
    """The monad of an mw-monad; multiplication at X is T(1_DX).

    [RAISES]
    ConsistencyError
        If the output violates a monad law
    """
    c = t.base
    D = induced_functor(t)
    m = make_monad(D, {x: t.ext(c.identity[t.D[x]], x) for x in c.objects}, dict(t.K), name=t.name)
    report = check_monad(m)
    if not report.ok:
        raise ConsistencyError(f"monad induced by {t.name} fails {report.failures[0].name}")
    return m


def monad_to_mw(m: Monad) -> MwMonad:
    """The mw-monad of a monad: Tf = m_Y o Df.

    [RAISES]
    ConsistencyError
        If the output violates an mw-monad law
    """
    c, D = m.base, m.D
    obj = {x: D.ob(x) for x in c.objects}
    T = {}
    for x in c.objects:
        for y in c.objects:
            for f in c.hom(x, obj[y]):
                T[(f, y)] = c.compose(m.mult[y], D(f))
    t = MwMonad(c, obj, T, dict(m.unit.components), name=m.name)
    report = check_mw_monad(t)
    if not report.ok:
        raise ConsistencyError(f"mw-monad induced by {m.name} fails {report.failures[0].name}")
    return t


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _guard(c: FinCat, bounds: BoundsConfig) -> None:
    if len(c.objects) > bounds.max_base_objects:
        raise BoundExceededError(
            f"{c.name} has {len(c.objects)} objects, enumeration bound is {bounds.max_base_objects}")
    if len(c.morphisms) > bounds.max_morphisms:
        raise BoundExceededError(
            f"{c.name} has {len(c.morphisms)} morphisms, enumeration bound is {bounds.max_morphisms}")


class _Budget:
    def __init__(self, limit: int, what: str):
        self.limit, self.what, self.used = limit, what, 0

    def spend(self, n: int = 1) -> None:
        self.used += n
        if self.used > self.limit:
            raise BoundExceededError(f"{self.what} exceeds {self.limit} candidates")


@log_execution(level=logging.DEBUG)
def enumerate_monads(c: FinCat, bounds: Optional[BoundsConfig] = None) -> List[Monad]:
    """Every monad on c: functors, then natural units, then multiplications.

    [RAISES]
    BoundExceededError
        If c is too large or the search exceeds bounds.max_candidates
    """
    bounds = bounds or BoundsConfig()
    _guard(c, bounds)
    budget = _Budget(bounds.max_candidates, f"monad enumeration on {c.name}")
    found = []
    for D in enumerate_functors(c, c, bounds.max_candidates):
        units = [dict(zip(c.objects, ks))
                 for ks in product(*(c.hom(x, D.ob(x)) for x in c.objects))]
        units = [k for k in units
                 if all(c.compose(D(f), k[c.src[f]]) == c.compose(k[c.tgt[f]], f) for f in c.morphisms)]
        for unit in units:
            for ms in product(*(c.hom(D.ob(D.ob(x)), D.ob(x)) for x in c.objects)):
                budget.spend()
                m = make_monad(D, dict(zip(c.objects, ms)), unit, name=f"D{len(found)}")
                if check_monad(m).ok:
                    found.append(m)
    logger.info(f"{len(found)} monads on {c.name}")
    return found


@log_execution(level=logging.DEBUG)
def enumerate_mw(c: FinCat, bounds: Optional[BoundsConfig] = None) -> List[MwMonad]:
    """Every mw-monad on c, pruning extension values by Tf o K = f."""
    bounds = bounds or BoundsConfig()
    _guard(c, bounds)
    budget = _Budget(bounds.max_candidates, f"mw-monad enumeration on {c.name}")
    found = []
    for images in product(c.objects, repeat=len(c.objects)):
        D = dict(zip(c.objects, images))
        for ks in product(*(c.hom(x, D[x]) for x in c.objects)):
            K = dict(zip(c.objects, ks))
            keys = [(f, y) for x in c.objects for y in c.objects for f in c.hom(x, D[y])]
            options = []
            for f, y in keys:
                x = c.src[f]
                candidates = [tf for tf in c.hom(D[x], D[y]) if c.comp[(tf, K[x])] == f]
                if f == K[x] and y == x:
                    candidates = [tf for tf in candidates if tf == c.identity[D[x]]]
                options.append(candidates)
            for values in product(*options):
                budget.spend()
                t = MwMonad(c, D, dict(zip(keys, values)), K, name=f"T{len(found)}")
                if check_mw_monad(t).ok:
                    found.append(t)
    logger.info(f"{len(found)} mw-monads on {c.name}")
    return found


# ---------------------------------------------------------------------------
# Kleisli category
# ---------------------------------------------------------------------------

def kleisli_id(t: MwMonad, f: Ident, y: Ident) -> Ident:
    """Identifier of f: X -> DY as a Kleisli arrow X -> Y.

    f itself when Y is the only object with image DY, otherwise (f, Y).
    """
    shared = sum(1 for z in t.base.objects if t.D[z] == t.D[y])
    return f if shared == 1 else (f, y)


def kleisli_mw(t: MwMonad) -> FinCat:
    """Kleisli category: hom(X, Y) = hom(X, DY), composite Tg o f, identity K."""
    c = t.base
    keys = list(t.extension_keys())
    ids = {(f, y): kleisli_id(t, f, y) for f, y in keys}
    comp = {}
    for f, y in keys:
        for z in c.objects:
            for g in c.hom(y, t.D[z]):
                comp[(ids[(g, z)], ids[(f, y)])] = ids[(c.compose(t.ext(g, z), f), z)]
    return FinCat(
        objects=c.objects,
        morphisms=tuple(ids[key] for key in keys),
        src={ids[(f, y)]: c.src[f] for f, y in keys},
        tgt={ids[(f, y)]: y for f, y in keys},
        identity={x: ids[(t.K[x], x)] for x in c.objects},
        comp=comp,
        name=f"{c.name}_{t.name}",
    )


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------

def check_mw_algebra(a: MwAlgebra) -> Report:
    t, A = a.ambient, a.carrier
    c = t.base
    report = Report(a.name, "mw-algebra")
    for g in c.morphisms:
        if c.tgt[g] != A:
            continue
        e = a.E.get(g)
        if e not in c.morphism_index or (c.src[e], c.tgt[e]) != (t.D[c.src[g]], A):
            report.record("structure.algebra", STRUCTURAL, witness={"g": g},
                          detail="E missing or mistyped")
            return report
    into = [g for g in c.morphisms if c.tgt[g] == A]
    report.law("unit", (
        ({"g": g}, c.compose(a.E[g], t.K[c.src[g]]), g) for g in into
    ), tag="mw-algebra-unit")
    report.law("extension", (
        ({"g": g, "f": f},
         c.compose(a.E[g], t.T[(f, c.src[g])]),
         a.E.get(c.compose(a.E[g], f)))
        for g in into
        for x in c.objects for f in c.hom(x, t.D[c.src[g]])
    ), tag="mw-algebra-extension")
    return report


def mw_algebra_to_em(a: MwAlgebra) -> Ident:
    """Structure map E(1_A): DA -> A."""
    return a.E[a.ambient.base.identity[a.carrier]]


def em_to_mw_algebra(t: MwMonad, carrier: Ident, h: Ident) -> MwAlgebra:
    """E(g) = h o T(K o g) for g: Y -> A."""
    c = t.base
    E = {g: c.compose(h, t.ext(c.compose(t.K[carrier], g), carrier))
         for g in c.morphisms if c.tgt[g] == carrier}
    return MwAlgebra(t, carrier, E, name=f"({label(carrier)}, {label(h)})")


def check_em_algebra(m: Monad, carrier: Ident, h: Ident) -> Report:
    c, D = m.base, m.D
    report = Report(f"({label(carrier)}, {label(h)})", "em-algebra")
    if (c.src.get(h), c.tgt.get(h)) != (D.ob(carrier), carrier):
        report.record("structure.algebra", STRUCTURAL, witness={"h": h},
                      detail="structure map mistyped")
        return report
    report.law("em-unit", [({"carrier": carrier}, c.compose(h, m.unit[carrier]), c.identity[carrier])])
    report.law("em-associativity", [({"carrier": carrier},
                                      c.compose(h, D(h)), c.compose(h, m.mult[carrier]))])
    return report


def enumerate_em_algebras(m: Monad) -> List[Tuple[Ident, Ident]]:
    c = m.base
    return [(a, h) for a in c.objects for h in c.hom(m.D.ob(a), a)
            if check_em_algebra(m, a, h).ok]


def enumerate_mw_algebras(t: MwMonad, bounds: Optional[BoundsConfig] = None) -> List[MwAlgebra]:
    """Every mw-algebra, pruning E values by Eg o K = g."""
    bounds = bounds or BoundsConfig()
    budget = _Budget(bounds.max_candidates, f"mw-algebra enumeration for {t.name}")
    c = t.base
    found = []
    for A in c.objects:
        into = [g for g in c.morphisms if c.tgt[g] == A]
        options = [[e for e in c.hom(t.D[c.src[g]], A) if c.comp[(e, t.K[c.src[g]])] == g]
                   for g in into]
        for values in product(*options):
            budget.spend()
            a = MwAlgebra(t, A, dict(zip(into, values)), name=f"{label(A)}#{len(found)}")
            if check_mw_algebra(a).ok:
                found.append(a)
    return found


def require_valid(t: MwMonad) -> None:
    """[RAISES] PreconditionError if t is not an mw-monad."""
    report = check_mw_monad(t)
    if not report.ok:
        raise PreconditionError(f"{t.name} is not an mw-monad: {report.failures[0].name} fails")
