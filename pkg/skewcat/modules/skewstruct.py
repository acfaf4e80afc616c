"""
Skew monoidal categories and skew bicategories.

Conventions
-----------
In a skew bicategory the composite of f: X -> Y and g: Y -> Z is M(g, f),
written gf. Components are keyed by 1-cells in the order they are composed:

    alpha[(f, g, h)] : (hg)f -> h(gf)
    lam[f]           : 1f -> f
    rho[f]           : f -> f1

A skew monoidal category is the one-object case. Its tensor is X (x) Y =
M(X, Y) and its components are keyed by objects left to right:

    alpha[(X, Y, Z)] : (XY)Z -> X(YZ)

so suspension sends alpha[(X, Y, Z)] to the bicategory component at (Z, Y, X).
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from ..core.fincat import (FinCat, FinFunctor, Ident, discrete_category, identity_functor,
                           is_iso, product_category, terminal_category, check_functor,
                           validate_category)
from ..core.report import Report, STRUCTURAL, label
from ..utils.config import BoundsConfig
from ..utils.errors import BoundExceededError, PreconditionError, StructuralError
from ..utils.logger import setup_logger

logger = setup_logger(__name__)

AXIOM_TAGS = {
    1: "skew-pentagon",
    2: "skew-unit-middle",
    3: "skew-left-unit",
    4: "skew-right-unit",
    5: "skew-unit-unit",
}


@dataclass(frozen=True)
class SkewMonCat:
    """A finite skew monoidal category.

    [ATTRIBUTES]
    base : FinCat
        Underlying category
    tensor : FinFunctor
        base x base -> base
    unit : Ident
        Unit object I
    alpha : Mapping[Tuple[Ident, Ident, Ident], Ident]
        (X, Y, Z) -> (XY)Z -> X(YZ)
    lam : Mapping[Ident, Ident]
        X -> IX -> X
    rho : Mapping[Ident, Ident]
        X -> X -> XI
    """
    base: FinCat
    tensor: FinFunctor
    unit: Ident
    alpha: Mapping[Tuple[Ident, Ident, Ident], Ident]
    lam: Mapping[Ident, Ident]
    rho: Mapping[Ident, Ident]
    name: str = field(default="C", compare=False)

    def ot(self, x: Ident, y: Ident) -> Ident:
        """Tensor of objects."""
        return self.tensor.ob((x, y))

    def mt(self, f: Ident, g: Ident) -> Ident:
        """Tensor of morphisms."""
        return self.tensor((f, g))

    def id(self, x: Ident) -> Ident:
        return self.base.id(x)

    def compose(self, *ms: Ident) -> Ident:
        return self.base.compose(*ms)

    def right_tensor(self, z: Ident) -> FinFunctor:
        """The endofunctor - (x) Z."""
        one = self.id(z)
        return FinFunctor(
            self.base, self.base,
            {x: self.ot(x, z) for x in self.base.objects},
            {f: self.mt(f, one) for f in self.base.morphisms},
            name=f"-({label(z)})",
        )


@dataclass(frozen=True)
class SkewBicat:
    """A finite skew bicategory.

    1-cells are the objects of the hom categories and 2-cells their
    morphisms; both must be unique across all homs.
    """
    cells0: Tuple[Ident, ...]
    hom: Mapping[Tuple[Ident, Ident], FinCat]
    M: Mapping[Tuple[Ident, Ident, Ident], FinFunctor]
    j: Mapping[Ident, Ident]
    alpha: Mapping[Tuple[Ident, Ident, Ident], Ident]
    lam: Mapping[Ident, Ident]
    rho: Mapping[Ident, Ident]
    name: str = field(default="B", compare=False)

    @cached_property
    def _one_cell_ends(self) -> Dict[Ident, Tuple[Ident, Ident]]:
        return {f: key for key in self.hom_keys() for f in self.hom[key].objects}

    @cached_property
    def _two_cell_ends(self) -> Dict[Ident, Tuple[Ident, Ident]]:
        return {a: key for key in self.hom_keys() for a in self.hom[key].morphisms}

    @cached_property
    def _starting(self) -> Dict[Ident, Tuple[Ident, ...]]:
        out: Dict[Ident, List[Ident]] = {x: [] for x in self.cells0}
        for key in self.hom_keys():
            out[key[0]].extend(self.hom[key].objects)
        return {x: tuple(fs) for x, fs in out.items()}

    def hom_keys(self) -> List[Tuple[Ident, Ident]]:
        return [(x, y) for x in self.cells0 for y in self.cells0 if (x, y) in self.hom]

    def homcat(self, x: Ident, y: Ident) -> FinCat:
        try:
            return self.hom[(x, y)]
        except KeyError:
            raise StructuralError(f"no hom category ({label(x)}, {label(y)}) in {self.name}")

    def ends(self, f: Ident) -> Tuple[Ident, Ident]:
        try:
            return self._one_cell_ends[f]
        except KeyError:
            raise StructuralError(f"unknown 1-cell {label(f)} in {self.name}")

    def cell_hom(self, a: Ident) -> FinCat:
        try:
            return self.hom[self._two_cell_ends[a]]
        except KeyError:
            raise StructuralError(f"unknown 2-cell {label(a)} in {self.name}")

    def one_cells(self) -> List[Ident]:
        return [f for key in self.hom_keys() for f in self.hom[key].objects]

    def two_cells(self) -> List[Ident]:
        return [a for key in self.hom_keys() for a in self.hom[key].morphisms]

    def starting_at(self, x: Ident) -> Tuple[Ident, ...]:
        return self._starting.get(x, ())

    def dom2(self, a: Ident) -> Ident:
        return self.cell_hom(a).src[a]

    def cod2(self, a: Ident) -> Ident:
        return self.cell_hom(a).tgt[a]

    def _functor(self, x: Ident, y: Ident, z: Ident) -> FinFunctor:
        try:
            return self.M[(x, y, z)]
        except KeyError:
            raise StructuralError(
                f"no composition functor at ({label(x)}, {label(y)}, {label(z)}) in {self.name}")

    def comp1(self, g: Ident, f: Ident) -> Ident:
        """The 1-cell gf = M(g, f)."""
        x, y = self.ends(f)
        y2, z = self.ends(g)
        if y != y2:
            raise StructuralError(f"1-cells {label(g)} and {label(f)} are not composable")
        return self._functor(x, y, z).ob((g, f))

    def comp2(self, b: Ident, a: Ident) -> Ident:
        """Horizontal composite M(b, a) of 2-cells."""
        x, y = self._two_cell_ends.get(a, (None, None))
        y2, z = self._two_cell_ends.get(b, (None, None))
        if x is None or y2 is None or y != y2:
            raise StructuralError(f"2-cells {label(b)} and {label(a)} are not composable")
        return self._functor(x, y, z)((b, a))

    def vcomp(self, *cells: Ident) -> Ident:
        """Vertical composite, right to left."""
        return self.cell_hom(cells[0]).compose(*cells)

    def id2(self, f: Ident) -> Ident:
        return self.homcat(*self.ends(f)).id(f)

    def unit(self, x: Ident) -> Ident:
        try:
            return self.j[x]
        except KeyError:
            raise StructuralError(f"no unit 1-cell at {label(x)} in {self.name}")

    def composable_pairs(self) -> Iterator[Tuple[Ident, Ident]]:
        """(f, g) with gf defined."""
        for f in self.one_cells():
            for g in self.starting_at(self.ends(f)[1]):
                yield f, g

    def composable_triples(self) -> Iterator[Tuple[Ident, Ident, Ident]]:
        for f, g in self.composable_pairs():
            for h in self.starting_at(self.ends(g)[1]):
                yield f, g, h

    def composable_quadruples(self) -> Iterator[Tuple[Ident, Ident, Ident, Ident]]:
        for f, g, h in self.composable_triples():
            for k in self.starting_at(self.ends(h)[1]):
                yield f, g, h, k


@dataclass(frozen=True)
class Monoid:
    ambient: SkewMonCat
    carrier: Ident
    mult: Ident
    unit: Ident


@dataclass(frozen=True)
class MonoidalFunctor:
    """A (lax) monoidal functor between skew monoidal categories.

    F2[(X, Y)] : FX (x) FY -> F(X (x) Y) and F0 : I -> FI.
    """
    dom: SkewMonCat
    cod: SkewMonCat
    F: FinFunctor
    F2: Mapping[Tuple[Ident, Ident], Ident]
    F0: Ident
    name: str = field(default="F", compare=False)


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def skew_moncat_from_functions(base: FinCat,
                               tensor_ob: Callable[[Ident, Ident], Ident],
                               tensor_mor: Callable[[Ident, Ident], Ident],
                               unit: Ident,
                               alpha: Mapping[Tuple[Ident, Ident, Ident], Ident],
                               lam: Mapping[Ident, Ident],
                               rho: Mapping[Ident, Ident],
                               name: str = "C") -> SkewMonCat:
    """Assemble a SkewMonCat from tensor functions on objects and morphisms."""
    square = product_category(base, base)
    tensor = FinFunctor(
        square, base,
        {(x, y): tensor_ob(x, y) for x, y in square.objects},
        {(f, g): tensor_mor(f, g) for f, g in square.morphisms},
        name="(x)",
    )
    return SkewMonCat(base, tensor, unit, dict(alpha), dict(lam), dict(rho), name=name)


def terminal_skew_moncat() -> SkewMonCat:
    one = terminal_category()
    return skew_moncat_from_functions(
        one, lambda x, y: "*", lambda f, g: "1_*", "*",
        {("*", "*", "*"): "1_*"}, {"*": "1_*"}, {"*": "1_*"}, name="1",
    )


def suspension(c: SkewMonCat) -> SkewBicat:
    """The one-object skew bicategory with hom category c.base."""
    return SkewBicat(
        cells0=("*",),
        hom={("*", "*"): c.base},
        M={("*", "*", "*"): c.tensor},
        j={"*": c.unit},
        alpha={(f, g, h): m for (h, g, f), m in c.alpha.items()},
        lam=dict(c.lam),
        rho=dict(c.rho),
        name=f"S{c.name}",
    )


def desuspension(b: SkewBicat) -> SkewMonCat:
    """Inverse of suspension.

    [RAISES]
    PreconditionError
        If b does not have exactly one 0-cell
    """
    if len(b.cells0) != 1:
        raise PreconditionError(f"{b.name} has {len(b.cells0)} 0-cells, expected one")
    (x,) = b.cells0
    name = b.name[1:] if b.name.startswith("S") and len(b.name) > 1 else b.name
    return SkewMonCat(
        base=b.homcat(x, x),
        tensor=b.M[(x, x, x)],
        unit=b.unit(x),
        alpha={(z, y, w): m for (w, y, z), m in b.alpha.items()},
        lam=dict(b.lam),
        rho=dict(b.rho),
        name=name,
    )


def locally_discrete(c: FinCat) -> SkewBicat:
    """A category as a skew bicategory with only identity 2-cells.

    1-cells are the morphisms of c, M is composition and alpha, lambda, rho
    are identities. Typing of those identities holds exactly when c satisfies
    the category laws.

    [RAISES]
    StructuralError
        If composition is undefined on a composable pair
    """
    homs = {(x, y): discrete_category(c.hom(x, y), name=f"{c.name}({label(x)},{label(y)})")
            for x in c.objects for y in c.objects}

    def composite(g, f):
        try:
            return c.comp[(g, f)]
        except KeyError:
            raise StructuralError(f"{label(g)} o {label(f)} is undefined in {c.name}")

    functors = {}
    for x in c.objects:
        for y in c.objects:
            for z in c.objects:
                dom = product_category(homs[(y, z)], homs[(x, y)])
                functors[(x, y, z)] = FinFunctor(
                    dom, homs[(x, z)],
                    {(g, f): composite(g, f) for g, f in dom.objects},
                    {(homs[(y, z)].identity[g], homs[(x, y)].identity[f]):
                        homs[(x, z)].identity.get(composite(g, f)) for g, f in dom.objects},
                    name="o",
                )

    def id2(f):
        return homs[(c.src[f], c.tgt[f])].identity[f]

    alpha = {}
    for f in c.morphisms:
        for g in c.outgoing(c.tgt[f]):
            for h in c.outgoing(c.tgt[g]):
                alpha[(f, g, h)] = id2(composite(h, composite(g, f)))
    return SkewBicat(
        cells0=c.objects,
        hom=homs,
        M=functors,
        j=dict(c.identity),
        alpha=alpha,
        lam={f: id2(f) for f in c.morphisms},
        rho={f: id2(f) for f in c.morphisms},
        name=f"ld({c.name})",
    )


def underlying_category(b: SkewBicat) -> FinCat:
    """0-cells and 1-cells of b with composition M on 1-cells."""
    one_cells = b.one_cells()
    return FinCat(
        objects=b.cells0,
        morphisms=tuple(one_cells),
        src={f: b.ends(f)[0] for f in one_cells},
        tgt={f: b.ends(f)[1] for f in one_cells},
        identity={x: b.unit(x) for x in b.cells0},
        comp={(g, f): b.comp1(g, f) for f, g in b.composable_pairs()},
        name=f"|{b.name}|",
    )


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def _typed(b: SkewBicat, a: Optional[Ident], source: Ident, target: Ident) -> bool:
    if a is None or a not in b._two_cell_ends:
        return False
    hom = b.cell_hom(a)
    return hom.src[a] == source and hom.tgt[a] == target


def structure_problems(b: SkewBicat) -> List[Tuple[str, str, Dict[str, Ident]]]:
    """Missing or mistyped unit, alpha, lambda and rho components."""
    problems = []
    for x in b.cells0:
        if (x, x) not in b.hom or b.j.get(x) not in b.hom[(x, x)].object_index:
            problems.append(("structure.unit", "unit 1-cell missing", {"object": x}))
    if problems:
        return problems
    for x in b.cells0:
        for y in b.cells0:
            for z in b.cells0:
                if {(x, y), (y, z)} <= set(b.hom) and (x, y, z) not in b.M:
                    problems.append(("structure.composition", "composition functor missing",
                                     {"objects": (x, y, z)}))
    if problems:
        return problems
    for f, g, h in b.composable_triples():
        a = b.alpha.get((f, g, h))
        if not _typed(b, a, b.comp1(b.comp1(h, g), f), b.comp1(h, b.comp1(g, f))):
            problems.append(("structure.alpha", "component missing or mistyped",
                             {"f": f, "g": g, "h": h}))
            break
    for f in b.one_cells():
        x, y = b.ends(f)
        if not _typed(b, b.lam.get(f), b.comp1(b.unit(y), f), f):
            problems.append(("structure.lambda", "component missing or mistyped", {"f": f}))
            break
    for f in b.one_cells():
        x, y = b.ends(f)
        if not _typed(b, b.rho.get(f), f, b.comp1(f, b.unit(x))):
            problems.append(("structure.rho", "component missing or mistyped", {"f": f}))
            break
    return problems


def check_naturality(b: SkewBicat, report: Report) -> None:
    """Naturality of alpha, lambda, rho in each variable separately."""
    def alpha_cases():
        for f, g, h in b.composable_triples():
            a = b.alpha[(f, g, h)]
            hg, gf = b.comp1(h, g), b.comp1(g, f)
            for phi in b.homcat(*b.ends(f)).outgoing(f):
                f2 = b.cod2(phi)
                yield ({"f": f, "g": g, "h": h, "cell": phi},
                       b.vcomp(b.alpha[(f2, g, h)], b.comp2(b.id2(hg), phi)),
                       b.vcomp(b.comp2(b.id2(h), b.comp2(b.id2(g), phi)), a))
            for gamma in b.homcat(*b.ends(g)).outgoing(g):
                g2 = b.cod2(gamma)
                yield ({"f": f, "g": g, "h": h, "cell": gamma},
                       b.vcomp(b.alpha[(f, g2, h)], b.comp2(b.comp2(b.id2(h), gamma), b.id2(f))),
                       b.vcomp(b.comp2(b.id2(h), b.comp2(gamma, b.id2(f))), a))
            for theta in b.homcat(*b.ends(h)).outgoing(h):
                h2 = b.cod2(theta)
                yield ({"f": f, "g": g, "h": h, "cell": theta},
                       b.vcomp(b.alpha[(f, g, h2)], b.comp2(b.comp2(theta, b.id2(g)), b.id2(f))),
                       b.vcomp(b.comp2(theta, b.id2(gf)), a))

    def lambda_cases():
        for f in b.one_cells():
            x, y = b.ends(f)
            for phi in b.homcat(x, y).outgoing(f):
                yield ({"f": f, "cell": phi},
                       b.vcomp(b.lam[b.cod2(phi)], b.comp2(b.id2(b.unit(y)), phi)),
                       b.vcomp(phi, b.lam[f]))

    def rho_cases():
        for f in b.one_cells():
            x, y = b.ends(f)
            for phi in b.homcat(x, y).outgoing(f):
                yield ({"f": f, "cell": phi},
                       b.vcomp(b.rho[b.cod2(phi)], phi),
                       b.vcomp(b.comp2(phi, b.id2(b.unit(x))), b.rho[f]))

    report.law("naturality.alpha", alpha_cases())
    report.law("naturality.lambda", lambda_cases())
    report.law("naturality.rho", rho_cases())


def axiom_cases(b: SkewBicat, n: int) -> Iterator[Tuple[Dict[str, Ident], Ident, Ident]]:
    """(witness, lhs, rhs) instances of skew axiom n."""
    A, L, R = b.alpha, b.lam, b.rho
    one = b.id2
    if n == 1:
        for f, g, h, k in b.composable_quadruples():
            hg, gf, kh = b.comp1(h, g), b.comp1(g, f), b.comp1(k, h)
            yield ({"f": f, "g": g, "h": h, "k": k},
                   b.vcomp(b.comp2(one(k), A[(f, g, h)]), A[(f, hg, k)], b.comp2(A[(g, h, k)], one(f))),
                   b.vcomp(A[(gf, h, k)], A[(f, g, kh)]))
    elif n == 2:
        for f, g in b.composable_pairs():
            y = b.ends(f)[1]
            yield ({"f": f, "g": g},
                   b.vcomp(b.comp2(one(g), L[f]), A[(f, b.unit(y), g)], b.comp2(R[g], one(f))),
                   one(b.comp1(g, f)))
    elif n == 3:
        for f, g in b.composable_pairs():
            z = b.ends(g)[1]
            yield ({"f": f, "g": g},
                   b.vcomp(L[b.comp1(g, f)], A[(f, g, b.unit(z))]),
                   b.comp2(L[g], one(f)))
    elif n == 4:
        for f, g in b.composable_pairs():
            x = b.ends(f)[0]
            yield ({"f": f, "g": g},
                   b.vcomp(A[(b.unit(x), f, g)], R[b.comp1(g, f)]),
                   b.comp2(one(g), R[f]))
    elif n == 5:
        for x in b.cells0:
            j = b.unit(x)
            yield ({"object": x}, b.vcomp(L[j], R[j]), one(j))
    else:
        raise ValueError(f"no skew axiom {n}")


def check_skew_bicat(b: SkewBicat,
                     axioms: Iterable[int] = (1, 2, 3, 4, 5),
                     falsify: Iterable[int] = (),
                     naturality: bool = True) -> Report:
    """Check naturality and the five skew axioms exhaustively.

    [PARAMETERS]
    b : SkewBicat
        Skew bicategory whose hom categories and composition functors are valid
    axioms : Iterable[int]
        Axioms to check
    falsify : Iterable[int]
        Axioms whose failure refutes a claimed implication; reported as
        falsification instead of fail
    naturality : bool
        Also check naturality of alpha, lambda, rho

    [OUTPUT]
    Report
        structure.* entries when components are missing (then nothing else),
        otherwise naturality.* and axiom-1 .. axiom-5
    """
    report = Report(b.name, "skew-bicat")
    try:
        problems = structure_problems(b)
    except StructuralError as e:
        problems = [("structure", str(e), {})]
    if problems:
        for name, detail, witness in problems:
            report.record(name, STRUCTURAL, witness=witness, detail=detail)
        return report
    if naturality:
        check_naturality(b, report)
    falsify = set(falsify)
    for n in axioms:
        report.law(f"axiom-{n}", axiom_cases(b, n), tag=AXIOM_TAGS[n], falsification=n in falsify)
    return report


def check_skew_moncat(c: SkewMonCat, **kwargs) -> Report:
    """check_skew_bicat on the suspension."""
    report = check_skew_bicat(suspension(c), **kwargs)
    report.subject, report.kind = c.name, "skew-moncat"
    return report


def check_composition_functors(b: SkewBicat) -> Report:
    """Validate every hom category and composition functor."""
    report = Report(b.name, "skew-bicat-structure")
    for x, y in b.hom_keys():
        report.merge(validate_category(b.hom[(x, y)]), prefix=f"hom({label(x)},{label(y)}).")
    for key, F in b.M.items():
        report.merge(check_functor(F), prefix=f"M({','.join(label(x) for x in key)}).")
    return report


def is_right_normal(c: SkewMonCat) -> bool:
    return all(is_iso(c.base, c.rho[x]) for x in c.base.objects)


def is_bicategory(b: SkewBicat) -> bool:
    """Whether every alpha, lambda and rho component is invertible."""
    components = list(b.alpha.values()) + list(b.lam.values()) + list(b.rho.values())
    return all(is_iso(b.cell_hom(a), a) for a in components)


# ---------------------------------------------------------------------------
# monoids and monoidal functors
# ---------------------------------------------------------------------------

def check_monoid(m: Monoid) -> Report:
    """The three monoid equations.

    [EXAMPLE]
    >>> check_monoid(Monoid(c, "*", "1", "1")).ok
    True
    """
    c, M, mu, eta = m.ambient, m.carrier, m.mult, m.unit
    report = Report(f"({label(M)}, {label(mu)}, {label(eta)})", "monoid")
    b = c.base
    if (b.src.get(mu), b.tgt.get(mu)) != (c.ot(M, M), M) or (b.src.get(eta), b.tgt.get(eta)) != (c.unit, M):
        report.record("structure.monoid", STRUCTURAL, witness={"mult": mu, "unit": eta},
                      detail="multiplication or unit mistyped")
        return report
    one = c.id(M)
    report.law("associativity", [(
        {"carrier": M},
        c.compose(mu, c.mt(mu, one)),
        c.compose(mu, c.mt(one, mu), c.alpha[(M, M, M)]),
    )], tag="monoid-associativity")
    report.law("left-unit", [(
        {"carrier": M}, c.compose(mu, c.mt(eta, one)), c.lam[M],
    )], tag="monoid-left-unit")
    report.law("right-unit", [(
        {"carrier": M}, c.compose(mu, c.mt(one, eta), c.rho[M]), one,
    )], tag="monoid-right-unit")
    return report


def enumerate_monoids(c: SkewMonCat, bounds: Optional[BoundsConfig] = None) -> List[Monoid]:
    """All monoids of c in (carrier, unit, multiplication) order.

    [RAISES]
    BoundExceededError
        If more than bounds.max_candidates triples would be examined
    """
    bounds = bounds or BoundsConfig()
    b = c.base
    total = sum(len(b.hom(c.unit, M)) * len(b.hom(c.ot(M, M), M)) for M in b.objects)
    if total > bounds.max_candidates:
        raise BoundExceededError(f"{total} monoid candidates in {c.name} exceed {bounds.max_candidates}")
    found = []
    for M in b.objects:
        for eta in b.hom(c.unit, M):
            for mu in b.hom(c.ot(M, M), M):
                candidate = Monoid(c, M, mu, eta)
                if check_monoid(candidate).ok:
                    found.append(candidate)
    logger.debug(f"{len(found)} monoids among {total} candidates in {c.name}")
    return found


def check_monoidal_functor(F: MonoidalFunctor) -> Report:
    """Functoriality, naturality of F2 and the three coherence diagrams."""
    report = Report(F.name, "monoidal-functor")
    report.merge(check_functor(F.F), prefix="functor.")
    if not report.ok:
        return report
    c, d, G = F.dom, F.cod, F.F
    db = d.base
    bad = [(x, y) for x in c.base.objects for y in c.base.objects
           if (db.src.get(F.F2.get((x, y))), db.tgt.get(F.F2.get((x, y))))
           != (d.ot(G.ob(x), G.ob(y)), G.ob(c.ot(x, y)))]
    if bad or (db.src.get(F.F0), db.tgt.get(F.F0)) != (d.unit, G.ob(c.unit)):
        report.record("structure.components", STRUCTURAL,
                      witness={"at": bad[0]} if bad else {"at": "F0"},
                      detail="F2 or F0 missing or mistyped")
        return report

    report.law("naturality.F2", (
        ({"f": f, "g": g},
         d.compose(F.F2[(c.base.tgt[f], c.base.tgt[g])], d.mt(G(f), G(g))),
         d.compose(G(c.mt(f, g)), F.F2[(c.base.src[f], c.base.src[g])]))
        for f in c.base.morphisms for g in c.base.morphisms
    ))
    objects = c.base.objects
    report.law("coherence-associativity", (
        ({"X": x, "Y": y, "Z": z},
         d.compose(G(c.alpha[(x, y, z)]), F.F2[(c.ot(x, y), z)], d.mt(F.F2[(x, y)], d.id(G.ob(z)))),
         d.compose(F.F2[(x, c.ot(y, z))], d.mt(d.id(G.ob(x)), F.F2[(y, z)]),
                   d.alpha[(G.ob(x), G.ob(y), G.ob(z))]))
        for x in objects for y in objects for z in objects
    ))
    report.law("coherence-left-unit", (
        ({"X": x},
         d.compose(G(c.lam[x]), F.F2[(c.unit, x)], d.mt(F.F0, d.id(G.ob(x)))),
         d.lam[G.ob(x)])
        for x in objects
    ))
    report.law("coherence-right-unit", (
        ({"X": x},
         d.compose(F.F2[(x, c.unit)], d.mt(d.id(G.ob(x)), F.F0), d.rho[G.ob(x)]),
         G(c.rho[x]))
        for x in objects
    ))
    return report


def is_normal(F: MonoidalFunctor) -> bool:
    """Whether the unit constraint F0 is invertible."""
    return is_iso(F.cod.base, F.F0)


def identity_monoidal_functor(c: SkewMonCat) -> MonoidalFunctor:
    return MonoidalFunctor(
        c, c, identity_functor(c.base),
        {(x, y): c.id(c.ot(x, y)) for x in c.base.objects for y in c.base.objects},
        c.id(c.unit),
        name=f"1_{c.name}",
    )


def transport_monoid(F: MonoidalFunctor, m: Monoid) -> Monoid:
    """Image of a monoid under a monoidal functor."""
    d, G = F.cod, F.F
    return Monoid(
        d, G.ob(m.carrier),
        d.compose(G(m.mult), F.F2[(m.carrier, m.carrier)]),
        d.compose(G(m.unit), F.F0),
    )


def monoid_as_functor(m: Monoid) -> MonoidalFunctor:
    """A monoid as a monoidal functor out of the terminal skew monoidal category."""
    one = terminal_skew_moncat()
    c = m.ambient
    G = FinFunctor(one.base, c.base, {"*": m.carrier}, {"1_*": c.id(m.carrier)}, name="m")
    return MonoidalFunctor(one, c, G, {("*", "*"): m.mult}, m.unit, name=f"{label(m.carrier)}-monoid")


def functor_as_monoid(F: MonoidalFunctor) -> Monoid:
    """Inverse of monoid_as_functor.

    [RAISES]
    PreconditionError
        If the domain is not the terminal skew monoidal category
    """
    if F.dom != terminal_skew_moncat():
        raise PreconditionError("monoidal functor does not start at the terminal skew monoidal category")
    return Monoid(F.cod, F.F.ob("*"), F.F2[("*", "*")], F.F0)
