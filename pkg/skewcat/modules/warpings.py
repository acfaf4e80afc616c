"""
Skew warpings, their Kleisli construction and their algebras.

Indexing
--------
For f: X -> DY, g: Y -> DZ the functors T are keyed by (X, Y), so T on a
1-cell or 2-cell also needs its target index:

    w.Tob(f, Y), w.Tmor(phi, Y)
    v[(f, g, Z)] : T(Tg.f) -> Tg.Tf
    k[(f, Y)]    : f -> Tf.K_X
    v0[Y]        : T(K_Y) -> 1_DY

For an algebra on A with a: Y -> A and x: X -> DY:

    e[(a, x)]    : E(Ea.x) -> Ea.Tx
    e0[a]        : a -> Ea.K_Y
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple

from ..core.fincat import FinFunctor, Ident, check_functor, identity_functor, is_iso, \
    product_category, relabel_category
from ..core.report import Report, STRUCTURAL, PRECONDITION, FALSIFICATION, PASS, label
from ..utils.errors import PreconditionError, StructuralError
from ..utils.logger import setup_logger
from .mwmonads import MwAlgebra, MwMonad
from .skewstruct import (SkewBicat, check_skew_bicat, is_bicategory, locally_discrete,
                         underlying_category)

logger = setup_logger(__name__)

WARPING_TAGS = {
    1: "warping-pentagon",
    2: "warping-right-unit",
    3: "warping-left-unit",
    4: "warping-unit-associator",
    5: "warping-unit-unit",
}

ALGEBRA_TAGS = {
    1: "algebra-pentagon",
    2: "algebra-unit",
    3: "algebra-unit-associator",
}


@dataclass(frozen=True)
class SkewWarping:
    """A skew warping on a skew bicategory.

    [ATTRIBUTES]
    ambient : SkewBicat
        The skew bicategory B
    D : Mapping[Ident, Ident]
        Function on 0-cells
    T : Mapping[Tuple[Ident, Ident], FinFunctor]
        (X, Y) -> functor B(X, DY) -> B(DX, DY)
    K : Mapping[Ident, Ident]
        X -> 1-cell X -> DX
    v, k, v0 : Mapping
        Component tables, indexed as in the module docstring
    """
    ambient: SkewBicat
    D: Mapping[Ident, Ident]
    T: Mapping[Tuple[Ident, Ident], FinFunctor]
    K: Mapping[Ident, Ident]
    v: Mapping[Tuple[Ident, Ident, Ident], Ident]
    k: Mapping[Tuple[Ident, Ident], Ident]
    v0: Mapping[Ident, Ident]
    name: str = field(default="T", compare=False)

    def functor(self, x: Ident, y: Ident) -> FinFunctor:
        try:
            return self.T[(x, y)]
        except KeyError:
            raise StructuralError(f"no functor T at ({label(x)}, {label(y)}) in {self.name}")

    def Tob(self, f: Ident, y: Ident) -> Ident:
        return self.functor(self.ambient.ends(f)[0], y).ob(f)

    def Tmor(self, a: Ident, y: Ident) -> Ident:
        x = self.ambient._two_cell_ends.get(a, (None,))[0]
        if x is None:
            raise StructuralError(f"unknown 2-cell {label(a)} in {self.ambient.name}")
        return self.functor(x, y)(a)

    def extension_cells(self) -> Iterator[Tuple[Ident, Ident]]:
        """Every (f, Y) with f: X -> DY."""
        b = self.ambient
        for x in b.cells0:
            for y in b.cells0:
                if (x, self.D[y]) in b.hom:
                    for f in b.hom[(x, self.D[y])].objects:
                        yield f, y

    def extension_pairs(self) -> Iterator[Tuple[Ident, Ident, Ident, Ident]]:
        """Every (f, g, Y, Z) with f: X -> DY and g: Y -> DZ."""
        cells = list(self.extension_cells())
        for f, y in cells:
            for g, z in cells:
                if self.ambient.ends(g)[0] == y:
                    yield f, g, y, z


@dataclass(frozen=True)
class WarpingAlgebra:
    """An algebra for a skew warping with carrier the 0-cell A."""
    warping: SkewWarping
    carrier: Ident
    E: Mapping[Ident, FinFunctor]
    e: Mapping[Tuple[Ident, Ident], Ident]
    e0: Mapping[Ident, Ident]
    name: str = field(default="A", compare=False)

    def Eob(self, a: Ident) -> Ident:
        return self.E[self.warping.ambient.ends(a)[0]].ob(a)

    def Emor(self, phi: Ident) -> Ident:
        return self.E[self.warping.ambient._two_cell_ends[phi][0]](phi)

    def cells(self) -> Iterator[Tuple[Ident, Ident]]:
        """Every (a, Y) with a: Y -> A."""
        b = self.warping.ambient
        for y in b.cells0:
            if (y, self.carrier) in b.hom:
                for a in b.hom[(y, self.carrier)].objects:
                    yield a, y

    def pairs(self) -> Iterator[Tuple[Ident, Ident, Ident]]:
        """Every (a, x, Y) with a: Y -> A and x: X -> DY."""
        extension = list(self.warping.extension_cells())
        for a, y in self.cells():
            for x, y2 in extension:
                if y2 == y:
                    yield a, x, y


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def identity_warping(b: SkewBicat) -> SkewWarping:
    """D and T identities, K the units, k = rho, v and v0 identities."""
    T = {(x, y): identity_functor(b.hom[(x, y)]) for x, y in b.hom_keys()}
    v = {}
    for f in b.one_cells():
        for g in b.starting_at(b.ends(f)[1]):
            v[(f, g, b.ends(g)[1])] = b.id2(b.comp1(g, f))
    return SkewWarping(
        ambient=b,
        D={x: x for x in b.cells0},
        T=T,
        K=dict(b.j),
        v=v,
        k={(f, b.ends(f)[1]): b.rho[f] for f in b.one_cells()},
        v0={x: b.id2(b.unit(x)) for x in b.cells0},
        name=f"1_{b.name}",
    )


def mw_as_warping(t: MwMonad) -> SkewWarping:
    """An mw-monad as a skew warping on the locally discrete skew bicategory.

    The 2-cell components are identities of their intended targets, so they
    are well typed exactly when the mw-monad equations hold.
    """
    c = t.base
    b = locally_discrete(c)
    T = {}
    for x in c.objects:
        for y in c.objects:
            source, target = b.hom[(x, t.D[y])], b.hom[(t.D[x], t.D[y])]
            T[(x, y)] = FinFunctor(
                source, target,
                {f: t.T.get((f, y)) for f in source.objects},
                {source.identity[f]: target.identity.get(t.T.get((f, y))) for f in source.objects},
                name=f"T({label(x)},{label(y)})",
            )

    def id2(f):
        return b.hom[(c.src[f], c.tgt[f])].identity[f]

    v, k = {}, {}
    for f, y in ((f, y) for x in c.objects for y in c.objects for f in c.hom(x, t.D[y])):
        k[(f, y)] = id2(c.compose(t.T[(f, y)], t.K[c.src[f]]))
        for z in c.objects:
            for g in c.hom(y, t.D[z]):
                v[(f, g, z)] = id2(c.compose(t.T[(g, z)], t.T[(f, y)]))
    return SkewWarping(
        ambient=b, D=dict(t.D), T=T, K=dict(t.K), v=v, k=k,
        v0={y: id2(c.identity[t.D[y]]) for y in c.objects},
        name=t.name,
    )


def warping_as_mw(w: SkewWarping) -> MwMonad:
    """Inverse of mw_as_warping.

    [RAISES]
    PreconditionError
        If the ambient has a non-identity 2-cell
    """
    b = w.ambient
    if not all(b.hom[key].is_discrete() for key in b.hom_keys()):
        raise PreconditionError(f"{b.name} is not locally discrete")
    return MwMonad(
        underlying_category(b),
        dict(w.D),
        {(f, y): w.Tob(f, y) for f, y in w.extension_cells()},
        dict(w.K),
        name=w.name,
    )


def free_algebra(w: SkewWarping, x: Ident) -> WarpingAlgebra:
    """The algebra on DX with E = T, e = v and e0 = k."""
    b = w.ambient
    carrier = w.D[x]
    E = {y: w.functor(y, x) for y in b.cells0 if (y, carrier) in b.hom}
    e0 = {a: w.k[(a, x)] for y in E for a in b.hom[(y, carrier)].objects}
    e = {(g, f): w.v[(f, g, x)] for f, g, y, z in w.extension_pairs() if z == x}
    return WarpingAlgebra(w, carrier, E, e, e0, name=f"free({label(x)})")


def mw_algebra_as_warping_algebra(a: MwAlgebra, w: Optional[SkewWarping] = None) -> WarpingAlgebra:
    """An mw-algebra over the warping of its mw-monad; all 2-cells identities."""
    t = a.ambient
    w = w or mw_as_warping(t)
    c, b, A = t.base, w.ambient, a.carrier
    E = {}
    for x in c.objects:
        source, target = b.hom[(x, A)], b.hom[(t.D[x], A)]
        E[x] = FinFunctor(
            source, target,
            {g: a.E.get(g) for g in source.objects},
            {source.identity[g]: target.identity.get(a.E.get(g)) for g in source.objects},
            name=f"E({label(x)})",
        )

    def id2(f):
        return b.hom[(c.src[f], c.tgt[f])].identity[f]

    e, e0 = {}, {}
    for g in c.morphisms:
        if c.tgt[g] != A:
            continue
        y = c.src[g]
        e0[g] = id2(c.compose(a.E[g], t.K[y]))
        for x in c.objects:
            for f in c.hom(x, t.D[y]):
                e[(g, f)] = id2(c.compose(a.E[g], t.T[(f, y)]))
    return WarpingAlgebra(w, A, E, e, e0, name=a.name)


# ---------------------------------------------------------------------------
# checkers
# ---------------------------------------------------------------------------

def _typed(b: SkewBicat, a: Optional[Ident], source: Ident, target: Ident) -> bool:
    if a is None or a not in b._two_cell_ends:
        return False
    return b.dom2(a) == source and b.cod2(a) == target


def warping_structure(w: SkewWarping) -> Optional[Tuple[str, Dict[str, Ident]]]:
    """First missing or mistyped piece of data, or None."""
    b = w.ambient
    for x in b.cells0:
        if w.D.get(x) not in b.cells0:
            return "D undefined or outside the 0-cells", {"object": x}
    for x in b.cells0:
        if (x, w.D[x]) not in b.hom or w.K.get(x) not in b.hom[(x, w.D[x])].object_index:
            return "K missing or mistyped", {"object": x}
    for x in b.cells0:
        for y in b.cells0:
            F = w.T.get((x, y))
            source, target = b.hom.get((x, w.D[y])), b.hom.get((w.D[x], w.D[y]))
            if source is None:
                continue
            if F is None or target is None or \
                    any(F.obj_map.get(f) not in target.object_index for f in source.objects):
                return "T missing or leaves its hom category", {"X": x, "Y": y}
    for f, g, y, z in w.extension_pairs():
        tg, tf = w.Tob(g, z), w.Tob(f, y)
        if not _typed(b, w.v.get((f, g, z)), w.Tob(b.comp1(tg, f), z), b.comp1(tg, tf)):
            return "v missing or mistyped", {"f": f, "g": g}
    for f, y in w.extension_cells():
        x = b.ends(f)[0]
        if not _typed(b, w.k.get((f, y)), f, b.comp1(w.Tob(f, y), w.K[x])):
            return "k missing or mistyped", {"f": f}
    for y in b.cells0:
        if not _typed(b, w.v0.get(y), w.Tob(w.K[y], y), b.unit(w.D[y])):
            return "v0 missing or mistyped", {"object": y}
    return None


def check_warping_naturality(w: SkewWarping, report: Report) -> None:
    b = w.ambient
    for (x, y), F in w.T.items():
        if (x, w.D[y]) in b.hom:
            report.merge(check_functor(F), prefix=f"T({label(x)},{label(y)}).")

    def v_cases():
        for f, g, y, z in w.extension_pairs():
            v = w.v[(f, g, z)]
            one_g = w.Tmor(b.id2(g), z)
            for phi in b.homcat(*b.ends(f)).outgoing(f):
                yield ({"f": f, "g": g, "cell": phi},
                       b.vcomp(w.v[(b.cod2(phi), g, z)], w.Tmor(b.comp2(one_g, phi), z)),
                       b.vcomp(b.comp2(one_g, w.Tmor(phi, y)), v))
            for gamma in b.homcat(*b.ends(g)).outgoing(g):
                t_gamma = w.Tmor(gamma, z)
                yield ({"f": f, "g": g, "cell": gamma},
                       b.vcomp(w.v[(f, b.cod2(gamma), z)], w.Tmor(b.comp2(t_gamma, b.id2(f)), z)),
                       b.vcomp(b.comp2(t_gamma, w.Tmor(b.id2(f), y)), v))

    def k_cases():
        for f, y in w.extension_cells():
            x = b.ends(f)[0]
            for phi in b.homcat(*b.ends(f)).outgoing(f):
                yield ({"f": f, "cell": phi},
                       b.vcomp(w.k[(b.cod2(phi), y)], phi),
                       b.vcomp(b.comp2(w.Tmor(phi, y), b.id2(w.K[x])), w.k[(f, y)]))

    report.law("naturality.v", v_cases())
    report.law("naturality.k", k_cases())


def warping_axiom_cases(w: SkewWarping, n: int) -> Iterator[Tuple[Dict[str, Ident], Ident, Ident]]:
    """(witness, lhs, rhs) instances of warping axiom n."""
    b = w.ambient
    A, L, R, V, K, V0 = b.alpha, b.lam, b.rho, w.v, w.k, w.v0
    M, one = b.comp2, b.id2
    if n == 1:
        pairs = list(w.extension_pairs())
        for f, g, y, z in pairs:
            tf, tg = w.Tob(f, y), w.Tob(g, z)
            for g2, h, z2, u in pairs:
                if g2 != g or z2 != z:
                    continue
                th = w.Tob(h, u)
                v_gh = V[(g, h, u)]
                yield ({"f": f, "g": g, "h": h},
                       b.vcomp(A[(tf, tg, th)], M(v_gh, one(tf)), V[(f, b.comp1(th, g), u)]),
                       b.vcomp(M(one(th), V[(f, g, z)]), V[(b.comp1(tg, f), h, u)],
                               w.Tmor(A[(f, tg, th)], u), w.Tmor(M(v_gh, one(f)), u)))
    elif n == 2:
        for f, y in w.extension_cells():
            x = b.ends(f)[0]
            tf = w.Tob(f, y)
            yield ({"f": f},
                   b.vcomp(M(one(tf), V0[x]), V[(w.K[x], f, y)], w.Tmor(K[(f, y)], y)),
                   R[tf])
    elif n == 3:
        for f, y in w.extension_cells():
            tf = w.Tob(f, y)
            yield ({"f": f},
                   b.vcomp(L[tf], M(V0[y], one(tf)), V[(f, w.K[y], y)]),
                   b.vcomp(w.Tmor(L[f], y), w.Tmor(M(V0[y], one(f)), y)))
    elif n == 4:
        for f, g, y, z in w.extension_pairs():
            x = b.ends(f)[0]
            tf, tg = w.Tob(f, y), w.Tob(g, z)
            yield ({"f": f, "g": g},
                   b.vcomp(A[(w.K[x], tf, tg)], M(V[(f, g, z)], one(w.K[x])), K[(b.comp1(tg, f), z)]),
                   M(one(tg), K[(f, y)]))
    elif n == 5:
        for x in b.cells0:
            kx = w.K[x]
            yield ({"object": x},
                   b.vcomp(L[kx], M(V0[x], one(kx)), K[(kx, x)]),
                   one(kx))
    else:
        raise ValueError(f"no warping axiom {n}")


def check_skew_warping(w: SkewWarping,
                       axioms: Iterable[int] = (1, 2, 3, 4, 5),
                       falsify: Iterable[int] = (),
                       naturality: bool = True) -> Report:
    """Check functoriality of T, naturality of v and k, and the five axioms.

    [OUTPUT]
    Report
        structure.warping on malformed data, otherwise T(X,Y).*, naturality.v,
        naturality.k and axiom-1 .. axiom-5
    """
    report = Report(w.name, "skew-warping")
    try:
        problem = warping_structure(w)
    except StructuralError as e:
        problem = (str(e), {})
    if problem:
        report.record("structure.warping", STRUCTURAL, witness=problem[1], detail=problem[0])
        return report
    if naturality:
        check_warping_naturality(w, report)
    falsify = set(falsify)
    for n in axioms:
        report.law(f"axiom-{n}", warping_axiom_cases(w, n), tag=WARPING_TAGS[n],
                   falsification=n in falsify)
    return report


def is_warping(w: SkewWarping) -> bool:
    """Whether every v, k and v0 component is invertible."""
    b = w.ambient
    components = list(w.v.values()) + list(w.k.values()) + list(w.v0.values())
    return all(is_iso(b.cell_hom(a), a) for a in components)


# ---------------------------------------------------------------------------
# Kleisli construction
# ---------------------------------------------------------------------------

def kleisli_warping(w: SkewWarping) -> SkewBicat:
    """The skew bicategory B_T.

    B_T(X, Y) = B(X, DY); the composite of f and g is M(Tg, f); the unit at X
    is K_X; alpha = alpha o (v.1), lambda = lambda o (v0.1) and rho = k.
    Cells of B(X, DY) are tagged with Y when several Y share DY.
    """
    b = w.ambient
    cells0 = b.cells0
    shared = {y: sum(1 for z in cells0 if w.D[z] == w.D[y]) > 1 for y in cells0}

    def kid(cell, y):
        return (cell, y) if shared[y] else cell

    homs = {}
    for x in cells0:
        for y in cells0:
            source = b.hom.get((x, w.D[y]))
            if source is None:
                continue
            if shared[y]:
                homs[(x, y)] = relabel_category(source, lambda f, y=y: (f, y), lambda a, y=y: (a, y),
                                                name=f"{source.name}[{label(y)}]")
            else:
                homs[(x, y)] = source

    functors = {}
    for x in cells0:
        for y in cells0:
            for z in cells0:
                if (x, y) not in homs or (y, z) not in homs:
                    continue
                first, second = b.hom[(x, w.D[y])], b.hom[(y, w.D[z])]
                functors[(x, y, z)] = FinFunctor(
                    product_category(homs[(y, z)], homs[(x, y)]), homs[(x, z)],
                    {(kid(g, z), kid(f, y)): kid(b.comp1(w.Tob(g, z), f), z)
                     for g in second.objects for f in first.objects},
                    {(kid(gamma, z), kid(phi, y)): kid(b.comp2(w.Tmor(gamma, z), phi), z)
                     for gamma in second.morphisms for phi in first.morphisms},
                    name="M_T",
                )

    alpha = {}
    for f, g, y, z in w.extension_pairs():
        tg = w.Tob(g, z)
        for h, u in w.extension_cells():
            if b.ends(h)[0] != z:
                continue
            th = w.Tob(h, u)
            alpha[(kid(f, y), kid(g, z), kid(h, u))] = kid(
                b.vcomp(b.alpha[(f, tg, th)], b.comp2(w.v[(g, h, u)], b.id2(f))), u)
    lam = {kid(f, y): kid(b.vcomp(b.lam[f], b.comp2(w.v0[y], b.id2(f))), y)
           for f, y in w.extension_cells()}
    rho = {kid(f, y): kid(w.k[(f, y)], y) for f, y in w.extension_cells()}
    return SkewBicat(
        cells0=cells0,
        hom=homs,
        M=functors,
        j={x: kid(w.K[x], x) for x in cells0},
        alpha=alpha,
        lam=lam,
        rho=rho,
        name=f"{b.name}_{w.name}",
    )


def axiom_trace(w: SkewWarping) -> Report:
    """Per axiom n: ambient axiom n and warping axiom n against axiom n of B_T.

    An entry is a falsification when both inputs pass but B_T fails.
    """
    ambient = check_skew_bicat(w.ambient)
    warping = check_skew_warping(w)
    report = Report(w.name, "axiom-trace")
    if ambient.structural or warping.structural:
        report.record("structure", STRUCTURAL, detail="ambient or warping is malformed")
        return report
    naturality_ok = all(e.ok for e in ambient.entries + warping.entries if not e.name.startswith("axiom-"))
    kleisli = check_skew_bicat(kleisli_warping(w))
    for n in range(1, 6):
        inputs = (ambient.passed(f"axiom-{n}"), warping.passed(f"axiom-{n}"))
        result = kleisli.entry(f"axiom-{n}") if not kleisli.structural else None
        uses = [f"ambient.axiom-{n}", f"warping.axiom-{n}"]
        if result is None:
            report.record(f"axiom-{n}", STRUCTURAL, uses=uses, detail="B_T is malformed")
        elif all(inputs) and naturality_ok and not result.ok:
            report.record(f"axiom-{n}", FALSIFICATION, uses=uses, witness=result.witness)
        else:
            report.record(f"axiom-{n}", PASS, uses=uses, checked=result.checked,
                          detail=f"inputs {'pass' if all(inputs) else 'fail'}, "
                                 f"B_T {'passes' if result.ok else 'fails'}")
    return report


def _require(report: Report, name: str, holds: bool, detail: str) -> bool:
    if not holds:
        report.record(name, PRECONDITION, detail=detail)
    return holds


def check_redundancy_warping(w: SkewWarping) -> Report:
    """Axioms 3-5 for a warping on a bicategory that satisfies axioms 1-2.

    [WORKFLOW]
    1. Require the ambient to be a bicategory satisfying its own axioms
    2. Require T functorial, v and k natural, v, k, v0 invertible
    3. Require warping axioms 1 and 2
    4. Check axioms 3-5; a failure is a falsification

    [OUTPUT]
    Report
        precondition.* entries if a requirement fails, otherwise axiom-3 ..
        axiom-5 with falsification status on failure
    """
    report = Report(w.name, "warping-redundancy")
    ambient = check_skew_bicat(w.ambient)
    if not (_require(report, "precondition.ambient-axioms", ambient.ok, "ambient fails its axioms")
            and _require(report, "precondition.bicategory", is_bicategory(w.ambient),
                         "ambient has a non-invertible constraint")):
        return report
    base = check_skew_warping(w, axioms=(1, 2))
    if not (_require(report, "precondition.structure", not base.structural, "warping data malformed")
            and _require(report, "precondition.naturality",
                         all(e.ok for e in base.entries if not e.name.startswith("axiom-")),
                         "T not functorial or v, k not natural")
            and _require(report, "precondition.invertible", is_warping(w), "v, k or v0 not invertible")
            and _require(report, "precondition.axioms-1-2", base.ok, "axiom 1 or 2 fails")):
        return report
    result = check_skew_warping(w, axioms=(3, 4, 5), falsify=(3, 4, 5), naturality=False)
    for entry in result.entries:
        entry.uses = ["axiom-1", "axiom-2"]
        report.add(entry)
    return report


# ---------------------------------------------------------------------------
# algebras
# ---------------------------------------------------------------------------

def algebra_structure(a: WarpingAlgebra) -> Optional[Tuple[str, Dict[str, Ident]]]:
    w = a.warping
    b = w.ambient
    A = a.carrier
    for y in b.cells0:
        if (y, A) not in b.hom:
            continue
        F = a.E.get(y)
        target = b.hom.get((w.D[y], A))
        if F is None or target is None or \
                any(F.obj_map.get(g) not in target.object_index for g in b.hom[(y, A)].objects):
            return "E missing or leaves its hom category", {"object": y}
    for a1, x, y in a.pairs():
        ea = a.Eob(a1)
        if not _typed(b, a.e.get((a1, x)), a.Eob(b.comp1(ea, x)), b.comp1(ea, w.Tob(x, y))):
            return "e missing or mistyped", {"a": a1, "x": x}
    for a1, y in a.cells():
        if not _typed(b, a.e0.get(a1), a1, b.comp1(a.Eob(a1), w.K[y])):
            return "e0 missing or mistyped", {"a": a1}
    return None


def algebra_axiom_cases(a: WarpingAlgebra, n: int) -> Iterator[Tuple[Dict[str, Ident], Ident, Ident]]:
    w = a.warping
    b = w.ambient
    A, R, V, K, V0 = b.alpha, b.rho, w.v, w.k, w.v0
    M, one = b.comp2, b.id2
    if n == 1:
        extension = list(w.extension_cells())
        for a1, x, y in a.pairs():
            ea = a.Eob(a1)
            tx = w.Tob(x, y)
            e_ax = a.e[(a1, x)]
            xw = b.ends(x)[0]
            for y1, x2 in extension:
                if x2 != xw:
                    continue
                ty = w.Tob(y1, xw)
                yield ({"a": a1, "x": x, "y": y1},
                       b.vcomp(A[(ty, tx, ea)], M(e_ax, one(ty)), a.e[(b.comp1(ea, x), y1)]),
                       b.vcomp(M(one(ea), V[(y1, x, y)]), a.e[(a1, b.comp1(tx, y1))],
                               a.Emor(A[(y1, tx, ea)]), a.Emor(M(e_ax, one(y1)))))
    elif n == 2:
        for a1, y in a.cells():
            ea = a.Eob(a1)
            yield ({"a": a1},
                   b.vcomp(M(one(ea), V0[y]), a.e[(a1, w.K[y])], a.Emor(a.e0[a1])),
                   R[ea])
    elif n == 3:
        for a1, x, y in a.pairs():
            ea = a.Eob(a1)
            kx = w.K[b.ends(x)[0]]
            yield ({"a": a1, "x": x},
                   b.vcomp(A[(kx, w.Tob(x, y), ea)], M(a.e[(a1, x)], one(kx)), a.e0[b.comp1(ea, x)]),
                   M(one(ea), K[(x, y)]))
    else:
        raise ValueError(f"no algebra axiom {n}")


def check_warping_algebra(a: WarpingAlgebra,
                          axioms: Iterable[int] = (1, 2, 3),
                          falsify: Iterable[int] = (),
                          naturality: bool = True) -> Report:
    """Functoriality of E, naturality of e and e0, and the three axioms."""
    report = Report(a.name, "warping-algebra")
    try:
        problem = algebra_structure(a)
    except StructuralError as e:
        problem = (str(e), {})
    if problem:
        report.record("structure.algebra", STRUCTURAL, witness=problem[1], detail=problem[0])
        return report
    w = a.warping
    b = w.ambient
    if naturality:
        for y, F in a.E.items():
            report.merge(check_functor(F), prefix=f"E({label(y)}).")

        def e_cases():
            for a1, x, y in a.pairs():
                e = a.e[(a1, x)]
                for phi in b.homcat(*b.ends(a1)).outgoing(a1):
                    e_phi = a.Emor(phi)
                    yield ({"a": a1, "x": x, "cell": phi},
                           b.vcomp(a.e[(b.cod2(phi), x)], a.Emor(b.comp2(e_phi, b.id2(x)))),
                           b.vcomp(b.comp2(e_phi, w.Tmor(b.id2(x), y)), e))
                for xi in b.homcat(*b.ends(x)).outgoing(x):
                    e_one = a.Emor(b.id2(a1))
                    yield ({"a": a1, "x": x, "cell": xi},
                           b.vcomp(a.e[(a1, b.cod2(xi))], a.Emor(b.comp2(e_one, xi))),
                           b.vcomp(b.comp2(e_one, w.Tmor(xi, y)), e))

        def e0_cases():
            for a1, y in a.cells():
                for phi in b.homcat(*b.ends(a1)).outgoing(a1):
                    yield ({"a": a1, "cell": phi},
                           b.vcomp(a.e0[b.cod2(phi)], phi),
                           b.vcomp(b.comp2(a.Emor(phi), b.id2(w.K[y])), a.e0[a1]))

        report.law("naturality.e", e_cases())
        report.law("naturality.e0", e0_cases())
    falsify = set(falsify)
    for n in axioms:
        report.law(f"axiom-{n}", algebra_axiom_cases(a, n), tag=ALGEBRA_TAGS[n],
                   falsification=n in falsify)
    return report


def is_invertible_algebra(a: WarpingAlgebra) -> bool:
    b = a.warping.ambient
    return all(is_iso(b.cell_hom(c), c) for c in list(a.e.values()) + list(a.e0.values()))


def check_redundancy_algebra(a: WarpingAlgebra) -> Report:
    """Algebra axiom 3 from axioms 1-2 over a warping on a bicategory.

    Requires the ambient bicategory and the warping to pass every check,
    E functorial, e and e0 natural and invertible, and axioms 1-2.
    """
    w = a.warping
    report = Report(a.name, "algebra-redundancy")
    ambient = check_skew_bicat(w.ambient)
    warping = check_skew_warping(w)
    if not (_require(report, "precondition.ambient-axioms", ambient.ok, "ambient fails its axioms")
            and _require(report, "precondition.bicategory", is_bicategory(w.ambient),
                         "ambient has a non-invertible constraint")
            and _require(report, "precondition.warping", warping.ok and is_warping(w),
                         "not a warping")):
        return report
    base = check_warping_algebra(a, axioms=(1, 2))
    if not (_require(report, "precondition.structure", not base.structural, "algebra data malformed")
            and _require(report, "precondition.naturality",
                         all(e.ok for e in base.entries if not e.name.startswith("axiom-")),
                         "E not functorial or e, e0 not natural")
            and _require(report, "precondition.invertible", is_invertible_algebra(a),
                         "e or e0 not invertible")
            and _require(report, "precondition.axioms-1-2", base.ok, "axiom 1 or 2 fails")):
        return report
    result = check_warping_algebra(a, axioms=(3,), falsify=(3,), naturality=False)
    for entry in result.entries:
        entry.uses = ["axiom-1", "axiom-2"]
        report.add(entry)
    return report
