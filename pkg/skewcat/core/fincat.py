"""
Finite categories, functors, natural transformations and finite sets.

A FinCat is explicit tables: objects, morphisms, source/target, identities
and a composition table defined exactly on composable pairs. Declaration
order of objects and morphisms is the canonical order used by every search.
All values are immutable after construction.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .report import Report, STRUCTURAL, label
from ..utils.errors import StructuralError, BoundExceededError

Ident = Hashable


def identity_id(x: Ident) -> Ident:
    """Identifier used for the identity morphism on x by the builders below."""
    return f"1_{x}" if isinstance(x, str) else ("1", x)


@dataclass(frozen=True)
class FinCat:
    """A finite category given by tables.

    [ATTRIBUTES]
    objects : Tuple[Ident, ...]
        Object identifiers in canonical order
    morphisms : Tuple[Ident, ...]
        Morphism identifiers in canonical order
    src, tgt : Mapping[Ident, Ident]
        Source and target of each morphism
    identity : Mapping[Ident, Ident]
        Identity morphism of each object
    comp : Mapping[Tuple[Ident, Ident], Ident]
        (g, f) -> g o f, defined exactly when tgt(f) = src(g)
    name : str
        Display name, ignored by equality
    """
    objects: Tuple[Ident, ...]
    morphisms: Tuple[Ident, ...]
    src: Mapping[Ident, Ident]
    tgt: Mapping[Ident, Ident]
    identity: Mapping[Ident, Ident]
    comp: Mapping[Tuple[Ident, Ident], Ident]
    name: str = field(default="C", compare=False)

    @cached_property
    def _homs(self) -> Dict[Tuple[Ident, Ident], Tuple[Ident, ...]]:
        homs: Dict[Tuple[Ident, Ident], List[Ident]] = {}
        for m in self.morphisms:
            if m in self.src and m in self.tgt:
                homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
        return {k: tuple(v) for k, v in homs.items()}

    @cached_property
    def _outgoing(self) -> Dict[Ident, Tuple[Ident, ...]]:
        out: Dict[Ident, List[Ident]] = {}
        for m in self.morphisms:
            out.setdefault(self.src.get(m), []).append(m)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def object_index(self) -> Dict[Ident, int]:
        return {x: i for i, x in enumerate(self.objects)}

    @cached_property
    def morphism_index(self) -> Dict[Ident, int]:
        return {m: i for i, m in enumerate(self.morphisms)}

    def hom(self, x: Ident, y: Ident) -> Tuple[Ident, ...]:
        return self._homs.get((x, y), ())

    def outgoing(self, x: Ident) -> Tuple[Ident, ...]:
        return self._outgoing.get(x, ())

    def id(self, x: Ident) -> Ident:
        try:
            return self.identity[x]
        except KeyError:
            raise StructuralError(f"no identity for object {label(x)} in {self.name}")

    def compose(self, *ms: Ident) -> Ident:
        """Compose right to left: compose(h, g, f) = h o g o f."""
        if not ms:
            raise ValueError("compose needs at least one morphism")
        result = ms[-1]
        for g in reversed(ms[:-1]):
            try:
                result = self.comp[(g, result)]
            except KeyError:
                raise StructuralError(
                    f"{label(g)} o {label(result)} is not defined in {self.name}"
                )
        return result

    def composable_pairs(self) -> Iterator[Tuple[Ident, Ident]]:
        """All (g, f) with tgt(f) = src(g), in canonical order of f then g."""
        for f in self.morphisms:
            for g in self.outgoing(self.tgt[f]):
                yield g, f

    def is_identity(self, m: Ident) -> bool:
        return self.identity.get(self.src.get(m)) == m

    def is_discrete(self) -> bool:
        return all(self.is_identity(m) for m in self.morphisms)


@dataclass(frozen=True)
class FinFunctor:
    """A functor between finite categories given by its object and morphism maps."""
    dom: FinCat
    cod: FinCat
    obj_map: Mapping[Ident, Ident]
    mor_map: Mapping[Ident, Ident]
    name: str = field(default="F", compare=False)

    def ob(self, x: Ident) -> Ident:
        try:
            return self.obj_map[x]
        except KeyError:
            raise StructuralError(f"{self.name} is undefined on object {label(x)}")

    def __call__(self, m: Ident) -> Ident:
        try:
            return self.mor_map[m]
        except KeyError:
            raise StructuralError(f"{self.name} is undefined on morphism {label(m)}")


@dataclass(frozen=True)
class NatTrans:
    """A natural transformation between parallel functors."""
    dom: FinFunctor
    cod: FinFunctor
    components: Mapping[Ident, Ident]
    name: str = field(default="t", compare=False)

    def __getitem__(self, x: Ident) -> Ident:
        try:
            return self.components[x]
        except KeyError:
            raise StructuralError(f"{self.name} has no component at {label(x)}")


@dataclass(frozen=True)
class FinSetObj:
    """A finite set of element identifiers in canonical order."""
    elements: Tuple[Ident, ...]
    name: str = field(default="S", compare=False)

    def __contains__(self, x: Ident) -> bool:
        return x in self._members

    def __iter__(self) -> Iterator[Ident]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)


@dataclass(frozen=True)
class FinSetMap:
    """A total function between finite sets."""
    dom: FinSetObj
    cod: FinSetObj
    table: Mapping[Ident, Ident]

    def __call__(self, x: Ident) -> Ident:
        return self.table[x]

    def validate(self) -> None:
        """[RAISES] StructuralError if the table is not total or leaves cod."""
        for x in self.dom:
            if x not in self.table:
                raise StructuralError(f"map undefined on {label(x)}")
            if self.table[x] not in self.cod:
                raise StructuralError(f"value {label(self.table[x])} outside codomain")


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _structure_problems(c: FinCat) -> List[Tuple[str, str]]:
    problems = []
    objects, morphisms = set(c.objects), set(c.morphisms)
    if len(objects) != len(c.objects):
        problems.append(("structure.objects", "duplicate object identifier"))
    if len(morphisms) != len(c.morphisms):
        problems.append(("structure.morphisms", "duplicate morphism identifier"))
    for m in c.morphisms:
        for side, table in (("source", c.src), ("target", c.tgt)):
            if table.get(m) not in objects:
                problems.append((f"structure.{side}", f"morphism {label(m)} has dangling {side}"))
    for x in c.objects:
        if c.identity.get(x) not in morphisms:
            problems.append(("structure.identity", f"object {label(x)} has no identity morphism"))
    for (g, f), h in c.comp.items():
        if g not in morphisms or f not in morphisms or h not in morphisms:
            problems.append(("structure.composition",
                             f"composition entry ({label(g)}, {label(f)}) -> {label(h)} is dangling"))
    return problems


def validate_category(c: FinCat) -> Report:
    """Check every category law exhaustively.

    Malformed tables are reported as structural entries and stop the check;
    law violations carry the witnessing morphisms.

    [PARAMETERS]
    c : FinCat
        Category to validate

    [OUTPUT]
    Report
        Entries identity-endpoints, composition-domain, composite-endpoints,
        left-identity, right-identity, associativity

    [EXAMPLE]
    >>> validate_category(chain_category(3)).ok
    True
    """
    report = Report(c.name, "category")
    problems = _structure_problems(c)
    if problems:
        for name, detail in problems:
            report.record(name, STRUCTURAL, detail=detail)
        return report

    report.predicate("identity-endpoints", (
        ({"object": x}, c.src[c.identity[x]] == x and c.tgt[c.identity[x]] == x)
        for x in c.objects
    ))
    report.predicate("composition-domain", (
        ({"g": g, "f": f}, ((g, f) in c.comp) == (c.tgt[f] == c.src[g]))
        for g in c.morphisms for f in c.morphisms
    ))
    report.predicate("composite-endpoints", (
        ({"g": g, "f": f, "gf": h}, c.src[h] == c.src[f] and c.tgt[h] == c.tgt[g])
        for (g, f), h in c.comp.items()
    ))
    report.law("left-identity", (
        ({"f": f}, c.comp.get((c.identity[c.tgt[f]], f)), f) for f in c.morphisms
    ))
    report.law("right-identity", (
        ({"f": f}, c.comp.get((f, c.identity[c.src[f]])), f) for f in c.morphisms
    ))
    report.law("associativity", (
        ({"h": h, "g": g, "f": f},
         c.comp.get((h, c.comp.get((g, f)))),
         c.comp.get((c.comp.get((h, g)), f)))
        for g, f in c.composable_pairs() for h in c.outgoing(c.tgt[g])
    ))
    return report


def check_functor(F: FinFunctor) -> Report:
    """Check that F is total, preserves endpoints, identities and composition."""
    report = Report(F.name, "functor")
    dom, cod = F.dom, F.cod
    missing = [x for x in dom.objects if F.obj_map.get(x) not in cod.object_index]
    missing += [m for m in dom.morphisms if F.mor_map.get(m) not in cod.morphism_index]
    if missing:
        report.record("structure.totality", STRUCTURAL, witness={"at": missing[0]},
                      detail=f"{len(missing)} identifiers unmapped or mapped outside {cod.name}")
        return report

    report.predicate("functor-endpoints", (
        ({"f": m}, cod.src[F(m)] == F.ob(dom.src[m]) and cod.tgt[F(m)] == F.ob(dom.tgt[m]))
        for m in dom.morphisms
    ))
    report.law("functor-identities", (
        ({"object": x}, F(dom.identity[x]), cod.identity[F.ob(x)]) for x in dom.objects
    ))
    if report.ok:
        report.law("functor-composition", (
            ({"g": g, "f": f}, F(dom.comp[(g, f)]), cod.compose(F(g), F(f)))
            for g, f in dom.composable_pairs()
        ))
    return report


def check_nat_trans(t: NatTrans) -> Report:
    """Check component typing and every naturality square."""
    report = Report(t.name, "natural-transformation")
    F, G = t.dom, t.cod
    if F.dom != G.dom or F.cod != G.cod:
        report.record("structure.parallel", STRUCTURAL, detail="functors are not parallel")
        return report
    c, d = F.dom, F.cod
    bad = [x for x in c.objects
           if t.components.get(x) not in d.morphism_index
           or d.src[t.components[x]] != F.ob(x) or d.tgt[t.components[x]] != G.ob(x)]
    if bad:
        report.record("structure.components", STRUCTURAL, witness={"object": bad[0]},
                      detail="component missing or mistyped")
        return report
    report.law("naturality", (
        ({"f": f}, d.compose(G(f), t[c.src[f]]), d.compose(t[c.tgt[f]], F(f)))
        for f in c.morphisms
    ))
    return report


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def make_category(objects: Sequence[Ident],
                  morphisms: Sequence[Tuple[Ident, Ident, Ident]],
                  identity: Mapping[Ident, Ident],
                  comp: Mapping[Tuple[Ident, Ident], Ident],
                  name: str = "C") -> FinCat:
    """Build a FinCat from (id, src, tgt) triples."""
    return FinCat(
        objects=tuple(objects),
        morphisms=tuple(m for m, _, _ in morphisms),
        src={m: s for m, s, _ in morphisms},
        tgt={m: t for m, _, t in morphisms},
        identity=dict(identity),
        comp=dict(comp),
        name=name,
    )


def preorder_category(objects: Sequence[Ident],
                      leq: Callable[[Ident, Ident], bool],
                      name: str = "P") -> FinCat:
    """The category of a finite preorder; the arrow x -> y is named 'x<=y'."""
    def arrow(x, y):
        return f"{x}<={y}"

    pairs = [(x, y) for x in objects for y in objects if leq(x, y)]
    morphisms = [(arrow(x, y), x, y) for x, y in pairs]
    comp = {
        (arrow(y, z), arrow(x, y)): arrow(x, z)
        for x, y in pairs for (y2, z) in pairs if y2 == y
    }
    return make_category(objects, morphisms, {x: arrow(x, x) for x in objects}, comp, name)


def chain_category(n: int) -> FinCat:
    """The poset 0 <= 1 <= ... <= n-1."""
    objects = [str(i) for i in range(n)]
    return preorder_category(objects, lambda x, y: int(x) <= int(y), name=f"Ch{n}")


def terminal_category() -> FinCat:
    return make_category(["*"], [("1_*", "*", "*")], {"*": "1_*"},
                         {("1_*", "1_*"): "1_*"}, name="1")


def discrete_category(objects: Sequence[Ident], name: str = "D") -> FinCat:
    morphisms = [(identity_id(x), x, x) for x in objects]
    comp = {(identity_id(x), identity_id(x)): identity_id(x) for x in objects}
    return make_category(objects, morphisms, {x: identity_id(x) for x in objects}, comp, name)


def monoid_category(elements: Sequence[str],
                    op: Callable[[str, str], str],
                    unit: str,
                    name: str = "M") -> FinCat:
    """One-object category of a finite monoid; op(g, f) is 'g after f'."""
    morphisms = [(m, "*", "*") for m in elements]
    comp = {(g, f): op(g, f) for g in elements for f in elements}
    return make_category(["*"], morphisms, {"*": unit}, comp, name)


def cyclic_group_category(n: int) -> FinCat:
    """One-object category of Z/n with elements '0'..'n-1'."""
    elements = [str(i) for i in range(n)]
    return monoid_category(elements, lambda g, f: str((int(g) + int(f)) % n), "0", name=f"Z{n}")


def product_category(a: FinCat, b: FinCat) -> FinCat:
    """Product category; objects and morphisms are pairs, composition componentwise."""
    objects = [(x, y) for x in a.objects for y in b.objects]
    morphisms = [((f, g), a.src[f], b.src[g]) for f in a.morphisms for g in b.morphisms]
    comp = {
        ((f2, g2), (f1, g1)): (a.comp[(f2, f1)], b.comp[(g2, g1)])
        for f2, f1 in a.composable_pairs() for g2, g1 in b.composable_pairs()
    }
    return FinCat(
        objects=tuple(objects),
        morphisms=tuple(m for m, _, _ in morphisms),
        src={(f, g): (a.src[f], b.src[g]) for f in a.morphisms for g in b.morphisms},
        tgt={(f, g): (a.tgt[f], b.tgt[g]) for f in a.morphisms for g in b.morphisms},
        identity={(x, y): (a.identity[x], b.identity[y]) for x, y in objects},
        comp=comp,
        name=f"{a.name}x{b.name}",
    )


def opposite_category(c: FinCat) -> FinCat:
    return FinCat(
        objects=c.objects,
        morphisms=c.morphisms,
        src=dict(c.tgt),
        tgt=dict(c.src),
        identity=dict(c.identity),
        comp={(f, g): h for (g, f), h in c.comp.items()},
        name=f"{c.name}^op",
    )


def relabel_category(c: FinCat,
                     obj_fn: Callable[[Ident], Ident],
                     mor_fn: Callable[[Ident], Ident],
                     name: Optional[str] = None) -> FinCat:
    """Rename objects and morphisms through injective functions."""
    return FinCat(
        objects=tuple(obj_fn(x) for x in c.objects),
        morphisms=tuple(mor_fn(m) for m in c.morphisms),
        src={mor_fn(m): obj_fn(x) for m, x in c.src.items()},
        tgt={mor_fn(m): obj_fn(x) for m, x in c.tgt.items()},
        identity={obj_fn(x): mor_fn(m) for x, m in c.identity.items()},
        comp={(mor_fn(g), mor_fn(f)): mor_fn(h) for (g, f), h in c.comp.items()},
        name=name or c.name,
    )


def identity_functor(c: FinCat) -> FinFunctor:
    return FinFunctor(c, c, {x: x for x in c.objects}, {m: m for m in c.morphisms},
                      name=f"1_{c.name}")


def compose_functors(G: FinFunctor, F: FinFunctor) -> FinFunctor:
    """G o F."""
    return FinFunctor(
        F.dom, G.cod,
        {x: G.ob(F.ob(x)) for x in F.dom.objects},
        {m: G(F(m)) for m in F.dom.morphisms},
        name=f"{G.name}{F.name}",
    )


def find_inverse(c: FinCat, m: Ident) -> Optional[Ident]:
    """Two-sided inverse of m found by exhaustive search, or None."""
    x, y = c.src[m], c.tgt[m]
    for g in c.hom(y, x):
        if c.comp[(g, m)] == c.identity[x] and c.comp[(m, g)] == c.identity[y]:
            return g
    return None


def is_iso(c: FinCat, m: Ident) -> bool:
    return find_inverse(c, m) is not None


def enumerate_functors(dom: FinCat,
                       cod: FinCat,
                       max_candidates: int = 200000) -> List[FinFunctor]:
    """All functors dom -> cod, by backtracking over morphism assignments.

    [WORKFLOW]
    1. Walk every object assignment in canonical order
    2. Assign non-identity morphisms one by one among hom(F src, F tgt)
    3. Prune on every composition triple fully assigned so far

    [RAISES]
    BoundExceededError
        If more than max_candidates partial assignments are visited
    """
    order = [m for m in dom.morphisms if not dom.is_identity(m)]
    position = {m: i for i, m in enumerate(order)}

    def pos(m):
        return -1 if dom.is_identity(m) else position[m]

    # each composition triple is checked once its last member is assigned
    checks: Dict[int, List[Tuple[Ident, Ident, Ident]]] = {i: [] for i in range(len(order))}
    for (g, f), h in dom.comp.items():
        last = max(pos(g), pos(f), pos(h))
        if last >= 0:
            checks[last].append((g, f, h))

    results: List[FinFunctor] = []
    visited = 0

    for images in product(cod.objects, repeat=len(dom.objects)):
        obj_map = dict(zip(dom.objects, images))
        mor_map = {dom.identity[x]: cod.identity[obj_map[x]] for x in dom.objects}

        def extend(i: int) -> Iterator[None]:
            nonlocal visited
            if i == len(order):
                yield None
                return
            m = order[i]
            for candidate in cod.hom(obj_map[dom.src[m]], obj_map[dom.tgt[m]]):
                visited += 1
                if visited > max_candidates:
                    raise BoundExceededError(
                        f"functor enumeration {dom.name} -> {cod.name} exceeds {max_candidates} candidates")
                mor_map[m] = candidate
                if all(cod.comp.get((mor_map[g], mor_map[f])) == mor_map[h] for g, f, h in checks[i]):
                    yield from extend(i + 1)
            mor_map.pop(m, None)

        for _ in extend(0):
            results.append(FinFunctor(dom, cod, dict(obj_map), dict(mor_map),
                                      name=f"F{len(results)}"))
    return results


def hom_table(c: FinCat) -> Dict[Tuple[Ident, Ident], int]:
    """Hom-set sizes keyed by object pairs."""
    return {(x, y): len(c.hom(x, y)) for x in c.objects for y in c.objects}


def morphisms_between(c: FinCat, pairs: Iterable[Tuple[Ident, Ident]]) -> Dict[Tuple[Ident, Ident], Tuple[Ident, ...]]:
    return {pair: c.hom(*pair) for pair in pairs}
