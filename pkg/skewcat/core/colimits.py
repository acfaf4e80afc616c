"""
Coequalizers.

Quotients of finite sets are computed with a union-find over the generated
relation. In an arbitrary finite category a coequalizer is found by brute
force: every candidate cofork is tested against every other cofork for a
unique factorization.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from .fincat import FinCat, FinFunctor, FinSetObj, FinSetMap, Ident
from .report import label
from ..utils.errors import PreconditionError, StructuralError

if TYPE_CHECKING:
    from ..modules.skewstruct import SkewMonCat


class UnionFind:
    """Union-find over hashable elements.

    Supports:
    - Path compression
    - Union by rank
    - Class size tracking
    - Count of effective merges
    """

    def __init__(self, elements: Iterable[Hashable]):
        self.parent = {x: x for x in elements}
        self.rank = {x: 0 for x in self.parent}
        self.size = {x: 1 for x in self.parent}
        self.merges = 0

    def find(self, x: Hashable) -> Hashable:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> bool:
        """Merge the classes of x and y; False if they were already merged."""
        root_x, root_y = self.find(x), self.find(y)
        if root_x == root_y:
            return False
        if self.rank[root_x] < self.rank[root_y]:
            root_x, root_y = root_y, root_x
        self.parent[root_y] = root_x
        self.size[root_x] += self.size[root_y]
        if self.rank[root_x] == self.rank[root_y]:
            self.rank[root_x] += 1
        self.merges += 1
        return True


def quotient(elements: Sequence[Hashable],
             relations: Iterable[Tuple[Hashable, Hashable]]) -> Tuple[Tuple[Hashable, ...], Dict[Hashable, Hashable]]:
    """Quotient of a finite sequence by the equivalence generated by relations.

    [OUTPUT]
    Tuple[Tuple[Hashable, ...], Dict[Hashable, Hashable]]
        Class representatives in canonical order, and the map sending each
        element to its representative (the least member of its class)
    """
    uf = UnionFind(elements)
    for a, b in relations:
        uf.union(a, b)
    least: Dict[Hashable, Hashable] = {}
    for x in elements:
        least.setdefault(uf.find(x), x)
    projection = {x: least[uf.find(x)] for x in elements}
    representatives = tuple(x for x in elements if projection[x] == x)
    return representatives, projection


def coequalizer_finset(u: FinSetMap, v: FinSetMap) -> Tuple[FinSetObj, FinSetMap]:
    """Coequalizer of parallel maps of finite sets.

    [PARAMETERS]
    u, v : FinSetMap
        Parallel maps X -> Y

    [OUTPUT]
    Tuple[FinSetObj, FinSetMap]
        Quotient Q of Y, classes named by least member, and the surjection Y -> Q

    [RAISES]
    StructuralError
        If u and v are not parallel

    [EXAMPLE]
    >>> Q, q = coequalizer_finset(u, v)
    >>> all(q(u(x)) == q(v(x)) for x in u.dom)
    True
    """
    if u.dom != v.dom or u.cod != v.cod:
        raise StructuralError("coequalizer of non-parallel maps")
    reps, projection = quotient(u.cod.elements, ((u(x), v(x)) for x in u.dom))
    Q = FinSetObj(reps, name=f"{u.cod.name}/~")
    return Q, FinSetMap(u.cod, Q, projection)


@dataclass(frozen=True)
class Cofork:
    """A cofork q: Y -> Q under the parallel pair u, v: X -> Y."""
    u: Ident
    v: Ident
    q: Ident

    def apex(self, c: FinCat) -> Ident:
        return c.tgt[self.q]


def is_cofork(c: FinCat, cofork: Cofork) -> bool:
    u, v, q = cofork.u, cofork.v, cofork.q
    if c.src[u] != c.src[v] or c.tgt[u] != c.tgt[v] or c.src[q] != c.tgt[u]:
        return False
    return c.comp[(q, u)] == c.comp[(q, v)]


def factorizations(c: FinCat, q: Ident, r: Ident) -> List[Ident]:
    """Every s with s o q = r."""
    return [s for s in c.hom(c.tgt[q], c.tgt[r]) if c.comp[(s, q)] == r]


def factor_through(c: FinCat, q: Ident, r: Ident) -> Ident:
    """The unique s with s o q = r.

    [RAISES]
    PreconditionError
        If r does not factor through q, or factors more than once
    """
    if c.src[q] != c.src[r]:
        raise StructuralError(f"{label(r)} and {label(q)} do not share a source")
    found = factorizations(c, q, r)
    if len(found) != 1:
        raise PreconditionError(
            f"{label(r)} has {len(found)} factorizations through {label(q)} in {c.name}"
        )
    return found[0]


def colimit_failure(c: FinCat, cofork: Cofork) -> Optional[Dict[str, Ident]]:
    """First cofork that fails to factor uniquely through the given one, or None."""
    if not is_cofork(c, cofork):
        return {"reason": "not a cofork", "q": cofork.q}
    y = c.tgt[cofork.u]
    for z in c.objects:
        for r in c.hom(y, z):
            if c.comp[(r, cofork.u)] != c.comp[(r, cofork.v)]:
                continue
            count = len(factorizations(c, cofork.q, r))
            if count != 1:
                return {"apex": z, "r": r, "factorizations": str(count)}
    return None


def is_colimiting(c: FinCat, cofork: Cofork) -> bool:
    return colimit_failure(c, cofork) is None


def coequalizer_search(c: FinCat, u: Ident, v: Ident) -> Optional[Cofork]:
    """Least colimiting cofork under u, v, or None if there is none.

    [WORKFLOW]
    1. Walk apex candidates Q in object order
    2. Walk legs q: Y -> Q in morphism order
    3. Return the first cofork every other cofork factors through uniquely

    [RAISES]
    StructuralError
        If u and v are not parallel
    """
    if c.src[u] != c.src[v] or c.tgt[u] != c.tgt[v]:
        raise StructuralError(f"{label(u)} and {label(v)} are not parallel")
    y = c.tgt[u]
    for apex in c.objects:
        for q in c.hom(y, apex):
            cofork = Cofork(u, v, q)
            if is_colimiting(c, cofork):
                return cofork
    return None


def preservation_failure(F: FinFunctor, cofork: Cofork) -> Optional[Dict[str, Ident]]:
    """Witness that F does not send the cofork to a colimiting one, or None."""
    image = Cofork(F(cofork.u), F(cofork.v), F(cofork.q))
    return colimit_failure(F.cod, image)


def check_preservation(F: FinFunctor, cofork: Cofork) -> bool:
    return preservation_failure(F, cofork) is None


def check_preservation_by_right_tensor(m: "SkewMonCat", cofork: Cofork, z: Ident) -> bool:
    """Whether - (x) Z sends a colimiting cofork to a colimiting one.

    [PARAMETERS]
    m : SkewMonCat
        Skew monoidal category supplying the tensor
    cofork : Cofork
        Colimiting cofork in m.base
    z : Ident
        Object to tensor with on the right

    [RAISES]
    PreconditionError
        If the given cofork is not colimiting
    """
    if not is_colimiting(m.base, cofork):
        raise PreconditionError(f"cofork through {label(cofork.q)} is not colimiting")
    return check_preservation(m.right_tensor(z), cofork)
