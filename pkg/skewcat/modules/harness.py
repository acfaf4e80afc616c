"""
Seeded harness runs.

Instances are drawn from one-object warpings on suspended strict Z/n:
T is the group endomorphism m -> t*m and v, k, v0 are elements of Z/n.
Exhaustive families cover every (t, v, k, v0); random families draw them
from a numpy Generator seeded per instance. Work is fanned out per seed
with parallel_map and merged in seed order.
"""

from dataclasses import dataclass, replace
from functools import lru_cache
from itertools import product
from typing import List, Optional, Tuple, Union

import numpy as np

from ..core.fincat import FinFunctor, cyclic_group_category
from ..core.parallel import parallel_map
from ..core.report import FAIL, FALSIFICATION, PASS, PRECONDITION, Report, label
from ..utils.config import HarnessConfig
from ..utils.logger import setup_logger, log_execution
from .fixtures import strict_cyclic_moncat
from .skewstruct import SkewMonCat, check_skew_bicat, check_skew_moncat, suspension
from .warpings import (SkewWarping, WarpingAlgebra, axiom_trace, check_redundancy_algebra,
                       check_redundancy_warping, check_skew_warping, kleisli_warping)

logger = setup_logger(__name__)


@dataclass(frozen=True)
class Trial:
    """Outcome of one seeded mutation."""
    seed: int
    instance: str
    table: str
    key: str
    effective: bool
    detected: bool


# ---------------------------------------------------------------------------
# instance families
# ---------------------------------------------------------------------------

def _endo(n: int, t: int, name: str) -> FinFunctor:
    c = cyclic_group_category(n)
    return FinFunctor(c, c, {"*": "*"}, {str(m): str(t * m % n) for m in range(n)}, name=name)


@lru_cache(maxsize=None)
def _ambient(n: int):
    return suspension(strict_cyclic_moncat(n))


def zn_warping(n: int, t: int, v: int, k: int, v0: int) -> SkewWarping:
    b = _ambient(n)
    return SkewWarping(
        ambient=b,
        D={"*": "*"},
        T={("*", "*"): _endo(n, t, "T")},
        K={"*": "*"},
        v={("*", "*", "*"): str(v % n)},
        k={("*", "*"): str(k % n)},
        v0={"*": str(v0 % n)},
        name=f"Z{n}[t={t},v={v},k={k},v0={v0}]",
    )


def zn_warpings(n: int) -> List[SkewWarping]:
    """Every one-object warping datum on suspended strict Z/n."""
    return [zn_warping(n, *values) for values in product(range(n), repeat=4)]


def random_zn_warping(seed: int, bound: int = 3) -> SkewWarping:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, max(bound, 2) + 1))
    t, v, k, v0 = (int(x) for x in rng.integers(0, n, size=4))
    return zn_warping(n, t, v, k, v0)


def zn_algebra(w: SkewWarping, s: int, e: int, e0: int) -> WarpingAlgebra:
    """An algebra on the single 0-cell with E: m -> s*m."""
    n = len(w.ambient.hom[("*", "*")].morphisms)
    return WarpingAlgebra(
        w, "*", {"*": _endo(n, s, "E")},
        {("*", "*"): str(e % n)}, {"*": str(e0 % n)},
        name=f"{w.name}-alg[s={s},e={e},e0={e0}]",
    )


def zn_algebras(w: SkewWarping) -> List[WarpingAlgebra]:
    n = len(w.ambient.hom[("*", "*")].morphisms)
    return [zn_algebra(w, *values) for values in product(range(n), repeat=3)]


def random_zn_algebra(seed: int, bound: int = 3) -> WarpingAlgebra:
    rng = np.random.default_rng(seed)
    w = random_zn_warping(int(rng.integers(0, 2 ** 31)), bound)
    n = len(w.ambient.hom[("*", "*")].morphisms)
    s, e, e0 = (int(x) for x in rng.integers(0, n, size=3))
    return zn_algebra(w, s, e, e0)


def valid_zn_warpings(n: int) -> List[SkewWarping]:
    return [w for w in zn_warpings(n) if check_skew_warping(w).ok]


# ---------------------------------------------------------------------------
# perturbation
# ---------------------------------------------------------------------------

Instance = Union[SkewMonCat, SkewWarping]


@lru_cache(maxsize=None)
def _mutation_pool() -> Tuple[Instance, ...]:
    pool: List[Instance] = [strict_cyclic_moncat(2), strict_cyclic_moncat(3)]
    for n in (2, 3):
        pool.extend(valid_zn_warpings(n))
    return tuple(pool)


def mutate(instance: Instance, rng: np.random.Generator) -> Tuple[Instance, str, str, bool]:
    """Replace one component of alpha/lambda/rho or v/k/v0 by a parallel cell.

    [OUTPUT]
    Tuple[Instance, str, str, bool]
        Mutant, table name, key, and whether the value actually changed
    """
    if isinstance(instance, SkewMonCat):
        tables = {"alpha": instance.alpha, "lam": instance.lam, "rho": instance.rho}

        def parallel(cell):
            return instance.base.hom(instance.base.src[cell], instance.base.tgt[cell])
    else:
        tables = {"v": instance.v, "k": instance.k, "v0": instance.v0}
        b = instance.ambient

        def parallel(cell):
            return b.cell_hom(cell).hom(b.dom2(cell), b.cod2(cell))

    names = [name for name, table in tables.items() if table]
    name = names[int(rng.integers(len(names)))]
    table = tables[name]
    keys = list(table)
    key = keys[int(rng.integers(len(keys)))]
    options = parallel(table[key])
    new = options[int(rng.integers(len(options)))]
    mutated = dict(table)
    mutated[key] = new
    return replace(instance, **{name: mutated}), name, label(key), new != table[key]


def _mutation_trial(seed: int) -> Trial:
    rng = np.random.default_rng(seed)
    pool = _mutation_pool()
    instance = pool[int(rng.integers(len(pool)))]
    mutant, table, key, effective = mutate(instance, rng)
    if not effective:
        return Trial(seed, instance.name, table, key, False, False)
    if isinstance(mutant, SkewMonCat):
        detected = not check_skew_moncat(mutant).ok
    else:
        detected = not check_skew_warping(mutant).ok
    return Trial(seed, instance.name, table, key, True, detected)


@log_execution
def perturbation_run(config: Optional[HarnessConfig] = None) -> Report:
    """Share of effective single-component mutations caught by the checkers.

    Mutations that land on the old value are excluded.
    """
    config = config or HarnessConfig()
    seeds = [config.base_seed + i for i in range(config.mutations)]
    trials = parallel_map(_mutation_trial, seeds, workers=config.workers)
    effective = [t for t in trials if t.effective]
    detected = [t for t in effective if t.detected]
    rate = len(detected) / len(effective) if effective else 1.0
    report = Report("perturbation", "harness")
    report.meta.update(mutations=len(trials), effective=len(effective),
                       excluded=len(trials) - len(effective), detected=len(detected), rate=rate)
    missed = next((t for t in effective if not t.detected), None)
    report.record("detection-rate", PASS if rate >= config.detection_threshold else FAIL,
                  checked=len(effective),
                  witness=None if missed is None else {"seed": missed.seed, "instance": missed.instance,
                                                       "table": missed.table, "key": missed.key},
                  detail=f"{len(detected)}/{len(effective)} detected, {len(trials) - len(effective)} excluded")
    logger.info(f"Detection rate {rate:.3f} over {len(effective)} effective mutations")
    return report


# ---------------------------------------------------------------------------
# redundancy and the Kleisli construction
# ---------------------------------------------------------------------------

def _verdict(report: Report) -> str:
    if any(e.status == FALSIFICATION for e in report.entries):
        return FALSIFICATION
    if any(e.status == PRECONDITION for e in report.entries):
        return PRECONDITION
    return PASS


def _warping_redundancy_trial(seed: int, bound: int) -> Tuple[str, str]:
    w = random_zn_warping(seed, bound)
    return w.name, _verdict(check_redundancy_warping(w))


def _algebra_redundancy_trial(seed: int, bound: int) -> Tuple[str, str]:
    a = random_zn_algebra(seed, bound)
    return a.name, _verdict(check_redundancy_algebra(a))


def _summarize(report: Report, name: str, outcomes: List[Tuple[str, str]]) -> None:
    applicable = [o for o in outcomes if o[1] != PRECONDITION]
    falsified = [o for o in outcomes if o[1] == FALSIFICATION]
    report.record(
        name, FALSIFICATION if falsified else PASS, checked=len(outcomes),
        witness={"instance": falsified[0][0]} if falsified else None,
        detail=f"{len(applicable)} of {len(outcomes)} instances meet the preconditions",
    )


@log_execution
def redundancy_run(config: Optional[HarnessConfig] = None) -> Report:
    """Warping axioms 3-5 and algebra axiom 3 on exhaustive and random instances."""
    config = config or HarnessConfig()
    report = Report("redundancy", "harness")
    exhaustive = zn_warpings(2) + zn_warpings(3)
    _summarize(report, "warping-exhaustive",
               [(w.name, _verdict(check_redundancy_warping(w))) for w in exhaustive])
    seeds = [config.base_seed + i for i in range(config.seeds)]
    _summarize(report, "warping-random",
               parallel_map(_warping_redundancy_trial, seeds, config.random_bound, workers=config.workers))

    algebras = [a for n in (2, 3) for w in valid_zn_warpings(n) for a in zn_algebras(w)]
    _summarize(report, "algebra-exhaustive",
               [(a.name, _verdict(check_redundancy_algebra(a))) for a in algebras])
    _summarize(report, "algebra-random",
               parallel_map(_algebra_redundancy_trial, seeds, config.random_bound, workers=config.workers))
    return report


def _kleisli_outcome(w: SkewWarping) -> Tuple[str, bool, bool]:
    """(name, applicable, holds): B_T valid and no axiom-trace falsification."""
    if not (check_skew_bicat(w.ambient).ok and check_skew_warping(w).ok):
        return w.name, False, True
    valid = check_skew_bicat(kleisli_warping(w)).ok
    trace = axiom_trace(w)
    return w.name, True, valid and all(e.status != FALSIFICATION for e in trace.entries)


def _kleisli_trial(seed: int, bound: int) -> Tuple[str, bool, bool]:
    return _kleisli_outcome(random_zn_warping(seed, bound))


@log_execution
def kleisli_run(config: Optional[HarnessConfig] = None) -> Report:
    """B_T passes check_skew_bicat for every warping that passes its own checks."""
    config = config or HarnessConfig()
    report = Report("kleisli", "harness")
    seeds = [config.base_seed + i for i in range(config.seeds)]
    for name, outcomes in (
        ("kleisli-exhaustive", [_kleisli_outcome(w) for w in zn_warpings(2) + zn_warpings(3)]),
        ("kleisli-random", parallel_map(_kleisli_trial, seeds, config.random_bound, workers=config.workers)),
    ):
        applicable = [o for o in outcomes if o[1]]
        report.predicate(name, (({"instance": o[0]}, o[2]) for o in applicable), falsification=True)
        report.entries[-1].detail = f"{len(applicable)} of {len(outcomes)} instances are warpings"
    return report
