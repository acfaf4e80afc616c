import numpy as np
import pytest

from skewcat.core.parallel import parallel_map
from skewcat.core.report import PASS
from skewcat.modules.fixtures import strict_cyclic_moncat
from skewcat.modules.harness import (kleisli_run, mutate, perturbation_run, random_zn_warping,
                                     redundancy_run, valid_zn_warpings, zn_algebras, zn_warping,
                                     zn_warpings)
from skewcat.modules.warpings import check_skew_warping, check_warping_algebra
from skewcat.utils.config import HarnessConfig


@pytest.fixture
def small():
    return HarnessConfig(seeds=6, mutations=30, base_seed=7, workers=1)


def test_exhaustive_families():
    assert len(zn_warpings(2)) == 16
    assert len(zn_warpings(3)) == 81
    assert check_skew_warping(zn_warping(2, 1, 0, 0, 0)).ok
    valid = valid_zn_warpings(2)
    assert any(w.name == "Z2[t=1,v=0,k=0,v0=0]" for w in valid)


def test_free_like_algebras_exist():
    w = zn_warping(3, 1, 0, 0, 0)
    assert any(check_warping_algebra(a).ok for a in zn_algebras(w))


def test_random_instances_are_reproducible():
    assert random_zn_warping(11).name == random_zn_warping(11).name


def test_mutation_changes_one_table():
    c = strict_cyclic_moncat(3)
    mutant, table, key, effective = mutate(c, np.random.default_rng(5))
    assert table in ("alpha", "lam", "rho")
    untouched = {"alpha", "lam", "rho"} - {table}
    assert all(getattr(mutant, name) == getattr(c, name) for name in untouched)
    assert effective == (getattr(mutant, table) != getattr(c, table))


def test_parallel_map_keeps_order():
    assert parallel_map(pow, [1, 2, 3], 2, workers=1) == [1, 4, 9]


def test_perturbation_run(small):
    report = perturbation_run(small)
    assert report.meta["mutations"] == 30
    assert report.meta["effective"] + report.meta["excluded"] == 30
    assert report.entry("detection-rate").status == PASS


def test_redundancy_run(small):
    report = redundancy_run(small)
    assert [e.name for e in report.entries] == ["warping-exhaustive", "warping-random",
                                                "algebra-exhaustive", "algebra-random"]
    assert report.ok


def test_kleisli_run(small):
    report = kleisli_run(small)
    assert report.ok
    assert report.entry("kleisli-exhaustive").checked > 0


@pytest.mark.slow
def test_full_size_runs_meet_the_detection_threshold():
    config = HarnessConfig()
    assert (config.seeds, config.mutations, config.detection_threshold) == (200, 500, 0.95)
    report = perturbation_run(config)
    assert report.meta["mutations"] == 500
    assert report.meta["effective"] + report.meta["excluded"] == 500
    assert report.meta["rate"] >= 0.95
    assert report.entry("detection-rate").status == PASS
    redundancy = redundancy_run(config)
    assert redundancy.ok
    assert redundancy.entry("warping-random").checked == 200
