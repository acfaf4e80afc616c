"""Configuration for enumeration bounds, harness runs and output.

Provides simple configuration classes for:
- Size bounds on enumeration and closure passes
- Seeded harness runs
- Report output
"""

from dataclasses import dataclass
from typing import Optional


@dataclass
class BoundsConfig:
    """Size bounds for brute-force searches.

    [ATTRIBUTES]
    max_hom_size : int
        Largest hom set a generator will fill
    max_base_objects : int
        Largest number of base objects a generated structure may have
    max_morphisms : int
        Largest category accepted by monad enumeration
    max_candidates : int
        Largest candidate product an enumeration will walk
    closure_bound : int
        Largest object list a closure pass may grow to
    """
    max_hom_size: int = 6
    max_base_objects: int = 5
    max_morphisms: int = 40
    max_candidates: int = 200000
    closure_bound: int = 24


@dataclass
class HarnessConfig:
    """Configuration for seeded harness runs.

    [ATTRIBUTES]
    seeds : int
        Number of random instances per redundancy run
    mutations : int
        Number of seeded single-component mutations
    random_bound : int
        Largest hom size used by random generators
    base_seed : int
        Offset added to every seed
    detection_threshold : float
        Share of effective mutations that must be detected
    workers : Optional[int]
        Worker processes, None for cpu_count - 1
    """
    seeds: int = 200
    mutations: int = 500
    random_bound: int = 3
    base_seed: int = 0
    detection_threshold: float = 0.95
    workers: Optional[int] = None


@dataclass
class OutputConfig:
    """Report output settings."""
    format: str = "text"
    indent: int = 2
