"""
skewcat - finite checkers for skew monoidal categories, skew warpings
and the normalization of skew monoidal categories.
"""

__version__ = "1.0.0"

from .core.fincat import FinCat, FinFunctor, NatTrans, validate_category
from .core.report import Report
from .modules.mwmonads import MwMonad, check_mw_monad, check_mw_algebra
from .modules.skewstruct import SkewBicat, SkewMonCat, check_skew_bicat, check_skew_moncat
from .modules.warpings import SkewWarping, WarpingAlgebra, check_skew_warping, check_warping_algebra
from .modules.profhom import FinProf, hom_skew_moncat, prof_compose
from .modules.normalize import normalize, theorem2_instance

__all__ = [
    "FinCat",
    "FinFunctor",
    "NatTrans",
    "validate_category",
    "Report",
    "MwMonad",
    "check_mw_monad",
    "check_mw_algebra",
    "SkewBicat",
    "SkewMonCat",
    "check_skew_bicat",
    "check_skew_moncat",
    "SkewWarping",
    "WarpingAlgebra",
    "check_skew_warping",
    "check_warping_algebra",
    "FinProf",
    "hom_skew_moncat",
    "prof_compose",
    "normalize",
    "theorem2_instance",
]
