"""
Core finite structures: categories, colimit search, reports and parallel execution.

JSON input and output lives in core.io, which depends on the structure modules
and is imported directly.
"""

from .fincat import (
    FinCat,
    FinFunctor,
    NatTrans,
    chain_category,
    cyclic_group_category,
    discrete_category,
    terminal_category,
    validate_category,
)
from .colimits import coequalizer_search
from .report import Report, CheckEntry, label
from .parallel import parallel_map

__all__ = [
    # categories
    "FinCat",
    "FinFunctor",
    "NatTrans",
    "chain_category",
    "cyclic_group_category",
    "discrete_category",
    "terminal_category",
    "validate_category",
    # colimits
    "coequalizer_search",
    # reports
    "Report",
    "CheckEntry",
    "label",
    # execution
    "parallel_map",
]
