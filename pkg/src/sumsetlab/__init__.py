"""Dilated sumsets A + k.A: exact computation, structural checkers and desk-scale search."""

from .bounds import bound_report, build_extremal, check_extremal_equality, chs_bound, factorial_bound, threshold
from .core_sets import IntSet, add_dilated, add_dilated_size, make_set, parse_set_literal
from .decomposition import decompose, normalize
from .search import SearchSpec, find_violations, min_sumset_size, verify_lemma

__version__ = "0.1.0"

__all__ = [
    "IntSet",
    "SearchSpec",
    "add_dilated",
    "add_dilated_size",
    "bound_report",
    "build_extremal",
    "check_extremal_equality",
    "chs_bound",
    "decompose",
    "factorial_bound",
    "find_violations",
    "make_set",
    "min_sumset_size",
    "normalize",
    "parse_set_literal",
    "threshold",
    "verify_lemma",
]
