"""Permutation binomials x^i + a x over GF(2^n): field arithmetic, testers, search."""
from .field import FieldSpec, build_field
from .permtest import BinomialSpec, is_pp_direct, is_pp_hermite
from .agw import IndexForm, compute_index, is_pp_via_agw
from .search import PBRecord, SearchConfig, search_field

__all__ = [
    "FieldSpec", "build_field", "BinomialSpec", "is_pp_direct", "is_pp_hermite",
    "IndexForm", "compute_index", "is_pp_via_agw", "PBRecord", "SearchConfig", "search_field",
]
