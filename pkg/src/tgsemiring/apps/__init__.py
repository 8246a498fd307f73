"""Analyzers that run over one fixed structure: codes, S-boxes, fuzzy ideals, paths."""

from .codes import CheckOperator, GammaLinearCode, check_code, code_generate, weight_report
from .fuzzy import fuzzy_from_chain, fuzzy_ideal_check
from .paths import WeightedGraph, parse_graph, path_values_by_enumeration, ternary_path_values
from .sbox import SBoxProfile, sbox_differential_profile

__all__ = [
    "CheckOperator",
    "GammaLinearCode",
    "SBoxProfile",
    "WeightedGraph",
    "check_code",
    "code_generate",
    "fuzzy_from_chain",
    "fuzzy_ideal_check",
    "parse_graph",
    "path_values_by_enumeration",
    "sbox_differential_profile",
    "ternary_path_values",
    "weight_report",
]
