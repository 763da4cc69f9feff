"""Exact tools for fractional oriented coloring."""

from importlib import resources

from .coloring import (
    BFoldColoring,
    ConsistentSubOrientation,
    Rational,
    blow_up,
    extract_suborientation,
    ratio,
    verify_coloring,
    verify_consistency,
)
from .cycles import analyze_miser, beta, classify_prime, construct_typeA_coloring, theorem_value
from .graph import OrientedGraph, alpha_o, augment, build_graph, directed_cycle, girth, omega_ro
from .solver import Outcome, SearchBudget, bound_sweep, chi_b, chi_o, exists_bfold, hom_exists
from .targets import build_target, check_nice, epsilon_report, tuple_coloring

__version__ = "0.1.0"


def data_path(name: str):
    """Path of a file shipped in ``orifrac/data`` (e.g. ``fig1.col``)."""
    return resources.files(__name__).joinpath("data", name)
