"""Exact parameter analysis of distance-regular graphs and their Q-polynomial structures."""

from .algebraic import AlgebraicReal, Expr, NumberSystem, ZeroTestDisagreement, compare, expr_is_zero, real_roots, zero_test_strategy
from .algebraic.real import as_rational
from .catalog import CatalogEntry, builtin_catalog, read_catalog, write_catalog
from .families import FamilySpec, family_array, is_hadamard, sylvester_hadamard
from .harness import (
    classify_theorem3,
    forced_parameters,
    refute_selfdual_family,
    verify_twice_q_identities,
)
from .oracle import build_graph, spectrum_crosscheck, verify_drg
from .report import AnalysisReport, analyze
from .scheme import (
    ArraySyntaxError,
    IntersectionArray,
    InvalidArrayError,
    Scheme,
    eigenmatrices,
    feasibility_report,
    intersection_numbers,
    krein_parameters,
    parse_array,
    spectrum,
)
from .structures import (
    imprimitivity,
    p_structures,
    q_structures,
    recurrence_fit,
    schur_idempotent_pairs,
    suzuki_type,
    tightness,
)

__version__ = "0.1.0"
