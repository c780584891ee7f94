"""Exact real algebraic arithmetic: no floating-point tolerances anywhere."""

from .expr import Expr, expr_is_zero
from .real import AlgebraicReal, compare, real_roots
from .tower import Element, NumberSystem, ZeroTestDisagreement, zero_test_strategy

__all__ = [
    "AlgebraicReal",
    "Element",
    "Expr",
    "NumberSystem",
    "ZeroTestDisagreement",
    "compare",
    "expr_is_zero",
    "real_roots",
    "zero_test_strategy",
]
