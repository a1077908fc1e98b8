"""Exact Riordan arrays and Laguerre polynomials."""

from ._core import (
    EvalError,
    ParseError,
    Polynomial,
    bivariate_laguerre,
    check_names,
    laguerre,
    laguerre_table,
    riordan_matrix,
    verify,
)

__all__ = [
    "EvalError",
    "ParseError",
    "Polynomial",
    "bivariate_laguerre",
    "check_names",
    "laguerre",
    "laguerre_table",
    "riordan_matrix",
    "verify",
]
__version__ = "0.1.0"
