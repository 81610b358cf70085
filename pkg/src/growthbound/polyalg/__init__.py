"""Exact polynomial algebra: bivariate weights, resultants, real roots, series."""

from . import upoly
from .bipoly import BiPoly, parse_bipoly
from .resultant import discriminant_in_s, resultant_eval_interp, resultant_prs
from .roots import RootInterval, max_real_root, real_roots
from .series import series_diagonal
from .spoly import MalformedWeightError, SPoly, clear_denominator

__all__ = [
    "BiPoly",
    "MalformedWeightError",
    "RootInterval",
    "SPoly",
    "clear_denominator",
    "discriminant_in_s",
    "max_real_root",
    "parse_bipoly",
    "real_roots",
    "resultant_eval_interp",
    "resultant_prs",
    "series_diagonal",
    "upoly",
]
