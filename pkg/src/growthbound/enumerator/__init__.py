"""Growing the twig sets C_i and summing their weights."""

from .config import (
    Configuration,
    EmptyQueueError,
    condition_star,
    extend,
    iter_completed,
    reference_weight_counts,
)
from .driver import BUDGET_ENV, BudgetExceeded, WeightSum, build_weight_sum, closed_twig_census, twig_set

__all__ = [
    "BUDGET_ENV",
    "BudgetExceeded",
    "Configuration",
    "EmptyQueueError",
    "WeightSum",
    "build_weight_sum",
    "closed_twig_census",
    "condition_star",
    "extend",
    "iter_completed",
    "reference_weight_counts",
    "twig_set",
]
