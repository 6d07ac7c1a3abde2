"""Enumeration budget: the maximum number of point evaluations (q^4) allowed."""

import os

from .errors import BudgetExceeded

DEFAULT_BUDGET = 2**32
ENV_VAR = "MAXCURVE_BUDGET"


def resolve_budget(budget=None):
    if budget is not None:
        budget = int(budget)
    else:
        env = os.environ.get(ENV_VAR)
        budget = int(env) if env else DEFAULT_BUDGET
    if budget <= 0:
        raise ValueError(f"budget must be positive, got {budget}")
    return budget


def fits_budget(q, budget=None):
    return q**4 <= resolve_budget(budget)


def check_budget(q, budget=None):
    budget = resolve_budget(budget)
    if q**4 > budget:
        raise BudgetExceeded(f"q^4 = {q**4} point evaluations exceed the budget {budget}")
