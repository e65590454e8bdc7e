"""Deterministic LP solver for <= 3 variables with many constraints.

Thin wrapper over the Seidel core; the compiled extension is preferred and the
pure-python twin is used when it is missing or GAUGEDIAM_PURE_PYTHON is set.
"""

import os
from collections import namedtuple

import numpy as np

from .errors import NumericalBreakdown

if os.environ.get("GAUGEDIAM_PURE_PYTHON"):
    from . import _seidel_py as _core
else:
    try:
        from . import _seidel as _core
    except ImportError:
        from . import _seidel_py as _core

BACKEND = _core.__name__.rsplit(".", 1)[-1]

EPS_LP = 1e-9

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
_STATUS = {0: OPTIMAL, 1: INFEASIBLE, 2: UNBOUNDED}

LpProblem = namedtuple("LpProblem", ["objective", "constraints"])
LpSolution = namedtuple("LpSolution", ["status", "point", "value", "active"])

# fixed infinitesimal objective perturbation; keeps prefix optima unique under
# the symmetric/tied inputs this package generates constantly
_PERTURB = (0.7071067811865476, 0.5773502691896258, 0.3678794411714423)


def solve_arrays(A, b, c, seed=0):
    """Minimize c.x s.t. A x <= b with ndarray inputs; returns LpSolution."""
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    d = len(c)
    if d not in (1, 2, 3):
        raise ValueError("objective dimension must be 1, 2 or 3")
    A = A.reshape(-1, d)
    m = len(b)
    if not (np.all(np.isfinite(A)) and np.all(np.isfinite(b)) and np.all(np.isfinite(c))):
        raise NumericalBreakdown("non-finite LP data")

    # normalize rows to unit inf-norm so EPS_LP is scale-free
    s = np.max(np.abs(A), axis=1) if m else np.zeros(0)
    zero = s < 1e-300
    if np.any(b[zero] < -EPS_LP):
        return LpSolution(INFEASIBLE, None, None, [])
    keep = np.flatnonzero(~zero)
    An = np.ascontiguousarray(A[keep] / s[keep, None])
    bn = np.ascontiguousarray(b[keep] / s[keep])

    cs = max(1.0, float(np.max(np.abs(c)))) if d else 1.0
    c_pert = c + 1e-11 * cs * np.array(_PERTURB[:d])

    status, x = _core.seidel_solve(An, bn, c_pert, int(seed))
    status = _STATUS[status]
    if status != OPTIMAL:
        return LpSolution(status, None, None, [])
    x = np.asarray(x, dtype=float)
    value = float(c @ x)
    xs = max(1.0, float(np.max(np.abs(x))))
    resid = np.abs(An @ x - bn) if len(keep) else np.zeros(0)
    active = [int(keep[i]) for i in np.flatnonzero(resid <= 1e-7 * xs)]
    return LpSolution(OPTIMAL, x, value, active)


def solve(p, seed=0):
    """Solve an LpProblem (minimize); deterministic for a fixed seed."""
    c = np.asarray(p.objective, dtype=float)
    m = len(p.constraints)
    A = np.zeros((m, len(c)))
    b = np.zeros(m)
    for i, (row, rhs) in enumerate(p.constraints):
        A[i] = row
        b[i] = rhs
    return solve_arrays(A, b, c, seed)
