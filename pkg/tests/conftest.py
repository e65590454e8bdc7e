"""Shared fixtures and the brute-force LP oracle used by several test files."""

import itertools

import numpy as np
import pytest

from gaugediam import canonicalize, families
from gaugediam.radii import make_context

ORACLE_BOX = 1e6


@pytest.fixture(scope="session")
def T():
    return families.equilateral_t()


@pytest.fixture(scope="session")
def ctx_T(T):
    return make_context(T)


@pytest.fixture(scope="session")
def square():
    return canonicalize([[1.0, 1.0], [-1.0, 1.0], [-1.0, -1.0], [1.0, -1.0]])


@pytest.fixture(scope="session")
def ctx_square(square):
    return make_context(square)


def solve_lp_bruteforce(A, b, c, box=ORACLE_BOX):
    """Vertex-enumeration oracle for min c.x s.t. A x <= b in up to 3 vars.

    Boxes the feasible set at |x_i| <= box; an optimum pinned to the box is
    reported unbounded.  Returns (status, x) with status in
    {"optimal", "infeasible", "unbounded"}.
    """
    A = np.asarray(A, dtype=float)
    c = np.asarray(c, dtype=float)
    d = len(c)
    A = A.reshape(-1, d)
    b = np.asarray(b, dtype=float)
    Abox = np.vstack([A, np.eye(d), -np.eye(d)])
    bbox = np.concatenate([b, np.full(2 * d, box)])
    m = len(bbox)
    combs = np.array(list(itertools.combinations(range(m), d)))
    M = Abox[combs]                       # (ncomb, d, d)
    rhs = bbox[combs]                     # (ncomb, d)
    dets = np.abs(np.linalg.det(M))
    good = dets > 1e-12 * np.maximum(1.0, np.abs(M).max(axis=(1, 2)) ** d)
    if not np.any(good):
        return "infeasible", None
    X = np.linalg.solve(M[good], rhs[good][..., None])[..., 0]  # (k, d)
    slack = X @ Abox.T - bbox             # (k, m)
    tol = 1e-7 * np.maximum(1.0, np.abs(X @ Abox.T))
    feas = np.all(slack <= tol, axis=1)
    if not np.any(feas):
        return "infeasible", None
    Xf = X[feas]
    vals = Xf @ c
    order = np.argsort(vals, kind="stable")
    best = vals[order[0]]
    # among (near-)minimizers prefer a vertex off the box
    for i in order:
        if vals[i] > best + 1e-9 * max(1.0, abs(best)):
            break
        if np.abs(Xf[i]).max() < box * (1.0 - 1e-9):
            return "optimal", Xf[i]
    return "unbounded", None
