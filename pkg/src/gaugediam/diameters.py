"""The four diameters, widths, directional s-lengths/s-breadths, and
diametral pair extraction."""

from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, ZeroDirection
from .geometry import (
    EPS_CMP,
    chord_through_origin,
    gauge_norm,
    minkowski_sum,
    negate,
    scale,
    support,
)
from .radii import circumradius, inradius
from .symmetry import Mode

# s-length flavor measured against the asymmetric gauge itself
MIN_ASYM = "min_asym"


@dataclass(frozen=True)
class DiameterResult:
    value: float
    pair: tuple
    mode: object


@dataclass(frozen=True)
class WidthResult:
    value: float
    direction: object


def half_difference(K):
    """(K - K)/2, the arithmetic symmetrization of a body."""
    return scale(minkowski_sum(K, negate(K)), 0.5)


def diameter(K, ctx, mode, kam=None):
    """D_mode(K, C) computed two ways (LP and vertex pairs) and cross-asserted.

    kam optionally carries a precomputed (K-K)/2 for batch callers.
    """
    if len(K) == 1:
        p = np.array(K.v[0])
        return DiameterResult(0.0, (p, p), mode)
    C_m = ctx.sym[mode]
    if kam is None:
        kam = half_difference(K)
    lp_val = 2.0 * circumradius(kam, C_m).rho
    A, b = C_m.facets()
    V = K.v
    diffs = V[:, None, :] - V[None, :, :]
    vals = np.max((diffs @ A.T) / b, axis=2)
    i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)
    pair_val = float(vals[i, j])
    if abs(lp_val - pair_val) > EPS_CMP * max(1.0, pair_val):
        raise ConsistencyError(
            "diameter routes disagree: lp=%r pairs=%r" % (lp_val, pair_val)
        )
    return DiameterResult(pair_val, (np.array(V[i]), np.array(V[j])), mode)


def width(K, ctx, mode):
    """w_mode(K, C) = 2 r((K-K)/2, C_mode); direction from the inball certificate."""
    if not K.is_fulldim:
        return WidthResult(0.0, None)
    res = inradius(half_difference(K), ctx.sym[mode])
    direction = np.array(res.certificate[0][1]) if res.certificate else None
    return WidthResult(2.0 * res.rho, direction)


def s_length(K, ctx, s, mode):
    """Directional length of K at direction s, per mode (MIN_ASYM uses C itself)."""
    s = np.asarray(s, dtype=float)
    if s[0] == 0.0 and s[1] == 0.0:
        raise ZeroDirection("s-length direction must be nonzero")
    KK = minkowski_sum(K, negate(K))
    z = chord_through_origin(KK, s).endpoint
    body = ctx.C if mode == MIN_ASYM else ctx.sym[mode]
    return gauge_norm(body, z)


def s_breadth(K, ctx, s, mode):
    """Directional breadth of K at direction s, AM or MAX flavor."""
    s = np.asarray(s, dtype=float)
    if s[0] == 0.0 and s[1] == 0.0:
        raise ZeroDirection("s-breadth direction must be nonzero")
    hk1, _ = support(K, s)
    hk2, _ = support(K, -s)
    hc1, _ = support(ctx.C, s)
    hc2, _ = support(ctx.C, -s)
    if mode == Mode.AM:
        return 2.0 * (hk1 + hk2) / (hc1 + hc2)
    if mode == Mode.MAX:
        return (hk1 + hk2) / max(hc1, hc2)
    raise ValueError("s_breadth is defined for AM and MAX only")
