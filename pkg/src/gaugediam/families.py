"""Closed-form extremal bodies and gauges, plus seeded random hull sampling."""

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSample, ParamOutOfRange
from .geometry import (
    REGION_POLYGON,
    canonicalize,
    halfplane_intersection,
    minkowski_sum,
    negate,
    scale,
    translate,
)
from .radii import circumradius

_R3 = math.sqrt(3.0)
P1 = np.array([0.0, 1.0])
P2 = np.array([-_R3 / 2.0, -0.5])
P3 = np.array([_R3 / 2.0, -0.5])

FAMILY_NAMES = (
    "EQUILATERAL_T",
    "T_ALPHA",
    "S_LAMBDA",
    "Z_LAMBDA",
    "REULEAUX",
    "MIN_EQUALITY_PAIR",
    "INTERPOLATE",
    "RANDOM_HULL",
)


@dataclass(frozen=True)
class FamilySpec:
    name: str
    param: float = 0.0
    resolution: int = 0


def equilateral_t():
    """The Minkowski-centered equilateral triangle T."""
    return canonicalize([P1, P2, P3])


def t_alpha(alpha):
    """Rotated inner triangle conv{a p1+(1-a)p2, a p2+(1-a)p3, a p3+(1-a)p1}."""
    if not (1.0 / 3.0 - 1e-12 <= alpha <= 2.0 / 3.0 + 1e-12):
        raise ParamOutOfRange("alpha must lie in [1/3, 2/3]")
    a = float(alpha)
    return canonicalize([
        a * P1 + (1 - a) * P2,
        a * P2 + (1 - a) * P3,
        a * P3 + (1 - a) * P1,
    ])


def s_lambda(lam):
    """Triangles S_lambda interpolating -T/2 (lam=1/2) to a width segment (lam=1)."""
    if not (0.5 - 1e-12 <= lam <= 1.0 + 1e-12):
        raise ParamOutOfRange("lambda must lie in [1/2, 1]")
    lam = float(lam)
    q1 = (P2 + P3) / 2.0
    q2 = lam * P1 + (1 - lam) * P3
    q3 = lam * P1 + (1 - lam) * P2
    return canonicalize([q1, q2, q3])


def z_lambda(lam):
    """Minkowski-centered trapezoids with asymmetry 2 - lambda."""
    if not (0.0 < lam < 1.0):
        raise ParamOutOfRange("lambda must lie in (0, 1)")
    lam = float(lam)
    return canonicalize([
        (_R3 / 2.0, -0.5),
        (-_R3 / 2.0, -0.5),
        (lam * _R3 / 2.0, 1.0 - lam / 2.0),
        (-lam * _R3 / 2.0, 1.0 - lam / 2.0),
    ])


def reuleaux(resolution=256):
    """Inscribed polygonal approximation of the Reuleaux triangle ∩ p_i + √3 B."""
    if resolution < 3:
        raise ParamOutOfRange("resolution must be at least 3 points per arc")
    pts = []
    corners = [P1, P2, P3]
    for i in range(3):
        c = corners[i]
        # the arc opposite c runs between the other two corners, radius sqrt(3)
        others = [corners[(i + 1) % 3], corners[(i + 2) % 3]]
        a0 = math.atan2(others[0][1] - c[1], others[0][0] - c[0])
        a1 = math.atan2(others[1][1] - c[1], others[1][0] - c[0])
        if a1 < a0:
            a0, a1 = a1, a0
        if a1 - a0 > math.pi:  # take the short (60 degree) sweep
            a0, a1 = a1, a0 + 2.0 * math.pi
        for th in np.linspace(a0, a1, resolution):
            pts.append(c + _R3 * np.array([math.cos(th), math.sin(th)]))
    return canonicalize(pts)


def min_equality_pair(s):
    """Bohnenblust equality pair (K, C) = (-S, S ∩ s(-S)) for the triangle S."""
    if not (1.0 - 1e-12 <= s <= 2.0 + 1e-12):
        raise ParamOutOfRange("s must lie in [1, 2]")
    S = equilateral_t()
    A, b = S.facets()
    hs = [(A[i], b[i]) for i in range(len(b))]
    hs += [(-A[i], float(s) * b[i]) for i in range(len(b))]
    region = halfplane_intersection(hs)
    if region.status != REGION_POLYGON:
        raise ParamOutOfRange("equality-pair gauge degenerated")
    return negate(S), region.polygon


def interpolate(K1, K2, t):
    """(1-t) K1 + t K2."""
    if not (0.0 <= t <= 1.0):
        raise ParamOutOfRange("t must lie in [0, 1]")
    return minkowski_sum(scale(K1, 1.0 - t), scale(K2, t))


def random_hull(seed, n, normalization=None):
    """Hull of n seeded uniform points; optionally normalized to R(K, C) = 1.

    normalization is None or a GaugeContext; retries degenerate draws up to 16
    times on per-attempt substreams.
    """
    if n < 3:
        raise ParamOutOfRange("need at least 3 points")
    if isinstance(seed, (int, np.integer)):
        entropy = (int(seed) & (2**63 - 1),)
    else:
        entropy = tuple(int(v) & (2**63 - 1) for v in seed)
    P = None
    for attempt in range(16):
        rng = np.random.default_rng(np.random.SeedSequence(entropy + (attempt,)))
        pts = rng.uniform(-1.0, 1.0, size=(int(n), 2))
        cand = canonicalize(pts)
        if cand.is_fulldim:
            P = cand
            break
    if P is None:
        raise DegenerateSample("no full-dimensional hull in 16 attempts")
    if normalization is not None:
        res = circumradius(P, normalization.C)
        P = scale(translate(P, -res.t), 1.0 / res.rho)
    return P


def build(spec):
    """Build a FamilySpec; MIN_EQUALITY_PAIR returns a (K, C) pair."""
    name = spec.name.upper()
    if name == "EQUILATERAL_T":
        return equilateral_t()
    if name == "T_ALPHA":
        return t_alpha(spec.param)
    if name == "S_LAMBDA":
        return s_lambda(spec.param)
    if name == "Z_LAMBDA":
        return z_lambda(spec.param)
    if name == "REULEAUX":
        return reuleaux(spec.resolution or 256)
    if name == "MIN_EQUALITY_PAIR":
        return min_equality_pair(spec.param)
    if name == "RANDOM_HULL":
        return random_hull(int(spec.param), spec.resolution or 8)
    if name == "INTERPOLATE":
        raise ParamOutOfRange("interpolate needs two polygons; call interpolate()")
    raise ParamOutOfRange("unknown family %r" % spec.name)
