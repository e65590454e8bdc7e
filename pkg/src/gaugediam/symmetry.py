"""The four symmetrizations of a gauge and their containment factors."""

from collections import namedtuple
from enum import IntEnum

import numpy as np

from .errors import ConsistencyError, OriginNotInterior
from .geometry import (
    EPS_CMP,
    EPS_GEOM,
    REGION_POLYGON,
    canonicalize,
    contains,
    halfplane_intersection,
    minkowski_sum,
    negate,
    polar,
    scale,
)

Factors = namedtuple("Factors", ["rho_m", "delta_m"])


class Mode(IntEnum):
    """Total order mirrors set containment of the symmetrizations."""

    MIN = 0
    HM = 1
    AM = 2
    MAX = 3


def _check_interior(C):
    if not C.is_fulldim:
        raise OriginNotInterior("gauge must be full-dimensional")
    _, b = C.facets()
    if np.any(b <= EPS_GEOM * C.scale):
        raise OriginNotInterior("gauge must contain 0 in its interior")


def symmetrize(C, mode):
    """C_MIN = C ∩ -C, C_HM = ((C°-C°)/2)°, C_AM = (C-C)/2, C_MAX = conv(C ∪ -C)."""
    _check_interior(C)
    if mode == Mode.MIN:
        A, b = C.facets()
        hs = [(A[i], b[i]) for i in range(len(b))]
        hs += [(-A[i], b[i]) for i in range(len(b))]
        region = halfplane_intersection(hs)
        if region.status != REGION_POLYGON:
            raise OriginNotInterior("C ∩ -C degenerated; 0 not interior")
        return region.polygon
    if mode == Mode.HM:
        return polar(scale(minkowski_sum(polar(C), polar(negate(C))), 0.5))
    if mode == Mode.AM:
        return scale(minkowski_sum(C, negate(C)), 0.5)
    if mode == Mode.MAX:
        return canonicalize(np.vstack([C.v, -C.v]))
    raise ValueError("unknown mode %r" % (mode,))


def factors(C, mode):
    """Dilation factors rho_m, delta_m with rho_m*C_m ⊂opt C_AM ⊂opt delta_m*C_m."""
    from . import radii  # deferred: radii.make_context delegates here

    C_AM = symmetrize(C, Mode.AM)
    C_m = symmetrize(C, mode)
    return Factors(
        rho_m=radii.inradius(C_AM, C_m).rho,
        delta_m=radii.circumradius(C_AM, C_m).rho,
    )


def verify_firey_chain(ctx, strict=True):
    """Check C_MIN ⊂opt C_HM ⊂ C_AM ⊂opt C_MAX; returns margins.

    The optimality part (circumradius exactly 1) holds for Minkowski-centered
    gauges; with strict=False only the containments are required.
    """
    from . import radii

    r_min_hm = radii.circumradius(ctx.sym[Mode.MIN], ctx.sym[Mode.HM]).rho
    hm_in_am = contains(ctx.sym[Mode.AM], ctx.sym[Mode.HM], EPS_CMP)
    r_am_max = radii.circumradius(ctx.sym[Mode.AM], ctx.sym[Mode.MAX]).rho
    if strict:
        ok = (abs(r_min_hm - 1.0) <= EPS_CMP and hm_in_am
              and abs(r_am_max - 1.0) <= EPS_CMP)
    else:
        ok = (r_min_hm <= 1.0 + EPS_CMP and hm_in_am
              and r_am_max <= 1.0 + EPS_CMP)
    return {
        "opt_min_in_hm": r_min_hm,
        "hm_in_am": hm_in_am,
        "opt_am_in_max": r_am_max,
        "ok": ok,
    }
