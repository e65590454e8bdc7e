"""Supercompletion, finite-generator completions, completeness and
constant-width predicates, outer symmetric support, diametric-triangle
completion."""

from dataclasses import dataclass

import numpy as np

from .diameters import diameter, half_difference, width
from .errors import (
    ConsistencyError,
    EmptyIntersection,
    OriginNotInterior,
    ParamOutOfRange,
)
from .geometry import (
    EPS_CMP,
    EPS_GEOM,
    REGION_POLYGON,
    canonicalize,
    halfplane_intersection,
    negate,
    polar,
    same_set,
    scale,
)


@dataclass(frozen=True)
class CompletenessReport:
    complete: bool
    witness: object
    breadth_at_witness: float


def supercompletion(K, ctx, mode):
    """K^sup = intersection of x + D*C_mode over x in K."""
    if len(K) == 1:
        return K
    D = diameter(K, ctx, mode).value
    C_m = ctx.sym[mode]
    A, b = C_m.facets()
    # support of the intersection in facet direction a: D h_Cm(a) - h_K(-a)
    offsets = D * b - np.max(K.v @ (-A.T), axis=0)
    region = halfplane_intersection(list(zip(A, offsets)))
    if region.status != REGION_POLYGON:
        raise ConsistencyError("supercompletion region is %s" % region.status)
    return region.polygon


def k_x(X, D, C_m):
    """K_X = intersection of x + D*C_m over the finite generator set X."""
    if len(X) == 0:
        raise EmptyIntersection("generator set is empty")
    if D <= 0:
        raise ParamOutOfRange("diameter must be positive")
    A, b = C_m.facets()
    hs = []
    for x in X:
        x = np.asarray(x, dtype=float)
        for i in range(len(b)):
            hs.append((A[i], float(A[i] @ x) + D * b[i]))
    region = halfplane_intersection(hs)
    if region.status != REGION_POLYGON:
        raise EmptyIntersection("generator translates have empty intersection")
    return region.polygon


def _breadths(K, C_m, dirs):
    hk = np.max(K.v @ dirs.T, axis=0) + np.max(K.v @ (-dirs.T), axis=0)
    hc = np.max(C_m.v @ dirs.T, axis=0)
    return hk / hc


def is_complete(K, ctx, mode):
    """Completeness via K^sup = K, cross-checked by breadths at the facet
    normals of the symmetrized gauge (a necessary condition for equality)."""
    if not K.is_fulldim:
        return CompletenessReport(False, None, 0.0)
    D = diameter(K, ctx, mode).value
    C_m = ctx.sym[mode]
    sup = supercompletion(K, ctx, mode)
    test_sup = same_set(K, sup, EPS_CMP)
    # K^sup is cut out by halfplanes normal to the facets of C_m, so a
    # complete body must have breadth D in every such direction; the converse
    # can fail when K has facet normals outside those of C_m
    A, _ = C_m.facets()
    br = _breadths(K, C_m, A)
    tol = EPS_CMP * max(1.0, D)
    test_breadth = bool(np.all(np.abs(br - D) <= tol))
    if test_sup and not test_breadth:
        raise ConsistencyError(
            "complete body has a slab of breadth below its diameter"
        )
    if not test_breadth:
        k = int(np.argmin(br))
        return CompletenessReport(False, np.array(A[k]), float(br[k]))
    if not test_sup:
        # all spherical-hull slabs are full, so K must be trimmed by one of
        # its own facets; witness the direction where K^sup sticks out most
        U, _ = K.facets()
        gap = np.max(sup.v @ U.T, axis=0) - np.max(K.v @ U.T, axis=0)
        k = int(np.argmax(gap))
        u = U[k]
        return CompletenessReport(False, np.array(u), float(_breadths(K, C_m, u[None, :])[0]))
    k = int(np.argmin(br))
    return CompletenessReport(True, np.array(A[k]), float(br[k]))


def constant_width(K, ctx, mode):
    """True iff (K-K)/2 is the D/2 dilate of C_mode; cross-checked via width."""
    if not K.is_fulldim:
        return False
    D = diameter(K, ctx, mode).value
    cw = same_set(half_difference(K), scale(ctx.sym[mode], D / 2.0), EPS_CMP)
    w = width(K, ctx, mode).value
    agree = abs(w - D) <= EPS_CMP * max(1.0, D)
    if cw != agree:
        raise ConsistencyError("constant-width tests disagree")
    return cw


def complete_via_diametric_simplex(K, ctx, mode, cap=512, tol=None):
    """Find a diametric triangle X of K and return its unique completion K_X.

    Returns None when no vertex triple is pairwise diametral.
    """
    if len(K.v) > cap:
        raise ParamOutOfRange("vertex count exceeds the diametric-search cap")
    D = diameter(K, ctx, mode).value
    if D <= 0:
        return None
    if tol is None:
        tol = EPS_CMP
    C_m = ctx.sym[mode]
    A, b = C_m.facets()
    V = K.v
    diffs = V[:, None, :] - V[None, :, :]
    G = np.max((diffs @ A.T) / b, axis=2)
    M = np.abs(G - D) <= tol * max(1.0, D)
    np.fill_diagonal(M, False)
    # a diametric triangle is a triangle in the diametral-pair graph
    two_paths = (M.astype(np.int64) @ M.astype(np.int64)) > 0
    cand = np.argwhere(M & two_paths)
    for i, j in cand:
        if i >= j:
            continue
        ks = np.flatnonzero(M[i] & M[j])
        ks = ks[ks > j]
        for k in ks:
            X = [V[i], V[j], V[int(k)]]
            P = k_x(X, D, C_m)
            # a pairwise-diametral triple need not induce a completion when
            # the symmetrized gauge has flat spots; keep only verified ones
            if abs(diameter(P, ctx, mode).value - D) > EPS_CMP * max(1.0, D):
                continue
            if is_complete(P, ctx, mode).complete:
                return P
    return None


def _segment_crossings(p1, p2, q1, q2, tol):
    """Intersection points of two segments (proper crossing or overlap endpoints)."""
    r = p2 - p1
    s = q2 - q1
    den = r[0] * s[1] - r[1] * s[0]
    w = q1 - p1
    if abs(den) > tol:
        t = (w[0] * s[1] - w[1] * s[0]) / den
        u = (w[0] * r[1] - w[1] * r[0]) / den
        if -1e-9 <= t <= 1 + 1e-9 and -1e-9 <= u <= 1 + 1e-9:
            return [p1 + t * r]
        return []
    # parallel: collinear overlap contributes its endpoints
    if abs(w[0] * r[1] - w[1] * r[0]) > tol:
        return []
    rr = float(r @ r)
    t0 = float((q1 - p1) @ r) / rr
    t1 = float((q2 - p1) @ r) / rr
    lo, hi = max(0.0, min(t0, t1)), min(1.0, max(t0, t1))
    if hi < lo - 1e-9:
        return []
    return [p1 + lo * r, p1 + hi * r]


def outer_symmetric_support(C):
    """A_C^out = bd(C°) ∩ bd(-C°) and C^out = ∩ {a.x <= 1 : a in A_C^out}."""
    P = polar(C)
    Q = negate(P)
    tol = EPS_GEOM * max(P.scale, 1.0)
    pts = []
    np_, nq = len(P.v), len(Q.v)
    for i in range(np_):
        p1, p2 = P.v[i], P.v[(i + 1) % np_]
        for j in range(nq):
            q1, q2 = Q.v[j], Q.v[(j + 1) % nq]
            pts.extend(_segment_crossings(p1, p2, q1, q2, tol))
    # dedup
    a_out = []
    for p in pts:
        if not any(np.abs(p - q).max() <= 1e-7 * max(1.0, P.scale) for q in a_out):
            a_out.append(p)
    if len(a_out) < 3:
        raise OriginNotInterior("outer symmetric support degenerated")
    region = halfplane_intersection([(a, 1.0) for a in a_out])
    if region.status != REGION_POLYGON:
        raise ConsistencyError("C^out region is %s" % region.status)
    return a_out, region.polygon
