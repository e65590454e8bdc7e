"""Planar convex polygon kernel: canonical form, Minkowski algebra, polarity,
halfplane intersection, support and gauge evaluation."""

import os
from collections import namedtuple

import numpy as np

from .errors import (
    Degenerate,
    EmptyInput,
    OriginNotInterior,
    OriginOutside,
    SingularMatrix,
    ZeroDirection,
)

# Collinearity/duplicate detection, relative to bounding-box scale.
EPS_GEOM = 1e-9
# Cross-operation equality comparisons (chained LP/hull stages).
EPS_CMP = float(os.environ.get("GAUGE_EPS_CMP", "1e-7"))

HalfPlane = namedtuple("HalfPlane", ["normal", "offset"])
Chord = namedtuple("Chord", ["endpoint"])

# halfplane_intersection statuses
REGION_POLYGON = "polygon"
REGION_EMPTY = "empty"
REGION_UNBOUNDED = "unbounded"
Region = namedtuple("Region", ["status", "polygon"])


class Polygon:
    """Convex polygon as a canonical vertex cycle.

    Vertices are CCW with the lexicographically smallest vertex first; no
    duplicate or collinear-redundant vertices.  A single vertex is a point,
    two vertices a segment.  Instances are immutable; build via canonicalize().
    """

    __slots__ = ("v", "_facets")

    def __init__(self, vertices):
        v = np.ascontiguousarray(vertices, dtype=float)
        v.setflags(write=False)
        self.v = v
        self._facets = None

    def __len__(self):
        return len(self.v)

    def __repr__(self):
        return "Polygon(%s)" % np.array2string(self.v, separator=", ")

    @property
    def scale(self):
        """Scale used for relative tolerances (floored at 1)."""
        return max(1.0, float(np.abs(self.v).max()))

    @property
    def is_fulldim(self):
        return len(self.v) >= 3

    def facets(self):
        """Outer facet normals and offsets (A, b) with unit rows: A x <= b on P."""
        if self._facets is None:
            if not self.is_fulldim:
                raise Degenerate("facets need a full-dimensional polygon")
            edges = np.roll(self.v, -1, axis=0) - self.v
            normals = np.stack([edges[:, 1], -edges[:, 0]], axis=1)
            lengths = np.linalg.norm(normals, axis=1)
            normals = normals / lengths[:, None]
            offsets = np.einsum("ij,ij->i", normals, self.v)
            self._facets = (normals, offsets)
        return self._facets


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_ccw(pts, eps2):
    """Andrew monotone chain; drops collinear points; returns CCW from lex-min."""
    lower = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= eps2:
            lower.pop()
        lower.append(p)
    upper = []
    for p in pts[::-1]:
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= eps2:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if not hull:
        hull = [pts[0]]
    return hull


def canonicalize(points):
    """Convex hull of the points in canonical CCW order; idempotent."""
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(pts) == 0:
        raise EmptyInput("no points")
    if not np.all(np.isfinite(pts)):
        raise EmptyInput("non-finite coordinates")
    scale = max(1.0, float(np.abs(pts).max()))
    tol = EPS_GEOM * scale
    # sort on tolerance-snapped keys so coordinates equal up to rounding
    # noise cannot scramble the lexicographic order the hull scan relies on
    order = np.lexsort((np.round(pts[:, 1] / tol), np.round(pts[:, 0] / tol)))
    pts = pts[order]
    # merge near-duplicates (adjacent after the lexicographic sort)
    kept = [pts[0]]
    for p in pts[1:]:
        if abs(p[0] - kept[-1][0]) > tol or abs(p[1] - kept[-1][1]) > tol:
            kept.append(p)
    if len(kept) == 1:
        return Polygon([kept[0]])
    hull = _hull_ccw(kept, EPS_GEOM * scale * scale)
    return Polygon(hull)


def translate(P, t):
    """P + t."""
    t = np.asarray(t, dtype=float)
    return canonicalize(P.v + t)


def scale(P, rho):
    """rho * P (rho may be negative or zero)."""
    return canonicalize(P.v * float(rho))


def negate(P):
    """-P."""
    return scale(P, -1.0)


def linear_map(P, M):
    """Image of P under a non-singular 2x2 matrix M."""
    M = np.asarray(M, dtype=float)
    if abs(M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]) <= 1e-12:
        raise SingularMatrix("linear_map needs a non-singular matrix")
    return canonicalize(P.v @ M.T)


def minkowski_sum(P, Q):
    """Minkowski sum P + Q via the rotating merge of edge vectors."""
    if len(P) == 1:
        return translate(Q, P.v[0])
    if len(Q) == 1:
        return translate(P, Q.v[0])
    if len(P) < 3 or len(Q) < 3:
        # degenerate operands: brute-force pairwise sums (small inputs)
        sums = P.v[:, None, :] + Q.v[None, :, :]
        return canonicalize(sums.reshape(-1, 2))
    # start both cycles at the bottom-most (then leftmost) vertex so edge
    # direction angles increase within [0, 2*pi) and a single merge pass works
    vp = np.roll(P.v, -int(np.lexsort((P.v[:, 0], P.v[:, 1]))[0]), axis=0)
    vq = np.roll(Q.v, -int(np.lexsort((Q.v[:, 0], Q.v[:, 1]))[0]), axis=0)
    ep = np.roll(vp, -1, axis=0) - vp
    eq = np.roll(vq, -1, axis=0) - vq
    out = [vp[0] + vq[0]]
    i = j = 0
    while i < len(ep) or j < len(eq):
        if i >= len(ep):
            e = eq[j]; j += 1
        elif j >= len(eq):
            e = ep[i]; i += 1
        else:
            c = ep[i][0] * eq[j][1] - ep[i][1] * eq[j][0]
            if c > 0:
                e = ep[i]; i += 1
            elif c < 0:
                e = eq[j]; j += 1
            else:
                e = ep[i] + eq[j]; i += 1; j += 1
        out.append(out[-1] + e)
    return canonicalize(out[:-1])


def polar(P):
    """Polar body: vertices of the polar correspond to facets of P."""
    if not P.is_fulldim:
        raise Degenerate("polar needs a full-dimensional polygon")
    A, b = P.facets()
    if np.any(b <= EPS_GEOM * P.scale):
        raise OriginNotInterior("polar needs 0 strictly inside")
    return canonicalize(A / b[:, None])


def support(P, s):
    """Support value h_P(s) and the face (argmax vertex or edge endpoints)."""
    s = np.asarray(s, dtype=float)
    if s[0] == 0.0 and s[1] == 0.0:
        raise ZeroDirection("support direction must be nonzero")
    dots = P.v @ s
    value = float(dots.max())
    tol = EPS_GEOM * P.scale * max(1.0, float(np.abs(s).max()))
    face = [P.v[k] for k in np.flatnonzero(dots >= value - tol)]
    return value, face


def gauge_norm(P, x):
    """min lambda >= 0 with x in lambda*P; +inf when x escapes a boundary-0 gauge."""
    x = np.asarray(x, dtype=float)
    A, b = P.facets()
    tol = EPS_GEOM * P.scale
    if np.any(b < -tol):
        raise OriginOutside("gauge_norm needs 0 inside the polygon")
    num = A @ x
    val = 0.0
    for ni, bi in zip(num, b):
        if bi > tol:
            val = max(val, ni / bi)
        elif ni > tol * max(1.0, float(np.abs(x).max())):
            return float("inf")
    return val


def chord_through_origin(P, s):
    """Boundary point z of the 0-symmetric polygon P in direction +s."""
    s = np.asarray(s, dtype=float)
    if s[0] == 0.0 and s[1] == 0.0:
        raise ZeroDirection("chord direction must be nonzero")
    g = gauge_norm(P, s)
    if g <= 0.0 or not np.isfinite(g):
        raise Degenerate("no finite chord in this direction")
    return Chord(endpoint=s / g)


def contains(P, Q, tol=None):
    """True iff every vertex of Q lies in P within tol (relative)."""
    if tol is None:
        tol = EPS_CMP
    t = tol * max(P.scale, Q.scale)
    if P.is_fulldim:
        A, b = P.facets()
        return bool(np.all(Q.v @ A.T <= b[None, :] + t))
    if len(P) == 1:
        return bool(np.all(np.abs(Q.v - P.v[0]) <= t))
    # segment: distance of each vertex to the segment
    a, b2 = P.v[0], P.v[1]
    d = b2 - a
    dd = float(d @ d)
    for q in Q.v:
        u = float((q - a) @ d) / dd
        u = min(1.0, max(0.0, u))
        if np.abs(q - (a + u * d)).max() > t:
            return False
    return True


def same_set(P, Q, tol=None):
    """Setwise equality via mutual containment."""
    return contains(P, Q, tol) and contains(Q, P, tol)


def halfplane_intersection(hs):
    """Intersection of halfplanes a.x <= b.

    Returns Region(status, polygon) with status one of REGION_POLYGON,
    REGION_EMPTY, REGION_UNBOUNDED; unbounded regions are reported, not clipped.
    """
    if len(hs) == 0:
        raise EmptyInput("no halfplanes")
    A = np.array([np.asarray(h[0], dtype=float) for h in hs])
    b = np.array([float(h[1]) for h in hs])
    norms = np.linalg.norm(A, axis=1)
    if np.any(norms <= 0.0):
        raise ZeroDirection("halfplane normal must be nonzero")
    A = A / norms[:, None]
    b = b / norms
    scale_b = max(1.0, float(np.abs(b).max()))

    # bounded iff the normals positively span the plane (all angular gaps < pi)
    ang = np.sort(np.arctan2(A[:, 1], A[:, 0]))
    gaps = np.diff(ang, append=ang[0] + 2.0 * np.pi)
    bounded = bool(gaps.max() < np.pi - 1e-12)

    if not bounded:
        from . import lp

        sol = lp.solve(lp.LpProblem(objective=[0.0, 0.0], constraints=list(zip(A, b))), seed=0)
        if sol.status == lp.INFEASIBLE:
            return Region(REGION_EMPTY, None)
        return Region(REGION_UNBOUNDED, None)

    # bounded: locate a deepest interior point by LP, then dualize — the
    # region is x0 + polar(conv{a_i / (b_i - a_i.x0)})
    from . import lp

    rows = np.column_stack([A, np.ones(len(b))])
    sol = lp.solve_arrays(rows, b, np.array([0.0, 0.0, -1.0]), 0)
    if sol.status != lp.OPTIMAL:
        return Region(REGION_EMPTY, None)
    x0 = np.array(sol.point[:2])
    depth = float(sol.point[2])
    if depth > 1e-9 * scale_b:
        bb = b - A @ x0
        hull = canonicalize(A / bb[:, None])
        if hull.is_fulldim:
            return Region(REGION_POLYGON, canonicalize(polar(hull).v + x0))

    # thin or borderline region: pairwise line intersections + feasibility
    tol = EPS_CMP * scale_b
    pts = []
    n = len(A)
    for i in range(n):
        for j in range(i + 1, n):
            det = A[i, 0] * A[j, 1] - A[i, 1] * A[j, 0]
            if abs(det) <= 1e-12:
                continue
            x = (b[i] * A[j, 1] - b[j] * A[i, 1]) / det
            y = (A[i, 0] * b[j] - A[j, 0] * b[i]) / det
            p = np.array([x, y])
            if np.all(A @ p <= b + tol):
                pts.append(p)
    if not pts:
        return Region(REGION_EMPTY, None)
    return Region(REGION_POLYGON, canonicalize(pts))


def polygon_to_json(P):
    """JSON-serializable dict {"vertices": [[x, y], ...]}."""
    return {"vertices": [[float(x), float(y)] for x, y in P.v]}


def polygon_from_json(obj):
    """Parse {"vertices": ...}; returns (Polygon, was_canonical)."""
    if not isinstance(obj, dict) or "vertices" not in obj:
        raise EmptyInput("polygon JSON needs a 'vertices' key")
    raw = np.asarray(obj["vertices"], dtype=float).reshape(-1, 2)
    P = canonicalize(raw)
    was_canonical = raw.shape == P.v.shape and bool(np.array_equal(raw, P.v))
    return P, was_canonical
