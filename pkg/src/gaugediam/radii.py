"""Circumradius, inradius, Minkowski asymmetry and centering, with
optimal-containment certificates."""

from dataclasses import dataclass, field

import numpy as np

from . import lp
from .errors import ConsistencyError, Degenerate, GaugeDegenerate
from .geometry import (
    EPS_CMP,
    EPS_GEOM,
    Polygon,
    canonicalize,
    contains,
    negate,
    support,
    translate,
)


@dataclass(frozen=True)
class ContainmentResult:
    rho: float
    t: np.ndarray
    certificate: list
    degenerate: bool = False


@dataclass(frozen=True)
class GaugeContext:
    """A Minkowski-centered gauge with cached asymmetry, symmetrizations and factors.

    Immutable after construction; `center` is the translation removed from the
    raw input, `sym` maps Mode -> Polygon and `factors` maps Mode -> Factors.
    """

    C: Polygon
    s: float
    center: np.ndarray
    sym: dict = field(repr=False)
    factors: dict = field(repr=False)
    # cached R(C_m, C) per mode, used by the diagram inequality lists
    sym_circumradius: dict = field(repr=False, default=None)

    def body(self, mode):
        return self.sym[mode]

    def rho(self, mode):
        return self.factors[mode].rho_m

    def delta(self, mode):
        return self.factors[mode].delta_m

    @property
    def is_triangle(self):
        return len(self.C) == 3


def _check_gauge(C):
    if not C.is_fulldim:
        raise GaugeDegenerate("gauge must be full-dimensional")
    A, b = C.facets()
    if np.any(b <= EPS_GEOM * C.scale):
        raise GaugeDegenerate("gauge must contain 0 in its interior")
    return A, b


def _origin_in_hull(normals, tol):
    """Is 0 in the convex hull of <= 3 direction vectors, within tol?"""
    ns = [n / np.linalg.norm(n) for n in normals]
    if len(ns) == 1:
        return np.abs(ns[0]).max() <= tol
    if len(ns) == 2:
        return np.linalg.norm(ns[0] + ns[1]) <= 10 * tol or any(
            np.abs(n).max() <= tol for n in ns
        )
    n1, n2, n3 = ns
    den = (n2[0] - n1[0]) * (n3[1] - n1[1]) - (n2[1] - n1[1]) * (n3[0] - n1[0])
    if abs(den) < 1e-12:
        return _origin_in_hull([n1, n2], tol) or _origin_in_hull([n1, n3], tol) \
            or _origin_in_hull([n2, n3], tol)
    b1 = (n2[0] * n3[1] - n3[0] * n2[1]) / den
    b2 = (n3[0] * n1[1] - n1[0] * n3[1]) / den
    b3 = (n1[0] * n2[1] - n2[0] * n1[1]) / den
    return min(b1, b2, b3) >= -tol


def _minimal_certificate(entries):
    """Reduce active (touch, normal) entries to k in {2,3} with 0 in conv(normals).

    Among admissible pairs/triples the one with the largest margin wins; ties
    fall to lowest indices.  Pairs are preferred over triples.
    """
    if len(entries) <= 1:
        return list(entries)
    N = np.array([e[1] for e in entries], dtype=float)
    N = N / np.linalg.norm(N, axis=1)[:, None]
    k = len(entries)
    iu, ju = np.triu_indices(k, 1)
    m = 1e-6 - np.linalg.norm(N[iu] + N[ju], axis=1)
    ok = m >= 0
    if np.any(ok):
        t = np.flatnonzero(ok)[int(np.argmax(m[ok]))]
        return [entries[int(iu[t])], entries[int(ju[t])]]
    # triples: for each i the ray -n_i falls in an angular gap between two
    # consecutive normals; those three normals then surround the origin, so
    # only the bracketing triples need scoring
    ang = np.arctan2(N[:, 1], N[:, 0])
    order = np.argsort(ang, kind="stable")
    sa = ang[order]
    best = None
    for i in range(k):
        target = ang[i] + np.pi
        if target > np.pi:
            target -= 2.0 * np.pi
        pos = int(np.searchsorted(sa, target))
        j = int(order[(pos - 1) % k])
        l = int(order[pos % k])
        if len({i, j, l}) < 3:
            continue
        n1, n2, n3 = N[i], N[j], N[l]
        den = (n2[0] - n1[0]) * (n3[1] - n1[1]) \
            - (n2[1] - n1[1]) * (n3[0] - n1[0])
        if abs(den) < 1e-12:
            continue
        b1 = (n2[0] * n3[1] - n3[0] * n2[1]) / den
        b2 = (n3[0] * n1[1] - n1[0] * n3[1]) / den
        b3 = (n1[0] * n2[1] - n2[0] * n1[1]) / den
        mt = min(b1, b2, b3)
        if mt >= -1e-9 and (best is None or mt > best[0]):
            a, b, c = sorted((i, j, l))
            best = (mt, [entries[a], entries[b], entries[c]])
    if best is not None:
        return best[1]
    return list(entries)


def circumradius(K, C, seed=0):
    """Smallest rho with K inside t + rho*C, plus certificate."""
    A, b = _check_gauge(C)
    if len(K) == 1:
        return ContainmentResult(0.0, np.array(K.v[0]), [], degenerate=True)
    nf, nv = len(A), len(K.v)
    # a_i . v_j - a_i . t <= rho b_i, variables (t_x, t_y, rho)
    rows = np.empty((nf * nv, 3))
    rows[:, :2] = -np.repeat(A, nv, axis=0)
    rows[:, 2] = -np.repeat(b, nv)
    rhs = -(A @ K.v.T).ravel()
    sol = lp.solve_arrays(rows, rhs, np.array([0.0, 0.0, 1.0]), seed)
    if sol.status != lp.OPTIMAL:
        raise ConsistencyError("circumradius LP returned %s" % sol.status)
    rho = max(0.0, float(sol.point[2]))
    t = np.array(sol.point[:2])
    entries = []
    seen = set()
    for idx in sol.active:
        i, j = divmod(idx, nv)
        if (i, j) in seen:
            continue
        seen.add((i, j))
        entries.append((np.array(K.v[j]), np.array(A[i])))
    return ContainmentResult(rho, t, _minimal_certificate(entries))


def inradius(K, C, seed=0):
    """Largest rho with t + rho*C inside K, plus certificate."""
    A, b = _check_gauge(C)
    if not K.is_fulldim:
        return ContainmentResult(0.0, np.array(K.v[0]), [], degenerate=True)
    U, cc = K.facets()
    h = np.max(C.v @ U.T, axis=0)  # h_C(u_k)
    rows = np.column_stack([U, h])
    sol = lp.solve_arrays(rows, cc, np.array([0.0, 0.0, -1.0]), seed)
    if sol.status != lp.OPTIMAL:
        raise ConsistencyError("inradius LP returned %s" % sol.status)
    rho = max(0.0, float(sol.point[2]))
    t = np.array(sol.point[:2])
    entries = []
    for k in sol.active:
        touch_vertex = C.v[int(np.argmax(C.v @ U[k]))]
        entries.append((t + rho * touch_vertex, np.array(U[k])))
    return ContainmentResult(rho, t, _minimal_certificate(entries))


def asymmetry(C):
    """Minkowski asymmetry s(C) = R(C, -C) and the Minkowski center.

    The center solves C - c in -s(C - c), i.e. C in -sC + (s+1)c; the optimal
    translation t of the circumradius LP therefore equals (s+1)c.
    """
    if not C.is_fulldim:
        raise Degenerate("asymmetry needs a full-dimensional body")
    # shift by the vertex centroid so 0 is interior and -C is a valid gauge
    g = C.v.mean(axis=0)
    C0 = translate(C, -g)
    res = circumradius(C0, negate(C0))
    s = res.rho
    if s < 1.0 + 1e-9:
        # near-symmetric: clamp and use the midpoint fixed point
        return 1.0, g + res.t / 2.0
    return s, g + res.t / (s + 1.0)


def verify_certificate(K, C, res, kind="circum"):
    """Independent re-check of an optimal-containment certificate."""
    tol = EPS_CMP * max(K.scale, C.scale) * max(1.0, res.rho)
    B = canonicalize(C.v * res.rho + res.t) if res.rho > 0 else Polygon([res.t])
    if kind == "circum":
        if not contains(B, K, EPS_CMP * max(1.0, res.rho)):
            return False
        if res.rho == 0.0:
            return len(K) == 1
    else:
        if not contains(K, B, EPS_CMP * max(1.0, res.rho)):
            return False
    if not (2 <= len(res.certificate) <= 3):
        return False
    for touch, normal in res.certificate:
        hb, _ = support(B, normal)
        hk, _ = support(K, normal)
        nscale = max(1.0, float(np.abs(normal).max()))
        if abs(float(normal @ touch) - hb) > tol * nscale:
            return False  # not on the boundary of t + rho*C
        if kind == "circum":
            # touch must be a point of K where the halfplane supports B
            if abs(float(normal @ touch) - hk) > tol * nscale:
                return False
        else:
            # touch must lie on the corresponding supporting facet of K
            if abs(float(normal @ touch) - hk) > tol * nscale:
                return False
    normals = [n for _, n in res.certificate]
    return _origin_in_hull(normals, 1e-6)


def make_context(C_raw, center=True):
    """Center a raw gauge and cache asymmetry, symmetrizations and factors.

    With center=False the gauge is used as given (0 must still be interior);
    the detected Minkowski center is reported but not removed.
    """
    from . import symmetry  # deferred: symmetry uses radii for its factors op

    s, c = asymmetry(C_raw)
    centered = bool(center)
    C = translate(C_raw, -c) if centered else C_raw
    center = c if centered else np.zeros(2)
    sym = {m: symmetry.symmetrize(C, m) for m in symmetry.Mode}
    C_AM = sym[symmetry.Mode.AM]
    factors = {}
    for m in symmetry.Mode:
        factors[m] = symmetry.Factors(
            rho_m=inradius(C_AM, sym[m]).rho,
            delta_m=circumradius(C_AM, sym[m]).rho,
        )
    sym_R = {m: circumradius(sym[m], C).rho for m in symmetry.Mode}
    ctx = GaugeContext(C=C, s=s, center=center, sym=sym, factors=factors,
                       sym_circumradius=sym_R)
    report = symmetry.verify_firey_chain(ctx, strict=centered)
    if not report["ok"]:
        raise ConsistencyError("Firey chain violated for this gauge: %r" % report)
    return ctx
