"""(r, R, D) diagram records, per-mode inequality verification, boundary
curves, deterministic sampling, CSV/SVG emission, and the falsification
harness for the dominating-triangle-diagram conjecture."""

import math
from dataclasses import dataclass, field

import numpy as np

from . import lp
from .diameters import diameter, half_difference, width
from .errors import ConsistencyError, PointBody
from .families import interpolate, random_hull, s_lambda, t_alpha
from .geometry import EPS_CMP, Polygon, canonicalize, gauge_norm, linear_map, negate
from .radii import circumradius, inradius, make_context
from .symmetry import Mode

TRIANGLE = "TRIANGLE"
UNION_BOUND = "UNION_BOUND"
REULEAUX = "REULEAUX"

CURVE_STEP = 1e-3


@dataclass(frozen=True)
class DiagramRecord:
    body_id: str
    family: str
    mode: object
    r: float
    R: float
    D: float
    w: float
    x: float
    y: float


@dataclass(frozen=True)
class InequalityEntry:
    name: str
    lhs: float
    rhs: float
    margin: float
    satisfied: bool


@dataclass(frozen=True)
class InequalityReport:
    mode: object
    triangle_gauge: bool
    entries: list = field(default_factory=list)

    @property
    def all_satisfied(self):
        return all(e.satisfied for e in self.entries)

    def worst(self):
        return min(self.entries, key=lambda e: e.margin)


def diagram_point(K, ctx, mode, body_id="", family=""):
    """f_mode(K, C) = (r/R, D_mode/2R) plus the raw functionals."""
    if len(K) == 1:
        raise PointBody("diagram points require a body with positive diameter")
    R = circumradius(K, ctx.C).rho
    if R <= 0:
        raise PointBody("body has zero circumradius")
    r = inradius(K, ctx.C).rho if K.is_fulldim else 0.0
    D = diameter(K, ctx, mode).value
    w = width(K, ctx, mode).value
    return DiagramRecord(body_id, family, mode, r, R, D, w, r / R, D / (2.0 * R))


def verify_inequalities(K, ctx, mode):
    """Evaluate every applicable diagram inequality for (K, C, mode).

    All quantities are normalized by R; margins are rhs - lhs and an entry is
    satisfied iff its margin is >= -EPS_CMP.
    """
    rec = diagram_point(K, ctx, mode)
    x, y = rec.x, rec.y
    kam = half_difference(K)
    y_am = diameter(K, ctx, Mode.AM, kam=kam).value / (2.0 * rec.R)
    s = ctx.s
    rho_m = ctx.rho(mode)
    delta_m = ctx.delta(mode)
    Rm = ctx.sym_circumradius[mode]
    entries = []

    def add(name, lhs, rhs):
        margin = rhs - lhs
        entries.append(InequalityEntry(name, lhs, rhs, margin,
                                       margin >= -EPS_CMP))

    add("0 <= r", 0.0, x)
    add("r <= R", x, 1.0)
    add("rho_m D_AM <= D_m", rho_m * y_am, y)
    add("D_m <= delta_m D_AM", y, delta_m * y_am)
    add("delta_m r <= D_m/2", delta_m * x, y)
    add("D_m/2 <= delta_m R", y, delta_m)
    add("rho_m (s r + R) <= (s+1) D_m/2", rho_m * (s * x + 1.0), (s + 1.0) * y)
    add("r + R <= R(C_m,C) D_m", x + 1.0, Rm * 2.0 * y)

    if mode == Mode.MAX:
        add("R <= D_MAX", 0.5, y)
        add("union quad (2/3)(D/R)(1-(2/3)(D/R)) <= r/R",
            (4.0 * y / 3.0) * (1.0 - 4.0 * y / 3.0), x)
    elif mode == Mode.HM:
        add("9R <= 8 D_HM", 9.0 / 16.0, y)
        add("2r <= D_HM", x, y)
        add("union quad (D/2R)(1-D/2R) <= r/R", y * (1.0 - y), x)
    elif mode == Mode.MIN:
        add("3R <= 2 D_MIN", 3.0 / 4.0, y)
        add("r + R <= D_MIN", x + 1.0, 2.0 * y)
        add("D_MIN <= 3R", y, 3.0 / 2.0)
        add("union quad (D/2R)(1-D/2R) <= r/R", y * (1.0 - y), x)
    elif mode == Mode.AM:
        add("4r + 2R <= 3 D_AM", (4.0 * x + 2.0) / 3.0, 2.0 * y)
        add("quad (D/2R)(1-D/2R) <= r/R", y * (1.0 - y), x)

    if ctx.is_triangle:
        if mode == Mode.MAX:
            add("triangle: D_MAX <= 2R", y, 1.0)
            add("triangle: r <= D_MAX/2", x, y)
            add("triangle quad (D/R-1/2)(3/2-D/R) <= r/R",
                (2.0 * y - 0.5) * (1.5 - 2.0 * y), x)
        elif mode == Mode.HM:
            add("triangle: D_HM <= 3R", y, 1.5)
            add("triangle: 3r <= D_HM", 1.5 * x, y)
            add("triangle: R <= (2/3) D_HM", 3.0 / 4.0, y)
            add("triangle quad (4/9)(D/R-3/4)(9/4-D/R) <= r/R",
                (4.0 / 9.0) * (2.0 * y - 0.75) * (2.25 - 2.0 * y), x)
        elif mode == Mode.MIN:
            add("triangle: D_MIN <= 3R", y, 1.5)
            add("triangle: 2r + R <= D_MIN", x + 0.5, y)
            add("triangle quad (D/3R)(1-D/3R) <= r/R",
                (2.0 * y / 3.0) * (1.0 - 2.0 * y / 3.0), x)

    return InequalityReport(mode=mode, triangle_gauge=ctx.is_triangle,
                            entries=entries)


def diametral_segment(ctx, mode):
    """A longest chord L_D of C: the diametral vertex pair as a segment."""
    p, q = diameter(ctx.C, ctx, mode).pair
    return canonicalize([p, q])


def width_segment(ctx, mode):
    """A shortest-longest chord L_w of C, along the minimizing direction.

    The longest chord of C in direction u ends on bd(C - C); minimizing its
    C_mode-gauge length over directions is the inradius touching point of
    rho_m C_mode in C_AM.
    """
    C_AM = ctx.sym[Mode.AM]
    C_m = ctx.sym[mode]
    cands = [np.array(v) for v in C_AM.v]
    rho = inradius(C_AM, C_m).rho
    tolv = 1e-9 * max(C_AM.scale, 1.0)
    A_am, b_am = C_AM.facets()
    for w in C_m.v:
        p = rho * np.asarray(w, dtype=float)
        if np.max(A_am @ p - b_am) <= tolv:
            cands.append(p)
    u = min(cands, key=lambda p: (gauge_norm(C_m, p), p[0], p[1]))
    # longest chord of C in direction u: maximize t with x, x + t u in C
    A, b = ctx.C.facets()
    nf = len(b)
    rows = np.zeros((2 * nf + 1, 3))
    rhs = np.empty(2 * nf + 1)
    rows[:nf, :2] = A
    rhs[:nf] = b
    rows[nf:2 * nf, :2] = A
    rows[nf:2 * nf, 2] = A @ u
    rhs[nf:2 * nf] = b
    rows[2 * nf] = (0.0, 0.0, -1.0)
    rhs[2 * nf] = 0.0
    sol = lp.solve_arrays(rows, rhs, np.array([0.0, 0.0, -1.0]), 0)
    if sol.status != lp.OPTIMAL:
        raise ConsistencyError("width-chord LP returned %s" % sol.status)
    p = np.array(sol.point[:2])
    return canonicalize([p, p + sol.point[2] * u])


def anchor_bodies(ctx, mode):
    """The labeled diagram anchors: C, -C, C_mode, L_D and L_w."""
    return {
        "gauge": ctx.C,
        "neg_gauge": negate(ctx.C),
        "sym_gauge": ctx.sym[mode],
        "diam_segment": diametral_segment(ctx, mode),
        "width_segment": width_segment(ctx, mode),
    }


def _curve(name, family, fx, fy, t0, t1, conjectured=False):
    ts = np.arange(t0, t1 + CURVE_STEP / 2.0, CURVE_STEP)
    pts = np.column_stack([fx(ts), fy(ts)])
    return {"name": name, "family": family, "conjectured": conjectured,
            "points": pts}


def _hline(name, family, y, x0, x1):
    return _curve(name, family, lambda t: t, lambda t: np.full_like(t, y), x0, x1)


def _vline(name, family, x, y0, y1):
    return _curve(name, family, lambda t: np.full_like(t, x), lambda t: t, y0, y1)


def _quad(name, family, f, y0, y1, conjectured=False):
    return _curve(name, family, f, lambda t: t, y0, y1, conjectured=conjectured)


def _triangle_curves(mode):
    if mode == Mode.MAX:
        return [
            _hline("upper edge", "interp(L_D, C)", 1.0, 0.0, 1.0),
            _curve("lower-right edge", "interp(C, C_MAX)",
                   lambda t: t, lambda t: t, 0.5, 1.0),
            _hline("lower edge", "completions of -C", 0.5, 0.25, 0.5),
            _quad("left quadratic", "S_lambda",
                  lambda y: (2.0 * y - 0.5) * (1.5 - 2.0 * y), 0.5, 0.75),
            _vline("left edge", "segments L_w..L_D", 0.0, 0.75, 1.0),
        ]
    if mode == Mode.HM:
        return [
            _hline("upper edge", "interp(L_D, C)", 1.5, 0.0, 1.0),
            _curve("lower-right edge", "interp(C, C_HM)",
                   lambda t: t, lambda t: 1.5 * t, 0.5, 1.0),
            _hline("lower edge", "completions of -C", 0.75, 0.25, 0.5),
            _quad("left quadratic", "S_lambda",
                  lambda y: (4.0 / 9.0) * (2.0 * y - 0.75) * (2.25 - 2.0 * y),
                  0.75, 1.125),
            _vline("left edge", "segments L_w..L_D", 0.0, 1.125, 1.5),
        ]
    if mode == Mode.MIN:
        return [
            _hline("upper edge", "interp(L_D, C)", 1.5, 0.0, 1.0),
            _curve("lower-right edge", "interp(-C, C_MIN)",
                   lambda t: t, lambda t: t + 0.5, 0.25, 1.0),
            _quad("left quadratic", "S_lambda",
                  lambda y: (4.0 / 9.0) * y * (1.5 - y), 0.75, 1.5),
        ]
    return [
        _hline("upper edge", "interp(L_D, C)", 1.0, 0.0, 1.0),
        _curve("lower-right edge", "interp(-C, C_AM)",
               lambda t: t, lambda t: (2.0 * t + 1.0) / 3.0, 0.25, 1.0),
        _quad("left quadratic", "S_lambda",
              lambda y: y * (1.0 - y), 0.5, 1.0),
    ]


def _union_curves(mode):
    if mode == Mode.MAX:
        return [
            _hline("upper edge", "interp(L_D, C)", 1.0, 0.0, 1.0),
            _curve("lower-right edge", "interp(C, C_MAX)",
                   lambda t: t, lambda t: t, 0.5, 1.0),
            _hline("lower edge", "Jung bound", 0.5, 2.0 / 9.0, 0.5),
            _quad("left quadratic", "union bound",
                  lambda y: (4.0 * y / 3.0) * (1.0 - 4.0 * y / 3.0), 0.5, 0.75),
            _vline("left edge", "segments", 0.0, 0.75, 1.0),
        ]
    if mode == Mode.HM:
        yq = 9.0 / 16.0
        return [
            _hline("upper edge", "interp(L_D, C)", 1.5, 0.0, 1.0),
            _vline("right edge", "gauges C", 1.0, 1.0, 1.5),
            _curve("lower-right edge", "half-diameter bound",
                   lambda t: t, lambda t: t, yq, 1.0),
            _hline("lower edge", "Jung bound", yq, yq * (1.0 - yq), yq),
            _quad("left quadratic", "union bound",
                  lambda y: y * (1.0 - y), yq, 1.0),
            _vline("left edge", "segments", 0.0, 1.0, 1.5),
        ]
    if mode == Mode.MIN:
        return [
            _hline("upper edge", "interp(L_D, C)", 1.5, 0.0, 1.0),
            _vline("right edge", "gauges C", 1.0, 1.0, 1.5),
            _curve("lower-right edge", "interp(-S, S_MIN)",
                   lambda t: t, lambda t: (t + 1.0) / 2.0, 0.5, 1.0),
            _hline("lower edge", "Bohnenblust bound", 0.75, 3.0 / 16.0, 0.5),
            _quad("left quadratic", "union bound",
                  lambda y: y * (1.0 - y), 0.75, 1.0),
            _vline("left edge", "segments", 0.0, 1.0, 1.5),
        ]
    return _triangle_curves(Mode.AM)


def _reuleaux_curves():
    s0 = 1.0 / (math.sqrt(3.0) - 1.0)
    delta0 = math.sqrt(3.0) / (math.sqrt(11.0) - math.sqrt(3.0))
    rho0 = 3.0 * (math.sqrt(3.0) + 1.0) / 8.0
    y0 = delta0 / s0
    # circumradius of the completion of the Reuleaux body w.r.t. itself
    r_star = (s0 + 1.0) * delta0 / rho0 - s0
    a0 = -8.0 * s0 / (4.0 * delta0 - (s0 + 1.0) ** 2) ** 2
    return [
        _hline("conjectured lower edge", "completions", y0,
               1.0 / (2.0 * s0), 1.0 / r_star),
        _quad("conjectured left quadratic", "conjectured bound",
              lambda y: a0 * (y - rho0) * (y - (2.0 * y0 - rho0)), y0, rho0,
              conjectured=True),
    ]


def boundary_curves(mode, gauge_class=TRIANGLE):
    """Sampled boundary polylines of a diagram region (step 1e-3).

    gauge_class TRIANGLE gives the exact triangle-gauge region, UNION_BOUND
    the proven bound for the union over all centered gauges, and REULEAUX the
    two conjectured curves of the Reuleaux-body HM diagram.
    """
    if gauge_class == TRIANGLE:
        return _triangle_curves(mode)
    if gauge_class == UNION_BOUND:
        return _union_curves(mode)
    if gauge_class == REULEAUX:
        if mode != Mode.HM:
            raise ValueError("REULEAUX curves exist for the HM mode only")
        curves = list(_reuleaux_curves())
        curves[0]["conjectured"] = True
        return curves
    raise ValueError("unknown gauge class %r" % gauge_class)


def sample_bodies(ctx, mode, n, seed):
    """Yield n deterministic (body_id, family, K) sampling tuples: 60% random
    hulls (normalized to R = 1), 20% family members, 20% interpolants
    toward C."""
    if n < 1:
        raise ValueError("need n >= 1 samples")
    n_fam = n // 5
    n_int = n // 5
    n_rand = n - n_fam - n_int
    M = None
    anchors = None
    if ctx.is_triangle:
        # centered triangles are linear images of each other; map the
        # reference triangle's families into this gauge
        from .families import P2, P3
        ref = np.column_stack([P2, P3])
        M = np.column_stack([ctx.C.v[0], ctx.C.v[1]]) @ np.linalg.inv(ref)
    else:
        anchors = [ctx.C, negate(ctx.C), ctx.sym[Mode.MIN], ctx.sym[Mode.HM],
                   ctx.sym[Mode.AM], ctx.sym[Mode.MAX],
                   diametral_segment(ctx, mode), width_segment(ctx, mode)]
    for i in range(n):
        if i < n_rand:
            K = random_hull((seed, 101, i), 3 + i % 6, normalization=ctx)
            family = "RANDOM_HULL"
        elif i < n_rand + n_fam:
            j = i - n_rand
            if ctx.is_triangle:
                steps = max(1, (n_fam + 1) // 2)
                frac = (j // 2) / max(1, steps - 1) if steps > 1 else 0.0
                if j % 2 == 0:
                    K = linear_map(t_alpha(1.0 / 3.0 + frac / 3.0), M)
                    family = "T_ALPHA"
                else:
                    K = linear_map(s_lambda(0.5 + frac / 2.0), M)
                    family = "S_LAMBDA"
            else:
                K = anchors[j % len(anchors)]
                family = "ANCHOR"
        else:
            j = i - n_rand - n_fam
            t = (j + 1.0) / (n_int + 1.0)
            base = random_hull((seed, 202, j), 4 + j % 5, normalization=ctx)
            K = interpolate(base, ctx.C, t)
            family = "INTERPOLATE"
        yield "b%05d" % i, family, K


def sample_diagram(ctx, mode, n, seed):
    """n deterministic diagram records from the sample_bodies mix."""
    return [diagram_point(K, ctx, mode, body_id=bid, family=fam)
            for bid, fam, K in sample_bodies(ctx, mode, n, seed)]


def records_to_csv(records):
    lines = ["body_id,family,mode,r,R,D,w,x,y"]
    for rec in records:
        lines.append("%s,%s,%s,%.10g,%.10g,%.10g,%.10g,%.10g,%.10g" % (
            rec.body_id, rec.family, rec.mode.name.lower(),
            rec.r, rec.R, rec.D, rec.w, rec.x, rec.y))
    return "\n".join(lines) + "\n"


def write_csv(records, path):
    with open(path, "w", newline="") as fh:
        fh.write(records_to_csv(records))


def render_svg(records, curves=None, size=800):
    """Deterministic scatter + boundary-polyline SVG, 800x800 viewport."""
    margin = 70.0
    ymax = 1.6
    for rec in records:
        ymax = max(ymax, rec.y * 1.05)
    if curves:
        for c in curves:
            ymax = max(ymax, float(np.max(c["points"][:, 1])) * 1.05)
    span = size - 2.0 * margin

    def sx(x):
        return margin + span * x / 1.05

    def sy(y):
        return size - margin - span * y / ymax

    out = []
    out.append('<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
               'viewBox="0 0 %d %d">' % (size, size, size, size))
    out.append('<rect width="%d" height="%d" fill="white"/>' % (size, size))
    out.append('<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" stroke="black"/>'
               % (margin, size - margin, size - margin / 2.0, size - margin))
    out.append('<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" stroke="black"/>'
               % (margin, size - margin, margin, margin / 2.0))
    out.append('<text x="%.2f" y="%.2f" font-size="16">r/R</text>'
               % (size - margin / 2.0 + 4, size - margin + 5))
    out.append('<text x="%.2f" y="%.2f" font-size="16">D/2R</text>'
               % (margin - 25, margin / 2.0 - 8))
    for c in curves or []:
        color = "purple" if c.get("conjectured") else "black"
        pts = " ".join("%.2f,%.2f" % (sx(p[0]), sy(p[1]))
                       for p in c["points"])
        out.append('<polyline fill="none" stroke="%s" points="%s"/>'
                   % (color, pts))
    for rec in records:
        out.append('<circle cx="%.2f" cy="%.2f" r="2" fill="steelblue"/>'
                   % (sx(rec.x), sy(rec.y)))
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(records, path, curves=None, size=800):
    with open(path, "w", newline="") as fh:
        fh.write(render_svg(records, curves=curves, size=size))


def _triangle_max_region_margin(x, y):
    """Smallest margin of the triangle-gauge MAX region at (x, y)."""
    return min(
        x,
        y - x,
        1.0 - y,
        y - 0.5,
        x - (2.0 * y - 0.5) * (1.5 - 2.0 * y),
    )


def falsify_dominating_conjecture(n_gauges=200, n_bodies=200, seed=0,
                                  verbose=False):
    """CONJECTURED: every centered gauge's MAX diagram lies inside the
    triangle-gauge MAX region.  This harness only searches for a
    counterexample; the claim is never asserted.
    """
    checked = 0
    worst = math.inf
    for g in range(n_gauges):
        C = random_hull((seed, 1, g), 3 + g % 6)
        ctx = make_context(C)
        for k in range(n_bodies):
            K = random_hull((seed, 2, g, k), 3 + k % 6, normalization=ctx)
            rec = diagram_point(K, ctx, mode=Mode.MAX)
            m = _triangle_max_region_margin(rec.x, rec.y)
            checked += 1
            worst = min(worst, m)
            if m < -EPS_CMP:
                return {
                    "label": "CONJECTURED",
                    "checked": checked,
                    "worst_margin": worst,
                    "counterexample": {
                        "gauge": ctx.C.v.tolist(),
                        "body": K.v.tolist(),
                        "x": rec.x,
                        "y": rec.y,
                        "margin": m,
                    },
                }
    return {"label": "CONJECTURED", "checked": checked,
            "worst_margin": worst, "counterexample": None}
