"""Pure-python Seidel-style randomized incremental LP core for d <= 3.

Mirrors _seidel.pyx exactly; selected at import time by lp.py when the
compiled extension is unavailable or GAUGEDIAM_PURE_PYTHON is set.
"""

EPS = 1e-9
BOX = 1e12
_MASK = (1 << 64) - 1

STATUS_OPTIMAL = 0
STATUS_INFEASIBLE = 1
STATUS_UNBOUNDED = 2


def _shuffled(n, seed):
    """Deterministic Fisher-Yates order from a 64-bit LCG stream."""
    idx = list(range(n))
    s = ((seed & _MASK) * 2862933555777941757 + 3037000493) & _MASK
    for i in range(n - 1, 0, -1):
        s = (s * 6364136223846793005 + 1442695040888963407) & _MASK
        j = (s >> 33) % (i + 1)
        idx[i], idx[j] = idx[j], idx[i]
    return idx


def _solve_1d(c0, rows):
    lo = -BOX
    hi = BOX
    for a, bb in rows:
        a0 = a[0]
        if a0 > 1e-14:
            v = bb / a0
            if v < hi:
                hi = v
        elif a0 < -1e-14:
            v = bb / a0
            if v > lo:
                lo = v
        elif bb < -EPS:
            return STATUS_INFEASIBLE, None
    if lo > hi + EPS * max(1.0, abs(lo), abs(hi)):
        return STATUS_INFEASIBLE, None
    if c0 > 0.0:
        x = lo
    elif c0 < 0.0:
        x = hi
    else:
        x = min(hi, max(lo, 0.0))
    return STATUS_OPTIMAL, [x]


def _project_rows(rows, a, bb, k, d):
    """Substitute x_k from a.x = bb into each row; renormalize to unit inf-norm."""
    out = []
    ak = a[k]
    for p, q in rows:
        pk = p[k]
        pp = [p[j] - pk * a[j] / ak for j in range(d) if j != k]
        qq = q - pk * bb / ak
        s = max(abs(v) for v in pp)
        if s < 1e-14:
            if qq < -EPS:
                return None
            continue
        out.append(([v / s for v in pp], qq / s))
    return out


def _solve_rec(c, rows, order):
    d = len(c)
    if d == 1:
        return _solve_1d(c[0], [rows[i] for i in order])
    x = [BOX if ci < 0.0 else (-BOX if ci > 0.0 else 0.0) for ci in c]
    processed = []
    for idx in order:
        a, bb = rows[idx]
        lhs = 0.0
        asum = 0.0
        for j in range(d):
            lhs += a[j] * x[j]
            asum += abs(a[j] * x[j])
        # second term guards float rounding of lhs at box-corner magnitudes
        if lhs <= bb + EPS * max(1.0, abs(bb)) + 1e-14 * asum:
            processed.append(idx)
            continue
        # the new optimum lies on a.x = bb: eliminate the best-conditioned variable
        k = 0
        for j in range(1, d):
            if abs(a[j]) > abs(a[k]):
                k = j
        if abs(a[k]) < 1e-14:
            return STATUS_INFEASIBLE, None
        sub_rows = _project_rows([rows[i] for i in processed], a, bb, k, d)
        if sub_rows is None:
            return STATUS_INFEASIBLE, None
        ck = c[k]
        sub_c = [c[j] - ck * a[j] / a[k] for j in range(d) if j != k]
        st, y = _solve_rec(sub_c, sub_rows, range(len(sub_rows)))
        if st == STATUS_INFEASIBLE:
            return STATUS_INFEASIBLE, None
        x = []
        yi = 0
        for j in range(d):
            if j == k:
                x.append(0.0)
            else:
                x.append(y[yi])
                yi += 1
        x[k] = (bb - sum(a[j] * x[j] for j in range(d) if j != k)) / a[k]
        processed.append(idx)
    return STATUS_OPTIMAL, x


def seidel_solve(A, b, c, seed):
    """Minimize c.x subject to A x <= b (rows unit-inf-norm normalized).

    Returns (status, x or None); an optimum escaping to the internal box is
    reported STATUS_UNBOUNDED.
    """
    m = len(b)
    d = len(c)
    rows = [(list(A[i]), float(b[i])) for i in range(m)]
    # the box keeps every sub-problem bounded; processed first, deterministically
    for j in range(d):
        e = [0.0] * d
        e[j] = 1.0
        rows.append((e, BOX))
        e = [0.0] * d
        e[j] = -1.0
        rows.append((e, BOX))
    order = list(range(m, m + 2 * d)) + [i for i in _shuffled(m, seed)]
    st, x = _solve_rec(list(c), rows, order)
    if st != STATUS_OPTIMAL:
        return st, None
    if max(abs(v) for v in x) >= 0.5 * BOX:
        return STATUS_UNBOUNDED, None
    return STATUS_OPTIMAL, x
