"""Diameter functionals: mode ordering, sandwich bounds, invariances,
segments, subadditivity, and directional length/breadth extrema."""

import numpy as np
import pytest

from gaugediam import canonicalize, gauge_norm, minkowski_sum, scale, translate
from gaugediam.diameters import (
    MIN_ASYM,
    diameter,
    half_difference,
    s_breadth,
    s_length,
    width,
)
from gaugediam.errors import ZeroDirection
from gaugediam.families import random_hull
from gaugediam.symmetry import Mode


def test_gauge_diameters_of_itself(ctx_T):
    # D_m(C, C) = 2 delta_m and w_m(C, C) = 2 rho_m
    for m in Mode:
        assert diameter(ctx_T.C, ctx_T, m).value == pytest.approx(
            2.0 * ctx_T.delta(m), abs=1e-9)
        assert width(ctx_T.C, ctx_T, m).value == pytest.approx(
            2.0 * ctx_T.rho(m), abs=1e-9)


def test_mode_ordering(ctx_T):
    for seed in range(10):
        K = random_hull((101, seed), 3 + seed % 6)
        vals = [diameter(K, ctx_T, m).value for m in
                (Mode.MAX, Mode.AM, Mode.HM, Mode.MIN)]
        for a, b in zip(vals, vals[1:]):
            assert a <= b + 1e-9


def test_sandwich_by_am(ctx_T):
    # rho_m D_AM <= D_m <= delta_m D_AM
    for seed in range(8):
        K = random_hull((102, seed), 4 + seed % 5)
        d_am = diameter(K, ctx_T, Mode.AM).value
        for m in Mode:
            d = diameter(K, ctx_T, m).value
            assert ctx_T.rho(m) * d_am - 1e-9 <= d <= ctx_T.delta(m) * d_am + 1e-9


def test_translation_and_scaling(ctx_T):
    K = random_hull((103, 0), 6)
    for m in Mode:
        d = diameter(K, ctx_T, m).value
        assert diameter(translate(K, [7.0, -3.0]), ctx_T, m).value == \
            pytest.approx(d, rel=1e-9)
        assert diameter(scale(K, 3.0), ctx_T, m).value == \
            pytest.approx(3.0 * d, rel=1e-9)


def test_segment_diameter_is_gauge_norm_of_difference(ctx_T):
    p, q = np.array([0.2, -0.1]), np.array([-0.5, 0.6])
    L = canonicalize([p, q])
    for m in Mode:
        expect = gauge_norm(ctx_T.sym[m], q - p)
        assert diameter(L, ctx_T, m).value == pytest.approx(expect, rel=1e-9)


def test_point_diameter_zero(ctx_T):
    pt = canonicalize([[0.1, 0.2]])
    assert diameter(pt, ctx_T, Mode.MAX).value == 0.0


def test_subadditivity(ctx_T):
    for seed in range(6):
        K1 = random_hull((104, seed), 4)
        K2 = random_hull((105, seed), 5)
        S = minkowski_sum(K1, K2)
        for m in (Mode.MAX, Mode.MIN):
            assert diameter(S, ctx_T, m).value <= \
                diameter(K1, ctx_T, m).value + diameter(K2, ctx_T, m).value + 1e-9


def test_diametral_pair_attains_value(ctx_T):
    for seed in range(6):
        K = random_hull((106, seed), 5)
        for m in Mode:
            res = diameter(K, ctx_T, m)
            p, q = res.pair
            assert gauge_norm(ctx_T.sym[m], p - q) == pytest.approx(
                res.value, rel=1e-9)


def test_width_leq_diameter(ctx_T):
    for seed in range(6):
        K = random_hull((107, seed), 5)
        for m in Mode:
            assert width(K, ctx_T, m).value <= \
                diameter(K, ctx_T, m).value + 1e-9


def test_s_length_max_is_diameter(ctx_T):
    K = random_hull((108, 1), 6)
    for m in Mode:
        d = diameter(K, ctx_T, m).value
        # candidate directions: all vertex differences of K
        best = 0.0
        for i in range(len(K.v)):
            for j in range(len(K.v)):
                if i != j:
                    best = max(best, s_length(K, ctx_T, K.v[i] - K.v[j], m))
        assert best == pytest.approx(d, rel=1e-7)


def test_s_breadth_max_is_diameter(ctx_T):
    K = random_hull((108, 2), 6)
    kam = half_difference(K)
    for m in (Mode.AM, Mode.MAX):
        d = diameter(K, ctx_T, m).value
        U1, _ = kam.facets()
        U2, _ = ctx_T.sym[m].facets()
        best = max(s_breadth(K, ctx_T, u, m) for u in np.vstack([U1, U2]))
        assert best == pytest.approx(d, rel=1e-7)


def test_min_asym_s_length(ctx_T):
    # measured against the asymmetric gauge itself
    val = s_length(ctx_T.C, ctx_T, [0.0, 1.0], MIN_ASYM)
    assert val > 0.0


def test_zero_direction_raises(ctx_T):
    with pytest.raises(ZeroDirection):
        s_length(ctx_T.C, ctx_T, [0.0, 0.0], Mode.AM)
    with pytest.raises(ZeroDirection):
        s_breadth(ctx_T.C, ctx_T, [0.0, 0.0], Mode.AM)
