"""Polygon canonicalization, transforms, Minkowski sums, polars, supports,
halfplane intersection and JSON round-trips."""

import numpy as np
import pytest

from gaugediam import (
    canonicalize,
    chord_through_origin,
    contains,
    gauge_norm,
    halfplane_intersection,
    linear_map,
    minkowski_sum,
    negate,
    polar,
    polygon_from_json,
    polygon_to_json,
    same_set,
    scale,
    support,
    translate,
)
from gaugediam.errors import EmptyInput
from gaugediam.geometry import REGION_EMPTY, REGION_POLYGON, REGION_UNBOUNDED


def _rand_points(seed, n):
    rng = np.random.default_rng(seed)
    return rng.uniform(-1.0, 1.0, size=(n, 2))


def test_canonicalize_dedups_and_drops_collinear():
    P = canonicalize([[0, 0], [1, 0], [1, 0], [2, 0], [2, 2], [0, 0], [1, 1]])
    assert np.allclose(P.v, [[0, 0], [2, 0], [2, 2]])


def test_canonicalize_ccw_lexmin_first():
    P = canonicalize([[1, 1], [0, 1], [1, 0], [0, 0]])
    assert np.allclose(P.v, [[0, 0], [1, 0], [1, 1], [0, 1]])
    v = P.v
    n = len(v)
    def cross(a, b):
        return a[0] * b[1] - a[1] * b[0]

    crosses = [cross(v[(i + 1) % n] - v[i], v[(i + 2) % n] - v[(i + 1) % n])
               for i in range(n)]
    assert all(c > 0 for c in crosses)


def test_canonicalize_degenerate_shapes():
    assert len(canonicalize([[1, 2]]).v) == 1
    seg = canonicalize([[0, 0], [2, 2], [1, 1]])
    assert len(seg.v) == 2
    assert not seg.is_fulldim


def test_canonicalize_empty_raises():
    with pytest.raises(EmptyInput):
        canonicalize(np.zeros((0, 2)))


def test_transforms():
    P = canonicalize(_rand_points(1, 8))
    assert np.allclose(translate(translate(P, [1, -2]), [-1, 2]).v, P.v)
    assert np.allclose(scale(P, 2.0).v, 2.0 * P.v)
    assert same_set(negate(negate(P)), P)
    M = np.array([[2.0, 1.0], [0.5, 3.0]])
    Q = linear_map(P, M)
    assert same_set(linear_map(Q, np.linalg.inv(M)), P, 1e-9)


def test_minkowski_sum_matches_bruteforce():
    for seed in range(10):
        P = canonicalize(_rand_points(seed, 3 + seed % 5))
        Q = canonicalize(_rand_points(seed + 100, 3 + (seed + 1) % 5))
        S = minkowski_sum(P, Q)
        brute = canonicalize(np.array([p + q for p in P.v for q in Q.v]))
        assert same_set(S, brute, 1e-9)


def test_minkowski_sum_with_segment_and_point():
    P = canonicalize(_rand_points(3, 6))
    seg = canonicalize([[0, 0], [1, 0]])
    pt = canonicalize([[0.5, 0.25]])
    brute = canonicalize(np.array([p + q for p in P.v for q in seg.v]))
    assert same_set(minkowski_sum(P, seg), brute, 1e-9)
    assert same_set(minkowski_sum(P, pt), translate(P, [0.5, 0.25]), 1e-9)


def test_polar_involution_and_triangle(T):
    sq = canonicalize([[1, 1], [-1, 1], [-1, -1], [1, -1]])
    diamond = canonicalize([[1, 0], [0, 1], [-1, 0], [0, -1]])
    assert same_set(polar(sq), diamond, 1e-9)
    assert same_set(polar(polar(sq)), sq, 1e-9)
    # the polar of the centered equilateral triangle is its -2 dilate
    assert same_set(polar(T), scale(negate(T), 2.0), 1e-9)


def test_support_and_gauge_norm(T):
    val, face = support(T, [0.0, 1.0])
    assert val == pytest.approx(1.0)
    assert gauge_norm(T, [0.0, 1.0]) == pytest.approx(1.0)
    assert gauge_norm(T, [0.0, -0.5]) == pytest.approx(1.0)
    assert gauge_norm(T, [0.0, 0.0]) == 0.0
    # positive homogeneity
    assert gauge_norm(T, [0.3, 0.4]) == pytest.approx(2.0 * gauge_norm(T, [0.15, 0.2]))


def test_chord_through_origin(T):
    ch = chord_through_origin(T, [0.0, 1.0])
    assert ch.endpoint[1] == pytest.approx(1.0)


def test_contains_and_same_set(T):
    assert contains(T, scale(T, 0.5), 1e-9)
    assert not contains(scale(T, 0.5), T, 1e-9)
    assert same_set(T, canonicalize(T.v[::-1]))


def test_halfplane_intersection_statuses():
    sq = [((1.0, 0.0), 1.0), ((-1.0, 0.0), 1.0), ((0.0, 1.0), 1.0),
          ((0.0, -1.0), 1.0)]
    reg = halfplane_intersection(sq)
    assert reg.status == REGION_POLYGON
    assert same_set(reg.polygon,
                    canonicalize([[1, 1], [-1, 1], [-1, -1], [1, -1]]), 1e-9)
    assert halfplane_intersection(sq[:2]).status == REGION_UNBOUNDED
    empty = sq + [((1.0, 0.0), -2.0)]
    assert halfplane_intersection(empty).status == REGION_EMPTY


def test_polygon_json_roundtrip(T):
    obj = polygon_to_json(T)
    P, was_canonical = polygon_from_json(obj)
    assert was_canonical
    assert same_set(P, T)
    P2, was_canonical2 = polygon_from_json({"vertices": T.v[::-1].tolist()})
    assert not was_canonical2
    assert same_set(P2, T)
    with pytest.raises(EmptyInput):
        polygon_from_json({"nope": []})
