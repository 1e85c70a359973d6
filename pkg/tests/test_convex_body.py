"""Growth bodies: support functions, volumes, lattice points, scalings."""

import math

import numpy as np
import pytest

from pextremal.convex_body import LqBody, Polytope, lq_volume_quadrature


def test_lq_validation():
    with pytest.raises(ValueError):
        LqBody(q=0.5, d=2)
    with pytest.raises(ValueError):
        LqBody(q=2.0, d=0)


def test_support_function_values():
    p2 = LqBody(q=2.0, d=2)
    assert p2.support_function((3.0, 4.0)) == pytest.approx(5.0, abs=1e-15)
    p1 = LqBody(q=1.0, d=2)
    # dual exponent of 1 is inf: support is the largest positive part
    assert p1.support_function((3.0, 4.0)) == pytest.approx(4.0, abs=1e-15)
    assert p1.support_function((-1.0, -2.0)) == 0.0
    pinf = LqBody(q=math.inf, d=2)
    assert pinf.support_function((3.0, 4.0)) == pytest.approx(7.0, abs=1e-15)
    assert pinf.support_function((3.0, -4.0)) == pytest.approx(3.0, abs=1e-15)


def test_support_function_homogeneous_and_subadditive():
    rng = np.random.default_rng(1)
    for q in (1.0, 1.7, 2.0, 5.0, math.inf):
        body = LqBody(q=q, d=2)
        for _ in range(50):
            x = rng.normal(size=2)
            y = rng.normal(size=2)
            lam = rng.uniform(0.1, 5.0)
            fx, fy = body.support_function(x), body.support_function(y)
            assert body.support_function(lam * x) == pytest.approx(
                lam * fx, rel=1e-12, abs=1e-12)
            assert body.support_function(x + y) <= fx + fy + 1e-12


def test_log_indicator_values():
    assert LqBody(q=2.0, d=2).log_indicator((math.e, 1.0)) == pytest.approx(
        1.0, abs=1e-12)
    assert LqBody(q=math.inf, d=2).log_indicator(
        (0.0, math.e ** 2)) == pytest.approx(2.0, abs=1e-12)
    # zero coordinates knock out every exponent touching them; with the
    # origin in the body the surviving face still contributes 0
    assert LqBody(q=1.0, d=2).log_indicator((0.0, 0.0)) == 0.0
    assert LqBody(q=1.0, d=2).log_indicator((0.0, 0.5)) == 0.0


def test_volume_closed_forms():
    assert LqBody(q=1.0, d=2).volume() == pytest.approx(0.5, rel=1e-14)
    assert LqBody(q=2.0, d=2).volume() == pytest.approx(math.pi / 4.0, rel=1e-14)
    assert LqBody(q=math.inf, d=2).volume() == 1.0


@pytest.mark.parametrize("q", [1.0, 1.5, 2.0, 3.0, math.inf])
def test_volume_dual_route(q):
    closed = LqBody(q=q, d=2).volume()
    quad = lq_volume_quadrature(q, d=2)
    assert abs(closed - quad) / closed <= 1e-8


def test_lattice_points_frozen_example():
    pts = LqBody(q=2.0, d=2).lattice_points(2).points
    assert sorted(pts) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]


def test_lattice_counts_against_row_oracle():
    for n in (1, 2, 5, 13, 30):
        assert len(LqBody(q=math.inf, d=2).lattice_points(n).points) == (n + 1) ** 2
        assert len(LqBody(q=1.0, d=2).lattice_points(n).points) == \
            (n + 1) * (n + 2) // 2
        want = sum(math.isqrt(n * n - j * j) + 1 for j in range(n + 1))
        assert len(LqBody(q=2.0, d=2).lattice_points(n).points) == want


def test_lattice_counts_monotone_in_degree():
    body = LqBody(q=1.5, d=2)
    counts = [len(body.lattice_points(n).points) for n in range(1, 12)]
    assert all(b >= a for a, b in zip(counts, counts[1:]))


def test_polytope_requires_orthant():
    with pytest.raises(ValueError):
        Polytope(vertices=((0.0, 0.0), (-0.5, 1.0)))


def test_polytope_membership_and_support():
    tri = Polytope(vertices=((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)))
    assert tri.contains((0.25, 0.25))
    assert tri.contains((0.5, 0.5))       # boundary edge
    assert not tri.contains((0.51, 0.51))
    assert tri.support_function((2.0, 1.0)) == pytest.approx(2.0, abs=1e-15)
    assert tri.support_function((-1.0, -2.0)) == 0.0
    assert tri.volume() == pytest.approx(0.5, rel=1e-12)


def test_degenerate_polytope_falls_back_to_lp():
    seg = Polytope(vertices=((0.0, 0.0), (1.0, 1.0)))
    assert seg.contains((0.5, 0.5))
    assert not seg.contains((0.5, 0.6))
    assert seg.volume() == 0.0
    assert seg.scaling_constant() is None


def test_scaling_constants():
    assert LqBody(q=2.0, d=2).scaling_constant() == 1
    assert Polytope(vertices=((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))
                    ).scaling_constant() == 1
    assert Polytope(vertices=((0.0, 0.0), (0.5, 0.0), (0.0, 0.5))
                    ).scaling_constant() == 2
    assert Polytope(vertices=((0.0, 0.0), (0.4, 0.0), (0.0, 0.4))
                    ).scaling_constant() == 3


def test_scaling_absent_cases():
    # a body missing the origin can never absorb the standard simplex
    shifted = Polytope(vertices=((0.5, 0.5), (1.0, 0.5), (0.5, 1.0)))
    assert shifted.scaling_constant() is None
    # a segment along one axis never covers the other axis direction
    axis = Polytope(vertices=((0.0, 0.0), (1.0, 0.0)))
    assert axis.scaling_constant() is None
