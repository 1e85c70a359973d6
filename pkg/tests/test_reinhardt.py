"""Circled compacts: boundary profiles and monomial sup norms."""

import math

import numpy as np
import pytest

from pextremal.reinhardt import (
    EuclideanBall,
    TorusProfile,
    monomial_norm_ball_closed,
)


def test_ball_boundary_point():
    ball = EuclideanBall(1.0)
    for psi in (0.0, 0.3, math.pi / 4.0, math.pi / 2.0):
        r1, r2 = ball.boundary_point(psi)
        assert r1 == pytest.approx(math.cos(psi), abs=1e-15)
        assert r2 == pytest.approx(math.sin(psi), abs=1e-15)
    big = EuclideanBall(2.5)
    r1, r2 = big.boundary_point(0.3)
    assert math.hypot(r1, r2) == pytest.approx(2.5, rel=1e-15)


def test_monomial_norm_frozen_values():
    ball = EuclideanBall(1.0)
    assert ball.monomial_norm((0, 0)) == 1.0
    assert ball.monomial_norm((1, 0)) == pytest.approx(1.0, rel=1e-12)
    # |z1 z2| peaks at the balanced point with value 1/2
    assert ball.monomial_norm((1, 1)) == pytest.approx(0.5, rel=1e-12)
    assert ball.monomial_norm((2, 1)) == pytest.approx(
        math.sqrt(4.0 / 27.0), rel=1e-12)


def test_monomial_norm_closed_form_oracle():
    ball = EuclideanBall(1.0)
    worst = 0.0
    for j1 in range(0, 61, 6):
        for j2 in range(0, 61 - j1, 6):
            golden = ball.monomial_norm((j1, j2))
            closed = monomial_norm_ball_closed((j1, j2))
            worst = max(worst, abs(golden - closed) / max(closed, 1e-300))
    assert worst <= 1e-10


def test_monomial_norm_radius_scaling_exact():
    unit = EuclideanBall(1.0)
    for radius in (0.5, 2.0, 3.7):
        ball = EuclideanBall(radius)
        for J in ((1, 0), (3, 4), (10, 1)):
            want = unit.monomial_norm(J) * radius ** (J[0] + J[1])
            assert ball.monomial_norm(J) == pytest.approx(want, rel=1e-13)


def test_monomial_norm_submultiplicative():
    ball = EuclideanBall(1.0)
    rng = np.random.default_rng(3)
    for _ in range(40):
        a = tuple(int(k) for k in rng.integers(0, 12, size=2))
        b = tuple(int(k) for k in rng.integers(0, 12, size=2))
        joint = ball.monomial_norm((a[0] + b[0], a[1] + b[1]))
        assert joint <= ball.monomial_norm(a) * ball.monomial_norm(b) * (1 + 1e-12)


def test_maximizer_angles():
    ball = EuclideanBall(1.0)
    # the log objective is quadratically flat at the peak, so the angle
    # is only pinned to about the square root of the value tolerance
    _, psi = ball._log_norm_argmax((5, 5))
    assert psi == pytest.approx(math.pi / 4.0, abs=1e-6)
    _, psi = ball._log_norm_argmax((7, 0))
    assert psi == 0.0
    _, psi = ball._log_norm_argmax((0, 7))
    assert psi == pytest.approx(math.pi / 2.0, abs=1e-15)


def test_exponent_validation():
    ball = EuclideanBall(1.0)
    with pytest.raises(ValueError):
        ball.monomial_norm((-1, 2))
    with pytest.raises(ValueError):
        ball.monomial_norm((1, 2, 3))


def test_profile_sampled_from_ball_reproduces_norms():
    psis = np.linspace(0.0, math.pi / 2.0, 2049)
    profile = TorusProfile(samples=tuple(
        (float(p), float(np.cos(p)), float(np.sin(p))) for p in psis))
    for J in ((3, 4), (7, 2), (10, 10)):
        want = monomial_norm_ball_closed(J)
        assert profile.monomial_norm(J) == pytest.approx(want, rel=1e-5)
    r1, r2 = profile.boundary_point(0.123456)
    assert r1 == pytest.approx(math.cos(0.123456), abs=1e-6)
    assert r2 == pytest.approx(math.sin(0.123456), abs=1e-6)


def test_profile_validation():
    # must span [0, pi/2]
    with pytest.raises(ValueError):
        TorusProfile(samples=((0.1, 1.0, 0.0), (math.pi / 2.0, 0.0, 1.0)))
    # r1 must not increase
    with pytest.raises(ValueError):
        TorusProfile(samples=((0.0, 0.5, 0.0), (0.8, 1.0, 0.7),
                              (math.pi / 2.0, 1.0, 1.0)))
    # radii must be nonnegative
    with pytest.raises(ValueError):
        TorusProfile(samples=((0.0, 1.0, -0.1), (math.pi / 2.0, 0.0, 1.0)))


def test_profile_bimodal_objective_rejected():
    psis = [0.0, 0.3, 0.6, 0.9, 1.2, math.pi / 2.0]
    lr1 = [0.0, -0.01, -0.5, -0.51, -1.5, -3.0]
    lr2 = [-3.0, -1.5, -1.45, -0.6, -0.02, 0.0]
    samples = tuple((p, math.exp(a), math.exp(b))
                    for p, a, b in zip(psis, lr1, lr2))
    with pytest.raises(ValueError):
        TorusProfile(samples=samples)
