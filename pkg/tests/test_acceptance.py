"""Acceptance gate: one test per headline requirement.

Each test pins the advertised tolerance, measures the relevant
quantity end to end, and prints a single summary line so a plain
pytest -v run reads as a scorecard.
"""

import math
import time

import numpy as np
import pytest

from pextremal.convex_body import LqBody, lq_volume_quadrature
from pextremal.extremal import (
    ClosedFormP1Ball,
    ClosedFormPInfBall,
    build_envelope,
    convergence_profile,
    equality_case_residual,
    sandwich_constants,
    v_pinf_ball,
    v_pinf_ball_branches,
)
from pextremal.monge_ampere import (
    EIGHT_PI_SQ,
    FOUR_PI_SQ,
    ddc_u_coefficient,
    ddc_u_coefficient_fd,
    density_pinf_psi,
    gradient_image_sector_mass,
    numeric_density,
    reduce_boundary_form,
    sector_mass_pinf,
    sector_mass_report,
    sphere_quadrature,
    total_mass,
    wedge_form,
)
from pextremal.reinhardt import EuclideanBall

HALF_PI = math.pi / 2.0


def test_criterion_1_surface_mass():
    t0 = time.monotonic()
    val = sphere_quadrature(lambda psi: 1.0, 0.0, HALF_PI)
    elapsed = time.monotonic() - t0
    rel = abs(val - FOUR_PI_SQ) / FOUR_PI_SQ
    assert rel <= 1e-9
    assert elapsed < 1.0
    print(f"[PASS] criterion 1: surface mass rel err {rel:.2e} in {elapsed:.3f}s")


def test_criterion_2_density_mass():
    total = sphere_quadrature(density_pinf_psi, 0.0, HALF_PI)
    rel_total = abs(total - EIGHT_PI_SQ) / EIGHT_PI_SQ
    assert rel_total <= 1e-9
    closed = sector_mass_pinf(math.pi / 4.0)
    assert closed == pytest.approx(FOUR_PI_SQ, rel=1e-14)
    quad = sphere_quadrature(density_pinf_psi, 0.0, math.pi / 4.0)
    rel_sector = abs(closed - quad) / closed
    assert rel_sector <= 1e-9
    print(f"[PASS] criterion 2: density total rel err {rel_total:.2e}, "
          f"quarter-sector closed-vs-quadrature {rel_sector:.2e}")


def test_criterion_3_total_mass_formula():
    assert total_mass(1.0) == pytest.approx(EIGHT_PI_SQ * 0.5, rel=1e-14)
    assert total_mass(2.0) == pytest.approx(EIGHT_PI_SQ * math.pi / 4.0, rel=1e-12)
    assert total_mass(math.inf) == pytest.approx(EIGHT_PI_SQ, rel=1e-14)
    worst = 0.0
    for q in (1.0, 1.5, 2.0, 3.0, math.inf):
        closed = LqBody(q=q, d=2).volume()
        quad = lq_volume_quadrature(q, d=2)
        worst = max(worst, abs(closed - quad) / closed)
    assert worst <= 1e-8
    print(f"[PASS] criterion 3: volume closed-vs-quadrature worst rel err {worst:.2e}")


def test_criterion_4_closed_form_seams():
    v11 = v_pinf_ball((1.0, 1.0))
    assert abs(v11 - math.log(2.0)) <= 1e-15
    v02 = v_pinf_ball((0.0, math.sqrt(2.0)))
    assert abs(v02 - 0.5 * math.log(2.0)) <= 1e-15
    worst = 0.0
    seam = math.sqrt(0.5)
    for t in np.linspace(seam, 40.0, 500):
        for z in ((seam, t), (t, seam)):
            branches = v_pinf_ball_branches(z, slack=1e-9)
            assert len(branches) >= 2
            vals = [v for _, v in branches]
            worst = max(worst, max(vals) - min(vals))
    assert worst <= 1e-12
    print(f"[PASS] criterion 4: values exact, max seam residual {worst:.2e} "
          f"over 1000 seam points")


def test_criterion_5_envelope_convergence():
    t0 = time.monotonic()
    finals = {}
    for q, closed in ((math.inf, ClosedFormPInfBall()), (1.0, ClosedFormP1Ball())):
        profile = convergence_profile(LqBody(q=q, d=2), EuclideanBall(1.0),
                                      closed.eval_radial)
        errs = [e for _, e in profile]
        assert all(b <= a + 1e-12 for a, b in zip(errs, errs[1:])), \
            f"q={q}: ladder {errs} not non-increasing"
        assert errs[-1] <= 0.05
        finals[q] = errs[-1]
    elapsed = time.monotonic() - t0
    assert elapsed < 30.0
    print(f"[PASS] criterion 5: sup errors at n=64: square {finals[math.inf]:.2e}, "
          f"simplex {finals[1.0]:.2e}, in {elapsed:.1f}s")


def test_criterion_6_toric_mass_oracle():
    t0 = time.monotonic()
    env = build_envelope(LqBody(q=math.inf, d=2), EuclideanBall(1.0), 64)
    quarter = gradient_image_sector_mass(env, 0.0, math.pi / 4.0)
    rel_quarter = abs(quarter - FOUR_PI_SQ) / FOUR_PI_SQ
    assert rel_quarter <= 1e-2
    worst = 0.0
    for q in (1.0, 2.0, math.inf):
        report = sector_mass_report(q, n=64, sectors=32)
        assert all(m > 0.0 for m in report.masses()), \
            f"q={q}: not all 32 sector masses strictly positive"
        rel = abs(report.total - report.expected_total) / report.expected_total
        worst = max(worst, rel)
    assert worst <= 1e-2
    elapsed = time.monotonic() - t0
    assert elapsed < 120.0
    print(f"[PASS] criterion 6: quarter-sector rel err {rel_quarter:.2e}, "
          f"worst 32-sector total rel err {worst:.2e}, all sectors positive, "
          f"in {elapsed:.1f}s")


def test_criterion_7_measure_monotonicity():
    psi_grid = np.linspace(math.pi / 32.0, HALF_PI - math.pi / 32.0, 20)
    worst = math.inf
    for qa, qb in ((1.0, 2.0), (2.0, 4.0), (4.0, math.inf)):
        fa = [numeric_density(qa, 64, float(p)) for p in psi_grid]
        fb = [numeric_density(qb, 64, float(p)) for p in psi_grid]
        margin = min(b - a for a, b in zip(fa, fb))
        assert margin >= -0.05, f"({qa},{qb}): margin {margin:.4f}"
        worst = min(worst, margin)
    # analytic pair (1, inf): f_1 = 1 <= 1/max(|z1|,|z2|)^4 pointwise
    floor = min(density_pinf_psi(float(p))
                for p in np.linspace(0.0, HALF_PI, 2001))
    assert floor >= 1.0
    print(f"[PASS] criterion 7: worst density margin {worst:.4f} >= -0.05, "
          f"analytic pair floor {floor:.6f} >= 1")


def test_criterion_8_sandwich_and_equality():
    worst = max(equality_case_residual(C) for C in (0.5, 1.0, 3.0))
    assert worst <= 1e-12
    m, M = sandwich_constants(LqBody(q=math.inf, d=2), ClosedFormPInfBall(),
                              math.e)
    assert math.isfinite(m) and math.isfinite(M)
    assert 0.0 < m <= M
    print(f"[PASS] criterion 8: max equality residual {worst:.2e}, "
          f"square sandwich constants m={m:.6f}, M={M:.6f}")


def test_criterion_9_form_calculus():
    golden = math.pi * (3.0 - math.sqrt(5.0))
    worst = 0.0
    for k in range(50):
        psi = 0.15 + (HALF_PI - 0.3) * (k + 0.5) / 50.0
        a, b = (golden * k) % (2 * math.pi), (golden * k * k) % (2 * math.pi)
        z = (math.cos(psi) * complex(math.cos(a), math.sin(a)),
             math.sin(psi) * complex(math.cos(b), math.sin(b)))
        got = reduce_boundary_form(wedge_form(z))
        want = 4.0 / abs(z[1]) ** 4
        worst = max(worst, abs(got - want) / want)
    assert worst <= 1e-12
    rng = np.random.default_rng(7)
    worst_fd = 0.0
    for _ in range(20):
        r = 0.05 + 0.8 * rng.random()
        arg = 2.0 * math.pi * rng.random()
        z1 = r * complex(math.cos(arg), math.sin(arg))
        closed = ddc_u_coefficient(z1)
        worst_fd = max(worst_fd, abs(ddc_u_coefficient_fd(z1, h=1e-4) - closed)
                       / closed)
    assert worst_fd <= 1e-5
    print(f"[PASS] criterion 9: wedge reduction rel err {worst:.2e} at 50 "
          f"sphere points, Hessian FD rel err {worst_fd:.2e}")
