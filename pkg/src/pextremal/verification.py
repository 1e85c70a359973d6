"""Named invariant checks over the whole package.

Each check is a small self-contained experiment returning pass/fail and
a one-line detail.  The registry backs ``pextremal verify`` and the
property layer of the test suite; checks avoid shared state so they can
run individually and in any order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .convex_body import LqBody, Polytope, lq_volume_quadrature
from .extremal import (
    CONVERGENCE_DEGREES,
    ClosedFormP1Ball,
    ClosedFormPInfBall,
    build_envelope,
    convergence_profile,
    equality_case_residual,
    exterior_test_points,
    make_evaluator,
    relative_extremal_ball,
    sandwich_constants,
    v_p1_ball,
    v_pinf_ball,
    v_pinf_ball_branches,
)
from .monge_ampere import (
    EIGHT_PI_SQ,
    FOUR_PI_SQ,
    BoundaryForm3,
    ddc_u_coefficient,
    ddc_u_coefficient_fd,
    density_pinf_psi,
    gradient_image_sector_mass,
    measure_monotonicity_check,
    numeric_density,
    reduce_boundary_form,
    sector_mass_pinf,
    sector_mass_report,
    sphere_quadrature,
    total_mass,
    wedge_density,
    wedge_form,
)
from .quadrature import integrate
from .reinhardt import EuclideanBall, TorusProfile, monomial_norm_ball_closed

HALF_PI = math.pi / 2.0


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


_REGISTRY: dict = {}


def _check(name):
    def deco(fn):
        _REGISTRY[name] = fn
        return fn
    return deco


def check_names():
    return list(_REGISTRY)


def run_checks(names=None):
    """Run the named checks (all by default) and collect results."""
    if names is None:
        names = check_names()
    results = []
    for name in names:
        try:
            passed, detail = _REGISTRY[name]()
        except Exception as exc:  # a crashed check is a failed check
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        results.append(CheckResult(name=name, passed=bool(passed), detail=detail))
    return results


# ---------------------------------------------------------------------------
# convex bodies
# ---------------------------------------------------------------------------

def _lq_boundary_samples(q, count=200001):
    u = np.linspace(0.0, 1.0, count)
    return np.stack([u ** (1.0 / q), (1.0 - u) ** (1.0 / q)], axis=1)


@_check("support-function-sup-oracle")
def _support_oracle():
    worst = 0.0
    xs = [(1.0, 0.0), (3.0, 4.0), (0.3, -2.0), (-1.0, -1.0), (2.0, 0.7)]
    for q in (1.0, 1.5, 2.0, 3.0):
        body = LqBody(q=q, d=2)
        samples = _lq_boundary_samples(q)
        for x in xs:
            sup = float((samples @ np.asarray(x)).max(initial=0.0))
            phi = body.support_function(x)
            if phi < sup - 1e-12:
                return False, f"support below boundary samples at q={q}, x={x}"
            worst = max(worst, phi - sup)
    body = LqBody(q=math.inf, d=2)
    verts = np.array([[0, 0], [1, 0], [0, 1], [1, 1]], dtype=float)
    for x in xs:
        sup = float((verts @ np.asarray(x)).max())
        if abs(body.support_function(x) - sup) > 1e-12:
            return False, f"square support mismatch at x={x}"
    return worst <= 1e-6, f"max sup-oracle gap {worst:.3e}"


@_check("support-function-homogeneity")
def _support_homogeneity():
    worst = 0.0
    for q in (1.0, 2.0, math.inf):
        body = LqBody(q=q, d=2)
        for x in [(1.0, 2.0), (-0.5, 3.0), (0.0, -1.0)]:
            base = body.support_function(x)
            for lam in (0.5, 2.0, 7.25):
                scaled = body.support_function((lam * x[0], lam * x[1]))
                worst = max(worst, abs(scaled - lam * base))
    return worst <= 1e-12, f"max homogeneity defect {worst:.3e}"


@_check("volume-dual-route")
def _volume_dual():
    worst = 0.0
    for q in (1.0, 1.5, 2.0, 3.0, math.inf):
        closed = LqBody(q=q, d=2).volume()
        quad = lq_volume_quadrature(q, d=2)
        worst = max(worst, abs(closed - quad) / closed)
    return worst <= 1e-8, f"max closed-vs-quadrature volume rel err {worst:.3e}"


@_check("lattice-count-oracle")
def _lattice_counts():
    def rows(q, n):
        if q == math.inf:
            return (n + 1) ** 2
        if q == 1.0:
            return (n + 1) * (n + 2) // 2
        # q = 2: integer row heights, exact integer arithmetic
        return sum(math.isqrt(n * n - j * j) + 1 for j in range(n + 1))

    for q in (1.0, 2.0, math.inf):
        body = LqBody(q=q, d=2)
        for n in (1, 3, 8, 17, 33, 50):
            got = len(body.lattice_points(n).points)
            want = rows(q, n)
            if got != want:
                return False, f"q={q}, n={n}: counted {got}, oracle {want}"
    return True, "lattice counts match row oracles for q in {1,2,inf}, n <= 50"


@_check("polytope-membership")
def _polytope_membership():
    tri = Polytope(vertices=((0.0, 0.0), (1.0, 0.0), (0.0, 1.0)))
    inside = [(0.0, 0.0), (1.0, 0.0), (0.5, 0.5), (0.25, 0.25)]
    outside = [(0.51, 0.51), (1.0, 1.0), (1.5, 0.0)]
    if not all(tri.contains(p) for p in inside):
        return False, "triangle rejects a boundary/interior point"
    if any(tri.contains(p) for p in outside):
        return False, "triangle accepts an exterior point"
    seg = Polytope(vertices=((0.0, 0.0), (1.0, 1.0)))
    if not seg.contains((0.5, 0.5)) or seg.contains((0.5, 0.6)):
        return False, "degenerate segment membership wrong"
    return True, "H-rep and LP fallback membership agree with geometry"


@_check("scaling-constant-examples")
def _scaling_examples():
    cases = [
        (LqBody(q=2.0, d=2), 1),
        (Polytope(vertices=((0.0, 0.0), (1.0, 0.0), (0.0, 1.0))), 1),
        (Polytope(vertices=((0.0, 0.0), (0.5, 0.0), (0.0, 0.5))), 2),
        (Polytope(vertices=((0.0, 0.0), (0.4, 0.0), (0.0, 0.4))), 3),
    ]
    for body, want in cases:
        got = body.scaling_constant()
        if got != want:
            return False, f"{body!r}: scaling constant {got}, expected {want}"
    return True, "integer scalings match hand values"


# ---------------------------------------------------------------------------
# compacts and monomial norms
# ---------------------------------------------------------------------------

@_check("monomial-norm-dual-route")
def _monomial_dual():
    ball = EuclideanBall(1.0)
    worst = 0.0
    for j1 in range(0, 101, 7):
        for j2 in range(0, 101 - j1, 7):
            golden = ball.monomial_norm((j1, j2))
            closed = monomial_norm_ball_closed((j1, j2))
            scale = max(closed, 1e-300)
            worst = max(worst, abs(golden - closed) / scale)
    return worst <= 1e-10, f"max golden-vs-closed norm rel err {worst:.3e}"


@_check("monomial-norm-submultiplicative")
def _monomial_submul():
    ball = EuclideanBall(1.0)
    pairs = [((1, 2), (3, 1)), ((5, 0), (0, 4)), ((2, 2), (2, 2)), ((7, 3), (1, 6))]
    for a, b in pairs:
        joint = ball.monomial_norm((a[0] + b[0], a[1] + b[1]))
        split = ball.monomial_norm(a) * ball.monomial_norm(b)
        if joint > split * (1.0 + 1e-12):
            return False, f"norm of {a}+{b} exceeds product of norms"
    return True, "sup norms submultiplicative on sample exponent pairs"


@_check("monomial-norm-radius-scaling")
def _monomial_scaling():
    unit = EuclideanBall(1.0)
    worst = 0.0
    for radius in (0.5, 2.0, 3.7):
        ball = EuclideanBall(radius)
        for J in ((0, 0), (3, 4), (10, 1)):
            want = unit.monomial_norm(J) * radius ** (J[0] + J[1])
            got = ball.monomial_norm(J)
            worst = max(worst, abs(got - want) / want)
    return worst <= 1e-12, f"max radius-scaling rel err {worst:.3e}"


@_check("torus-profile-matches-ball")
def _profile_matches_ball():
    psis = np.linspace(0.0, HALF_PI, 2049)
    profile = TorusProfile(samples=tuple(
        (float(p), float(np.cos(p)), float(np.sin(p))) for p in psis))
    worst = 0.0
    for J in ((3, 4), (7, 2), (10, 10)):
        got = profile.monomial_norm(J)
        want = monomial_norm_ball_closed(J)
        worst = max(worst, abs(got - want) / want)
    return worst <= 1e-5, f"max sampled-profile norm rel err {worst:.3e}"


@_check("torus-profile-rejections")
def _profile_rejections():
    try:
        TorusProfile(samples=((0.0, 0.5, 0.0), (0.8, 1.0, 0.7), (HALF_PI, 1.0, 1.0)))
        return False, "increasing r1 profile was accepted"
    except ValueError:
        pass
    psis = [0.0, 0.3, 0.6, 0.9, 1.2, HALF_PI]
    lr1 = [0.0, -0.01, -0.5, -0.51, -1.5, -3.0]
    lr2 = [-3.0, -1.5, -1.45, -0.6, -0.02, 0.0]
    samples = tuple((p, math.exp(a), math.exp(b))
                    for p, a, b in zip(psis, lr1, lr2))
    try:
        TorusProfile(samples=samples)
        return False, "bimodal profile objective was accepted"
    except ValueError:
        return True, "monotonicity and bimodality rejections both fire"


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------

@_check("quadrature-polynomial-exactness")
def _quad_poly():
    worst = 0.0
    for k in range(14):
        val, _ = integrate(lambda t, k=k: t ** k, 0.0, 1.0)
        worst = max(worst, abs(val - 1.0 / (k + 1)))
    return worst <= 1e-14, f"max monomial integral error {worst:.3e}"


@_check("quadrature-reference-integrals")
def _quad_reference():
    val, _ = integrate(math.exp, 0.0, 1.0)
    if abs(val - (math.e - 1.0)) > 1e-13:
        return False, f"exp integral off by {abs(val - (math.e - 1.0)):.3e}"
    val, _ = integrate(math.sin, 0.0, 10.0 * math.pi)
    if abs(val) > 1e-12:
        return False, f"oscillatory integral {val:.3e} not cancelled"
    val, _ = integrate(lambda t: 1.0 / math.sqrt(t) if t > 0 else 0.0, 0.0, 1.0)
    if abs(val - 2.0) > 1e-7:
        return False, f"endpoint-singular integral off by {abs(val - 2.0):.3e}"
    return True, "exp, oscillatory and singular references reproduced"


# ---------------------------------------------------------------------------
# extremal functions
# ---------------------------------------------------------------------------

@_check("closed-form-values")
def _closed_values():
    checks = [
        (v_pinf_ball((1.0, 1.0)), math.log(2.0)),
        (v_pinf_ball((0.0, math.sqrt(2.0))), 0.5 * math.log(2.0)),
        (v_pinf_ball((0.3, 0.4)), 0.0),
        (v_p1_ball((0.0, math.e)), 1.0),
        (v_p1_ball((0.6, 0.7)), 0.0),
    ]
    worst = max(abs(got - want) for got, want in checks)
    return worst <= 1e-15, f"max closed-form value error {worst:.3e}"


@_check("seam-residuals")
def _seams():
    worst = 0.0
    for t in np.linspace(math.sqrt(0.5), 40.0, 1000):
        for z in ((math.sqrt(0.5), t), (t, math.sqrt(0.5))):
            branches = v_pinf_ball_branches(z, slack=1e-9)
            if len(branches) < 2:
                return False, f"only one branch applies at seam point {z}"
            vals = [v for _, v in branches]
            worst = max(worst, max(vals) - min(vals))
    return worst <= 1e-12, f"max seam branch disagreement {worst:.3e}"


@_check("envelope-below-closed-form")
def _envelope_below():
    r1, r2 = exterior_test_points()
    worst = -math.inf
    for q, closed in ((math.inf, ClosedFormPInfBall()), (1.0, ClosedFormP1Ball())):
        env = build_envelope(LqBody(q=q, d=2), EuclideanBall(1.0), 32)
        gap = closed.eval_radial(r1, r2) - env.eval_radial(r1, r2)
        worst = max(worst, float(-gap.min()))
    return worst <= 1e-12, f"max envelope excursion above closed form {worst:.3e}"


@_check("envelope-doubling-monotone")
def _envelope_doubling():
    r1, r2 = exterior_test_points()
    worst = -math.inf
    for q in (1.0, 2.0, math.inf):
        body = LqBody(q=q, d=2)
        vals = [build_envelope(body, EuclideanBall(1.0), n).eval_radial(r1, r2)
                for n in (8, 16, 32)]
        for lo, hi in zip(vals, vals[1:]):
            worst = max(worst, float((lo - hi).max()))
    return worst <= 1e-12, f"max doubling monotonicity defect {worst:.3e}"


@_check("envelope-body-monotone")
def _envelope_bodies():
    r1, r2 = exterior_test_points()
    envs = [build_envelope(LqBody(q=q, d=2), EuclideanBall(1.0), 16).eval_radial(r1, r2)
            for q in (1.0, 2.0, math.inf)]
    worst = max(float((lo - hi).max()) for lo, hi in zip(envs, envs[1:]))
    return worst <= 1e-12, f"max body-nesting defect {worst:.3e}"


@_check("envelope-compact-antitone")
def _envelope_compacts():
    r1, r2 = exterior_test_points(s_min=1.5)
    body = LqBody(q=2.0, d=2)
    small = build_envelope(body, EuclideanBall(1.0), 16)
    large = build_envelope(body, EuclideanBall(1.2), 16)
    gap = small.eval_radial(r1, r2) - large.eval_radial(r1, r2)
    worst = float(-gap.min())
    return worst <= 1e-12, f"max compact-nesting defect {worst:.3e}"


@_check("convergence-ladder")
def _ladder():
    final = []
    for q, closed in ((math.inf, ClosedFormPInfBall()), (1.0, ClosedFormP1Ball())):
        profile = convergence_profile(LqBody(q=q, d=2), EuclideanBall(1.0),
                                      closed.eval_radial)
        errs = [e for _, e in profile]
        if any(b > a + 1e-12 for a, b in zip(errs, errs[1:])):
            return False, f"q={q} ladder not monotone: {errs}"
        final.append(errs[-1])
    top = max(final)
    return top <= 0.05, f"final sup errors {final[0]:.2e}, {final[1]:.2e} at n={CONVERGENCE_DEGREES[-1]}"


@_check("sandwich-constants-frozen")
def _sandwich_frozen():
    m1, sm1 = sandwich_constants(LqBody(q=1.0, d=2), ClosedFormP1Ball(), math.e)
    if abs(m1 - 1.0) > 1e-9 or abs(sm1 - 1.0) > 1e-9:
        return False, f"simplex R=e constants {(m1, sm1)} differ from (1, 1)"
    m2, sm2 = sandwich_constants(LqBody(q=1.0, d=2), ClosedFormP1Ball(), math.e ** 2)
    if abs(m2 - 2.0) > 1e-9 or abs(sm2 - 2.0) > 1e-9:
        return False, f"simplex R=e^2 constants {(m2, sm2)} differ from (2, 2)"
    mi, smi = sandwich_constants(LqBody(q=math.inf, d=2), ClosedFormPInfBall(), math.e)
    if abs(mi - 1.0) > 1e-9 or abs(smi - 1.999872860948802) > 1e-9:
        return False, f"square R=e constants {(mi, smi)} moved from frozen values"
    return True, "sandwich constants reproduce frozen values"


@_check("equality-case-residuals")
def _equality_case():
    worst = max(equality_case_residual(c) for c in (0.5, 1.0, 3.0))
    return worst <= 1e-12, f"max equality-case residual {worst:.3e}"


@_check("relative-extremal-range")
def _relative_range():
    r, R = 1.0, math.e
    radii = np.linspace(0.0, R, 200)
    vals = [relative_extremal_ball(r, R, (s, 0.0)) for s in radii]
    if any(v < -1.0 - 1e-15 or v > 1e-15 for v in vals):
        return False, "relative extremal escapes [-1, 0]"
    if any(b < a - 1e-15 for a, b in zip(vals, vals[1:])):
        return False, "relative extremal not radially monotone"
    mid = relative_extremal_ball(r, R, (math.sqrt(math.e), 0.0))
    if abs(mid - (-0.5)) > 1e-12:
        return False, f"midpoint value {mid} differs from -1/2"
    return True, "range, monotonicity and midpoint value all hold"


@_check("growth-class-bounds")
def _class_bounds():
    r1, r2 = exterior_test_points(n_psi=40, n_s=40)
    for q, closed, bound in ((math.inf, ClosedFormPInfBall(), math.log(2.0)),
                             (1.0, ClosedFormP1Ball(), 0.5 * math.log(2.0))):
        body = LqBody(q=q, d=2)
        vals = closed.eval_radial(r1, r2)
        top = max(v - body.log_indicator((a, b))
                  for a, b, v in zip(r1, r2, vals))
        if top > bound + 1e-9:
            return False, f"q={q}: V - H reaches {top:.12f} above bound {bound:.12f}"
    return True, "V <= H + c with c = log 2 (square), (log 2)/2 (simplex)"


# ---------------------------------------------------------------------------
# boundary measures
# ---------------------------------------------------------------------------

@_check("sphere-surface-mass")
def _sphere_mass():
    val = sphere_quadrature(lambda psi: 1.0, 0.0, HALF_PI)
    rel = abs(val - FOUR_PI_SQ) / FOUR_PI_SQ
    half = sphere_quadrature(lambda psi: 1.0, 0.0, math.pi / 4.0)
    sym = abs(2.0 * half - FOUR_PI_SQ) / FOUR_PI_SQ
    return rel <= 1e-9 and sym <= 1e-9, (
        f"surface mass rel err {rel:.3e}, half-sector symmetry {sym:.3e}")


@_check("density-total-mass")
def _density_total():
    total = sphere_quadrature(density_pinf_psi, 0.0, HALF_PI)
    rel = abs(total - EIGHT_PI_SQ) / EIGHT_PI_SQ
    half = sphere_quadrature(density_pinf_psi, 0.0, math.pi / 4.0)
    sym = abs(2.0 * half - EIGHT_PI_SQ) / EIGHT_PI_SQ
    return rel <= 1e-9 and sym <= 1e-9, (
        f"f_inf total rel err {rel:.3e}, half-mass symmetry {sym:.3e}")


@_check("sector-mass-closed-vs-quadrature")
def _sector_closed():
    worst = 0.0
    for psi0 in (math.pi / 8.0, math.pi / 4.0, 3.0 * math.pi / 8.0, HALF_PI - 0.1):
        closed = sector_mass_pinf(psi0)
        quad = sphere_quadrature(density_pinf_psi, 0.0, psi0)
        worst = max(worst, abs(closed - quad) / closed)
    return worst <= 1e-9, f"max sector closed-vs-quadrature rel err {worst:.3e}"


@_check("density-symmetry-and-extremes")
def _density_shape():
    psis = np.linspace(1e-3, HALF_PI - 1e-3, 301)
    vals = np.array([density_pinf_psi(p) for p in psis])
    sym = max(abs(density_pinf_psi(p) - density_pinf_psi(HALF_PI - p))
              for p in psis[:150])
    if sym > 1e-12:
        return False, f"density asymmetry {sym:.3e}"
    if vals.min() < 1.0 - 1e-12:
        return False, f"density minimum {vals.min()} below 1"
    peak = density_pinf_psi(math.pi / 4.0)
    if abs(peak - 4.0) > 1e-12:
        return False, f"density peak {peak} differs from 4"
    return True, "density symmetric, >= 1, peak 4 on the diagonal"


@_check("total-mass-monotone-in-q")
def _total_mass_monotone():
    qs = (1.0, 1.5, 2.0, 3.0, math.inf)
    masses = [total_mass(q) for q in qs]
    if any(b <= a for a, b in zip(masses, masses[1:])):
        return False, f"total masses not increasing: {masses}"
    if abs(masses[0] - FOUR_PI_SQ) > 1e-9 or abs(masses[-1] - EIGHT_PI_SQ) > 1e-9:
        return False, "endpoint masses differ from 4 pi^2 and 8 pi^2"
    return True, "total mass strictly increasing from 4 pi^2 to 8 pi^2"


def _sphere_points(count, lo=0.15, hi=HALF_PI - 0.15):
    golden = math.pi * (3.0 - math.sqrt(5.0))
    pts = []
    for k in range(count):
        psi = lo + (hi - lo) * (k + 0.5) / count
        a, b = (golden * k) % (2 * math.pi), (golden * k * k) % (2 * math.pi)
        pts.append((math.cos(psi) * complex(math.cos(a), math.sin(a)),
                    math.sin(psi) * complex(math.cos(b), math.sin(b))))
    return pts


@_check("boundary-form-reduction-linearity")
def _reduction_linearity():
    rng = np.random.default_rng(20260814)
    worst = 0.0
    for z in _sphere_points(10):
        a1, b1, a2, b2 = (complex(*rng.normal(size=2)) for _ in range(4))
        f1 = BoundaryForm3(a=a1, b=b1, z=z)
        f2 = BoundaryForm3(a=a2, b=b2, z=z)
        lam = float(rng.normal())
        lhs = reduce_boundary_form(f1 + lam * f2)
        rhs = reduce_boundary_form(f1) + lam * reduce_boundary_form(f2)
        scale = max(abs(lhs), abs(rhs), 1.0)
        worst = max(worst, abs(lhs - rhs) / scale)
    return worst <= 1e-14, f"max linearity defect {worst:.3e}"


@_check("wedge-reduction-closed-form")
def _wedge_closed():
    worst = 0.0
    for z in _sphere_points(50):
        form = wedge_form(z)
        if not form.is_real():
            return False, f"wedge coefficient form not real at {z}"
        got = wedge_density(z)
        want = 1.0 / abs(z[1]) ** 4
        worst = max(worst, abs(got - want) / want)
    return worst <= 1e-12, f"max wedge-vs-closed density rel err {worst:.3e}"


@_check("hessian-coefficient-fd")
def _hessian_fd():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(20):
        r = 0.05 + 0.8 * rng.random()
        arg = 2.0 * math.pi * rng.random()
        z1 = r * complex(math.cos(arg), math.sin(arg))
        closed = ddc_u_coefficient(z1)
        fd = ddc_u_coefficient_fd(z1)
        worst = max(worst, abs(fd - closed) / closed)
    return worst <= 1e-5, f"max finite-difference Hessian rel err {worst:.3e}"


@_check("toric-sector-oracle")
def _toric_oracle():
    env = build_envelope(LqBody(q=math.inf, d=2), EuclideanBall(1.0), 64)
    got = gradient_image_sector_mass(env, 0.0, math.pi / 4.0)
    rel = abs(got - FOUR_PI_SQ) / FOUR_PI_SQ
    return rel <= 1e-2, f"[0, pi/4] gradient-image mass rel err {rel:.3e}"


@_check("sector-mass-conservation")
def _sector_conservation():
    worst = 0.0
    for q in (1.0, 2.0, math.inf):
        report = sector_mass_report(q)
        if min(report.masses()) <= 0.0:
            return False, f"q={q}: a sector mass is not strictly positive"
        rel = abs(report.total - report.expected_total) / report.expected_total
        worst = max(worst, rel)
    return worst <= 1e-2, f"max 32-sector total rel err {worst:.3e}"


@_check("sector-mass-additivity")
def _sector_additivity():
    env = build_envelope(LqBody(q=math.inf, d=2), EuclideanBall(1.0), 64)
    a = gradient_image_sector_mass(env, 0.1, 0.5)
    b = gradient_image_sector_mass(env, 0.5, 0.9)
    c = gradient_image_sector_mass(env, 0.1, 0.9)
    rel = abs(a + b - c) / c
    return rel <= 1e-12, f"split-vs-joint sector mass rel err {rel:.3e}"


@_check("numeric-density-regressions")
def _density_regressions():
    got = numeric_density(2.0, 64, math.pi / 4.0)
    if abs(got - 1.977050867038529) > 1e-9:
        return False, f"q=2 diagonal density {got!r} moved from frozen value"
    off = numeric_density(math.inf, 64, math.pi / 8.0)
    rel = abs(off - density_pinf_psi(math.pi / 8.0)) / density_pinf_psi(math.pi / 8.0)
    return rel <= 5e-3, f"q=inf off-diagonal density rel err {rel:.3e}"


@_check("measure-monotonicity")
def _measure_monotone():
    worst = math.inf
    for qa, qb in ((1.0, 2.0), (2.0, 4.0), (4.0, math.inf)):
        report = measure_monotonicity_check(qa, qb)
        if not report.passed:
            return False, f"({qa}, {qb}): margin {min(report.margins):.4f} below -0.05"
        worst = min(worst, min(report.margins))
    floor = min(density_pinf_psi(p) for p in np.linspace(1e-3, HALF_PI - 1e-3, 200))
    if floor < 1.0 - 1e-15:
        return False, f"analytic f_inf dips to {floor} below f_1 = 1"
    return True, f"density margins >= {worst:.4f}; analytic f_1 <= f_inf holds"
