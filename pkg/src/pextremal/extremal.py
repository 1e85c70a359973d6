"""Extremal growth envelopes for circled compacts in C^2.

For a convex body P in the positive orthant and a compact K, the
P-extremal function is the upper envelope of plurisubharmonic functions
that are nonpositive on K and grow no faster than the logarithmic
indicator H_P.  Closed forms are known when K is the unit Euclidean
ball and P is either the unit square (q = inf) or the standard simplex
(q = 1); every other pairing here is approximated from below by the
normalized monomial envelope

    (1/n) max over J in nP of log ( |z^J| / ||z^J||_K ),

whose defect against the closed forms shrinks as the degree n grows.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .convex_body import ConvexBody, LqBody
from .reinhardt import EuclideanBall, ReinhardtCompact

HALF_PI = math.pi / 2.0

# pairwise agreement demanded of overlapping closed-form branches
SEAM_TOL = 1e-12


def _moduli(z):
    if len(z) != 2:
        raise ValueError("expected a point of C^2")
    return abs(z[0]), abs(z[1])


# ---------------------------------------------------------------------------
# closed forms on the unit ball
# ---------------------------------------------------------------------------

def v_pinf_ball_branches(z, slack: float = 0.0):
    """Applicable closed-form branches at z for the unit-square body.

    Returns a list of (name, value) pairs for every branch whose closed
    condition holds at z (the point must satisfy |z|^2 >= 1).  On the
    seams two branches apply and must agree; tests exercise this.  The
    slack widens the branch conditions so that points rounded off a seam
    by floating point still report both formulas; branch values differ
    by O(slack^2) inside the widened overlap.
    """
    r1, r2 = _moduli(z)
    s1, s2 = r1 * r1, r2 * r2
    if s1 + s2 < 1.0:
        raise ValueError("branch formulas apply outside the open unit ball only")
    out = []
    if s1 <= 0.5 + slack and s2 >= 0.5 - slack:
        out.append(("low-z1", 0.5 * (math.log(s2) - math.log1p(-s1))))
    if s1 >= 0.5 - slack and s2 <= 0.5 + slack:
        out.append(("low-z2", 0.5 * (math.log(s1) - math.log1p(-s2))))
    if s1 >= 0.5 - slack and s2 >= 0.5 - slack:
        out.append(("bidirectional", math.log(r1) + math.log(r2) + math.log(2.0)))
    return out


def v_pinf_ball(z) -> float:
    """Extremal function of (unit square, unit ball) in closed form.

    Zero on the closed ball; outside, the three-branch formula applies.
    All branches whose conditions hold are evaluated and must agree to
    within SEAM_TOL, guarding the seams |z_i|^2 = 1/2.
    """
    r1, r2 = _moduli(z)
    if r1 * r1 + r2 * r2 <= 1.0:
        return 0.0
    branches = v_pinf_ball_branches(z)
    first = branches[0][1]
    for name, val in branches[1:]:
        if abs(val - first) > SEAM_TOL:
            raise ArithmeticError(
                f"closed-form branches disagree at {z}: "
                f"{branches[0][0]}={first!r}, {name}={val!r}")
    return first


def v_pinf_radial(r1, r2):
    """Vectorized v_pinf_ball on moduli arrays (no per-point seam checks)."""
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    s1 = r1 * r1
    s2 = r2 * r2
    out = np.zeros(np.broadcast(r1, r2).shape)
    outside = s1 + s2 > 1.0
    with np.errstate(divide="ignore", invalid="ignore"):
        case1 = outside & (s1 <= 0.5)
        out = np.where(case1, 0.5 * (np.log(s2) - np.log1p(-s1)), out)
        case2 = outside & (s2 <= 0.5)
        out = np.where(case2, 0.5 * (np.log(s1) - np.log1p(-s2)), out)
        case3 = outside & (s1 > 0.5) & (s2 > 0.5)
        out = np.where(case3, 0.5 * np.log(s1) + 0.5 * np.log(s2) + math.log(2.0), out)
    return out


def v_p1_ball(z) -> float:
    """Extremal function of (simplex, unit ball): log^+ |z|."""
    r1, r2 = _moduli(z)
    s = r1 * r1 + r2 * r2
    if s <= 1.0:
        return 0.0
    return 0.5 * math.log(s)


def v_p1_radial(r1, r2):
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    s = r1 * r1 + r2 * r2
    with np.errstate(divide="ignore"):
        return np.where(s > 1.0, 0.5 * np.log(s), 0.0)


class ClosedFormPInfBall:
    """Evaluator facade over v_pinf_ball with a vector path."""

    def __call__(self, z) -> float:
        return v_pinf_ball(z)

    def eval_radial(self, r1, r2):
        return v_pinf_radial(r1, r2)


class ClosedFormP1Ball:
    def __call__(self, z) -> float:
        return v_p1_ball(z)

    def eval_radial(self, r1, r2):
        return v_p1_radial(r1, r2)


# ---------------------------------------------------------------------------
# monomial envelope
# ---------------------------------------------------------------------------

class MonomialEnvelope:
    """Normalized monomial lower envelope of degree n for (P, K).

    Holds, for each lattice point J of nP, the exponent pair, the log of
    the monomial sup-norm over K and the maximizing boundary angle.
    Evaluation takes the max of (1/n)(<J, log|z|> - log||z^J||) over the
    table; the J = 0 row contributes 0, so values are never negative.
    Monomials with sup-norm 0 (possible for degenerate profiles) cannot
    be normalized and are dropped with a warning.
    """

    def __init__(self, body, compact, n, exponents, log_norms, psi_max):
        self.body = body
        self.compact = compact
        self.n = int(n)
        self.exponents = exponents
        self.log_norms = log_norms
        self.psi_max = psi_max

    @classmethod
    def build(cls, body: ConvexBody, compact: ReinhardtCompact, n: int):
        if getattr(body, "d", 2) != 2:
            raise ValueError("monomial envelopes are implemented for d = 2 bodies")
        lattice = body.lattice_points(n)
        rows = []
        dropped = 0
        for J in lattice:
            g, psi = compact._log_norm_argmax(J)
            if g == -math.inf:
                dropped += 1
                continue
            rows.append((J[0], J[1], g, psi))
        if dropped:
            warnings.warn(
                f"dropped {dropped} monomials with sup-norm 0 from the degree-{n} "
                "envelope table", RuntimeWarning)
        if not rows:
            raise ValueError("no usable monomials: the compact is degenerate")
        E = np.asarray([(r[0], r[1]) for r in rows], dtype=float)
        L = np.asarray([r[2] for r in rows])
        PSI = np.asarray([r[3] for r in rows])
        return cls(body, compact, n, E, L, PSI)

    @property
    def table(self):
        """List of ((j1, j2), log_norm) rows, J = 0 included."""
        return [((int(j1), int(j2)), float(g))
                for (j1, j2), g in zip(self.exponents, self.log_norms)]

    def __call__(self, z) -> float:
        r1, r2 = _moduli(z)
        return float(self.eval_radial(np.asarray([r1]), np.asarray([r2]))[0])

    def eval_radial(self, r1, r2):
        """Envelope on arrays of moduli; zero moduli restrict the table."""
        r1 = np.asarray(r1, dtype=float)
        r2 = np.asarray(r2, dtype=float)
        b = np.broadcast(r1, r2)
        f1 = np.broadcast_to(r1, b.shape).ravel()
        f2 = np.broadcast_to(r2, b.shape).ravel()
        out = np.empty(f1.shape)
        ok = (f1 > 0.0) & (f2 > 0.0)
        if ok.any():
            out[ok] = self._eval_positive(f1[ok], f2[ok])
        rest = np.nonzero(~ok)[0]
        for i in rest:
            out[i] = self._eval_with_zeros(f1[i], f2[i])
        return out.reshape(b.shape)

    def _eval_positive(self, r1, r2, chunk=1024):
        w = np.stack([np.log(r1), np.log(r2)])  # (2, N)
        out = np.empty(r1.shape)
        for k in range(0, w.shape[1], chunk):
            sl = slice(k, k + chunk)
            terms = (self.exponents @ w[:, sl] - self.log_norms[:, None]) / self.n
            out[sl] = terms.max(axis=0)
        return out

    def _eval_with_zeros(self, r1, r2):
        # monomials with a positive exponent on a vanished coordinate are
        # -inf there and drop out of the max
        keep = np.ones(len(self.exponents), dtype=bool)
        w = np.zeros(2)
        for i, r in enumerate((r1, r2)):
            if r > 0.0:
                w[i] = math.log(r)
            else:
                keep &= self.exponents[:, i] == 0
        if not keep.any():
            return -math.inf
        terms = (self.exponents[keep] @ w - self.log_norms[keep]) / self.n
        return float(terms.max())


@lru_cache(maxsize=64)
def build_envelope(body: ConvexBody, compact: ReinhardtCompact, n: int) -> MonomialEnvelope:
    """Cached envelope builder; bodies and compacts are frozen, hence hashable."""
    return MonomialEnvelope.build(body, compact, n)


def make_evaluator(body: ConvexBody, compact: ReinhardtCompact, n: int = 64):
    """Closed forms where available, monomial envelope otherwise."""
    if isinstance(body, LqBody) and body.d == 2 and \
            isinstance(compact, EuclideanBall) and compact.radius == 1.0:
        if math.isinf(body.q):
            return ClosedFormPInfBall()
        if body.q == 1.0:
            return ClosedFormP1Ball()
    return build_envelope(body, compact, n)


# ---------------------------------------------------------------------------
# relative extremal function of the ball pair, and comparisons
# ---------------------------------------------------------------------------

def relative_extremal_ball(r: float, R: float, z) -> float:
    """Relative extremal function of (ball r, ball R): radially symmetric.

    u(z) = max(-1, log(|z|/R) / log(R/r)) for |z| <= R; -1 on the inner
    ball, 0 on the outer sphere.  Points outside the outer ball are a
    domain error.
    """
    if not 0.0 < r < R:
        raise ValueError("need 0 < r < R")
    r1, r2 = _moduli(z)
    s = math.hypot(r1, r2)
    if s > R * (1.0 + 1e-12):
        raise ValueError(f"point with |z| = {s} lies outside the outer ball")
    if s == 0.0:
        return -1.0
    return max(-1.0, math.log(min(s, R) / R) / math.log(R / r))


@dataclass(frozen=True)
class RadialGrid:
    """Tensor grid in (psi, rho), rho the log of the radial scale."""

    n_psi: int = 100
    n_rho: int = 100
    rho_min: float = 0.0
    rho_max: float = 1.0

    def moduli(self):
        psi = np.linspace(0.0, HALF_PI, self.n_psi)
        rho = np.linspace(self.rho_min, self.rho_max, self.n_rho)
        s = np.exp(rho)
        r1 = np.outer(s, np.cos(psi)).ravel()
        r2 = np.outer(s, np.sin(psi)).ravel()
        return r1, r2

    def log_radii(self):
        rho = np.linspace(self.rho_min, self.rho_max, self.n_rho)
        psi = np.linspace(0.0, HALF_PI, self.n_psi)
        return np.repeat(rho, self.n_psi), np.tile(psi, self.n_rho)


def _interior_annulus_grid(R: float, n_psi: int, n_rho: int) -> RadialGrid:
    # rho strictly inside (0, log R): the ratio V/(u+1) is 0/0 on the
    # unit sphere itself, so the default grid stays off it
    lo = math.log(R) / (n_rho + 1)
    hi = math.log(R) * n_rho / (n_rho + 1)
    return RadialGrid(n_psi=n_psi, n_rho=n_rho, rho_min=lo, rho_max=hi)


def sandwich_constants(body, evaluator, R: float, grid: RadialGrid | None = None):
    """Empirical pinch constants (m, M) for V against u + 1 on an annulus.

    Here u is the relative extremal function of (unit ball, ball R) and
    V the supplied evaluator for the growth body; the quotient
    V / (u + 1) is sampled over the grid between the two spheres.  Both
    returned constants must come out finite and positive, otherwise the
    sampling is degenerate and a ValueError is raised.
    """
    if not R > 1.0:
        raise ValueError("outer radius must exceed 1")
    if grid is None:
        grid = _interior_annulus_grid(R, 100, 100)
    r1, r2 = grid.moduli()
    if hasattr(evaluator, "eval_radial"):
        V = np.asarray(evaluator.eval_radial(r1, r2), dtype=float)
    else:
        V = np.asarray([evaluator((a, b)) for a, b in zip(r1, r2)])
    s = np.hypot(r1, r2)
    if (s <= 1.0).any() or (s > R * (1.0 + 1e-12)).any():
        raise ValueError("sandwich grid must lie strictly between the spheres")
    u_plus_1 = 1.0 + np.log(s / R) / math.log(R)
    ratios = V / u_plus_1
    m = float(np.min(ratios))
    M = float(np.max(ratios))
    if not (math.isfinite(m) and math.isfinite(M) and 0.0 < m <= M):
        raise ValueError(f"degenerate sandwich sampling: m={m}, M={M}")
    return m, M


def equality_case_residual(C: float, grid: RadialGrid | None = None) -> float:
    """Max defect of V_simplex = C (u + 1) on the ball of radius e^C.

    For the simplex body and the unit ball inside the ball of radius
    e^C, the extremal function equals C times (relative extremal + 1)
    exactly; the residual over the grid is numerical noise only.
    """
    if not C > 0.0:
        raise ValueError("C must be positive")
    if grid is None:
        grid = RadialGrid(n_psi=40, n_rho=120, rho_min=-0.5, rho_max=C)
    if grid.rho_max > C * (1.0 + 1e-12):
        raise ValueError("grid must stay inside the ball of radius e^C")
    r1, r2 = grid.moduli()
    V = v_p1_radial(r1, r2)
    R = math.exp(C)
    s = np.hypot(r1, r2)
    u = np.maximum(-1.0, np.where(s > 0.0, np.log(np.maximum(s, 1e-300) / R), -np.inf) / C)
    resid = np.abs(V - C * (u + 1.0))
    return float(np.max(resid))


# ---------------------------------------------------------------------------
# convergence diagnostics
# ---------------------------------------------------------------------------

CONVERGENCE_DEGREES = (4, 8, 16, 32, 64)


def exterior_test_points(n_psi: int = 10, n_s: int = 10,
                         s_min: float = 1.15, s_max: float = 4.0):
    """The fixed exterior grid used for envelope convergence reporting."""
    psi = np.linspace(0.0, HALF_PI, n_psi)
    s = np.geomspace(s_min, s_max, n_s)
    r1 = np.outer(s, np.cos(psi)).ravel()
    r2 = np.outer(s, np.sin(psi)).ravel()
    return r1, r2


def envelope_sup_error(body, compact, n, reference_radial, points=None) -> float:
    """Sup over the test points of reference - envelope (signed defect)."""
    if points is None:
        points = exterior_test_points()
    r1, r2 = points
    env = build_envelope(body, compact, n)
    approx = env.eval_radial(r1, r2)
    ref = reference_radial(r1, r2)
    return float(np.max(ref - approx))


def convergence_profile(body, compact, reference_radial, degrees=CONVERGENCE_DEGREES,
                        points=None):
    """[(n, sup error)] along the doubling ladder of envelope degrees."""
    return [(n, envelope_sup_error(body, compact, n, reference_radial, points))
            for n in degrees]
