"""Torus-invariant compacts in C^2 and their monomial sup-norms.

A circled (Reinhardt) compact is described by its radial boundary
profile psi -> (r_1(psi), r_2(psi)) for psi in [0, pi/2]: the set
contains (z_1, z_2) exactly when (|z_1|, |z_2|) is dominated by some
profile point.  Monomials attain their sup on the outer boundary, so

    ||z^J||_K = max over psi of r_1(psi)^{j_1} * r_2(psi)^{j_2},

a log-concave 1-D maximization solved by golden-section refinement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

HALF_PI = math.pi / 2.0

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0
_INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0

# construction-time scan resolution for the unimodality check, and the
# exponent pairs the scan is run for
_UNIMODAL_SCAN = 4096
_UNIMODAL_PROBES = ((1, 1), (2, 1), (1, 2), (3, 1), (1, 3), (3, 2), (2, 3),
                    (5, 1), (1, 5))

GOLDEN_TOL = 1e-12


def _golden_max(f, a, b, tol=GOLDEN_TOL):
    """Argmax of a unimodal f on [a, b] to within tol; endpoint-free probes."""
    h = b - a
    if h <= tol:
        return 0.5 * (a + b)
    c = a + _INVPHI2 * h
    d = a + _INVPHI * h
    fc = f(c)
    fd = f(d)
    while h > tol:
        h *= _INVPHI
        if fc >= fd:
            b, d, fd = d, c, fc
            c = a + _INVPHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * h
            fd = f(d)
    return 0.5 * (a + b)


def _check_exponents(J):
    j1, j2 = J
    if int(j1) != j1 or int(j2) != j2 or j1 < 0 or j2 < 0:
        raise ValueError(f"monomial exponents must be nonnegative integers, got {J}")
    return int(j1), int(j2)


class ReinhardtCompact:
    """Interface for circled compacts given by a radial boundary profile."""

    def boundary_point(self, psi: float) -> tuple[float, float]:
        """(r_1(psi), r_2(psi)) on the outer boundary, psi in [0, pi/2]."""
        raise NotImplementedError

    def _log_radii(self, psi: float) -> tuple[float, float]:
        r1, r2 = self.boundary_point(psi)
        return (math.log(r1) if r1 > 0.0 else -math.inf,
                math.log(r2) if r2 > 0.0 else -math.inf)

    # -- monomial norms ----------------------------------------------------

    def monomial_norm(self, J) -> float:
        """Sup of |z_1|^{j_1} |z_2|^{j_2} over the compact."""
        g, _ = self._log_norm_argmax(J)
        return math.exp(g) if g > -math.inf else 0.0

    def _log_norm_argmax(self, J) -> tuple[float, float]:
        """(log ||z^J||, maximizing psi).  log-norm is -inf for norm 0.

        Pure-power monomials peak at the ends of the profile (r_1 is
        nonincreasing, r_2 nondecreasing); mixed monomials peak in the
        interior and are located by golden section.
        """
        j1, j2 = _check_exponents(J)
        if j1 == 0 and j2 == 0:
            return 0.0, math.nan
        if j2 == 0:
            r1, _ = self.boundary_point(0.0)
            return (j1 * math.log(r1) if r1 > 0.0 else -math.inf), 0.0
        if j1 == 0:
            _, r2 = self.boundary_point(HALF_PI)
            return (j2 * math.log(r2) if r2 > 0.0 else -math.inf), HALF_PI

        def g(psi):
            l1, l2 = self._log_radii(psi)
            return j1 * l1 + j2 * l2

        psi_star = self._maximize_log_objective(g)
        return g(psi_star), psi_star

    def _maximize_log_objective(self, g):
        return _golden_max(g, 0.0, HALF_PI)


@dataclass(frozen=True)
class EuclideanBall(ReinhardtCompact):
    """|z| <= radius; profile (radius cos psi, radius sin psi)."""

    radius: float = 1.0

    def __post_init__(self):
        if not self.radius > 0.0:
            raise ValueError("ball radius must be positive")

    def boundary_point(self, psi: float) -> tuple[float, float]:
        if not -1e-12 <= psi <= HALF_PI + 1e-12:
            raise ValueError(f"psi must lie in [0, pi/2], got {psi}")
        return self.radius * math.cos(psi), self.radius * math.sin(psi)

    def _log_norm_argmax(self, J):
        # optimize on the unit sphere and scale by radius^|J| afterwards,
        # which keeps the scaling law ||z^J||_{rB} = r^|J| ||z^J||_B exact
        j1, j2 = _check_exponents(J)
        if j1 == 0 and j2 == 0:
            return 0.0, math.nan
        scale = (j1 + j2) * math.log(self.radius)
        if j2 == 0:
            return scale, 0.0
        if j1 == 0:
            return scale, HALF_PI

        def g(psi):
            return j1 * math.log(math.cos(psi)) + j2 * math.log(math.sin(psi))

        psi_star = _golden_max(g, 0.0, HALF_PI)
        return scale + g(psi_star), psi_star


def monomial_norm_ball_closed(J) -> float:
    """||z^J|| on the closed unit ball of C^2, in closed form.

    The maximum of cos^{j_1} * sin^{j_2} on [0, pi/2] gives
    sqrt(j_1^{j_1} j_2^{j_2} / (j_1+j_2)^{j_1+j_2}), with 0^0 = 1.
    Evaluated through logs so large exponents stay accurate.
    """
    j1, j2 = _check_exponents(J)
    if j1 == 0 and j2 == 0:
        return 1.0

    def xlogx(t):
        return t * math.log(t) if t > 0 else 0.0

    return math.exp(0.5 * (xlogx(j1) + xlogx(j2) - xlogx(j1 + j2)))


@dataclass(frozen=True)
class TorusProfile(ReinhardtCompact):
    """Piecewise-linear boundary profile through explicit (psi, r1, r2) samples.

    Sample angles must increase strictly from 0 to pi/2, with r_1
    nonincreasing and r_2 nondecreasing (so monomial objectives stay
    unimodal).  Construction additionally scans representative exponent
    pairs and rejects profiles whose log objective shows two separated
    strict local maxima, since golden section would then be unreliable.
    """

    samples: tuple[tuple[float, float, float], ...]

    def __post_init__(self):
        if len(self.samples) < 2:
            raise ValueError("a profile needs at least two samples")
        object.__setattr__(
            self, "samples",
            tuple((float(p), float(a), float(b)) for p, a, b in self.samples))
        psi = [s[0] for s in self.samples]
        r1 = [s[1] for s in self.samples]
        r2 = [s[2] for s in self.samples]
        if abs(psi[0]) > 1e-9 or abs(psi[-1] - HALF_PI) > 1e-9:
            raise ValueError("profile must span psi = 0 .. pi/2")
        if any(b - a <= 0.0 for a, b in zip(psi, psi[1:])):
            raise ValueError("profile angles must increase strictly")
        if any(r < 0.0 for r in r1 + r2):
            raise ValueError("profile radii must be nonnegative")
        if any(b - a > 1e-12 for a, b in zip(r1, r1[1:])):
            raise ValueError("r1 must be nonincreasing along the profile")
        if any(a - b > 1e-12 for a, b in zip(r2, r2[1:])):
            raise ValueError("r2 must be nondecreasing along the profile")
        if max(r1[0], r2[-1]) == 0.0:
            raise ValueError("profile is identically zero")
        self._reject_bimodal()

    def _reject_bimodal(self):
        grid = np.linspace(0.0, HALF_PI, _UNIMODAL_SCAN)
        lr1 = np.log(np.maximum(np.interp(grid, self._psi, self._r1), 1e-300))
        lr2 = np.log(np.maximum(np.interp(grid, self._psi, self._r2), 1e-300))
        for j1, j2 in _UNIMODAL_PROBES:
            g = j1 * lr1 + j2 * lr2
            finite = g > -600.0
            gi = g[finite]
            if gi.size < 3:
                continue
            tol = 1e-9 * (1.0 + float(np.max(np.abs(gi))))
            interior = gi[1:-1]
            strict_max = (interior > gi[:-2] + tol) & (interior > gi[2:] + tol)
            if int(np.count_nonzero(strict_max)) > 1:
                raise ValueError(
                    f"profile objective for exponents ({j1},{j2}) is bimodal; "
                    "such profiles are outside the supported class")

    @cached_property
    def _psi(self):
        return np.asarray([s[0] for s in self.samples])

    @cached_property
    def _r1(self):
        return np.asarray([s[1] for s in self.samples])

    @cached_property
    def _r2(self):
        return np.asarray([s[2] for s in self.samples])

    def boundary_point(self, psi: float) -> tuple[float, float]:
        if not -1e-12 <= psi <= HALF_PI + 1e-12:
            raise ValueError(f"psi must lie in [0, pi/2], got {psi}")
        return (float(np.interp(psi, self._psi, self._r1)),
                float(np.interp(psi, self._psi, self._r2)))

    def _maximize_log_objective(self, g):
        # coarse bracket first: the interpolated objective can have kinks
        # at the sample knots, so locate the maximum cell by scanning and
        # only then refine by golden section inside the bracket.
        grid = np.linspace(0.0, HALF_PI, 513)
        vals = [g(p) for p in grid]
        k = int(np.argmax(vals))
        lo = grid[max(0, k - 1)]
        hi = grid[min(len(grid) - 1, k + 1)]
        return _golden_max(g, lo, hi)
