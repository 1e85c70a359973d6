"""Convex bodies in the nonnegative orthant and their support calculus.

Growth of the extremal functions computed elsewhere in this package is
prescribed by a compact convex body P contained in the closed positive
orthant.  Two families are provided: the positive-orthant portions of
l^q unit balls, and polytopes given by an explicit vertex list.  The
operations that matter downstream are the support function

    h_P(x) = sup { <x, y> : y in P },

its logarithmic substitution H_P(z) = h_P(log|z_1|, ..., log|z_d|),
volume, dilates-of-the-simplex comparison, and enumeration of the
lattice points of the dilate n*P.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

# A point counts as inside the body when its defining inequality is
# violated by at most this much.  Chosen so boundary lattice points of
# n*P survive the floating-point membership test.
MEMBERSHIP_TOL = 1e-12

# Default search bound for the smallest k with Sigma_d <= k*P.  Finite so
# degenerate bodies (e.g. a segment on one axis) fail detectably.
SCALING_SEARCH_BOUND = 10**6


@dataclass(frozen=True)
class LatticePointSet:
    """Integer points of the dilate n*P, as exact integer tuples."""

    n: int
    points: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


class ConvexBody:
    """Common interface for bodies P in the closed positive orthant."""

    d: int

    def contains(self, y) -> bool:
        raise NotImplementedError

    def support_function(self, x) -> float:
        raise NotImplementedError

    def bounding_box(self) -> tuple[float, ...]:
        """Componentwise maxima over P (P sits in the positive orthant)."""
        raise NotImplementedError

    def volume(self) -> float:
        raise NotImplementedError

    # -- shared machinery -------------------------------------------------

    def _check_dim(self, x):
        x = np.asarray(x, dtype=float)
        if x.shape != (self.d,):
            raise ValueError(
                f"expected a point of dimension {self.d}, got shape {x.shape}"
            )
        return x

    def _face_support(self, zero_mask, x_rest) -> float:
        """Support of the face {y in P : y_i = 0 for masked i} at x_rest.

        Returns -inf when the face is empty.  Subclasses override.
        """
        raise NotImplementedError

    def log_indicator(self, z) -> float:
        """H_P(z) = h_P(log|z_1|, ..., log|z_d|), with zeros handled by limit.

        When some z_i = 0 the sup defining H_P restricts to exponents with
        y_i = 0; the result is the support of that face (finite) when the
        face is nonempty and -inf otherwise.
        """
        z = np.asarray(z)
        if z.shape != (self.d,):
            raise ValueError(f"expected a point of dimension {self.d}")
        moduli = np.abs(z).astype(float)
        zero = moduli == 0.0
        if not zero.any():
            return self.support_function(np.log(moduli))
        if zero.all():
            # only the exponent 0 survives; it is in P for every body
            # handled here that contains the origin, else the face test
            # below decides.
            return self._face_support(zero, np.zeros(0))
        return self._face_support(zero, np.log(moduli[~zero]))

    def lattice_points(self, n: int) -> LatticePointSet:
        """All J in Z^d with J/n in P, found by a bounding-box scan."""
        if n < 1 or int(n) != n:
            raise ValueError("dilation degree n must be a positive integer")
        n = int(n)
        box = self.bounding_box()
        ranges = [range(0, int(math.floor(n * b + MEMBERSHIP_TOL)) + 1)
                  for b in box]
        pts = []
        for J in itertools.product(*ranges):
            if self.contains(np.asarray(J, dtype=float) / n):
                pts.append(J)
        return LatticePointSet(n=n, points=tuple(pts))

    def scaling_constant(self, bound: int = SCALING_SEARCH_BOUND):
        """Smallest integer k >= 1 with Sigma_d subset of k*P, else None.

        Sigma_d is the standard simplex conv{0, e_1, ..., e_d}.  By
        convexity the inclusion only needs 0 in P and e_i/k in P for
        every axis, so the search reduces to the largest multiple of
        each axis vector contained in P.
        """
        if not self.contains(np.zeros(self.d)):
            return None
        ks = []
        for i in range(self.d):
            k_i = self._axis_scaling(i, bound)
            if k_i is None:
                return None
            ks.append(k_i)
        return max(ks)

    def _axis_scaling(self, i, bound):
        e = np.zeros(self.d)
        e[i] = 1.0
        if self.contains(e):
            return 1
        # bisect the largest t with t*e_i in P; containment of t*e_i is
        # monotone in t because 0 in P and P is convex.
        lo, hi = 0.0, 1.0
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if self.contains(mid * e):
                lo = mid
            else:
                hi = mid
        if lo <= 1.0 / bound:
            return None
        k = max(1, math.ceil(1.0 / lo - 1e-9))
        if k > 1 and self.contains(e / (k - 1)):
            k -= 1
        while not self.contains(e / k):
            k += 1
            if k > bound:
                return None
        return k


@dataclass(frozen=True)
class LqBody(ConvexBody):
    """P_q = {y >= 0 : ||y||_q <= 1}, the orthant portion of the l^q ball.

    q = math.inf is the sup-norm body (the unit cube of the orthant) and
    is treated by explicit branches everywhere; no formula ever computes
    1/q or the dual exponent at infinity.
    """

    q: float
    d: int = 2

    def __post_init__(self):
        if not (self.q >= 1.0):
            raise ValueError(f"q must satisfy q >= 1, got {self.q}")
        if self.d < 1:
            raise ValueError("dimension must be positive")

    # -- membership --------------------------------------------------------

    def contains(self, y) -> bool:
        y = self._check_dim(y)
        if (y < -MEMBERSHIP_TOL).any():
            return False
        y = np.maximum(y, 0.0)
        return self._norm(y) <= 1.0 + MEMBERSHIP_TOL

    def _norm(self, y):
        if math.isinf(self.q):
            return float(np.max(y)) if y.size else 0.0
        m = float(np.max(y)) if y.size else 0.0
        if m == 0.0:
            return 0.0
        return m * float(np.sum((y / m) ** self.q)) ** (1.0 / self.q)

    # -- support -----------------------------------------------------------

    def support_function(self, x) -> float:
        """h_{P_q}(x) = ||max(x,0)||_{q'} with q' the dual exponent.

        The dual pairs (1, inf) and (inf, 1) are hard-branched; for
        1 < q < inf the exponent is q' = q/(q-1).
        """
        x = self._check_dim(x)
        xp = np.maximum(x, 0.0)
        if math.isinf(self.q):
            return float(np.sum(xp))
        if self.q == 1.0:
            return float(np.max(xp)) if xp.size else 0.0
        qd = self.q / (self.q - 1.0)
        m = float(np.max(xp)) if xp.size else 0.0
        if m == 0.0:
            return 0.0
        return m * float(np.sum((xp / m) ** qd)) ** (1.0 / qd)

    def _face_support(self, zero_mask, x_rest) -> float:
        # the slice of P_q by y_i = 0 is the lower-dimensional P_q
        k = int((~zero_mask).sum())
        if k == 0:
            return 0.0
        return LqBody(q=self.q, d=k).support_function(x_rest)

    # -- geometry ----------------------------------------------------------

    def bounding_box(self):
        return (1.0,) * self.d

    def volume(self) -> float:
        """Volume of P_q.  Closed Gamma form in d = 2, quadrature beyond."""
        if math.isinf(self.q):
            return 1.0
        if self.d == 2:
            return math.gamma(1.0 + 1.0 / self.q) ** 2 / math.gamma(1.0 + 2.0 / self.q)
        return lq_volume_quadrature(self.q, self.d)

    def scaling_constant(self, bound: int = SCALING_SEARCH_BOUND):
        # Sigma_d subset of P_q for every q >= 1 since ||y||_q <= ||y||_1.
        return 1


def lq_volume_quadrature(q: float, d: int = 2) -> float:
    """Volume of P_q in dimension d by iterated adaptive quadrature.

    Uses Vol_d = Vol_{d-1} * int_0^1 (1 - t^q)^{(d-1)/q} dt applied
    recursively; independent of the Gamma closed form used in d = 2.
    """
    from .quadrature import integrate

    if math.isinf(q):
        # the integrand is identically 1 at every level
        v = 1.0
        for _ in range(2, d + 1):
            v *= integrate(lambda t: 1.0, 0.0, 1.0)[0]
        return v
    v = 1.0
    for k in range(2, d + 1):
        p = (k - 1) / q
        v *= integrate(lambda t, p=p: (1.0 - t**q) ** p, 0.0, 1.0)[0]
    return v


@dataclass(frozen=True)
class Polytope(ConvexBody):
    """Convex hull of an explicit vertex list in the closed orthant.

    The body is exactly the hull of the listed vertices; in particular
    the origin belongs to the body only when it lies in that hull.
    """

    vertices: tuple[tuple[float, ...], ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a polytope needs at least one vertex")
        d = len(self.vertices[0])
        for v in self.vertices:
            if len(v) != d:
                raise ValueError("vertices have inconsistent dimensions")
            if any(c < -MEMBERSHIP_TOL for c in v):
                raise ValueError("vertices must lie in the closed positive orthant")
        object.__setattr__(self, "vertices",
                           tuple(tuple(float(c) for c in v) for v in self.vertices))

    @property
    def d(self) -> int:
        return len(self.vertices[0])

    @cached_property
    def _vertex_array(self):
        return np.asarray(self.vertices, dtype=float)

    @cached_property
    def _facets(self):
        """(A, b) with P = {y : A y <= b}, or None when the hull is degenerate."""
        V = self._vertex_array
        if V.shape[0] <= self.d:
            return None
        if np.linalg.matrix_rank(V - V[0], tol=1e-10) < self.d:
            return None
        from scipy.spatial import ConvexHull, QhullError

        try:
            hull = ConvexHull(V)
        except QhullError:
            return None
        eq = hull.equations  # rows (normal | offset): normal . y + offset <= 0
        return eq[:, :-1], -eq[:, -1]

    def contains(self, y) -> bool:
        y = self._check_dim(y)
        facets = self._facets
        if facets is not None:
            A, b = facets
            slack = MEMBERSHIP_TOL * (1.0 + float(np.max(np.abs(y))))
            return bool(np.all(A @ y <= b + slack))
        return self._lp_distance(y) <= 1e-9 * (1.0 + float(np.max(np.abs(y))))

    def _lp_distance(self, y) -> float:
        """sup-norm distance from y to the hull, via a small LP.

        Fallback for degenerate (lower-dimensional) vertex sets where no
        facet representation exists.
        """
        from scipy.optimize import linprog

        V = self._vertex_array
        m = V.shape[0]
        # variables: lambda (m), t (1); minimize t
        c = np.zeros(m + 1)
        c[-1] = 1.0
        A_ub = np.zeros((2 * self.d, m + 1))
        A_ub[: self.d, :m] = V.T
        A_ub[: self.d, -1] = -1.0
        A_ub[self.d:, :m] = -V.T
        A_ub[self.d:, -1] = -1.0
        b_ub = np.concatenate([y, -y])
        A_eq = np.zeros((1, m + 1))
        A_eq[0, :m] = 1.0
        res = linprog(c, A_ub=A_ub, b_ub=b_ub, A_eq=A_eq, b_eq=[1.0],
                      bounds=[(0, None)] * m + [(0, None)], method="highs")
        if not res.success:
            raise RuntimeError(f"membership LP failed: {res.message}")
        return float(res.fun)

    def support_function(self, x) -> float:
        """max over vertices of <x, v>; linear functionals peak at vertices."""
        x = self._check_dim(x)
        return float(np.max(self._vertex_array @ x))

    def _face_support(self, zero_mask, x_rest) -> float:
        V = self._vertex_array
        on_face = np.all(np.abs(V[:, zero_mask]) <= MEMBERSHIP_TOL, axis=1)
        if not on_face.any():
            return float("-inf")
        if x_rest.size == 0:
            return 0.0
        return float(np.max(V[np.ix_(on_face, ~zero_mask)] @ x_rest))

    def bounding_box(self):
        return tuple(float(c) for c in self._vertex_array.max(axis=0))

    def volume(self) -> float:
        """Exact hull volume (qhull); 0 for lower-dimensional vertex sets."""
        if self._facets is None:
            return 0.0
        from scipy.spatial import ConvexHull

        return float(ConvexHull(self._vertex_array).volume)
