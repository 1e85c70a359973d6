"""Equilibrium-measure computations on the unit sphere of C^2.

The torus-invariant surface measure on the sphere is parametrized by
z = (cos(psi) e^{i t_1}, sin(psi) e^{i t_2}); integrating out the torus
leaves the angular weight 2 cos(psi) sin(psi) and the factor (2 pi)^2,
so the total surface mass is 4 pi^2.  The equilibrium measure of the
unit ball under unit-square growth has boundary density
1 / max(|z_1|, |z_2|)^4 against that measure, total mass 8 pi^2, and
more generally the total mass for an l^q growth body is 8 pi^2 times
the body volume.

Sector masses of envelope approximations are computed through the
gradient (subdifferential) image: for a torus-invariant maximum of
monomial pieces, the measure of a boundary sector is 8 pi^2 times the
area swept in slope space by the active pieces along the boundary arc,
a convex "pie slice" of the growth body that is rasterized here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .convex_body import LqBody
from .extremal import MonomialEnvelope, build_envelope
from .quadrature import integrate
from .reinhardt import EuclideanBall

HALF_PI = math.pi / 2.0
FOUR_PI_SQ = 4.0 * math.pi**2
EIGHT_PI_SQ = 8.0 * math.pi**2

SPHERE_TOL = 1e-9


def _check_angles(psi1, psi2):
    if not (0.0 <= psi1 <= psi2 <= HALF_PI + 1e-12):
        raise ValueError(f"need 0 <= psi1 <= psi2 <= pi/2, got ({psi1}, {psi2})")


def _sphere_moduli(z):
    if len(z) != 2:
        raise ValueError("expected a point of C^2")
    r1, r2 = abs(z[0]), abs(z[1])
    if abs(r1 * r1 + r2 * r2 - 1.0) > SPHERE_TOL:
        raise ValueError(f"point {z!r} does not lie on the unit sphere")
    return r1, r2


# ---------------------------------------------------------------------------
# surface measure and closed-form masses
# ---------------------------------------------------------------------------

def sphere_quadrature(f, psi1: float, psi2: float,
                      rel_tol: float = 1e-9, abs_floor: float = 1e-14) -> float:
    """Integral of f(psi) against the torus-invariant surface measure.

    Computes 4 pi^2 * int_{psi1}^{psi2} f(psi) 2 cos(psi) sin(psi) dpsi
    by adaptive Gauss-Kronrod bisection.  f = 1 over the full quarter
    arc gives the total surface mass 4 pi^2.
    """
    _check_angles(psi1, psi2)

    def g(psi):
        return f(psi) * 2.0 * math.cos(psi) * math.sin(psi)

    value, _ = integrate(g, psi1, psi2, rel_tol=rel_tol, abs_floor=abs_floor)
    return FOUR_PI_SQ * value


def density_pinf(z) -> float:
    """Boundary density 1 / max(|z_1|, |z_2|)^4 at a sphere point.

    On the diagonal |z_1| = |z_2| both coordinate branches are evaluated
    and must coincide exactly before either is returned.
    """
    r1, r2 = _sphere_moduli(z)
    if r1 == r2:
        d1 = 1.0 / r1**4
        d2 = 1.0 / r2**4
        if d1 != d2:
            raise ArithmeticError(f"diagonal branch values disagree at {z!r}")
        return d1
    return 1.0 / max(r1, r2) ** 4


def density_pinf_psi(psi: float) -> float:
    """density_pinf along the angular parametrization of the sphere."""
    if not -1e-12 <= psi <= HALF_PI + 1e-12:
        raise ValueError(f"psi must lie in [0, pi/2], got {psi}")
    return 1.0 / max(math.cos(psi), math.sin(psi)) ** 4


def total_mass(q: float) -> float:
    """Total equilibrium mass for the l^q growth body: 8 pi^2 Vol(P_q)."""
    return EIGHT_PI_SQ * LqBody(q=q, d=2).volume()


def sector_mass_pinf(psi0: float) -> float:
    """Closed-form mass of the sector [0, psi0] for unit-square growth.

    Antiderivative of the density against the surface measure:
    4 pi^2 tan^2(psi0) up to the diagonal, then by symmetry
    8 pi^2 - 4 pi^2 tan^2(pi/2 - psi0) beyond it.
    """
    _check_angles(0.0, psi0)
    if psi0 <= math.pi / 4.0:
        return FOUR_PI_SQ * math.tan(psi0) ** 2
    return EIGHT_PI_SQ - FOUR_PI_SQ * math.tan(HALF_PI - psi0) ** 2


# ---------------------------------------------------------------------------
# boundary 3-forms and the wedge density
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundaryForm3:
    """Torus-type boundary 3-form a dz2^dzbar1^dz1 + b dzbar2^dzbar1^dz1.

    Anchored at a sphere point with both coordinates nonzero.  The form
    takes real values exactly when b = -conj(a); reduction against the
    surface measure then produces a real density.
    """

    a: complex
    b: complex
    z: tuple[complex, complex]

    def __post_init__(self):
        r1, r2 = _sphere_moduli(self.z)
        if r1 == 0.0 or r2 == 0.0:
            raise ValueError("anchor must have both coordinates nonzero")

    def __add__(self, other):
        if not isinstance(other, BoundaryForm3):
            return NotImplemented
        if other.z != self.z:
            raise ValueError("cannot add forms anchored at different points")
        return BoundaryForm3(self.a + other.a, self.b + other.b, self.z)

    def __rmul__(self, c):
        return BoundaryForm3(c * self.a, c * self.b, self.z)

    def is_real(self, rel: float = 1e-12) -> bool:
        scale = max(abs(self.a), abs(self.b))
        if scale == 0.0:
            return True
        return abs(self.b + self.a.conjugate()) <= rel * scale


def reduce_boundary_form(form: BoundaryForm3, z=None):
    """Density of the 3-form against the surface measure at its anchor.

    On the sphere dzbar1 is eliminated through the tangency relation,
    collapsing both basis monomials onto the surface-measure form; the
    resulting coefficient is a z_2 - b zbar_2.  Real forms give a real
    density (returned as float), others a complex one.
    """
    if z is not None:
        if tuple(z) != form.z:
            raise ValueError("reduction point differs from the form anchor")
    z2 = form.z[1]
    c = form.a * z2 - form.b * z2.conjugate()
    if form.is_real():
        return float(c.real)
    return complex(c)


def ddc_u_coefficient(z1: complex) -> float:
    """Complex-Hessian coefficient 2/(1-|z_1|^2)^2 of the branch potential.

    The potential log|z_2|^2 - log(1-|z_1|^2) depends on z_1 only
    through -log(1-|z_1|^2); this is the dz1^dzbar1 coefficient of its
    dd^c, valid on |z_1| < 1.
    """
    z1 = complex(z1)
    s = z1.real**2 + z1.imag**2
    if s >= 1.0:
        raise ValueError("the branch potential requires |z1| < 1")
    return 2.0 / (1.0 - s) ** 2


def ddc_u_coefficient_fd(z1: complex, h: float = 1e-4) -> float:
    """Same coefficient from a centered 5-point Laplacian (= Delta/2)."""
    z1 = complex(z1)
    x, y = z1.real, z1.imag

    def pot(a, b):
        return -math.log1p(-(a * a + b * b))

    lap = (pot(x + h, y) + pot(x - h, y) + pot(x, y + h) + pot(x, y - h)
           - 4.0 * pot(x, y)) / (h * h)
    return 0.5 * lap


def wedge_form(z) -> BoundaryForm3:
    """Boundary 3-form of d^c u ^ dd^c u for the z2-dominant branch at z."""
    r1, r2 = _sphere_moduli(z)
    if r1 >= 1.0 or r2 == 0.0:
        raise ValueError("wedge form needs |z1| < 1 and z2 != 0")
    z1, z2 = complex(z[0]), complex(z[1])
    denom = (1.0 - (z1.real**2 + z1.imag**2)) ** 2
    a = 2.0 / (z2 * denom)
    b = -2.0 / (z2.conjugate() * denom)
    return BoundaryForm3(a, b, (z1, z2))


def wedge_density(z, dominant: str = "z2") -> float:
    """Boundary density of the quarter wedge power for one branch.

    Assembles the branch 3-form, reduces it against the surface measure
    and divides by 4; the result is 1/|z_2|^4 on the z2-dominant branch
    and, by the coordinate swap, 1/|z_1|^4 on the z1-dominant one.
    """
    if dominant == "z1":
        return wedge_density((z[1], z[0]), dominant="z2")
    if dominant != "z2":
        raise ValueError(f"dominant must be 'z1' or 'z2', got {dominant!r}")
    c = reduce_boundary_form(wedge_form(z))
    return c / 4.0


# ---------------------------------------------------------------------------
# gradient-image sector masses for monomial envelopes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RasterSpec:
    """Raster and tolerance knobs for gradient-image mass computation."""

    resolution: int = 2048
    dilation: float = 0.05
    direction_tol: float = 1e-9


class RasterOverflowError(RuntimeError):
    """Raised when envelope slopes escape the raster window over the body."""


def _convex_hull(points):
    """Monotone-chain hull, CCW; degenerate inputs give < 3 vertices."""
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _hull_pixel_area(hull, box, resolution):
    """Area of the pixel centers inside a convex polygon (scanline).

    The raster covers [0, box_x] x [0, box_y] at the given resolution;
    a pixel belongs to the polygon when its center does.
    """
    if len(hull) < 3:
        return 0.0
    dx = box[0] / resolution
    dy = box[1] / resolution
    eps = 1e-12 * max(box)
    ys = (np.arange(resolution) + 0.5) * dy

    xlo = np.full(resolution, -np.inf)
    xhi = np.full(resolution, np.inf)
    feasible = np.ones(resolution, dtype=bool)
    m = len(hull)
    for i in range(m):
        px, py = hull[i]
        qx, qy = hull[(i + 1) % m]
        ex, ey = qx - px, qy - py
        # interior condition: ex*(y-py) - ey*(x-px) >= -eps
        rhs = eps + ex * (ys - py) + ey * px
        if ey > 0.0:
            xhi = np.minimum(xhi, rhs / ey)
        elif ey < 0.0:
            xlo = np.maximum(xlo, rhs / ey)
        else:
            feasible &= ex * (ys - py) >= -eps

    i_min = np.ceil(xlo / dx - 0.5).astype(int)
    i_max = np.floor(xhi / dx - 0.5).astype(int)
    i_min = np.clip(i_min, 0, resolution)
    i_max = np.clip(i_max, -1, resolution - 1)
    counts = np.where(feasible, np.maximum(i_max - i_min + 1, 0), 0)
    return float(counts.sum()) * dx * dy


def _direction_nodes(env: MonomialEnvelope, tol: float):
    """Monotone maximizer-angle -> slope-direction table for the envelope.

    Proportional exponent vectors share both their direction and their
    maximizer angle, so the nonzero slopes collapse to one node per
    direction, and the map direction -> maximizer angle is nondecreasing
    for admissible compacts (rotating the exponent toward e2 moves the
    best boundary angle toward pi/2, by increasing differences of the
    log objective).  Golden-section jitter and plateau runs are spread
    by a vanishing nudge so the table can be inverted by interpolation;
    anchor nodes pin the poles.
    """
    E = env.exponents
    nz = (E[:, 0] > 0.0) | (E[:, 1] > 0.0)
    theta = np.arctan2(E[nz, 1], E[nz, 0])
    psis = env.psi_max[nz]
    order = np.argsort(theta, kind="stable")
    theta = theta[order]
    psis = psis[order]
    keep = np.ones(theta.size, dtype=bool)
    keep[1:] = np.diff(theta) > tol
    theta = theta[keep]
    psis = psis[keep]

    node_psi = [0.0]
    node_theta = [0.0]
    for p, t in zip(psis, theta):
        node_psi.append(max(float(p), node_psi[-1] + 1e-14))
        node_theta.append(float(t))
    node_psi.append(max(HALF_PI, node_psi[-1] + 1e-14))
    node_theta.append(HALF_PI)
    return np.asarray(node_psi), np.asarray(node_theta)


def _ray_exit(hull, theta):
    """Exit point of the ray from the origin at angle theta through a hull."""
    dx, dy = math.cos(theta), math.sin(theta)
    best = 0.0
    m = len(hull)
    for i in range(m):
        px, py = hull[i]
        qx, qy = hull[(i + 1) % m]
        ex, ey = qx - px, qy - py
        den = dx * ey - dy * ex
        if den == 0.0:
            continue
        s = (px * dy - py * dx) / den
        t = (px * ey - py * ex) / den
        if t > best and -1e-12 <= s <= 1.0 + 1e-12:
            best = t
    return best * dx, best * dy


def gradient_image_sector_mass(evaluator, psi1: float, psi2: float,
                               spec: RasterSpec | None = None) -> float:
    """Envelope mass of the boundary sector psi1 <= psi <= psi2.

    Over the closed sector the subdifferential of a torus-invariant
    envelope sweeps out the pie slice of the envelope slope polytope
    between the gradient rays at the two cut angles: each boundary angle
    activates a full ray of slope directions, and the cut direction
    interpolates monotonically between consecutive maximizer angles.
    The slice is the hull of the apex, the slopes whose direction falls
    inside the cut window, and the ray exit points through the slope
    polytope, rasterized over the (dilated) bounding box of the body.
    The mass is 8 pi^2 times the rasterized area; shared cut rays make
    masses add exactly along a partition.
    """
    if not isinstance(evaluator, MonomialEnvelope):
        raise TypeError("sector masses are computed from monomial envelopes")
    _check_angles(psi1, psi2)
    if spec is None:
        spec = RasterSpec()

    box = evaluator.body.bounding_box()
    if len(box) != 2:
        raise ValueError("gradient images are implemented for d = 2 bodies")
    box = (box[0] * (1.0 + spec.dilation), box[1] * (1.0 + spec.dilation))
    slopes = evaluator.exponents / evaluator.n
    if (slopes[:, 0] > box[0]).any() or (slopes[:, 1] > box[1]).any():
        raise RasterOverflowError(
            "envelope slopes exceed the raster window over the body")

    nz = (slopes[:, 0] > 0.0) | (slopes[:, 1] > 0.0)
    outer = _convex_hull([(0.0, 0.0)] + list(map(tuple, slopes[nz])))
    if len(outer) < 3:
        return 0.0

    node_psi, node_theta = _direction_nodes(evaluator, spec.direction_tol)
    th1, th2 = np.interp([psi1, psi2], node_psi, node_theta)
    theta = np.arctan2(slopes[nz, 1], slopes[nz, 0])
    inside = (theta >= th1 - 1e-12) & (theta <= th2 + 1e-12)

    pts = [(0.0, 0.0), _ray_exit(outer, th1), _ray_exit(outer, th2)]
    pts.extend(map(tuple, slopes[nz][inside]))
    hull = _convex_hull(pts)
    area = _hull_pixel_area(hull, box, spec.resolution)
    return EIGHT_PI_SQ * area


@lru_cache(maxsize=32)
def _lq_ball_envelope(q: float, n: int) -> MonomialEnvelope:
    return build_envelope(LqBody(q=q, d=2), EuclideanBall(1.0), n)


def numeric_density(q: float, n: int, psi: float, h: float = math.pi / 64.0,
                    spec: RasterSpec | None = None) -> float:
    """Envelope estimate of the boundary density at angle psi.

    Sector mass over the window [psi - h/2, psi + h/2] divided by the
    surface measure of the window.  The window must stay strictly inside
    (0, pi/2).
    """
    lo, hi = psi - 0.5 * h, psi + 0.5 * h
    if not (0.0 < lo and hi < HALF_PI):
        raise ValueError("density window must stay strictly inside (0, pi/2)")
    env = _lq_ball_envelope(float(q), int(n))
    mass = gradient_image_sector_mass(env, lo, hi, spec)
    window = sphere_quadrature(lambda p: 1.0, lo, hi)
    return mass / window


@dataclass(frozen=True)
class SectorMassReport:
    """Sector decomposition of the envelope equilibrium mass for P_q."""

    q: float
    n: int
    sectors: tuple[tuple[float, float, float], ...]  # (psi_lo, psi_hi, mass)
    total: float
    expected_total: float
    density_samples: tuple[tuple[float, float], ...]  # (psi_mid, density)

    def masses(self):
        return [s[2] for s in self.sectors]


def sector_mass_report(q: float, n: int = 64, sectors: int = 32,
                       spec: RasterSpec | None = None) -> SectorMassReport:
    """Equal-angle sector masses, their sum and the closed-form target."""
    if sectors < 1:
        raise ValueError("need at least one sector")
    env = _lq_ball_envelope(float(q), int(n))
    edges = np.linspace(0.0, HALF_PI, sectors + 1)
    rows = []
    samples = []
    for a, b in zip(edges[:-1], edges[1:]):
        mass = gradient_image_sector_mass(env, float(a), float(b), spec)
        rows.append((float(a), float(b), mass))
        window = sphere_quadrature(lambda p: 1.0, float(a), float(b))
        samples.append((float(0.5 * (a + b)), mass / window))
    total = math.fsum(r[2] for r in rows)
    return SectorMassReport(q=float(q), n=int(n), sectors=tuple(rows),
                            total=total, expected_total=total_mass(q),
                            density_samples=tuple(samples))


@dataclass(frozen=True)
class MonotonicityReport:
    """Pointwise density comparison for nested growth bodies q1 <= q2."""

    q1: float
    q2: float
    tol: float
    psi: tuple[float, ...]
    f1: tuple[float, ...]
    f2: tuple[float, ...]

    @property
    def margins(self):
        return tuple(b - a for a, b in zip(self.f1, self.f2))

    @property
    def passed(self) -> bool:
        return all(m >= -self.tol for m in self.margins)


def measure_monotonicity_check(q1: float, q2: float, n: int = 64,
                               psi_grid=None, tol: float = 0.05,
                               spec: RasterSpec | None = None) -> MonotonicityReport:
    """Check f_{q1} <= f_{q2} + tol on a psi grid via envelope densities.

    Growth bodies nest with q, so the boundary densities must be ordered
    pointwise; tol absorbs envelope and raster quantization noise.
    """
    if not 1.0 <= q1 <= q2:
        raise ValueError("need 1 <= q1 <= q2")
    if psi_grid is None:
        psi_grid = np.linspace(math.pi / 32.0, HALF_PI - math.pi / 32.0, 20)
    psi_grid = [float(p) for p in psi_grid]
    f1 = [numeric_density(q1, n, p, spec=spec) for p in psi_grid]
    f2 = [numeric_density(q2, n, p, spec=spec) for p in psi_grid]
    return MonotonicityReport(q1=float(q1), q2=float(q2), tol=float(tol),
                              psi=tuple(psi_grid), f1=tuple(f1), f2=tuple(f2))
