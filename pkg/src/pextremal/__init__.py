"""Extremal functions and equilibrium measures of circled sets in C^2.

The package computes logarithmic-growth extremal functions attached to
convex bodies in the positive orthant, their monomial-envelope
approximations over Reinhardt compacts, and the resulting equilibrium
(complex Monge-Ampere) measures on the unit sphere, together with a
command-line front end and a self-verification suite.
"""

from .convex_body import (
    ConvexBody,
    LatticePointSet,
    LqBody,
    Polytope,
    lq_volume_quadrature,
)
from .extremal import (
    ClosedFormP1Ball,
    ClosedFormPInfBall,
    MonomialEnvelope,
    RadialGrid,
    build_envelope,
    convergence_profile,
    envelope_sup_error,
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
    BoundaryForm3,
    MonotonicityReport,
    RasterOverflowError,
    RasterSpec,
    SectorMassReport,
    ddc_u_coefficient,
    ddc_u_coefficient_fd,
    density_pinf,
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
from .reinhardt import (
    EuclideanBall,
    ReinhardtCompact,
    TorusProfile,
    monomial_norm_ball_closed,
)

__version__ = "0.1.0"

__all__ = [
    "BoundaryForm3",
    "ClosedFormP1Ball",
    "ClosedFormPInfBall",
    "ConvexBody",
    "EuclideanBall",
    "LatticePointSet",
    "LqBody",
    "MonomialEnvelope",
    "MonotonicityReport",
    "Polytope",
    "RadialGrid",
    "RasterOverflowError",
    "RasterSpec",
    "ReinhardtCompact",
    "SectorMassReport",
    "TorusProfile",
    "build_envelope",
    "convergence_profile",
    "ddc_u_coefficient",
    "ddc_u_coefficient_fd",
    "density_pinf",
    "density_pinf_psi",
    "envelope_sup_error",
    "equality_case_residual",
    "exterior_test_points",
    "gradient_image_sector_mass",
    "lq_volume_quadrature",
    "make_evaluator",
    "measure_monotonicity_check",
    "monomial_norm_ball_closed",
    "numeric_density",
    "reduce_boundary_form",
    "relative_extremal_ball",
    "sandwich_constants",
    "sector_mass_pinf",
    "sector_mass_report",
    "sphere_quadrature",
    "total_mass",
    "v_p1_ball",
    "v_pinf_ball",
    "v_pinf_ball_branches",
    "wedge_density",
    "wedge_form",
]
