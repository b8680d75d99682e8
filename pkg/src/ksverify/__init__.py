"""Verification toolkit for a symmetric close-to-convex function class.

Members are built from a starlike generator g, a Schwarz map w, and a
Ma-Minda target phi; the package computes sharp coefficient, distortion,
growth, and covering bounds, checks subordination and class membership
numerically, and runs deterministic randomized campaigns over all of it.
"""

from .bounds import (
    coefficient_bounds,
    covering_radius,
    covering_radius_closed_form,
    distortion_bounds,
    fs_bound,
    fs_value,
    fs_witness,
    growth_bounds,
    inverse_coefficients,
    inverse_fs_bound,
    inverse_fs_value,
    kowalczyk_forms,
    schwarz_functional_bound,
)
from .campaign import CampaignConfig, CampaignReport, replay, run_campaign, run_trial
from .generators import (
    ClassMember,
    G_from_g,
    SchwarzMap,
    StarlikeAtomic,
    extremal,
    member_from,
    parse_g_spec,
    parse_w_spec,
    schwarz_make,
    starlike_atomic,
)
from .kernels import BACKEND
from .phi import (
    MaMindaFunction,
    parse_phi_spec,
    phi_halfplane,
    phi_make,
    phi_order_gamma,
    phi_polynomial,
)
from .quadrature import QuadratureError, QuadratureResult, integrate
from .series import PowerSeries
from .subord import (
    StankiewiczResult,
    SubordinationConfig,
    SubordinationVerdict,
    is_subordinate,
    ks_membership,
    stankiewicz_check,
    transfer_quotient,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CampaignConfig",
    "CampaignReport",
    "ClassMember",
    "G_from_g",
    "MaMindaFunction",
    "PowerSeries",
    "QuadratureError",
    "QuadratureResult",
    "SchwarzMap",
    "StankiewiczResult",
    "StarlikeAtomic",
    "SubordinationConfig",
    "SubordinationVerdict",
    "__version__",
    "coefficient_bounds",
    "covering_radius",
    "covering_radius_closed_form",
    "distortion_bounds",
    "extremal",
    "fs_bound",
    "fs_value",
    "fs_witness",
    "growth_bounds",
    "integrate",
    "inverse_coefficients",
    "inverse_fs_bound",
    "inverse_fs_value",
    "is_subordinate",
    "kowalczyk_forms",
    "ks_membership",
    "member_from",
    "parse_g_spec",
    "parse_phi_spec",
    "parse_w_spec",
    "phi_halfplane",
    "phi_make",
    "phi_order_gamma",
    "phi_polynomial",
    "replay",
    "run_campaign",
    "run_trial",
    "schwarz_functional_bound",
    "schwarz_make",
    "starlike_atomic",
    "stankiewicz_check",
    "transfer_quotient",
]
