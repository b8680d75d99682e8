"""Sharp bounds for the class, with closed forms wherever they exist.

For a member built from (g, w, phi) the coefficient functional obeys

    |a3 - mu a2^2| <= 1/3 + max(B1/3, |B2/3 - mu B1^2/4|),

every branch of which is attained: the first by the odd witness (w = z^2),
the second by a rotated witness w = e^(i theta) z whose angle aligns the
second summand with the positive axis. Inverse coefficients satisfy
|d3 - mu d2^2| = |a3 - (2 - mu) a2^2|, so the inverse bound is the direct
bound at 2 - mu. Distortion and growth envelopes come from the min/max of
phi on circles; for the order-gamma family both have elementary closed
forms (the Kowalczyk pair), which double as oracles for the quadrature
route.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .generators import ClassMember, SchwarzMap, StarlikeAtomic, extremal, member_from
from .phi import MaMindaFunction
from .quadrature import DEFAULT_TOL, integrate
from .series import PowerSeries

GROWTH_RADIUS_CAP = 0.99
WITNESS_MARGIN_TOL = 1e-9


def fs_bound(phi: MaMindaFunction, mu: complex) -> float:
    """Sharp bound on |a3 - mu a2^2| over the class."""
    b1 = phi.B1
    return 1.0 / 3.0 + max(b1 / 3.0, abs(phi.B2 / 3.0 - mu * b1 * b1 / 4.0))


def fs_value(member: ClassMember, mu: complex) -> float:
    """|a3 - mu a2^2| for one member."""
    return abs(member.a3 - mu * member.a2**2)


def fs_witness(phi: MaMindaFunction, mu: complex) -> ClassMember:
    """A member attaining fs_bound(phi, mu).

    The odd witness covers the B1/3 branch; otherwise a rotation of w = z
    aligns B2/3 - mu B1^2/4 with the positive real axis, which makes the
    modulus add up exactly.
    """
    c = phi.B2 / 3.0 - mu * phi.B1**2 / 4.0
    if phi.B1 / 3.0 >= abs(c):
        return extremal("fs_odd", phi)
    theta = -cmath.phase(c) / 2.0
    g = StarlikeAtomic(((1.0 + 0j, 1.0),), phi.order)
    return member_from(g, SchwarzMap.monomial(1, theta, phi.order), phi)


def coefficient_bounds(phi: MaMindaFunction) -> tuple[float, float]:
    """Sharp bounds (|a2|, |a3|) over the class."""
    b1 = phi.B1
    return b1 / 2.0, 1.0 / 3.0 + (b1 / 3.0) * max(1.0, abs(phi.B2) / b1)


def inverse_fs_bound(phi: MaMindaFunction, mu: complex) -> float:
    """Sharp bound on |d3 - mu d2^2| for inverse-function coefficients."""
    return fs_bound(phi, 2.0 - mu)


def inverse_coefficients(f: PowerSeries) -> tuple[complex, complex]:
    """(d2, d3) of the compositional inverse of a normalized f."""
    if f.order < 3:
        raise ValueError("inverse coefficients need order at least 3")
    inv = f.functional_inverse()
    return inv[2], inv[3]


def inverse_fs_value(member: ClassMember, mu: complex) -> float:
    d2, d3 = inverse_coefficients(member.f)
    return abs(d3 - mu * d2**2)


def distortion_bounds(phi: MaMindaFunction, r: float) -> tuple[float, float]:
    """Sharp envelope for |f'| on |z| = r: (min phi)/(1+r^2), (max phi)/(1-r^2)."""
    lo, hi = phi.minmax(r)
    return lo / (1.0 + r * r), hi / (1.0 - r * r)


def growth_bounds(phi: MaMindaFunction, r: float, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Sharp envelope for |f| on |z| = r, by quadrature of the distortion envelope."""
    if not 0.0 < r <= GROWTH_RADIUS_CAP:
        raise ValueError(f"growth bounds need 0 < r <= {GROWTH_RADIUS_CAP}, got {r}")
    lower = integrate(lambda t: phi.eval_real(-t) / (1.0 + t * t), 0.0, r, tol)
    upper = integrate(lambda t: phi.eval_real(t) / (1.0 - t * t), 0.0, r, tol)
    return lower.value, upper.value


def covering_radius(phi: MaMindaFunction, tol: float = DEFAULT_TOL) -> float:
    """Radius of the disk covered by every member's image (r -> 1 growth limit)."""
    return integrate(lambda t: phi.eval_real(-t) / (1.0 + t * t), 0.0, 1.0, tol).value


def covering_radius_closed_form(gamma: float) -> float:
    """(1-gamma) ln(2)/2 + gamma pi/4; the halfplane kind is gamma = 0."""
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f"order parameter must lie in [0, 1), got {gamma}")
    return (1.0 - gamma) * math.log(2.0) / 2.0 + gamma * math.pi / 4.0


def kowalczyk_forms(gamma: float, r: float) -> tuple[float, float, float, float]:
    """Closed-form envelopes for the order-gamma family at radius r.

    Returns (fprime_lower, fprime_upper, f_lower, f_upper).
    """
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f"order parameter must lie in [0, 1), got {gamma}")
    if not 0.0 < r < 1.0:
        raise ValueError(f"radius must lie in (0, 1), got {r}")
    s = 1.0 - 2.0 * gamma
    fp_lo = (1.0 - s * r) / ((1.0 + r) * (1.0 + r * r))
    fp_hi = (1.0 + s * r) / ((1.0 - r) * (1.0 - r * r))
    f_lo = (1.0 - gamma) * math.log((1.0 + r) / math.sqrt(1.0 + r * r)) + gamma * math.atan(r)
    f_hi = 0.5 * gamma * math.log((1.0 + r) / (1.0 - r)) + (1.0 - gamma) * r / (1.0 - r)
    return fp_lo, fp_hi, f_lo, f_hi


def schwarz_functional_bound(t: complex) -> float:
    """Sharp bound on |w2 - t w1^2| over Schwarz maps: max(1, |t|)."""
    return max(1.0, abs(t))


# -- report plumbing for the CLI ----------------------------------------


@dataclass(frozen=True)
class BoundQuery:
    """Echo of one bound request; validated so reports never carry junk."""

    op: str
    phi_spec: str | None = None
    mu: complex | None = None
    r: float | None = None
    gamma: float | None = None

    def __post_init__(self):
        if self.r is not None and not 0.0 < self.r < 1.0:
            raise ValueError(f"radius must lie in (0, 1), got {self.r}")
        if self.gamma is not None and not 0.0 <= self.gamma < 1.0:
            raise ValueError(f"order parameter must lie in [0, 1), got {self.gamma}")

    def to_dict(self) -> dict:
        out: dict = {"op": self.op}
        if self.phi_spec is not None:
            out["phi"] = self.phi_spec
        if self.mu is not None:
            out["mu"] = [self.mu.real, self.mu.imag]
        if self.r is not None:
            out["r"] = self.r
        if self.gamma is not None:
            out["gamma"] = self.gamma
        return out


@dataclass(frozen=True)
class BoundReport:
    """Value(s) for one query, with the witness and its margin when one exists."""

    query: BoundQuery
    value: float | None = None
    values: dict = field(default_factory=dict)
    witness: dict | None = None
    attained: float | None = None
    margin: float | None = None

    def __post_init__(self):
        if self.witness is not None:
            if self.margin is None or self.margin < -WITNESS_MARGIN_TOL:
                raise ValueError(f"witness overshoots its bound (margin {self.margin})")

    def to_dict(self) -> dict:
        out: dict = {"query": self.query.to_dict()}
        if self.value is not None:
            out["value"] = self.value
        if self.values:
            out["values"] = dict(self.values)
        if self.witness is not None:
            out["witness"] = self.witness
            out["attained"] = self.attained
            out["margin"] = self.margin
        return out


def fs_report(phi: MaMindaFunction, mu: complex) -> BoundReport:
    bound = fs_bound(phi, mu)
    witness = fs_witness(phi, mu)
    attained = fs_value(witness, mu)
    return BoundReport(
        query=BoundQuery("fs", phi_spec=phi.spec(), mu=complex(mu)),
        value=bound,
        witness=witness.provenance(),
        attained=attained,
        margin=bound - attained,
    )


def inverse_fs_report(phi: MaMindaFunction, mu: complex) -> BoundReport:
    bound = inverse_fs_bound(phi, mu)
    witness = fs_witness(phi, 2.0 - mu)
    attained = inverse_fs_value(witness, mu)
    return BoundReport(
        query=BoundQuery("inverse-fs", phi_spec=phi.spec(), mu=complex(mu)),
        value=bound,
        witness=witness.provenance(),
        attained=attained,
        margin=bound - attained,
    )


def distortion_report(phi: MaMindaFunction, r: float) -> BoundReport:
    lo, hi = distortion_bounds(phi, r)
    return BoundReport(
        query=BoundQuery("distortion", phi_spec=phi.spec(), r=r),
        values={"lower": lo, "upper": hi},
    )


def growth_report(phi: MaMindaFunction, r: float) -> BoundReport:
    lo, hi = growth_bounds(phi, r)
    return BoundReport(
        query=BoundQuery("growth", phi_spec=phi.spec(), r=r),
        values={"lower": lo, "upper": hi},
    )


def covering_report(phi: MaMindaFunction) -> BoundReport:
    return BoundReport(
        query=BoundQuery("covering", phi_spec=phi.spec()),
        value=covering_radius(phi),
    )


def kowalczyk_report(gamma: float, r: float) -> BoundReport:
    fp_lo, fp_hi, f_lo, f_hi = kowalczyk_forms(gamma, r)
    return BoundReport(
        query=BoundQuery("kowalczyk", gamma=gamma, r=r),
        values={
            "fprime_lower": fp_lo,
            "fprime_upper": fp_hi,
            "f_lower": f_lo,
            "f_upper": f_hi,
        },
    )
