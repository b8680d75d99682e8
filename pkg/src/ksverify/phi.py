"""Target functions for the subordination class.

A target phi is analytic on the unit disk with phi(0) = 1, positive real
part, phi'(0) = B1 > 0, and an image that is starlike with respect to 1
and symmetric about the real axis. Built-in kinds have closed forms:

    halfplane      (1 + z)/(1 - z)              B_n = 2
    order_gamma    (1 + (1-2g)z)/(1 - z)        B_n = 2(1-g),  0 <= g < 1
    polynomial     1 + B1 z + ... + Bm z^m      shape attested by the caller

For the quotient kinds phi(-r) and phi(r) are the exact min and max of
|phi| on |z| = r (Moebius images of circles are circles centered on the
real axis). Polynomial targets are accepted only after a grid check of
Re phi > 0, and their minmax is available only when the caller attests
the monotone Ma-Minda shape; the attestation travels with the object so
reports can record it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fileio import format_float, parse_complex
from .series import PowerSeries

HALFPLANE = "halfplane"
ORDER_GAMMA = "order_gamma"
POLYNOMIAL = "polynomial"
_KINDS = (HALFPLANE, ORDER_GAMMA, POLYNOMIAL)

POSITIVITY_RADII = (0.5, 0.9, 0.95)
POSITIVITY_ANGLES = 1440
DEFAULT_ORDER = 24


@dataclass(frozen=True)
class MaMindaFunction:
    """One target function; build through the phi_* factories or phi_make."""

    kind: str
    gamma: float = 0.0
    B: tuple[complex, ...] = ()
    order: int = DEFAULT_ORDER
    monotone_attested: bool = False

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown target kind: {self.kind!r}")
        if self.order < 3:
            raise ValueError("target order must be at least 3")
        if self.kind == ORDER_GAMMA:
            if not (0.0 <= self.gamma < 1.0 and math.isfinite(self.gamma)):
                raise ValueError(f"order parameter must lie in [0, 1), got {self.gamma}")
        if self.kind in (HALFPLANE, ORDER_GAMMA):
            # quotient kinds are monotone by closed form
            object.__setattr__(self, "monotone_attested", True)
            object.__setattr__(self, "B", ())
        else:
            B = tuple(complex(b) for b in self.B)
            if not B:
                raise ValueError("polynomial target needs at least B1")
            if any(not (math.isfinite(b.real) and math.isfinite(b.imag)) for b in B):
                raise ValueError("polynomial coefficients must be finite")
            if B[0].imag != 0 or B[0].real <= 0:
                raise ValueError("B1 must be real and positive")
            object.__setattr__(self, "B", B)
            low = self.min_real_part()
            if low <= 0:
                raise ValueError(
                    f"polynomial target fails the positivity grid check (min Re = {low:.6f})"
                )

    # -- coefficients ---------------------------------------------------

    @property
    def is_builtin(self) -> bool:
        return self.kind in (HALFPLANE, ORDER_GAMMA)

    def Bn(self, n: int) -> complex:
        """Taylor coefficient B_n of phi, n >= 1."""
        if n < 1:
            raise ValueError("Bn is defined for n >= 1")
        if self.kind == HALFPLANE:
            return 2.0
        if self.kind == ORDER_GAMMA:
            return 2.0 * (1.0 - self.gamma)
        return self.B[n - 1] if n <= len(self.B) else 0.0

    @property
    def B1(self) -> float:
        return complex(self.Bn(1)).real

    @property
    def B2(self) -> complex:
        return complex(self.Bn(2))

    def series(self, order: int | None = None) -> PowerSeries:
        n = self.order if order is None else order
        c = np.zeros(n + 1, dtype=np.complex128)
        c[0] = 1.0
        if self.kind == POLYNOMIAL:
            m = min(len(self.B), n)
            c[1 : m + 1] = self.B[:m]
        else:
            c[1:] = 2.0 * (1.0 - self.gamma)
        return PowerSeries(c)

    # -- evaluation -----------------------------------------------------

    def eval_real(self, t: float) -> float:
        """Closed-form phi(t) for t in [-1, 1], builtin kinds only.

        t = -1 is the limiting value (0 for halfplane, gamma in general);
        t = 1 is the pole of the quotient kinds and returns +inf.
        """
        if not self.is_builtin:
            raise ValueError("eval_real is defined for builtin kinds only")
        t = float(t)
        if math.isnan(t) or t < -1.0 or t > 1.0:
            raise ValueError(f"eval_real needs t in [-1, 1], got {t}")
        if t == 1.0:
            return math.inf
        return (1.0 + (1.0 - 2.0 * self.gamma) * t) / (1.0 - t)

    def eval_complex(self, z):
        """Closed-form phi(z); accepts scalars or numpy arrays, |z| < 1."""
        z = np.asarray(z, dtype=np.complex128)
        if self.kind == POLYNOMIAL:
            out = np.zeros_like(z)
            for b in reversed(self.B):
                out = (out + b) * z
            out = out + 1.0
        else:
            out = (1.0 + (1.0 - 2.0 * self.gamma) * z) / (1.0 - z)
        return out if out.ndim else complex(out)

    def min_real_part(
        self, radii=POSITIVITY_RADII, angles: int = POSITIVITY_ANGLES
    ) -> float:
        """min Re phi over the sampling grid used by the positivity check."""
        ts = 2.0 * np.pi * np.arange(angles) / angles
        ring = np.exp(1j * ts)
        low = math.inf
        for r in radii:
            low = min(low, float(np.min(np.real(self.eval_complex(r * ring)))))
        return low

    def minmax(self, r: float) -> tuple[float, float]:
        """(min, max) of |phi| on |z| = r, in closed form.

        Builtin kinds use (phi(-r), phi(r)); polynomial kinds require the
        caller's monotone attestation and evaluate the same two points.
        """
        if not 0.0 < r < 1.0:
            raise ValueError(f"minmax needs 0 < r < 1, got {r}")
        if self.is_builtin:
            s = 1.0 - 2.0 * self.gamma
            return (1.0 - s * r) / (1.0 + r), (1.0 + s * r) / (1.0 - r)
        if not self.monotone_attested:
            raise ValueError(
                "polynomial target: minmax needs the caller's monotone attestation"
            )
        lo = abs(self.eval_complex(complex(-r)))
        hi = abs(self.eval_complex(complex(r)))
        if lo <= 0:
            raise ValueError("attested polynomial target has |phi(-r)| = 0")
        return lo, hi

    # -- plumbing ---------------------------------------------------------

    def with_order(self, order: int) -> "MaMindaFunction":
        return MaMindaFunction(self.kind, self.gamma, self.B, order, self.monotone_attested)

    def spec(self) -> str:
        """CLI/config specification string, e.g. 'gamma:0.25'."""
        if self.kind == HALFPLANE:
            return "halfplane"
        if self.kind == ORDER_GAMMA:
            return f"gamma:{format_float(self.gamma)}"
        from .fileio import format_complex

        return "poly:" + ",".join(format_complex(b) for b in self.B)

    def provenance(self) -> dict:
        return {"spec": self.spec(), "monotone_attested": self.monotone_attested}


def phi_halfplane(order: int = DEFAULT_ORDER) -> MaMindaFunction:
    return MaMindaFunction(HALFPLANE, order=order)


def phi_order_gamma(gamma: float, order: int = DEFAULT_ORDER) -> MaMindaFunction:
    return MaMindaFunction(ORDER_GAMMA, gamma=float(gamma), order=order)


def phi_polynomial(B, order: int = DEFAULT_ORDER, monotone_attested: bool = False) -> MaMindaFunction:
    return MaMindaFunction(POLYNOMIAL, B=tuple(B), order=order, monotone_attested=monotone_attested)


def phi_make(kind: str, params=None, order: int = DEFAULT_ORDER, monotone_attested: bool = False) -> MaMindaFunction:
    """Factory keyed by kind name; params is gamma or the B list."""
    if kind == HALFPLANE:
        return phi_halfplane(order)
    if kind == ORDER_GAMMA:
        return phi_order_gamma(params, order)
    if kind == POLYNOMIAL:
        return phi_polynomial(params, order, monotone_attested)
    raise ValueError(f"unknown target kind: {kind!r}")


def parse_phi_spec(text: str, order: int = DEFAULT_ORDER, monotone_attested: bool = False) -> MaMindaFunction:
    """Parse 'halfplane', 'gamma:G', or 'poly:B1,B2,...'."""
    s = text.strip()
    if s == "halfplane":
        return phi_halfplane(order)
    if s.startswith("gamma:"):
        try:
            g = float(s[len("gamma:") :])
        except ValueError:
            raise ValueError(f"malformed gamma spec: {text!r}") from None
        return phi_order_gamma(g, order)
    if s.startswith("poly:"):
        items = [p for p in s[len("poly:") :].split(",") if p]
        if not items:
            raise ValueError(f"empty polynomial spec: {text!r}")
        return phi_polynomial([parse_complex(p) for p in items], order, monotone_attested)
    raise ValueError(f"unknown target spec: {text!r} (expected halfplane, gamma:G, or poly:B1,...)")
