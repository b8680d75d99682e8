"""Builders for the actors of the class: starlike functions of order 1/2 in
atomic Herglotz form, Schwarz maps with exact truncated series, the odd
starlike transform, and verified class members.

An atom list ((x1, l1), ..., (xm, lm)) with unimodular x_k and positive
weights summing to 1 represents

    g(z) = z * prod_k (1 - x_k z)^(-l_k),

for which z g'(z)/g(z) = sum_k l_k / (1 - x_k z) has real part > 1/2 on
the disk, so membership in the order-1/2 starlike family is exact by
construction rather than checked numerically. Atomic measures are dense
in the Herglotz representation, which makes this family a good sampling
set for campaigns.

The odd transform G(z) = -g(z) g(-z) / z = z + (2 g3 - g2^2) z^3 + ... is
odd and starlike; the z^2 factor common to -z^2 f'(z) and g(z) g(-z) is
cancelled by index shift, never evaluated as a quotient of zeros.

member_from builds f with f(0) = 0, f'(0) = 1 and

    -z^2 f'(z) / (g(z) g(-z)) = phi(w(z))

by integrating (G(z)/z) * phi(w(z)) termwise, then re-verifies both the
low-order coefficient identities and the defining relation as series.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .fileio import format_complex, format_float, parse_complex
from .phi import MaMindaFunction
from .series import PowerSeries

DEFAULT_ORDER = 24
UNIT_TOL = 1e-12
WEIGHT_TOL = 1e-12
IDENTITY_TOL = 1e-12
_VERIFY_DEGREE_CAP = 64  # float error in the relation check grows ~ k^2 eps

MONOMIAL = "mono"
SCALED = "rot"
BLASCHKE = "blaschke"


def _binomial_factor(x: complex, lam: float, order: int) -> np.ndarray:
    """(1 - x z)^(-lam) via the ratio recurrence (no cancellation)."""
    c = np.empty(order + 1, dtype=np.complex128)
    c[0] = 1.0
    for k in range(1, order + 1):
        c[k] = c[k - 1] * x * (lam + k - 1) / k
    return c


@dataclass(frozen=True)
class StarlikeAtomic:
    """g(z) = z prod (1 - x_k z)^(-l_k) with unimodular atoms x_k."""

    atoms: tuple[tuple[complex, float], ...]
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        atoms = tuple((complex(x), float(l)) for x, l in self.atoms)
        if not atoms:
            raise ValueError("at least one atom is required")
        total = 0.0
        for x, lam in atoms:
            if abs(abs(x) - 1.0) > UNIT_TOL:
                raise ValueError(f"atom location must be unimodular, got |x| = {abs(x)!r}")
            if not (lam > 0 and math.isfinite(lam)):
                raise ValueError(f"atom weight must be positive, got {lam!r}")
            total += lam
        if abs(total - 1.0) > WEIGHT_TOL:
            raise ValueError(f"atom weights must sum to 1, got {total!r}")
        if self.order < 3:
            raise ValueError("starlike generator order must be at least 3")
        object.__setattr__(self, "atoms", atoms)

    def series(self, order: int | None = None) -> PowerSeries:
        n = self.order if order is None else order
        prod = np.zeros(n + 1, dtype=np.complex128)
        prod[0] = 1.0
        from . import kernels

        for x, lam in self.atoms:
            prod = np.asarray(kernels.mul(prod, _binomial_factor(x, lam, n)))
        g = np.zeros(n + 1, dtype=np.complex128)
        g[1:] = prod[:n]
        return PowerSeries(g)

    @cached_property
    def _own_series(self) -> PowerSeries:
        return self.series()

    @property
    def g2(self) -> complex:
        return self._own_series[2]

    @property
    def g3(self) -> complex:
        return self._own_series[3]

    def with_order(self, order: int) -> "StarlikeAtomic":
        return StarlikeAtomic(self.atoms, order)

    def spec(self) -> str:
        """CLI/config specification string, e.g. 'atoms:1@1'."""
        return "atoms:" + ",".join(
            f"{format_complex(x)}@{format_float(l)}" for x, l in self.atoms
        )

    def provenance(self) -> dict:
        return {"spec": self.spec()}


def starlike_atomic(atoms, order: int = DEFAULT_ORDER) -> StarlikeAtomic:
    return StarlikeAtomic(tuple((complex(x), float(l)) for x, l in atoms), order)


@dataclass(frozen=True)
class SchwarzMap:
    """Analytic self-map of the disk with w(0) = 0, as an exact series.

    Kinds: monomial e^(i theta) z^k; scaled rotation rho e^(i theta) z
    with rho < 1; and z times a product of disk automorphisms
    (a - z)/(1 - conj(a) z) with |a| < 1.
    """

    kind: str
    params: tuple
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        if self.order < 3:
            raise ValueError("Schwarz map order must be at least 3")
        if self.kind == MONOMIAL:
            k, theta = self.params
            k = int(k)
            if not 1 <= k <= self.order:
                raise ValueError(f"monomial exponent must lie in [1, order], got {k}")
            object.__setattr__(self, "params", (k, float(theta)))
        elif self.kind == SCALED:
            rho, theta = self.params
            rho = float(rho)
            if not (0.0 <= rho < 1.0 and math.isfinite(rho)):
                raise ValueError(f"scaling must lie in [0, 1), got {rho!r}")
            object.__setattr__(self, "params", (rho, float(theta)))
        elif self.kind == BLASCHKE:
            pts = tuple(complex(a) for a in self.params)
            if not pts:
                raise ValueError("Blaschke kind needs at least one automorphism point")
            if any(abs(a) >= 1.0 for a in pts):
                raise ValueError("Blaschke points must lie strictly inside the disk")
            object.__setattr__(self, "params", pts)
        else:
            raise ValueError(f"unknown Schwarz map kind: {self.kind!r}")

    @classmethod
    def monomial(cls, k: int, theta: float = 0.0, order: int = DEFAULT_ORDER) -> "SchwarzMap":
        return cls(MONOMIAL, (k, theta), order)

    @classmethod
    def scaled(cls, rho: float, theta: float = 0.0, order: int = DEFAULT_ORDER) -> "SchwarzMap":
        return cls(SCALED, (rho, theta), order)

    @classmethod
    def blaschke(cls, points, order: int = DEFAULT_ORDER) -> "SchwarzMap":
        return cls(BLASCHKE, tuple(points), order)

    def series(self, order: int | None = None) -> PowerSeries:
        n = self.order if order is None else order
        c = np.zeros(n + 1, dtype=np.complex128)
        if self.kind == MONOMIAL:
            k, theta = self.params
            if k > n:
                raise ValueError(f"monomial exponent {k} exceeds requested order {n}")
            c[k] = cmath.exp(1j * theta)
        elif self.kind == SCALED:
            rho, theta = self.params
            c[1] = rho * cmath.exp(1j * theta)
        else:
            from . import kernels

            prod = np.zeros(n + 1, dtype=np.complex128)
            prod[0] = 1.0
            for a in self.params:
                prod = np.asarray(kernels.mul(prod, self._automorphism(a, n)))
            c[1:] = prod[:n]
        return PowerSeries(c)

    @staticmethod
    def _automorphism(a: complex, order: int) -> np.ndarray:
        """(a - z)/(1 - conj(a) z) = a - (1 - |a|^2) sum_{k>=1} conj(a)^(k-1) z^k."""
        c = np.empty(order + 1, dtype=np.complex128)
        c[0] = a
        drop = 1.0 - abs(a) ** 2
        tail = -drop
        for k in range(1, order + 1):
            c[k] = tail
            tail *= a.conjugate()
        return c

    @cached_property
    def _own_series(self) -> PowerSeries:
        return self.series()

    @property
    def w1(self) -> complex:
        return self._own_series[1]

    @property
    def w2(self) -> complex:
        return self._own_series[2]

    def with_order(self, order: int) -> "SchwarzMap":
        return SchwarzMap(self.kind, self.params, order)

    def spec(self) -> str:
        """CLI/config specification string, e.g. 'mono:2' or 'rot:0.5,0.3'."""
        if self.kind == MONOMIAL:
            k, theta = self.params
            return f"mono:{k}" if theta == 0.0 else f"mono:{k},{format_float(theta)}"
        if self.kind == SCALED:
            rho, theta = self.params
            return f"rot:{format_float(rho)},{format_float(theta)}"
        return "blaschke:" + ",".join(format_complex(a) for a in self.params)

    def provenance(self) -> dict:
        return {"spec": self.spec()}


def schwarz_make(kind: str, params, order: int = DEFAULT_ORDER) -> SchwarzMap:
    return SchwarzMap(kind, tuple(params) if isinstance(params, (list, tuple)) else params, order)


# -- grammar -----------------------------------------------------------


def parse_g_spec(text: str, order: int = DEFAULT_ORDER) -> StarlikeAtomic:
    """Parse 'atoms:x@l,x@l,...' with complex x and positive real l."""
    s = text.strip()
    if not s.startswith("atoms:"):
        raise ValueError(f"unknown starlike spec: {text!r} (expected atoms:x@l,...)")
    atoms = []
    for item in s[len("atoms:") :].split(","):
        if not item:
            continue
        try:
            x_part, l_part = item.split("@")
            atoms.append((parse_complex(x_part), float(l_part)))
        except ValueError as exc:
            raise ValueError(f"malformed atom {item!r} in {text!r}: {exc}") from None
    if not atoms:
        raise ValueError(f"empty atom list in {text!r}")
    return StarlikeAtomic(tuple(atoms), order)


def parse_w_spec(text: str, order: int = DEFAULT_ORDER) -> SchwarzMap:
    """Parse 'mono:k[,theta]', 'rot:rho[,theta]', or 'blaschke:a1,a2,...'."""
    s = text.strip()
    head, sep, rest = s.partition(":")
    if not sep or not rest:
        raise ValueError(f"unknown Schwarz spec: {text!r}")
    parts = [p for p in rest.split(",") if p]
    try:
        if head == MONOMIAL:
            if len(parts) not in (1, 2):
                raise ValueError("mono takes k and an optional angle")
            return SchwarzMap.monomial(int(parts[0]), float(parts[1]) if len(parts) == 2 else 0.0, order)
        if head == SCALED:
            if len(parts) not in (1, 2):
                raise ValueError("rot takes rho and an optional angle")
            return SchwarzMap.scaled(float(parts[0]), float(parts[1]) if len(parts) == 2 else 0.0, order)
        if head == BLASCHKE:
            return SchwarzMap.blaschke([parse_complex(p) for p in parts], order)
    except ValueError as exc:
        raise ValueError(f"malformed Schwarz spec {text!r}: {exc}") from None
    raise ValueError(f"unknown Schwarz spec kind: {head!r}")


# -- the odd transform and class members --------------------------------


def G_from_g(g: StarlikeAtomic, order: int | None = None) -> PowerSeries:
    """Odd starlike G(z) = -g(z) g(-z)/z, exact to the requested order."""
    n = g.order if order is None else order
    gs = g.series(n + 2)
    p = gs * gs.reflect()
    return (-p).shift_down(1).truncate(n)


def _G_over_z(g: StarlikeAtomic, order: int) -> PowerSeries:
    """G(z)/z = -g(z) g(-z)/z^2, constant term 1, exact to the order."""
    gs = g.series(order + 2)
    p = gs * gs.reflect()
    return (-p).shift_down(2)


@dataclass(frozen=True)
class ClassMember:
    """A verified member f together with the data (g, w, phi) producing it."""

    f: PowerSeries
    g: StarlikeAtomic
    w: SchwarzMap
    phi: MaMindaFunction

    @property
    def a2(self) -> complex:
        return self.f[2]

    @property
    def a3(self) -> complex:
        return self.f[3]

    @property
    def order(self) -> int:
        return self.f.order

    def provenance(self) -> dict:
        return {
            "g": self.g.spec(),
            "w": self.w.spec(),
            "phi": self.phi.spec(),
            "order": self.f.order,
        }


def member_from(g: StarlikeAtomic, w: SchwarzMap, phi: MaMindaFunction, verify: bool = True) -> ClassMember:
    """Integrate (G(z)/z) phi(w(z)) into the member f determined by (g, w, phi).

    All three generators must carry the same order N; the pipeline runs at
    a slightly higher internal order so every stored coefficient of f is
    exact up to rounding.
    """
    if not (g.order == w.order == phi.order):
        raise ValueError(
            f"incompatible orders: g={g.order}, w={w.order}, phi={phi.order}"
        )
    n = g.order
    if n < 3:
        raise ValueError("member construction needs order at least 3")
    q = _G_over_z(g, n)
    target = phi.series(n).compose(w.series(n))
    f = (q * target).antiderivative().truncate(n)
    member = ClassMember(f=f, g=g, w=w, phi=phi)
    if verify:
        _verify_member(member, q, target)
    return member


def _verify_member(member: ClassMember, q: PowerSeries, target: PowerSeries) -> None:
    f, g, w, phi = member.f, member.g, member.w, member.phi
    if abs(f[0]) > 0 or abs(f[1] - 1.0) > IDENTITY_TOL:
        raise RuntimeError("constructed member is not normalized")
    err2 = abs(2.0 * member.a2 - phi.B1 * w.w1)
    expected3 = 2.0 * g.g3 - g.g2**2 + phi.B1 * w.w2 + phi.B2 * w.w1**2
    err3 = abs(3.0 * member.a3 - expected3)
    if max(err2, err3) > IDENTITY_TOL:
        raise RuntimeError(
            f"coefficient identities violated (errors {err2:.3e}, {err3:.3e})"
        )
    # independent route: derivative * reciprocal must reproduce phi(w(z))
    n = f.order
    lhs = f.derivative() * q.truncate(n - 1).reciprocal()
    cap = min(n - 1, _VERIFY_DEGREE_CAP)
    diff = np.max(np.abs(lhs.coeffs[: cap + 1] - target.coeffs[: cap + 1]))
    if diff > IDENTITY_TOL:
        raise RuntimeError(f"defining relation violated as series (max error {diff:.3e})")


EXTREMAL_KINDS = ("fs_max", "fs_odd", "dist_min")


def extremal(kind: str, phi: MaMindaFunction) -> ClassMember:
    """Named sharpness witnesses.

    fs_max:   g = z/(1-z),        w = z    (maximizes the coefficient functional)
    fs_odd:   g = z/(1-z),        w = z^2  (odd member, first-branch equality)
    dist_min: g = z(1+z^2)^(-1/2), w = z   (attains the lower distortion bound)
    """
    n = phi.order
    if kind in ("fs_max", "fs_odd"):
        g = StarlikeAtomic(((1.0 + 0j, 1.0),), n)
        w = SchwarzMap.monomial(1 if kind == "fs_max" else 2, 0.0, n)
    elif kind == "dist_min":
        g = StarlikeAtomic(((1j, 0.5), (-1j, 0.5)), n)
        w = SchwarzMap.monomial(1, 0.0, n)
    else:
        raise ValueError(f"unknown extremal kind: {kind!r} (expected one of {EXTREMAL_KINDS})")
    return member_from(g, w, phi)
