"""Truncated complex power series about the origin.

Everything in this package funnels through this type: generators produce
series, coefficient identities are read off series, and the subordination
engine composes and reverts them. A series of order N stores coefficients
c0..cN (complex128) and stands for sum c_k z^k with the tail beyond degree
N unknown, not zero. Binary operations require equal orders on both
operands; align explicitly with pad() or truncate().

Evaluation is restricted to |z| <= 0.95 so the discarded tail can be
bounded. Under the growth model |c_k| <= C k, with C estimated from the
stored coefficients, the tail beyond order N at radius r is at most

    C r^(N+1) ((N+1)(1-r) + r) / (1-r)^2,

which is what tail_bound() returns and evaluate_with_tail() attaches to
the partial sum.

Instances are immutable; the coefficient buffer is marked read-only.
"""

from __future__ import annotations

import numpy as np

from . import kernels

EVAL_RADIUS = 0.95
_NORM_TOL = 1e-12
_RADIUS_SLACK = 1e-12  # grid points like 0.9*exp(i t) may overshoot by an ulp


class PowerSeries:
    """Degree-truncated Taylor expansion about 0."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=np.complex128)
        if c.ndim != 1 or c.shape[0] < 2:
            raise ValueError("a series needs coefficients c0..cN with N >= 1")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.setflags(write=False)
        self._c = c

    # -- constructors ---------------------------------------------------

    @classmethod
    def zeros(cls, order: int) -> "PowerSeries":
        return cls(np.zeros(order + 1, dtype=np.complex128))

    @classmethod
    def constant(cls, value: complex, order: int) -> "PowerSeries":
        c = np.zeros(order + 1, dtype=np.complex128)
        c[0] = value
        return cls(c)

    @classmethod
    def variable(cls, order: int) -> "PowerSeries":
        """The series z."""
        c = np.zeros(order + 1, dtype=np.complex128)
        c[1] = 1.0
        return cls(c)

    # -- basic access ---------------------------------------------------

    @property
    def order(self) -> int:
        return self._c.shape[0] - 1

    @property
    def coeffs(self) -> np.ndarray:
        """Read-only coefficient array, index = degree."""
        return self._c

    def __getitem__(self, k: int) -> complex:
        return complex(self._c[k])

    def __repr__(self) -> str:
        head = np.array2string(self._c[: min(4, self._c.shape[0])], precision=6)
        return f"PowerSeries(order={self.order}, c={head}...)"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and bool(np.array_equal(self._c, other._c))

    __hash__ = None

    def coefficient_distance(self, other: "PowerSeries") -> float:
        """max_k |c_k(self) - c_k(other)| over the common (equal) order."""
        other = self._same_order(other)
        return float(np.max(np.abs(self._c - other._c)))

    def isclose(self, other: "PowerSeries", tol: float = 1e-12) -> bool:
        return self.coefficient_distance(other) <= tol

    # -- ring operations ------------------------------------------------

    def _same_order(self, other) -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            raise TypeError(f"expected PowerSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            return PowerSeries(self._c + self._same_order(other)._c)
        c = self._c.copy()
        c[0] += other
        return PowerSeries(c)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            return PowerSeries(self._c - self._same_order(other)._c)
        c = self._c.copy()
        c[0] -= other
        return PowerSeries(c)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PowerSeries(-self._c)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return PowerSeries(kernels.mul(self._c, self._same_order(other)._c))
        return PowerSeries(self._c * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return self * self._same_order(other).reciprocal()
        return PowerSeries(self._c / other)

    def reciprocal(self) -> "PowerSeries":
        """1/self; the constant term must be nonzero."""
        if self._c[0] == 0:
            raise ZeroDivisionError("reciprocal of a series with zero constant term")
        return PowerSeries(kernels.reciprocal(self._c))

    def compose(self, inner: "PowerSeries") -> "PowerSeries":
        """self(inner(z)); inner must have zero constant term."""
        inner = self._same_order(inner)
        if inner._c[0] != 0:
            raise ValueError("composition requires inner constant term exactly 0")
        return PowerSeries(kernels.compose(self._c, inner._c))

    def derivative(self) -> "PowerSeries":
        """Coefficientwise derivative; the order drops by one (callers re-pad)."""
        if self.order < 2:
            raise ValueError("derivative would drop below order 1")
        n = self._c.shape[0]
        return PowerSeries(self._c[1:] * np.arange(1, n))

    def antiderivative(self) -> "PowerSeries":
        """Term-by-term antiderivative vanishing at 0; the order grows by one."""
        n = self._c.shape[0]
        out = np.zeros(n + 1, dtype=np.complex128)
        out[1:] = self._c / np.arange(1, n + 1)
        return PowerSeries(out)

    def functional_inverse(self) -> "PowerSeries":
        """Compositional inverse of a normalized series (c0 = 0, c1 = 1)."""
        if self._c[0] != 0:
            raise ValueError("functional inverse requires constant term exactly 0")
        if abs(self._c[1] - 1.0) > _NORM_TOL:
            raise ValueError("functional inverse requires unit linear coefficient")
        return PowerSeries(kernels.revert(self._c))

    def reflect(self) -> "PowerSeries":
        """z -> -z on the argument: c_k -> (-1)^k c_k."""
        signs = np.where(np.arange(self._c.shape[0]) % 2 == 0, 1.0, -1.0)
        return PowerSeries(self._c * signs)

    # -- order management -----------------------------------------------

    def truncate(self, order: int) -> "PowerSeries":
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {order}")
        return PowerSeries(self._c[: order + 1])

    def pad(self, order: int) -> "PowerSeries":
        if order < self.order:
            raise ValueError(f"cannot pad order {self.order} down to {order}")
        c = np.zeros(order + 1, dtype=np.complex128)
        c[: self._c.shape[0]] = self._c
        return PowerSeries(c)

    def shift_down(self, m: int, tol: float = 1e-12) -> "PowerSeries":
        """Divide by z^m by index shift; the dropped coefficients must vanish.

        This is how common factors like z^2 are cancelled exactly, instead
        of evaluating a 0/0 quotient.
        """
        if m < 1 or self.order - m < 1:
            raise ValueError(f"cannot shift order {self.order} down by {m}")
        dropped = np.max(np.abs(self._c[:m]))
        if dropped > tol:
            raise ValueError(f"shift_down would discard nonzero coefficients (max |c| = {dropped:.3e})")
        return PowerSeries(self._c[m:])

    # -- evaluation -----------------------------------------------------

    def tail_bound(self, r: float) -> float:
        """Geometric bound on the discarded tail at radius r (model |c_k| <= C k)."""
        if not 0 <= r < 1:
            raise ValueError("tail bound requires 0 <= r < 1")
        if r == 0:
            return 0.0
        n = self.order
        ks = np.arange(1, n + 1)
        growth = np.max(np.abs(self._c[1:]) / ks) if n >= 1 else 0.0
        growth = max(growth, float(np.abs(self._c[0])))
        return growth * r ** (n + 1) * ((n + 1) * (1 - r) + r) / (1 - r) ** 2

    def _check_radius(self, zs: np.ndarray) -> None:
        big = float(np.max(np.abs(zs)))
        if big > EVAL_RADIUS + _RADIUS_SLACK:
            raise ValueError(f"evaluation restricted to |z| <= {EVAL_RADIUS}, got {big:.6f}")

    def evaluate(self, z: complex) -> complex:
        """Partial sum at a single point, |z| <= 0.95."""
        zs = np.asarray([z], dtype=np.complex128)
        self._check_radius(zs)
        return complex(kernels.eval_many(self._c, zs)[0])

    def evaluate_with_tail(self, z: complex) -> tuple[complex, float]:
        """(partial sum, tail estimate) at a single point."""
        return self.evaluate(z), self.tail_bound(abs(z))

    def evaluate_many(self, zs) -> np.ndarray:
        """Partial sums on an array of points, all with |z| <= 0.95."""
        zs = np.ascontiguousarray(zs, dtype=np.complex128)
        self._check_radius(zs)
        return np.asarray(kernels.eval_many(self._c, zs))

    __call__ = evaluate
