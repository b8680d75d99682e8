"""Kernel backend selection.

The four hot series operations (Cauchy product, reciprocal, composition,
grid evaluation) exist twice: compiled (ksverify._native, Cython) and pure
numpy (ksverify._reference). Import prefers the compiled module and falls
back silently when it is not built. Set KSVERIFY_BACKEND=python or =cython
to force a choice; forcing cython raises if the extension is missing.

Series reversion is implemented once, on top of whichever backend is
active, since Newton iteration spends all its time inside compose/mul.
"""

from __future__ import annotations

import os

import numpy as np

from . import _reference

try:
    from . import _native
except ImportError:
    _native = None


def _select():
    forced = os.environ.get("KSVERIFY_BACKEND", "").strip().lower()
    if forced in ("", "auto"):
        return _native if _native is not None else _reference
    if forced == "python":
        return _reference
    if forced == "cython":
        if _native is None:
            raise ImportError("KSVERIFY_BACKEND=cython but ksverify._native is not built")
        return _native
    raise ImportError(f"unknown KSVERIFY_BACKEND value: {forced!r}")


_impl = _select()

BACKEND = _impl.BACKEND
mul = _impl.mul
reciprocal = _impl.reciprocal
compose = _impl.compose
eval_many = _impl.eval_many


def available_backends() -> dict:
    """Name -> kernel module, for benchmarks and cross-checks."""
    out = {"python": _reference}
    if _native is not None:
        out["cython"] = _native
    return out


def revert(c: np.ndarray, impl=None) -> np.ndarray:
    """Compositional inverse of c (c[0] == 0, c[1] == 1), Newton iteration.

    Each step h <- h - (c(h) - id)/c'(h) doubles the number of correct
    coefficients; with valuation bookkeeping the truncated fixed point is
    exact, so the loop needs ceil(log2(order)) steps.
    """
    impl = impl if impl is not None else _impl
    n = c.shape[0]
    h = np.zeros(n, dtype=np.complex128)
    h[1] = 1.0
    if n <= 2:
        return h
    dp = np.zeros(n, dtype=np.complex128)
    dp[: n - 1] = c[1:] * np.arange(1, n)
    known = 1
    while known < n - 1:
        e = np.asarray(impl.compose(c, h))
        e[1] -= 1.0
        slope = impl.compose(dp, h)
        h = h - np.asarray(impl.mul(e, impl.reciprocal(slope)))
        known *= 2
    return h
