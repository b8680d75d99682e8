"""Pure numpy implementation of the truncated-series kernels.

Coefficient arrays are 1-d complex128; index = degree, length = order + 1.
Callers (ksverify.series) validate shapes and preconditions, so the kernels
assume well-formed input. ksverify._native provides the same four symbols
compiled with Cython; ksverify.kernels picks one at import time.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Cauchy product truncated to the common order."""
    return np.convolve(a, b)[: a.shape[0]]


def reciprocal(a: np.ndarray) -> np.ndarray:
    """Multiplicative inverse of a series with a[0] != 0.

    Newton iteration r <- r (2 - a r); the number of correct coefficients
    doubles per step, so the loop runs O(log order) convolutions.
    """
    n = a.shape[0]
    r = np.zeros(n, dtype=np.complex128)
    r[0] = 1.0 / a[0]
    known = 1
    while known < n:
        t = -np.convolve(a, r)[:n]
        t[0] += 2.0
        r = np.convolve(r, t)[:n]
        known *= 2
    return r


def compose(outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
    """outer(inner(z)) with inner[0] == 0, by Horner from the top degree."""
    n = outer.shape[0]
    out = np.zeros(n, dtype=np.complex128)
    out[0] = outer[n - 1]
    for k in range(n - 2, -1, -1):
        out = np.convolve(out, inner)[:n]
        out[0] += outer[k]
    return out


def eval_many(c: np.ndarray, zs: np.ndarray) -> np.ndarray:
    """Horner evaluation of the truncated sum at every point of zs."""
    out = np.full(zs.shape, c[c.shape[0] - 1], dtype=np.complex128)
    for k in range(c.shape[0] - 2, -1, -1):
        out = out * zs + c[k]
    return out
