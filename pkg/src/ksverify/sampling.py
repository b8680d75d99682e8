"""Deterministic random inputs for verification campaigns.

Every trial owns a counter-based generator keyed by (seed, trial index), so
results do not depend on execution order and any single trial can be replayed
standalone. The algorithm name is recorded in reports; see RNG_NAME.
"""

from __future__ import annotations

import math

import numpy as np

from .generators import DEFAULT_ORDER, SchwarzMap, StarlikeAtomic
from .series import PowerSeries

RNG_NAME = "philox4x64"

_MASK64 = (1 << 64) - 1

MAX_ATOMS = 4
MAX_MONOMIAL_DEGREE = 3
MAX_SCALE = 0.9
MAX_BLASCHKE_RADIUS = 0.8
MU_RADIUS = 3.0

# sum k|c_k| stays below 1, so these series are univalent and their
# functional inverses have slowly growing coefficients; anything wilder
# turns Newton reversion at order ~32 into noise
SERIES_SCALE = 0.1
SERIES_DECAY = 0.4


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Generator for one trial: Philox keyed by the packed (seed, trial) pair."""
    key = (int(seed) & _MASK64) | (int(trial) << 64)
    return np.random.Generator(np.random.Philox(key=key))


def _unit_circle(rng: np.random.Generator) -> complex:
    return complex(np.exp(1j * rng.uniform(0.0, 2.0 * math.pi)))


def _disk(rng: np.random.Generator, radius: float) -> complex:
    # sqrt for uniform area density
    return radius * math.sqrt(rng.uniform()) * _unit_circle(rng)


def random_starlike(rng: np.random.Generator, order: int = DEFAULT_ORDER) -> StarlikeAtomic:
    """Atomic-measure generator: 1..4 unimodular atoms with Dirichlet weights."""
    natoms = int(rng.integers(1, MAX_ATOMS + 1))
    xs = [_unit_circle(rng) for _ in range(natoms)]
    lams = rng.dirichlet(np.ones(natoms))
    return StarlikeAtomic(tuple(zip(xs, (float(l) for l in lams))), order)


def random_schwarz(rng: np.random.Generator, order: int = DEFAULT_ORDER) -> SchwarzMap:
    """One of the three map families, parameters drawn inside safe ranges."""
    kind = int(rng.integers(0, 3))
    if kind == 0:
        k = int(rng.integers(1, MAX_MONOMIAL_DEGREE + 1))
        return SchwarzMap.monomial(k, float(rng.uniform(0.0, 2.0 * math.pi)), order)
    if kind == 1:
        rho = float(rng.uniform(0.0, MAX_SCALE))
        return SchwarzMap.scaled(rho, float(rng.uniform(0.0, 2.0 * math.pi)), order)
    npts = int(rng.integers(1, 3))
    points = tuple(_disk(rng, MAX_BLASCHKE_RADIUS) for _ in range(npts))
    return SchwarzMap.blaschke(points, order)


def random_normalized_series(rng: np.random.Generator, order: int = DEFAULT_ORDER) -> PowerSeries:
    """z + sum c_k z^k with |c_k| <= SERIES_SCALE * SERIES_DECAY^(k-2)."""
    c = np.zeros(order + 1, dtype=np.complex128)
    c[1] = 1.0
    for k in range(2, order + 1):
        c[k] = SERIES_SCALE * SERIES_DECAY ** (k - 2) * _disk(rng, 1.0)
    return PowerSeries(c)


def random_mu(rng: np.random.Generator, radius: float = MU_RADIUS) -> complex:
    """Uniform draw from the parameter disk |mu| <= radius."""
    return _disk(rng, radius)
