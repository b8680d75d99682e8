"""Deterministic trial sampling: reproducibility and validity of draws."""

import numpy as np
import pytest

from ksverify.sampling import (
    MAX_ATOMS,
    MAX_BLASCHKE_RADIUS,
    MAX_MONOMIAL_DEGREE,
    MAX_SCALE,
    MU_RADIUS,
    RNG_NAME,
    SERIES_DECAY,
    SERIES_SCALE,
    random_mu,
    random_normalized_series,
    random_schwarz,
    random_starlike,
    trial_rng,
)


def test_rng_name_is_recorded():
    assert RNG_NAME == "philox4x64"


def test_trial_rng_is_reproducible():
    a = trial_rng(42, 7).random(8)
    b = trial_rng(42, 7).random(8)
    assert np.array_equal(a, b)


def test_trials_are_distinct_streams():
    draws = {tuple(trial_rng(42, t).random(4)) for t in range(50)}
    assert len(draws) == 50
    # and distinct seeds reach distinct streams for the same trial
    assert not np.array_equal(trial_rng(1, 0).random(4), trial_rng(2, 0).random(4))


def test_trial_rng_accepts_large_indices():
    # trial indexes the high word, so huge campaigns never wrap the seed
    g = trial_rng(2**64 - 1, 10**9)
    assert 0.0 <= g.random() < 1.0


def test_random_starlike_is_valid_and_deterministic():
    for t in range(30):
        g = random_starlike(trial_rng(3, t), 16)
        assert 1 <= len(g.atoms) <= MAX_ATOMS
        assert g.order == 16
        total = sum(lam for _, lam in g.atoms)
        assert total == pytest.approx(1.0, abs=1e-12)
        assert all(abs(abs(x) - 1.0) <= 1e-12 for x, _ in g.atoms)
    assert random_starlike(trial_rng(3, 5), 16) == random_starlike(trial_rng(3, 5), 16)


def test_random_schwarz_is_valid():
    kinds = set()
    for t in range(60):
        w = random_schwarz(trial_rng(4, t), 16)
        kinds.add(w.kind)
        assert w.order == 16
        if w.kind == "mono":
            k, _ = w.params
            assert 1 <= k <= MAX_MONOMIAL_DEGREE
        elif w.kind == "rot":
            rho, _ = w.params
            assert 0 <= rho <= MAX_SCALE
        else:
            assert all(abs(a) <= MAX_BLASCHKE_RADIUS for a in w.params)
        # every draw is an honest Schwarz map: |w| <= |z| on a circle
        vals = np.abs(w.series().evaluate_many(0.9 * np.exp(2j * np.pi * np.arange(90) / 90)))
        assert float(vals.max()) <= 0.9 + w.series().tail_bound(0.9) + 1e-10
    assert kinds == {"mono", "rot", "blaschke"}  # all three kinds get exercised


def test_random_series_is_normalized_and_damped():
    for t in range(30):
        f = random_normalized_series(trial_rng(5, t), 32)
        assert f[0] == 0.0 and f[1] == 1.0
        mags = np.abs(f.coeffs)
        ks = np.arange(2, 33)
        assert np.all(mags[2:] <= SERIES_SCALE * SERIES_DECAY ** (ks - 2) + 1e-15)
        # sum_{k>=2} k |c_k| < 1 keeps these inside the univalent range
        assert float(np.sum(ks * mags[2:])) < 1.0


def test_random_mu_stays_in_disk():
    for t in range(50):
        assert abs(random_mu(trial_rng(6, t))) <= MU_RADIUS + 1e-12
    radii = [abs(random_mu(trial_rng(6, t))) for t in range(200)]
    assert max(radii) > 0.8 * MU_RADIUS  # the draw really uses the whole disk
