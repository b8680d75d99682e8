"""Target functions: coefficients, closed-form extrema, parsing."""

import math

import numpy as np
import pytest

from ksverify.phi import (
    MaMindaFunction,
    parse_phi_spec,
    phi_halfplane,
    phi_make,
    phi_order_gamma,
    phi_polynomial,
)

GRID = 0.9 * np.exp(2j * np.pi * np.arange(720) / 720)


def test_halfplane_coefficients():
    phi = phi_halfplane(order=8)
    assert phi.B1 == 2.0 and phi.B2 == 2.0
    assert all(phi.Bn(n) == 2.0 for n in range(1, 9))
    s = phi.series()
    assert s[0] == 1.0 and all(s[k] == 2.0 for k in range(1, 9))


@pytest.mark.parametrize("gamma", [0.0, 0.25, 0.5, 0.75])
def test_order_gamma_coefficients(gamma):
    phi = phi_order_gamma(gamma)
    assert phi.B1 == pytest.approx(2 * (1 - gamma))
    assert phi.Bn(5) == pytest.approx(2 * (1 - gamma))
    # gamma = 0 degenerates to the halfplane target
    if gamma == 0.0:
        assert phi.series().isclose(phi_halfplane().series())


def test_gamma_domain():
    with pytest.raises(ValueError):
        phi_order_gamma(1.0)
    with pytest.raises(ValueError):
        phi_order_gamma(-0.1)
    with pytest.raises(ValueError):
        phi_order_gamma(math.nan)


def test_polynomial_coefficients():
    phi = phi_polynomial([1.0, 0.5])
    assert phi.B1 == 1.0 and phi.B2 == 0.5
    assert phi.Bn(3) == 0.0
    s = phi.series(order=4)
    assert s.coeffs.tolist() == [1.0, 1.0, 0.5, 0.0, 0.0]


def test_polynomial_validation():
    with pytest.raises(ValueError):
        phi_polynomial([])
    with pytest.raises(ValueError):
        phi_polynomial([-1.0])  # B1 must be positive
    with pytest.raises(ValueError):
        phi_polynomial([1j])  # and real
    with pytest.raises(ValueError):
        phi_polynomial([1.0, 0.0, 5.0])  # Re phi dips below zero on the grid
    with pytest.raises(ValueError):
        MaMindaFunction("disk", order=8)
    with pytest.raises(ValueError):
        phi_halfplane(order=2)


def test_eval_real_endpoints():
    hp = phi_halfplane()
    assert hp.eval_real(0.0) == 1.0
    assert hp.eval_real(-1.0) == 0.0
    assert hp.eval_real(1.0) == math.inf
    assert hp.eval_real(0.5) == pytest.approx(3.0)
    g = phi_order_gamma(0.25)
    assert g.eval_real(-1.0) == pytest.approx(0.25)
    with pytest.raises(ValueError):
        hp.eval_real(1.5)
    with pytest.raises(ValueError):
        phi_polynomial([1.0]).eval_real(0.0)


def test_eval_complex_matches_series():
    for phi in (phi_halfplane(order=64), phi_order_gamma(0.4, order=64),
                phi_polynomial([1.0, 0.5], order=64)):
        direct = phi.eval_complex(GRID)
        summed = phi.series().evaluate_many(GRID)
        tol = phi.series().tail_bound(0.9) + 1e-12
        assert np.max(np.abs(direct - summed)) <= tol


@pytest.mark.parametrize("gamma", [0.0, 0.3, 0.7])
@pytest.mark.parametrize("r", [0.3, 0.6, 0.9])
def test_minmax_matches_grid_scan(gamma, r):
    phi = phi_order_gamma(gamma)
    lo, hi = phi.minmax(r)
    vals = np.abs(phi.eval_complex(r * np.exp(2j * np.pi * np.arange(4096) / 4096)))
    assert lo <= vals.min() + 1e-12
    assert hi >= vals.max() - 1e-12
    # the extremes really are attained on the real axis
    assert lo == pytest.approx(vals.min(), abs=1e-6)
    assert hi == pytest.approx(vals.max(), abs=1e-4)


def test_minmax_attestation_gate():
    plain = phi_polynomial([1.0, 0.5])
    with pytest.raises(ValueError):
        plain.minmax(0.5)
    attested = phi_polynomial([1.0, 0.5], monotone_attested=True)
    lo, hi = attested.minmax(0.5)
    assert lo == pytest.approx(abs(1 - 0.5 + 0.125))
    assert hi == pytest.approx(1 + 0.5 + 0.125)
    with pytest.raises(ValueError):
        attested.minmax(1.0)


def test_min_real_part():
    # halfplane: Re phi on |z| = r dips to (1 - r)/(1 + r) at z = -r
    hp = phi_halfplane()
    assert hp.min_real_part(radii=(0.9,)) == pytest.approx((1 - 0.9) / (1 + 0.9), abs=1e-6)
    g = phi_order_gamma(0.5)
    assert g.min_real_part(radii=(0.9,)) >= 0.5  # order gamma keeps Re phi > gamma


@pytest.mark.parametrize(
    "spec", ["halfplane", "gamma:0.25", "gamma:0", "poly:1,0.5", "poly:1,0.25+0.1i"]
)
def test_parse_spec_roundtrip(spec):
    phi = parse_phi_spec(spec)
    assert parse_phi_spec(phi.spec()).spec() == phi.spec()


def test_parse_spec_rejects():
    for bad in ("", "disk", "gamma:", "gamma:x", "poly:", "gamma:1.0"):
        with pytest.raises(ValueError):
            parse_phi_spec(bad)


def test_with_order_and_provenance():
    phi = phi_order_gamma(0.25, order=8)
    assert phi.with_order(32).order == 32
    assert phi.with_order(32).gamma == 0.25
    prov = phi.provenance()
    assert prov["spec"] == "gamma:0.25"
    assert prov["monotone_attested"] is True
    assert phi_polynomial([1.0]).provenance()["monotone_attested"] is False


def test_phi_make_dispatch():
    assert phi_make("halfplane").kind == "halfplane"
    assert phi_make("order_gamma", 0.5).gamma == 0.5
    assert phi_make("polynomial", [1.0, 0.5]).B == (1.0 + 0j, 0.5 + 0j)
    with pytest.raises(ValueError):
        phi_make("parabola")
