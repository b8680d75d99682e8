"""Sharp bounds: frozen values, witness attainment, closed-form cross-checks."""

import cmath
import math

import hypothesis.strategies as st
import pytest
from hypothesis import given

from ksverify.bounds import (
    BoundQuery,
    BoundReport,
    coefficient_bounds,
    covering_radius,
    covering_radius_closed_form,
    distortion_bounds,
    fs_bound,
    fs_report,
    fs_value,
    fs_witness,
    growth_bounds,
    inverse_coefficients,
    inverse_fs_bound,
    inverse_fs_report,
    inverse_fs_value,
    kowalczyk_forms,
    kowalczyk_report,
    schwarz_functional_bound,
)
from ksverify.generators import SchwarzMap, extremal, member_from, starlike_atomic
from ksverify.phi import phi_halfplane, phi_order_gamma, phi_polynomial
from ksverify.series import PowerSeries

HP = phi_halfplane(order=16)
G25 = phi_order_gamma(0.25, order=16)
G50 = phi_order_gamma(0.5, order=16)

mus = st.builds(complex, st.floats(-3, 3), st.floats(-3, 3))


# -- coefficient functional ------------------------------------------------


def test_fs_bound_frozen_values():
    # halfplane: B1 = B2 = 2
    assert fs_bound(HP, 0.0) == 1.0  # 1/3 + 2/3, exact in floats
    assert fs_bound(HP, 1.0) == pytest.approx(1.0)  # |2/3 - 1| = 1/3 < 2/3
    assert fs_bound(HP, 2.0) == pytest.approx(1.0 / 3.0 + 4.0 / 3.0)
    assert fs_bound(HP, 2j) == pytest.approx(1.0 / 3.0 + abs(2.0 / 3.0 - 2j))
    # gamma = 1/2: B1 = B2 = 1
    assert fs_bound(G50, 0.0) == pytest.approx(2.0 / 3.0)
    assert fs_bound(G50, 2.0) == pytest.approx(2.0 / 3.0)  # |1/3 - 1/2| < 1/3
    assert fs_bound(G50, 3.0) == pytest.approx(1.0 / 3.0 + abs(1.0 / 3.0 - 0.75))


def test_fs_witness_branch_selection():
    # small mu keeps the odd witness; large mu needs the rotated one
    assert fs_witness(HP, 0.0).w.spec() == "mono:2"
    rotated = fs_witness(HP, 3.0).w
    assert rotated.kind == "mono" and rotated.spec() != "mono:2"


@pytest.mark.parametrize("phi", [HP, G25, G50, phi_polynomial([1.0, 0.5], order=16)])
@pytest.mark.parametrize("mu", [0.0, 1.0, 2.0, -1.5, 1 + 1j, -2j])
def test_witness_attains_bound(phi, mu):
    member = fs_witness(phi, mu)
    assert fs_value(member, mu) == pytest.approx(fs_bound(phi, mu), abs=1e-12)


@given(mus)
def test_witness_attainment_property(mu):
    for phi in (HP, G25):
        member = fs_witness(phi, mu)
        assert abs(fs_value(member, mu) - fs_bound(phi, mu)) <= 1e-9


def test_coefficient_bounds_halfplane():
    a2, a3 = coefficient_bounds(HP)
    assert a2 == 1.0 and a3 == 1.0
    # attained by the fs_max member (all coefficients 1)
    m = extremal("fs_max", HP)
    assert abs(m.a2) == pytest.approx(a2)
    assert abs(m.a3) == pytest.approx(a3)


def test_coefficient_bounds_order_gamma():
    a2, a3 = coefficient_bounds(G50)
    assert a2 == 0.5
    assert a3 == pytest.approx(2.0 / 3.0)
    m = extremal("fs_max", G50)
    assert abs(m.a2) <= a2 + 1e-12
    assert abs(m.a3) <= a3 + 1e-12


# -- inverse coefficients ----------------------------------------------------


def test_inverse_coefficients_match_substitution():
    # For y = f^{-1}: d2 = -a2 and d3 = 2 a2^2 - a3, by reverting the series
    g = starlike_atomic([(1j, 0.5), (-1j, 0.5)], 16)
    w = SchwarzMap.blaschke((0.3 + 0.1j,), 16)
    m = member_from(g, w, G25.with_order(16))
    d2, d3 = inverse_coefficients(m.f)
    assert d2 == pytest.approx(-m.a2, abs=1e-12)
    assert d3 == pytest.approx(2 * m.a2**2 - m.a3, abs=1e-12)


def test_inverse_coefficients_need_order_three():
    with pytest.raises(ValueError):
        inverse_coefficients(PowerSeries([0.0, 1.0, 0.5]))


@given(mus)
def test_inverse_functional_equals_direct_at_reflected_mu(mu):
    # |d3 - mu d2^2| = |a3 - (2 - mu) a2^2| for every member
    m = member_from(
        starlike_atomic([(1.0, 0.6), (-1j, 0.4)], 12),
        SchwarzMap.scaled(0.7, 0.4, 12),
        HP.with_order(12),
    )
    lhs = inverse_fs_value(m, mu)
    rhs = fs_value(m, 2.0 - mu)
    assert lhs == pytest.approx(rhs, abs=1e-12)


def test_inverse_bound_is_reflected_direct_bound():
    for mu in (0.0, 1.0, 2.0, 1 - 2j):
        assert inverse_fs_bound(HP, mu) == fs_bound(HP, 2.0 - mu)
    # mu = 2 lands on the direct bound at 0
    assert inverse_fs_bound(HP, 2.0) == 1.0


def test_inverse_witness_attains_bound():
    for mu in (0.0, 1.0, 3.0, 1j):
        rep = inverse_fs_report(HP, mu)
        assert rep.margin is not None and abs(rep.margin) <= 1e-9


# -- Schwarz functional -------------------------------------------------------


@given(st.builds(complex, st.floats(-4, 4), st.floats(-4, 4)))
def test_schwarz_functional_bound_holds_on_samples(t):
    bound = schwarz_functional_bound(t)
    assert bound == max(1.0, abs(t))
    for w in (SchwarzMap.monomial(2, 0.0, 8), SchwarzMap.monomial(1, 0.5, 8),
              SchwarzMap.blaschke((0.4 - 0.2j,), 8)):
        assert abs(w.w2 - t * w.w1**2) <= bound + 1e-12


def test_schwarz_functional_equality_cases():
    # |t| <= 1: w = z^2 gives |w2| = 1; |t| >= 1: an aligned rotation gives |t|
    for t in (0.3, -0.8, 0.5j):
        w = SchwarzMap.monomial(2, 0.0, 8)
        assert abs(w.w2 - t * w.w1**2) == pytest.approx(schwarz_functional_bound(t))
    for t in (2.0, -1.5, 3j):
        theta = -cmath.phase(t) / 2.0
        w = SchwarzMap.monomial(1, theta, 8)
        assert abs(w.w2 - t * w.w1**2) == pytest.approx(abs(t))


# -- envelopes -----------------------------------------------------------------


@pytest.mark.parametrize("gamma", [0.0, 0.3, 0.7])
@pytest.mark.parametrize("r", [0.3, 0.6, 0.9])
def test_growth_and_distortion_match_closed_forms(gamma, r):
    phi = phi_order_gamma(gamma)
    fp_lo, fp_hi, f_lo, f_hi = kowalczyk_forms(gamma, r)
    dlo, dhi = distortion_bounds(phi, r)
    assert dlo == pytest.approx(fp_lo, abs=1e-12)
    assert dhi == pytest.approx(fp_hi, abs=1e-12)
    glo, ghi = growth_bounds(phi, r)
    assert glo == pytest.approx(f_lo, abs=1e-8)
    assert ghi == pytest.approx(f_hi, abs=1e-8)


def test_distortion_lower_bound_is_attained():
    # |f'(-r)| for the dist_min member equals phi(-r)/(1+r^2)
    m = extremal("dist_min", phi_order_gamma(0.3, order=128))
    fp = m.f.derivative()
    for r in (0.3, 0.6, 0.9):
        lo, _ = distortion_bounds(m.phi, r)
        val = abs(fp.evaluate(-r))
        assert val == pytest.approx(lo, abs=fp.tail_bound(r) + 1e-10)


def test_growth_domain():
    with pytest.raises(ValueError):
        growth_bounds(HP, 0.0)
    with pytest.raises(ValueError):
        growth_bounds(HP, 0.995)
    # the cap itself is allowed
    lo, hi = growth_bounds(HP, 0.99)
    assert 0 < lo < hi


def test_covering_radius_closed_forms():
    assert covering_radius_closed_form(0.0) == pytest.approx(math.log(2) / 2, abs=1e-15)
    assert covering_radius(HP) == pytest.approx(math.log(2) / 2, abs=1e-10)
    for gamma in (0.25, 0.5, 0.75):
        phi = phi_order_gamma(gamma)
        want = covering_radius_closed_form(gamma)
        assert covering_radius(phi) == pytest.approx(want, abs=1e-10)
    with pytest.raises(ValueError):
        covering_radius_closed_form(1.0)


def test_covering_radius_shrinks_growth_lower_bound_monotonically():
    # the r -> 1 limit dominates every finite-r lower envelope
    cov = covering_radius(G25)
    lo_half, _ = growth_bounds(G25, 0.5)
    lo_nine, _ = growth_bounds(G25, 0.9)
    assert lo_half < lo_nine < cov


def test_kowalczyk_domain():
    with pytest.raises(ValueError):
        kowalczyk_forms(1.0, 0.5)
    with pytest.raises(ValueError):
        kowalczyk_forms(-0.1, 0.5)
    with pytest.raises(ValueError):
        kowalczyk_forms(0.5, 0.0)
    with pytest.raises(ValueError):
        kowalczyk_forms(0.5, 1.0)


def test_kowalczyk_frozen_halfplane_values():
    fp_lo, fp_hi, f_lo, f_hi = kowalczyk_forms(0.0, 0.5)
    assert fp_lo == pytest.approx((1 - 0.5) / (1.5 * 1.25), abs=1e-15)
    assert fp_hi == pytest.approx(1.5 / (0.5 * 0.75), abs=1e-15)
    assert f_lo == pytest.approx(math.log(1.5 / math.sqrt(1.25)), abs=1e-15)
    assert f_hi == pytest.approx(1.0)


# -- reports -------------------------------------------------------------------


def test_fs_report_structure():
    rep = fs_report(G25, 1.5)
    d = rep.to_dict()
    assert d["query"]["op"] == "fs"
    assert d["query"]["mu"] == [1.5, 0.0]
    assert d["value"] == pytest.approx(fs_bound(G25, 1.5))
    assert -1e-9 <= d["margin"] <= 1e-9
    assert "w" in d["witness"]


def test_report_witness_margin_invariant():
    q = BoundQuery("fs", phi_spec="halfplane", mu=0.0)
    with pytest.raises(ValueError):
        BoundReport(query=q, value=1.0, witness={"w": "mono:2"}, attained=1.1, margin=-0.1)
    with pytest.raises(ValueError):
        BoundReport(query=q, value=1.0, witness={"w": "mono:2"}, attained=1.0, margin=None)


def test_query_validation():
    with pytest.raises(ValueError):
        BoundQuery("distortion", r=1.5)
    with pytest.raises(ValueError):
        BoundQuery("kowalczyk", gamma=1.0, r=0.5)
    assert BoundQuery("growth", r=0.5).to_dict() == {"op": "growth", "r": 0.5}


def test_kowalczyk_report_values():
    d = kowalczyk_report(0.25, 0.5).to_dict()
    assert set(d["values"]) == {"fprime_lower", "fprime_upper", "f_lower", "f_upper"}
