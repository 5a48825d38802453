"""Quotient quantities R, R*, tau, character products, and dR/dq."""

from fractions import Fraction

import pytest

from qelliptic.numerics import DomainError, PrecisionSpec, cv
from qelliptic.rquantity import (
    Chi2Character,
    RQParams,
    drq_dq,
    drq_normalized,
    rq,
    rq_charprod,
    rq_star,
    rq_theta,
    tau0,
    tau_star,
)

P50 = PrecisionSpec(50)


def test_rq_star_product_vs_theta_route():
    ctx = P50.context()
    params = RQParams(Fraction(1, 2), Fraction(3, 2), 4)
    a = rq_star(params, Fraction(1, 5), P50, route="product")
    b = rq_star(params, Fraction(1, 5), P50, route="theta")
    assert abs(a - b) < ctx.mpf(10) ** (-45)


def test_rq_matches_theta_quotient_form():
    ctx = P50.context()
    x = ctx.pi
    q = ctx.exp(-x)
    via_product = rq(RQParams(1, 2, 5), q, P50)
    via_theta = rq_theta(1, 2, 5, x, P50, route="theta")
    via_expsum = rq_theta(1, 2, 5, x, P50, route="expsum")
    assert abs(via_product - via_theta) < ctx.mpf(10) ** (-45)
    assert abs(via_product - via_expsum) < ctx.mpf(10) ** (-45)


def test_rq_theta_route_validation():
    with pytest.raises(DomainError):
        rq_theta(1, 2, 5, 3, P50, route="bogus")
    with pytest.raises(DomainError):
        rq_theta(-1, 2, 5, 3, P50)


def test_character_product_equals_rq_star():
    ctx = P50.context()
    v1 = rq_charprod(1, 2, 5, Fraction(3, 20), P50)
    v2 = rq_star(RQParams(1, 2, 5), Fraction(3, 20), P50)
    assert abs(v1 - v2) < ctx.mpf(10) ** (-45)


def test_character_exponent_pattern():
    chi = Chi2Character(1, 2, 5)
    assert [chi.exponent(n) for n in range(6)] == [0, 1, -1, -1, 1, 0]
    assert chi.exponent(6) == 1  # pattern has period 5
    # a = p - a doubles the contribution
    chi2 = Chi2Character(2, 1, 4)
    assert chi2.exponent(2) == 2
    assert chi2.exponent(1) == -1
    assert chi2.exponent(3) == -1
    assert chi2.values == {0: 0, 1: -1, 2: 2, 3: -1}


def test_character_domain():
    with pytest.raises(DomainError):
        Chi2Character(0, 1, 5)
    with pytest.raises(DomainError):
        Chi2Character(1, 5, 5)
    with pytest.raises(DomainError):
        Chi2Character(Fraction(1, 2), 1, 5)


def test_rqparams_positive_period():
    with pytest.raises(DomainError):
        RQParams(1, 2, 0)


def test_tau_star_reflection_symmetry():
    # tau*(a, p; q) = tau*(p - a, p; q)
    ctx = P50.context()
    a, p, q = Fraction(3, 10), 2, Fraction(1, 5)
    left = tau_star(a, p, q, P50)
    right = tau_star(p - a, p, q, P50)
    assert abs(left - right) < ctx.mpf(10) ** (-45)


def test_tau0_unit_periodicity():
    # tau0(a + 1, q) = tau0(a, q)
    ctx = P50.context()
    a, q = Fraction(3, 10), Fraction(1, 5)
    assert abs(tau0(a + 1, q, P50) - tau0(a, q, P50)) < ctx.mpf(10) ** (-45)


def test_tau_star_domain():
    with pytest.raises(DomainError):
        tau_star(Fraction(1, 2), 1, Fraction(3, 2), P50)


def test_drq_equal_exponents_vanish():
    assert drq_dq(RQParams(2, 2, 5), Fraction(1, 5), P50) == 0


def test_drq_passes_internal_central_difference():
    # drq_dq cross-checks its analytic value against a central difference
    # at raised precision and raises CrossCheckFailure on disagreement, so a
    # clean return certifies both routes.
    ctx = P50.context()
    v = drq_dq(RQParams(1, 2, 4), Fraction(1, 5), P50)
    assert ctx.isfinite(v)


def test_drq_domain():
    with pytest.raises(DomainError):
        drq_dq(RQParams(1, 2, 5), Fraction(3, 2), P50)
    with pytest.raises(DomainError):
        drq_dq(RQParams(-1, 2, 5), Fraction(1, 5), P50)  # a outside (0, p)


def test_drq_normalized_octic_value():
    # q pi^2/K^2-normalized derivative of R(1,2,5;q) at q = e^(-pi) is the
    # algebraic number 0.23318... (a root of a degree-8 integer polynomial;
    # the recognition suite pins the polynomial itself)
    p = PrecisionSpec(60)
    ctx = p.context()
    q = ctx.exp(-ctx.pi)
    rho = drq_normalized(RQParams(1, 2, 5), q, p)
    ref = cv(ctx, "0.233180615907676532931907241202520808076943167")
    assert abs(rho - ref) < ctx.mpf(10) ** (-42)
