"""Precision plumbing: PrecisionSpec, conversion, series/product engines."""

from fractions import Fraction

import pytest

from qelliptic.numerics import (
    CrossCheckFailure,
    DomainError,
    InsufficientPrecision,
    NonConvergence,
    NumericsError,
    PrecisionSpec,
    UnknownSelector,
    VerificationError,
    ZeroFactor,
    agm,
    cv,
    gamma,
    gaussian_cutoff,
    prod_infinite,
    sum_series,
)


def test_precision_spec_defaults():
    p = PrecisionSpec(60)
    assert p.digits == 60
    assert p.guard == 15
    assert p.workdps == 75
    p = PrecisionSpec(200)
    assert p.guard == 20
    assert p.workdps == 220


def test_precision_spec_rejects_low_digits():
    with pytest.raises(DomainError):
        PrecisionSpec(9)
    PrecisionSpec(10)  # boundary is allowed


def test_bumped_adds_digits():
    p = PrecisionSpec(60)
    q = p.bumped(30)
    assert q.digits == 90
    assert p.digits == 60  # original untouched


def test_context_is_fresh_per_call():
    p = PrecisionSpec(50)
    c1 = p.context()
    c2 = p.context()
    assert c1 is not c2
    c1.dps = 7  # mutating one context must not leak into the next
    assert p.context().dps == p.workdps


def test_eps_values():
    p = PrecisionSpec(40)
    ctx = p.context()
    assert p.target_eps(ctx) == ctx.mpf(10) ** (-40)
    assert p.work_eps(ctx) == ctx.mpf(10) ** (-(p.workdps - 2))


def test_cv_fraction_is_exact():
    p = PrecisionSpec(60)
    ctx = p.context()
    x = cv(ctx, Fraction(1, 3))
    assert abs(3 * x - 1) < ctx.mpf(10) ** (-p.workdps + 2)
    assert cv(ctx, 7) == 7
    assert cv(ctx, "0.5") == ctx.mpf(1) / 2


def test_error_taxonomy():
    for err in (
        NonConvergence,
        DomainError,
        ZeroFactor,
        VerificationError,
        InsufficientPrecision,
        CrossCheckFailure,
        UnknownSelector,
    ):
        assert issubclass(err, NumericsError)


def test_gaussian_cutoff_grows_with_digits():
    a = gaussian_cutoff(40, 1.0)
    b = gaussian_cutoff(160, 1.0)
    assert b > a
    # |q|^(N^2) < 10^-40 at the returned N
    import math

    n = gaussian_cutoff(40, 1.0)
    assert math.exp(-(n * n)) < 1e-40


def test_sum_series_geometric():
    p = PrecisionSpec(50)
    ctx = p.context()
    z = cv(ctx, Fraction(1, 3))
    s = sum_series(lambda n: z**n, p)
    assert abs(s - ctx.mpf(3) / 2) < p.target_eps(ctx)


def test_sum_series_bilateral_theta():
    p = PrecisionSpec(50)
    ctx = p.context()
    q = cv(ctx, Fraction(1, 10))
    s = sum_series(lambda n: q ** (n * n), p, bilateral=True, tail_policy="gaussian-exponent", q_abs=q)
    # 1 + 2 sum_{n>=1} q^(n^2)
    ref = 1 + 2 * sum(q ** (n * n) for n in range(1, 40))
    assert abs(s - ref) < p.target_eps(ctx)


def test_sum_series_unknown_policy():
    p = PrecisionSpec(50)
    with pytest.raises(UnknownSelector):
        sum_series(lambda n: 0, p, tail_policy="nonsense")
    with pytest.raises(UnknownSelector):
        sum_series(lambda n: 0, p, tail_policy="gaussian-exponent")  # missing q_abs


def test_sum_series_nonconvergence():
    p = PrecisionSpec(50)
    with pytest.raises(NonConvergence):
        sum_series(lambda n: 1, p, max_terms=50)


def test_prod_infinite_euler_style():
    p = PrecisionSpec(50)
    ctx = p.context()
    q = cv(ctx, Fraction(1, 10))
    v = prod_infinite(lambda n: 1 - q**n, p)
    ref = ctx.mpf(1)
    for n in range(1, 200):
        ref *= 1 - q**n
    assert abs(v - ref) < p.target_eps(ctx)


def test_prod_infinite_zero_factor():
    p = PrecisionSpec(50)
    assert prod_infinite(lambda n: 0 if n == 3 else 1 - Fraction(1, 2) ** n, p) == 0
    with pytest.raises(ZeroFactor):
        prod_infinite(
            lambda n: 0 if n == 3 else 1 - Fraction(1, 2) ** n, p, strict_zero=True
        )


def test_agm_lemniscatic():
    # pi/(2 agm(1, sqrt(1/2))) = Gamma(1/4)^2 / (4 sqrt(pi))
    p = PrecisionSpec(80)
    ctx = p.context()
    left = ctx.pi / (2 * agm(1, ctx.sqrt(cv(ctx, Fraction(1, 2))), p))
    right = gamma(Fraction(1, 4), p) ** 2 / (4 * ctx.sqrt(ctx.pi))
    assert abs(left - right) < p.target_eps(ctx)


def test_agm_domain():
    p = PrecisionSpec(40)
    with pytest.raises(DomainError):
        agm(-1, 2, p)


def test_gamma_half():
    p = PrecisionSpec(60)
    ctx = p.context()
    assert abs(gamma(Fraction(1, 2), p) - ctx.sqrt(ctx.pi)) < p.target_eps(ctx)
    with pytest.raises(DomainError):
        gamma(0, p)
