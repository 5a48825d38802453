"""q-series building blocks: Pochhammer products, Euler and Weber products,
Jacobi theta functions, shifted bilateral Gaussian sums, and the two-sided
product quantity [a,p;q] with its theta-sum twin.

Sign convention used throughout: ``euler_f(q)`` and ``weber_phi(q)`` return
the products (q;q)_inf and (-q;q)_inf, i.e. the classical symbols f(-q) and
phi(-q) evaluated so that the caller passes plain q.  Fractional powers of q
are always e^(x*ln q) on the principal branch, never root extraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .numerics import (
    DomainError,
    NonConvergence,
    PrecisionSpec,
    cv,
    gaussian_cutoff,
    prod_infinite,
    sum_series,
)

INF = math.inf


@dataclass(frozen=True)
class AgileParams:
    """Exponent a (may be complex) and period p > 0 for the [a,p;q] quantity.

    The product representation needs Re(a) in (0, p); the theta-sum
    representation accepts any complex a.
    """

    a: object
    p: object

    def __post_init__(self) -> None:
        p = self.p
        pr = p if isinstance(p, (int, float, Fraction)) else None
        if pr is not None and pr <= 0:
            raise DomainError(f"period p must be positive, got {p!r}")


def qpow(ctx, q, x):
    """q**x on the principal branch: e^(x*ln q). Exact 0^0 = 1, 0^x = 0."""
    q = cv(ctx, q)
    x = cv(ctx, x)
    if q == 0:
        return ctx.mpf(1) if x == 0 else ctx.mpf(0)
    return ctx.exp(x * ctx.log(q))


def pochhammer(a, q, n, prec: PrecisionSpec):
    """(a; q)_n = prod_{k=0}^{n-1} (1 - a q^k); n may be math.inf."""
    ctx = prec.context()
    a = cv(ctx, a)
    q = cv(ctx, q)
    if n is INF or n is None:
        if abs(q) >= 1:
            raise DomainError(f"(a;q)_inf needs |q| < 1, got |q| = {abs(q)}")
        return prod_infinite(lambda m: 1 - a * qpow(ctx, q, m), prec, start=0)
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a non-negative integer or math.inf, got {n!r}")
    total = ctx.mpf(1)
    power = ctx.mpf(1)
    for _ in range(n):
        total = total * (1 - a * power)
        power = power * q
    return total


def euler_f(q, prec: PrecisionSpec):
    """(q; q)_inf, the Euler product (classically the symbol f(-q))."""
    return pochhammer(q, q, INF, prec)


def weber_phi(q, prec: PrecisionSpec):
    """(-q; q)_inf (classically the symbol phi(-q))."""
    ctx = prec.context()
    return pochhammer(-cv(ctx, q), q, INF, prec)


def _theta_guard(ctx, z, q):
    """Common validation for theta series; returns (z, q, L, t).

    L = |ln|q||, t = |Im z|.  Raises when terms q^(n^2) e^(2inz) would not
    decay fast enough to sum: the documented precondition is |q| e^(2|Im z|)
    strictly below 1.
    """
    z = cv(ctx, z)
    q = cv(ctx, q)
    qa = abs(q)
    if qa >= 1:
        raise DomainError(f"theta series need |q| < 1, got |q| = {qa}")
    t = abs(ctx.im(z))
    if qa > 0 and qa * ctx.exp(2 * t) >= 1:
        raise NonConvergence(
            f"growth guard: |q| e^(2|Im z|) = {qa * ctx.exp(2 * t)} >= 1"
        )
    L = float(-ctx.log(qa)) if qa > 0 else INF
    return z, q, L, float(t)


def theta3(z, q, prec: PrecisionSpec):
    """theta_3(z, q) = 1 + 2 sum_{n>=1} q^(n^2) cos(2 n z)."""
    ctx = prec.context()
    z, q, L, t = _theta_guard(ctx, z, q)
    n_cut = gaussian_cutoff(prec.workdps, L, t)
    total = ctx.mpf(1)
    for n in range(1, n_cut + 1):
        total = total + 2 * qpow(ctx, q, n * n) * ctx.cos(2 * n * z)
    return total


def theta4(z, q, prec: PrecisionSpec):
    """theta_4(z, q) = 1 + 2 sum_{n>=1} (-1)^n q^(n^2) cos(2 n z)."""
    ctx = prec.context()
    z, q, L, t = _theta_guard(ctx, z, q)
    n_cut = gaussian_cutoff(prec.workdps, L, t)
    total = ctx.mpf(1)
    sign = 1
    for n in range(1, n_cut + 1):
        sign = -sign
        total = total + 2 * sign * qpow(ctx, q, n * n) * ctx.cos(2 * n * z)
    return total


def theta4_product(z, q, prec: PrecisionSpec):
    """Triple-product form of theta_4:

    prod_{n>=1} (1 - q^(2n)) (1 - 2 q^(2n-1) cos(2z) + q^(4n-2)).

    Kept as an independent route so the series form can be cross-checked.
    """
    ctx = prec.context()
    z, q, _, _ = _theta_guard(ctx, z, q)
    c = ctx.cos(2 * z)

    def factor(n: int):
        q2n = qpow(ctx, q, 2 * n)
        qodd = qpow(ctx, q, 2 * n - 1)
        return (1 - q2n) * (1 - 2 * qodd * c + qodd * qodd)

    return prod_infinite(factor, prec, start=1)


def theta2(q, prec: PrecisionSpec):
    """theta_2(0, q) = 2 q^(1/4) sum_{n>=0} q^(n(n+1))."""
    ctx = prec.context()
    q = cv(ctx, q)
    if abs(q) >= 1:
        raise DomainError(f"theta series need |q| < 1, got |q| = {abs(q)}")
    body = sum_series(
        lambda n: qpow(ctx, q, n * (n + 1)),
        prec,
        tail_policy="gaussian-exponent",
        q_abs=abs(q),
    )
    return 2 * qpow(ctx, q, Fraction(1, 4)) * body


def theta_sum_S(z, q, prec: PrecisionSpec):
    """S_z = sum over all integers n of q^(n^2 + z n); z may be complex."""
    ctx = prec.context()
    z = cv(ctx, z)
    q = cv(ctx, q)
    qa = abs(q)
    if qa >= 1:
        raise DomainError(f"bilateral Gaussian sum needs |q| < 1, got |q| = {qa}")
    if q == 0:
        return ctx.mpf(1)
    logq = ctx.log(q)
    L = float(-ctx.re(logq))
    if L <= 0:
        raise DomainError("bilateral Gaussian sum needs |q| < 1 strictly")
    # |q^(n^2+zn)| = e^(-L n^2 + c n) with c = -Re(z*ln q); the linear term
    # shifts the peak, so widen the cutoff by the peak offset.
    c = float(-ctx.re(z * logq))
    n_cut = gaussian_cutoff(prec.workdps, L, abs(c) / 2.0)
    shift = int(math.ceil(abs(c) / (2 * L))) + 1
    total = ctx.mpf(0)
    for n in range(-n_cut - shift, n_cut + shift + 1):
        total = total + ctx.exp((n * n + z * n) * logq)
    return total


def _bilateral_halfsquare(coeff_lin, p, q, prec: PrecisionSpec, signed: bool):
    """sum over n in Z of s^n * q^(p n^2 / 2 + coeff_lin * n / 2), s = -1 or 1.

    Shared engine for the theta-sum route of [a,p;q] and for psi_star; the
    quadratic coefficient is p/2 and coeff_lin is (p - 2a).
    """
    ctx = prec.context()
    q = cv(ctx, q)
    p = cv(ctx, p)
    b = cv(ctx, coeff_lin)
    qa = abs(q)
    if qa >= 1 or qa == 0:
        raise DomainError(f"theta-sum route needs 0 < |q| < 1, got |q| = {qa}")
    logq = ctx.log(q)
    L = float(-ctx.re(p * logq)) / 2.0
    if L <= 0:
        raise DomainError("theta-sum route needs Re(p ln q) < 0")
    c = float(-ctx.re(b * logq)) / 2.0
    n_cut = gaussian_cutoff(prec.workdps, L, abs(c) / 2.0)
    shift = int(math.ceil(abs(c) / (2 * L))) + 1
    total = ctx.mpf(0)
    for n in range(-n_cut - shift, n_cut + shift + 1):
        term = ctx.exp((p * n * n / 2 + b * n / 2) * logq)
        if signed and (n & 1):
            term = -term
        total = total + term
    return total


def agile(params: AgileParams, q, prec: PrecisionSpec, route: str | None = None):
    """[a,p;q] = (q^(p-a); q^p)_inf * (q^a; q^p)_inf.

    Route "product" evaluates that product directly (requires Re(a) in
    (0, p)); route "theta" evaluates the equivalent alternating bilateral sum

        (1/(q^p; q^p)_inf) * sum_{n in Z} (-1)^n q^(p n^2/2 + (p-2a) n/2),

    which is defined for every complex a.  Auto-selection: product for real
    a inside (0, p), theta sum otherwise.
    """
    ctx = prec.context()
    a = cv(ctx, params.a)
    p = cv(ctx, params.p)
    q = cv(ctx, q)
    if abs(q) >= 1:
        raise DomainError(f"[a,p;q] needs |q| < 1, got |q| = {abs(q)}")
    if ctx.im(p) != 0 or ctx.re(p) <= 0:
        raise DomainError(f"period p must be positive real, got {p}")
    if route is None:
        product_ok = ctx.im(a) == 0 and 0 < ctx.re(a) < ctx.re(p)
        route = "product" if product_ok else "theta"
    if route == "product":
        if not (0 < ctx.re(a) < ctx.re(p)):
            raise DomainError(f"product route needs Re(a) in (0, p), got a = {a}")
        qp = qpow(ctx, q, p)
        first = pochhammer(qpow(ctx, q, p - a), qp, INF, prec)
        second = pochhammer(qpow(ctx, q, a), qp, INF, prec)
        return first * second
    if route == "theta":
        if ctx.im(q) != 0 or ctx.re(q) <= 0:
            raise DomainError("theta route needs real q in (0, 1)")
        numer = _bilateral_halfsquare(p - 2 * a, p, q, prec, signed=True)
        denom = euler_f(qpow(ctx, q, p), prec)
        return numer / denom
    raise DomainError(f"unknown route {route!r}")


def psi_star(a, p, q, prec: PrecisionSpec, route: str = "sum"):
    """psi*(a, p; q) = sum_{n in Z} q^(p n^2/2 + (p-2a) n/2).

    Route "product" uses the equivalent form
    (q^p; q^p)_inf * (-q^a; q^p)_inf * (-q^(p-a); q^p)_inf,
    defined when Re(a) is in (0, p).
    """
    ctx = prec.context()
    a = cv(ctx, a)
    p = cv(ctx, p)
    q = cv(ctx, q)
    if abs(q) >= 1:
        raise DomainError(f"psi* needs |q| < 1, got |q| = {abs(q)}")
    if q == 0:
        return ctx.mpf(1)
    if route == "sum":
        return _bilateral_halfsquare(p - 2 * a, p, q, prec, signed=False)
    if route == "product":
        if not (0 < ctx.re(a) < ctx.re(p)):
            raise DomainError(f"product route needs Re(a) in (0, p), got a = {a}")
        qp = qpow(ctx, q, p)
        return (
            euler_f(qp, prec)
            * pochhammer(-qpow(ctx, q, a), qp, INF, prec)
            * pochhammer(-qpow(ctx, q, p - a), qp, INF, prec)
        )
    raise DomainError(f"unknown route {route!r}")


def hyperbolic_log_sum(t, a, prec: PrecisionSpec):
    """sum_{k>=1} cosh(2 t k) / (k sinh(pi a k)) for a > 0, |t| < pi a / 2.

    The terms decay like e^((2|t| - pi a) k), so the decay region is exactly
    |t| < pi a / 2.
    """
    ctx = prec.context()
    t = cv(ctx, t)
    a = cv(ctx, a)
    if ctx.im(a) != 0 or a <= 0:
        raise DomainError(f"need positive real a, got {a}")
    if ctx.im(t) != 0 or 2 * abs(t) >= ctx.pi * a:
        raise DomainError(f"need real t with |t| < pi a / 2, got t = {t}")
    return sum_series(
        lambda k: ctx.cosh(2 * t * k) / (k * ctx.sinh(ctx.pi * a * k)),
        prec,
        start=1,
    )
