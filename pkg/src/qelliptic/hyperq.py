"""Basic hypergeometric series: the 2-phi-1 sum, the one-parameter psi sum
with its q-binomial product twin, the Gauss product evaluation, and the
residual checks tying 2-phi-1 evaluations to theta quotients and to the
R* quantity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cfrac import p_cf
from .numerics import DomainError, NonConvergence, PrecisionSpec, cv
from .qfunctions import INF, pochhammer, qpow, theta4
from .rquantity import RQParams, rq_star


@dataclass(frozen=True)
class Phi21Params:
    """Upper parameters a, b; lower parameter c; base q; argument z."""

    a: object
    b: object
    c: object
    q: object
    z: object


def phi21(params: Phi21Params, prec: PrecisionSpec):
    """2-phi-1(a, b; c; q, z) = sum_{n>=0} (a;q)_n (b;q)_n / ((c;q)_n (q;q)_n) z^n.

    Requires |q| < 1 and |z| < 1; c must avoid q^(-n) (zero denominators).
    """
    ctx = prec.context()
    a = cv(ctx, params.a)
    b = cv(ctx, params.b)
    c = cv(ctx, params.c)
    q = cv(ctx, params.q)
    z = cv(ctx, params.z)
    if abs(q) >= 1:
        raise DomainError(f"2-phi-1 needs |q| < 1, got |q| = {abs(q)}")
    if abs(z) >= 1:
        raise DomainError(f"2-phi-1 series needs |z| < 1, got |z| = {abs(z)}")
    eps = prec.work_eps(ctx)
    term = ctx.mpf(1)
    total = ctx.mpf(1)
    qn = ctx.mpf(1)  # q^n
    small = 0
    for n in range(10**6):
        denom_c = 1 - c * qn
        denom_q = 1 - q * qn
        if denom_c == 0:
            raise DomainError(f"lower parameter c = q^(-{n}) is a pole")
        term = term * (1 - a * qn) * (1 - b * qn) / (denom_c * denom_q) * z
        total = total + term
        qn = qn * q
        if abs(term) <= eps * max(ctx.mpf(1), abs(total)):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise NonConvergence("2-phi-1 series did not settle within budget")


def psi_small(a, q, z, prec: PrecisionSpec):
    """psi(a, q, z) = sum_{n>=0} (a;q)_n / (q;q)_n z^n for |q| < 1, |z| < 1."""
    ctx = prec.context()
    a = cv(ctx, a)
    q = cv(ctx, q)
    z = cv(ctx, z)
    if abs(q) >= 1:
        raise DomainError(f"psi needs |q| < 1, got |q| = {abs(q)}")
    if abs(z) >= 1:
        raise DomainError(f"psi series needs |z| < 1, got |z| = {abs(z)}")
    eps = prec.work_eps(ctx)
    term = ctx.mpf(1)
    total = ctx.mpf(1)
    qn = ctx.mpf(1)
    small = 0
    for _ in range(10**6):
        term = term * (1 - a * qn) / (1 - q * qn) * z
        total = total + term
        qn = qn * q
        if abs(term) <= eps * max(ctx.mpf(1), abs(total)):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise NonConvergence("psi series did not settle within budget")


def psi_small_product(a, q, z, prec: PrecisionSpec):
    """q-binomial product form (az; q)_inf / (z; q)_inf of psi(a, q, z).

    Converges as a product for every z off the poles z = q^(-n), so it also
    extends psi beyond |z| < 1.
    """
    ctx = prec.context()
    a = cv(ctx, a)
    z = cv(ctx, z)
    numer = pochhammer(a * z, q, INF, prec)
    denom = pochhammer(z, q, INF, prec)
    if denom == 0:
        raise ZeroDivisionError("(z; q)_inf is exactly zero (z is a pole)")
    return numer / denom


def gauss_product(a, b, c, q, prec: PrecisionSpec):
    """Closed form of 2-phi-1(a, b; c; q, ab/c):

    (c/a; q)_inf (c/b; q)_inf / ((c; q)_inf (c/(ab); q)_inf)."""
    ctx = prec.context()
    a = cv(ctx, a)
    b = cv(ctx, b)
    c = cv(ctx, c)
    numer = pochhammer(c / a, q, INF, prec) * pochhammer(c / b, q, INF, prec)
    denom = pochhammer(c, q, INF, prec) * pochhammer(c / (a * b), q, INF, prec)
    if denom == 0:
        raise ZeroDivisionError("Gauss product denominator is exactly zero")
    return numer / denom


def thm6_check_i(A, B, q, prec: PrecisionSpec):
    """Residual |psi(q^a, q^p, q^(p-a)) R*(a,b,p;q) - P(q^A, q^B, q^(A+B))|
    with a = 2A + 3p/4, b = 2B + p/4, p = 4(A+B).

    The psi factor is taken in its product form, under which the
    left side collapses to (q^p; q^p)_inf (q^a; q^p)_inf / [b,p;q]; that
    collapsed form is also the correct continuation at A = B, where the
    series psi and R* individually degenerate (pole against zero).  The
    right side is evaluated independently through the continued fraction.
    """
    ctx = prec.context()
    A = cv(ctx, A)
    B = cv(ctx, B)
    q = cv(ctx, q)
    if A <= 0 or B <= 0:
        raise DomainError("need A, B > 0")
    p = 4 * (A + B)
    a = 2 * A + 3 * p / 4
    b = 2 * B + p / 4
    Q = qpow(ctx, q, p)
    lhs = (
        pochhammer(Q, Q, INF, prec)
        * pochhammer(qpow(ctx, q, a), Q, INF, prec)
        / (
            pochhammer(qpow(ctx, q, p - b), Q, INF, prec)
            * pochhammer(qpow(ctx, q, b), Q, INF, prec)
        )
    )
    rhs = p_cf(qpow(ctx, q, A), qpow(ctx, q, B), qpow(ctx, q, A + B), prec)
    return abs(lhs - rhs)


def thm6_check_ii(a, b, p, q, prec: PrecisionSpec) -> dict:
    """Residuals of three 2-phi-1 evaluations against their stated targets.

    "eq65" (normative): |2-phi-1(q^(b-a), q^(a+b-p); q^b; q^p, q^(p-b))
                         - R*(a,b,p;q)|.
    "eq62" (as printed): the same series with upper parameters q^a, q^b,
        lower q^b, argument q^((p-a-b)/2), against the theta quotient
        theta4((a-b) i ln q / 4, q^(p/2)) / theta4((a+b) i ln q / 4, q^(p/2)).
    "eq63": upper q^a, q^b, lower q^((a+b+p)/2), argument q^((p-a-b)/2),
        against the same theta quotient.

    All three are returned; the caller decides which are asserted.
    """
    ctx = prec.context()
    af = cv(ctx, a)
    bf = cv(ctx, b)
    pf = cv(ctx, p)
    q = cv(ctx, q)
    if ctx.im(q) != 0 or not (0 < q < 1):
        raise DomainError(f"these checks run at real q in (0, 1), got {q}")
    logq = ctx.log(q)

    r_star = rq_star(RQParams(a, b, p), q, prec)
    lhs65 = phi21(
        Phi21Params(
            a=qpow(ctx, q, bf - af),
            b=qpow(ctx, q, af + bf - pf),
            c=qpow(ctx, q, bf),
            q=qpow(ctx, q, pf),
            z=qpow(ctx, q, pf - bf),
        ),
        prec,
    )
    out = {"eq65": abs(lhs65 - r_star)}

    theta_quot = theta4(
        (af - bf) * ctx.mpc(0, 1) * logq / 4, qpow(ctx, q, pf / 2), prec
    ) / theta4((af + bf) * ctx.mpc(0, 1) * logq / 4, qpow(ctx, q, pf / 2), prec)

    lhs62 = phi21(
        Phi21Params(
            a=qpow(ctx, q, af),
            b=qpow(ctx, q, bf),
            c=qpow(ctx, q, bf),
            q=qpow(ctx, q, pf),
            z=qpow(ctx, q, (pf - af - bf) / 2),
        ),
        prec,
    )
    out["eq62"] = abs(lhs62 - theta_quot)

    lhs63 = phi21(
        Phi21Params(
            a=qpow(ctx, q, af),
            b=qpow(ctx, q, bf),
            c=qpow(ctx, q, (af + bf + pf) / 2),
            q=qpow(ctx, q, pf),
            z=qpow(ctx, q, (pf - af - bf) / 2),
        ),
        prec,
    )
    out["eq63"] = abs(lhs63 - theta_quot)
    return out
