"""The two-parameter quantity R*(a,b,p;q) = [a,p;q]/[b,p;q], its prefactored
companion R = q^(-(a-b)/2 + (a^2-b^2)/(2p)) R*, four independent evaluation
routes (product, theta quotient, exponential sum, character product), the
tau quantities built on the bilateral sum psi*, and the q-derivative of R.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .elliptic import modulus_from_nome
from .numerics import (
    CrossCheckFailure,
    DomainError,
    NonConvergence,
    PrecisionSpec,
    cv,
    sum_series,
)
from .qfunctions import AgileParams, agile, psi_star, qpow


@dataclass(frozen=True)
class RQParams:
    """Exponents a, b and period p > 0.  Product-route evaluation needs
    Re(a), Re(b) in (0, p); the theta-sum route takes any complex a, b."""

    a: object
    b: object
    p: object

    def __post_init__(self) -> None:
        p = self.p
        if isinstance(p, (int, float, Fraction)) and p <= 0:
            raise DomainError(f"period p must be positive, got {p!r}")


@dataclass(frozen=True)
class Chi2Character:
    """Exponent pattern of the character product: period p, distinguished
    residues a and b (integers with 0 < a, b < p).

    exponent(n) adds +1 for each of n = a, p-a (mod p) and -1 for each of
    n = b, p-b (mod p); multiples of p get 0.  Contributions are summed, so
    a residue hit twice (e.g. a = p-a) counts twice.
    """

    a: int
    b: int
    p: int

    def __post_init__(self) -> None:
        if not all(isinstance(v, int) for v in (self.a, self.b, self.p)):
            raise DomainError("character parameters must be integers")
        if not (0 < self.a < self.p and 0 < self.b < self.p):
            raise DomainError(
                f"need 0 < a, b < p, got a={self.a}, b={self.b}, p={self.p}"
            )

    def exponent(self, n: int) -> int:
        m = n % self.p
        if m == 0:
            return 0
        e = 0
        e += 1 if m == (self.p - self.a) % self.p else 0
        e -= 1 if m == (self.p - self.b) % self.p else 0
        e += 1 if m == self.a else 0
        e -= 1 if m == self.b else 0
        return e

    @property
    def values(self) -> dict:
        return {m: self.exponent(m) for m in range(self.p)}


def rq_star(params: RQParams, q, prec: PrecisionSpec, route: str | None = None):
    """R*(a,b,p;q) = [a,p;q] / [b,p;q]."""
    numer = agile(AgileParams(params.a, params.p), q, prec, route=route)
    denom = agile(AgileParams(params.b, params.p), q, prec, route=route)
    if denom == 0:
        raise ZeroDivisionError(
            f"[b,p;q] is exactly zero at b={params.b}, p={params.p}"
        )
    return numer / denom


def rq(params: RQParams, q, prec: PrecisionSpec, route: str | None = None):
    """R(a,b,p;q) = q^(-(a-b)/2 + (a^2-b^2)/(2p)) * R*(a,b,p;q)."""
    ctx = prec.context()
    a = cv(ctx, params.a)
    b = cv(ctx, params.b)
    p = cv(ctx, params.p)
    exponent = -(a - b) / 2 + (a * a - b * b) / (2 * p)
    return qpow(ctx, q, exponent) * rq_star(params, q, prec, route=route)


def rq_theta(a, b, p, x, prec: PrecisionSpec, route: str = "theta"):
    """R(a,b,p;e^(-x)) for positive reals a, b, p, x, by theta quotient:

        exp(-x(a^2-b^2)/(2p) + x(a-b)/2)
        * theta4((p-2a) i x/4, e^(-px/2)) / theta4((p-2b) i x/4, e^(-px/2)).

    route="expsum" evaluates the equivalent exponential-sum form

        prefactor * exp(- sum_{n>=1} (1/n)
            (e^(anx) + e^((p-a)nx) - e^(bnx) - e^((p-b)nx)) / (e^(pnx) - 1)).

    The two routes (and the product route of ``rq``) agree; the suite
    asserts that.
    """
    from .qfunctions import theta4  # local import keeps module init cheap

    ctx = prec.context()
    a = cv(ctx, a)
    b = cv(ctx, b)
    p = cv(ctx, p)
    x = cv(ctx, x)
    for name, v in (("a", a), ("b", b), ("p", p), ("x", x)):
        if ctx.im(v) != 0 or v <= 0:
            raise DomainError(f"{name} must be positive real, got {v}")
    prefactor = ctx.exp(-x * (a * a - b * b) / (2 * p) + x * (a - b) / 2)
    if route == "theta":
        qq = ctx.exp(-p * x / 2)
        zn = (p - 2 * a) * ctx.mpc(0, 1) * x / 4
        zd = (p - 2 * b) * ctx.mpc(0, 1) * x / 4
        value = prefactor * theta4(zn, qq, prec) / theta4(zd, qq, prec)
        return ctx.re(value) if abs(ctx.im(value)) < prec.target_eps(ctx) else value
    if route == "expsum":

        def term(n: int):
            top = (
                ctx.exp(a * n * x)
                + ctx.exp((p - a) * n * x)
                - ctx.exp(b * n * x)
                - ctx.exp((p - b) * n * x)
            )
            return top / (n * (ctx.exp(p * n * x) - 1))

        s = sum_series(term, prec, start=1)
        return prefactor * ctx.exp(-s)
    raise DomainError(f"unknown route {route!r}")


def rq_charprod(a: int, b: int, p: int, q, prec: PrecisionSpec):
    """R*(a,b,p;q) as prod_{n>=1} (1-q^n)^(exponent(n)) over the character
    pattern of Chi2Character(a, b, p)."""
    chi = Chi2Character(a, b, p)
    ctx = prec.context()
    q = cv(ctx, q)
    if abs(q) >= 1:
        raise DomainError(f"character product needs |q| < 1, got |q| = {abs(q)}")
    eps = prec.work_eps(ctx)
    total = ctx.mpf(1)
    small = 0
    for n in range(1, 10**6):
        e = chi.exponent(n)
        if e:
            total = total * (1 - qpow(ctx, q, n)) ** e
        if abs(q) ** n <= eps:
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise NonConvergence("character product did not settle within budget")


def tau_star(a, p, q, prec: PrecisionSpec):
    """tau*(a,p;q) = sqrt(pi/K) * q^(a^2/(2p) - a/2 + p/8) * psi*(a,p;q),
    where K is the period integral attached to the nome q.

    Evaluated through the bilateral sum psi*, which is entire in a; the
    equivalent product quotient form has removable 0/0 points at integer a.
    """
    ctx = prec.context()
    qv = cv(ctx, q)
    if ctx.im(qv) != 0 or not (0 < qv < 1):
        raise DomainError(f"tau* needs real q in (0, 1), got {qv}")
    a = cv(ctx, a)
    p = cv(ctx, p)
    mod = modulus_from_nome(qv, prec)
    pref = ctx.sqrt(ctx.pi / mod.K)
    expo = a * a / (2 * p) - a / 2 + p / 8
    return pref * qpow(ctx, qv, expo) * psi_star(a, p, qv, prec)


def tau0(a, q, prec: PrecisionSpec):
    """tau0(a, q) = tau*(a, 1; q)."""
    return tau_star(a, 1, q, prec)


def drq_dq(params: RQParams, q, prec: PrecisionSpec):
    """dR(a,b,p;q)/dq, analytically, for real a, b in (0, p), real q in (0,1).

    Differentiates log R termwise: with C = -(a-b)/2 + (a^2-b^2)/(2p) and
    h(m) = m q^(m-1)/(1 - q^m),

        R'(q) = R(q) [ C/q - sum_{n>=0} (h(pn+a) + h(pn+p-a)
                                         - h(pn+b) - h(pn+p-b)) ].

    Cross-checked against a central difference with step 10^(-digits/2)
    computed at raised working precision; disagreement beyond
    10^(-digits/3) raises CrossCheckFailure.
    """
    ctx = prec.context()
    a = cv(ctx, params.a)
    b = cv(ctx, params.b)
    p = cv(ctx, params.p)
    qv = cv(ctx, q)
    for name, v in (("a", a), ("b", b), ("p", p)):
        if ctx.im(v) != 0:
            raise DomainError(f"{name} must be real for the derivative, got {v}")
    if ctx.im(qv) != 0 or not (0 < qv < 1):
        raise DomainError(f"derivative needs real q in (0, 1), got {qv}")
    if a == b:
        return ctx.mpf(0)
    if not (0 < a < p and 0 < b < p):
        raise DomainError("derivative route needs a, b in (0, p)")

    c_exp = -(a - b) / 2 + (a * a - b * b) / (2 * p)

    def h(m):
        qm = qpow(ctx, qv, m)
        return m * qm / (qv * (1 - qm))  # m q^(m-1)/(1-q^m) without a root

    def term(n: int):
        return h(p * n + a) + h(p * n + p - a) - h(p * n + b) - h(p * n + p - b)

    log_deriv = c_exp / qv - sum_series(term, prec, start=0)
    value = rq(params, qv, prec) * log_deriv

    # Independent confirmation by central difference at raised precision.
    cd_prec = PrecisionSpec(prec.digits + prec.digits // 2 + 20, prec.guard)
    cctx = cd_prec.context()
    step = cctx.mpf(10) ** (-(prec.digits // 2))
    qc = cv(cctx, qv)
    upper = rq(params, qc + step, cd_prec)
    lower = rq(params, qc - step, cd_prec)
    central = (upper - lower) / (2 * step)
    tol = ctx.mpf(10) ** (-(prec.digits // 3))
    if abs(central - cv(cctx, value)) > tol * max(cctx.mpf(1), abs(central)):
        raise CrossCheckFailure(
            f"analytic derivative {value} vs central difference {central}"
        )
    return value


def drq_normalized(params: RQParams, q, prec: PrecisionSpec):
    """R'(a,b,p;q) * q pi^2 / K^2 with K the period integral at the nome q.

    This is the normalization under which the derivative values at singular
    nomes are algebraic numbers; it is what the minimal-polynomial command
    exposes as "drq-normalized".
    """
    ctx = prec.context()
    qv = cv(ctx, q)
    mod = modulus_from_nome(qv, prec)
    return drq_dq(params, qv, prec) * qv * ctx.pi**2 / mod.K**2
