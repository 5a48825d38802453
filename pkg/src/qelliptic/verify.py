"""Identity-check registry and deterministic suite runner.

Every check evaluates one numerical identity at a handful of sample points
and reports its worst absolute residual.  Checks carry one of two
severities:

* ``normative``: the identity is expected to hold; a residual above
  tolerance makes the whole suite fail.
* ``discrepancy-allowed``: the check evaluates a formula reading that is
  documented as wrong (a sign, a prefactor, a parameter, or a phase);
  a residual above tolerance is reported as status ``discrepancy`` and
  does not fail the suite.  These checks keep the record honest: the
  neighbouring normative check evaluates the corrected reading.

``run_suite`` is deterministic: two runs with the same (selector, digits,
seed, parallelism) produce byte-identical JSON reports.  Per-check sample
generators draw from ``random.Random(f"{seed}:{check_id}")``, wall-clock
times are reported only in the text rendering, and checks are sorted by id.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import mpmath

from .numerics import PrecisionSpec, UnknownSelector, cv, gamma
from .qfunctions import (
    INF,
    AgileParams,
    agile,
    euler_f,
    hyperbolic_log_sum,
    pochhammer,
    psi_star,
    qpow,
    theta3,
    theta4,
    theta4_product,
    theta_sum_S,
    weber_phi,
)
from .elliptic import (
    K_of_k,
    landen_chain,
    modulus_from_nome,
    nome_from_r,
    singular_modulus,
)
from .cfrac import (
    ContinuedFraction,
    eval_cf,
    h_cf,
    m_series,
    p_cf,
    r1_cf,
    r2_cf,
    r3_cf,
    rr_cf,
)
from .rquantity import (
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
from .hyperq import (
    Phi21Params,
    gauss_product,
    phi21,
    psi_small,
    psi_small_product,
    thm6_check_i,
    thm6_check_ii,
)
from .algrec import NOT_FOUND, find_minpoly, verify_root

__all__ = [
    "IdentityCheck",
    "CheckOutcome",
    "Report",
    "register_builtin_checks",
    "run_suite",
]

NORMATIVE = "normative"
DISCREPANCY_ALLOWED = "discrepancy-allowed"

# r values used by the fixed-sample singular-modulus checks.
R_SAMPLES = (1, 2, 3, 5, Fraction(2, 5))

# Ascending coefficients of the degree-8 polynomial satisfied by the
# normalized derivative of the first quotient below at q = exp(-pi).
DERIV_POLY_125 = (16, 0, -240, 800, -2900, -6000, -6500, 17500, 625)
DERIV_POLY_136 = (-1, 0, 6, 24, 3)
DERIV_POLY_138 = (1, -8, 20, -16, 2)
# 32768 t^8 = 1: the normalized derivative of the exponent-weighted product
# at (a, p) = (1, 4) is -2^(-15/8).
AGILE_DERIV_POLY_14 = (-1, 0, 0, 0, 0, 0, 0, 0, 32768)

# Recognition checks need find_minpoly's precondition for degree 8.
RECOGNITION_MIN_DIGITS = 120


@dataclass(frozen=True)
class IdentityCheck:
    """One verifiable identity (or one documented wrong reading).

    ``run(prec, rng)`` returns the list of absolute residuals it measured.
    ``covers`` lists the equation tokens this check exercises.  ``formula``
    is a short ASCII statement of what is being compared.  ``tol_exponent``
    overrides the default tolerance exponent (-digits + 15) when set.
    """

    id: str
    description: str
    formula: str
    covers: tuple
    severity: str
    run: Callable[[PrecisionSpec, random.Random], list]
    min_digits: int = 10
    tol_exponent: Callable[[int], int] | None = None

    def tolerance_exponent(self, digits: int) -> int:
        if self.tol_exponent is not None:
            return self.tol_exponent(digits)
        return -digits + 15


@dataclass(frozen=True)
class CheckOutcome:
    id: str
    status: str  # pass | fail | discrepancy | skip
    max_abs_error: str
    samples: int
    seconds: float  # wall time; rendered only in the text format


@dataclass(frozen=True)
class Report:
    suite: str
    digits: int
    seed: int
    checks: tuple

    @property
    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "discrepancy": 0, "skip": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts["fail"] == 0

    def to_json(self) -> str:
        """Canonical byte-stable rendering (wall times are zeroed)."""
        obj = {
            "suite": self.suite,
            "digits": self.digits,
            "seed": self.seed,
            "checks": [
                {
                    "id": c.id,
                    "status": c.status,
                    "max_abs_error": c.max_abs_error,
                    "samples": c.samples,
                    "seconds": 0.0,
                }
                for c in self.checks
            ],
        }
        return json.dumps(obj, separators=(",", ":"))

    def to_text(self) -> str:
        width = max([len(c.id) for c in self.checks] + [4])
        lines = [f"suite: {self.suite}   digits: {self.digits}   seed: {self.seed}"]
        lines.append(
            f"{'id':<{width}}  {'status':<11}  {'max_abs_error':<14}  "
            f"{'samples':>7}  {'seconds':>8}"
        )
        for c in self.checks:
            lines.append(
                f"{c.id:<{width}}  {c.status:<11}  {c.max_abs_error:<14}  "
                f"{c.samples:>7}  {c.seconds:>8.2f}"
            )
        n = self.counts
        verdict = "PASS" if self.ok else "FAIL"
        lines.append(
            f"{len(self.checks)} checks: {n['pass']} pass, {n['fail']} fail, "
            f"{n['discrepancy']} discrepancy, {n['skip']} skip -> {verdict}"
        )
        return "\n".join(lines)


# --------------------------------------------------------------------------
# sample helpers


def _frac(rng: random.Random, lo, hi, max_den: int = 12) -> Fraction:
    """Random Fraction strictly inside (lo, hi) with denominator <= max_den."""
    lo_f, hi_f = Fraction(lo), Fraction(hi)
    for _ in range(1000):
        d = rng.randint(2, max_den)
        n = rng.randint(int(lo_f * d) + 1, max(int(lo_f * d) + 1, int(hi_f * d)))
        x = Fraction(n, d)
        if lo_f < x < hi_f:
            return x
    raise ValueError(f"no fraction with denominator <= {max_den} in ({lo}, {hi})")


def _rq_exponent(a, b, p) -> Fraction:
    return -Fraction(a - b, 2) + Fraction(a * a - b * b, 2 * p)


def _agile_exponent(a, p) -> Fraction:
    return Fraction(p, 12) - Fraction(a, 2) + Fraction(a * a, 2 * p)


# --------------------------------------------------------------------------
# check bodies (each returns a list of absolute residuals)


def _chk_lemma1_k(prec, rng):
    errs = []
    for r in R_SAMPLES:
        ctx = prec.context()
        q = nome_from_r(r, prec).q
        mod = modulus_from_nome(q, prec)
        ratio = K_of_k(mod.k_prime, prec) / K_of_k(mod.k, prec)
        errs.append(abs(ratio - ctx.sqrt(cv(ctx, Fraction(r)))))
    return errs


def _chk_lemma1_K(prec, rng):
    errs = []
    for r in R_SAMPLES:
        q = nome_from_r(r, prec).q
        mod = modulus_from_nome(q, prec)
        errs.append(abs(mod.K - K_of_k(mod.k, prec)))
    return errs


def _chk_prodid_eq5(prec, rng):
    errs = []
    for r in (1, 2, 3, 5):
        ctx = prec.context()
        q = nome_from_r(r, prec).q
        mod = modulus_from_nome(q, prec)
        Kk = K_of_k(mod.k, prec)
        lhs = euler_f(q * q, prec) ** 6
        rhs = 2 * mod.k * mod.k_prime * Kk**3 / (ctx.pi**3 * ctx.sqrt(q))
        errs.append(abs(lhs - rhs))
    return errs


def _chk_prodid_eq6(prec, rng):
    errs = []
    for r in (1, 2, 3, 5):
        ctx = prec.context()
        q = nome_from_r(r, prec).q
        mod = modulus_from_nome(q, prec)
        lhs = qpow(ctx, q, Fraction(1, 3)) * weber_phi(q, prec) ** 8
        rhs = 2 ** cv(ctx, Fraction(-4, 3)) * (mod.k / (1 - mod.k**2)) ** cv(
            ctx, Fraction(2, 3)
        )
        errs.append(abs(lhs - rhs))
    return errs


def _chk_prodid_eq7(prec, rng):
    errs = []
    for r in (1, 2, 3, 5):
        ctx = prec.context()
        q = nome_from_r(r, prec).q
        mod = modulus_from_nome(q, prec)
        Kk = K_of_k(mod.k, prec)
        lhs = euler_f(q, prec) ** 8
        rhs = (
            2 ** cv(ctx, Fraction(8, 3))
            / ctx.pi**4
            * qpow(ctx, q, Fraction(-1, 3))
            * mod.k ** cv(ctx, Fraction(2, 3))
            * mod.k_prime ** cv(ctx, Fraction(8, 3))
            * Kk**4
        )
        errs.append(abs(lhs - rhs))
    return errs


def _chk_prodid_eq15(prec, rng):
    errs = []
    for r in (1, 2, 3):
        ctx = prec.context()
        q = nome_from_r(r, prec).q
        k11, k12, k21, k22 = landen_chain(q, prec)
        lhs = (weber_phi(q, prec) / weber_phi(q * q, prec)) ** 2
        rhs = (
            qpow(ctx, q, Fraction(1, 12))
            * k11 ** cv(ctx, Fraction(1, 6))
            * k22 ** cv(ctx, Fraction(1, 3))
            / (k21 ** cv(ctx, Fraction(1, 6)) * k12 ** cv(ctx, Fraction(1, 3)))
        )
        errs.append(abs(lhs - rhs))
    return errs


def _chk_prodid_intro(prec, rng):
    ctx = prec.context()
    pi = ctx.pi
    errs = []
    q25 = ctx.exp(-pi * ctx.sqrt(cv(ctx, Fraction(2, 5))))
    lhs = pochhammer(-q25, q25, INF, prec) ** 8
    rhs = (7 + 3 * ctx.sqrt(5)) / 8 * ctx.exp(pi / 3 * ctx.sqrt(cv(ctx, Fraction(2, 5))))
    errs.append(abs(lhs - rhs))
    q3 = ctx.exp(-pi * ctx.sqrt(3))
    lhs = pochhammer(-q3, q3, INF, prec) ** 8
    rhs = ctx.exp(pi / ctx.sqrt(3)) / (
        2 ** cv(ctx, Fraction(2, 3)) * (26 + 15 * ctx.sqrt(3)) ** cv(ctx, Fraction(1, 3))
    )
    errs.append(abs(lhs - rhs))
    lhs = euler_f(q3, prec) ** 8
    rhs = (
        3
        * (2 + ctx.sqrt(3))
        * ctx.exp(pi / ctx.sqrt(3))
        * gamma(Fraction(1, 3), prec) ** 12
        / (1024 * pi**8)
    )
    errs.append(abs(lhs - rhs))
    return errs


def _chk_thm1_eq11(prec, rng):
    errs = []
    for r in (1, 2, 3):
        ctx = prec.context()
        q = nome_from_r(r, prec).q
        k11, k12, k21, k22 = landen_chain(q, prec)
        K = K_of_k(k11, prec)
        base = (
            2 ** cv(ctx, Fraction(1, 6))
            * (k11 * k22) ** cv(ctx, Fraction(1, 3))
            / (k12 * k21) ** cv(ctx, Fraction(1, 6))
            * ctx.sqrt(K / ctx.pi)
        )
        for m in (0, 1, 2):
            lhs = theta_sum_S(2 * m, q, prec)
            errs.append(abs(lhs - qpow(ctx, q, -m * m) * base))
    return errs


def _chk_thm1_eq12(prec, rng):
    errs = []
    for r in (1, 2, 3):
        ctx = prec.context()
        q = nome_from_r(r, prec).q
        k11, k12, k21, k22 = landen_chain(q, prec)
        K = K_of_k(k11, prec)
        base = (
            2 ** cv(ctx, Fraction(5, 6))
            * (k11 * k12 * k21) ** cv(ctx, Fraction(1, 6))
            / k22 ** cv(ctx, Fraction(1, 3))
            * ctx.sqrt(K / ctx.pi)
        )
        for m in (0, 1):
            lhs = theta_sum_S(2 * m + 1, q, prec)
            rhs = qpow(ctx, q, Fraction(-((2 * m + 1) ** 2), 4)) * base
            errs.append(abs(lhs - rhs))
    return errs


def _chk_thm1_eq1314(prec, rng):
    errs = []
    # bilateral sum vs triple product at generic rational shifts
    for _ in range(3):
        z = _frac(rng, 0, 3)
        q = _frac(rng, Fraction(1, 20), Fraction(1, 4))
        ctx = prec.context()
        qv = cv(ctx, q)
        S = theta_sum_S(z, q, prec)
        prod = (
            euler_f(qv * qv, prec)
            * pochhammer(-qpow(ctx, qv, 1 + z), qv * qv, INF, prec)
            * pochhammer(-qpow(ctx, qv, 1 - z), qv * qv, INF, prec)
        )
        errs.append(abs(S - prod))
    # even-shift reduction to the doubled-nome odd product
    ctx = prec.context()
    q = nome_from_r(1, prec).q
    k11, k12, _, _ = landen_chain(q, prec)
    K = K_of_k(k11, prec)
    for m in (1, 2):
        S = theta_sum_S(2 * m, q, prec)
        head = ctx.mpf(1)
        for n in range(m):
            head *= (1 + qpow(ctx, q, 2 * (n - m) + 1)) / (1 + q ** (2 * n + 1))
        tail = pochhammer(-q, q * q, INF, prec) ** 2
        rhs = (
            (2 * k11 * k12) ** cv(ctx, Fraction(1, 6))
            * qpow(ctx, q, Fraction(-1, 12))
            * ctx.sqrt(K / ctx.pi)
            * head
            * tail
        )
        errs.append(abs(S - rhs))
    return errs


def _chk_thm1_app(prec, rng):
    errs = []
    for r in (1, 2):
        ctx = prec.context()
        q = nome_from_r(r, prec).q
        for a in (0, 1, 2):
            lhs = m_series(qpow(ctx, q, 2 * a), q * q, prec) + qpow(
                ctx, q, -2 * a
            ) * m_series(qpow(ctx, q, -2 * a), q * q, prec)
            rhs = theta_sum_S(2 * a + 1, q, prec)
            errs.append(abs(lhs - rhs))
    return errs


def _chk_cf_eq1617(prec, rng):
    errs = []
    for _ in range(4):
        c = _frac(rng, Fraction(1, 20), 1)
        if rng.random() < 0.5:
            c = -c
        q = _frac(rng, Fraction(1, 20), Fraction(1, 2))
        ctx = prec.context()
        errs.append(abs(m_series(c, q, prec) - _m_cf_value(c, q, prec, ctx)))
    return errs


def _m_cf_value(c, q, prec, ctx):
    from .cfrac import m_cf

    return m_cf(cv(ctx, c), cv(ctx, q), prec)


def _chk_cf_note(prec, rng):
    errs = []
    for q in (Fraction(3, 20), Fraction(3, 10)):
        ctx = prec.context()
        qv = cv(ctx, q)
        for a in (1, 3, 5):
            lhs = qpow(ctx, qv, Fraction((a + 1) ** 2, 4)) * m_series(
                qpow(ctx, qv, a), qv * qv, prec
            )
            rhs = (
                cv(ctx, Fraction(1, 2))
                - sum(qv ** (k * k) for k in range((a - 1) // 2 + 1))
                + theta3(0, qv, prec) / 2
            )
            errs.append(abs(lhs - rhs))
        # the closing relation: the square of the z = 0 sum is 2 K / pi
        mod = modulus_from_nome(qv, prec)
        errs.append(abs(theta3(0, qv, prec) - ctx.sqrt(2 * K_of_k(mod.k, prec) / ctx.pi)))
    return errs


def _chk_cf_note_sign(prec, rng):
    errs = []
    ctx = prec.context()
    qv = cv(ctx, Fraction(3, 20))
    for a in (1, 3):
        lhs = qpow(ctx, qv, Fraction((a + 1) ** 2, 4)) * m_series(
            -qpow(ctx, qv, a), qv * qv, prec
        )
        rhs = (
            cv(ctx, Fraction(1, 2))
            - sum(qv ** (k * k) for k in range((a - 1) // 2 + 1))
            + theta3(0, qv, prec) / 2
        )
        errs.append(abs(lhs - rhs))
    return errs


def _chk_lemma2_eq18(prec, rng):
    errs = []
    for t, a in ((0, 2), (Fraction(1, 2), 1), (1, 3), (Fraction(-3, 10), Fraction(1, 2))):
        ctx = prec.context()
        lhs = hyperbolic_log_sum(t, a, prec)
        P0 = euler_f(ctx.exp(-2 * ctx.pi * cv(ctx, a)), prec)
        th = theta4(ctx.mpc(0, 1) * cv(ctx, t), ctx.exp(-ctx.pi * cv(ctx, a)), prec)
        errs.append(abs(lhs - (ctx.log(P0) - ctx.log(th))))
    return errs


def _chk_theta_eq19(prec, rng):
    errs = []
    ctx = prec.context()
    samples = [
        (cv(ctx, Fraction(3, 10)), cv(ctx, Fraction(1, 5))),
        (ctx.mpc(cv(ctx, Fraction(1, 10)), cv(ctx, Fraction(1, 5))), cv(ctx, Fraction(1, 5))),
        (cv(ctx, _frac(rng, 0, 1)), cv(ctx, _frac(rng, Fraction(1, 20), Fraction(2, 5)))),
    ]
    for z, q in samples:
        errs.append(abs(theta4(z, q, prec) - theta4_product(z, q, prec)))
    return errs


def _chk_theta_def_printed(prec, rng):
    ctx = prec.context()
    z, q = cv(ctx, Fraction(3, 10)), cv(ctx, Fraction(1, 5))
    printed = ctx.mpf(1)
    n = 1
    while True:
        term = (-1) ** n * q ** (n * n) * ctx.cos(2 * n * z)
        printed += term
        if abs(term) < prec.work_eps(ctx):
            break
        n += 1
    return [abs(printed - theta4_product(z, q, prec))]


def _chk_rr_eq2021(prec, rng):
    errs = []
    ctx = prec.context()
    pi = ctx.pi
    for q in (ctx.exp(-pi), ctx.exp(-2 * pi), ctx.exp(-pi * ctx.sqrt(3)), cv(ctx, Fraction(1, 5))):
        bare = rr_cf(q, prec)
        errs.append(abs(bare - rq_star(RQParams(1, 2, 5), q, prec)))
        errs.append(abs(bare - rq_charprod(1, 2, 5, q, prec)))
        errs.append(abs(r1_cf(q, prec) - rq(RQParams(1, 2, 5), q, prec)))
    return errs


def _chk_rr_eq21_printed(prec, rng):
    ctx = prec.context()
    q = cv(ctx, Fraction(1, 5))
    lhs = qpow(ctx, q, Fraction(-1, 5)) * rr_cf(q, prec)
    return [abs(lhs - rq_star(RQParams(1, 2, 5), q, prec))]


def _chk_rr_eq22(prec, rng):
    errs = []
    ctx = prec.context()
    for x in (ctx.pi, 2 * ctx.pi, ctx.pi * ctx.sqrt(3)):
        errs.append(abs(r1_cf(ctx.exp(-x), prec) - rq_theta(1, 2, 5, x, prec, route="theta")))
    return errs


def _chk_rr_eq2324(prec, rng):
    errs = []
    ctx = prec.context()
    for x in (ctx.mpf(1), ctx.mpf(2), ctx.pi):
        R = r1_cf(ctx.exp(-x), prec)
        errs.append(abs(R - rq_theta(1, 2, 5, x, prec, route="expsum")))
        s1 = ctx.mpf(0)
        s3 = ctx.mpf(0)
        n = 1
        while n < 100000:
            t1 = ctx.cosh(n * x / 2) / (n * ctx.sinh(5 * n * x / 2))
            t3 = ctx.cosh(3 * n * x / 2) / (n * ctx.sinh(5 * n * x / 2))
            s1 += t1
            s3 += t3
            if abs(t1) < prec.work_eps(ctx) and abs(t3) < prec.work_eps(ctx):
                break
            n += 1
        errs.append(abs(R - ctx.exp(-x / 5) * ctx.exp(s1) / ctx.exp(s3)))
    return errs


def _chk_h_eq2526(prec, rng):
    errs = []
    ctx = prec.context()
    for x in (ctx.mpf(1), ctx.pi):
        errs.append(abs(h_cf(ctx.exp(-x), prec) - rq_theta(1, 3, 8, x, prec, route="expsum")))
    for q in (Fraction(1, 10), Fraction(1, 4)):
        qv = cv(ctx, q)
        errs.append(abs(h_cf(qv, prec) - rq(RQParams(1, 3, 8), qv, prec)))
    return errs


def _chk_h_eq27(prec, rng):
    errs = []
    ctx = prec.context()
    for x in (ctx.mpf(1), ctx.pi):
        errs.append(abs(h_cf(ctx.exp(-x), prec) - rq_theta(1, 3, 8, x, prec, route="theta")))
    return errs


def _chk_h_eq27_printed(prec, rng):
    ctx = prec.context()
    x = ctx.mpf(1)
    i = ctx.mpc(0, 1)
    Q = ctx.exp(-4 * x)
    lhs = ctx.exp(-x / 2) * theta4(3 * i * x / 2, Q, prec) / theta4(i * x / 4, Q, prec)
    return [abs(h_cf(ctx.exp(-x), prec) - lhs)]


def _obs1_value(a, p, power, prec):
    ctx = prec.context()
    q = ctx.exp(-ctx.pi)
    v = qpow(ctx, q, _agile_exponent(a, p)) * agile(AgileParams(a, p), q, prec)
    return ctx.re(v) ** power


def _recognition_residual(res, expected=None):
    """Map a find_minpoly outcome to a residual: tiny when recognized and
    verified (and matching `expected` when given), sentinel 1.0 or 0.5
    otherwise."""
    if res is NOT_FOUND:
        return 1.0
    if expected is not None and tuple(res.coeffs) != tuple(expected):
        return 1.0
    if res.confidence != "verified":
        return 0.5
    return res.residual


def _chk_obs1_algebraic(prec, rng):
    errs = []
    for a, p, power in ((1, 4, 1), (1, 5, 4), (2, 5, 4), (1, 6, 12)):
        res = find_minpoly(
            _obs1_value(a, p, power, prec),
            8,
            prec=prec,
            recompute=lambda pr, a=a, p=p, power=power: _obs1_value(a, p, power, pr),
        )
        errs.append(_recognition_residual(res))
    return errs


def _chk_obs1_deg8_printed(prec, rng):
    errs = []
    for a, p in ((1, 5), (2, 5), (1, 6)):
        res = find_minpoly(_obs1_value(a, p, 1, prec), 8, prec=prec)
        errs.append(_recognition_residual(res))
    return errs


def _chk_rq_fourway(prec, rng):
    errs = []
    for a, b, p in ((1, 2, 5), (1, 3, 8), (1, 2, 4), (2, 3, 7)):
        for q in ("exp", Fraction(3, 20)):
            ctx = prec.context()
            if q == "exp":
                x = ctx.pi
                qv = ctx.exp(-x)
            else:
                qv = cv(ctx, q)
                x = -ctx.log(qv)
            v1 = rq(RQParams(a, b, p), qv, prec)
            v2 = rq_theta(a, b, p, x, prec, route="theta")
            v3 = rq_theta(a, b, p, x, prec, route="expsum")
            v4 = qpow(ctx, qv, _rq_exponent(a, b, p)) * rq_charprod(a, b, p, qv, prec)
            errs.extend([abs(v1 - v2), abs(v1 - v3), abs(v1 - v4)])
    return errs


def _chk_thm3_eq3334(prec, rng):
    errs = []
    for _ in range(3):
        p = _frac(rng, 2, 6)
        a = _frac(rng, 0, p)
        b = _frac(rng, 0, p)
        ctx = prec.context()
        x = cv(ctx, _frac(rng, Fraction(1, 2), 3))
        qv = ctx.exp(-x)
        v1 = rq(RQParams(a, b, p), qv, prec)
        errs.append(abs(v1 - rq_theta(a, b, p, x, prec, route="theta")))
        errs.append(abs(v1 - rq_theta(a, b, p, x, prec, route="expsum")))
    return errs


def _chk_thm4_eq3536(prec, rng):
    errs = []
    for k in range(4):
        p = rng.randint(5, 12)
        a = rng.randint(1, p - 1)
        b = rng.randint(1, p - 1)
        while b == a:
            b = rng.randint(1, p - 1)
        q = Fraction(3, 25) if k % 2 == 0 else Fraction(3, 10)
        ctx = prec.context()
        qv = cv(ctx, q)
        errs.append(abs(rq_star(RQParams(a, b, p), qv, prec) - rq_charprod(a, b, p, qv, prec)))
    return errs


def _chk_agile_eq37(prec, rng):
    errs = []
    pairs = [(1, 5), (2, 7), (Fraction(3, 2), 4), (Fraction(1, 3), 2)]
    p = _frac(rng, 1, 5)
    pairs.append((_frac(rng, 0, p), p))
    for a, p in pairs:
        for q in (Fraction(1, 5), "exp"):
            ctx = prec.context()
            qv = ctx.exp(-ctx.pi) if q == "exp" else cv(ctx, q)
            lhs = agile(AgileParams(a, p), qv, prec, route="product")
            rhs = agile(AgileParams(a, p), qv, prec, route="theta")
            errs.append(abs(lhs - rhs))
    return errs


def _m38(ctx, prec, a, p, q):
    """M(-q^-a, q^p) - q^a M(-q^a, q^p): the two-sided combination that
    collapses to an exponent-weighted product."""
    qp = qpow(ctx, q, p)
    return m_series(-qpow(ctx, q, -a), qp, prec) - qpow(ctx, q, a) * m_series(
        -qpow(ctx, q, a), qp, prec
    )


def _chk_cf_eq383940(prec, rng):
    errs = []
    for a, b, p in ((1, 2, 5), (1, 3, 8), (2, 3, 7)):
        ctx = prec.context()
        qv = cv(ctx, Fraction(3, 20))
        la = _m38(ctx, prec, a, p, qv)
        lb = _m38(ctx, prec, b, p, qv)
        errs.append(abs(la - euler_f(qpow(ctx, qv, p), prec) * agile(AgileParams(a, p), qv, prec)))
        errs.append(abs(la / lb - rq_star(RQParams(a, b, p), qv, prec)))
    ctx = prec.context()
    qv = cv(ctx, Fraction(1, 5))
    errs.append(abs(_m38(ctx, prec, 1, 5, qv) / _m38(ctx, prec, 2, 5, qv) - rr_cf(qv, prec)))
    return errs


def _chk_app3_eq4142(prec, rng):
    errs = []
    for a in (Fraction(3, 10), _frac(rng, 0, 1)):
        for q in (Fraction(3, 20), Fraction(3, 10)):
            ctx = prec.context()
            qv = cv(ctx, q)
            base = tau0(a, qv, prec)
            for n in (1, 2):
                errs.append(abs(base - tau0(n + a, qv, prec)))
                errs.append(abs(base - tau0(n - a, qv, prec)))
    return errs


def _chk_app3_eq43(prec, rng):
    # The ratio is symmetric about integer a, so a central difference of
    # width h measures pure evaluation roundoff divided by 2h; the residual
    # scales like 10^(-workdps+digits/3), not like 10^(-digits).
    errs = []
    ctx = prec.context()
    qv = cv(ctx, Fraction(1, 5))
    h = ctx.mpf(10) ** (-(prec.digits // 3))
    for a0 in (1, 2):
        d = (tau0(a0 + h, qv, prec) - tau0(a0 - h, qv, prec)) / (2 * h)
        errs.append(abs(d))
    return errs


def _chk_app3_eq4445(prec, rng):
    errs = []
    pairs = [(Fraction(2, 5), Fraction(13, 10)), (Fraction(2, 3), 2)]
    pairs.append((_frac(rng, 0, 1), _frac(rng, 1, 3)))
    for a, p in pairs:
        ctx = prec.context()
        qv = cv(ctx, Fraction(3, 20))
        base = tau_star(a, p, qv, prec)
        for n in (1, 2):
            errs.append(abs(base - tau_star(n * p + a, p, qv, prec)))
            errs.append(abs(base - tau_star(n * p - a, p, qv, prec)))
    return errs


def _chk_psistar_eq4647(prec, rng):
    errs = []
    for a, p in ((Fraction(3, 10), 1), (Fraction(3, 2), 2), (Fraction(5, 6), 3)):
        for q in (Fraction(1, 5), Fraction(2, 5)):
            ctx = prec.context()
            qv = cv(ctx, q)
            s = psi_star(a, p, qv, prec, route="sum")
            errs.append(abs(s - psi_star(a, p, qv, prec, route="product")))
            quot = (
                euler_f(qpow(ctx, qv, p), prec)
                * agile(AgileParams(2 * a, 2 * p), qv, prec)
                / agile(AgileParams(a, p), qv, prec)
            )
            errs.append(abs(s - quot))
    return errs


def _chk_thm5_eq4849(prec, rng):
    errs = []
    ctx = prec.context()
    qv = cv(ctx, Fraction(3, 20))
    for _ in range(2):
        a = _frac(rng, 0, 3)
        b = _frac(rng, 0, 3)
        while b == a:
            b = _frac(rng, 0, 3)
        for n in (1, 2):
            p = Fraction(a + b, n)
            errs.append(abs(tau_star(a, p, qv, prec) - tau_star(b, p, qv, prec)))
            p = Fraction(abs(a - b), n)
            errs.append(abs(tau_star(a, p, qv, prec) - tau_star(b, p, qv, prec)))
    import math

    for ia, ib in ((2, 3), (4, 6)):
        p = Fraction(math.gcd(ia, ib), ia * ib)
        errs.append(
            abs(
                tau_star(Fraction(1, ia), p, qv, prec)
                - tau_star(Fraction(1, ib), p, qv, prec)
            )
        )
    a, b, p = 1, 2, Fraction(3, 2)
    lhs = qpow(ctx, qv, Fraction(a * a, 2) / p - Fraction(a, 2)) * psi_star(a, p, qv, prec)
    rhs = qpow(ctx, qv, Fraction(b * b, 2) / p - Fraction(b, 2)) * psi_star(b, p, qv, prec)
    errs.append(abs(lhs - rhs))
    return errs


def _chk_deriv_eq5153(prec, rng):
    errs = []
    for q in (Fraction(1, 10), Fraction(1, 5), "exp"):
        ctx = prec.context()
        qv = ctx.exp(-ctx.pi) if q == "exp" else cv(ctx, q)
        errs.append(abs(r1_cf(qv, prec) - rq(RQParams(1, 2, 5), qv, prec)))
        errs.append(abs(r2_cf(qv, prec) - rq(RQParams(1, 3, 6), qv, prec)))
        errs.append(abs(r3_cf(qv, prec) - rq(RQParams(1, 3, 8), qv, prec)))
    return errs


def _chk_deriv_eq53_printed(prec, rng):
    ctx = prec.context()
    qv = cv(ctx, Fraction(3, 20))

    def den(n):
        e = 7 if n == 3 else 2 * n - 1
        return 1 + qv**e

    cf = ContinuedFraction(
        b0=ctx.mpf(0),
        partial_num=lambda n: ctx.mpf(1) if n == 1 else qv ** (2 * (n - 1)),
        partial_den=den,
    )
    lhs = qpow(ctx, qv, Fraction(1, 2)) * eval_cf(cf, prec)
    return [abs(lhs - rq(RQParams(1, 3, 8), qv, prec))]


def _drq_norm_at_exp_pi(a, b, p, prec):
    ctx = prec.context()
    return drq_normalized(RQParams(a, b, p), ctx.exp(-ctx.pi), prec)


def _chk_deriv_eq54(prec, rng):
    errs = []
    for a, b, p, expected in (
        (1, 2, 5, DERIV_POLY_125),
        (1, 3, 6, DERIV_POLY_136),
        (1, 3, 8, DERIV_POLY_138),
    ):
        res = find_minpoly(
            _drq_norm_at_exp_pi(a, b, p, prec),
            8,
            prec=prec,
            recompute=lambda pr, a=a, b=b, p=p: _drq_norm_at_exp_pi(a, b, p, pr),
        )
        errs.append(_recognition_residual(res, expected))
    return errs


def _agile_deriv_normalized(a, p, prec):
    """d/dq of q^(p/12 - a/2 + a^2/(2p)) [a,p;q] at q = exp(-pi), normalized
    by q pi^2 / K^2, via the exact logarithmic derivative of the product."""
    ctx = prec.context()
    q = ctx.exp(-ctx.pi)
    e = _agile_exponent(a, p)
    g = qpow(ctx, q, e) * agile(AgileParams(a, p), q, prec)
    eps = ctx.mpf(10) ** (-(prec.workdps + 5))
    s = ctx.mpf(0)
    for base in (p - a, a):
        n = 0
        while True:
            m = base + p * n
            t = m * q ** (m - 1) / (1 - q**m)
            s -= t
            if abs(t) < eps:
                break
            n += 1
    dg = g * (cv(ctx, e) / q + s)
    K = modulus_from_nome(q, prec).K
    return ctx.re(dg * q * ctx.pi**2 / K**2)


def _chk_deriv_eq56(prec, rng):
    res = find_minpoly(
        _agile_deriv_normalized(1, 4, prec),
        8,
        prec=prec,
        recompute=lambda pr: _agile_deriv_normalized(1, 4, pr),
    )
    return [_recognition_residual(res, AGILE_DERIV_POLY_14)]


def _chk_deriv_eq57(prec, rng):
    errs = []
    ctx = prec.context()
    q = ctx.exp(-ctx.pi)
    g14 = gamma(Fraction(1, 4), prec)
    d124 = drq_dq(RQParams(1, 2, 4), q, prec)
    closed = ctx.exp(ctx.pi) * g14**4 / (64 * 2 ** cv(ctx, Fraction(5, 8)) * ctx.pi**3)
    errs.append(abs(d124 - closed))
    rho = drq_normalized(RQParams(1, 2, 5), q, prec)
    errs.append(abs(verify_root(DERIV_POLY_125, rho, prec)))
    d125 = drq_dq(RQParams(1, 2, 5), q, prec)
    errs.append(abs(d125 - ctx.exp(ctx.pi) * g14**4 / (16 * ctx.pi**3) * rho))
    return errs


def _chk_prop_eq58(prec, rng):
    errs = []
    samples = [(1, 2), (2, 1), (Fraction(1, 2), Fraction(3, 2))]
    samples.append((_frac(rng, 0, 2), _frac(rng, 0, 2)))
    for A, B in samples:
        for q in (Fraction(3, 20), Fraction(1, 4)):
            ctx = prec.context()
            qv = cv(ctx, q)
            p = 4 * (Fraction(A) + Fraction(B))
            a = 2 * Fraction(A) + 3 * p / 4
            b = 2 * Fraction(B) + p / 4
            Q = qpow(ctx, qv, p)
            lhs = p_cf(qpow(ctx, qv, A), qpow(ctx, qv, B), qpow(ctx, qv, Fraction(A) + Fraction(B)), prec)
            rhs = (
                pochhammer(qpow(ctx, qv, a), Q, INF, prec)
                * pochhammer(qpow(ctx, qv, 2 * p - a), Q, INF, prec)
                / agile(AgileParams(b, p), qv, prec)
            )
            errs.append(abs(lhs - rhs))
    return errs


def _chk_thm6_eq61(prec, rng):
    errs = []
    for A in (1, 2, Fraction(1, 2)):
        for q in (Fraction(1, 10), Fraction(1, 5)):
            errs.append(abs(thm6_check_i(A, A, q, prec)))
    return errs


def _chk_thm6_eq61_general(prec, rng):
    errs = []
    for A, B, q in ((1, 2, Fraction(1, 10)), (2, 1, Fraction(3, 20))):
        errs.append(abs(thm6_check_i(A, B, q, prec)))
    return errs


def _chk_thm6_eq65(prec, rng):
    errs = []
    for a, b, p, q in ((1, 2, 5, Fraction(1, 5)), (1, 3, 8, Fraction(3, 20)), (2, 3, 7, Fraction(1, 5))):
        errs.append(abs(thm6_check_ii(a, b, p, q, prec)["eq65"]))
    return errs


def _chk_thm6_eq63(prec, rng):
    errs = []
    for a, b, p, q in ((1, 2, 5, Fraction(1, 5)), (1, 3, 8, Fraction(3, 20)), (2, 3, 7, Fraction(1, 5))):
        errs.append(abs(thm6_check_ii(a, b, p, q, prec)["eq63"]))
    return errs


def _chk_thm6_eq62_printed(prec, rng):
    errs = []
    for a, b, p, q in ((1, 2, 5, Fraction(1, 5)), (2, 3, 7, Fraction(1, 5))):
        errs.append(abs(thm6_check_ii(a, b, p, q, prec)["eq62"]))
    return errs


def _chk_hyperq_eq5960(prec, rng):
    errs = []
    for a, q, z in (
        (Fraction(3, 10), Fraction(1, 5), Fraction(1, 2)),
        (Fraction(-2, 5), Fraction(3, 20), Fraction(7, 10)),
        (2, Fraction(1, 10), Fraction(-3, 10)),
    ):
        errs.append(abs(psi_small(a, q, z, prec) - psi_small_product(a, q, z, prec)))
    errs.append(
        abs(
            phi21(
                Phi21Params(Fraction(2, 5), Fraction(3, 10), Fraction(3, 10), Fraction(1, 10), Fraction(1, 2)),
                prec,
            )
            - psi_small_product(Fraction(2, 5), Fraction(1, 10), Fraction(1, 2), prec)
        )
    )
    return errs


def _chk_hyperq_eq64(prec, rng):
    errs = []
    for a, b, c, q in (
        (Fraction(4, 5), Fraction(9, 10), Fraction(3, 10), Fraction(1, 10)),
        (Fraction(1, 2), Fraction(7, 10), Fraction(1, 5), Fraction(3, 20)),
    ):
        z = Fraction(c) / (Fraction(a) * Fraction(b))
        lhs = phi21(Phi21Params(a, b, c, q, z), prec)
        errs.append(abs(lhs - gauss_product(a, b, c, q, prec)))
    return errs


def _chk_hyperq_eq64_printed(prec, rng):
    a, b, c, q = Fraction(1, 5), Fraction(3, 10), Fraction(7, 10), Fraction(1, 10)
    z = Fraction(a) * Fraction(b) / Fraction(c)
    lhs = phi21(Phi21Params(a, b, c, q, z), prec)
    return [abs(lhs - gauss_product(a, b, c, q, prec))]


def _chk_thm7_eq66(prec, rng):
    errs = []
    for m1, m2, p, x in ((0, 1, 3, 1), (1, 2, 2, 2), (0, 2, 5, 1)):
        ctx = prec.context()
        qv = ctx.exp(-ctx.mpf(x))
        val = rq(
            RQParams(Fraction((2 * m1 + 1) * p, 2), Fraction((2 * m2 + 1) * p, 2), p),
            qv,
            prec,
        )
        errs.append(abs(val - (-1) ** (m1 - m2)))
    return errs


def _chk_thm7_eq66_printed(prec, rng):
    ctx = prec.context()
    qv = ctx.exp(-ctx.mpf(1))
    val = rq(RQParams(Fraction(3, 2), Fraction(9, 2), 3), qv, prec)
    return [abs(val - 1)]


def _chk_thm7_eq67(prec, rng):
    # Both bilateral sums vanish identically at eps = 0, so the value is
    # checked as a limit.  With eps = 10^(-2 digits/5) the residual is
    # bounded by the larger of the Taylor term O(eps^2) and the cancellation
    # noise of the vanishing sums, 10^(-workdps)/eps; both shrink by more
    # than 10^10 per 20 extra digits, preserving the escalation property.
    errs = []
    ctx = prec.context()
    eps = Fraction(1, 10 ** ((2 * prec.digits) // 5))
    for m1, m2, p in ((1, 2, 3), (2, 1, 2)):
        qv = cv(ctx, Fraction(1, 5))
        val = rq(RQParams(2 * m1 * p + eps, 2 * m2 * p + eps, p), qv, prec)
        errs.append(abs(val - 1))
    return errs


def _chk_thm7_eq68(prec, rng):
    errs = []
    ctx = prec.context()
    qv = cv(ctx, Fraction(1, 5))
    for _ in range(2):
        p = _frac(rng, 2, 5)
        a = _frac(rng, 0, p)
        b = _frac(rng, 0, p)
        errs.append(
            abs(rq(RQParams(a, b, p), qv, prec) * rq(RQParams(b, a, p), qv, prec) - 1)
        )
    return errs


def _chk_thm8_eq6970(prec, rng):
    errs = []
    ctx = prec.context()
    i = ctx.mpc(0, 1)
    pi = ctx.pi
    for m, p, r in ((0, 2, 1), (1, 2, 1), (0, 1, 4)):
        rr_ = ctx.sqrt(cv(ctx, r))
        qv = ctx.exp(-pi * rr_)
        a = -m * p + i / rr_
        b = cv(ctx, Fraction(p, 2)) - m * p + i / rr_
        val = rq(RQParams(a, b, p), qv, prec)
        k = singular_modulus(Fraction(p * p * r, 4), prec)
        errs.append(abs(val - i * ctx.sqrt(k)))
    # same statement in proof variables at a generic nome
    q0 = cv(ctx, Fraction(3, 10))
    k0 = modulus_from_nome(q0, prec).k
    for m in (0, 1):
        p = 2
        c = i * pi / ctx.log(q0)
        A = -(2 * m + c) * p / 2
        B = -(2 * m + c - 1) * p / 2
        val = rq(RQParams(A, B, p), qpow(ctx, q0, Fraction(2, p)), prec)
        errs.append(abs(val - i * ctx.sqrt(k0)))
    return errs


def _chk_thm8_eq69_printed(prec, rng):
    errs = []
    ctx = prec.context()
    i = ctx.mpc(0, 1)
    for m, p, r in ((0, 2, 1), (1, 2, 1)):
        rr_ = ctx.sqrt(cv(ctx, r))
        qv = ctx.exp(-ctx.pi * rr_)
        a = -m * p + i / rr_
        b = cv(ctx, Fraction(p, 2)) - m * p + i / rr_
        val = rq(RQParams(a, b, p), qv, prec)
        k = singular_modulus(Fraction(p * p * r, 4), prec)
        errs.append(abs(val - (-i) ** m * ctx.sqrt(k)))
    return errs


def _chk_thm8_eq71(prec, rng):
    errs = []
    ctx = prec.context()
    i = ctx.mpc(0, 1)
    tgt = qpow(ctx, ctx.mpf(2), Fraction(-1, 4))
    for p in (2, 4):
        for m in (0, 1):
            a = -cv(ctx, Fraction(p, 2)) * (2 * m + i)
            b = -cv(ctx, Fraction(p, 2)) * (2 * m + i - 1)
            val = rq(RQParams(a, b, p), ctx.exp(-2 * ctx.pi / p), prec)
            errs.append(abs(val + i * tgt))
    return errs


def _chk_thm8_eq71_printed(prec, rng):
    ctx = prec.context()
    i = ctx.mpc(0, 1)
    p, m = 2, 0
    a = -cv(ctx, Fraction(p, 2)) * (2 * m + i)
    b = -cv(ctx, Fraction(p, 2)) * (2 * m + i - 1)
    val = rq(RQParams(a, b, p), ctx.exp(-2 * ctx.pi / p), prec)
    return [abs(val - qpow(ctx, ctx.mpf(2), Fraction(-1, 4)))]


def _chk_thm8_eq72(prec, rng):
    errs = []
    ctx = prec.context()
    i = ctx.mpc(0, 1)
    rt2 = ctx.sqrt(2)
    tgt = ctx.sqrt(rt2 - 1)
    for p in (2, 3):
        for m in (0, 1):
            qv = ctx.exp(-2 * ctx.pi * rt2 / p)
            a = -m * p + i * p / (2 * rt2)
            b = cv(ctx, Fraction(p, 2)) - m * p + i * p / (2 * rt2)
            val = rq(RQParams(a, b, p), qv, prec)
            errs.append(abs(val - i * tgt))
    return errs


def _chk_thm8_eq72_printed(prec, rng):
    errs = []
    ctx = prec.context()
    i = ctx.mpc(0, 1)
    rt2 = ctx.sqrt(2)
    tgt = ctx.sqrt(rt2 - 1)
    for m in (0, 1):
        p = 2
        a = -(rt2 - 4 * m * i) * p * i / 4
        b = -(2 - i * rt2 - 4 * m) * p / 4
        val = rq(RQParams(a, b, p), ctx.exp(-ctx.pi * rt2 / p), prec)
        errs.append(abs(val - (-i) ** m * tgt))
    return errs


def _chk_cor_eq73(prec, rng):
    errs = []
    ctx = prec.context()
    for r, ms in ((4, (0, 1)), (12, (0,))):
        qv = ctx.exp(-ctx.pi * ctx.sqrt(cv(ctx, r)))
        k = singular_modulus(Fraction(r, 4), prec)
        for m in ms:
            val = tau0(m + 1, qv, prec) / tau0(Fraction(2 * m + 1, 2), qv, prec)
            errs.append(abs(val - ctx.sqrt(k)))
    return errs


# --------------------------------------------------------------------------
# registry


def register_builtin_checks() -> list:
    """The built-in identity registry, sorted by check id."""
    eq67_tol = lambda digits: -((3 * digits) // 5) + 10  # noqa: E731
    diff_tol = lambda digits: -digits + digits // 3 + 12  # noqa: E731
    checks = [
        IdentityCheck(
            id="lemma1.k",
            description="closed-form modulus satisfies the AGM period ratio",
            formula="K(k')/K(k) = sqrt(r) for k = 8 sqrt(q) w^12/(1+sqrt(1+64 q w^24)), q = exp(-pi sqrt r)",
            covers=("eq8", "eq9"),
            severity=NORMATIVE,
            run=_chk_lemma1_k,
        ),
        IdentityCheck(
            id="lemma1.K",
            description="closed-form complete integral matches the AGM route",
            formula="K = f(-q)^2 pi sqrt(1+sqrt(1+64 q w^24))/(2 sqrt2 w^2) vs pi/(2 agm(1, k'))",
            covers=("eq10",),
            severity=NORMATIVE,
            run=_chk_lemma1_K,
        ),
        IdentityCheck(
            id="prodid.eq5",
            description="sixth power of the even eta-type product in k, k', K",
            formula="prod (1-q^2n)^6 = 2 k k' K^3/(pi^3 sqrt q)",
            covers=("eq5",),
            severity=NORMATIVE,
            run=_chk_prodid_eq5,
        ),
        IdentityCheck(
            id="prodid.eq6",
            description="eighth power of the (-q;q) product in k",
            formula="q^(1/3) prod (1+q^n)^8 = 2^(-4/3) (k/(1-k^2))^(2/3)",
            covers=("eq6",),
            severity=NORMATIVE,
            run=_chk_prodid_eq6,
        ),
        IdentityCheck(
            id="prodid.eq7",
            description="eighth power of the (q;q) product in k, k', K",
            formula="prod (1-q^n)^8 = 2^(8/3) pi^-4 q^(-1/3) k^(2/3) k'^(8/3) K^4",
            covers=("eq7",),
            severity=NORMATIVE,
            run=_chk_prodid_eq7,
        ),
        IdentityCheck(
            id="prodid.eq15",
            description="odd product squared in the ascending-descent moduli",
            formula="prod ((1+q^n)/(1+q^2n))^2 = q^(1/12) k11^(1/6) k22^(1/3)/(k21^(1/6) k12^(1/3))",
            covers=("eq15",),
            severity=NORMATIVE,
            run=_chk_prodid_eq15,
        ),
        IdentityCheck(
            id="prodid.intro",
            description="three closed-form product evaluations at r = 2/5 and r = 3",
            formula="prod (1+e^(-n pi sqrt(2/5)))^8, prod (1+e^(-n pi sqrt3))^8, prod (1-e^(-n pi sqrt3))^8",
            covers=("eq5", "eq6", "eq7"),
            severity=NORMATIVE,
            run=_chk_prodid_intro,
        ),
        IdentityCheck(
            id="thm1.eq11",
            description="even-shift bilateral sums in the Landen moduli chain",
            formula="sum q^(n^2+2mn) = 2^(1/6) q^(-m^2) (k11 k22)^(1/3) (k12 k21)^(-1/6) sqrt(K/pi)",
            covers=("eq11",),
            severity=NORMATIVE,
            run=_chk_thm1_eq11,
        ),
        IdentityCheck(
            id="thm1.eq12",
            description="odd-shift bilateral sums in the Landen moduli chain",
            formula="sum q^(n^2+(2m+1)n) = 2^(5/6) q^(-(2m+1)^2/4) (k11 k12 k21)^(1/6) k22^(-1/3) sqrt(K/pi)",
            covers=("eq12",),
            severity=NORMATIVE,
            run=_chk_thm1_eq12,
        ),
        IdentityCheck(
            id="thm1.eq1314",
            description="bilateral sum as a triple product; even shifts via the odd product",
            formula="S_z = prod (1-q^(2n+2))(1+q^(2n+1+z))(1+q^(2n+1-z)); S_2m reduction",
            covers=("eq13", "eq14"),
            severity=NORMATIVE,
            run=_chk_thm1_eq1314,
        ),
        IdentityCheck(
            id="thm1.app",
            description="two-sided series combination equals an odd-shift bilateral sum",
            formula="M(q^2a, q^2) + q^-2a M(q^-2a, q^2) = sum q^(k^2+(2a+1)k)",
            covers=("eq11", "eq12"),
            severity=NORMATIVE,
            run=_chk_thm1_app,
        ),
        IdentityCheck(
            id="cf.eq1617",
            description="alternating-pattern fraction equals its defining series",
            formula="M(c,q) series = the 1/(1-) cq/(1+) c(q-q^2)/(1-) ... fraction",
            covers=("eq16", "eq17"),
            severity=NORMATIVE,
            run=_chk_cf_eq1617,
        ),
        IdentityCheck(
            id="cf.note",
            description="odd-exponent evaluation of the series in partial sums of q^(k^2)",
            formula="q^((a+1)^2/4) M(q^a, q^2) = 1/2 - sum_{k<=(a-1)/2} q^(k^2) + theta3(0,q)/2",
            covers=("eq16", "eq17"),
            severity=NORMATIVE,
            run=_chk_cf_note,
        ),
        IdentityCheck(
            id="cf.note-sign",
            description="literal sign reading of the odd-exponent evaluation (documented slip)",
            formula="q^((a+1)^2/4) M(-q^a, q^2) vs the same right side: the prose says c = -q^a, the fraction uses c = +q^a",
            covers=("eq16", "eq17"),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_cf_note_sign,
        ),
        IdentityCheck(
            id="lemma2.eq18",
            description="hyperbolic log-sum equals a log-ratio of products",
            formula="sum cosh(2tk)/(k sinh(pi a k)) = log prod(1-e^(-2n pi a)) - log theta4(it, e^(-a pi))",
            covers=("eq18",),
            severity=NORMATIVE,
            run=_chk_lemma2_eq18,
        ),
        IdentityCheck(
            id="theta.eq19",
            description="series and triple-product routes agree for the fourth theta function",
            formula="theta4(z,q) series = prod (1-q^2n)(1-2 q^(2n-1) cos 2z + q^(4n-2))",
            covers=("eq19",),
            severity=NORMATIVE,
            run=_chk_theta_eq19,
        ),
        IdentityCheck(
            id="theta.def-printed",
            description="cosine-series display missing the factor 2 (documented slip)",
            formula="1 + sum (-1)^n q^(n^2) cos(2nz) vs the triple product; the standard series has 2 sum",
            covers=("eq18", "eq19"),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_theta_def_printed,
        ),
        IdentityCheck(
            id="rr.eq2021",
            description="first quotient fraction equals its product and character-product forms",
            formula="1/(1+ q/(1+ q^2/...)) = (q;q^5)(q^4;q^5)/((q^2;q^5)(q^3;q^5)) = prod (1-q^n)^chi(n)",
            covers=("eq20", "eq21", "eq32"),
            severity=NORMATIVE,
            run=_chk_rr_eq2021,
        ),
        IdentityCheck(
            id="rr.eq21-printed",
            description="prefactor-free chain reading of the first quotient (documented slip)",
            formula="q^(-1/5) (bare fraction) vs the product ratio; the bare fraction already equals the ratio",
            covers=("eq20", "eq21"),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_rr_eq21_printed,
        ),
        IdentityCheck(
            id="rr.eq22",
            description="prefactored first quotient as a ratio of fourth theta values",
            formula="R(e^-x) = e^(-x/5) theta4(3ix/4, e^(-5x/2))/theta4(ix/4, e^(-5x/2))",
            covers=("eq22",),
            severity=NORMATIVE,
            run=_chk_rr_eq22,
        ),
        IdentityCheck(
            id="rr.eq2324",
            description="exponential-sum and cosh/sinh forms of the first quotient",
            formula="R(e^-x) = exp(-x/5 - sum ...) and the cosh/sinh rewriting",
            covers=("eq23", "eq24"),
            severity=NORMATIVE,
            run=_chk_rr_eq2324,
        ),
        IdentityCheck(
            id="h.eq2526",
            description="octic quotient fraction equals its exponential-sum and product forms",
            formula="H(e^-x) = exp(-x/2 - sum (e^7nx - e^5nx - e^3nx + e^nx)/(n(e^8nx - 1)))",
            covers=("eq25", "eq26"),
            severity=NORMATIVE,
            run=_chk_h_eq2526,
        ),
        IdentityCheck(
            id="h.eq27",
            description="octic quotient as a theta ratio (corrected denominator argument ix/2)",
            formula="H(e^-x) = e^(-x/2) theta4(3ix/2, e^(-4x))/theta4(ix/2, e^(-4x))",
            covers=("eq27",),
            severity=NORMATIVE,
            run=_chk_h_eq27,
        ),
        IdentityCheck(
            id="h.eq27-printed",
            description="theta-ratio display with denominator argument ix/4 (documented slip)",
            formula="e^(-x/2) theta4(3ix/2, e^(-4x))/theta4(ix/4, e^(-4x)) vs the fraction",
            covers=("eq27",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_h_eq27_printed,
        ),
        IdentityCheck(
            id="obs1.algebraic",
            description="exponent-weighted products are algebraic (recognized after a power map)",
            formula="minpoly of v, v^4, v^4, v^12 for (a,p) = (1,4),(1,5),(2,5),(1,6) at q = exp(-pi)",
            covers=("eq28", "eq29"),
            severity=NORMATIVE,
            run=_chk_obs1_algebraic,
            min_digits=RECOGNITION_MIN_DIGITS,
        ),
        IdentityCheck(
            id="obs1.deg8-printed",
            description="raw values of three pairs exceed every degree-8 height-1e8 polynomial",
            formula="find_minpoly(v, 8) returns not-found for (1,5),(2,5),(1,6): their true degrees exceed 8",
            covers=("eq29",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_obs1_deg8_printed,
            min_digits=RECOGNITION_MIN_DIGITS,
        ),
        IdentityCheck(
            id="rq.fourway",
            description="product, theta-ratio, exponential-sum and character routes agree",
            formula="R(a,b,p;q) via four independent evaluation routes",
            covers=("eq30", "eq31", "eq33", "eq34", "eq35", "eq36"),
            severity=NORMATIVE,
            run=_chk_rq_fourway,
        ),
        IdentityCheck(
            id="thm3.eq3334",
            description="theta and exponential-sum routes at random rational parameters",
            formula="R(a,b,p;e^-x) = exp(...) theta4((p-2a)ix/4, e^(-px/2))/theta4((p-2b)ix/4, ...) = exp-sum form",
            covers=("eq33", "eq34"),
            severity=NORMATIVE,
            run=_chk_thm3_eq3334,
        ),
        IdentityCheck(
            id="thm4.eq3536",
            description="quotient of products equals the character-exponent product",
            formula="R*(a,b,p;q) = prod (1-q^n)^X2(n) at random integer triples",
            covers=("eq35", "eq36"),
            severity=NORMATIVE,
            run=_chk_thm4_eq3536,
        ),
        IdentityCheck(
            id="agile.eq37",
            description="product and signed bilateral-sum routes agree for the basic product",
            formula="[a,p;q] = (1/f(-q^p)) sum (-1)^n q^(p n^2/2 + (p-2a)n/2)",
            covers=("eq28", "eq37"),
            severity=NORMATIVE,
            run=_chk_agile_eq37,
        ),
        IdentityCheck(
            id="cf.eq383940",
            description="two-sided series combinations build the quotient and the first fraction",
            formula="M(-q^-a,q^p) - q^a M(-q^a,q^p) = f(-q^p)[a,p;q]; ratios give R* and the first quotient",
            covers=("eq38", "eq39", "eq40"),
            severity=NORMATIVE,
            run=_chk_cf_eq383940,
        ),
        IdentityCheck(
            id="app3.eq4142",
            description="integer-shift and reflection invariance of the normalized product ratio",
            formula="tau0(a,q) = tau0(n+a,q) = tau0(n-a,q)",
            covers=("eq41", "eq42"),
            severity=NORMATIVE,
            run=_chk_app3_eq4142,
        ),
        IdentityCheck(
            id="app3.eq43",
            description="vanishing derivative at integer arguments",
            formula="d tau0/da = 0 at a in Z (central difference at h = 10^(-digits/3))",
            covers=("eq43",),
            severity=NORMATIVE,
            run=_chk_app3_eq43,
            tol_exponent=diff_tol,
        ),
        IdentityCheck(
            id="app3.eq4445",
            description="period-shift and reflection invariance of the general ratio",
            formula="tau*(a,p;q) = tau*(np+a,p;q) = tau*(np-a,p;q)",
            covers=("eq44", "eq45"),
            severity=NORMATIVE,
            run=_chk_app3_eq4445,
        ),
        IdentityCheck(
            id="psistar.eq4647",
            description="bilateral sum equals both product forms",
            formula="psi*(a,p;q) = f(-q^p)(-q^a;q^p)(-q^(p-a);q^p) = f(-q^p)[2a,2p;q]/[a,p;q]",
            covers=("eq46", "eq47"),
            severity=NORMATIVE,
            run=_chk_psistar_eq4647,
        ),
        IdentityCheck(
            id="thm5.eq4849",
            description="equality of the general ratio at linked arguments",
            formula="tau*(a,|a+-b|/n;q) = tau*(b,|a+-b|/n;q); tau*(1/a, gcd/(ab)) = tau*(1/b, gcd/(ab))",
            covers=("eq48", "eq49", "eq50"),
            severity=NORMATIVE,
            run=_chk_thm5_eq4849,
        ),
        IdentityCheck(
            id="deriv.eq5153",
            description="the three classical fractions equal their exponent-weighted products",
            formula="R1, R2, R3 fractions vs q^e (q^a;q^p).../(...) products",
            covers=("eq51", "eq52", "eq53"),
            severity=NORMATIVE,
            run=_chk_deriv_eq5153,
        ),
        IdentityCheck(
            id="deriv.eq53-printed",
            description="third-fraction display with denominator 1+q^7 in third place (documented slip)",
            formula="q^(1/2)/((1+q)+) q^2/((1+q^3)+) q^4/((1+q^7)+) ... vs the product; pattern wants 1+q^5",
            covers=("eq53",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_deriv_eq53_printed,
        ),
        IdentityCheck(
            id="deriv.eq54",
            description="normalized derivatives of the three fractions are algebraic of degree <= 8",
            formula="R'(q) q pi^2/K^2 at q = exp(-pi) has an integer minimal polynomial, degree <= 8",
            covers=("eq54", "eq55"),
            severity=NORMATIVE,
            run=_chk_deriv_eq54,
            min_digits=RECOGNITION_MIN_DIGITS,
        ),
        IdentityCheck(
            id="deriv.eq56",
            description="normalized derivative of the exponent-weighted product is algebraic",
            formula="d/dq[q^(p/12-a/2+a^2/(2p))[a,p;q]] q pi^2/K^2 at (1,4), q = exp(-pi) is -2^(-15/8)",
            covers=("eq56",),
            severity=NORMATIVE,
            run=_chk_deriv_eq56,
            min_digits=RECOGNITION_MIN_DIGITS,
        ),
        IdentityCheck(
            id="deriv.eq57",
            description="closed forms of two derivative values at q = exp(-pi)",
            formula="dR(1,2,4)/dq = e^pi Gamma(1/4)^4/(64 2^(5/8) pi^3); dR(1,2,5)/dq = e^pi Gamma(1/4)^4/(16 pi^3) rho",
            covers=("eq55", "eq57"),
            severity=NORMATIVE,
            run=_chk_deriv_eq57,
        ),
        IdentityCheck(
            id="prop.eq58",
            description="quartic-nome fraction equals the rewritten product quotient",
            formula="P(q^A,q^B,q^(A+B)) = (q^a;q^p)(q^(2p-a);q^p)/[b,p;q], a = 2A+3p/4, b = 2B+p/4, p = 4(A+B)",
            covers=("eq58",),
            severity=NORMATIVE,
            run=_chk_prop_eq58,
        ),
        IdentityCheck(
            id="thm6.eq61",
            description="series-times-quotient identity at equal parameters",
            formula="psi(q^a,q^p,q^(p-a)) R*(a,b,p;q) = P(q^A,q^B,q^(A+B)) at A = B",
            covers=("eq59", "eq60", "eq61"),
            severity=NORMATIVE,
            run=_chk_thm6_eq61,
        ),
        IdentityCheck(
            id="thm6.eq61-general",
            description="the same identity at A != B (holds only for A = B; documented)",
            formula="the A != B residual is nonzero: (q^p;Q) != (q^(2p-a);Q) unless a = p",
            covers=("eq61",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_thm6_eq61_general,
        ),
        IdentityCheck(
            id="thm6.eq62-printed",
            description="theta-ratio display with lower parameter q^b (documented slip)",
            formula="phi21[q^a,q^b;q^b;q^p,q^((p-a-b)/2)] vs theta4 ratio; the lower parameter should be q^((a+b+p)/2)",
            covers=("eq62",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_thm6_eq62_printed,
        ),
        IdentityCheck(
            id="thm6.eq63",
            description="basic hypergeometric sum as a ratio of fourth theta values",
            formula="phi21[a,b;sqrt(abc);c;sqrt(c/(ab))] = theta4((ln a - ln b)i/4, sqrt c)/theta4((ln a + ln b)i/4, sqrt c)",
            covers=("eq63",),
            severity=NORMATIVE,
            run=_chk_thm6_eq63,
        ),
        IdentityCheck(
            id="thm6.eq65",
            description="basic hypergeometric evaluation of the quotient",
            formula="phi21[q^(b-a),q^(a+b-p);q^b;q^p,q^(p-b)] = R*(a,b,p;q)",
            covers=("eq64", "eq65"),
            severity=NORMATIVE,
            run=_chk_thm6_eq65,
        ),
        IdentityCheck(
            id="hyperq.eq5960",
            description="series with one upper parameter equals its product form",
            formula="sum (a;q)_n/(q;q)_n z^n = (az;q)/(z;q); degenerate phi21 consistency",
            covers=("eq59", "eq60"),
            severity=NORMATIVE,
            run=_chk_hyperq_eq5960,
        ),
        IdentityCheck(
            id="hyperq.eq64",
            description="terminating-free summation at argument c/(ab)",
            formula="phi21[a,b;c;q,c/(ab)] = (c/a;q)(c/b;q)/((c;q)(c/(ab);q))",
            covers=("eq64",),
            severity=NORMATIVE,
            run=_chk_hyperq_eq64,
        ),
        IdentityCheck(
            id="hyperq.eq64-printed",
            description="summation display with argument ab/c (documented slip)",
            formula="phi21[a,b;c;q,ab/c] vs the same product right side",
            covers=("eq64",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_hyperq_eq64_printed,
        ),
        IdentityCheck(
            id="thm7.eq66",
            description="half-odd-multiple arguments give a sign, not always 1 (corrected)",
            formula="R((2m1+1)p/2, (2m2+1)p/2, p; q) = (-1)^(m1-m2)",
            covers=("eq66",),
            severity=NORMATIVE,
            run=_chk_thm7_eq66,
        ),
        IdentityCheck(
            id="thm7.eq66-printed",
            description="printed value 1 at odd m1-m2 (documented: true value is the sign)",
            formula="R(3/2, 9/2, 3; q) vs 1; the true value is -1",
            covers=("eq66",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_thm7_eq66_printed,
        ),
        IdentityCheck(
            id="thm7.eq67",
            description="even-multiple arguments give 1 (checked as a limit; both factors vanish there)",
            formula="R(2 m1 p + eps, 2 m2 p + eps, p; q) -> 1 as eps -> 0",
            covers=("eq67",),
            severity=NORMATIVE,
            run=_chk_thm7_eq67,
            tol_exponent=eq67_tol,
        ),
        IdentityCheck(
            id="thm7.eq68",
            description="swap reciprocity of the quotient",
            formula="R(a,b,p;q) R(b,a,p;q) = 1",
            covers=("eq68",),
            severity=NORMATIVE,
            run=_chk_thm7_eq68,
        ),
        IdentityCheck(
            id="thm8.eq6970",
            description="imaginary-shift evaluation equals +i times a square-root modulus (corrected phase)",
            formula="R(-mp+i/sqrt r, p/2-mp+i/sqrt r, p; e^(-pi sqrt r)) = i k_(p^2 r/4)^(1/2), all m",
            covers=("eq69", "eq70"),
            severity=NORMATIVE,
            run=_chk_thm8_eq6970,
        ),
        IdentityCheck(
            id="thm8.eq69-printed",
            description="printed phase (-i)^m (documented: the true phase is +i for all m)",
            formula="R(...) vs (-i)^m k^(1/2)",
            covers=("eq69",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_thm8_eq69_printed,
        ),
        IdentityCheck(
            id="thm8.eq71",
            description="worked example evaluates to -i 2^(-1/4) for every m and p (corrected phase)",
            formula="R(-p(2m+i)/2, -p(2m+i-1)/2, p; e^(-2pi/p)) = -i 2^(-1/4)",
            covers=("eq71",),
            severity=NORMATIVE,
            run=_chk_thm8_eq71,
        ),
        IdentityCheck(
            id="thm8.eq71-printed",
            description="printed phase (-i)^m at m = 0 (documented: true value is -i 2^(-1/4))",
            formula="R(...) vs 2^(-1/4) at m = 0",
            covers=("eq71",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_thm8_eq71_printed,
        ),
        IdentityCheck(
            id="thm8.eq72",
            description="second worked example at the doubled nome (corrected reading)",
            formula="R(-mp+ip/(2 sqrt2), p/2-mp+ip/(2 sqrt2), p; e^(-2pi sqrt2/p)) = i sqrt(sqrt2-1)",
            covers=("eq72",),
            severity=NORMATIVE,
            run=_chk_thm8_eq72,
        ),
        IdentityCheck(
            id="thm8.eq72-printed",
            description="second worked example exactly as displayed (documented: matches no clean value)",
            formula="R(-(sqrt2-4mi)pi/4, -(2-i sqrt2-4m)p/4, p; e^(-pi sqrt2/p)) vs (-i)^m sqrt(sqrt2-1)",
            covers=("eq72",),
            severity=DISCREPANCY_ALLOWED,
            run=_chk_thm8_eq72_printed,
        ),
        IdentityCheck(
            id="cor.eq73",
            description="ratio of the normalized product ratio at successive half-integers",
            formula="tau0(m+1,q)/tau0(m+1/2,q) = k_(r/4)^(1/2) at q = e^(-pi sqrt r)",
            covers=("eq73",),
            severity=NORMATIVE,
            run=_chk_cor_eq73,
        ),
    ]
    checks.sort(key=lambda c: c.id)
    ids = [c.id for c in checks]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate check ids in the registry")
    return checks


# --------------------------------------------------------------------------
# runner


def _run_one(check: IdentityCheck, digits: int, seed: int, prec: PrecisionSpec) -> CheckOutcome:
    start = time.perf_counter()
    if digits < check.min_digits:
        return CheckOutcome(check.id, "skip", "0", 0, time.perf_counter() - start)
    rng = random.Random(f"{seed}:{check.id}")
    errs = check.run(prec, rng)
    worst = mpmath.mpf(0)
    for e in errs:
        ev = mpmath.mpf(abs(e))
        if ev > worst:
            worst = ev
    floor = mpmath.mpf(10) ** (-(digits + prec.guard))
    if worst < floor:
        worst = floor
    tol = mpmath.mpf(10) ** check.tolerance_exponent(digits)
    if worst < tol:
        status = "pass"
    elif check.severity == DISCREPANCY_ALLOWED:
        status = "discrepancy"
    else:
        status = "fail"
    return CheckOutcome(
        check.id,
        status,
        mpmath.nstr(worst, 3),
        len(errs),
        time.perf_counter() - start,
    )


def run_suite(
    selector: str = "all",
    digits: int = 60,
    seed: int = 42,
    parallelism: int = 1,
) -> Report:
    """Run every registered check whose id matches ``selector``.

    ``selector`` is either "all" or a prefix of check ids ("thm7",
    "lemma1.K").  Raises UnknownSelector when nothing matches.  The returned
    Report serializes byte-identically for identical inputs.
    """
    checks = register_builtin_checks()
    if selector == "all":
        selected = checks
    else:
        selected = [c for c in checks if c.id == selector or c.id.startswith(selector)]
    if not selected:
        known = ", ".join(sorted({c.id.split(".")[0] for c in checks}))
        raise UnknownSelector(
            f"selector {selector!r} matches no check; known prefixes: {known}"
        )
    prec = PrecisionSpec(digits)
    if parallelism > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            outcomes = list(
                pool.map(lambda c: _run_one(c, digits, seed, prec), selected)
            )
    else:
        outcomes = [_run_one(c, digits, seed, prec) for c in selected]
    outcomes.sort(key=lambda o: o.id)
    return Report(suite=selector, digits=digits, seed=seed, checks=tuple(outcomes))
