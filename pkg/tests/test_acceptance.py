"""Acceptance criteria: ten end-to-end checks at their stated tolerances.

Each test prints exactly one verdict line, ``ACCEPTANCE n: PASS (...)`` or
``ACCEPTANCE n: FAIL (...)``, then asserts.  Criteria whose stated reading
the mathematics does not support fail here honestly, with the measured
values in the verdict line; the library's own suite carries the corrected
readings separately.

Run with ``-s`` (or read the captured output of failures) to see the lines.
"""

import random
import time
from fractions import Fraction

import mpmath

from qelliptic.algrec import NOT_FOUND, find_minpoly, verify_root
from qelliptic.elliptic import K_of_k, modulus_from_nome, nome_from_r
from qelliptic.numerics import PrecisionSpec, cv, gamma
from qelliptic.qfunctions import (
    INF,
    AgileParams,
    agile,
    euler_f,
    pochhammer,
    qpow,
    theta2,
    theta3,
)
from qelliptic.rquantity import RQParams, drq_dq, rq, rq_theta
from qelliptic.cfrac import r1_cf
from qelliptic.verify import (
    DERIV_POLY_125,
    register_builtin_checks,
    run_suite,
)

DERIV_POLY_125 = tuple(DERIV_POLY_125)


def _verdict(n: int, ok: bool, detail: str) -> str:
    line = f"ACCEPTANCE {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    print(line)
    return line


def test_acceptance_1_intro_constants():
    t0 = time.monotonic()
    prec = PrecisionSpec(50)
    ctx = prec.context()
    pi = ctx.pi
    errs = []

    q25 = ctx.exp(-pi * ctx.sqrt(cv(ctx, Fraction(2, 5))))
    plus25 = pochhammer(-q25, q25, INF, prec) ** 8
    closed = (7 + 3 * ctx.sqrt(5)) / 8 * ctx.exp(pi / 3 * ctx.sqrt(cv(ctx, Fraction(2, 5))))
    errs.append(abs(plus25 - closed))

    q3 = ctx.exp(-pi * ctx.sqrt(3))
    plus3 = pochhammer(-q3, q3, INF, prec) ** 8
    closed = ctx.exp(pi / ctx.sqrt(3)) / (
        2 ** cv(ctx, Fraction(2, 3)) * (26 + 15 * ctx.sqrt(3)) ** cv(ctx, Fraction(1, 3))
    )
    errs.append(abs(plus3 - closed))

    minus3 = euler_f(q3, prec) ** 8
    closed = (
        3 * (2 + ctx.sqrt(3)) * ctx.exp(pi / ctx.sqrt(3))
        * gamma(Fraction(1, 3), prec) ** 12 / (1024 * pi**8)
    )
    errs.append(abs(minus3 - closed))

    elapsed = time.monotonic() - t0
    worst = max(errs)
    ok = worst < ctx.mpf(10) ** (-35) and elapsed < 5.0
    line = _verdict(1, ok, f"3 products, max |diff| {mpmath.nstr(worst, 3)}, {elapsed:.2f}s")
    assert ok, line


def test_acceptance_2_modulus_and_integral_vs_agm():
    t0 = time.monotonic()
    prec = PrecisionSpec(100)
    ctx = prec.context()
    errs = []
    for r in (1, 2, 3, 5, Fraction(2, 5)):
        q = nome_from_r(r, prec).q
        mod = modulus_from_nome(q, prec)
        k_theta = theta2(q, prec) ** 2 / theta3(0, q, prec) ** 2
        errs.append(abs(mod.k - k_theta))
        errs.append(abs(mod.K - K_of_k(mod.k, prec)))
    elapsed = time.monotonic() - t0
    worst = max(errs)
    ok = worst < ctx.mpf(10) ** (-90) and elapsed < 10.0
    line = _verdict(2, ok, f"r in {{1,2,3,5,2/5}}, max |diff| {mpmath.nstr(worst, 3)}, {elapsed:.2f}s")
    assert ok, line


def test_acceptance_3_bilateral_sums_closed_forms():
    t0 = time.monotonic()
    prec = PrecisionSpec(60)
    ctx = prec.context()
    by_id = {c.id: c for c in register_builtin_checks()}
    errs = []
    for cid in ("thm1.eq11", "thm1.eq12"):
        check = by_id[cid]
        errs.extend(
            abs(e) for e in check.run(prec, random.Random(f"42:{cid}"))
        )
    elapsed = time.monotonic() - t0
    worst = max(cv(ctx, e) for e in errs)
    ok = worst < ctx.mpf(10) ** (-45) and elapsed < 20.0
    line = _verdict(
        3,
        ok,
        f"{len(errs)} residuals (m-range x r in {{1,2,3}}), max {mpmath.nstr(worst, 3)}, {elapsed:.2f}s",
    )
    assert ok, line


def test_acceptance_4_first_quotient_three_ways():
    t0 = time.monotonic()
    prec = PrecisionSpec(60)
    ctx = prec.context()
    errs = []
    val_2pi = None
    for x in (ctx.pi, 2 * ctx.pi):
        q = ctx.exp(-x)
        via_cf = r1_cf(q, prec)
        via_prod = rq(RQParams(1, 2, 5), q, prec)
        via_theta = rq_theta(1, 2, 5, x, prec)
        errs.extend(
            (
                abs(via_cf - via_prod),
                abs(via_cf - via_theta),
                abs(via_prod - via_theta),
            )
        )
        if x == 2 * ctx.pi:
            val_2pi = via_cf
    elapsed = time.monotonic() - t0
    worst = max(errs)
    anchor = abs(val_2pi - cv(ctx, "0.2840790438"))
    ok = worst < ctx.mpf(10) ** (-45) and anchor < ctx.mpf("5e-10") and elapsed < 10.0
    line = _verdict(
        4,
        ok,
        f"pairwise max {mpmath.nstr(worst, 3)}, value(2pi) = {ctx.nstr(val_2pi, 12)}, {elapsed:.2f}s",
    )
    assert ok, line


def test_acceptance_5_first_derivative_constant():
    t0 = time.monotonic()
    prec = PrecisionSpec(80)
    ctx = prec.context()
    q = ctx.exp(-ctx.pi)
    analytic = drq_dq(RQParams(1, 2, 4), q, prec)
    closed = (
        ctx.exp(ctx.pi) * gamma(Fraction(1, 4), prec) ** 4
        / (64 * 2 ** cv(ctx, Fraction(5, 8)) * ctx.pi**3)
    )
    err_closed = abs(analytic - closed)

    cd_prec = PrecisionSpec(140)
    cctx = cd_prec.context()
    h = cctx.mpf(10) ** (-40)
    qc = cctx.exp(-cctx.pi)
    central = (
        rq(RQParams(1, 2, 4), qc + h, cd_prec) - rq(RQParams(1, 2, 4), qc - h, cd_prec)
    ) / (2 * h)
    err_routes = abs(central - cv(cctx, analytic))

    elapsed = time.monotonic() - t0
    ok = (
        err_closed < ctx.mpf(10) ** (-60)
        and err_routes < cctx.mpf(10) ** (-25)
        and elapsed < 30.0
    )
    line = _verdict(
        5,
        ok,
        f"|analytic-closed| {mpmath.nstr(err_closed, 3)}, "
        f"|analytic-central| {mpmath.nstr(err_routes, 3)}, {elapsed:.2f}s",
    )
    assert ok, line


def test_acceptance_6_octic_root_recognition():
    t0 = time.monotonic()
    prec = PrecisionSpec(120)
    ctx = prec.context()
    q = ctx.exp(-ctx.pi)
    rho = (
        drq_dq(RQParams(1, 2, 5), q, prec)
        * 16 * ctx.pi**3 / (ctx.exp(ctx.pi) * gamma(Fraction(1, 4), prec) ** 4)
    )
    residual = verify_root(DERIV_POLY_125, rho, prec)
    res = find_minpoly(rho, 8, prec=prec)
    found = res is not NOT_FOUND
    coeffs_ok = found and tuple(res.coeffs) == DERIV_POLY_125
    elapsed = time.monotonic() - t0
    ok = residual < ctx.mpf(10) ** (-100) and coeffs_ok and elapsed < 60.0
    line = _verdict(
        6,
        ok,
        f"|P(rho)| {mpmath.nstr(residual, 3)}, recovered "
        f"{tuple(res.coeffs) if found else 'NOT_FOUND'}, {elapsed:.2f}s",
    )
    assert ok, line


def test_acceptance_7_eq71_as_stated():
    # As stated: R(-p(2m+i)/2, -p(2m+i-1)/2, 2; e^(-pi)) should equal
    # (-i)^m 2^(-1/4) for m in {0, 1}.  The measured value is -i 2^(-1/4)
    # for BOTH m, so m = 0 misses its stated target by |1+i| 2^(-1/4)
    # = 2^(1/4).  This is a faithful run of the stated reading; the
    # corrected reading passes in the library suite as thm8.eq71.
    t0 = time.monotonic()
    prec = PrecisionSpec(60)
    ctx = prec.context()
    i = ctx.mpc(0, 1)
    tgt = qpow(ctx, ctx.mpf(2), Fraction(-1, 4))
    q = ctx.exp(-ctx.pi)
    details = []
    errs = []
    for m in (0, 1):
        a = -(2 * m + i)  # -p/2 (2m+i) at p = 2
        b = -(2 * m + i - 1)
        val = rq(RQParams(a, b, 2), q, prec)
        err = abs(val - (-i) ** m * tgt)
        errs.append(err)
        details.append(f"m={m}: |diff| {mpmath.nstr(err, 6)}")
    elapsed = time.monotonic() - t0
    worst = max(errs)
    ok = worst < ctx.mpf(10) ** (-40) and elapsed < 10.0
    line = _verdict(
        7,
        ok,
        "; ".join(details)
        + f"; measured value is -i*2^(-1/4) for both m, {elapsed:.2f}s",
    )
    assert ok, line


def test_acceptance_8_agile_values_recognized():
    # As stated: the normalized Agile value q^(p/12 - a/2 + a^2/(2p)) [a,p;q]
    # at q = e^(-pi) is algebraic of degree <= 8 for all four (a, p) pairs.
    # Only (1,4) is; the (1,5), (2,5), (1,6) values have higher degree
    # (their 4th / 4th / 12th powers are the degree <= 8 algebraics, which
    # is what the library suite's obs1.algebraic check verifies).
    t0 = time.monotonic()
    prec = PrecisionSpec(120)
    ctx = prec.context()

    def value(a, p, pr):
        c = pr.context()
        qv = c.exp(-c.pi)
        e = Fraction(p, 12) - Fraction(a, 2) + Fraction(a * a, 2 * p)
        return c.re(qpow(c, qv, e) * agile(AgileParams(a, p), qv, pr))

    outcomes = []
    all_ok = True
    for a, p in ((1, 5), (2, 5), (1, 4), (1, 6)):
        res = find_minpoly(
            value(a, p, prec),
            8,
            prec=prec,
            recompute=lambda pr, a=a, p=p: value(a, p, pr),
        )
        if res is NOT_FOUND:
            outcomes.append(f"({a},{p}): NOT_FOUND")
            all_ok = False
        elif res.confidence != "verified":
            outcomes.append(f"({a},{p}): degree {res.degree} unverified")
            all_ok = False
        else:
            outcomes.append(f"({a},{p}): degree {res.degree} verified")
    elapsed = time.monotonic() - t0
    ok = all_ok and elapsed < 120.0
    line = _verdict(8, ok, "; ".join(outcomes) + f"; {elapsed:.2f}s")
    assert ok, line


def test_acceptance_9_full_suite_deterministic():
    t0 = time.monotonic()
    rep1 = run_suite("all", digits=60, seed=42, parallelism=4)
    rep2 = run_suite("all", digits=60, seed=42, parallelism=4)
    elapsed = time.monotonic() - t0
    counts = rep1.counts
    named = {c.id: c.status for c in rep1.checks}
    definite = all(
        named.get(cid) in ("pass", "fail", "discrepancy")
        for cid in ("h.eq27-printed", "thm6.eq62-printed")
    )
    identical = rep1.to_json() == rep2.to_json()
    ok = counts["fail"] == 0 and definite and identical and elapsed < 600.0
    line = _verdict(
        9,
        ok,
        f"{len(rep1.checks)} checks: {counts['pass']} pass, {counts['fail']} fail, "
        f"{counts['discrepancy']} discrepancy, {counts['skip']} skip; "
        f"byte-identical={identical}, {elapsed:.2f}s for two runs",
    )
    assert ok, line


def test_acceptance_10_precision_escalation():
    t0 = time.monotonic()
    lo = {c.id: c for c in run_suite("all", digits=40, seed=42, parallelism=4).checks}
    hi = {c.id: c for c in run_suite("all", digits=60, seed=42, parallelism=4).checks}
    elapsed = time.monotonic() - t0
    failures = []
    checked = 0
    for cid, c40 in lo.items():
        if c40.status != "pass":
            continue
        checked += 1
        c60 = hi[cid]
        e40 = mpmath.mpf(c40.max_abs_error)
        e60 = mpmath.mpf(c60.max_abs_error)
        if c60.status != "pass" or e60 > e40 * mpmath.mpf(10) ** (-10):
            failures.append(f"{cid}: {c40.max_abs_error} -> {c60.max_abs_error}")
    ok = not failures and checked > 0
    detail = (
        f"{checked} passing checks all shrink >= 1e10, {elapsed:.2f}s"
        if ok
        else "; ".join(failures)
    )
    line = _verdict(10, ok, detail)
    assert ok, line
