"""Integer-relation recognition: find an integer-coefficient polynomial
annihilating a high-precision real number, by lattice reduction over the
basis (1, x, x^2, ..., x^d).

The reduction is a self-contained LLL over exact rationals (delta = 0.99)
on the classic embedding: identity block next to one column of scaled
powers round(10^P x^i).  A short reduced vector whose polynomial evaluates
to nearly zero at x is a candidate relation; candidates are normalized to
content 1 with positive leading coefficient, ascending powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Sequence

from .numerics import DomainError, InsufficientPrecision, PrecisionSpec, cv


class NotFound:
    """Sentinel result: no relation under the bounds. A finding, not an error."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return "NotFound"


NOT_FOUND = NotFound()


@dataclass(frozen=True)
class MinPolyResult:
    """Normalized integer polynomial with its residual at the input point."""

    coeffs: tuple  # ascending powers, content 1, leading coefficient > 0
    degree: int
    residual: object
    confidence: str  # "verified" | "unverified"

    def as_text(self) -> str:
        """Human form like ``16 - 240*t^2 + 800*t^3 + ... + 625*t^8``."""
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = f"{mag}"
            elif i == 1:
                term = f"{mag}*t" if mag != 1 else "t"
            else:
                term = f"{mag}*t^{i}" if mag != 1 else f"t^{i}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts) if parts else "0"

    def as_json(self) -> list:
        return [int(c) for c in self.coeffs]


def verify_root(coeffs: Sequence[int], x, prec: PrecisionSpec):
    """|sum_i coeffs[i] x^i| by Horner evaluation at working precision."""
    ctx = prec.context()
    xv = cv(ctx, x)
    acc = ctx.mpf(0)
    for c in reversed(list(coeffs)):
        acc = acc * xv + c
    return abs(acc)


def _lll_reduce(rows: list, delta: Fraction) -> list:
    """In-place LLL on integer row vectors; returns the reduced rows.

    Exact-rational Gram-Schmidt bookkeeping (Fractions), textbook swap and
    size-reduction updates.  Dimensions here are small (about a dozen rows),
    so exact arithmetic is affordable and sidesteps any floating drift.
    """
    b = [list(row) for row in rows]
    n = len(b)

    def dot(u, v):
        return sum(int(x) * int(y) for x, y in zip(u, v))

    # Initial Gram-Schmidt: mu[i][j] and squared norms B[i] of the star basis.
    mu = [[Fraction(0)] * n for _ in range(n)]
    B = [Fraction(0)] * n
    star = []  # star basis vectors as Fraction lists
    for i in range(n):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            if B[j] == 0:
                mu[i][j] = Fraction(0)
                continue
            mu[i][j] = sum(Fraction(x) * y for x, y in zip(b[i], star[j])) / B[j]
            v = [vi - mu[i][j] * sj for vi, sj in zip(v, star[j])]
        star.append(v)
        B[i] = sum(vi * vi for vi in v)

    def size_reduce(k: int, l: int) -> None:
        if abs(mu[k][l]) * 2 > 1:
            r = round(mu[k][l])
            b[k] = [x - r * y for x, y in zip(b[k], b[l])]
            for j in range(l):
                mu[k][j] -= r * mu[l][j]
            mu[k][l] -= r

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            for j in range(k - 1):
                mu[k][j], mu[k - 1][j] = mu[k - 1][j], mu[k][j]
            m = mu[k][k - 1]
            b_new = B[k] + m * m * B[k - 1]
            if b_new == 0:
                raise DomainError("degenerate lattice in reduction")
            mu[k][k - 1] = m * B[k - 1] / b_new
            B[k] = B[k - 1] * B[k] / b_new
            B[k - 1] = b_new
            for i in range(k + 1, n):
                t = mu[i][k]
                mu[i][k] = mu[i][k - 1] - m * t
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]
            k = max(1, k - 1)
    return b


def _poly_mod(a: list, b: list) -> list:
    """Remainder of a by b; ascending Fraction coefficients, b nonzero."""
    a = a[:]
    while a and a[-1] == 0:
        a.pop()
    while len(a) >= len(b):
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i in range(len(b)):
            a[shift + i] -= f * b[i]
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def _is_squarefree(coeffs) -> bool:
    """True when gcd(P, P') is constant.  A minimal polynomial is
    irreducible, hence square-free; a candidate with a repeated factor is a
    lattice artifact (for example the square of a lower-degree near-fit,
    whose residual is the square of a rejected one)."""
    p = [Fraction(c) for c in coeffs]
    dp = [Fraction(i * c) for i, c in enumerate(coeffs)][1:]
    while dp and dp[-1] == 0:
        dp.pop()
    a, b = p, dp
    while b:
        a, b = b, _poly_mod(a, b)
    return len(a) <= 1


def _normalize(coeffs: list) -> tuple | None:
    """Trim, divide by content, make the leading coefficient positive."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs or all(c == 0 for c in cs):
        return None
    g = 0
    for c in cs:
        g = gcd(g, abs(c))
    cs = [c // g for c in cs]
    if cs[-1] < 0:
        cs = [-c for c in cs]
    return tuple(cs)


def find_minpoly(
    x,
    max_degree: int,
    height_bound: int = 10**8,
    prec: PrecisionSpec | None = None,
    recompute: Callable[[PrecisionSpec], object] | None = None,
):
    """Search for an integer polynomial of degree <= max_degree, coefficient
    height <= height_bound, vanishing at x.  Returns MinPolyResult or the
    NOT_FOUND sentinel.

    Precondition (enforced): prec.digits >= 10*max_degree + 40, so that a
    genuine relation is separated from lattice noise by many orders of
    magnitude.  Degrees are tried smallest first; the first degree with an
    accepted candidate wins.

    confidence is "verified" only when a ``recompute`` callable is supplied:
    it is invoked with a PrecisionSpec 30 digits higher, and the polynomial's
    residual there must shrink by at least a factor 10^15 (floored at the
    respective working epsilons, so exact zeros verify cleanly).
    """
    if max_degree < 1:
        raise DomainError(f"max_degree must be >= 1, got {max_degree}")
    if prec is None:
        raise DomainError("find_minpoly requires an explicit PrecisionSpec")
    if prec.digits < 10 * max_degree + 40:
        raise InsufficientPrecision(
            f"need digits >= {10 * max_degree + 40} for degree {max_degree}, "
            f"got {prec.digits}"
        )
    ctx = prec.context()
    xv = cv(ctx, x)
    if ctx.im(xv) != 0:
        raise DomainError("recognition is defined for real x")
    xv = ctx.re(xv)

    scale_p = prec.digits - 10
    scale = ctx.mpf(10) ** scale_p
    accept_tol = ctx.mpf(10) ** (-(prec.digits - 15))

    best = None
    for d in range(1, max_degree + 1):
        rows = []
        power = ctx.mpf(1)
        for i in range(d + 1):
            row = [0] * (d + 2)
            row[i] = 1
            row[d + 1] = int(ctx.nint(power * scale))
            rows.append(row)
            power = power * xv
        reduced = _lll_reduce(rows, Fraction(99, 100))
        for row in reduced:
            cs = _normalize(row[: d + 1])
            if cs is None or len(cs) < 2:
                continue  # constant or empty: not a relation
            if max(abs(c) for c in cs) > height_bound:
                continue
            if not _is_squarefree(cs):
                continue
            residual = verify_root(cs, xv, prec)
            if residual < accept_tol:
                if best is None or (len(cs), max(abs(c) for c in cs)) < best[0]:
                    best = ((len(cs), max(abs(c) for c in cs)), cs, residual)
        if best is not None:
            break
    if best is None:
        return NOT_FOUND

    _, cs, residual = best
    confidence = "unverified"
    if recompute is not None:
        high = PrecisionSpec(prec.digits + 30, prec.guard)
        hctx = high.context()
        residual_high = verify_root(cs, recompute(high), high)
        floor_low = ctx.mpf(10) ** (-prec.workdps)
        floor_high = hctx.mpf(10) ** (-high.workdps)
        r_low = max(residual, floor_low)
        r_high = max(residual_high, cv(ctx, floor_high))
        if r_high <= r_low * ctx.mpf(10) ** (-15):
            confidence = "verified"
    return MinPolyResult(
        coeffs=cs,
        degree=len(cs) - 1,
        residual=residual,
        confidence=confidence,
    )
