"""Precision plumbing shared by every other module.

Design rule: precision is always an explicit ``PrecisionSpec`` argument and
every public entry point builds its own fresh mpmath context at the working
precision.  Nothing here reads or writes the process-global ``mpmath.mp``
context, so results are reproducible under threads and concurrent suites.
Returned values are ordinary ``mpf``/``mpc`` instances, which are immutable
and safe to pass between contexts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from mpmath.ctx_mp import MPContext

# Hard budget on series/product terms before we declare divergence.
MAX_TERMS = 10**6


class NumericsError(Exception):
    """Base class for every error this package raises deliberately."""


class NonConvergence(NumericsError):
    """A series, product, or continued fraction failed to settle in budget."""


class DomainError(NumericsError):
    """An argument lies outside the documented domain of the operation."""


class ZeroFactor(NumericsError):
    """An infinite product hit a factor that is exactly zero.

    ``prod_infinite`` does not raise this by default (it returns an exact 0);
    the class exists so callers that need to distinguish a genuine zero from
    underflow can request strict behaviour.
    """


class VerificationError(NumericsError):
    """An internal consistency assertion failed; indicates a bug, not bad input."""


class InsufficientPrecision(NumericsError):
    """The requested operation needs more working digits than were supplied."""


class CrossCheckFailure(NumericsError):
    """Two independent evaluation routes disagreed beyond tolerance."""


class UnknownSelector(NumericsError):
    """A name (function selector, tail policy, format) was not recognized."""


@dataclass(frozen=True)
class PrecisionSpec:
    """Target accuracy in decimal digits plus guard digits for roundoff.

    ``digits`` is the accuracy promised to the caller; ``guard`` extra digits
    absorb cancellation (theta quotients at the evaluation points used here
    lose a handful of digits).  Working precision is ``digits + guard``.
    """

    digits: int
    guard: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.digits, int) or self.digits < 10:
            raise DomainError(f"digits must be an integer >= 10, got {self.digits!r}")
        if self.guard is None:
            object.__setattr__(self, "guard", max(15, self.digits // 10))
        elif not isinstance(self.guard, int) or self.guard < 0:
            raise DomainError(f"guard must be a non-negative integer, got {self.guard!r}")

    @property
    def workdps(self) -> int:
        return self.digits + self.guard

    def context(self) -> MPContext:
        """A fresh context at working precision. Costs ~0.2 ms; never shared."""
        ctx = MPContext()
        ctx.dps = self.workdps
        return ctx

    def target_eps(self, ctx: MPContext):
        """10^(-digits): the accuracy promised to the caller."""
        return ctx.mpf(10) ** (-self.digits)

    def work_eps(self, ctx: MPContext):
        """Cutoff used internally; two digits above working roundoff."""
        return ctx.mpf(10) ** (-(self.workdps - 2))

    def bumped(self, extra: int) -> "PrecisionSpec":
        """Same spec with `extra` more target digits (used by cross-checks)."""
        return PrecisionSpec(self.digits + extra, self.guard)


def cv(ctx: MPContext, x):
    """Convert ints, floats, Fractions, strings, mpf/mpc into ctx numbers.

    Fractions are divided exactly at working precision rather than going
    through float, so denominators like 1/3 keep full accuracy.
    """
    if isinstance(x, Fraction):
        return ctx.mpf(x.numerator) / ctx.mpf(x.denominator)
    return ctx.convert(x)


def gaussian_cutoff(total_digits: int, log_q_abs: float, imag_shift: float = 0.0) -> int:
    """Smallest N with |q|^(N^2) * e^(2*N*t) < 10^(-total_digits).

    ``log_q_abs`` is |ln|q|| (positive), ``imag_shift`` is t = |Im z| for
    shifted theta-type terms q^(n^2) e^(2 i n z).  Solves the quadratic
    n^2 L - 2 n t > D ln10 and pads by 2.
    """
    if log_q_abs <= 0 or math.isinf(log_q_abs):
        return 2  # q == 0 (or degenerate); only the n = 0 term survives
    d = total_digits * math.log(10)
    t = max(0.0, imag_shift)
    n = (t + math.sqrt(t * t + log_q_abs * d)) / log_q_abs
    return int(math.ceil(n)) + 2


def sum_series(
    term_fn: Callable[[int], object],
    prec: PrecisionSpec,
    *,
    tail_policy: str = "geometric-ratio",
    bilateral: bool = False,
    q_abs=None,
    start: int = 0,
    max_terms: int = MAX_TERMS,
):
    """Sum a series whose tail behaviour the caller vouches for.

    tail_policy "geometric-ratio": add terms until three consecutive ones are
    below the working epsilon relative to the running sum.  Three in a row
    because q-series frequently have isolated zero coefficients.

    tail_policy "gaussian-exponent": the caller passes q_abs = |q| for terms
    bounded by |q|^(n^2); the truncation index is computed up front and the
    partial sum is exact to working precision by construction.

    With ``bilateral=True`` the index runs over all integers (n = 0, 1, -1,
    2, -2, ...); ``start`` is ignored in that case.
    """
    ctx = prec.context()
    eps = prec.work_eps(ctx)

    if tail_policy == "gaussian-exponent":
        if q_abs is None:
            raise UnknownSelector("gaussian-exponent tail needs q_abs")
        qa = abs(cv(ctx, q_abs))
        if qa >= 1:
            raise DomainError(f"gaussian-exponent tail needs |q| < 1, got {qa}")
        logL = float(-ctx.log(qa)) if qa > 0 else math.inf
        n_cut = gaussian_cutoff(prec.workdps, logL)
        if (2 * n_cut + 1 if bilateral else n_cut + 1) > max_terms:
            raise NonConvergence(f"gaussian cutoff {n_cut} exceeds budget {max_terms}")
        indices = range(-n_cut, n_cut + 1) if bilateral else range(start, start + n_cut + 1)
        total = ctx.mpf(0)
        for n in indices:
            total = total + cv(ctx, term_fn(n))
        return total

    if tail_policy != "geometric-ratio":
        raise UnknownSelector(f"unknown tail policy {tail_policy!r}")

    def run(indices) -> tuple:
        # Returns (partial_sum, settled?) for one direction of the index range.
        total = ctx.mpf(0)
        small = 0
        count = 0
        for n in indices:
            t = cv(ctx, term_fn(n))
            total = total + t
            count += 1
            if abs(t) <= eps * max(ctx.mpf(1), abs(total)):
                small += 1
                if small >= 3:
                    return total, True
            else:
                small = 0
            if count >= max_terms:
                return total, False
        return total, True  # finite index range exhausted: exact sum

    if bilateral:
        up, ok_up = run(iter(range(0, max_terms + 4)))
        down, ok_down = run(iter(range(-1, -(max_terms + 4), -1)))
        if not (ok_up and ok_down):
            raise NonConvergence("bilateral series did not settle within term budget")
        return up + down

    total, ok = run(iter(range(start, start + max_terms + 4)))
    if not ok:
        raise NonConvergence("series did not settle within term budget")
    return total


def prod_infinite(
    factor_fn: Callable[[int], object],
    prec: PrecisionSpec,
    *,
    start: int = 1,
    max_terms: int = MAX_TERMS,
    strict_zero: bool = False,
):
    """Infinite product by direct multiplication (documented choice).

    Direct multiplication rather than summed logarithms: every factor used in
    this package is within a geometrically shrinking distance of 1, so the
    relative error after N factors is bounded by N ulps and the log branch
    bookkeeping for complex factors is avoided.  Stops after three consecutive
    factors within working epsilon of 1.

    A factor that is exactly zero makes the product exactly zero; that value
    is returned immediately (set ``strict_zero=True`` to raise ZeroFactor
    instead, when an exact zero would silently poison a quotient).
    """
    ctx = prec.context()
    eps = prec.work_eps(ctx)
    total = ctx.mpf(1)
    small = 0
    n = start
    for _ in range(max_terms):
        f = cv(ctx, factor_fn(n))
        if f == 0:
            if strict_zero:
                raise ZeroFactor(f"factor at index {n} is exactly zero")
            return total * 0  # exact zero, preserves real/complex type
        total = total * f
        if abs(f - 1) <= eps:
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
        n += 1
    raise NonConvergence(f"product did not settle within {max_terms} factors")


def agm(a, b, prec: PrecisionSpec):
    """Arithmetic-geometric mean of two positive reals."""
    ctx = prec.context()
    a = cv(ctx, a)
    b = cv(ctx, b)
    if ctx.im(a) != 0 or ctx.im(b) != 0 or a <= 0 or b <= 0:
        raise DomainError(f"agm needs positive real arguments, got {a}, {b}")
    return ctx.agm(a, b)


def gamma(x, prec: PrecisionSpec):
    """Euler Gamma for positive real x."""
    ctx = prec.context()
    x = cv(ctx, x)
    if ctx.im(x) != 0 or x <= 0:
        raise DomainError(f"gamma needs a positive real argument, got {x}")
    return ctx.gamma(x)
