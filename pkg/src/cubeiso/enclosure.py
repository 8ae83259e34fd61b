"""Certified rational enclosures for the few irrational scalars that occur.

Roots such as V^(1/3), sqrt(V) and cubic roots are either detected as exact
rationals or bracketed by bisection into an interval of width at most
2^-bits.  Verdict-level comparisons never go through floating point: a
comparison of ``c * x^(p/q)`` against a rational reduces to an integer
comparison of powers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import DomainError

DEFAULT_BITS = 64


@dataclass(frozen=True)
class Enclosure:
    """A closed rational interval certified to contain one real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise DomainError("empty enclosure")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, q: Fraction) -> bool:
        return self.lo <= q <= self.hi

    def cmp(self, q: Fraction) -> int | None:
        """-1 / +1 when the enclosed value is certainly below / above ``q``;
        None when ``q`` lies inside the interval."""
        if self.hi < q:
            return -1
        if self.lo > q:
            return 1
        return None

    def __float__(self) -> float:
        return float(self.midpoint())


Scalar = Union[Fraction, Enclosure]


def as_enclosure(x: Scalar) -> Enclosure:
    return x if isinstance(x, Enclosure) else Enclosure(x, x)


def iroot(k: int, n: int) -> tuple[int, bool]:
    """Integer floor n-th root of k >= 0 with an exactness flag."""
    if k < 0 or n < 1:
        raise DomainError("iroot requires k >= 0, n >= 1")
    if k in (0, 1) or n == 1:
        return k, True
    r = int(round(k ** (1.0 / n)))
    while r**n > k:
        r -= 1
    while (r + 1) ** n <= k:
        r += 1
    return r, r**n == k


def exact_nth_root(x: Fraction, n: int) -> Fraction | None:
    """x^(1/n) when it is rational (numerator and denominator are n-th
    powers in lowest terms), else None."""
    if x < 0:
        raise DomainError("roots of negatives are not needed here")
    pn, p_ok = iroot(x.numerator, n)
    qn, q_ok = iroot(x.denominator, n)
    if p_ok and q_ok:
        return Fraction(pn, qn)
    return None


def nth_root(x: Fraction, n: int, bits: int = DEFAULT_BITS) -> Scalar:
    """x^(1/n) as an exact Fraction or a certified enclosure."""
    exact = exact_nth_root(x, n)
    if exact is not None:
        return exact
    lo, hi = Fraction(0), max(Fraction(1), x)
    return bisect_enclosure(lambda t: t**n - x, lo, hi, bits)


def sqrt(x: Fraction, bits: int = DEFAULT_BITS) -> Scalar:
    return nth_root(x, 2, bits)


def cbrt(x: Fraction, bits: int = DEFAULT_BITS) -> Scalar:
    return nth_root(x, 3, bits)


def bisect_enclosure(
    f: Callable[[Fraction], Fraction],
    lo: Fraction,
    hi: Fraction,
    bits: int = DEFAULT_BITS,
) -> Enclosure:
    """Bracket the root of a sign-changing exact function to width 2^-bits.

    ``f`` must be evaluated exactly (rational in, rational out) and satisfy
    f(lo) <= 0 <= f(hi) or f(hi) <= 0 <= f(lo).
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return Enclosure(lo, lo)
    if fhi == 0:
        return Enclosure(hi, hi)
    if (flo < 0) == (fhi < 0):
        raise DomainError("no sign change on the bracketing interval")
    target = Fraction(1, 2**bits)
    while hi - lo > target:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return Enclosure(mid, mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return Enclosure(lo, hi)


def poly_eval(coeffs: Sequence[Fraction], x: Fraction) -> Fraction:
    """Exact Horner evaluation; coeffs ordered highest degree first."""
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_root(
    coeffs: Sequence[Fraction],
    lo: Fraction,
    hi: Fraction,
    bits: int = DEFAULT_BITS,
) -> Enclosure:
    return bisect_enclosure(lambda t: poly_eval(coeffs, t), lo, hi, bits)


def cmp_power(c: Fraction, x: Fraction, p: int, q: int, r: Fraction) -> int:
    """Exact sign of ``c * x^(p/q) - r`` for c, x, r >= 0.

    Raising both sides to the q-th power turns the comparison into exact
    rational arithmetic, so the answer is certified even when x^(p/q) is
    irrational.
    """
    if c < 0 or x < 0 or r < 0:
        raise DomainError("cmp_power expects nonnegative quantities")
    lhs = c**q * x**p
    rhs = r**q
    return (lhs > rhs) - (lhs < rhs)


def scalar_lt(a: Scalar, b: Scalar) -> bool:
    """Certified strict ``a < b``; raises if the enclosures overlap."""
    ea, eb = as_enclosure(a), as_enclosure(b)
    if ea.hi < eb.lo:
        return True
    if eb.hi < ea.lo or (ea.is_exact and eb.is_exact and ea.lo == eb.lo):
        return False
    raise DomainError(
        f"enclosures [{ea.lo},{ea.hi}] and [{eb.lo},{eb.hi}] overlap; "
        "refine before comparing"
    )


def format_decimal(q: Fraction, digits: int = 12, rounding: str = "nearest") -> str:
    """Fixed-point decimal with ``digits`` fractional digits.

    ``rounding`` is "nearest" (ties to even), "floor", or "ceil"; the
    directed modes keep printed enclosure endpoints genuinely enclosing.
    """
    if rounding not in ("nearest", "floor", "ceil"):
        raise DomainError(f"unknown rounding mode {rounding!r}")
    scaled = q * 10**digits
    n = scaled.numerator
    d = scaled.denominator
    neg = n < 0
    whole, rem = divmod(abs(n), d)
    if rem:
        if rounding == "nearest":
            if 2 * rem > d or (2 * rem == d and whole % 2 == 1):
                whole += 1
        elif (rounding == "ceil") != neg:
            whole += 1  # directed away from the truncated magnitude
    sign = "-" if neg and whole else ""
    text = str(whole).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"
