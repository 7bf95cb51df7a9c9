"""Exact Gegenbauer polynomials, Pochhammer symbols and gamma-ratio helpers.

Everything here returns Fractions.  Gamma functions never appear alone:
only ratios with integer offset are evaluated, as finite telescoping
products, which keeps half-integer arguments exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .errors import PoleError


class RationalUniPoly:
    """Univariate polynomial with Fraction coefficients (ascending order)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, t):
        t = Fraction(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other):
        return isinstance(other, RationalUniPoly) and self.coeffs == other.coeffs

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return RationalUniPoly([x - y for x, y in zip(a, b)])

    def __repr__(self):
        return f"RationalUniPoly({list(self.coeffs)})"


def gegenbauer(k: int, lam) -> RationalUniPoly:
    """Gegenbauer polynomial C_k^lam via the standard three-term recurrence."""
    lam = Fraction(lam)
    if k < 0:
        return RationalUniPoly([])
    prev = [Fraction(1)]                       # C_0
    if k == 0:
        return RationalUniPoly(prev)
    cur = [Fraction(0), 2 * lam]               # C_1 = 2 lam t
    for n in range(2, k + 1):
        shifted = [Fraction(0)] + cur          # t * C_{n-1}
        nxt = [Fraction(0)] * (n + 1)
        c1 = Fraction(2 * (n + lam - 1), n)
        c2 = Fraction(n + 2 * lam - 2, n)
        for i, c in enumerate(shifted):
            nxt[i] += c1 * c
        for i, c in enumerate(prev):
            nxt[i] -= c2 * c
        prev, cur = cur, nxt
    return RationalUniPoly(cur)


def gegenbauer_contiguous_check(k: int, m: int) -> bool:
    """Check C_k^{m/2} - C_{k-2}^{m/2} == (2k+m-2)/(m-2) C_k^{m/2-1} exactly."""
    if k < 2:
        raise ValueError("contiguous relation needs k >= 2")
    lam = Fraction(m, 2)
    lhs = gegenbauer(k, lam) - gegenbauer(k - 2, lam)
    scale = Fraction(2 * k + m - 2, m - 2)
    rhs = RationalUniPoly([scale * c for c in gegenbauer(k, lam - 1).coeffs])
    return lhs == rhs


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial (a)_n = a (a+1) ... (a+n-1)."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def gamma_ratio(a, b) -> Fraction:
    """Gamma(a)/Gamma(b) for an integer offset a - b, as an exact product."""
    a = Fraction(a)
    b = Fraction(b)
    off = a - b
    if off.denominator != 1:
        raise PoleError(f"gamma_ratio needs integer offset, got {off}")
    n = off.numerator
    if n >= 0:
        # Gamma(b+n)/Gamma(b) = (b)_n, poles only if some factor is 0
        out = Fraction(1)
        for i in range(n):
            f = b + i
            if f == 0:
                raise PoleError(f"gamma_ratio({a}, {b}) crosses a pole")
            out *= f
        return out
    inv = gamma_ratio(b, a)
    if inv == 0:
        raise PoleError(f"gamma_ratio({a}, {b}) crosses a pole")
    return 1 / inv


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double factorial needs n >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def hypergeometric_terminating(num_params, den_params, p: int) -> Fraction:
    """Terminating hypergeometric sum_{j=0}^{p} prod (a)_j / prod (c)_j / j!.

    The truncation order ``p`` is explicit because repeated non-positive
    parameters can appear in numerator and denominator simultaneously;
    the caller passes the index at which a numerator factor terminates
    the series.  We validate that the term ``j = p+1`` would indeed
    vanish by a numerator zero at or before any denominator pole, and
    that no denominator Pochhammer vanishes for ``j <= p``.
    """
    if p < 0:
        raise ValueError("truncation order must be >= 0")
    num = [Fraction(a) for a in num_params]
    den = [Fraction(c) for c in den_params]
    terminating = any(a.denominator == 1 and -p <= a.numerator <= 0 for a in num)
    if not terminating:
        raise ValueError("no numerator parameter terminates the series at j <= p")
    total = Fraction(0)
    term = Fraction(1)
    for j in range(p + 1):
        total += term
        if j == p:
            break
        for a in num:
            term *= a + j
        for c in den:
            f = c + j
            if f == 0:
                raise PoleError(f"denominator parameter {c} hits a pole at j={j + 1}")
            term /= f
        term /= j + 1
    return total


def pfaff_saalschutz_rhs(p: int, a, b, c) -> Fraction:
    """Closed form (c-a)_p (c-b)_p / ((c)_p (c-a-b)_p) of the balanced 3F2."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    den = pochhammer(c, p) * pochhammer(c - a - b, p)
    if den == 0:
        raise PoleError("Pfaff-Saalschutz denominator vanishes")
    return pochhammer(c - a, p) * pochhammer(c - b, p) / den


__all__ = [
    "RationalUniPoly", "gegenbauer", "gegenbauer_contiguous_check",
    "pochhammer", "gamma_ratio", "double_factorial",
    "hypergeometric_terminating", "pfaff_saalschutz_rhs", "factorial",
]
