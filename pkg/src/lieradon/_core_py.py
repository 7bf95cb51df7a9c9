"""Pure-Python core backend: exact scalars and the hot merge kernels.

A scalar is stored as a normalized integer triple ``(rn, im, d)`` meaning
``(rn + im*i) / d`` with ``d > 0`` and ``gcd(rn, im, d) == 1``.  All
arithmetic is exact; nothing is ever rounded.  The module also hosts the
innermost term-merge loops (blade products and polynomial products) so
the compiled backend can replace them wholesale.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class QQi:
    """Exact complex number with rational real and imaginary parts."""

    __slots__ = ("rn", "imn", "den")

    def __init__(self, rn=0, imn=0, den=1):
        if den == 0:
            raise ZeroDivisionError("QQi with zero denominator")
        if den < 0:
            rn, imn, den = -rn, -imn, -den
        g = gcd(rn, imn, den)
        if g > 1:
            rn //= g
            imn //= g
            den //= g
        self.rn = rn
        self.imn = imn
        self.den = den

    # -- constructors -------------------------------------------------

    @classmethod
    def from_fractions(cls, re, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        return cls(re.numerator * (d // re.denominator),
                   im.numerator * (d // im.denominator), d)

    # -- predicates / accessors ---------------------------------------

    def __bool__(self):
        return self.rn != 0 or self.imn != 0

    def is_rational(self):
        return self.imn == 0

    @property
    def re(self):
        return Fraction(self.rn, self.den)

    @property
    def im(self):
        return Fraction(self.imn, self.den)

    def as_fraction(self):
        if self.imn != 0:
            raise ValueError(f"not a real value: {self}")
        return Fraction(self.rn, self.den)

    def to_complex(self):
        return complex(self.rn / self.den, self.imn / self.den)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.den, other.den
        return QQi(self.rn * d2 + other.rn * d1,
                   self.imn * d2 + other.imn * d1, d1 * d2)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        d1, d2 = self.den, other.den
        return QQi(self.rn * d2 - other.rn * d1,
                   self.imn * d2 - other.imn * d1, d1 * d2)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        out = QQi.__new__(QQi)
        out.rn = -self.rn
        out.imn = -self.imn
        out.den = self.den
        return out

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, e = self.rn, self.imn, other.rn, other.imn
        return QQi(a * c - b * e, a * e + b * c, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero QQi")
        a, b, c, e = self.rn, self.imn, other.rn, other.imn
        return QQi(other.den * (a * c + b * e),
                   other.den * (b * c - a * e),
                   self.den * (c * c + e * e))

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return (QQI_ONE / self) ** (-n)
        out = QQI_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        out = QQi.__new__(QQi)
        out.rn = self.rn
        out.imn = -self.imn
        out.den = self.den
        return out

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return (self.rn == other.rn and self.imn == other.imn
                and self.den == other.den)

    def __hash__(self):
        if self.imn == 0:
            return hash(Fraction(self.rn, self.den))
        return hash((self.rn, self.imn, self.den))

    def __repr__(self):
        return f"QQi({self.rn}, {self.imn}, {self.den})"

    def __str__(self):
        if self.imn == 0:
            return str(Fraction(self.rn, self.den))
        if self.rn == 0:
            return f"{Fraction(self.imn, self.den)}i"
        im = Fraction(self.imn, self.den)
        sign = "+" if im >= 0 else "-"
        return f"{Fraction(self.rn, self.den)}{sign}{abs(im)}i"

    def __reduce__(self):
        return (QQi, (self.rn, self.imn, self.den))


def _coerce(x):
    if type(x) is QQi:
        return x
    if isinstance(x, int):
        return QQi(x)
    if isinstance(x, Fraction):
        return QQi(x.numerator, 0, x.denominator)
    if isinstance(x, QQi):
        return x
    return None


QQI_ZERO = QQi(0)
QQI_ONE = QQi(1)
QQI_I = QQi(0, 1)


# -- hot merge kernels ------------------------------------------------------
#
# These loops dominate the runtime of the exact pipeline; the compiled
# backend provides drop-in replacements.


def blade_sign(a, b):
    """Sign of e_A * e_B relative to e_{A xor B} (transposition count
    plus one minus sign per shared generator)."""
    swaps = (a & b).bit_count()
    a >>= 1
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def mv_mul_terms(ta, tb):
    """Geometric product on raw blade dicts {mask: QQi}."""
    out = {}
    for b1, c1 in ta.items():
        for b2, c2 in tb.items():
            c = c1 * c2
            if blade_sign(b1, b2) < 0:
                c = -c
            key = b1 ^ b2
            acc = out.get(key)
            acc = c if acc is None else acc + c
            if acc:
                out[key] = acc
            elif key in out:
                del out[key]
    return out


def mv_add_into(acc, add):
    """In-place term merge acc += add on raw blade dicts."""
    for b, c in add.items():
        cur = acc.get(b)
        cur = c if cur is None else cur + c
        if cur:
            acc[b] = cur
        elif b in acc:
            del acc[b]
    return acc


def poly_mul_terms(ta, tb):
    """Polynomial term product: keys are tuples of exponent tuples,
    values raw blade dicts.  Exponents add per variable; coefficients
    multiply geometrically."""
    out = {}
    for k1, m1 in ta.items():
        for k2, m2 in tb.items():
            mv = mv_mul_terms(m1, m2)
            if not mv:
                continue
            key = tuple(tuple(x + y for x, y in zip(e1, e2))
                        for e1, e2 in zip(k1, k2))
            acc = out.get(key)
            if acc is None:
                out[key] = mv
            else:
                mv_add_into(acc, mv)
    return {k: v for k, v in out.items() if v}
