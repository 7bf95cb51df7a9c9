# cython: language_level=3
"""Compiled core backend: exact scalars and the hot merge kernels.

Same representation and API as ``_core_py``: a normalized integer triple
``(rn, imn, den)`` meaning ``(rn + imn*i) / den`` with ``den > 0`` and
``gcd(rn, imn, den) == 1``.  Integers stay arbitrary precision (Python
ints); the speedup comes from static dispatch in the scalar arithmetic
and C-level blade handling inside the term-merge loops.
"""

from fractions import Fraction
from math import gcd


cdef class QQi:
    """Exact complex number with rational real and imaginary parts."""

    cdef readonly object rn
    cdef readonly object imn
    cdef readonly object den

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

    @classmethod
    def from_fractions(cls, re, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // gcd(re.denominator, im.denominator)
        return _mk(re.numerator * (d // re.denominator),
                   im.numerator * (d // im.denominator), d)

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

    def __add__(self, other):
        cdef QQi o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mk(self.rn * o.den + o.rn * self.den,
                   self.imn * o.den + o.imn * self.den,
                   self.den * o.den)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        cdef QQi o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mk(self.rn * o.den - o.rn * self.den,
                   self.imn * o.den - o.imn * self.den,
                   self.den * o.den)

    def __rsub__(self, other):
        cdef QQi o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __neg__(self):
        cdef QQi out = QQi.__new__(QQi)
        out.rn = -self.rn
        out.imn = -self.imn
        out.den = self.den
        return out

    def __mul__(self, other):
        cdef QQi o = _coerce(other)
        if o is None:
            return NotImplemented
        return _mk(self.rn * o.rn - self.imn * o.imn,
                   self.rn * o.imn + self.imn * o.rn,
                   self.den * o.den)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        cdef QQi o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.rn == 0 and o.imn == 0:
            raise ZeroDivisionError("division by zero QQi")
        return _mk(o.den * (self.rn * o.rn + self.imn * o.imn),
                   o.den * (self.imn * o.rn - self.rn * o.imn),
                   self.den * (o.rn * o.rn + o.imn * o.imn))

    def __rtruediv__(self, other):
        cdef QQi o = _coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, n, mod):
        if not isinstance(n, int):
            return NotImplemented
        cdef QQi out
        cdef QQi base
        if n < 0:
            base = QQI_ONE / self
            return base ** (-n)
        out = QQI_ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        cdef QQi out = QQi.__new__(QQi)
        out.rn = self.rn
        out.imn = -self.imn
        out.den = self.den
        return out

    def __eq__(self, other):
        cdef QQi o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.rn == o.rn and self.imn == o.imn and self.den == o.den

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


cdef QQi _mk(object rn, object imn, object den):
    cdef QQi out = QQi.__new__(QQi)
    if den < 0:
        rn = -rn
        imn = -imn
        den = -den
    g = gcd(rn, imn, den)
    if g > 1:
        rn //= g
        imn //= g
        den //= g
    out.rn = rn
    out.imn = imn
    out.den = den
    return out


cdef QQi _coerce(object x):
    if type(x) is QQi:
        return <QQi>x
    if isinstance(x, int):
        return _mk(x, 0, 1)
    if isinstance(x, Fraction):
        return _mk(x.numerator, 0, x.denominator)
    if isinstance(x, QQi):
        return <QQi>x
    return None


QQI_ZERO = QQi(0)
QQI_ONE = QQi(1)
QQI_I = QQi(0, 1)


# -- hot merge kernels --------------------------------------------------------


cdef inline QQi _qmul(QQi x, QQi y):
    return _mk(x.rn * y.rn - x.imn * y.imn,
               x.rn * y.imn + x.imn * y.rn,
               x.den * y.den)


cdef inline QQi _qadd(QQi x, QQi y):
    return _mk(x.rn * y.den + y.rn * x.den,
               x.imn * y.den + y.imn * x.den,
               x.den * y.den)


cdef inline QQi _qneg(QQi x):
    cdef QQi out = QQi.__new__(QQi)
    out.rn = -x.rn
    out.imn = -x.imn
    out.den = x.den
    return out


cdef inline int _popcount(unsigned long long v):
    cdef int n = 0
    while v:
        v &= v - 1
        n += 1
    return n


cdef inline int _blade_sign_c(unsigned long long a, unsigned long long b):
    cdef int swaps = _popcount(a & b)
    a >>= 1
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def blade_sign(a, b):
    """Sign of e_A * e_B relative to e_{A xor B}."""
    return _blade_sign_c(a, b)


def mv_mul_terms(dict ta, dict tb):
    """Geometric product on raw blade dicts {mask: QQi}."""
    cdef dict out = {}
    cdef unsigned long long b1, b2, key
    cdef QQi c, acc
    for b1o, c1 in ta.items():
        b1 = b1o
        for b2o, c2 in tb.items():
            b2 = b2o
            c = _qmul(<QQi>c1, <QQi>c2)
            if _blade_sign_c(b1, b2) < 0:
                c = _qneg(c)
            key = b1 ^ b2
            prev = out.get(key)
            if prev is None:
                acc = c
            else:
                acc = _qadd(<QQi>prev, c)
            if acc.rn != 0 or acc.imn != 0:
                out[key] = acc
            elif prev is not None:
                del out[key]
    return out


def mv_add_into(dict acc, dict add):
    """In-place term merge acc += add on raw blade dicts."""
    cdef QQi cur
    for b, c in add.items():
        prev = acc.get(b)
        if prev is None:
            cur = <QQi>c
        else:
            cur = _qadd(<QQi>prev, <QQi>c)
        if cur.rn != 0 or cur.imn != 0:
            acc[b] = cur
        elif prev is not None:
            del acc[b]
    return acc


def poly_mul_terms(dict ta, dict tb):
    """Polynomial term product on {exponent-key: blade dict} maps."""
    cdef dict out = {}
    cdef dict mv
    cdef tuple k1, k2, key
    for k1o, m1 in ta.items():
        k1 = <tuple>k1o
        for k2o, m2 in tb.items():
            k2 = <tuple>k2o
            mv = mv_mul_terms(<dict>m1, <dict>m2)
            if not mv:
                continue
            key = tuple(tuple(x + y for x, y in zip(e1, e2))
                        for e1, e2 in zip(k1, k2))
            acc = out.get(key)
            if acc is None:
                out[key] = mv
            else:
                mv_add_into(<dict>acc, mv)
    cdef dict clean = {}
    for k, v in out.items():
        if v:
            clean[k] = v
    return clean
