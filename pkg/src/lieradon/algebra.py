"""Complex Clifford algebra with exact Gaussian-rational coefficients.

Generators e_1..e_m satisfy e_j^2 = -1 and e_j e_k = -e_k e_j for j != k.
Blades are encoded as bitmasks (bit j-1 set means e_j participates); the
product sign is obtained by counting transpositions, so equality of
multivectors is plain dictionary equality on canonical forms.
"""

from __future__ import annotations

from fractions import Fraction

from .core import blade_sign, mv_mul_terms
from .errors import DimensionMismatch, GradeError
from .scalar import QQI_ONE, QQi


def dagger_sign(blade: int) -> int:
    """Sign of the Hermitian conjugate of a unit blade: (-1)^(k(k+1)/2)."""
    k = blade.bit_count()
    return -1 if (k * (k + 1) // 2) & 1 else 1


def _coerce_scalar(x):
    if type(x) is QQi or isinstance(x, QQi):
        return x
    if isinstance(x, int):
        return QQi(x)
    if isinstance(x, Fraction):
        return QQi(x.numerator, 0, x.denominator)
    return None


class Multivector:
    """Element of the complex Clifford algebra C_m, in canonical form."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim: int, terms=None):
        if dim < 1:
            raise ValueError("dimension must be >= 1")
        self.dim = dim
        clean = {}
        if terms:
            limit = 1 << dim
            for blade, coeff in terms.items():
                if not 0 <= blade < limit:
                    raise GradeError(f"blade {blade:b} outside algebra of dim {dim}")
                if not isinstance(coeff, QQi):
                    coeff = _coerce_scalar(coeff)
                if coeff:
                    clean[blade] = coeff
        self.terms = clean

    @classmethod
    def _raw(cls, dim, terms):
        out = cls.__new__(cls)
        out.dim = dim
        out.terms = terms
        return out

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, dim):
        return cls._raw(dim, {})

    @classmethod
    def scalar(cls, dim, value):
        value = _coerce_scalar(value) if not isinstance(value, QQi) else value
        return cls._raw(dim, {0: value} if value else {})

    @classmethod
    def basis_vector(cls, dim, j):
        """e_j for 1 <= j <= dim."""
        if not 1 <= j <= dim:
            raise GradeError(f"basis index {j} outside 1..{dim}")
        return cls._raw(dim, {1 << (j - 1): QQI_ONE})

    @classmethod
    def from_vector(cls, dim, components):
        """1-vector with the given components (QQi / int / Fraction)."""
        if len(components) != dim:
            raise DimensionMismatch(f"expected {dim} components")
        terms = {}
        for j, c in enumerate(components):
            c = _coerce_scalar(c)
            if c:
                terms[1 << j] = c
        return cls._raw(dim, terms)

    @classmethod
    def blade(cls, dim, indices, coeff=QQI_ONE):
        """Multivector c * e_{i1} ... e_{ik} for strictly increasing indices."""
        mask = 0
        for i in indices:
            if not 1 <= i <= dim:
                raise GradeError(f"index {i} outside 1..{dim}")
            bit = 1 << (i - 1)
            if mask & bit:
                raise GradeError("repeated index in blade")
            mask |= bit
        coeff = _coerce_scalar(coeff)
        return cls._raw(dim, {mask: coeff} if coeff else {})

    # -- structure -----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def grades(self):
        return sorted({b.bit_count() for b in self.terms})

    def grade(self, k):
        """Grade-k projection [a]_k."""
        if not 0 <= k <= self.dim:
            raise GradeError(f"grade {k} outside 0..{self.dim}")
        return Multivector._raw(
            self.dim, {b: c for b, c in self.terms.items() if b.bit_count() == k})

    def scalar_part(self) -> QQi:
        return self.terms.get(0, QQi(0))

    def is_one_vector(self):
        return all(b.bit_count() == 1 for b in self.terms)

    def vector_components(self):
        """Components of a 1-vector as a list of QQi."""
        if not self.is_one_vector():
            raise GradeError("not a 1-vector")
        zero = QQi(0)
        return [self.terms.get(1 << j, zero) for j in range(self.dim)]

    # -- arithmetic ------------------------------------------------------

    def _check_dim(self, other):
        if self.dim != other.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")

    def __add__(self, other):
        if not isinstance(other, Multivector):
            s = _coerce_scalar(other)
            if s is None:
                return NotImplemented
            other = Multivector.scalar(self.dim, s)
        self._check_dim(other)
        terms = dict(self.terms)
        for b, c in other.terms.items():
            acc = terms.get(b)
            acc = c if acc is None else acc + c
            if acc:
                terms[b] = acc
            elif b in terms:
                del terms[b]
        return Multivector._raw(self.dim, terms)

    __radd__ = __add__

    def __sub__(self, other):
        return self.__add__(-other if isinstance(other, Multivector)
                            else -_coerce_scalar(other))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Multivector._raw(self.dim, {b: -c for b, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Multivector):
            s = _coerce_scalar(other)
            if s is None:
                return NotImplemented
            if not s:
                return Multivector.zero(self.dim)
            return Multivector._raw(self.dim,
                                    {b: c * s for b, c in self.terms.items()})
        self._check_dim(other)
        return Multivector._raw(self.dim, mv_mul_terms(self.terms, other.terms))

    def __rmul__(self, other):
        s = _coerce_scalar(other)
        if s is None:
            return NotImplemented
        return self.__mul__(s)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = Multivector.scalar(self.dim, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            s = _coerce_scalar(other)
            if s is None:
                return NotImplemented
            other = Multivector.scalar(self.dim, s)
        return self.dim == other.dim and self.terms == other.terms

    def __hash__(self):
        return hash((self.dim, frozenset(self.terms.items())))

    # -- conjugations ----------------------------------------------------

    def dagger(self):
        """Hermitian conjugate: antiautomorphism with e_j -> -e_j."""
        terms = {}
        for b, c in self.terms.items():
            c = c.conjugate()
            if dagger_sign(b) < 0:
                c = -c
            terms[b] = c
        return Multivector._raw(self.dim, terms)

    def norm0(self) -> QQi:
        """[a^dagger a]_0 = sum of squared moduli of the coefficients."""
        acc = QQi(0)
        for c in self.terms.values():
            acc = acc + c * c.conjugate()
        return acc

    # -- text form ---------------------------------------------------------

    def to_text(self) -> str:
        """Serialize as ``dim m; term <indices> <re> <im>; ...``.

        Blade indices are comma-joined 1-based generator indices; the empty
        blade (scalar) is written ``-``.  Coefficients are written as two
        fractions ``num/den``.
        """
        parts = [f"dim {self.dim}"]
        for b in sorted(self.terms, key=lambda x: (x.bit_count(), x)):
            c = self.terms[b]
            idx = ",".join(str(j + 1) for j in range(self.dim) if b >> j & 1) or "-"
            re, im = c.re, c.im
            parts.append(
                f"term {idx} {re.numerator}/{re.denominator} {im.numerator}/{im.denominator}")
        return "; ".join(parts)

    @classmethod
    def from_text(cls, text: str) -> "Multivector":
        fields = [f.strip() for f in text.strip().split(";") if f.strip()]
        if not fields or not fields[0].startswith("dim "):
            raise ValueError("multivector text must start with 'dim m'")
        dim = int(fields[0][4:])
        terms = {}
        for f in fields[1:]:
            if not f.startswith("term "):
                raise ValueError(f"bad term field: {f!r}")
            idx_s, re_s, im_s = f[5:].split()
            mask = 0
            if idx_s != "-":
                for i in idx_s.split(","):
                    mask |= 1 << (int(i) - 1)
            c = QQi.from_fractions(Fraction(re_s), Fraction(im_s))
            if c:
                terms[mask] = c
        return cls(dim, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for b in sorted(self.terms, key=lambda x: (x.bit_count(), x)):
            name = "e" + "".join(str(j + 1) for j in range(self.dim) if b >> j & 1)
            bits.append(f"({self.terms[b]}){name if b else ''}")
        return " + ".join(bits)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return a * b


def hermitian_conjugate(a: Multivector) -> Multivector:
    return a.dagger()


def grade_projection(a: Multivector, k: int) -> Multivector:
    return a.grade(k)


class SpinElement:
    """Product of an even number of exact unit 1-vectors."""

    __slots__ = ("factors",)

    def __init__(self, factors):
        factors = tuple(factors)
        if len(factors) % 2:
            raise ValueError("spin element needs an even number of factors")
        for f in factors:
            if not isinstance(f, Multivector) or not f.is_one_vector():
                raise GradeError("spin factors must be 1-vectors")
            if f * f != Multivector.scalar(f.dim, -1):
                raise ValueError("spin factor is not an exact unit vector")
        self.factors = factors

    def sigma(self) -> Multivector:
        out = Multivector.scalar(self.factors[0].dim, 1)
        for f in self.factors:
            out = out * f
        return out

    def sigma_bar(self) -> Multivector:
        """Reversed factor product; inverse of sigma() for unit factors."""
        out = Multivector.scalar(self.factors[0].dim, 1)
        for f in reversed(self.factors):
            out = out * f
        return out

    def act(self, a: Multivector) -> Multivector:
        """Sandwich sigma * a * sigma_bar (a rotation on 1-vectors)."""
        return self.sigma() * a * self.sigma_bar()

    def act_bar(self, a: Multivector) -> Multivector:
        """Inverse sandwich sigma_bar * a * sigma."""
        return self.sigma_bar() * a * self.sigma()

    def rotation_matrix(self):
        """Matrix M with (sigma_bar e_j sigma) = sum_i M[i][j] e_i, as Fractions."""
        dim = self.factors[0].dim
        cols = []
        for j in range(1, dim + 1):
            img = self.act_bar(Multivector.basis_vector(dim, j))
            cols.append([c.as_fraction() for c in img.vector_components()])
        return [[cols[j][i] for j in range(dim)] for i in range(dim)]


def spin_sandwich(sigma: SpinElement, a: Multivector) -> Multivector:
    return sigma.act(a)
