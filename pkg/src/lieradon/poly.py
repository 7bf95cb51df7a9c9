"""Clifford-valued polynomials in named vector variables.

A ``PolyMV`` is a finite sum of monomials ``x^a y^b ... * M`` where the
variables are formal commuting scalar coordinates (one exponent
multi-index per vector variable) and the coefficient ``M`` is a
:class:`~lieradon.algebra.Multivector`.  All non-commutativity lives in
the coefficients, which multiply through the geometric product.

Text form (one term per line, ``;``-separated fields)::

    vars; exponents; blade; re; im

where ``vars`` is a comma list of variable names, ``exponents`` gives one
space-joined multi-index per variable with variables separated by ``|``,
``blade`` is a comma list of generator indices (``-`` for the scalar
blade) and ``re``/``im`` are fractions.  A ``# polymv dim=M vars=...``
header line is written so that the zero polynomial round-trips.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Multivector, _coerce_scalar
from .core import poly_mul_terms
from .errors import DimensionMismatch, GradeError, UnknownVariable
from .scalar import QQI_ONE, QQi


class PolyMV:
    """Polynomial with Multivector coefficients in named vector variables."""

    __slots__ = ("dim", "vars", "terms")

    def __init__(self, dim, vars, terms=None):
        self.dim = dim
        self.vars = tuple(vars)
        clean = {}
        if terms:
            for key, mv in terms.items():
                if len(key) != len(self.vars):
                    raise ValueError("exponent key arity != number of variables")
                if any(len(a) != dim for a in key):
                    raise DimensionMismatch("multi-index length != dim")
                if mv:
                    clean[key] = mv
        self.terms = clean

    @classmethod
    def _raw(cls, dim, vars, terms):
        out = cls.__new__(cls)
        out.dim = dim
        out.vars = vars
        out.terms = terms
        return out

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, dim, vars=()):
        return cls._raw(dim, tuple(vars), {})

    @classmethod
    def constant(cls, dim, value, vars=()):
        """Constant polynomial from a Multivector or scalar."""
        if not isinstance(value, Multivector):
            value = Multivector.scalar(dim, value)
        vars = tuple(vars)
        key = tuple((0,) * dim for _ in vars)
        return cls._raw(dim, vars, {key: value} if value else {})

    @classmethod
    def monomial(cls, dim, vars, key, coeff):
        if not isinstance(coeff, Multivector):
            coeff = Multivector.scalar(dim, coeff)
        return cls(dim, vars, {tuple(tuple(a) for a in key): coeff})

    # -- basic structure ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def var_index(self, var):
        try:
            return self.vars.index(var)
        except ValueError:
            raise UnknownVariable(var) from None

    def degree(self, var=None):
        """Total degree, or degree in one variable; -1 for the zero poly."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(sum(a) for a in key) for key in self.terms)
        vi = self.var_index(var)
        return max(sum(key[vi]) for key in self.terms)

    def is_homogeneous(self, var=None):
        degs = set()
        for key in self.terms:
            if var is None:
                degs.add(sum(sum(a) for a in key))
            else:
                degs.add(sum(key[self.var_index(var)]))
        return len(degs) <= 1

    def homogeneous_components(self, var=None):
        """Split into homogeneous pieces; returns {degree: PolyMV}."""
        vi = self.var_index(var) if var is not None else None
        out = {}
        for key, mv in self.terms.items():
            d = sum(key[vi]) if vi is not None else sum(sum(a) for a in key)
            out.setdefault(d, {})[key] = mv
        return {d: PolyMV._raw(self.dim, self.vars, t) for d, t in sorted(out.items())}

    def coefficient_grades(self):
        g = set()
        for mv in self.terms.values():
            g.update(mv.grades())
        return sorted(g)

    def rename_var(self, old, new):
        if new in self.vars and new != old:
            raise ValueError(f"variable {new!r} already present")
        vi = self.var_index(old)
        vars = tuple(new if i == vi else v for i, v in enumerate(self.vars))
        return PolyMV._raw(self.dim, vars, self.terms)

    def with_vars(self, vars):
        """Reindex onto a superset/reordering of the variables."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        missing = [v for v in self.vars if v not in vars]
        if missing:
            raise UnknownVariable(missing[0])
        zero = (0,) * self.dim
        pos = [vars.index(v) for v in self.vars]
        terms = {}
        for key, mv in self.terms.items():
            new_key = [zero] * len(vars)
            for p, a in zip(pos, key):
                new_key[p] = a
            terms[tuple(new_key)] = mv
        return PolyMV._raw(self.dim, vars, terms)

    def _align(self, other):
        if self.vars == other.vars:
            return self, other
        vars = self.vars + tuple(v for v in other.vars if v not in self.vars)
        return self.with_vars(vars), other.with_vars(vars)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, PolyMV):
            return other
        if isinstance(other, Multivector):
            return PolyMV.constant(self.dim, other, self.vars)
        s = _coerce_scalar(other)
        if s is None:
            return None
        return PolyMV.constant(self.dim, s, self.vars)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")
        a, b = self._align(other)
        terms = dict(a.terms)
        for key, mv in b.terms.items():
            acc = terms.get(key)
            acc = mv if acc is None else acc + mv
            if acc:
                terms[key] = acc
            elif key in terms:
                del terms[key]
        return PolyMV._raw(a.dim, a.vars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return PolyMV._raw(self.dim, self.vars,
                           {k: -mv for k, mv in self.terms.items()})

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.dim != other.dim:
            raise DimensionMismatch(f"dim {self.dim} vs {other.dim}")
        a, b = self._align(other)
        raw = poly_mul_terms({k: mv.terms for k, mv in a.terms.items()},
                             {k: mv.terms for k, mv in b.terms.items()})
        return PolyMV._raw(a.dim, a.vars,
                           {k: Multivector._raw(a.dim, t) for k, t in raw.items()})

    def __rmul__(self, other):
        # scalars and bare multivectors multiply from the left
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__mul__(self)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = PolyMV.constant(self.dim, 1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.dim != other.dim:
            return False
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash((self.dim, self.vars, frozenset(
            (k, frozenset(mv.terms.items())) for k, mv in self.terms.items())))

    def dagger(self):
        """Hermitian-conjugate the coefficients (variables stay formal/real)."""
        return PolyMV._raw(self.dim, self.vars,
                           {k: mv.dagger() for k, mv in self.terms.items()})

    # -- substitution and evaluation -----------------------------------------

    def subst(self, assignment):
        """Exact substitution var -> component list (QQi/int/Fraction).

        Returns a PolyMV in the remaining variables, or a Multivector when
        every variable is substituted.
        """
        for v in assignment:
            self.var_index(v)
        keep = [i for i, v in enumerate(self.vars) if v not in assignment]
        sub = {i: [x if isinstance(x, QQi) else _coerce_scalar(x)
                   for x in assignment[v]]
               for i, v in enumerate(self.vars) if v in assignment}
        for i, comps in sub.items():
            if len(comps) != self.dim:
                raise DimensionMismatch(f"assignment for {self.vars[i]!r} has wrong length")
        out_vars = tuple(self.vars[i] for i in keep)
        acc_terms = {}
        for key, mv in self.terms.items():
            factor = QQI_ONE
            for i, comps in sub.items():
                for j, e in enumerate(key[i]):
                    if e:
                        factor = factor * comps[j] ** e
                if not factor:
                    break
            if not factor:
                continue
            new_key = tuple(key[i] for i in keep)
            mv = mv * factor
            acc = acc_terms.get(new_key)
            acc = mv if acc is None else acc + mv
            if acc:
                acc_terms[new_key] = acc
            elif new_key in acc_terms:
                del acc_terms[new_key]
        if out_vars:
            return PolyMV._raw(self.dim, out_vars, acc_terms)
        return acc_terms.get((), Multivector.zero(self.dim))

    def evaluate(self, assignment):
        """Floating-point evaluation; returns {blade: complex}."""
        for v in self.vars:
            if v not in assignment:
                raise UnknownVariable(v)
        out = {}
        for key, mv in self.terms.items():
            factor = 1.0 + 0.0j
            for i, var in enumerate(self.vars):
                point = assignment[var]
                for j, e in enumerate(key[i]):
                    if e:
                        factor *= complex(point[j]) ** e
            for b, c in mv.terms.items():
                out[b] = out.get(b, 0j) + factor * c.to_complex()
        return out

    def rotate_var(self, var, matrix):
        """Substitute var_i -> sum_j matrix[i][j] var_j (exact)."""
        vi = self.var_index(var)
        lin = [linear_form(var, self.dim, row) for row in matrix]
        cache = {}
        out = PolyMV.zero(self.dim, self.vars)
        for key, mv in self.terms.items():
            alpha = key[vi]
            if alpha not in cache:
                f = PolyMV.constant(self.dim, 1, (var,))
                for i, e in enumerate(alpha):
                    if e:
                        f = f * lin[i] ** e
                cache[alpha] = f
            rest_key = tuple((0,) * self.dim if i == vi else a
                             for i, a in enumerate(key))
            out = out + PolyMV._raw(self.dim, self.vars, {rest_key: mv}) * cache[alpha]
        return out

    # -- text form -------------------------------------------------------------

    def to_text(self):
        lines = [f"# polymv dim={self.dim} vars={','.join(self.vars)}"]
        vars_s = ",".join(self.vars)
        for key in sorted(self.terms):
            mv = self.terms[key]
            exps = "|".join(" ".join(str(e) for e in a) for a in key)
            for b in sorted(mv.terms, key=lambda x: (x.bit_count(), x)):
                c = mv.terms[b]
                idx = ",".join(str(j + 1) for j in range(self.dim) if b >> j & 1) or "-"
                re, im = c.re, c.im
                lines.append(f"{vars_s}; {exps}; {idx}; "
                             f"{re.numerator}/{re.denominator}; "
                             f"{im.numerator}/{im.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        dim = None
        vars = None
        acc = {}
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                if "polymv" in line:
                    for tok in line.split():
                        if tok.startswith("dim="):
                            dim = int(tok[4:])
                        elif tok.startswith("vars="):
                            vars = tuple(v for v in tok[5:].split(",") if v)
                continue
            vars_s, exps_s, idx_s, re_s, im_s = [f.strip() for f in line.split(";")]
            line_vars = tuple(vars_s.split(","))
            key = tuple(tuple(int(e) for e in a.split()) for a in exps_s.split("|"))
            if vars is None:
                vars = line_vars
            if dim is None:
                dim = len(key[0])
            mask = 0
            if idx_s != "-":
                for i in idx_s.split(","):
                    mask |= 1 << (int(i) - 1)
            c = QQi.from_fractions(Fraction(re_s), Fraction(im_s))
            mv = acc.setdefault(key, {})
            mv[mask] = mv.get(mask, QQi(0)) + c
        if dim is None or vars is None:
            raise ValueError("polynomial text lacks a header and terms")
        terms = {k: Multivector(dim, mv) for k, mv in acc.items()}
        return cls(dim, vars, terms)

    def __repr__(self):
        if not self.terms:
            return "PolyMV(0)"
        bits = []
        for key in sorted(self.terms):
            mono = []
            for var, alpha in zip(self.vars, key):
                for j, e in enumerate(alpha):
                    if e:
                        mono.append(f"{var}{j+1}" + (f"^{e}" if e > 1 else ""))
            head = "*".join(mono) or "1"
            bits.append(f"[{self.terms[key]!r}]*{head}")
        return " + ".join(bits)


# -- constructors for the standard building blocks -----------------------------


def vector_variable(name, dim):
    """The vector variable x = sum_j e_j x_j as a PolyMV."""
    terms = {}
    for j in range(dim):
        key = (tuple(1 if i == j else 0 for i in range(dim)),)
        terms[key] = Multivector.basis_vector(dim, j + 1)
    return PolyMV._raw(dim, (name,), terms)


def linear_form(name, dim, coeffs):
    """Scalar-valued linear polynomial sum_j coeffs[j] * x_j."""
    terms = {}
    for j, c in enumerate(coeffs):
        c = c if isinstance(c, QQi) else _coerce_scalar(c)
        if c:
            key = (tuple(1 if i == j else 0 for i in range(dim)),)
            terms[key] = Multivector.scalar(dim, c)
    return PolyMV._raw(dim, (name,), terms)


def scalar_pairing(var, c: Multivector):
    """<x, c> = sum_j x_j c_j for a (complex) 1-vector c."""
    if not c.is_one_vector():
        raise GradeError("pairing needs a 1-vector")
    return linear_form(var, c.dim, c.vector_components())


def pairing(var1, var2, dim):
    """<x, y> = sum_j x_j y_j as a scalar-valued PolyMV in two variables."""
    terms = {}
    one = Multivector.scalar(dim, 1)
    for j in range(dim):
        e = tuple(1 if i == j else 0 for i in range(dim))
        terms[(e, e)] = one
    return PolyMV._raw(dim, (var1, var2), terms)


def norm_sq(var, dim):
    """|x|^2 = sum_j x_j^2 (equals -x^2 for the vector variable)."""
    terms = {}
    one = Multivector.scalar(dim, 1)
    for j in range(dim):
        e = tuple(2 if i == j else 0 for i in range(dim))
        terms[(e,)] = one
    return PolyMV._raw(dim, (var,), terms)


# -- the standard operators -----------------------------------------------------


def dirac_left(p: PolyMV, var) -> PolyMV:
    """Left Dirac derivative: sum_j e_j (d/dx_j) p."""
    vi = p.var_index(var)
    basis = [Multivector.basis_vector(p.dim, j + 1) for j in range(p.dim)]
    terms = {}
    for key, mv in p.terms.items():
        alpha = key[vi]
        for j, e in enumerate(alpha):
            if not e:
                continue
            new_alpha = alpha[:j] + (e - 1,) + alpha[j + 1:]
            new_key = key[:vi] + (new_alpha,) + key[vi + 1:]
            add = (basis[j] * mv) * QQi(e)
            acc = terms.get(new_key)
            acc = add if acc is None else acc + add
            if acc:
                terms[new_key] = acc
            elif new_key in terms:
                del terms[new_key]
    return PolyMV._raw(p.dim, p.vars, terms)


def dirac_right(p: PolyMV, var) -> PolyMV:
    """Right Dirac derivative: sum_j ((d/dx_j) p) e_j."""
    vi = p.var_index(var)
    basis = [Multivector.basis_vector(p.dim, j + 1) for j in range(p.dim)]
    terms = {}
    for key, mv in p.terms.items():
        alpha = key[vi]
        for j, e in enumerate(alpha):
            if not e:
                continue
            new_alpha = alpha[:j] + (e - 1,) + alpha[j + 1:]
            new_key = key[:vi] + (new_alpha,) + key[vi + 1:]
            add = (mv * basis[j]) * QQi(e)
            acc = terms.get(new_key)
            acc = add if acc is None else acc + add
            if acc:
                terms[new_key] = acc
            elif new_key in terms:
                del terms[new_key]
    return PolyMV._raw(p.dim, p.vars, terms)


def laplacian(p: PolyMV, var) -> PolyMV:
    """Complexified Laplacian sum_j (d/dx_j)^2 p."""
    vi = p.var_index(var)
    terms = {}
    for key, mv in p.terms.items():
        alpha = key[vi]
        for j, e in enumerate(alpha):
            if e < 2:
                continue
            new_alpha = alpha[:j] + (e - 2,) + alpha[j + 1:]
            new_key = key[:vi] + (new_alpha,) + key[vi + 1:]
            add = mv * QQi(e * (e - 1))
            acc = terms.get(new_key)
            acc = add if acc is None else acc + add
            if acc:
                terms[new_key] = acc
            elif new_key in terms:
                del terms[new_key]
    return PolyMV._raw(p.dim, p.vars, terms)


def euler(p: PolyMV, var) -> PolyMV:
    """Euler operator sum_j x_j (d/dx_j); multiplies each term by its degree."""
    vi = p.var_index(var)
    terms = {}
    for key, mv in p.terms.items():
        d = sum(key[vi])
        if d:
            terms[key] = mv * QQi(d)
    return PolyMV._raw(p.dim, p.vars, terms)


def gamma_op(p: PolyMV, var) -> PolyMV:
    """Gamma operator -x (dirac_left p) - (euler p), composed exactly."""
    x = vector_variable(var, p.dim)
    return -(x * dirac_left(p, var)) - euler(p, var)


def wedge(u: PolyMV, v: PolyMV) -> PolyMV:
    """u wedge v = (uv - vu)/2 for grade-1-valued polynomials."""
    for q in (u, v):
        if isinstance(q, PolyMV):
            if any(g != 1 for g in q.coefficient_grades()):
                raise GradeError("wedge needs 1-vector-valued operands")
    diff = u * v - v * u
    half = QQi(1, 0, 2)
    return PolyMV._raw(diff.dim, diff.vars,
                       {k: mv * half for k, mv in diff.terms.items()})


@dataclass(frozen=True)
class FischerComponent:
    """One slot x^a M of a monogenic Fischer tower (M monogenic, deg t-a)."""

    a: int
    t: int
    M: PolyMV
