"""Exact normalized integration over the sphere, the Lie sphere and the
Stiefel manifold of orthonormal pairs, plus a seeded Monte-Carlo oracle.

All integrators fold their normalizations in (1/A_m for the sphere,
1/(pi A_m) for the Lie sphere, 1/(A_m A_{m-1}) for frame averages), so
every exact value stays Gaussian rational.

Two exact routes are provided for frame averages:

* :func:`stiefel_average` works monomial-by-monomial on any polynomial in
  the frame variables (Wick pairing sums with the tangent projector).
  Exponential in the s-degree; meant for low degrees and as an oracle.
* :func:`stiefel_average_paired` exploits that every kernel integrand is
  a polynomial in the four pairings <z,t>, <z,s>, <w,t>, <w,s>; both
  Wick stages then collapse to closed two-vector sums over the rotation
  invariants <z,z>, <z,w>, <w,w>.  This is the fast path of the exact
  pipeline and is cross-checked against the generic route and the MC
  oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np

from .algebra import Multivector
from .errors import DimensionMismatch, UnknownVariable
from .poly import PolyMV, norm_sq, pairing, vector_variable, wedge
from .scalar import QQi
from .special import double_factorial

# -- sphere monomial moments ---------------------------------------------------


@lru_cache(maxsize=None)
def _moment_from_counts(counts, m):
    total = sum(counts)
    half = total // 2
    num = 1
    for a in counts:
        num *= double_factorial(a - 1)
    den = 1
    for i in range(half):
        den *= m + 2 * i
    return Fraction(num, den)


def sphere_moment(alpha, m: int) -> Fraction:
    """Normalized moment (1/A_m) int omega^alpha dS over S^{m-1}."""
    if any(a % 2 for a in alpha):
        return Fraction(0)
    return _moment_from_counts(tuple(sorted(a for a in alpha if a)), m)


def sphere_integral(p: PolyMV, m: int, var=None):
    """Integrate one vector variable over S^{m-1} (normalized), exactly.

    Returns a PolyMV in the remaining variables, or a Multivector when
    the integrated variable was the only one.
    """
    if p.dim != m:
        raise DimensionMismatch(f"polynomial dim {p.dim} != {m}")
    if var is None:
        if len(p.vars) != 1:
            raise UnknownVariable("sphere_integral needs the variable name "
                                  "for multi-variable input")
        var = p.vars[0]
    vi = p.var_index(var)
    keep = [i for i in range(len(p.vars)) if i != vi]
    out_vars = tuple(p.vars[i] for i in keep)
    acc = {}
    for key, mv in p.terms.items():
        mom = sphere_moment(key[vi], m)
        if not mom:
            continue
        new_key = tuple(key[i] for i in keep)
        add = mv * mom
        prev = acc.get(new_key)
        prev = add if prev is None else prev + add
        if prev:
            acc[new_key] = prev
        elif new_key in acc:
            del acc[new_key]
    if out_vars:
        return PolyMV._raw(p.dim, out_vars, acc)
    return acc.get((), Multivector.zero(p.dim))


# -- theta integral and Lie-sphere integral -------------------------------------


@dataclass(frozen=True)
class LieIntegralValue:
    """Exact value q1 + q2/pi of a normalized theta integral."""

    rational_part: QQi
    inv_pi_part: QQi

    def is_zero(self):
        return not (self.rational_part or self.inv_pi_part)


def theta_integral(k: int) -> LieIntegralValue:
    """(1/pi) int_0^pi e^{i k theta} d theta, exactly."""
    if k == 0:
        return LieIntegralValue(QQi(1), QQi(0))
    if k % 2 == 0:
        return LieIntegralValue(QQi(0), QQi(0))
    return LieIntegralValue(QQi(0), QQi(0, 2, k))


def lie_sphere_integral(pieces, m: int, var=None):
    """Normalized integral over the Lie sphere of a theta-graded sum.

    ``pieces`` is an iterable of ``(plus_deg, minus_deg, poly)`` where
    ``poly`` is the omega-part (a PolyMV whose integration variable is
    ``var`` or its only variable), ``plus_deg`` counts e^{i theta}
    factors and ``minus_deg`` the e^{-i theta} ones.  The parity of every
    polynomial integrand makes the 1/pi part cancel exactly; this is
    asserted on every call.
    """
    rat = None
    pi_part = None
    for plus, minus, poly in pieces:
        th = theta_integral(plus - minus)
        if th.is_zero():
            continue
        s = sphere_integral(poly, m, var)
        if th.rational_part:
            contrib = s * th.rational_part
            rat = contrib if rat is None else rat + contrib
        if th.inv_pi_part:
            contrib = s * th.inv_pi_part
            pi_part = contrib if pi_part is None else pi_part + contrib
    if pi_part is not None and pi_part:
        raise AssertionError("Lie-sphere integral has a residual 1/pi part; "
                             "integrand violates the parity invariant")
    return rat


def ol2_inner(g: PolyMV, h: PolyMV, m: int):
    """Normalized OL2 inner product of two one-variable polynomials.

    Computes (1/(pi A_m)) int [g(e^{i theta} w)]^dagger h(e^{i theta} w);
    the variables of g and h are identified.
    """
    if len(g.vars) != 1 or len(h.vars) != 1:
        raise UnknownVariable("ol2_inner expects one-variable polynomials")
    var = g.vars[0]
    if h.vars[0] != var:
        h = h.rename_var(h.vars[0], var)
    pieces = []
    for d, gd in g.homogeneous_components().items():
        gd_dag = gd.dagger()
        for e, he in h.homogeneous_components().items():
            pieces.append((e, d, gd_dag * he))
    out = lie_sphere_integral(pieces, m, var)
    return Multivector.zero(m) if out is None else out


# -- generic Stiefel average ------------------------------------------------------


def _pairings(indices):
    """All perfect matchings of a list of coordinate indices."""
    if not indices:
        yield ()
        return
    first = indices[0]
    for i in range(1, len(indices)):
        rest = indices[1:i] + indices[i + 1:]
        for sub in _pairings(rest):
            yield ((first, indices[i]),) + sub


@lru_cache(maxsize=None)
def _s_wick(delta, m):
    """E_s[s^delta] over S^{m-2} orthogonal to t, as a polynomial in t.

    Returns a dict t-exponent-tuple -> Fraction.  Uses Wick pairing with
    the projector P_ij = delta_ij - t_i t_j; normalization included.
    """
    total = sum(delta)
    if total % 2:
        return {}
    half = total // 2
    den = 1
    for r in range(half):
        den *= (m - 1) + 2 * r
    idx = []
    for i, e in enumerate(delta):
        idx.extend([i] * e)
    acc = {}
    zero = tuple(0 for _ in delta)
    for matching in _pairings(tuple(idx)):
        # expand prod (delta_ij - t_i t_j) over the chosen pairs
        partial = {zero: Fraction(1)}
        for i, j in matching:
            nxt = {}
            for texp, coef in partial.items():
                if i == j:
                    nxt[texp] = nxt.get(texp, Fraction(0)) + coef
                lst = list(texp)
                lst[i] += 1
                lst[j] += 1
                key = tuple(lst)
                nxt[key] = nxt.get(key, Fraction(0)) - coef
            partial = nxt
        for texp, coef in partial.items():
            acc[texp] = acc.get(texp, Fraction(0)) + coef
    return {k: v / den for k, v in acc.items() if v}


def stiefel_average(F: PolyMV, m: int, tvar="t", svar="s"):
    """Average over orthonormal frames (t, s), exactly, term by term.

    The inner average over s (the unit sphere of t-perp) uses Wick
    pairing sums with the tangent projector; the outer average over t
    uses plain sphere moments.  Odd s-degree terms vanish.  Returns a
    PolyMV in the remaining variables (or a Multivector if none remain).
    """
    ti = F.var_index(tvar)
    si = F.var_index(svar)
    keep = [i for i in range(len(F.vars)) if i not in (ti, si)]
    out_vars = tuple(F.vars[i] for i in keep)
    acc = {}
    for key, mv in F.terms.items():
        gamma = key[ti]
        delta = key[si]
        swick = _s_wick(delta, m)
        if not swick:
            continue
        total = Fraction(0)
        for texp, coef in swick.items():
            mom = sphere_moment(tuple(g + e for g, e in zip(gamma, texp)), m)
            if mom:
                total += coef * mom
        if not total:
            continue
        new_key = tuple(key[i] for i in keep)
        add = mv * total
        prev = acc.get(new_key)
        prev = add if prev is None else prev + add
        if prev:
            acc[new_key] = prev
        elif new_key in acc:
            del acc[new_key]
    if out_vars:
        return PolyMV._raw(F.dim, out_vars, acc)
    return acc.get((), Multivector.zero(F.dim))


# -- paired fast engine -----------------------------------------------------------
#
# Integrands are polynomials in u1 = <z,t>, u2 = <z,s>, u3 = <w,t>,
# u4 = <w,s>; results are polynomials in zz = <z,z>, zw = <z,w>,
# ww = <w,w> plus (only for integrands with a tau^dagger tau tail) a
# z-wedge-w bivector part.


def tau_pairing_monomials(pz, qz, pw, qw):
    """<z,tau>^pz <z,tau+>^qz <w,tau>^pw <w,tau+>^qw in pairing powers.

    tau = t + i s, tau+ = -t + i s; returns {(a1,a2,a3,a4): QQi} with
    a1..a4 the powers of <z,t>, <z,s>, <w,t>, <w,s>.
    """
    def side(p, q):
        out = {}
        for i in range(p + 1):
            for j in range(q + 1):
                a1 = (p - i) + (q - j)
                a2 = i + j
                # (u + iv)^p (-u + iv)^q term: C(p,i)C(q,j)(-1)^{q-j} i^{i+j}
                sign = -1 if (q - j) % 2 else 1
                c = comb(p, i) * comb(q, j) * sign
                ipow = (i + j) % 4
                re, im = ((c, 0), (0, c), (-c, 0), (0, -c))[ipow]
                key = (a1, a2)
                prev = out.get(key)
                add = QQi(re, im, 1)
                out[key] = add if prev is None else prev + add
        return {k: v for k, v in out.items() if v}

    zs = side(pz, qz)
    ws = side(pw, qw)
    out = {}
    for (a1, a2), c1 in zs.items():
        for (a3, a4), c2 in ws.items():
            key = (a1, a2, a3, a4)
            c = c1 * c2
            prev = out.get(key)
            out[key] = c if prev is None else prev + c
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _pair_counts(c, d):
    """Wick pairing counts for <u,g>^c <v,g>^d by number of cross pairs."""
    out = []
    for cross in range(min(c, d) + 1):
        if (c - cross) % 2 or (d - cross) % 2:
            continue
        cnt = (comb(c, cross) * comb(d, cross) * _fact(cross)
               * double_factorial(c - cross - 1) * double_factorial(d - cross - 1))
        out.append((cross, cnt))
    return tuple(out)


@lru_cache(maxsize=None)
def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


@lru_cache(maxsize=None)
def _proj_expand(cross, x, y):
    """Expand Pzw^cross Pzz^x Pww^y into (du1, du3, zz, zw, ww) monomials.

    Pzz = zz - u1^2, Pzw = zw - u1 u3, Pww = ww - u3^2.
    """
    out = {}
    for r in range(cross + 1):
        for s in range(x + 1):
            for t in range(y + 1):
                coef = comb(cross, r) * comb(x, s) * comb(y, t)
                if (r + s + t) % 2:
                    coef = -coef
                key = (r + 2 * s, r + 2 * t, x - s, cross - r, y - t)
                out[key] = out.get(key, 0) + coef
    return tuple((k, v) for k, v in out.items() if v)


@lru_cache(maxsize=None)
def _sphere_den(d, n):
    out = 1
    for r in range(n):
        out *= d + 2 * r
    return out


def _unnormalized_pair_sum(c, d):
    """Gaussian pair sum of <u,g>^c <v,g>^d expanded over projector entries."""
    out = {}
    for cross, cnt in _pair_counts(c, d):
        x = (c - cross) // 2
        y = (d - cross) // 2
        for key, coef in _proj_expand(cross, x, y):
            out[key] = out.get(key, 0) + cnt * coef
    return out


def stiefel_average_paired(pd, m: int, tail=False):
    """Frame average of a polynomial in the four pairings.

    ``pd`` maps (a1, a2, a3, a4) -> QQi for the monomial
    u1^a1 u2^a2 u3^a3 u4^a4.  With ``tail=True`` the integrand carries a
    right factor tau^dagger tau = 2 - 2i t s.

    Returns ``(A, B)``: dicts (zz_pow, zw_pow, ww_pow) -> QQi for the
    scalar part and the z-wedge-w bivector part.  B is empty whenever
    the integrand is even in s, which the kernels always are; it is
    computed (not assumed) so the parity cancellation is checked.
    """
    mid = {}   # (A, B, zz, zw, ww) -> QQi, scalar part after the s-stage
    midb = {}  # same keys plus struct in {"tz","tw"} for bivector carriers

    def bump(dct, key, val):
        prev = dct.get(key)
        val = val if prev is None else prev + val
        if val:
            dct[key] = val
        elif key in dct:
            del dct[key]

    for (a1, a2, a3, a4), coef in pd.items():
        if (a2 + a4) % 2 == 0:
            n = (a2 + a4) // 2
            den = _sphere_den(m - 1, n)
            for cross, cnt in _pair_counts(a2, a4):
                x = (a2 - cross) // 2
                y = (a4 - cross) // 2
                scale = QQi(cnt, 0, den)
                for (du, dw, pa, pb, pc), c2 in _proj_expand(cross, x, y):
                    bump(mid, (a1 + du, a3 + dw, pa, pb, pc),
                         coef * scale * c2)
        elif tail:
            # E_s[g s] = (a2 Pz S(a2-1,a4) + a4 Pw S(a2,a4-1)) / den;
            # then t.(Pz) = t^z and t.(Pw) = t^w exactly.
            n = (a2 + a4 + 1) // 2
            den = _sphere_den(m - 1, n)
            for struct, mult, c, d in (("tz", a2, a2 - 1, a4),
                                       ("tw", a4, a2, a4 - 1)):
                if not mult:
                    continue
                scale = QQi(mult, 0, den)
                for (du, dw, pa, pb, pc), c2 in _unnormalized_pair_sum(c, d).items():
                    bump(midb, (a1 + du, a3 + dw, pa, pb, pc, struct),
                         coef * scale * c2)

    A = {}
    for (au, bu, pa, pb, pc), coef in mid.items():
        if (au + bu) % 2:
            continue
        n = (au + bu) // 2
        den = _sphere_den(m, n)
        for cross, cnt in _pair_counts(au, bu):
            key = (pa + (au - cross) // 2, pb + cross, pc + (bu - cross) // 2)
            bump(A, key, coef * QQi(cnt, 0, den))

    B = {}
    for (au, bu, pa, pb, pc, struct), coef in midb.items():
        if (au + bu) % 2 == 0:
            continue
        n = (au + bu + 1) // 2
        den = _sphere_den(m, n)
        # E_t[u1^A u3^B t] = (A z S(A-1,B) + B w S(A,B-1)) / den, wedged
        # against z (struct tz) or w (struct tw); z^z and w^w drop.
        if struct == "tz" and bu:
            scale = QQi(-bu, 0, den)
            pairs = _unnormalized_pair_sum(au, bu - 1)
        elif struct == "tw" and au:
            scale = QQi(au, 0, den)
            pairs = _unnormalized_pair_sum(au - 1, bu)
        else:
            continue
        for (du, dw, qa, qb, qc), c2 in pairs.items():
            if du or dw:
                raise AssertionError("pair sum left residual frame powers")
            bump(B, (pa + qa, pb + qb, pc + qc), coef * scale * c2)

    if tail:
        A = {k: v * QQi(2) for k, v in A.items()}
        B = {k: v * QQi(0, -2, 1) for k, v in B.items()}
    return A, B


def invariants_to_polymv(A, B, m, var1, var2) -> PolyMV:
    """Expand invariant-coefficient dicts into an explicit PolyMV."""
    zz = norm_sq(var1, m)
    zw = pairing(var1, var2, m)
    ww = norm_sq(var2, m)
    wedge_part = None
    if B:
        wedge_part = wedge(vector_variable(var1, m), vector_variable(var2, m))
    powers = {}

    def inv_power(a, b, c):
        key = (a, b, c)
        if key not in powers:
            powers[key] = zz ** a * zw ** b * ww ** c
        return powers[key]

    out = PolyMV.zero(m, (var1, var2))
    for (a, b, c), coef in A.items():
        out = out + inv_power(a, b, c) * coef
    for (a, b, c), coef in B.items():
        out = out + inv_power(a, b, c) * wedge_part * coef
    return out


# -- Monte-Carlo oracle ------------------------------------------------------------


def _compiled_terms(p: PolyMV):
    rows = []
    for key, mv in p.terms.items():
        exps = [np.array(a, dtype=np.int64) for a in key]
        coeffs = {b: c.to_complex() for b, c in mv.terms.items()}
        rows.append((exps, coeffs))
    return rows


def _eval_terms(rows, points):
    """points: list of (n, m) arrays, one per variable; returns {blade: (n,)}."""
    n = points[0].shape[0]
    vals = {}
    for exps, coeffs in rows:
        factor = np.ones(n, dtype=np.complex128)
        for arr, alpha in zip(points, exps):
            nz = np.nonzero(alpha)[0]
            for j in nz:
                factor = factor * arr[:, j] ** int(alpha[j])
        for blade, c in coeffs.items():
            if blade in vals:
                vals[blade] += factor * c
            else:
                vals[blade] = factor * c
    return vals


def _summarize(vals, samples):
    out = {}
    for blade, arr in vals.items():
        mean = complex(arr.mean())
        var = float(arr.real.var(ddof=1) + arr.imag.var(ddof=1)) if samples > 1 else 0.0
        out[blade] = (mean, (var / samples) ** 0.5)
    return out


def _unit_rows(rng, n, m):
    g = rng.standard_normal((n, m))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def mc_sphere_integral(p: PolyMV, m: int, samples: int, seed: int):
    """Monte-Carlo estimate of sphere_integral for a one-variable input."""
    if len(p.vars) != 1:
        raise UnknownVariable("mc_sphere_integral expects one variable")
    rng = np.random.default_rng(seed)
    omega = _unit_rows(rng, samples, m)
    vals = _eval_terms(_compiled_terms(p), [omega])
    return _summarize(vals, samples)


def mc_lie_sphere_integral(pieces, m: int, samples: int, seed: int):
    """Monte-Carlo estimate of lie_sphere_integral (numeric pieces only)."""
    rng = np.random.default_rng(seed)
    omega = _unit_rows(rng, samples, m)
    theta = rng.uniform(0.0, np.pi, samples)
    vals = {}
    for plus, minus, poly in pieces:
        phase = np.exp(1j * theta * (plus - minus))
        pv = _eval_terms(_compiled_terms(poly), [omega])
        for blade, arr in pv.items():
            contrib = arr * phase
            if blade in vals:
                vals[blade] += contrib
            else:
                vals[blade] = contrib
    return _summarize(vals, samples)


def mc_stiefel_average(F: PolyMV, m: int, samples: int, seed: int,
                       tvar="t", svar="s"):
    """Monte-Carlo frame average: t uniform on the sphere, s uniform on
    the sphere of the tangent space at t, evaluated per coefficient."""
    if set(F.vars) != {tvar, svar}:
        raise UnknownVariable("mc_stiefel_average expects exactly (t, s)")
    F = F.with_vars((tvar, svar))
    rng = np.random.default_rng(seed)
    t = _unit_rows(rng, samples, m)
    g = rng.standard_normal((samples, m))
    g = g - (g * t).sum(axis=1, keepdims=True) * t
    s = g / np.linalg.norm(g, axis=1, keepdims=True)
    vals = _eval_terms(_compiled_terms(F), [t, s])
    return _summarize(vals, samples)
