"""Harmonic and monogenic Fischer decompositions.

The harmonic tower of a homogeneous polynomial is produced by the
explicit projection operator (a finite sum of |x|^{2j} Delta^{j+l} terms
with rational coefficients); the monogenic tower is then obtained by
splitting each harmonic layer into M_k + x M_{k-1}.  Each step is
independently testable and the recombinations are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import GradeError
from .poly import FischerComponent, PolyMV, dirac_left, laplacian, norm_sq, vector_variable
from .special import gamma_ratio


@dataclass(frozen=True)
class HarmonicTower:
    """Layers (j, H_{k-2j}) of P = sum |x|^{2j} H_{k-2j}."""

    k: int
    components: tuple

    def recombine(self, var, m) -> PolyMV:
        r2 = norm_sq(var, m)
        out = PolyMV.zero(m, (var,))
        for j, h in self.components:
            out = out + r2 ** j * h
        return out


@dataclass(frozen=True)
class MonogenicTower:
    """Slots x^a M_{k-a} of P = sum x^a M_{k-a}."""

    k: int
    components: tuple   # of FischerComponent

    def recombine(self, var, m) -> PolyMV:
        x = vector_variable(var, m)
        out = PolyMV.zero(m, (var,))
        for comp in self.components:
            out = out + x ** comp.a * comp.M
        return out


def projection_coefficient(j: int, k: int, ell: int, m: int) -> Fraction:
    """Coefficient of |x|^{2j} Delta^{j+l} in the harmonic projection."""
    half_m = Fraction(m, 2)
    num = half_m + k - 2 * ell - 1
    if j % 2:
        num = -num
    den = Fraction(4) ** (j + ell)
    for i in range(2, j + 1):
        den *= i
    for i in range(2, ell + 1):
        den *= i
    return (num / den) * gamma_ratio(half_m + k - 2 * ell - j - 1, half_m + k - ell)


def proj_harmonic(P: PolyMV, ell: int, var=None) -> PolyMV:
    """Harmonic component H_{k-2l} of a k-homogeneous polynomial."""
    if var is None:
        var = P.vars[0]
    if not P.is_homogeneous(var):
        raise GradeError("projection needs a homogeneous input")
    if P.is_zero():
        return P
    k = P.degree(var)
    if not 0 <= 2 * ell <= k:
        raise GradeError(f"l={ell} outside 0..floor({k}/2)")
    m = P.dim
    r2 = norm_sq(var, m)
    out = PolyMV.zero(m, P.vars)
    lap = P
    for _ in range(ell):
        lap = laplacian(lap, var)
    for j in range(k // 2 - ell + 1):
        coeff = projection_coefficient(j, k, ell, m)
        if coeff and lap:
            out = out + r2 ** j * lap * coeff
        lap = laplacian(lap, var)
    return out


def harmonic_tower(P: PolyMV, var=None) -> HarmonicTower:
    """Full harmonic Fischer decomposition of a homogeneous polynomial."""
    if var is None:
        var = P.vars[0]
    k = max(P.degree(var), 0)
    comps = []
    for ell in range(k // 2 + 1):
        h = proj_harmonic(P, ell, var)
        if h:
            comps.append((ell, h))
    return HarmonicTower(k, tuple(comps))


def harmonic_to_monogenic(H: PolyMV, var=None):
    """Split a degree-k harmonic as H = M_k + x M_{k-1}, both monogenic."""
    if var is None:
        var = H.vars[0]
    if laplacian(H, var):
        raise GradeError("input is not harmonic")
    if H.is_zero():
        return H, H
    k = H.degree(var)
    m = H.dim
    dH = dirac_left(H, var)
    if not dH:
        return H, PolyMV.zero(m, H.vars)
    scale = Fraction(-1, 2 * k + m - 2)
    M_lower = dH * scale
    x = vector_variable(var, m)
    M_top = H - x * M_lower
    return M_top, M_lower


def monogenic_fischer(P: PolyMV, var=None) -> MonogenicTower:
    """Monogenic Fischer tower of a homogeneous polynomial.

    Computed by iterating the two-term harmonic split over the harmonic
    tower; |x|^{2j} = (-1)^j x^{2j} converts radial powers into vector
    powers.  The zero polynomial yields an empty tower.
    """
    if var is None:
        var = P.vars[0]
    if not P.is_homogeneous(var):
        raise GradeError("Fischer decomposition needs a homogeneous input")
    k = max(P.degree(var), 0)
    slots = {}
    for j, h in harmonic_tower(P, var).components:
        top, lower = harmonic_to_monogenic(h, var)
        sign = -1 if j % 2 else 1
        for a, M in ((2 * j, top), (2 * j + 1, lower)):
            if M:
                M = M * sign
                if a in slots:
                    slots[a] = slots[a] + M
                else:
                    slots[a] = M
    comps = tuple(FischerComponent(a, k, slots[a]) for a in sorted(slots))
    return MonogenicTower(k, comps)


def almansi_assemble(Ms, Ns, var="z", m=None) -> PolyMV:
    """Assemble sum_k M_k + z sum_l N_l from monogenic components."""
    pieces = list(Ms) + list(Ns)
    if not pieces and m is None:
        raise ValueError("need dimension for an empty assembly")
    m = m if m is not None else pieces[0].dim
    x = vector_variable(var, m)
    out = PolyMV.zero(m, (var,))
    for M in Ms:
        M = M.rename_var(M.vars[0], var) if M.vars and M.vars[0] != var else M
        if dirac_left(M, var):
            raise GradeError("Almansi component is not monogenic")
        out = out + M
    for N in Ns:
        N = N.rename_var(N.vars[0], var) if N.vars and N.vars[0] != var else N
        if dirac_left(N, var):
            raise GradeError("Almansi component is not monogenic")
        out = out + x * N
    return out
