"""Zonal spherical harmonics and zonal spherical monogenics.

Both kernels are built directly in the monomial basis: Gegenbauer parity
lets |x|^k |y|^k C_k(<x,y>/(|x||y|)) expand into the genuine polynomial
sum over <x,y>^{k-2j} (|x|^2 |y|^2)^j, so nothing is ever a rational
function and the kernels are defined at the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import PolyMV, norm_sq, pairing, vector_variable
from .special import gegenbauer


@dataclass(frozen=True)
class ZonalKernel:
    """Bi-homogeneous reproducing kernel of degree k in each variable."""

    m: int
    k: int
    kind: str          # "K" (harmonic) or "C" (monogenic)
    body: PolyMV       # polynomial in ("x", "y")


def _gegenbauer_body(m, k, lam, xvar, yvar):
    """|x|^k |y|^k C_k^lam(t) expanded into monomials; scalar-valued."""
    coeffs = gegenbauer(k, lam).coeffs
    pxy = pairing(xvar, yvar, m)
    r2 = norm_sq(xvar, m) * norm_sq(yvar, m)
    out = PolyMV.zero(m, (xvar, yvar))
    # only degrees of the same parity as k appear
    for d in range(k % 2, k + 1, 2):
        if d < len(coeffs) and coeffs[d]:
            j = (k - d) // 2
            out = out + pxy ** d * r2 ** j * coeffs[d]
    return out


def zonal_harmonic(m: int, k: int, xvar="x", yvar="y") -> ZonalKernel:
    """K_{m,k}(x,y) = (2k+m-2)/(m-2) |x|^k |y|^k C_k^{m/2-1}(t)."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    lam = Fraction(m, 2) - 1
    body = _gegenbauer_body(m, k, lam, xvar, yvar) * Fraction(2 * k + m - 2, m - 2)
    return ZonalKernel(m, k, "K", body)


def zonal_monogenic(m: int, k: int, xvar="x", yvar="y") -> ZonalKernel:
    """C_{m,k}(x,y) = (|x||y|)^k (C_k^{m/2}(t) + xy/(|x||y|) C_{k-1}^{m/2}(t))."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    lam = Fraction(m, 2)
    body = _gegenbauer_body(m, k, lam, xvar, yvar)
    if k >= 1:
        xy = vector_variable(xvar, m) * vector_variable(yvar, m)
        body = body + xy * _gegenbauer_body(m, k - 1, lam, xvar, yvar)
    return ZonalKernel(m, k, "C", body)


def harmonic_monogenic_relation_check(m: int, k: int) -> bool:
    """Exact check of K_{m,k+1} = C_{m,k+1} - x C_{m,k}(x,y) y."""
    lhs = zonal_harmonic(m, k + 1).body
    x = vector_variable("x", m)
    y = vector_variable("y", m)
    rhs = zonal_monogenic(m, k + 1).body - x * zonal_monogenic(m, k).body * y
    return lhs == rhs
