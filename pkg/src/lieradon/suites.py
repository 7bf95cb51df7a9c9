"""Batch verification suites with machine-readable reports.

Every case compares two independently computed objects and reports
``exact-pass``/``exact-fail`` (or ``mc-pass``/``mc-fail`` for the
statistical oracle).  Reports are deterministic: cases are sorted by id,
no timestamps are recorded, and hashes are taken over canonical text
serializations, so identical configs produce byte-identical JSON.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .algebra import Multivector
from .errors import LieRadonError
from .generators import (random_harmonic, random_monogenic, random_multivector,
                         random_polynomial, random_spin_element)
from .integrate import (invariants_to_polymv, mc_sphere_integral, mc_stiefel_average,
                        ol2_inner, sphere_integral, stiefel_average,
                        stiefel_average_paired, tau_pairing_monomials, theta_integral)
from .poly import (PolyMV, dirac_left, dirac_right, euler, gamma_op, laplacian,
                   norm_sq, pairing, scalar_pairing, vector_variable)
from .scalar import QQi
from .special import gamma_ratio, gegenbauer, gegenbauer_contiguous_check
from .transforms import (basis_f, basis_psi, canonical_frame,
                         dual_radon_compose, hua_radon, hua_radon_via_basis,
                         invert_hua, invert_polarized, phi_coefficient,
                         phi_coefficient_xi_sum, polarized_hua_radon, random_frame,
                         rho_coefficient, rho_printed_lower_limit_zero,
                         tau_pairing_poly, theta_coefficient, vartheta_coefficient)
from .zonal import harmonic_monogenic_relation_check, zonal_harmonic, zonal_monogenic


@dataclass
class SuiteConfig:
    m_values: tuple = (3, 4, 5)
    max_degree: int = 4
    frame_mode: str = "canonical"       # or "random"
    seed: int = 1
    mc_samples: int = 100_000
    report_path: str = ""
    jobs: int = 1

    def __post_init__(self):
        self.m_values = tuple(self.m_values)
        if any(m < 3 for m in self.m_values):
            raise ValueError("dimensions must be >= 3")
        if self.max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        if self.frame_mode not in ("canonical", "random"):
            raise ValueError("frame_mode must be canonical|random")


def _hash(obj) -> str:
    if isinstance(obj, PolyMV) or isinstance(obj, Multivector):
        text = obj.to_text()
    else:
        text = repr(obj)
    return hashlib.sha256(text.encode()).hexdigest()


def _result(ok, lhs, rhs, details="", mc=False):
    status = ("mc-pass" if ok else "mc-fail") if mc else \
             ("exact-pass" if ok else "exact-fail")
    return {"status": status, "lhs_hash": _hash(lhs), "rhs_hash": _hash(rhs),
            "details": details}


def _frame_for(m, mode, seed, index=0):
    if mode == "canonical" and index == 0:
        return canonical_frame(m)
    return random_frame(m, random.Random((seed, m, index)))


# -- individual cases -----------------------------------------------------------
# Each case function takes a primitive params tuple so the runner can
# dispatch them across processes.


def case_clifford_relations(params):
    (m, seed) = params
    rng = random.Random(seed)
    es = [Multivector.basis_vector(m, j + 1) for j in range(m)]
    ok = all(es[j] * es[j] == Multivector.scalar(m, -1) for j in range(m))
    ok = ok and all((es[j] * es[k] + es[k] * es[j]).is_zero()
                    for j in range(m) for k in range(m) if j != k)
    a, b, c = (random_multivector(m, rng) for _ in range(3))
    ok = ok and (a * b) * c == a * (b * c)
    ok = ok and a * (b + c) == a * b + a * c
    return _result(ok, ok, True, "relations, associativity, distributivity")


def case_hermitian(params):
    (m, seed) = params
    rng = random.Random(seed)
    a, b = random_multivector(m, rng), random_multivector(m, rng)
    ok = (a * b).dagger() == b.dagger() * a.dagger()
    ok = ok and a.dagger().dagger() == a
    expected = QQi(0)
    for c in a.terms.values():
        expected = expected + c * c.conjugate()
    ok = ok and (a.dagger() * a).grade(0) == Multivector.scalar(m, expected)
    return _result(ok, ok, True, "antiautomorphism, involution, norm identity")


def case_frame_identities(params):
    (m, mode, seed, index) = params
    fr = _frame_for(m, mode, seed, index)
    ok = fr.lemma_identities_hold()
    return _result(ok, fr.tau(), fr.tau_dagger(), "tau tau+ tau = 4 tau etc.")


def case_spin_sandwich(params):
    (m, seed) = params
    rng = random.Random(seed)
    sig = random_spin_element(m, rng)
    v = random_multivector(m, rng).grade(1) + Multivector.basis_vector(m, 1)
    img = sig.act(v)
    ok = img.is_one_vector()
    ok = ok and (img * img) == (v * v)
    a, b = random_multivector(m, rng), random_multivector(m, rng)
    ok = ok and sig.act(a * b) == sig.act(a) * sig.act(b)
    return _result(ok, img * img, v * v, "norm and product preservation")


def case_dirac_squared(params):
    (m, seed, degree) = params
    rng = random.Random(seed)
    p = random_polynomial(m, "z", degree, rng)
    lhs = dirac_left(dirac_left(p, "z"), "z")
    rhs = -laplacian(p, "z")
    return _result(lhs == rhs, lhs, rhs, "dirac^2 = -laplacian")


def case_iterated_laplacian(params):
    (m, k, l) = params
    fr = canonical_frame(m)
    cur = basis_f(fr, k, l)
    ok = True
    for j in range(1, min(k, l) + 1):
        cur = laplacian(cur, "z")
        scale = Fraction((-4) ** j * factorial(k) * factorial(l),
                         factorial(k - j) * factorial(l - j))
        ok = ok and cur == basis_f(fr, k - j, l - j) * scale
    ok = ok and laplacian(cur, "z").is_zero()
    return _result(ok, ok, True,
                   f"scaled descent through j={min(k, l)}, then annihilation")


def case_euler_gamma(params):
    (m, t, a, seed) = params
    rng = random.Random(seed)
    M = random_monogenic(m, "z", t - a, rng)
    z = vector_variable("z", m)
    f = z ** a * M
    ok = euler(f, "z") == f * t
    gamma = gamma_op(f, "z")
    if a % 2 == 0:
        ok = ok and gamma == f * (a - t)
    else:
        # odd power 2n+1 with monogenic degree t-2n-1: eigenvalue t-2n+m-2
        n = a // 2
        ok = ok and gamma == f * (t - 2 * n + m - 2)
    return _result(ok, ok, True, "Euler and Gamma eigenvalues on z^a M")


def case_zonal_structure(params):
    (m, k) = params
    K = zonal_harmonic(m, k).body
    C = zonal_monogenic(m, k).body
    ok = laplacian(K, "x").is_zero() and laplacian(K, "y").is_zero()
    ok = ok and dirac_left(C, "x").is_zero() and dirac_right(C, "y").is_zero()
    ok = ok and all(g == 0 for g in K.coefficient_grades())
    swapped = C.rename_var("x", "_u").rename_var("y", "x").rename_var("_u", "y")
    ok = ok and swapped.with_vars(("x", "y")) == C.dagger()
    return _result(ok, ok, True, "harmonicity, monogenicity, hermitian symmetry")


def case_zonal_relation(params):
    (m, k) = params
    ok = harmonic_monogenic_relation_check(m, k)
    return _result(ok, ok, True, "K_{m,k+1} = C_{m,k+1} - x C_{m,k} y")


def case_zonal_reproducing(params):
    (m, j, k, kind, lie, seed) = params
    rng = random.Random(seed)
    if kind == "K":
        ker = zonal_harmonic(m, j, "x", "w").body
        target = random_harmonic(m, "w", k, rng)
    else:
        ker = zonal_monogenic(m, j, "x", "w").body
        target = random_monogenic(m, "w", k, rng)
    prod = ker * target
    if lie:
        # integrate K(z, e^{-i th} w) f(e^{i th} w) over the Lie sphere
        th = theta_integral(k - j)
        integ = sphere_integral(prod, m, "w")
        if th.inv_pi_part and not integ.is_zero():
            return _result(False, integ, "nonzero", "parity violation")
        got = integ * th.rational_part if th.rational_part else \
            PolyMV.zero(m, ("x",))
        if not isinstance(got, PolyMV):
            got = PolyMV.constant(m, got, ("x",))
    else:
        got = sphere_integral(prod, m, "w")
        if not isinstance(got, PolyMV):
            got = PolyMV.constant(m, got, ("x",))
    expect = target.rename_var("w", "x") if j == k else PolyMV.zero(m, ("x",))
    return _result(got == expect, got, expect,
                   f"delta_{{jk}} reproducing ({'Lie sphere' if lie else 'sphere'})")


def case_zonal_spin_invariance(params):
    (m, k, seed) = params
    rng = random.Random(seed)
    sig = random_spin_element(m, rng)
    mat = sig.rotation_matrix()
    K = zonal_harmonic(m, k).body
    moved = K.rotate_var("x", mat).rotate_var("y", mat)
    smv = sig.sigma()
    sbar = sig.sigma_bar()
    lhs_terms = {key: smv * mv * sbar for key, mv in moved.terms.items()}
    lhs = PolyMV(m, moved.vars, lhs_terms)
    return _result(lhs == K, lhs, K, "sigma K(sigma_bar x sigma, ...) sigma_bar = K")


def case_lemma_stiefel_value(params):
    (m, j) = params
    # paired engine evaluated at x = y = unit vector vs the closed form
    pd = tau_pairing_monomials(j, j, 0, 0)
    A, B = stiefel_average_paired(pd, m)
    total = QQi(0)
    for (pa, pb, pc), coef in A.items():
        total = total + coef        # zz = zw = ww = 1 on the unit diagonal
    if B:
        return _result(False, "bivector", "scalar", "unexpected bivector part")
    sign = -1 if j % 2 else 1
    expect = sign * factorial(j) / gamma_ratio(Fraction(m, 2) + j, Fraction(m, 2))
    got = total.as_fraction()
    details = f"(-1)^j Gamma(m/2) j! / Gamma(m/2+j) at j={j}"
    if j <= 2:
        # cross-check with the generic monomial engine at a concrete omega
        p = tau_pairing_poly("x", m) ** j * tau_pairing_poly("x", m, dagger=True) ** j
        conc = p.subst({"x": [1] + [0] * (m - 1)})
        val = stiefel_average(conc, m)
        if val != Multivector.scalar(m, expect):
            return _result(False, val, expect, "generic engine disagrees")
        details += "; generic engine agrees"
    return _result(got == expect, got, expect, details)


def case_cor_theta_identity(params):
    (m, k, l) = params
    pd = tau_pairing_monomials(k, l, l, k)
    A, B = stiefel_average_paired(pd, m)
    if B:
        return _result(False, "bivector", "scalar", "unexpected bivector part")
    lhs = invariants_to_polymv(A, B, m, "x", "y")
    nx, ny = norm_sq("x", m), norm_sq("y", m)
    rhs = PolyMV.zero(m, ("x", "y"))
    for j in range(min(k, l) + 1):
        rhs = rhs + nx ** j * zonal_harmonic(m, k + l - 2 * j).body * ny ** j \
            * theta_coefficient(j, k, l, m)
    return _result(lhs == rhs, lhs, rhs, "frame average = sum theta |x|^2j K |y|^2j")


def case_vartheta_identity(params):
    (m, k) = params
    pd = tau_pairing_monomials(k, k, k, k)
    A, B = stiefel_average_paired(pd, m, tail=True)
    lhs = invariants_to_polymv(A, B, m, "x", "y")
    xv, yv = vector_variable("x", m), vector_variable("y", m)
    rhs = PolyMV.zero(m, ("x", "y"))
    for j in range(2 * k + 1):
        rhs = rhs + xv ** j * zonal_monogenic(m, 2 * k - j).body * yv ** j \
            * vartheta_coefficient(j, k, m)
    return _result(lhs == rhs, lhs, rhs,
                   "tau+tau average = sum vartheta x^j C y^j")


def case_pfaff_saalschutz(params):
    (m, k, l, n) = params
    from .special import hypergeometric_terminating, pfaff_saalschutz_rhs
    hm = Fraction(m, 2)
    p = l - n
    a = -hm - k - l + n + 1
    b = -k + n
    c = -k - l + n
    d = a + b - c + 1 - p
    lhs = hypergeometric_terminating([-p, a, b], [c, d], p)
    rhs = pfaff_saalschutz_rhs(p, a, b, c)
    return _result(lhs == rhs, lhs, rhs, "balanced 3F2 sum")


def case_gegenbauer_value(params):
    (m, k) = params
    lam = Fraction(m, 2) - 1
    lhs = gegenbauer(k, lam)(1)
    rhs = gamma_ratio(m - 2 + k, m - 2) / factorial(k)
    contig = gegenbauer_contiguous_check(k, m) if k >= 2 else True
    parity = all(c == 0 for i, c in enumerate(gegenbauer(k, lam).coeffs)
                 if (i - k) % 2)
    ok = lhs == rhs and contig and parity
    return _result(ok, lhs, rhs, "value at 1, contiguous relation, parity")


def case_phi_routes(params):
    (m, t, n) = params
    a = phi_coefficient(t, n, m)
    b = phi_coefficient_xi_sum(t, n, m)
    return _result(a == b, a, b, "4F3 route vs xi-sum route")


def case_rho_branch(params):
    (m, t, a) = params
    main = rho_coefficient(t, a, m)
    printed = rho_printed_lower_limit_zero(t, a, m)
    detail = ("printed lower limit s=0 agrees once out-of-range frame "
              "averages are read as absent (they match the s=n form)")
    return _result(main == printed, main, printed, detail)


def case_known_scalars(params):
    (m,) = params
    checks = []
    checks.append(phi_coefficient(0, 0, m) == 1)
    one = PolyMV.constant(m, 1, ("z",))
    checks.append(dual_radon_compose("hua", one, m)
                  == one * phi_coefficient(0, 0, m))
    checks.append(rho_coefficient(0, 0, m) == Fraction(1, 2))
    checks.append(dual_radon_compose("polarized", one, m) == one * Fraction(1, 2))
    checks.append(theta_coefficient(0, 1, 0, m) == Fraction(-2, m * m))
    pd = tau_pairing_monomials(1, 0, 0, 1)
    A, B = stiefel_average_paired(pd, m)
    got = invariants_to_polymv(A, B, m, "x", "y")
    checks.append(got == pairing("x", "y", m) * Fraction(-2, m))
    ok = all(checks)
    return _result(ok, checks, [True] * len(checks),
                   "phi00, rho00, theta010, Stiefel j=1, each via two routes")


def case_coefficient_zero_scan(params):
    (m, tmax) = params
    zeros = []
    for t in range(tmax + 1):
        for n in range(t // 2 + 1):
            if phi_coefficient(t, n, m) == 0:
                zeros.append(("phi", t, n))
        for a in range(t + 1):
            if rho_coefficient(t, a, m) == 0:
                zeros.append(("rho", t, a))
    return _result(not zeros, zeros, [],
                   "no vanishing inversion coefficients in range" if not zeros
                   else f"zeros detected: {zeros}")


def case_reproducing_basis(params):
    (m, k, l, mode, seed) = params
    fr = _frame_for(m, mode, seed)
    fb = basis_f(fr, k, l)
    got = hua_radon(fr, fb)
    return _result(got == fb, got, fb, "kernel reproduces f_{tau,k,l}")


def case_reproducing_psi(params):
    (m, alpha, k, mode, seed) = params
    fr = _frame_for(m, mode, seed)
    ps = basis_psi(fr, alpha, k)
    got = polarized_hua_radon(fr, ps)
    return _result(got == ps, got, ps, "polarized kernel reproduces psi")


def case_psi_orthogonality(params):
    (m, s1, s2, seed) = params
    fr = _frame_for(m, "canonical", seed)
    p1 = basis_psi(fr, s1, 1)
    p2 = basis_psi(fr, s2, 1)
    val = ol2_inner(p1, p2, m)
    ok = val.is_zero() if s1 != s2 else not val.is_zero()
    return _result(ok, val, Multivector.zero(m),
                   "distinct psi spaces are orthogonal, diagonal is not")


def case_norm_orthogonality(params):
    (m, k, l, k2, l2) = params
    fr = canonical_frame(m)
    f1 = basis_f(fr, k, l)
    f2 = basis_f(fr, k2, l2)
    val = ol2_inner(f1, f2, m)
    if (k, l) == (k2, l2):
        expect = Multivector.scalar(
            m, factorial(k + l) / gamma_ratio(Fraction(m, 2) + k + l, Fraction(m, 2)))
    else:
        expect = Multivector.zero(m)
    return _result(val == expect, val, expect,
                   "normalized OL2 Gram structure of the basis")


def case_idempotence(params):
    (m, kind, seed, degree) = params
    rng = random.Random(seed)
    fr = canonical_frame(m)
    f = random_polynomial(m, "z", degree, rng)
    op = hua_radon if kind == "hua" else polarized_hua_radon
    once = op(fr, f)
    twice = op(fr, once, max(f.degree(), 0))
    return _result(once == twice, twice, once, "projection is idempotent")


def case_route_equivalence(params):
    (m, seed, degree) = params
    rng = random.Random(seed)
    fr = canonical_frame(m)
    f = random_polynomial(m, "z", degree, rng)
    r1 = hua_radon(fr, f)
    r2 = hua_radon_via_basis(fr, f)
    return _result(r1 == r2, r1, r2, "kernel route equals basis-expansion route")


def case_truncation_exactness(params):
    (m, d, seed) = params
    rng = random.Random(seed)
    fr = canonical_frame(m)
    f = random_polynomial(m, "z", d, rng, homogeneous=True)
    r1 = hua_radon(fr, f, d)
    r2 = hua_radon(fr, f, d + 2)
    return _result(r1 == r2, r1, r2, "higher kernel truncation adds exactly 0")


def case_orthocomplement(params):
    (m,) = params
    fr = canonical_frame(m)
    basis = [basis_f(fr, k, l) for k, l in ((2, 0), (1, 1), (0, 2))]
    v = norm_sq("z", m) + scalar_pairing(
        "z", Multivector.basis_vector(m, 3)) * scalar_pairing(
        "z", Multivector.basis_vector(m, 1))
    for fb in basis:
        norm = ol2_inner(fb, fb, m).scalar_part()
        coeff = ol2_inner(fb, v, m)
        v = v - fb * (coeff * (QQi(1) / norm))
    got = hua_radon(fr, v)
    ok = got.is_zero() and not v.is_zero()
    return _result(ok, got, PolyMV.zero(m, ("z",)),
                   "Gram-Schmidt complement of the degree-2 span maps to 0")


def case_dual_eigenvalue(params):
    (m, t, n, seed) = params
    rng = random.Random(seed)
    H = random_harmonic(m, "z", t - 2 * n, rng)
    f = vector_variable("z", m) ** (2 * n) * H
    got = dual_radon_compose("hua", f, m)
    expect = f * phi_coefficient(t, n, m)
    return _result(got == expect, got, expect,
                   "composed transform multiplies z^{2n} H by phi")


def case_dual_eigenvalue_polarized(params):
    (m, t, a, seed) = params
    rng = random.Random(seed)
    M = random_monogenic(m, "z", t - a, rng)
    f = vector_variable("z", m) ** a * M
    got = dual_radon_compose("polarized", f, m)
    expect = f * rho_coefficient(t, a, m)
    return _result(got == expect, got, expect,
                   "composed polarized transform multiplies z^a M by rho")


def case_invert_roundtrip(params):
    (m, kind, seed, degree) = params
    rng = random.Random(seed)
    Ms = [random_monogenic(m, "z", k, rng) for k in range(0, degree + 1, 2)]
    Ns = [random_monogenic(m, "z", k, rng) for k in range(1, degree, 2)]
    from .fischer import almansi_assemble
    f = almansi_assemble(Ms, Ns, "z", m)
    g = dual_radon_compose(kind, f, m)
    back = invert_hua(g, m) if kind == "hua" else invert_polarized(g, m)
    return _result(back == f, back, f, "inversion recovers the Almansi input")


def case_polarized_constant(params):
    (m,) = params
    fr = canonical_frame(m)
    one = PolyMV.constant(m, 1, ("z",))
    got = polarized_hua_radon(fr, one)
    expect = PolyMV.constant(
        m, Multivector.scalar(m, 1) - fr.tau_dagger() * fr.tau() * Fraction(1, 4),
        ("z",))
    return _result(got == expect, got, expect, "transform of 1 is 1 - tau+tau/4")


def case_mc_stiefel(params):
    (m, j, samples, seed) = params
    p = tau_pairing_poly("x", m) ** j * tau_pairing_poly("x", m, dagger=True) ** j
    conc = p.subst({"x": [1] + [0] * (m - 1)})
    sign = -1 if j % 2 else 1
    exact = sign * factorial(j) / gamma_ratio(Fraction(m, 2) + j, Fraction(m, 2))
    est = mc_stiefel_average(conc, m, samples, seed)
    mean, err = est[0]
    z = abs(mean - float(exact)) / err if err else 0.0
    return _result(z < 5.0, f"{mean:.6g}", f"{float(exact):.6g}",
                   f"z={z:.3f} at {samples} samples", mc=True)


def case_mc_random_stiefel(params):
    (m, samples, seed) = params
    rng = random.Random(seed)
    p = tau_pairing_poly("x", m)
    pd = tau_pairing_poly("x", m, dagger=True)
    F = (p * pd).subst({"x": [Fraction(rng.randint(-2, 2), rng.randint(1, 3))
                              for _ in range(m)]})
    F2 = F * F
    exact = stiefel_average(F2, m)
    est = mc_stiefel_average(F2, m, samples, seed)
    zs = []
    exact_c = {b: c.to_complex() for b, c in exact.terms.items()}
    ok = True
    for blade, (mean, err) in est.items():
        target = exact_c.get(blade, 0j)
        z = abs(mean - target) / err if err else abs(mean - target)
        zs.append(round(z, 3))
        ok = ok and (z < 5.0 if err else abs(mean - target) < 1e-12)
    return _result(ok, f"{sorted(est)}", f"{sorted(exact_c)}",
                   f"z-scores {zs} at {samples} samples", mc=True)


def case_mc_sphere(params):
    (m, samples, seed, degree) = params
    rng = random.Random(seed)
    f = random_polynomial(m, "w", degree, rng, scalar=True)
    f = f * f.dagger()
    exact = sphere_integral(f, m)
    est = mc_sphere_integral(f, m, samples, seed)
    exact_c = {b: c.to_complex() for b, c in exact.terms.items()}
    ok = True
    zs = []
    for blade, (mean, err) in est.items():
        target = exact_c.get(blade, 0j)
        z = abs(mean - target) / err if err else abs(mean - target)
        zs.append(round(z, 3))
        ok = ok and (z < 5.0 if err else abs(mean - target) < 1e-12)
    return _result(ok, f"{sorted(est)}", f"{sorted(exact_c)}",
                   f"z-scores {zs} at {samples} samples", mc=True)


CASE_FNS = {fn.__name__: fn for fn in (
    case_clifford_relations, case_hermitian, case_frame_identities,
    case_spin_sandwich, case_dirac_squared, case_iterated_laplacian,
    case_euler_gamma, case_zonal_structure, case_zonal_relation,
    case_zonal_reproducing, case_zonal_spin_invariance,
    case_lemma_stiefel_value, case_cor_theta_identity, case_vartheta_identity,
    case_pfaff_saalschutz, case_gegenbauer_value, case_phi_routes,
    case_rho_branch, case_known_scalars, case_coefficient_zero_scan,
    case_reproducing_basis, case_reproducing_psi, case_psi_orthogonality,
    case_norm_orthogonality, case_idempotence, case_route_equivalence,
    case_truncation_exactness, case_orthocomplement, case_dual_eigenvalue,
    case_dual_eigenvalue_polarized, case_invert_roundtrip,
    case_polarized_constant, case_mc_stiefel, case_mc_random_stiefel,
    case_mc_sphere,
)}


# -- suite assembly ---------------------------------------------------------------


def _lemmas_cases(cfg: SuiteConfig):
    cases = []
    n_frames = 20 if cfg.frame_mode == "random" else 1
    for m in cfg.m_values:
        cases.append((f"clifford-relations[m={m}]", "case_clifford_relations",
                      (m, cfg.seed), {"m": m}))
        cases.append((f"hermitian[m={m}]", "case_hermitian",
                      (m, cfg.seed + 1), {"m": m}))
        cases.append((f"frame-identities[m={m},i=0,canonical]",
                      "case_frame_identities", (m, "canonical", cfg.seed, 0),
                      {"m": m, "frame": "canonical"}))
        for i in range(1, n_frames + 1):
            cases.append((f"frame-identities[m={m},i={i}]",
                          "case_frame_identities", (m, "random", cfg.seed, i),
                          {"m": m, "frame": "random", "i": i}))
        cases.append((f"spin-sandwich[m={m}]", "case_spin_sandwich",
                      (m, cfg.seed + 2), {"m": m}))
        cases.append((f"dirac-squared[m={m}]", "case_dirac_squared",
                      (m, cfg.seed + 3, min(cfg.max_degree, 4)), {"m": m}))
        for k in range(cfg.max_degree + 1):
            for l in range(cfg.max_degree + 1 - k):
                cases.append((f"iterated-laplacian[m={m},k={k},l={l}]",
                              "case_iterated_laplacian", (m, k, l),
                              {"m": m, "k": k, "l": l}))
        for t in range(min(cfg.max_degree, 4) + 1):
            for a in range(t + 1):
                cases.append((f"euler-gamma[m={m},t={t},a={a}]",
                              "case_euler_gamma", (m, t, a, cfg.seed),
                              {"m": m, "t": t, "a": a}))
        for k in range(cfg.max_degree + 1):
            cases.append((f"zonal-structure[m={m},k={k}]", "case_zonal_structure",
                          (m, k), {"m": m, "k": k}))
            if k < cfg.max_degree:
                cases.append((f"zonal-relation[m={m},k={k}]", "case_zonal_relation",
                              (m, k), {"m": m, "k": k}))
        for k in range(min(cfg.max_degree, 3) + 1):
            for j in (k, k + 1):
                for kind in ("K", "C"):
                    for lie in (False, True):
                        tag = f"zonal-reproducing[{kind},m={m},j={j},k={k},lie={int(lie)}]"
                        cases.append((tag, "case_zonal_reproducing",
                                      (m, j, k, kind, lie, cfg.seed),
                                      {"m": m, "j": j, "k": k, "kind": kind,
                                       "lie": lie}))
        for k in range(min(cfg.max_degree, 2) + 1):
            cases.append((f"zonal-spin-invariance[m={m},k={k}]",
                          "case_zonal_spin_invariance", (m, k, cfg.seed),
                          {"m": m, "k": k}))
    return cases


def _coefficients_cases(cfg: SuiteConfig):
    cases = []
    for m in cfg.m_values:
        for j in range(1, 5):
            cases.append((f"stiefel-closed-form[m={m},j={j}]",
                          "case_lemma_stiefel_value", (m, j), {"m": m, "j": j}))
        for k in range(cfg.max_degree + 1):
            for l in range(cfg.max_degree + 1 - k):
                cases.append((f"frame-average-theta[m={m},k={k},l={l}]",
                              "case_cor_theta_identity", (m, k, l),
                              {"m": m, "k": k, "l": l}))
        if m <= 4:
            for k in range(min(cfg.max_degree // 2, 2) + 1):
                cases.append((f"frame-average-vartheta[m={m},k={k}]",
                              "case_vartheta_identity", (m, k), {"m": m, "k": k}))
        for k in range(5):
            for l in range(k + 1):
                for n in range(l + 1):
                    cases.append((f"pfaff-saalschutz[m={m},k={k},l={l},n={n}]",
                                  "case_pfaff_saalschutz", (m, k, l, n),
                                  {"m": m, "k": k, "l": l, "n": n}))
        for k in range(9):
            cases.append((f"gegenbauer[m={m},k={k}]", "case_gegenbauer_value",
                          (m, k), {"m": m, "k": k}))
        for t in range(cfg.max_degree + 1):
            for n in range(t // 2 + 1):
                cases.append((f"phi-routes[m={m},t={t},n={n}]", "case_phi_routes",
                              (m, t, n), {"m": m, "t": t, "n": n}))
            for a in range(t + 1):
                cases.append((f"rho-branch[m={m},t={t},a={a}]", "case_rho_branch",
                              (m, t, a), {"m": m, "t": t, "a": a}))
        cases.append((f"known-scalars[m={m}]", "case_known_scalars", (m,), {"m": m}))
        cases.append((f"coefficient-zero-scan[m={m}]", "case_coefficient_zero_scan",
                      (m, max(cfg.max_degree, 6)), {"m": m}))
    return cases


def _inversion_hua_cases(cfg: SuiteConfig):
    cases = []
    for m in cfg.m_values:
        for k in range(min(cfg.max_degree, 3) + 1):
            for l in range(min(cfg.max_degree, 3) + 1 - k):
                cases.append((f"reproducing-basis[m={m},k={k},l={l}]",
                              "case_reproducing_basis",
                              (m, k, l, cfg.frame_mode, cfg.seed),
                              {"m": m, "k": k, "l": l}))
        cases.append((f"idempotence[m={m}]", "case_idempotence",
                      (m, "hua", cfg.seed, min(cfg.max_degree, 3)), {"m": m}))
        for i in range(3):
            cases.append((f"route-equivalence[m={m},i={i}]",
                          "case_route_equivalence",
                          (m, cfg.seed + i, min(cfg.max_degree, 4)),
                          {"m": m, "i": i}))
        cases.append((f"truncation-exactness[m={m}]", "case_truncation_exactness",
                      (m, min(cfg.max_degree, 3), cfg.seed), {"m": m}))
        cases.append((f"orthocomplement[m={m}]", "case_orthocomplement", (m,),
                      {"m": m}))
        for k in range(min(cfg.max_degree, 2) + 1):
            for l in range(min(cfg.max_degree, 2) + 1):
                for k2 in range(min(cfg.max_degree, 2) + 1):
                    for l2 in range(min(cfg.max_degree, 2) + 1):
                        if (k + l, k2 + l2) <= (2, 2):
                            cases.append((
                                f"gram[m={m},k={k},l={l},k2={k2},l2={l2}]",
                                "case_norm_orthogonality", (m, k, l, k2, l2),
                                {"m": m, "k": k, "l": l, "k2": k2, "l2": l2}))
        for t in range(cfg.max_degree + 1):
            for n in range(t // 2 + 1):
                cases.append((f"dual-eigenvalue[m={m},t={t},n={n}]",
                              "case_dual_eigenvalue", (m, t, n, cfg.seed),
                              {"m": m, "t": t, "n": n}))
        cases.append((f"invert-roundtrip[m={m}]", "case_invert_roundtrip",
                      (m, "hua", cfg.seed, min(cfg.max_degree, 4)), {"m": m}))
    return cases


def _inversion_polarized_cases(cfg: SuiteConfig):
    cases = []
    for m in cfg.m_values:
        for alpha in range(min(cfg.max_degree, 2) + 1):
            for k in range(min(cfg.max_degree, 2) + 1):
                cases.append((f"reproducing-psi[m={m},alpha={alpha},k={k}]",
                              "case_reproducing_psi",
                              (m, alpha, k, cfg.frame_mode, cfg.seed),
                              {"m": m, "alpha": alpha, "k": k}))
        for s1 in range(3):
            for s2 in range(3):
                cases.append((f"psi-orthogonality[m={m},s={s1},s2={s2}]",
                              "case_psi_orthogonality", (m, s1, s2, cfg.seed),
                              {"m": m, "s1": s1, "s2": s2}))
        cases.append((f"polarized-idempotence[m={m}]", "case_idempotence",
                      (m, "polarized", cfg.seed, min(cfg.max_degree, 3)),
                      {"m": m}))
        cases.append((f"polarized-constant[m={m}]", "case_polarized_constant",
                      (m,), {"m": m}))
        for t in range(min(cfg.max_degree, 5) + 1):
            for a in range(t + 1):
                cases.append((f"dual-eigenvalue-polarized[m={m},t={t},a={a}]",
                              "case_dual_eigenvalue_polarized",
                              (m, t, a, cfg.seed), {"m": m, "t": t, "a": a}))
        cases.append((f"invert-roundtrip-polarized[m={m}]", "case_invert_roundtrip",
                      (m, "polarized", cfg.seed, min(cfg.max_degree, 4)),
                      {"m": m}))
    return cases


def _mc_cases(cfg: SuiteConfig):
    cases = []
    for m in cfg.m_values:
        for j in (1, 2):
            cases.append((f"mc-stiefel[m={m},j={j}]", "case_mc_stiefel",
                          (m, j, cfg.mc_samples, cfg.seed), {"m": m, "j": j}))
        cases.append((f"mc-random-stiefel[m={m}]", "case_mc_random_stiefel",
                      (m, cfg.mc_samples, cfg.seed), {"m": m}))
        cases.append((f"mc-sphere[m={m}]", "case_mc_sphere",
                      (m, cfg.mc_samples, cfg.seed, 3), {"m": m}))
    return cases


SUITES = {
    "lemmas": _lemmas_cases,
    "coefficients": _coefficients_cases,
    "inversion-hua": _inversion_hua_cases,
    "inversion-polarized": _inversion_polarized_cases,
    "mc-crosscheck": _mc_cases,
}


def list_suites():
    return sorted(SUITES)


def _exec_case(spec):
    case_id, fn_name, args, params = spec
    try:
        res = CASE_FNS[fn_name](args)
    except LieRadonError as exc:
        res = {"status": "exact-fail", "lhs_hash": "", "rhs_hash": "",
               "details": f"error: {exc}"}
    record = {"suite": None, "case_id": case_id, "params": params}
    record.update(res)
    return record


def mc_crosscheck_records(subset: str, config: SuiteConfig):
    """Exact-vs-MC records {case, exact, mc_mean, mc_stderr, z_score}.

    ``subset`` selects the integrand family: stiefel | sphere | lie | all.
    """
    from .integrate import mc_lie_sphere_integral

    if subset not in ("stiefel", "sphere", "lie", "all"):
        raise KeyError(f"unknown mc suite {subset!r}")
    records = []

    def push(case, exact_value, mean, err):
        z = abs(mean - complex(float(exact_value))) / err if err else 0.0
        records.append({
            "case": case,
            "exact": str(exact_value),
            "mc_mean": [mean.real, mean.imag],
            "mc_stderr": err,
            "z_score": z,
        })

    for m in config.m_values:
        rng = random.Random((config.seed, m))
        if subset in ("stiefel", "all"):
            for j in (1, 2, 3):
                p = (tau_pairing_poly("x", m) ** j
                     * tau_pairing_poly("x", m, dagger=True) ** j)
                conc = p.subst({"x": [1] + [0] * (m - 1)})
                sign = -1 if j % 2 else 1
                exact = sign * factorial(j) / gamma_ratio(
                    Fraction(m, 2) + j, Fraction(m, 2))
                mean, err = mc_stiefel_average(
                    conc, m, config.mc_samples, config.seed)[0]
                push(f"stiefel-closed-form[m={m},j={j}]", exact, mean, err)
        if subset in ("sphere", "all"):
            alpha = tuple(rng.choice((0, 2)) for _ in range(m))
            mono = PolyMV.monomial(m, ("w",), (alpha,), 1)
            from .integrate import sphere_moment
            exact = sphere_moment(alpha, m)
            mean, err = mc_sphere_integral(
                mono, m, config.mc_samples, config.seed)[0]
            push(f"sphere-moment[m={m},alpha={alpha}]", exact, mean, err)
        if subset in ("lie", "all"):
            fr = canonical_frame(m)
            fb = basis_f(fr, 1, 1)
            exact = ol2_inner(fb, fb, m).scalar_part().as_fraction()
            pieces = [(2, 2, fb.dagger() * fb)]
            est = mc_lie_sphere_integral(pieces, m, config.mc_samples, config.seed)
            mean, err = est[0]
            push(f"lie-norm[m={m},k=1,l=1]", exact, mean, err)
    return records


def run_suite(name: str, config: SuiteConfig) -> dict:
    """Execute one suite and return (optionally writing) its JSON report."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(list_suites())}")
    specs = SUITES[name](config)
    if config.jobs > 1:
        import multiprocessing
        with multiprocessing.Pool(config.jobs) as pool:
            records = pool.map(_exec_case, specs)
    else:
        records = [_exec_case(s) for s in specs]
    for r in records:
        r["suite"] = name
    records.sort(key=lambda r: r["case_id"])
    passed = sum(1 for r in records if r["status"].endswith("pass"))
    report = {
        "suite": name,
        "config": {
            "m_values": list(config.m_values),
            "max_degree": config.max_degree,
            "frame_mode": config.frame_mode,
            "seed": config.seed,
            "mc_samples": config.mc_samples,
        },
        "cases": records,
        "passed": passed,
        "failed": len(records) - passed,
        "all_passed": passed == len(records),
    }
    if config.report_path:
        with open(config.report_path, "w") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return report
