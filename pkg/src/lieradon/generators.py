"""Seeded generators of exact random inputs for suites and tests.

Random objects stay inside the Gaussian rationals: unit vectors come
from products of rational Givens rotations, so norms and orthogonality
are exact.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import Multivector, SpinElement
from .fischer import harmonic_to_monogenic, proj_harmonic
from .poly import PolyMV
from .scalar import QQi


def rational_rotation(m: int, rng: random.Random):
    """Exact rational rotation matrix as a list of Fraction rows."""
    mat = [[Fraction(1 if i == j else 0) for j in range(m)] for i in range(m)]
    for _ in range(2 * m):
        i, j = rng.sample(range(m), 2)
        q = Fraction(rng.randint(-6, 6), rng.randint(1, 6))
        c = (1 - q * q) / (1 + q * q)
        s = 2 * q / (1 + q * q)
        for row in mat:
            ri, rj = row[i], row[j]
            row[i] = c * ri - s * rj
            row[j] = s * ri + c * rj
    return mat


def rational_unit_vector(m: int, rng: random.Random) -> Multivector:
    """Exact unit 1-vector with rational components."""
    mat = rational_rotation(m, rng)
    return Multivector.from_vector(m, [row[0] for row in mat])


def random_spin_element(m: int, rng: random.Random, pairs=1) -> SpinElement:
    return SpinElement([rational_unit_vector(m, rng) for _ in range(2 * pairs)])


def random_multivector(m: int, rng: random.Random, span=3) -> Multivector:
    terms = {}
    for _ in range(span):
        blade = rng.randrange(1 << m)
        c = QQi(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(1, 3))
        if c:
            terms[blade] = terms.get(blade, QQi(0)) + c
    return Multivector(m, terms)


def random_polynomial(m: int, var: str, degree: int, rng: random.Random,
                      homogeneous=False, scalar=False, span=6) -> PolyMV:
    """Random PolyMV of (total or exact) degree <= degree in one variable."""
    terms = {}
    for _ in range(span):
        if homogeneous:
            d = degree
        else:
            d = rng.randint(0, degree)
        alpha = [0] * m
        for _ in range(d):
            alpha[rng.randrange(m)] += 1
        if scalar:
            coeff = Multivector.scalar(
                m, QQi(rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(1, 3)))
        else:
            coeff = random_multivector(m, rng, span=2)
        if coeff:
            key = (tuple(alpha),)
            prev = terms.get(key)
            terms[key] = coeff if prev is None else prev + coeff
    return PolyMV(m, (var,), {k: v for k, v in terms.items() if v})


def random_harmonic(m: int, var: str, k: int, rng: random.Random,
                    scalar=False) -> PolyMV:
    """Random degree-k harmonic: top harmonic layer of a random polynomial."""
    while True:
        p = random_polynomial(m, var, k, rng, homogeneous=True, scalar=scalar)
        h = proj_harmonic(p, 0, var)
        if h or k == 0:
            return h if k else PolyMV.constant(m, 1, (var,))


def random_monogenic(m: int, var: str, k: int, rng: random.Random) -> PolyMV:
    """Random degree-k monogenic via the harmonic two-term split."""
    if k == 0:
        return PolyMV.constant(m, random_multivector(m, rng, span=2), (var,))
    while True:
        h = random_harmonic(m, var, k, rng)
        top, _ = harmonic_to_monogenic(h, var)
        if top:
            return top
