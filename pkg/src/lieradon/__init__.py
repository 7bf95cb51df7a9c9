"""Exact Clifford-algebra polynomials over the Lie sphere and the
Radon-type projections acting on them, with verified inversion formulas.

Everything in the exact pipeline is computed over Gaussian rationals; a
seeded Monte-Carlo oracle provides the independent statistical check.
"""

from .scalar import BACKEND, QQi, qq

__version__ = "0.1.0"

__all__ = ["QQi", "qq", "BACKEND", "__version__"]
