"""Public surface of the exact Gaussian-rational scalar type."""

from __future__ import annotations

from fractions import Fraction

from .core import BACKEND, QQI_I, QQI_ONE, QQI_ZERO, QQi


def qq(re, im=0):
    """Build a QQi from ints or Fractions."""
    if im == 0 and isinstance(re, int):
        return QQi(re)
    return QQi.from_fractions(Fraction(re), Fraction(im))


ZERO = QQI_ZERO
ONE = QQI_ONE
I = QQI_I

__all__ = ["QQi", "qq", "ZERO", "ONE", "I", "BACKEND",
           "QQI_ZERO", "QQI_ONE", "QQI_I"]
