"""Exception types shared across the library."""


class LieRadonError(Exception):
    """Base class for library errors."""


class DimensionMismatch(LieRadonError, ValueError):
    """Operands live in Clifford algebras of different dimension."""


class GradeError(LieRadonError, ValueError):
    """A grade index is out of range or an operand has the wrong grade."""


class UnknownVariable(LieRadonError, KeyError):
    """A polynomial operator was given a variable the polynomial lacks."""


class NotAFrame(LieRadonError, ValueError):
    """Vectors fail the exact orthonormality required of a frame."""


class PoleError(LieRadonError, ZeroDivisionError):
    """A gamma-function ratio or Pochhammer hit a pole."""


class SingularComponent(LieRadonError, ZeroDivisionError):
    """An inversion coefficient vanishes for some component.

    Carries the component data so callers can report exactly which
    (degree, power, dimension) triple is non-invertible.
    """

    def __init__(self, t, a, m, coefficient_name):
        self.t = t
        self.a = a
        self.m = m
        self.coefficient_name = coefficient_name
        super().__init__(
            f"{coefficient_name}(t={t}, a={a}, m={m}) = 0: component not invertible")
