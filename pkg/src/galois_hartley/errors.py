"""Exception hierarchy.

Every domain error carries a stable class name; the CLI prints it verbatim
as the machine-parsable error code.
"""


class GaloisHartleyError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NotPrime(GaloisHartleyError, ValueError):
    pass


class EvenCharacteristic(GaloisHartleyError, ValueError):
    pass


class ReducibleModulus(GaloisHartleyError, ValueError):
    pass


class DegreeMismatch(GaloisHartleyError, ValueError):
    pass


class FieldMismatch(GaloisHartleyError, ValueError):
    pass


class ZeroInverse(GaloisHartleyError, ZeroDivisionError):
    pass


class ZeroElement(GaloisHartleyError, ValueError):
    pass


class NoSuchOrder(GaloisHartleyError, ValueError):
    pass


class MinusOneIsResidue(GaloisHartleyError, ValueError):
    """-1 is a square in the host field, so adjoining j does not give a field."""


class BadExponent(GaloisHartleyError, ValueError):
    pass


class LengthMismatch(GaloisHartleyError, ValueError):
    pass


class PlanMismatch(GaloisHartleyError, ValueError):
    pass


class NotCoprime(GaloisHartleyError, ValueError):
    pass


class InconsistentAssignment(GaloisHartleyError, ValueError):
    pass


class ParseError(GaloisHartleyError, ValueError):
    def __init__(self, message: str, text: str = "", position: int | None = None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} at position {position} in {text!r}"
        super().__init__(message)


class OutOfRangeCoefficient(GaloisHartleyError, ValueError):
    pass
