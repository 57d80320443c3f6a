"""Exception hierarchy shared across the toolkit.

Grouping mirrors how callers need to react: `InputError` means the caller
handed us something malformed or out of contract, `Unsupported` means the
computation is honest but cannot proceed over the requested base field, and
`InternalCheckFailure` means a self-audit tripped and the result would not be
trustworthy.
"""


class ExtraSpecialError(Exception):
    """Base class for every error raised by this package."""


class InputError(ExtraSpecialError):
    """A precondition on user-supplied data was violated."""


class FieldMismatch(InputError):
    """Operands live over different base fields."""


class UnsupportedField(InputError):
    """The requested base field is outside scope (GF(2), composite modulus)."""


class DimensionMismatch(InputError):
    """Vector or matrix shapes are incompatible."""


class NotSquare(InputError):
    """A square matrix was required."""


class Singular(InputError):
    """A matrix inverse was requested for a singular matrix."""


class InvalidDescriptor(InputError):
    """A canonical-block descriptor violates its family constraints."""


class NotExtraSpecial(InputError):
    """The operation requires an extra special algebra."""


class NotAssociative(InputError):
    """The operation requires an associative algebra."""


class NotDiassociative(InputError):
    """The operation requires the five dialgebra axioms to hold."""


class IdentityViolated(InputError):
    """The algebra does not satisfy the identity of the requested theory."""


class DegenerateVector(InputError):
    """A bilinear form has a basis vector with zero row and zero column."""


class ParseError(InputError):
    """An algebra document failed to parse; `location` points at the culprit."""

    def __init__(self, message, location=None):
        super().__init__(message if location is None else f"{location}: {message}")
        self.location = location


class Unsupported(ExtraSpecialError):
    """The computation needs field elements that do not exist over the base field."""


class DoesNotSplit(Unsupported):
    """A characteristic polynomial has an irreducible factor of degree > 1.

    The offending factor is kept on the exception as ascending coefficients.
    """

    def __init__(self, factor):
        self.factor = list(factor)
        super().__init__(f"polynomial does not split; remaining factor {self.factor}")


class InternalCheckFailure(ExtraSpecialError):
    """A structural self-check failed; indicates a bug, not bad input."""


class StemFailure(InternalCheckFailure):
    """A constructed central extension is not a stem extension."""


class UnpairedEigenvalue(InternalCheckFailure):
    """Cosquare data could not be paired into canonical blocks."""
