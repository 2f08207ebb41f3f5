"""Exceptions raised while building states and evaluating bounds"""


class ConcurrenceBoundsError(Exception):
    """
    Base class for errors raised by this package.
    """

    MESSAGE = None

    def __init__(self, message=None):
        if message is None:
            message = self.MESSAGE
        super().__init__(message)


class InputError(ConcurrenceBoundsError):
    """Raised for invalid user input. The CLI exits with status 2."""


class DimensionTooSmallError(InputError):
    """
    A local dimension below 2 was given.
    """

    def __init__(self, dimension):
        super().__init__(f"Local dimension must be at least 2, got {dimension}")


class DimensionMismatchError(InputError):
    """Shapes of the given arrays do not agree with the declared dimensions."""

    MESSAGE = "Array shapes do not match the declared dimensions"


class IndexOutOfRangeError(InputError):
    """Generator index outside 0..d^2-1."""

    def __init__(self, index, dimension):
        super().__init__(
            f"Generator index {index} out of range for d={dimension} "
            f"(expected 0..{dimension**2 - 1})"
        )


class ParamOutOfRangeError(InputError):
    """A family parameter lies outside its domain."""

    def __init__(self, name, value, domain):
        super().__init__(f"Parameter {name}={value} is outside {domain}")


class WrongDimensionError(InputError):
    """An operation restricted to particular dimensions got another size."""


class OutOfPureRangeError(InputError):
    """
    A correlation norm was given that no pure state can have.
    """

    def __init__(self, t_squared, upper):
        super().__init__(
            f"|T|_F^2={t_squared!r} is outside the pure-state range [1, {upper!r})"
        )


class MissingParameterError(InputError):
    """A state family was requested without one of its parameters."""

    def __init__(self, name, family):
        super().__init__(f"--{name} is required for the {family} family")


class StateFileError(InputError):
    """The state file could not be read or parsed."""


class NoCrossingError(InputError):
    """The two bounds do not cross on the family's domain."""

    MESSAGE = "The bound difference does not change sign on the domain"


class InvalidStateError(InputError):
    """
    A matrix failed one of the density matrix invariants.

    The invariant name and the measured violation are kept on the instance.
    """

    INVARIANT = None

    def __init__(self, violation, tolerance):
        self.violation = violation
        self.tolerance = tolerance
        super().__init__(
            f"{self.INVARIANT} invariant violated: "
            f"measured {violation:.3e}, tolerance {tolerance:.3e}"
        )


class NotFiniteError(InvalidStateError):
    """Matrix or vector has NaN or Inf entries; the violation is their count."""

    INVARIANT = "finite entries"


class NotHermitianError(InvalidStateError):
    """Matrix differs from its conjugate transpose."""

    INVARIANT = "Hermitian"


class NotUnitTraceError(InvalidStateError):
    """Matrix trace differs from 1."""

    INVARIANT = "unit trace"


class NotPSDError(InvalidStateError):
    """Matrix has a negative eigenvalue."""

    INVARIANT = "positive semidefinite"


class NotNormalizedError(InvalidStateError):
    """State vector norm differs from 1."""

    INVARIANT = "normalized"


class ComplexCoefficientError(ConcurrenceBoundsError):
    """
    A Bloch coefficient trace came out with a large imaginary part, which
    signals a non-Hermitian input.
    """


class CheckFailedError(ConcurrenceBoundsError):
    """One or more validation suites failed. The CLI exits with status 1."""

    MESSAGE = "Validation suites failed"
