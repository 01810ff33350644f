"""Exception types shared across the package.

Everything user-facing derives from SuperschurError so the CLI can map
library failures to exit codes in one place.
"""


class SuperschurError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(SuperschurError):
    """Exact division was attempted with a zero divisor."""


class NotDivisible(SuperschurError):
    """Exact polynomial division left a nonzero remainder.

    When raised from an alternating-sum construction this signals a violated
    identity (or a transcription bug), not a user error.
    """


class DuplicateVariable(SuperschurError):
    """A variable list that must be distinct contained a repeat."""


class NonSquare(SuperschurError):
    """A determinant was requested of a non-square matrix."""


class WindowExceeded(SuperschurError):
    """A parameter-sequence access fell outside the declared window."""

    def __init__(self, index, window=None):
        self.index = index
        self.window = window
        msg = f"sequence index {index} outside window"
        if window is not None:
            msg += f" [{window[0]}, {window[1]}]"
        super().__init__(msg)


class NotInHook(SuperschurError):
    """A partition was required to fit in the (m, n)-hook but does not."""


class PreconditionViolated(SuperschurError):
    """An operation's stated precondition does not hold for the inputs."""


class NotSupersymmetric(SuperschurError):
    """A polynomial required to be supersymmetric failed a witness check."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"polynomial is not supersymmetric: {witness}")


class SequenceNotMultiplicityFree(SuperschurError):
    """Two entries of the parameter sequence coincide on the needed window."""


class DegreeBoundExceeded(SuperschurError):
    """The input polynomial exceeds the declared degree bound."""


class InternalMismatch(SuperschurError):
    """Two routes that must agree produced different results (library bug)."""
