"""Exception types shared across the library."""


class ChoquetRnError(Exception):
    """Base class for all library errors."""


class SpaceMismatchError(ChoquetRnError):
    """Operands live on different measurable spaces."""


class InvalidMeasureError(ChoquetRnError):
    """A candidate set function violates vanishing-at-empty or monotonicity.

    Carries a ``witness`` describing the offending set(s).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidFamilyError(ChoquetRnError):
    """A breakpoint list does not describe a valid decreasing family."""


class PreconditionError(ChoquetRnError):
    """An operation's precondition fails (e.g. an infinite measure value)."""


class NotAdditiveError(PreconditionError):
    """An operation restricted to additive measures received a non-additive one."""


class NotAbsolutelyContinuousError(ChoquetRnError):
    """mu is not absolutely continuous w.r.t. nu; carries the witness set."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SpecFileError(ChoquetRnError):
    """A problem-description file failed to parse; ``location`` points at the spot."""

    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
