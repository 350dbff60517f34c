"""
Errors

Everything the library signals is a subclass of `HodgeError`. Library
code only raises; the command layer turns errors into report lines and
exit codes (see `commands/command.py`).

"""


class HodgeError(Exception):
    """
    Base class for all Hodge errors.

    Attributes:
        exit_code (int): Process exit code the launcher uses when the
            error escapes a command.

    """
    exit_code = 1


# exact arithmetic

class DivisionByZero(HodgeError, ZeroDivisionError):
    """Inverting the zero element of Q(zeta24)."""


class NotRational(HodgeError):
    """A cyclotomic value that was required to be rational is not."""


class VariableMismatch(HodgeError):
    """Two series (or a series and a substitution) disagree on variables."""


class DegreeOutOfRange(HodgeError):
    """A coefficient above the truncation order was requested."""


# h-kernel

class PoleError(HodgeError):
    """tan was evaluated where the cosine vanishes."""


class UnsupportedAngle(HodgeError):
    """An angle whose exponential does not live in Q(zeta24)."""


# group and root data

class UnsupportedGroup(HodgeError):
    """An operation was asked for a group it is not defined on."""


class RootNotFound(HodgeError):
    """A vector is not a positive root of the root system."""


class OrientationMismatch(HodgeError):
    """Neither labelling of the E6 ends reproduces the A4 formula."""


class MonodromyViolation(HodgeError):
    """A monodromy-forbidden integral came out nonzero."""


# recursion

class MissingEntry(HodgeError):
    """An identity referenced an integral the table does not hold."""


class RankDeficient(HodgeError):
    """A per-length linear system did not determine every unknown."""


class InconsistentSystem(HodgeError):
    """An over-determined linear system has no solution."""


class DeterminantZero(HodgeError):
    """The alternating binomial determinant vanished."""


class BranchAmbiguity(HodgeError):
    """The quadratic start of a recursion has no unique admissible root."""


class LeadingCoefficientZero(HodgeError):
    """A recurrence step cannot be solved for its top coefficient."""


class InconsistentSquares(HodgeError):
    """The C/D square-root equations do not agree."""


# command line

class UsageError(HodgeError):
    """Bad flags or arguments on the command line."""
    exit_code = 2
