"""Exception hierarchy shared by the library and the CLI."""


class EhrliftError(Exception):
    """Base class for every error raised on purpose by ehrlift."""


class InputError(EhrliftError, ValueError):
    """Malformed or inconsistent input (dimensions, weight kinds, vertices)."""


class GuardExceeded(EhrliftError):
    """A desk-scale size guard was hit (too many points, too large K, ...)."""


class IllPosedSpecialization(EhrliftError, ArithmeticError):
    """Setting a variable to a value made a denominator vanish for good."""


class CheckFailed(EhrliftError, AssertionError):
    """A verification check found a counterexample."""
