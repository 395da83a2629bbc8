"""Exception types shared by every module."""


class InputError(ValueError):
    """Malformed or out-of-contract input (CLI exit code 2)."""


class PrecisionError(ArithmeticError):
    """A numerical route could not certify the requested accuracy (exit code 3)."""


class VerificationError(AssertionError):
    """An identity that is a theorem failed to hold; signals a bug (exit code 1)."""
