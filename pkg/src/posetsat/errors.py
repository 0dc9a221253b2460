"""Exception hierarchy shared by all modules."""


class UsageError(ValueError):
    """Bad arguments: mismatched ground sets, malformed inputs, violated preconditions."""


class InvalidPosetError(UsageError):
    """The supplied relation is not a partial order (e.g. cyclic covers)."""


class InfeasibleError(UsageError):
    """Parameters are outside the range where the construction exists."""


class UnsupportedError(UsageError):
    """A parameter combination the library deliberately does not handle."""


class DefectError(RuntimeError):
    """An internal case analysis failed. Should never be raised; if it is, that is a bug."""


class CertificateInvalid(RuntimeError):
    """A lower-bound certificate failed one of its assertions."""
