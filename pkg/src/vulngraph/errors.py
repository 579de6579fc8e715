"""Exception hierarchy shared by every module."""


class VulnGraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraphError(VulnGraphError, ValueError):
    """A graph or vertex set violates its structural invariants."""


class NotConnectedError(VulnGraphError, ValueError):
    def __init__(self, message="parameter requires connected graph"):
        super().__init__(message)


class CompleteGraphError(VulnGraphError, ValueError):
    def __init__(self, message="undefined for complete graphs"):
        super().__init__(message)


class NotACutError(VulnGraphError, ValueError):
    def __init__(self, message="not a vertex cut"):
        super().__init__(message)


class DomainError(VulnGraphError, ValueError):
    """Arguments fall outside the domain of a closed form or constructor."""


class CapExceededError(VulnGraphError, ValueError):
    """A size cap guarding an exhaustive search was exceeded."""
