"""Exception hierarchy.  Each class carries the CLI exit code it maps to."""


class SchutzenError(Exception):
    exit_code = 3


class InputError(SchutzenError):
    """Malformed presentation file, bad selector, unknown letter."""

    exit_code = 1


class ParseError(InputError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceCap(SchutzenError):
    """A desk-scale limit was hit; not a mathematical failure."""

    exit_code = 2


class LimitExceeded(ResourceCap):
    pass


class CapExceeded(ResourceCap):
    pass


class SearchExhausted(ResourceCap):
    pass


class OrderTooLarge(ResourceCap):
    pass


class ConstructionError(SchutzenError):
    """Something that the theory guarantees cannot happen did happen."""


class NotPointwiseStabilizer(InputError):
    pass


class ActionKilled(SchutzenError):
    pass


class PreconditionViolated(SchutzenError):
    def __init__(self, clause, message=""):
        self.clause = clause
        super().__init__(f"precondition ({clause}) violated {message}".strip())


class NotAGroup(ConstructionError):
    pass


class RepresentativeNotFound(ConstructionError):
    pass
