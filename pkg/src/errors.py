class EngineException(Exception):
    """
    Base error of the engine, carrying a status code and a human readable detail.

    The status code doubles as the process exit status when the error escapes a command.
    """
    status_code: int = 1

    def __init__(self, detail: str, status_code: int | None = None):
        super().__init__(detail)
        self.detail = detail
        if status_code is not None:
            self.status_code = status_code

    def __str__(self):
        return self.detail


class InvalidStructure(EngineException):
    """
    A value violates the invariants of its type (poset axioms, semilattice laws, sobriety, ...)
    """
    status_code = 2


class PreconditionError(EngineException):
    """
    An operation was called outside of its precondition
    """
    status_code = 2


class DocumentError(EngineException):
    """
    A document could not be read, parsed or validated
    """
    status_code = 2


class UsageError(EngineException):
    status_code = 3
