"""Exception hierarchy. CLI exit codes are attached to the classes."""


class LoccwError(Exception):
    exit_code = 1


class DimensionMismatch(LoccwError, ValueError):
    pass


class MalformedInput(LoccwError, ValueError):
    """Bad file contents; ``where`` names the offending line or field."""

    def __init__(self, message: str, where: str | None = None):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


class MalformedDiagram(LoccwError, ValueError):
    pass


class UnsupportedDimensions(LoccwError, ValueError):
    exit_code = 3


class NonOrthogonalInput(LoccwError, ValueError):
    pass


class TrivialSpace(LoccwError, ValueError):
    pass


class CompletionFailure(LoccwError, RuntimeError):
    pass


class NotABasis(LoccwError, ValueError):
    pass
