"""Exception hierarchy shared by every module."""


class GroupError(Exception):
    """Base class for all library errors."""


class CapExceeded(GroupError):
    """A computation would grow past its element (or order) cap."""

    def __init__(self, what, cap, size=None):
        self.what = what
        self.cap = cap
        self.size = size
        msg = f"{what}: cap {cap} exceeded"
        if size is not None:
            msg += f" (needs {size})"
        super().__init__(msg)


class InvalidAction(GroupError):
    pass


class NotNormal(GroupError):
    pass


class NotDedekind(GroupError):
    pass


class NoComplement(GroupError):
    """No complement exists where the structure theorem demands one."""


class PreconditionViolated(GroupError):
    pass


class ConditionsFailed(GroupError):
    def __init__(self, failed, report=None):
        self.failed = list(failed)
        self.report = report
        super().__init__("conditions failed: " + ", ".join(self.failed))


class GrpParseError(GroupError):
    def __init__(self, line, message, path=None):
        self.line = line
        self.message = message
        self.path = path
        where = f"{path}:" if path else ""
        super().__init__(f"{where}line {line}: {message}")


class MalformedEntry(GrpParseError):
    pass
