from typing import Iterable

from chibound.lib import ResponsiveException


class PatternsException(ResponsiveException):
    pass


class UnknownPattern(PatternsException):
    def __init__(self, name: str, known: Iterable[str] = ()):
        self.name: str = name
        self.known: tuple[str, ...] = tuple(known)
        super().__init__(
            f"Unknown pattern `{name}`"
            + (f"; expected one of: {', '.join(self.known)}" if self.known else "")
        )


class InvalidPattern(PatternsException):
    def __init__(self, name: str, reason: str):
        self.name: str = name
        self.reason: str = reason
        super().__init__(f"Pattern `{name}` is malformed: {reason}")


class UnknownPatternLabel(PatternsException):
    def __init__(self, pattern: str, label: str):
        self.pattern: str = pattern
        self.label: str = label
        super().__init__(f"Pattern `{pattern}` has no vertex labeled `{label}`")
