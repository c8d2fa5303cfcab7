import sys
from typing import Any, Optional, TextIO, Type

__all__ = (
    "MalformedData",
    "ResponsiveException",
)


class MalformedData(Exception):
    def __init__(self, cls: Type, data: Any):
        super().__init__(f"Cannot create {cls.__name__} from {type(data).__name__}")


class ResponsiveException(Exception):
    """
    An error whose message is meant for whoever ran the command.

    The CLI answers these with `respond()` instead of dumping a traceback.
    """

    exit_code: int = 2

    def __init__(self, *args, exit_code: Optional[int] = None):
        if exit_code is not None:
            self.exit_code = exit_code
        super().__init__(*args)

    def respond(self, file: Optional[TextIO] = None) -> int:
        print(f"error: {self}", file=file or sys.stderr)
        return self.exit_code
