from pathlib import Path

from chibound.lib import ResponsiveException


class ConfigException(ResponsiveException):
    pass


class UnsupportedConfigFormat(ConfigException):
    def __init__(self, path: Path):
        self.path: Path = path
        super().__init__(
            f"Configuration file `{path}` must end in .json, .yaml or .yml"
        )


class UnreadableConfig(ConfigException):
    def __init__(self, path: Path, reason: str):
        self.path: Path = path
        self.reason: str = reason
        super().__init__(f"Cannot read configuration file `{path}`: {reason}")


class InvalidLogLevel(ConfigException):
    def __init__(self, level: str):
        self.level: str = level
        super().__init__(f"Unknown log level `{level}`")


class LedgerException(ResponsiveException):
    pass


class LedgerWriteFailed(LedgerException):
    def __init__(self, path: Path, reason: str):
        self.path: Path = path
        self.reason: str = reason
        super().__init__(f"Cannot append to ledger `{path}`: {reason}")


class MalformedLedgerLine(LedgerException):
    def __init__(self, path: Path, line: int, reason: str):
        self.path: Path = path
        self.line: int = line
        self.reason: str = reason
        super().__init__(f"Ledger `{path}` record {line} is malformed: {reason}")


class InvalidConfigValue(ConfigException):
    def __init__(self, key: str, reason: str):
        self.key: str = key
        self.reason: str = reason
        super().__init__(f"Invalid configuration value for `{key}`: {reason}")
