import sys
from importlib.metadata import PackageNotFoundError, version

__all__ = (
    "TOOL_VERSION",
    "PYTHON_VERSION",
    "MAX_VERTICES",
    "MAX_CANONICAL_VERTICES",
    "MAX_ENUMERATION_VERTICES",
    "MAX_BRUTE_PATTERN_VERTICES",
    "MAX_BRUTE_HOST_VERTICES",
    "COLOR_BOUND",
    "K3P2_COLOR_BOUND",
    "TRIANGLE_FREE_COLOR_BOUND",
    "ORDER_BOUND_FACTOR",
    "CHI_BOUND_FACTOR",
    "LEDGER_ENV_VAR",
    "DEFAULT_LEDGER_PATH",
)

try:
    TOOL_VERSION: str = version("chibound")
except PackageNotFoundError:
    TOOL_VERSION = "0.0.0+local"

PYTHON_VERSION: str = (
    f"{sys.version_info[0]}.{sys.version_info[1]}.{sys.version_info[2]}"
)

# Incidence rows fit one machine word.
MAX_VERTICES: int = 64

MAX_CANONICAL_VERTICES: int = 10
MAX_ENUMERATION_VERTICES: int = 7

MAX_BRUTE_PATTERN_VERTICES: int = 8
MAX_BRUTE_HOST_VERTICES: int = 12

COLOR_BOUND: int = 7
K3P2_COLOR_BOUND: int = 6
TRIANGLE_FREE_COLOR_BOUND: int = 3

ORDER_BOUND_FACTOR: int = 7
CHI_BOUND_FACTOR: int = 4

LEDGER_ENV_VAR: str = "CHIBOUND_LEDGER"
DEFAULT_LEDGER_PATH: str = "chibound-ledger.jsonl"
