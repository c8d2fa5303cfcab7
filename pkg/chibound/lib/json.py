import dataclasses
import json
from datetime import datetime
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Iterator, Optional

from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.types import JsonObject

__all__ = (
    "ExtendedJsonEncoder",
    "json_load",
    "json_dumps",
    "jsonl_append",
    "jsonl_iter",
)


class ExtendedJsonEncoder(json.JSONEncoder):
    """
    Extended JSON encoder with frequently-used logic built-in.

    Converts the following additional objects, in order of precedence:
    1. A subclass of `JsonSerializable` is converted using `.to_json()`
    2. A `set` or `frozenset` is converted into a sorted list
    3. An `Enum` is converted into its value
    4. A `fractions.Fraction` is converted into a string like `"1/2"`
    5. A `datatime.datetime` is converted into a string using `.isoformat()`
    6. A `dataclasses.dataclass` is converted one layer at a time
    """

    def default(self, obj: Any) -> Any:
        if isinstance(obj, JsonSerializable):
            return obj.to_json()
        if isinstance(obj, (set, frozenset)):
            return self.convert_set(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, Fraction):
            return str(obj)
        if isinstance(obj, datetime):
            return obj.isoformat()
        if dataclasses.is_dataclass(obj):
            return self.convert_dataclass(obj)
        return super().default(obj)

    def convert_set(self, obj: set[Any] | frozenset[Any]) -> list[Any]:
        return sorted(obj)

    def convert_dataclass(self, obj: Any) -> Any:
        # NOTE We can't use `dataclasses.asdict` because it recurses implicitly,
        # which would bypass the `to_json()` of any nested `JsonSerializable`.
        return {f.name: getattr(obj, f.name) for f in dataclasses.fields(obj)}


def json_load(path: Path) -> JsonObject:
    """
    Deserialize a json file located at `path`.
    """
    with open(path) as fp:
        data = json.load(fp)
    return data


def json_dumps(data: Any, indent: Optional[int] = None) -> str:
    """
    Serialize a Json-like object to a string, with keys sorted.
    """
    return json.dumps(data, indent=indent, sort_keys=True, cls=ExtendedJsonEncoder)


def jsonl_append(rows: Iterable[Any], path: Path, mkdir: bool = True) -> int:
    """
    Append one json document per line to the file located at `path`.

    Returns the number of lines written.
    """
    if mkdir:
        path.parent.mkdir(parents=True, exist_ok=True)
    lines = [json_dumps(row) + "\n" for row in rows]
    with open(path, "a") as fp:
        fp.writelines(lines)
    return len(lines)


def jsonl_iter(path: Path) -> Iterator[JsonObject]:
    """
    Lazily deserialize a newline-delimited json file, skipping blank lines.
    """
    with open(path) as fp:
        for line in fp:
            if line.strip():
                yield json.loads(line)
