from typing import Any, TypeAlias

__all__ = (
    "Vertex",
    "Bits",
    "Edge",
    "JsonObject",
    "JsonValue",
)


Vertex: TypeAlias = int

# A vertex set packed into an integer, bit `v` set iff `v` is a member.
Bits: TypeAlias = int

Edge: TypeAlias = tuple[Vertex, Vertex]

JsonObject: TypeAlias = dict[str, Any]

# Anything `json.dumps` accepts once nested serializables are expanded.
JsonValue: TypeAlias = None | bool | int | float | str | list[Any] | dict[str, Any]
