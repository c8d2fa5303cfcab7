from abc import ABC, abstractmethod

from chibound.lib.types import JsonValue

__all__ = ("JsonSerializable",)


class JsonSerializable(ABC):
    """
    Something that ends up in a ledger line or in `--format json` output.

    `ExtendedJsonEncoder` calls `to_json()` on any instance it meets, so nested
    graphs, vertex sets and witnesses serialize without help. Graphs become their
    graph6 string and vertex sets a sorted vertex list.
    """

    @abstractmethod
    def to_json(self) -> JsonValue:
        """Turn the object into data `json.dumps` accepts."""
