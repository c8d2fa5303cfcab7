from dataclasses import dataclass
from typing import Optional, Sequence

from chibound.ext.patterns.catalog import catalog, get_pattern
from chibound.ext.patterns.matcher import contains_induced
from chibound.ext.patterns.pattern import Embedding
from chibound.lib.graph import Graph
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.utils import dict_without_nones

__all__ = (
    "CLASS_FORBIDDEN",
    "BOUNDS_CLASS_FORBIDDEN",
    "Membership",
    "check_free",
    "is_class_member",
    "is_bounds_class_member",
    "patterns_found",
)


# (P3∪P2, K4)-free graphs: the class every coloring result is about.
CLASS_FORBIDDEN: tuple[str, ...] = ("k4", "p3up2")

# (4K1, co-(P3∪P2))-free graphs: the complement class used by the bounds.
BOUNDS_CLASS_FORBIDDEN: tuple[str, ...] = ("4k1", "cop3up2")


@dataclass(frozen=True)
class Membership(JsonSerializable):
    """
    A membership certificate: either `member` is true, or `witness` is an
    occurrence of one of the forbidden patterns.
    """

    family: tuple[str, ...]
    member: bool
    witness: Optional[Embedding] = None

    def __bool__(self) -> bool:
        return self.member

    # @implements JsonSerializable
    def to_json(self) -> dict:
        return dict_without_nones(
            forbidden=list(self.family),
            member=self.member,
            witness=self.witness.to_json() if self.witness else None,
        )


def check_free(g: Graph, forbidden: Sequence[str]) -> Membership:
    """Freeness of `g` against `forbidden`, checked in the given order."""
    for name in forbidden:
        if (witness := contains_induced(g, get_pattern(name))) is not None:
            return Membership(tuple(forbidden), False, witness)
    return Membership(tuple(forbidden), True)


def is_class_member(g: Graph) -> Membership:
    return check_free(g, CLASS_FORBIDDEN)


def is_bounds_class_member(g: Graph) -> Membership:
    return check_free(g, BOUNDS_CLASS_FORBIDDEN)


def patterns_found(g: Graph) -> list[Embedding]:
    """The first occurrence of every catalog pattern present in `g`, in catalog order."""
    found: list[Embedding] = []
    for p in catalog():
        if (emb := contains_induced(g, p)) is not None:
            found.append(emb)
    return found
