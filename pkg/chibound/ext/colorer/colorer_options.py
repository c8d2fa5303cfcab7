from dataclasses import dataclass
from typing import Any, Optional, Self

from chibound.lib.from_data_mixin import FromDataMixin
from chibound.lib.json_serializable import JsonSerializable

__all__ = ("ColorerOptions",)


@dataclass(frozen=True)
class ColorerOptions(JsonSerializable, FromDataMixin):
    """
    Attributes
    ----------
    closed_neighborhood
        Build `D1` from `ω(G - N[x]) ≤ 2` instead of `ω(G - N(x)) ≤ 2`.
    strict_three_part
        Also enforce the V3-neighborhood hypothesis of the three-part 3-coloring,
        which its construction never relies on.
    """

    closed_neighborhood: bool = False
    strict_three_part: bool = False

    # @overrides FromDataMixin
    @classmethod
    def try_from_data(cls, data: Any) -> Optional[Self]:
        if isinstance(data, dict):
            return cls(
                closed_neighborhood=bool(data.get("closed_neighborhood", False)),
                strict_three_part=bool(data.get("strict_three_part", False)),
            )

    # @implements JsonSerializable
    def to_json(self) -> Any:
        return {
            "closed_neighborhood": self.closed_neighborhood,
            "strict_three_part": self.strict_three_part,
        }
