from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Self

from chibound.ext.generators.generators_exceptions import InvalidGenConfig
from chibound.lib.constants import MAX_VERTICES
from chibound.lib.from_data_mixin import FromDataMixin
from chibound.lib.json_serializable import JsonSerializable
from chibound.lib.utils import fraction_from_field_optional

__all__ = (
    "DEFAULT_EDGE_PROBABILITY",
    "DEFAULT_MAX_REPAIR_STEPS",
    "MAX_SEED",
    "GenConfig",
)


DEFAULT_EDGE_PROBABILITY = Fraction(1, 2)

# Enough to delete every edge of the largest supported graph.
DEFAULT_MAX_REPAIR_STEPS = MAX_VERTICES * (MAX_VERTICES - 1) // 2

MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class GenConfig(JsonSerializable, FromDataMixin):
    """
    Attributes
    ----------
    n
        Vertex count.
    edge_probability
        Probability of each pair in the initial draw, kept exact as a fraction.
    seed
        64-bit seed of the draw and of the repair choices.
    max_repair_steps
        Edge deletions allowed before giving up.
    """

    n: int
    edge_probability: Fraction = DEFAULT_EDGE_PROBABILITY
    seed: int = 0
    max_repair_steps: int = DEFAULT_MAX_REPAIR_STEPS

    def __post_init__(self):
        if not (0 <= self.n <= MAX_VERTICES):
            raise InvalidGenConfig(f"n = {self.n} is outside 0..{MAX_VERTICES}")
        if not (0 <= self.edge_probability <= 1):
            raise InvalidGenConfig(
                f"edge probability {self.edge_probability} is outside [0, 1]"
            )
        if not (0 <= self.seed <= MAX_SEED):
            raise InvalidGenConfig(f"seed {self.seed} is not a 64-bit unsigned value")
        if self.max_repair_steps < 0:
            raise InvalidGenConfig("max_repair_steps must not be negative")

    def with_seed(self, seed: int) -> Self:
        return GenConfig(self.n, self.edge_probability, seed, self.max_repair_steps)

    # @overrides FromDataMixin
    @classmethod
    def try_from_data(cls, data: Any) -> Optional[Self]:
        if isinstance(data, dict):
            p = fraction_from_field_optional(data, "edge_probability")
            return cls(
                n=int(data["n"]),
                edge_probability=p if p is not None else DEFAULT_EDGE_PROBABILITY,
                seed=int(data.get("seed", 0)),
                max_repair_steps=int(
                    data.get("max_repair_steps", DEFAULT_MAX_REPAIR_STEPS)
                ),
            )

    # @implements JsonSerializable
    def to_json(self) -> Any:
        return {
            "n": self.n,
            "edge_probability": str(self.edge_probability),
            "seed": self.seed,
            "max_repair_steps": self.max_repair_steps,
        }
