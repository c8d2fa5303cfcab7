import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from logging import Logger, getLogger
from pathlib import Path
from typing import Any, Mapping, Optional, Self

import yaml
from yaml import YAMLError

from chibound.core.exceptions import (
    InvalidConfigValue,
    UnreadableConfig,
    UnsupportedConfigFormat,
)
from chibound.ext.colorer import ColorerOptions
from chibound.ext.generators import (
    DEFAULT_EDGE_PROBABILITY,
    DEFAULT_MAX_REPAIR_STEPS,
    GenConfig,
)
from chibound.lib import FromDataMixin, JsonSerializable, MalformedData, json_load
from chibound.lib.constants import DEFAULT_LEDGER_PATH, LEDGER_ENV_VAR
from chibound.lib.types import JsonObject
from chibound.lib.utils import dict_without_nones, fraction_from_field_optional

__all__ = ("Config",)


log: Logger = getLogger(__name__)


DEFAULT_GENERATION_ATTEMPTS = 8


@dataclass(frozen=True)
class Config(JsonSerializable, FromDataMixin):
    """
    Settings shared by every command.

    Attributes
    ----------
    ledger
        Where campaign records are appended.
    workers
        Worker processes for campaigns.
    seed
        Base seed for fuzzing; item seeds are derived from it.
    edge_probability
        Edge probability of the random draws.
    max_repair_steps
        Edge deletions a draw may need before it counts as a failure.
    max_generation_attempts
        Fresh seeds tried per fuzz item before the item is skipped.
    colorer
        Options passed to every coloring.
    """

    ledger: Path = Path(DEFAULT_LEDGER_PATH)
    workers: int = 1
    seed: int = 0
    edge_probability: Fraction = DEFAULT_EDGE_PROBABILITY
    max_repair_steps: int = DEFAULT_MAX_REPAIR_STEPS
    max_generation_attempts: int = DEFAULT_GENERATION_ATTEMPTS
    colorer: ColorerOptions = field(default_factory=ColorerOptions)

    def __post_init__(self):
        # Reuse the generator's range checks.
        self.gen_config(0)
        if self.workers < 1:
            raise InvalidConfigValue("workers", "must be at least 1")
        if self.max_generation_attempts < 1:
            raise InvalidConfigValue("max_generation_attempts", "must be at least 1")

    def gen_config(self, n: int, seed: Optional[int] = None) -> GenConfig:
        return GenConfig(
            n=n,
            edge_probability=self.edge_probability,
            seed=self.seed if seed is None else seed,
            max_repair_steps=self.max_repair_steps,
        )

    # @overrides FromDataMixin
    @classmethod
    def try_from_data(cls, data: Any) -> Optional[Self]:
        if isinstance(data, dict):
            colorer = (
                ColorerOptions.from_field_optional(data, "colorer") or ColorerOptions()
            )
            if (closed := data.get("closed_neighborhood")) is not None:
                colorer = replace(colorer, closed_neighborhood=bool(closed))
            p = fraction_from_field_optional(data, "edge_probability")
            return cls(
                ledger=Path(data.get("ledger", DEFAULT_LEDGER_PATH)),
                workers=int(data.get("workers", 1)),
                seed=int(data.get("seed", 0)),
                edge_probability=p if p is not None else DEFAULT_EDGE_PROBABILITY,
                max_repair_steps=int(
                    data.get("max_repair_steps", DEFAULT_MAX_REPAIR_STEPS)
                ),
                max_generation_attempts=int(
                    data.get("max_generation_attempts", DEFAULT_GENERATION_ATTEMPTS)
                ),
                colorer=colorer,
            )

    # @implements JsonSerializable
    def to_json(self) -> Any:
        return {
            "ledger": str(self.ledger),
            "workers": self.workers,
            "seed": self.seed,
            "edge_probability": str(self.edge_probability),
            "max_repair_steps": self.max_repair_steps,
            "max_generation_attempts": self.max_generation_attempts,
            "colorer": self.colorer.to_json(),
        }

    @classmethod
    def from_file(cls, path: Path) -> Self:
        """Read a JSON or YAML configuration file."""
        raw_config: JsonObject = {}
        try:
            match path.suffix.lower():
                case ".json":
                    raw_config = json_load(path)
                case ".yaml" | ".yml":
                    with open(path) as file:
                        raw_config = yaml.safe_load(file) or {}
                case _:
                    raise UnsupportedConfigFormat(path)
        except (OSError, ValueError, YAMLError) as ex:
            raise UnreadableConfig(path, str(ex)) from ex
        log.info(f"Number of configuration keys: {len(raw_config)}")
        try:
            return cls.from_data(raw_config)
        except MalformedData as ex:
            raise UnreadableConfig(path, str(ex.__cause__ or ex)) from ex

    def with_env(self, environ: Optional[Mapping[str, str]] = None) -> Self:
        """Apply `CHIBOUND_LEDGER` from the environment."""
        environ = os.environ if environ is None else environ
        if ledger := environ.get(LEDGER_ENV_VAR):
            log.info(f"Ledger path from {LEDGER_ENV_VAR}: {ledger}")
            return replace(self, ledger=Path(ledger))
        return self

    def with_overrides(self, **overrides: Any) -> Self:
        """Apply explicit settings, ignoring the ones left as `None`."""
        if not (given := dict_without_nones(overrides)):
            return self
        if (closed := given.pop("closed_neighborhood", None)) is not None:
            given["colorer"] = replace(
                given.get("colorer", self.colorer), closed_neighborhood=closed
            )
        if (strict := given.pop("strict_three_part", None)) is not None:
            given["colorer"] = replace(
                given.get("colorer", self.colorer), strict_three_part=strict
            )
        return replace(self, **given)
