from fractions import Fraction
from typing import Any, Optional

from chibound.lib.exceptions import MalformedData
from chibound.lib.types import JsonObject

__all__ = (
    "try_fraction_from_data",
    "fraction_from_data",
    "fraction_from_field_optional",
)


def try_fraction_from_data(data: Any) -> Optional[Fraction]:
    # Booleans are ints; refuse them explicitly.
    if isinstance(data, bool):
        return None
    if isinstance(data, (int, Fraction)):
        return Fraction(data)
    if isinstance(data, float):
        return Fraction(data).limit_denominator(10**6)
    if isinstance(data, str):
        return Fraction(data.strip())


def fraction_from_data(data: Any) -> Fraction:
    try:
        if (maybe_from_data := try_fraction_from_data(data)) is not None:
            return maybe_from_data
    except Exception as ex:
        raise MalformedData(Fraction, data) from ex
    raise MalformedData(Fraction, data)


def fraction_from_field_optional(data: JsonObject, key: str) -> Optional[Fraction]:
    if (raw_value := data.get(key)) is not None:
        return fraction_from_data(raw_value)
