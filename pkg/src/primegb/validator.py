from typing import Any, Tuple

from attrs import Attribute

from .errors import NegativeExponent


def _positive_validator(self: Any, attribute: "Attribute[Any]", value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ValueError(f"{attribute.name} must be a positive integer, got {value}")


def _exponents_validator(
    self: Any, attribute: "Attribute[Any]", value: Tuple[int, ...]
) -> None:
    for exponent in value:
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            raise TypeError(f"{attribute.name} must hold integers, got {exponent!r}")
        if exponent < 0:
            raise NegativeExponent(f"{attribute.name} cannot hold {exponent}")


def _nonzero_validator(self: Any, attribute: "Attribute[Any]", value: Any) -> None:
    if value == 0:
        raise ValueError(f"{attribute.name} cannot be {value}")
