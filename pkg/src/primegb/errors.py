from __future__ import annotations

__all__ = [
    "PrimeGBError",
    "ArityMismatch",
    "ForeignPrimeFactor",
    "NotDivisible",
    "ZeroPolynomial",
    "EmptyBasis",
    "PolynomialSyntaxError",
    "UndefinedVariable",
    "NegativeExponent",
    "TooManyVariables",
    "PassLimitExceeded",
    "DivisionStepLimitExceeded",
    "BuchbergerCriterionViolated",
]


class PrimeGBError(Exception):
    """Base class of every error raised by primegb."""


class ArityMismatch(PrimeGBError, ValueError):
    """Values built over different numbers of variables were combined."""


class ForeignPrimeFactor(PrimeGBError, ValueError):
    """An integer does not encode a monomial of the given context."""

    def __init__(self, value: int, factors: list[int]) -> None:
        super().__init__(
            f"{value} has prime factors {factors} outside the variable context"
        )
        self.value = value
        self.factors = factors


class NotDivisible(PrimeGBError, ValueError):
    pass


class ZeroPolynomial(PrimeGBError, ValueError):
    """The zero polynomial has no leading term."""


class EmptyBasis(PrimeGBError, ValueError):
    pass


class PolynomialSyntaxError(PrimeGBError, ValueError):
    """Malformed polynomial text.

    Parameters
    ----------
    message : str
        What went wrong.
    text : str
        The text being parsed.
    position : int
        0-based offset of the offending character.
    """

    def __init__(self, message: str, text: str, position: int) -> None:
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class UndefinedVariable(PrimeGBError, ValueError):
    def __init__(self, index: int, num_vars: int) -> None:
        super().__init__(
            f"x{index} is undefined, variables are x0..x{num_vars - 1}"
        )
        self.index = index
        self.num_vars = num_vars


class NegativeExponent(PrimeGBError, ValueError):
    pass


class TooManyVariables(PrimeGBError, ValueError):
    pass


class PassLimitExceeded(PrimeGBError, RuntimeError):
    def __init__(self, max_passes: int) -> None:
        super().__init__(f"no fixed point reached within {max_passes} passes")
        self.max_passes = max_passes


class DivisionStepLimitExceeded(PrimeGBError, RuntimeError):
    def __init__(self, max_steps: int) -> None:
        super().__init__(f"division did not finish within {max_steps} steps")
        self.max_steps = max_steps


class BuchbergerCriterionViolated(PrimeGBError, AssertionError):
    """A returned basis has an S-polynomial with nonzero remainder."""
