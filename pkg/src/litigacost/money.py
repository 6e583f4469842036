"""Exact integer money arithmetic.

Amounts are integer minor units (e.g. euro cents) tagged with a 3-letter
currency code. Arithmetic is exact and never rounds; parsing rejects values
finer than two decimal places. Amounts of different currencies do not combine.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, InvalidOperation

from .errors import CurrencyMismatch

_CENT = Decimal("0.01")


@dataclass(frozen=True, order=False)
class Money:
    minor_units: int
    currency: str

    @classmethod
    def parse(cls, value: str | int | float | Decimal, currency: str) -> Money:
        """Parse a major-unit amount ("100000.00") into exact minor units.

        Raises ValueError for non-numeric input or more than 2 decimal places.
        """
        if isinstance(value, bool):
            raise ValueError("amount must be a number or decimal string")
        if isinstance(value, int):
            return cls(value * 100, currency)
        if isinstance(value, float):
            value = str(value)  # shortest repr, exact for JSON-sourced floats
        if not isinstance(value, (str, Decimal)):
            raise ValueError(f"amount must be a number or decimal string, got {type(value).__name__}")
        try:
            dec = Decimal(value.strip() if isinstance(value, str) else value)
        except InvalidOperation:
            raise ValueError(f"not a decimal amount: {value!r}") from None
        if not dec.is_finite():
            raise ValueError(f"not a finite amount: {value!r}")
        if dec.as_tuple().exponent < -2:
            raise ValueError(f"more than 2 decimal places: {value!r}")
        return cls(int(dec.scaleb(2)), currency)

    def as_decimal(self) -> Decimal:
        """Major units as an exact Decimal with 2 decimal places."""
        return (Decimal(self.minor_units) * _CENT).quantize(_CENT)

    def _require_same_currency(self, other: Money, op: str) -> None:
        if self.currency != other.currency:
            raise CurrencyMismatch(f"cannot {op} {other.currency} and {self.currency}")

    def __add__(self, other: Money) -> Money:
        self._require_same_currency(other, "add")
        return Money(self.minor_units + other.minor_units, self.currency)

    def __sub__(self, other: Money) -> Money:
        self._require_same_currency(other, "subtract")
        return Money(self.minor_units - other.minor_units, self.currency)

    def __mul__(self, factor: int) -> Money:
        if not isinstance(factor, int):
            return NotImplemented
        return Money(self.minor_units * factor, self.currency)

    __rmul__ = __mul__

    def __neg__(self) -> Money:
        return Money(-self.minor_units, self.currency)

    def __str__(self) -> str:
        return str(self.as_decimal())


def zero(currency: str) -> Money:
    return Money(0, currency)
