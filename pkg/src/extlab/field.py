"""Coefficient fields: the rationals and prime fields F_p."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]

_MAX_CHAR = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A base field, identified by its characteristic (0 means Q)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not (_is_prime(p) and p < _MAX_CHAR):
            raise ValueError(f"characteristic must be 0 or a prime < 2^31, got {p}")

    @property
    def kind(self) -> str:
        return "rationals" if self.characteristic == 0 else "prime-field"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Accept ``Q``, ``QQ``, ``F2``, ``F<7>``, ``GF(3)`` and the like."""
        t = text.strip()
        if t in ("Q", "QQ", "0"):
            return cls(0)
        m = re.fullmatch(r"(?:F|GF|FF)\s*[<(]?\s*(\d+)\s*[>)]?", t)
        if not m:
            raise ValueError(f"unrecognised field {text!r}")
        return cls(int(m.group(1)))

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    def __call__(self, value) -> Scalar:
        """Coerce an int or Fraction into this field."""
        p = self.characteristic
        if p == 0:
            if isinstance(value, Fraction):
                return value
            if isinstance(value, int):
                return Fraction(value)
            raise TypeError(f"cannot coerce {value!r} into {self}")
        if isinstance(value, Fraction):
            if value.denominator % p == 0:
                raise ValueError(f"coefficient {value} is not representable in {self}")
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, int):
            return value % p
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def inverse(self, x: Scalar) -> Scalar:
        if not x:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        if p == 0:
            return 1 / Fraction(x)
        return pow(x, -1, p)

    def elements(self):
        """All elements of a finite field, 0 first."""
        if self.characteristic == 0:
            raise ValueError("Q is infinite")
        return range(self.characteristic)


QQ = FieldSpec(0)
GF2 = FieldSpec(2)
