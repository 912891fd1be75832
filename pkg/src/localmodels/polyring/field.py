"""Exact coefficient fields: the rationals and prime fields."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % k for k in range(3, isqrt(n) + 1, 2))


@dataclass(frozen=True)
class Field:
    """``characteristic == 0`` means the rationals, otherwise GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not (is_prime(p) and p < 2**31):
            raise ValueError(f"characteristic must be 0 or a prime below 2^31, got {p}")

    @property
    def name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def __call__(self, x):
        p = self.characteristic
        if p:
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, p) % p
            return int(x) % p
        return Fraction(x)

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        p = self.characteristic
        return pow(x, -1, p) if p else 1 / Fraction(x)

    def div(self, a, b):
        return self(a * self.inv(b))

    def elements(self):
        if not self.characteristic:
            raise ValueError("QQ is infinite")
        return range(self.characteristic)

    def format(self, x) -> str:
        return str(x)

    @classmethod
    def parse(cls, text: str) -> "Field":
        """Accept ``q``, ``QQ``, ``0``, ``5``, ``p5``, ``GF(5)``, ``F5``."""
        t = str(text).strip().upper().replace(" ", "")
        if t in ("Q", "QQ", "0", "RATIONALS"):
            return QQ
        for prefix in ("GF(", "F(", "P(", "GF", "F", "P"):
            if t.startswith(prefix):
                t = t[len(prefix):].rstrip(")")
                break
        return cls(int(t))

    def __str__(self):
        return self.name


QQ = Field(0)


def GF(p: int) -> Field:
    return Field(p)
