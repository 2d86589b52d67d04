"""Exact coefficients of the form (p + q*sqrt(2)) / 2^e.

This is the smallest ring containing 1 and 1/sqrt(2) = sqrt(2)/2, which is
all the icrystal operators ever produce.  Canonical form: e = 0, or p and q
not both even; equality is structural on canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Coeff:
    p: int
    q: int
    e: int = 0

    def __post_init__(self):
        if self.e < 0:
            raise ValueError("exponent e must be nonnegative")
        p, q, e = self.p, self.q, self.e
        while e > 0 and p % 2 == 0 and q % 2 == 0:
            p //= 2
            q //= 2
            e -= 1
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "e", e)

    @classmethod
    def from_int(cls, k: int) -> "Coeff":
        return cls(k, 0, 0)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __add__(self, other: "Coeff") -> "Coeff":
        e = max(self.e, other.e)
        return Coeff(
            (self.p << (e - self.e)) + (other.p << (e - other.e)),
            (self.q << (e - self.e)) + (other.q << (e - other.e)),
            e,
        )

    def __neg__(self) -> "Coeff":
        return Coeff(-self.p, -self.q, self.e)

    def __sub__(self, other: "Coeff") -> "Coeff":
        return self + (-other)

    def __mul__(self, other: "Coeff") -> "Coeff":
        return Coeff(
            self.p * other.p + 2 * self.q * other.q,
            self.p * other.q + self.q * other.p,
            self.e + other.e,
        )

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        if self == Coeff(0, 1, 1):
            return "1/√2"
        num_parts = []
        if self.p:
            num_parts.append(str(self.p))
        if self.q:
            if self.q == 1:
                num_parts.append("√2")
            elif self.q == -1:
                num_parts.append("-√2")
            else:
                num_parts.append(f"{self.q}√2")
        num = "+".join(num_parts).replace("+-", "-")
        if self.e == 0:
            return num
        if len(num_parts) > 1:
            num = f"({num})"
        den = "2" if self.e == 1 else f"2^{self.e}"
        return f"{num}/{den}"


ONE = Coeff(1, 0, 0)
HALF_SQRT2 = Coeff(0, 1, 1)  # 1/sqrt(2)
