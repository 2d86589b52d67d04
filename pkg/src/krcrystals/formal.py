"""Finite linear combinations of affine crystal elements with exact
(p + q*sqrt(2))/2^e coefficients.  The empty sum plays the role of the
formal zero in the icrystal operator codomain.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .crystal import AffineElement
from .sqrt2 import Coeff, ONE


class FormalSum:
    """Immutable-by-convention map AffineElement -> Coeff, no zero terms."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Iterable[tuple[AffineElement, Coeff]]] = None):
        acc: dict[AffineElement, Coeff] = {}
        for elem, coeff in terms or ():
            cur = acc.get(elem)
            coeff = coeff if cur is None else cur + coeff
            if coeff.is_zero():
                acc.pop(elem, None)
            else:
                acc[elem] = coeff
        self.terms = acc

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def of(cls, elem: Optional[AffineElement], coeff: Coeff = ONE) -> "FormalSum":
        """A one-term sum; a None element gives the zero sum."""
        if elem is None:
            return cls()
        return cls([(elem, coeff)])

    def is_zero(self) -> bool:
        return not self.terms

    def scaled(self, c: Coeff) -> "FormalSum":
        return FormalSum((e, k * c) for e, k in self.terms.items())

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + other.scaled(Coeff(-1, 0))

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[AffineElement, Coeff]]:
        return iter(sorted(self.terms.items(), key=lambda t: (t[0].alpha, t[0].power, t[0].dual)))

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> set[AffineElement]:
        return set(self.terms)

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "elem": e.to_json()} for e, c in self]

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{c}·{e}" for e, c in self)
