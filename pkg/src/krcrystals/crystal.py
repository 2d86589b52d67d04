"""KR crystals B_s for the vector-representation family in affine type A,
their duals, affinizations, and the two-factor tensor product rule.

An element of the affinized crystal B_s(x) is written x^d b_alpha where
alpha is a composition of s into n nonnegative parts; the dual crystal
B_s^vee(x^-1) uses the same labels with the dual flag set.  Crystal
operators return the sentinel None (the formal zero) when they leave the
crystal.  Composition subscripts are 1-based and cyclic: alpha_i for a
node index i means entry (i-1) mod n.

The tensor rule here has the first factor dominant for F (opposite to the
more common convention); the displayed branch conditions are used as-is.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional


@dataclass(frozen=True)
class AffineElement:
    """x^d b_alpha (dual=False) or x^d b_alpha^vee (dual=True).

    `power` is the exponent of the displayed base indeterminate, exactly as
    it would appear in a figure label.
    """

    dual: bool
    power: int
    alpha: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        if any(a < 0 for a in self.alpha):
            raise ValueError(f"negative composition entry in {self.alpha}")

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def s(self) -> int:
        return sum(self.alpha)

    def entry(self, i: int) -> int:
        """1-based cyclic entry alpha_i."""
        return self.alpha[(i - 1) % self.n]

    def to_json(self) -> dict:
        return {"dual": self.dual, "power": self.power, "alpha": list(self.alpha)}

    @classmethod
    def from_json(cls, obj: dict) -> "AffineElement":
        return cls(bool(obj.get("dual", False)), int(obj.get("power", 0)),
                   tuple(int(a) for a in obj["alpha"]))

    def __str__(self) -> str:
        body = "".join(str(a) for a in self.alpha) if max(self.alpha, default=0) < 10 \
            else ",".join(str(a) for a in self.alpha)
        tag = "^v" if self.dual else ""
        return f"x^{self.power}({body}){tag}"


def compositions(n: int, s: int) -> Iterator[tuple[int, ...]]:
    """All compositions of s into n nonnegative parts, in lexicographic order."""
    if n < 2:
        raise ValueError(f"rank must be at least 2, got n={n}")
    if s < 0:
        raise ValueError(f"s must be nonnegative, got s={s}")
    # stars and bars; bar positions chosen increasing give lex order on parts
    for bars in combinations(range(s + n - 1), n - 1):
        prev = -1
        parts = []
        for b in bars:
            parts.append(b - prev - 1)
            prev = b
        parts.append(s + n - 2 - prev)
        yield tuple(parts)


def composition_count(n: int, s: int) -> int:
    return comb(s + n - 1, n - 1)


def _shift(alpha: tuple[int, ...], plus: int, minus: int) -> Optional[tuple[int, ...]]:
    """alpha + e_plus - e_minus with 1-based cyclic indices, or None."""
    n = len(alpha)
    out = list(alpha)
    out[(plus - 1) % n] += 1
    out[(minus - 1) % n] -= 1
    if out[(minus - 1) % n] < 0:
        return None
    return tuple(out)


def eps(i: int, e: AffineElement) -> int:
    """epsilon_i: alpha_{i+1} on B_s(x), alpha_i on the dual."""
    return e.entry(i) if e.dual else e.entry(i + 1)


def phi(i: int, e: AffineElement) -> int:
    """phi_i: alpha_i on B_s(x), alpha_{i+1} on the dual."""
    return e.entry(i + 1) if e.dual else e.entry(i)


def weight(e: AffineElement) -> tuple[int, ...]:
    """The level-zero classical weight (<h_i, wt>)_{i in Z/nZ}."""
    w = tuple(e.entry(i) - e.entry(i + 1) for i in range(e.n))
    return tuple(-c for c in w) if e.dual else w


def etilde(i: int, e: AffineElement, at_inverse: bool = False) -> Optional[AffineElement]:
    """Raising operator E~_i; None when it annihilates.

    `at_inverse` means the element sits at the inverse of its base
    indeterminate, so the i = 0 exponent shift acts on the displayed power
    with the opposite sign.
    """
    n = e.n
    d_shift = (1 if (i % n) == 0 else 0)
    if e.dual:
        alpha = _shift(e.alpha, i + 1, i)
        d_shift = -d_shift
    else:
        alpha = _shift(e.alpha, i, i + 1)
    if at_inverse:
        d_shift = -d_shift
    if alpha is None:
        return None
    return AffineElement(e.dual, e.power + d_shift, alpha)


def ftilde(i: int, e: AffineElement, at_inverse: bool = False) -> Optional[AffineElement]:
    """Lowering operator F~_i; None when it annihilates."""
    n = e.n
    d_shift = (-1 if (i % n) == 0 else 0)
    if e.dual:
        alpha = _shift(e.alpha, i, i + 1)
        d_shift = -d_shift
    else:
        alpha = _shift(e.alpha, i + 1, i)
    if at_inverse:
        d_shift = -d_shift
    if alpha is None:
        return None
    return AffineElement(e.dual, e.power + d_shift, alpha)


def dualize(e: AffineElement) -> AffineElement:
    """Flip the dual flag, preserving alpha and the spectral exponent."""
    return AffineElement(not e.dual, e.power, e.alpha)


def _check_ranks(e1: AffineElement, e2: AffineElement):
    if e1.n != e2.n:
        raise ValueError(f"rank mismatch: {e1.n} vs {e2.n}")


def tensor_eps(i: int, e1: AffineElement, e2: AffineElement) -> int:
    _check_ranks(e1, e2)
    return eps(i, e2) + max(eps(i, e1) - phi(i, e2), 0)


def tensor_phi(i: int, e1: AffineElement, e2: AffineElement) -> int:
    _check_ranks(e1, e2)
    return phi(i, e1) + max(phi(i, e2) - eps(i, e1), 0)


def tensor_op(op: str, i: int, e1: AffineElement, e2: AffineElement,
              at_inverse1: bool = False, at_inverse2: bool = False,
              ) -> Optional[tuple[AffineElement, AffineElement]]:
    """Apply E~_i or F~_i to the ordered pair e1 (x) e2; None when zero.

    op is "E" or "F".  E acts on the first factor iff eps_i(e1) > phi_i(e2);
    F acts on the first factor iff eps_i(e1) >= phi_i(e2).
    """
    _check_ranks(e1, e2)
    op = op.upper()
    if op not in ("E", "F"):
        raise ValueError(f"op must be E or F, got {op!r}")
    first = eps(i, e1) > phi(i, e2) if op == "E" else eps(i, e1) >= phi(i, e2)
    fn = etilde if op == "E" else ftilde
    if first:
        out = fn(i, e1, at_inverse1)
        return None if out is None else (out, e2)
    out = fn(i, e2, at_inverse2)
    return None if out is None else (e1, out)
