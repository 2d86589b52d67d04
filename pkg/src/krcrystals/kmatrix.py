"""Combinatorial K-matrices for the three quasi-split families.

* A1 (twisted): x^d b_alpha -> x^{d+I(alpha)} b^vee_{alpha'} with
  I(alpha) = 2*floor(alpha_1/2) and
  alpha'_i = alpha_{i+1} + theta(alpha_i) - theta(alpha_{i+1});
  closed-form inverse J(alpha) = -alpha_n + theta(alpha_n),
  alpha''_i = alpha_{i-1} + theta(alpha_i) - theta(alpha_{i-1}).

* A3 (untwisted): for s even the identity on compositions; for s odd
  alpha +- (e_{i'} - e_{n-i'+1}) according to the n-way case division,
  with energy I(alpha) = -2*floor((alpha_n + gamma_1 + [s even])/2).

* A4 (twisted): alpha'_i = alpha_{i+1} + alpha_{i+n'+1}
  + max(alpha_i, alpha_{i+n'}) - alpha_i - max(alpha_{i+1}, alpha_{i+n'+1}),
  energy I(alpha) = min(alpha_1, alpha_{n'+1}) - sum_{j>n'} alpha_j; the
  inverse is tabulated per (n, s) since no closed form is available.

Output exponents are displayed base-indeterminate powers: the codomain
sits at the inverse spectral parameter, but labels keep x-exponents.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .crystal import AffineElement, compositions
from .satake import Family, SatakeDiagram


def _theta(m: int) -> int:
    return m % 2


@dataclass(frozen=True)
class A3Case:
    """One block of the A3 case division (only meaningful for s odd)."""

    index: int  # 1..n (n+1 cannot occur when both n and s are odd)

    @property
    def i(self) -> int:
        """The parameter with index = 2i+1 or 2i+2."""
        return (self.index - 1) // 2

    @property
    def iprime(self) -> int:
        return (self.index + 1) // 2

    @property
    def sign(self) -> int:
        return 1 if self.index % 2 == 1 else -1


def _block(alpha: tuple[int, ...], lo: int, hi: int) -> int:
    """sum of alpha_lo..alpha_hi (1-based, empty when lo > hi)."""
    return sum(alpha[j - 1] for j in range(lo, hi + 1))


def _case_holds(n: int, alpha: tuple[int, ...], i: int, odd_variant: bool) -> bool:
    """Case (2i+1) when odd_variant else Case (2i+2), for 0 <= i <= n'."""
    np_ = (n - 1) // 2
    # left chain on head/tail blocks: strict for (2i+1), weak for (2i+2)
    for t in range(1, i + 1):
        lhs = _block(alpha, t, i)
        rhs = _block(alpha, n - i, n - t)
        if odd_variant:
            if not lhs < rhs:
                return False
        else:
            if not lhs <= rhs:
                return False
    # right chain: weak for (2i+1), strict for (2i+2)
    for u in range(i + 1, np_ + 1):
        lhs = _block(alpha, i + 1, u)
        rhs = _block(alpha, n - u, n - i - 1)
        if odd_variant:
            if not lhs >= rhs:
                return False
        else:
            if not lhs > rhs:
                return False
    parity = (_block(alpha, 1, i) + _block(alpha, n - i, n)) % 2
    return parity == (1 if odd_variant else 0)


def a3_case(n: int, alpha: tuple[int, ...]) -> A3Case:
    """The unique case of the A3 division; requires s = sum(alpha) odd."""
    if sum(alpha) % 2 == 0:
        raise ValueError("the A3 case division applies only when s is odd")
    np_ = (n - 1) // 2
    found = []
    for i in range(np_ + 1):
        if _case_holds(n, alpha, i, odd_variant=True):
            found.append(2 * i + 1)
        if _case_holds(n, alpha, i, odd_variant=False):
            found.append(2 * i + 2)
    if len(found) != 1:
        raise AssertionError(f"case division not a partition at {alpha}: {found}")
    return A3Case(found[0])


def a3_gamma_seq(n: int, alpha: tuple[int, ...]) -> tuple[int, ...]:
    """(gamma_1, ..., gamma_n') from the downward recursion
    gamma_{n'} = (alpha_{n-n'} - alpha_{n'})_+,
    gamma_j = (gamma_{j+1} + alpha_{n-j} - alpha_j)_+."""
    np_ = (n - 1) // 2
    if np_ == 0:
        return ()
    gam = {np_: max(alpha[n - np_ - 1] - alpha[np_ - 1], 0)}
    for j in range(np_ - 1, 0, -1):
        gam[j] = max(gam[j + 1] + alpha[n - j - 1] - alpha[j - 1], 0)
    return tuple(gam[j] for j in range(1, np_ + 1))


def a3_gamma(n: int, alpha: tuple[int, ...]) -> int:
    seq = a3_gamma_seq(n, alpha)
    return seq[0] if seq else 0


def k_energy(diagram: SatakeDiagram, s: int, alpha: tuple[int, ...]) -> int:
    """The integer exponent shift I(alpha) accompanying a K-application."""
    n = diagram.n
    if len(alpha) != n or sum(alpha) != s:
        raise ValueError(f"alpha is not a composition of {s} into {n} parts")
    if diagram.family is Family.A1:
        return 2 * (alpha[0] // 2)
    if diagram.family is Family.A3:
        even = 1 if s % 2 == 0 else 0
        return -2 * ((alpha[n - 1] + a3_gamma(n, alpha) + even) // 2)
    np_ = diagram.nprime
    return min(alpha[0], alpha[np_]) - sum(alpha[np_:])


def _a1_image(alpha: tuple[int, ...]) -> tuple[int, ...]:
    n = len(alpha)
    return tuple(alpha[(i + 1) % n] + _theta(alpha[i]) - _theta(alpha[(i + 1) % n])
                 for i in range(n))


def _a4_image(n: int, alpha: tuple[int, ...]) -> tuple[int, ...]:
    np_ = n // 2

    def a(j):  # 1-based cyclic
        return alpha[(j - 1) % n]

    return tuple(
        a(i + 1) + a(i + np_ + 1) + max(a(i), a(i + np_)) - a(i)
        - max(a(i + 1), a(i + np_ + 1))
        for i in range(1, n + 1))


def _a3_image(n: int, s: int, alpha: tuple[int, ...]) -> tuple[int, ...]:
    if s % 2 == 0:
        return alpha
    case = a3_case(n, alpha)
    out = list(alpha)
    ip = case.iprime
    out[ip - 1] += case.sign
    out[n - ip] -= case.sign
    if min(out) < 0:
        raise AssertionError(f"A3 image left the composition cone at {alpha}")
    return tuple(out)


def k_apply(diagram: SatakeDiagram, s: int, e: AffineElement,
            offset: int = 0) -> AffineElement:
    """The combinatorial K-matrix on a plain element of B_s(x).

    The codomain is B_s^vee(x^-1) for A1/A4 (twisted) and B_s(x^-1) for A3
    (untwisted).  `offset` exercises the unique-up-to-x^d normalization
    freedom; default 0 matches the closed formulas.
    """
    if e.dual:
        raise ValueError("k_apply expects a plain element; use k_inverse")
    if e.n != diagram.n or e.s != s:
        raise ValueError("element does not live in B_s for this diagram")
    energy = k_energy(diagram, s, e.alpha)
    if diagram.family is Family.A1:
        image = _a1_image(e.alpha)
        dual = True
    elif diagram.family is Family.A3:
        image = _a3_image(diagram.n, s, e.alpha)
        dual = False
    else:
        image = _a4_image(diagram.n, e.alpha)
        dual = True
    return AffineElement(dual, e.power + energy + offset, image)


@lru_cache(maxsize=None)
def _a4_inverse_table(n: int, s: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    table = {}
    for alpha in compositions(n, s):
        image = _a4_image(n, alpha)
        if image in table:
            raise AssertionError(f"A4 image not injective at (n={n}, s={s})")
        table[image] = alpha
    return table


def k_inverse(diagram: SatakeDiagram, s: int, e: AffineElement,
              offset: int = 0) -> AffineElement:
    """Two-sided inverse of k_apply, exponent bookkeeping included."""
    if e.n != diagram.n or e.s != s:
        raise ValueError("element does not live in B_s^* for this diagram")
    if diagram.family is Family.A1:
        if not e.dual:
            raise ValueError("A1 k_inverse expects a dual element")
        n = e.n
        alpha = e.alpha
        j_shift = -alpha[n - 1] + _theta(alpha[n - 1])
        image = tuple(alpha[(i - 1) % n] + _theta(alpha[i]) - _theta(alpha[(i - 1) % n])
                      for i in range(n))
        return AffineElement(False, e.power + j_shift + offset, image)
    if diagram.family is Family.A3:
        if e.dual:
            raise ValueError("A3 k_inverse expects a plain element")
        # same formula at the inverse spectral parameter: K(x^-1)K(x) = id
        energy = k_energy(diagram, s, e.alpha)
        image = _a3_image(diagram.n, s, e.alpha)
        return AffineElement(False, e.power - energy + offset, image)
    if not e.dual:
        raise ValueError("A4 k_inverse expects a dual element")
    table = _a4_inverse_table(diagram.n, s)
    alpha = table[e.alpha]
    energy = k_energy(diagram, s, alpha)
    return AffineElement(False, e.power - energy + offset, alpha)
