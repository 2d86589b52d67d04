"""Piecewise-linear combinatorial R-matrices for the three ordered kinds
plain(x)plain, dual(x)plain and dual(x)dual, with spectral-exponent
bookkeeping and orientation handling.

Stored powers are display powers (what a figure label would show).  Each
formula acts on formula-native exponents: when a tensor slot sits at the
inverse of its base indeterminate, the native exponent is the negated
stored power, and the result is converted back after the shift.

Two displayed forms contain typos that the worked examples contradict; the
corrected forms used here are:

* the DR output power shift is P_0(alpha, beta), not Q_0(alpha, beta);
* the DD alpha' update takes arguments (beta, alpha), mirroring beta'.

The literal forms are kept (``r_apply_literal``) so the verifier can
demonstrate the counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .crystal import AffineElement


@dataclass(frozen=True)
class OrientedSlot:
    """A tensor factor together with its spectral orientation.

    at_inverse marks that the factor sits at the inverse of its base
    indeterminate (e.g. B_s(x^-1)); the stored power remains a
    base-indeterminate exponent.
    """

    elem: AffineElement
    at_inverse: bool = False

    @property
    def native_power(self) -> int:
        return -self.elem.power if self.at_inverse else self.elem.power

    def with_native(self, alpha: tuple[int, ...], native: int) -> "OrientedSlot":
        power = -native if self.at_inverse else native
        return OrientedSlot(AffineElement(self.elem.dual, power, alpha), self.at_inverse)


def r_kind(slot1: OrientedSlot, slot2: OrientedSlot) -> str:
    """rr, dr or dd according to the slots' dual flags."""
    d1, d2 = slot1.elem.dual, slot2.elem.dual
    if not d1 and not d2:
        return "rr"
    if d1 and not d2:
        return "dr"
    if d1 and d2:
        return "dd"
    raise ValueError("no piecewise-linear formula for the plain(x)dual kind")


def q_shift(i: int, alpha: tuple[int, ...], beta: tuple[int, ...]) -> int:
    """Q_i(alpha, beta) = min over 1<=k<=n of
    (sum_{j=k+1}^{n} alpha_{i+j} + sum_{j=1}^{k-1} beta_{i+j}), cyclic."""
    n = len(alpha)
    if len(beta) != n:
        raise ValueError(f"rank mismatch: {n} vs {len(beta)}")

    def a(j):
        return alpha[(i + j - 1) % n]

    def b(j):
        return beta[(i + j - 1) % n]

    return min(sum(a(j) for j in range(k + 1, n + 1)) + sum(b(j) for j in range(1, k))
               for k in range(1, n + 1))


def p_shift(i: int, alpha: tuple[int, ...], beta: tuple[int, ...]) -> int:
    """P_i(alpha, beta) = min(alpha_{i+1}, beta_{i+1}), cyclic."""
    n = len(alpha)
    if len(beta) != n:
        raise ValueError(f"rank mismatch: {n} vs {len(beta)}")
    return min(alpha[i % n], beta[i % n])


def _rr_maps(alpha, beta):
    n = len(alpha)
    q = [q_shift(i, alpha, beta) for i in range(n)]
    beta_out = tuple(beta[i] + q[(i + 1) % n] - q[i] for i in range(n))
    alpha_out = tuple(alpha[i] + q[i] - q[(i + 1) % n] for i in range(n))
    return beta_out, alpha_out, q[0]


def _dr_maps(alpha, beta):
    n = len(alpha)
    p = [p_shift(i, alpha, beta) for i in range(n)]
    beta_out = tuple(beta[i] + p[(i + 1) % n] - p[i] for i in range(n))
    alpha_out = tuple(alpha[i] + p[(i + 1) % n] - p[i] for i in range(n))
    return beta_out, alpha_out, p[0]


def _dd_maps(alpha, beta):
    n = len(alpha)
    q = [q_shift(i, beta, alpha) for i in range(n)]
    beta_out = tuple(beta[i] + q[i] - q[(i + 1) % n] for i in range(n))
    alpha_out = tuple(alpha[i] + q[(i + 1) % n] - q[i] for i in range(n))
    return beta_out, alpha_out, q[0]


def r_apply(slot1: OrientedSlot, slot2: OrientedSlot,
            kind: str | None = None) -> tuple[OrientedSlot, OrientedSlot]:
    """Apply the combinatorial R-matrix to an ordered pair of slots.

    Returns the swapped pair: the first output carries the second input's
    crystal (flags and variable) with the transformed second composition,
    and vice versa.  The second factor's native exponent gains the shift,
    the first factor's loses it.
    """
    actual = r_kind(slot1, slot2)
    if kind is not None and kind != actual:
        raise ValueError(f"kind {kind!r} does not match slot flags ({actual})")
    e1, e2 = slot1.elem, slot2.elem
    if e1.n != e2.n:
        raise ValueError(f"rank mismatch: {e1.n} vs {e2.n}")
    maps = {"rr": _rr_maps, "dr": _dr_maps, "dd": _dd_maps}[actual]
    beta_out, alpha_out, shift = maps(e1.alpha, e2.alpha)
    out_first = slot2.with_native(beta_out, slot2.native_power + shift)
    out_second = slot1.with_native(alpha_out, slot1.native_power - shift)
    return out_first, out_second


def _dr_maps_literal(alpha, beta):
    # uncorrected display: power shift read as Q_0(alpha, beta)
    beta_out, alpha_out, _ = _dr_maps(alpha, beta)
    return beta_out, alpha_out, q_shift(0, alpha, beta)


def _dd_maps_literal(alpha, beta):
    # uncorrected display: alpha' update with arguments (alpha, beta)
    n = len(alpha)
    qba = [q_shift(i, beta, alpha) for i in range(n)]
    qab = [q_shift(i, alpha, beta) for i in range(n)]
    beta_out = tuple(beta[i] + qba[i] - qba[(i + 1) % n] for i in range(n))
    alpha_out = tuple(alpha[i] + qab[(i + 1) % n] - qab[i] for i in range(n))
    return beta_out, alpha_out, qba[0]


def r_apply_literal(slot1: OrientedSlot, slot2: OrientedSlot,
                    ) -> tuple[OrientedSlot, OrientedSlot]:
    """The uncorrected DR/DD displayed formulas, for counterexample reports.

    May produce tuples with negative entries; those are returned as raw
    slot data via exceptions from AffineElement, so this variant reports
    compositions as plain tuples inside ValueError when invalid.
    """
    actual = r_kind(slot1, slot2)
    e1, e2 = slot1.elem, slot2.elem
    maps = {"rr": _rr_maps, "dr": _dr_maps_literal, "dd": _dd_maps_literal}[actual]
    beta_out, alpha_out, shift = maps(e1.alpha, e2.alpha)
    out_first = slot2.with_native(beta_out, slot2.native_power + shift)
    out_second = slot1.with_native(alpha_out, slot1.native_power - shift)
    return out_first, out_second
