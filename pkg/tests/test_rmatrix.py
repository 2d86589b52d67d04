"""Combinatorial R-matrices: shifts, the three kinds, orientation."""

import pytest

from krcrystals import (AffineElement, OrientedSlot, p_shift, q_shift,
                        r_apply, r_kind)
from krcrystals.rmatrix import r_apply_literal


def slot(alpha, d=0, dual=False, inv=False):
    return OrientedSlot(AffineElement(dual, d, tuple(alpha)), at_inverse=inv)


def test_q_shift():
    assert q_shift(0, (1, 2, 2), (2, 1, 0)) == 3
    assert q_shift(0, (3, 1, 2, 1), (1, 2, 1, 1)) == 4
    # rotating both arguments rotates the index
    assert q_shift(1, (1, 2, 2), (2, 1, 0)) == q_shift(0, (2, 2, 1), (1, 0, 2))


def test_p_shift():
    assert p_shift(0, (3, 2, 0), (2, 1, 0)) == 2
    assert p_shift(0, (1, 2, 2, 2), (1, 2, 1, 1)) == 1
    assert p_shift(2, (3, 2, 0), (2, 1, 0)) == 0


def test_r_kind():
    assert r_kind(slot((1, 0, 0)), slot((0, 1, 0))) == "rr"
    assert r_kind(slot((1, 0, 0), dual=True, inv=True), slot((0, 1, 0))) == "dr"
    assert r_kind(slot((1, 0, 0), dual=True, inv=True),
                  slot((0, 1, 0), dual=True, inv=True)) == "dd"
    with pytest.raises(ValueError):
        r_kind(slot((1, 0, 0)), slot((0, 1, 0), dual=True, inv=True))


def test_native_power():
    s = slot((1, 0), d=3, inv=True)
    assert s.native_power == -3
    assert slot((1, 0), d=3).native_power == 3


def test_rr_apply():
    # B_5(x) (x) B_3(y): x^0(122) (x) y^0(210) -> y^3(021) (x) x^-3(311)
    out = r_apply(slot((1, 2, 2)), slot((2, 1, 0)))
    assert out == (slot((0, 2, 1), d=3), slot((3, 1, 1), d=-3))


def test_dr_apply():
    # dual factor at the inverse parameter; the swap keeps orientations
    out = r_apply(slot((1, 2, 2, 2), d=-1, dual=True, inv=True),
                  slot((1, 2, 1, 1)))
    assert out == (slot((2, 1, 1, 1), d=1),
                   slot((2, 1, 2, 2), d=0, dual=True, inv=True))


def test_dd_apply():
    out = r_apply(slot((1, 2, 0), d=2, dual=True, inv=True),
                  slot((2, 1, 2), d=2, dual=True, inv=True))
    assert out == (slot((3, 2, 0), d=-1, dual=True, inv=True),
                   slot((0, 1, 2), d=5, dual=True, inv=True))


def test_explicit_kind_must_match():
    with pytest.raises(ValueError):
        r_apply(slot((1, 0, 0)), slot((0, 1, 0)), kind="dd")


def test_literal_dr_shift_differs():
    corrected = r_apply(slot((1, 2, 2, 2), d=-1, dual=True, inv=True),
                        slot((1, 2, 1, 1)))
    literal = r_apply_literal(slot((1, 2, 2, 2), d=-1, dual=True, inv=True),
                              slot((1, 2, 1, 1)))
    assert corrected[0].elem.alpha == literal[0].elem.alpha
    assert corrected[0].elem.power != literal[0].elem.power


def test_literal_dd_alpha_args_differ():
    with pytest.raises(ValueError):
        r_apply_literal(slot((1, 2, 0), d=2, dual=True, inv=True),
                        slot((2, 1, 2), d=2, dual=True, inv=True))
