"""Formal linear combinations of affinized crystal elements."""

from krcrystals import AffineElement, Coeff, FormalSum
from krcrystals.sqrt2 import HALF_SQRT2, ONE


def E(alpha, d=0):
    return AffineElement(False, d, tuple(alpha))


def test_zero_and_of():
    assert FormalSum.zero().is_zero()
    assert FormalSum.of(None).is_zero()
    fs = FormalSum.of(E((1, 0)))
    assert len(fs) == 1 and fs.terms[E((1, 0))] == ONE


def test_merging_drops_cancellations():
    a = E((1, 0))
    fs = FormalSum([(a, ONE), (a, Coeff(-1, 0))])
    assert fs.is_zero()
    fs = FormalSum([(a, HALF_SQRT2), (a, HALF_SQRT2)])
    assert fs.terms[a] == Coeff(0, 1, 0)


def test_add_sub_scaled():
    a, b = E((1, 0)), E((0, 1))
    fs = FormalSum.of(a) + FormalSum.of(b, HALF_SQRT2)
    assert fs.support() == {a, b}
    assert (fs - fs).is_zero()
    doubled = fs.scaled(Coeff(2, 0))
    assert doubled.terms[a] == Coeff(2, 0) and doubled.terms[b] == Coeff(0, 1)


def test_eq_hash_iter_order():
    a, b = E((1, 0)), E((0, 1))
    fs1 = FormalSum([(a, ONE), (b, ONE)])
    fs2 = FormalSum([(b, ONE), (a, ONE)])
    assert fs1 == fs2 and hash(fs1) == hash(fs2)
    assert [e for e, _ in fs1] == [b, a]  # sorted by composition


def test_json_and_str():
    fs = FormalSum.of(E((1, 1)), HALF_SQRT2)
    assert fs.to_json() == [{"coeff": "1/√2",
                             "elem": {"dual": False, "power": 0,
                                      "alpha": [1, 1]}}]
    assert str(FormalSum.zero()) == "0"
    assert "x^0(11)" in str(fs)
