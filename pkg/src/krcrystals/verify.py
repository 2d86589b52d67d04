"""Exhaustive, exact equation and property checkers.

Every check enumerates its full finite domain deterministically and
compares exactly (no tolerances).  Failures are data, not exceptions, and
carry full intermediate traces so a broken case can be replayed by hand.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Optional

from .crystal import (
    AffineElement,
    composition_count,
    compositions,
    tensor_op,
    weight,
)
from .formal import FormalSum
from .icrystal import beta, btilde, icrystal_graph, is_connected, iweight_equal
from .kmatrix import a3_case, k_apply, k_inverse
from .rmatrix import OrientedSlot, r_apply, r_apply_literal
from .satake import Family, SatakeDiagram


@dataclass
class CheckReport:
    name: str
    params: dict
    total: int = 0
    failures: list = field(default_factory=list)
    millis: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, input_desc, expected, actual):
        self.failures.append({"input": input_desc, "expected": expected,
                              "actual": actual})

    def to_json(self) -> dict:
        return {"name": self.name, "params": self.params, "total": self.total,
                "failures": self.failures, "millis": round(self.millis, 3)}

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return (f"{self.name} {self.params}: {status}, "
                f"{self.total} cases, {self.millis:.1f} ms")


def _timed(report: CheckReport, t0: float) -> CheckReport:
    report.millis = (time.perf_counter() - t0) * 1000.0
    return report


def _slot_desc(slot: OrientedSlot) -> str:
    return f"{slot.elem}{'@inv' if slot.at_inverse else ''}"


def _k_slot(diagram: SatakeDiagram, slot: OrientedSlot, inverse_offset: int = 0,
            ) -> OrientedSlot:
    """K applied to a tensor slot: B_s(x) -> B_s^*(x^-1)."""
    if slot.elem.dual or slot.at_inverse:
        raise ValueError("K acts on plain, non-inverted slots")
    out = k_apply(diagram, slot.elem.s, slot.elem, offset=inverse_offset)
    return OrientedSlot(out, at_inverse=True)


def reflection_sides(diagram: SatakeDiagram, e1: AffineElement, e2: AffineElement):
    """Both composites of the reflection equation on e1 (x) e2, with traces."""
    start = (OrientedSlot(e1), OrientedSlot(e2))

    lhs_trace = [start]
    pair = (_k_slot(diagram, start[0]), start[1])
    lhs_trace.append(pair)
    pair = r_apply(*pair)
    lhs_trace.append(pair)
    pair = (_k_slot(diagram, pair[0]), pair[1])
    lhs_trace.append(pair)
    pair = r_apply(*pair)
    lhs_trace.append(pair)
    lhs = pair

    rhs_trace = [start]
    pair = r_apply(*start)
    rhs_trace.append(pair)
    pair = (_k_slot(diagram, pair[0]), pair[1])
    rhs_trace.append(pair)
    pair = r_apply(*pair)
    rhs_trace.append(pair)
    pair = (_k_slot(diagram, pair[0]), pair[1])
    rhs_trace.append(pair)
    rhs = pair

    return lhs, rhs, lhs_trace, rhs_trace


def check_reflection(diagram: SatakeDiagram, s: int, s2: int,
                     d0: int = 0, e0: int = 0) -> CheckReport:
    """Set-theoretical reflection equation on all of B_s(x) (x) B_s2(y).

    Input exponents default to 0; nonzero values exercise the additive
    exponent bookkeeping.
    """
    t0 = time.perf_counter()
    n = diagram.n
    report = CheckReport("reflection", {"family": diagram.family.value, "n": n,
                                        "s": s, "s2": s2, "d0": d0, "e0": e0})
    for alpha in compositions(n, s):
        for beta_ in compositions(n, s2):
            e1 = AffineElement(False, d0, alpha)
            e2 = AffineElement(False, e0, beta_)
            lhs, rhs, lt, rt = reflection_sides(diagram, e1, e2)
            report.total += 1
            if lhs != rhs:
                report.fail(
                    {"in1": e1.to_json(), "in2": e2.to_json(),
                     "lhs_trace": [[_slot_desc(a), _slot_desc(b)] for a, b in lt],
                     "rhs_trace": [[_slot_desc(a), _slot_desc(b)] for a, b in rt]},
                    [_slot_desc(lhs[0]), _slot_desc(lhs[1])],
                    [_slot_desc(rhs[0]), _slot_desc(rhs[1])])
    return _timed(report, t0)


def check_ybe(n: int, s: int, s2: int, s3: int,
              d0: int = 0, e0: int = 0, f0: int = 0) -> CheckReport:
    """Set-theoretical Yang-Baxter equation on B_s(x) (x) B_s2(y) (x) B_s3(z)."""
    t0 = time.perf_counter()
    report = CheckReport("ybe", {"n": n, "s": s, "s2": s2, "s3": s3})

    def r12(t):
        a, b = r_apply(t[0], t[1])
        return (a, b, t[2])

    def r23(t):
        a, b = r_apply(t[1], t[2])
        return (t[0], a, b)

    for alpha in compositions(n, s):
        for beta_ in compositions(n, s2):
            for gamma in compositions(n, s3):
                triple = (OrientedSlot(AffineElement(False, d0, alpha)),
                          OrientedSlot(AffineElement(False, e0, beta_)),
                          OrientedSlot(AffineElement(False, f0, gamma)))
                lhs = r12(r23(r12(triple)))
                rhs = r23(r12(r23(triple)))
                report.total += 1
                if lhs != rhs:
                    report.fail(
                        {"in": [str(t.elem) for t in triple]},
                        [_slot_desc(t) for t in lhs],
                        [_slot_desc(t) for t in rhs])
    return _timed(report, t0)


def _codomain_btilde(diagram: SatakeDiagram, i: int, fs: FormalSum) -> FormalSum:
    """B~_i on the K-matrix codomain: dual elements use the dual formulas
    (already written at the inverse parameter); plain codomain elements
    (family A3) sit at the inverse, flipping affine-node exponent shifts."""
    out = FormalSum.zero()
    for elem, coeff in fs:
        out = out + btilde(diagram, i, elem, at_inverse=not elem.dual).scaled(coeff)
    return out


def _k_linear(diagram: SatakeDiagram, s: int, fs: FormalSum) -> FormalSum:
    out = FormalSum.zero()
    for elem, coeff in fs:
        out = out + FormalSum.of(k_apply(diagram, s, elem), coeff)
    return out


def check_equivariance(diagram: SatakeDiagram, s: int) -> CheckReport:
    """K is an icrystal isomorphism: it commutes with every B~_i and
    preserves beta_i and wt^i."""
    t0 = time.perf_counter()
    n = diagram.n
    report = CheckReport("equivariance", {"family": diagram.family.value,
                                          "n": n, "s": s})
    for alpha in compositions(n, s):
        e = AffineElement(False, 0, alpha)
        image = k_apply(diagram, s, e)
        report.total += 1
        if not iweight_equal(diagram, weight(e), weight(image)):
            report.fail({"alpha": list(alpha), "what": "iweight"},
                        list(weight(e)), list(weight(image)))
        for i in range(n):
            b_dom = beta(diagram, i, e)
            b_cod = beta(diagram, i, image)
            if b_dom != b_cod:
                report.fail({"alpha": list(alpha), "i": i, "what": "beta"},
                            b_dom, b_cod)
            lhs = _k_linear(diagram, s, btilde(diagram, i, e))
            rhs = _codomain_btilde(diagram, i, FormalSum.of(image))
            if lhs != rhs:
                report.fail({"alpha": list(alpha), "i": i, "what": "btilde"},
                            str(lhs), str(rhs))
    return _timed(report, t0)


def check_bijection(diagram: SatakeDiagram, s: int) -> CheckReport:
    """K is a bijection (composition part and with exponents), and
    k_inverse is a two-sided inverse."""
    t0 = time.perf_counter()
    n = diagram.n
    report = CheckReport("bijection", {"family": diagram.family.value,
                                       "n": n, "s": s})
    images = {}
    for alpha in compositions(n, s):
        for d in (0, 3, -2):
            e = AffineElement(False, d, alpha)
            image = k_apply(diagram, s, e)
            report.total += 1
            if d == 0:
                if image.alpha in images:
                    report.fail({"alpha": list(alpha), "what": "injective"},
                                "distinct image", str(image))
                images[image.alpha] = alpha
            back = k_inverse(diagram, s, image)
            if back != e:
                report.fail({"alpha": list(alpha), "d": d, "what": "left inverse"},
                            str(e), str(back))
            again = k_apply(diagram, s, k_inverse(diagram, s, image))
            if again != image:
                report.fail({"alpha": list(alpha), "d": d, "what": "right inverse"},
                            str(image), str(again))
    if len(images) != composition_count(n, s):
        report.fail({"what": "surjective"}, composition_count(n, s), len(images))
    return _timed(report, t0)


def check_partition(n: int, s: int) -> CheckReport:
    """A3 case division: every composition of odd s satisfies exactly one case."""
    t0 = time.perf_counter()
    report = CheckReport("partition", {"n": n, "s": s})
    for alpha in compositions(n, s):
        report.total += 1
        try:
            a3_case(n, alpha)
        except AssertionError as exc:
            report.fail({"alpha": list(alpha)}, "exactly one case", str(exc))
    return _timed(report, t0)


def check_connected(diagram: SatakeDiagram, s: int, dual: bool = False) -> CheckReport:
    t0 = time.perf_counter()
    report = CheckReport("connected", {"family": diagram.family.value,
                                       "n": diagram.n, "s": s, "dual": dual})
    graph = icrystal_graph(diagram, diagram.n, s, dual)
    report.total = len(graph)
    if not is_connected(graph):
        report.fail({"what": "connectivity"}, "connected", "disconnected")
    return _timed(report, t0)


_KIND_FLAGS = {"rr": (False, False), "dr": (True, False), "dd": (True, True)}


def check_r_morphism(kind: str, n: int, s: int, s2: int) -> CheckReport:
    """r_apply commutes with every affinized tensor crystal operator."""
    t0 = time.perf_counter()
    report = CheckReport("rmorphism", {"kind": kind, "n": n, "s": s, "s2": s2})
    dual1, dual2 = _KIND_FLAGS[kind]
    for alpha in compositions(n, s):
        for beta_ in compositions(n, s2):
            e1 = AffineElement(dual1, 0, alpha)
            e2 = AffineElement(dual2, 0, beta_)
            o1, o2 = r_apply(OrientedSlot(e1, at_inverse=dual1),
                             OrientedSlot(e2, at_inverse=dual2))
            for i in range(n):
                for op in ("E", "F"):
                    report.total += 1
                    moved = tensor_op(op, i, e1, e2)
                    moved_out = tensor_op(op, i, o1.elem, o2.elem)
                    if moved is None:
                        if moved_out is not None:
                            report.fail({"in": [str(e1), str(e2)], "i": i, "op": op},
                                        "zero", [str(moved_out[0]), str(moved_out[1])])
                        continue
                    if moved_out is None:
                        report.fail({"in": [str(e1), str(e2)], "i": i, "op": op},
                                    "nonzero", "zero")
                        continue
                    lhs = r_apply(OrientedSlot(moved[0], at_inverse=dual1),
                                  OrientedSlot(moved[1], at_inverse=dual2))
                    rhs = (OrientedSlot(moved_out[0], at_inverse=o1.at_inverse),
                           OrientedSlot(moved_out[1], at_inverse=o2.at_inverse))
                    if lhs != rhs:
                        report.fail({"in": [str(e1), str(e2)], "i": i, "op": op},
                                    [_slot_desc(x) for x in lhs],
                                    [_slot_desc(x) for x in rhs])
    return _timed(report, t0)


def check_r_inverse(kind: str, n: int, s: int, s2: int) -> CheckReport:
    """Applying R of the swapped kind returns the original pair.

    The swapped kind of DR is plain(x)dual, which has no displayed
    formula; DR is therefore checked to be injective (hence a bijection
    onto its image), which is what the size-equal domains give.
    """
    t0 = time.perf_counter()
    report = CheckReport("rinverse", {"kind": kind, "n": n, "s": s, "s2": s2})
    dual1, dual2 = _KIND_FLAGS[kind]
    seen: dict = {}
    for alpha in compositions(n, s):
        for beta_ in compositions(n, s2):
            for d, e in ((0, 0), (2, -1)):
                pair = (OrientedSlot(AffineElement(dual1, d, alpha),
                                     at_inverse=dual1),
                        OrientedSlot(AffineElement(dual2, e, beta_),
                                     at_inverse=dual2))
                report.total += 1
                out = r_apply(*pair)
                if kind == "dr":
                    if out in seen and seen[out] != pair:
                        report.fail({"in": [_slot_desc(p) for p in pair]},
                                    "injective",
                                    {"collides_with": [_slot_desc(p) for p in seen[out]]})
                    seen[out] = pair
                    continue
                back = r_apply(*out)
                if back != pair:
                    report.fail({"in": [_slot_desc(p) for p in pair]},
                                [_slot_desc(p) for p in pair],
                                [_slot_desc(x) for x in back])
    return _timed(report, t0)


def check_r_weights(kind: str, n: int, s: int, s2: int) -> CheckReport:
    """Signed weight conservation of r_apply: the composition changes of the
    two factors cancel (RR, DD) or coincide (DR)."""
    t0 = time.perf_counter()
    report = CheckReport("rweights", {"kind": kind, "n": n, "s": s, "s2": s2})
    dual1, dual2 = _KIND_FLAGS[kind]
    for alpha in compositions(n, s):
        for beta_ in compositions(n, s2):
            pair = (OrientedSlot(AffineElement(dual1, 0, alpha),
                                 at_inverse=dual1),
                    OrientedSlot(AffineElement(dual2, 0, beta_),
                                 at_inverse=dual2))
            o1, o2 = r_apply(*pair)
            dbeta = tuple(b2 - b1 for b1, b2 in zip(beta_, o1.elem.alpha))
            dalpha = tuple(a2 - a1 for a1, a2 in zip(alpha, o2.elem.alpha))
            expect = dalpha if kind == "dr" else tuple(-x for x in dalpha)
            report.total += 1
            if dbeta != expect:
                report.fail({"in": [str(pair[0].elem), str(pair[1].elem)]},
                            list(expect), list(dbeta))
    return _timed(report, t0)


def check_literal_formula_counterexamples() -> CheckReport:
    """Demonstrates that the literal DR power shift and the literal DD
    alpha' arguments each fail on a worked reflection-equation figure,
    while the corrected forms reproduce the figure labels."""
    t0 = time.perf_counter()
    report = CheckReport("literal", {})

    # DR, from the n=4 twisted figure: the displayed slot values around the
    # second R-application of the right-hand composite.
    dr_in = (OrientedSlot(AffineElement(True, -1, (1, 2, 2, 2)), at_inverse=True),
             OrientedSlot(AffineElement(False, 0, (1, 2, 1, 1))))
    dr_expected_first = OrientedSlot(AffineElement(False, 1, (2, 1, 1, 1)))
    report.total += 1
    corrected = r_apply(*dr_in)
    if corrected[0] != dr_expected_first:
        report.fail({"what": "corrected DR"}, _slot_desc(dr_expected_first),
                    _slot_desc(corrected[0]))
    report.total += 1
    literal = r_apply_literal(*dr_in)
    if literal[0] == dr_expected_first:
        report.fail({"what": "literal DR should disagree"},
                    "power shift 4 (wrong)", _slot_desc(literal[0]))

    # DD, from the n=3 twisted figure: the final R-application of the
    # left-hand composite.
    dd_in = (OrientedSlot(AffineElement(True, 2, (1, 2, 0)), at_inverse=True),
             OrientedSlot(AffineElement(True, 2, (2, 1, 2)), at_inverse=True))
    dd_expected = (OrientedSlot(AffineElement(True, -1, (3, 2, 0)), at_inverse=True),
                   OrientedSlot(AffineElement(True, 5, (0, 1, 2)), at_inverse=True))
    report.total += 1
    corrected = r_apply(*dd_in)
    if corrected != dd_expected:
        report.fail({"what": "corrected DD"},
                    [_slot_desc(x) for x in dd_expected],
                    [_slot_desc(x) for x in corrected])
    report.total += 1
    try:
        literal = r_apply_literal(*dd_in)
    except ValueError:
        literal = None
    if literal is not None and literal == dd_expected:
        report.fail({"what": "literal DD should disagree"},
                    "negative entry (wrong)", [_slot_desc(x) for x in literal])
    return _timed(report, t0)
