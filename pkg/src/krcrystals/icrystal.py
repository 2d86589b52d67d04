"""icrystal structure maps (wt^i, beta_i, B~_i) on B_s(x) and B_s^vee(x^-1)
for the three quasi-split families, and icrystal-graph connectivity.

The B~_i formulas branch on the Cartan pairing a_{i,tau(i)}:

* a = 2: B~_i = E~_i or F~_i according to the parity of alpha_i (plain)
  or alpha_{i+1} (dual).
* a = 0: a phi-comparison picks F~_i or E~_{tau(i)}.
* a = -1 (A3 with n odd, at the pair {n', n'+1}): the four- and
  three-branch formulas, with coefficient 1/sqrt(2) and a two-term branch.

Outputs are FormalSums; an underlying operator that annihilates contributes
nothing, so the empty sum is the icrystal analogue of the formal zero.
"""

from __future__ import annotations

from collections import deque
from typing import Optional

from .crystal import AffineElement, compositions, etilde, ftilde, weight
from .formal import FormalSum
from .satake import Family, SatakeDiagram
from .sqrt2 import Coeff, HALF_SQRT2, ONE


class UnsupportedDualError(ValueError):
    """Dual icrystals are not defined when the diagram has an a = -1 node."""


def _theta(m: int) -> int:
    return m % 2


def _require_dual_ok(diagram: SatakeDiagram, e: AffineElement):
    if e.dual and diagram.family is Family.A3 and diagram.n % 2 == 1:
        raise UnsupportedDualError(
            "dual icrystal structure is undefined for A3 with n odd")


def beta(diagram: SatakeDiagram, i: int, e: AffineElement) -> int:
    """The icrystal string statistic beta_i."""
    _require_dual_ok(diagram, e)
    i %= diagram.n
    a = diagram.a_pair(i)
    t = diagram.tau(i)
    if a == 2:
        if e.dual:
            return e.entry(i) + _theta(e.entry(i + 1))
        return e.entry(i + 1) + _theta(e.entry(i))
    if a == 0:
        if e.dual:
            if e.entry(i + 1) > e.entry(t + 1):
                return e.entry(i + 1) + e.entry(t) - e.entry(t + 1)
            return e.entry(t)
        if e.entry(i) > e.entry(t):
            return e.entry(i) - e.entry(t) + e.entry(t + 1)
        return e.entry(t + 1)
    # a == -1
    s_i = diagram.s_param(i)
    if e.entry(i) > e.entry(t) + s_i:
        return e.entry(i) - e.entry(t) + e.entry(t + 1) - s_i
    return e.entry(t + 1)


def _move(e: AffineElement, plus: int, minus: int, d_shift: int,
          at_inverse: bool) -> Optional[AffineElement]:
    """alpha + e_plus - e_minus with a displayed-power shift, or None."""
    n = e.n
    out = list(e.alpha)
    out[(plus - 1) % n] += 1
    out[(minus - 1) % n] -= 1
    if out[(minus - 1) % n] < 0:
        return None
    if at_inverse:
        d_shift = -d_shift
    return AffineElement(e.dual, e.power + d_shift, tuple(out))


def btilde(diagram: SatakeDiagram, i: int, e: AffineElement,
           at_inverse: bool = False) -> FormalSum:
    """The icrystal operator B~_i as a FormalSum (possibly empty).

    `at_inverse` marks elements sitting at the inverse of their base
    indeterminate (e.g. the codomain B_s(x^-1) of the A3 K-matrix): the
    i = 0 exponent shifts act on the displayed power with opposite sign.
    The dual formulas are already written for B_s^vee(x^-1), so dual
    elements are passed with at_inverse=False.
    """
    _require_dual_ok(diagram, e)
    i %= diagram.n
    a = diagram.a_pair(i)
    t = diagram.tau(i)
    if a == 2:
        # parity of the phi-entry decides between E~_i and F~_i
        if e.dual:
            op = etilde if _theta(e.entry(i + 1)) == 0 else ftilde
        else:
            op = etilde if _theta(e.entry(i)) == 0 else ftilde
        return FormalSum.of(op(i, e, at_inverse))
    if a == 0:
        if e.dual:
            first = e.entry(i + 1) > e.entry(t + 1)
        else:
            first = e.entry(i) > e.entry(t)
        if first:
            return FormalSum.of(ftilde(i, e, at_inverse))
        return FormalSum.of(etilde(t, e, at_inverse))
    # a == -1: A3 with n odd, i in {n', n'+1}; no affine-node shift occurs.
    np_ = diagram.nprime
    s_i = diagram.s_param(i)
    ai, at_ = e.entry(i), e.entry(t)
    if i == np_:
        if ai == at_ + s_i + 1:
            return FormalSum.of(_move(e, np_ + 1, np_, 0, at_inverse), HALF_SQRT2)
        if ai > at_ + s_i + 1:
            return FormalSum.of(_move(e, np_ + 1, np_, 0, at_inverse))
        if ai == at_ + s_i:
            return FormalSum.of(_move(e, np_ + 1, np_ + 2, 0, at_inverse), HALF_SQRT2)
        return FormalSum.of(_move(e, np_ + 1, np_ + 2, 0, at_inverse))
    # i == n' + 1
    s_t = diagram.s_param(t)
    if ai > at_ + s_i:
        return FormalSum.of(_move(e, np_ + 2, np_ + 1, 0, at_inverse))
    if ai == at_ + s_i and ai > max(-s_t, 0):
        return (FormalSum.of(_move(e, np_, np_ + 1, 0, at_inverse), HALF_SQRT2)
                + FormalSum.of(_move(e, np_ + 2, np_ + 1, 0, at_inverse), HALF_SQRT2))
    return FormalSum.of(_move(e, np_, np_ + 1, 0, at_inverse))


def btilde_sum(diagram: SatakeDiagram, i: int, fs: FormalSum,
               at_inverse: bool = False) -> FormalSum:
    """Linear extension of B~_i over formal sums."""
    out = FormalSum.zero()
    for elem, coeff in fs:
        out = out + btilde(diagram, i, elem, at_inverse).scaled(coeff)
    return out


def iweight(diagram: SatakeDiagram, e: AffineElement) -> tuple[int, ...]:
    """A representative of wt^i(e): the classical weight, read in
    P_cl / {lambda + tau(lambda)}."""
    return weight(e)


def _lattice_member(cols: list[list[int]], v: list[int]) -> bool:
    """Exact membership of v in the integer column span of cols, by
    column-style Hermite reduction."""
    cols = [list(c) for c in cols]
    v = list(v)
    m = len(v)
    k = 0
    for r in range(m):
        # gcd-eliminate row r among columns k..
        while True:
            nz = [j for j in range(k, len(cols)) if cols[j][r] != 0]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(cols[j][r]))
            for j in nz:
                if j == j0:
                    continue
                q = cols[j][r] // cols[j0][r]
                cols[j] = [aj - q * a0 for aj, a0 in zip(cols[j], cols[j0])]
        nz = [j for j in range(k, len(cols)) if cols[j][r] != 0]
        if not nz:
            if v[r] != 0:
                return False
            continue
        j0 = nz[0]
        cols[k], cols[j0] = cols[j0], cols[k]
        p = cols[k][r]
        if v[r] % p != 0:
            return False
        q = v[r] // p
        v = [vi - q * ci for vi, ci in zip(v, cols[k])]
        k += 1
    return all(vi == 0 for vi in v)


def iweight_equal(diagram: SatakeDiagram, w1: tuple[int, ...], w2: tuple[int, ...]) -> bool:
    """Equality in P_cl^i = P_cl / {lambda + tau(lambda)}.

    Tests membership of w1 - w2 in the integer column span of Id + P_tau,
    where P_tau permutes pairing coordinates by the diagram involution.
    """
    n = diagram.n
    if len(w1) != n or len(w2) != n:
        raise ValueError("weight length does not match diagram rank")
    cols = []
    for j in range(n):
        col = [0] * n
        col[j] += 1
        col[diagram.tau(j)] += 1
        cols.append(col)
    diff = [a - b for a, b in zip(w1, w2)]
    return _lattice_member(cols, diff)


def icrystal_graph(diagram: SatakeDiagram, n: int, s: int, dual: bool = False,
                   ) -> dict[tuple[int, ...], list[tuple[tuple[int, ...], int, Coeff]]]:
    """Undirected icrystal graph on compositions of s into n parts.

    Adjacency lists carry (neighbor, node index i, coefficient); spectral
    exponents are ignored, only supports matter.
    """
    if n != diagram.n:
        raise ValueError(f"rank mismatch: diagram has n={diagram.n}, got {n}")
    adj: dict[tuple[int, ...], list[tuple[tuple[int, ...], int, Coeff]]] = {
        alpha: [] for alpha in compositions(n, s)}
    for alpha in adj:
        e = AffineElement(dual, 0, alpha)
        for i in range(n):
            for target, coeff in btilde(diagram, i, e):
                adj[alpha].append((target.alpha, i, coeff))
    return adj


def is_connected(graph: dict) -> bool:
    if not graph:
        return True
    start = next(iter(graph))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w, _i, _c in graph[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
            # edges are undirected at the support level: also walk backwards
    if len(seen) == len(graph):
        return True
    # supports may be asymmetric in rare coefficient patterns; symmetrize
    sym: dict = {v: set() for v in graph}
    for v, nbrs in graph.items():
        for w, _i, _c in nbrs:
            sym[v].add(w)
            sym[w].add(v)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in sym[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(graph)


def reachable(graph: dict, start, allowed_nodes=None) -> set:
    """Vertices reachable from start, optionally restricted to edges whose
    node index lies in allowed_nodes.  Treats edges as undirected."""
    sym: dict = {v: set() for v in graph}
    for v, nbrs in graph.items():
        for w, i, _c in nbrs:
            if allowed_nodes is not None and i not in allowed_nodes:
                continue
            sym[v].add(w)
            sym[w].add(v)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in sym[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def graph_to_dot(graph: dict, name: str = "icrystal") -> str:
    """DOT emission: vertices labeled by alpha, edges by node index and
    coefficient ("1", "1/√2", ...)."""
    def vid(alpha):
        return '"' + ",".join(str(a) for a in alpha) + '"'

    lines = [f"graph {name} {{"]
    for v in graph:
        lines.append(f"  {vid(v)};")
    emitted = set()
    for v, nbrs in graph.items():
        for w, i, c in nbrs:
            key = (min(v, w), max(v, w), i)
            if key in emitted:
                continue
            emitted.add(key)
            lines.append(f'  {vid(v)} -- {vid(w)} [label="{i}: {c}"];')
    lines.append("}")
    return "\n".join(lines)
