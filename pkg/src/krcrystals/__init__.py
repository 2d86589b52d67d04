"""Kirillov-Reshetikhin crystals of affine type A_{n-1}^(1) for the vector
representation family, their icrystal structures for the three quasi-split
Satake diagrams (A.1, A.3, A.4), and the combinatorial R- and K-matrices,
together with exhaustive verifiers for the set-theoretical Yang-Baxter and
reflection equations.

All arithmetic is exact: compositions and spectral exponents are integers,
and icrystal operator coefficients live in the ring of (p + q*sqrt(2))/2^e.
"""

from .satake import Family, SatakeDiagram
from .crystal import (
    AffineElement,
    compositions,
    eps,
    phi,
    weight,
    etilde,
    ftilde,
    dualize,
    tensor_eps,
    tensor_phi,
    tensor_op,
)
from .sqrt2 import Coeff
from .formal import FormalSum
from .icrystal import beta, btilde, btilde_sum, iweight, iweight_equal, icrystal_graph
from .rmatrix import OrientedSlot, q_shift, p_shift, r_apply, r_kind
from .kmatrix import a3_case, a3_gamma, a3_gamma_seq, k_energy, k_apply, k_inverse

__all__ = [
    "Family",
    "SatakeDiagram",
    "AffineElement",
    "compositions",
    "eps",
    "phi",
    "weight",
    "etilde",
    "ftilde",
    "dualize",
    "tensor_eps",
    "tensor_phi",
    "tensor_op",
    "Coeff",
    "FormalSum",
    "beta",
    "btilde",
    "btilde_sum",
    "iweight",
    "iweight_equal",
    "icrystal_graph",
    "OrientedSlot",
    "q_shift",
    "p_shift",
    "r_apply",
    "r_kind",
    "a3_case",
    "a3_gamma",
    "a3_gamma_seq",
    "k_energy",
    "k_apply",
    "k_inverse",
]
