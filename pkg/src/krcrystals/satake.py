"""Quasi-split Satake diagrams on the affine type-A Dynkin cycle.

Three families are supported, each living on the n-cycle with nodes
indexed by Z/nZ (node 0 is the affine node):

* A1 -- the involution tau is the identity.
* A3 -- tau(i) = -i mod n.
* A4 -- n even, tau(i) = i + n/2 mod n.

The diagram derives everything the combinatorial layer needs: tau, the
Cartan pairing a_{i,tau(i)}, and the integer parameters s_i.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Family(enum.Enum):
    A1 = "a1"
    A3 = "a3"
    A4 = "a4"


class NoSParameterError(ValueError):
    """Raised when s_i is requested at a node with a_{i,tau(i)} = 0."""


@dataclass(frozen=True)
class SatakeDiagram:
    """A quasi-split Satake diagram of family A1, A3 or A4 on the n-cycle."""

    family: Family
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"rank must be at least 3, got n={self.n}")
        if self.family is Family.A4 and self.n % 2 != 0:
            raise ValueError(f"family A4 requires even n, got n={self.n}")
        if self.family is Family.A4 and self.n < 4:
            raise ValueError(f"family A4 requires n >= 4, got n={self.n}")

    @classmethod
    def from_name(cls, name: str, n: int) -> "SatakeDiagram":
        return cls(Family(name.lower()), n)

    @property
    def nprime(self) -> int:
        """The distinguished half-rank: floor((n-1)/2) for A3, n/2 for A4."""
        if self.family is Family.A4:
            return self.n // 2
        return (self.n - 1) // 2

    def tau(self, i: int) -> int:
        """The diagram involution, on canonical residues 0..n-1."""
        i %= self.n
        if self.family is Family.A1:
            return i
        if self.family is Family.A3:
            return (self.n - i) % self.n
        return (i + self.n // 2) % self.n

    def a_pair(self, i: int) -> int:
        """Cartan pairing a_{i,tau(i)} on the n-cycle: one of 2, 0, -1."""
        i %= self.n
        t = self.tau(i)
        if t == i:
            return 2
        if (t - i) % self.n in (1, self.n - 1):
            return -1
        return 0

    def s_param(self, i: int) -> int:
        """The integer parameter s_i; defined only at a = 2 and a = -1 nodes.

        All a = 2 nodes carry s_i = 0.  For A3 with n odd, the adjacent
        pair {n', n'+1} carries s_{n'} = 0 and s_{n'+1} = 1.
        """
        i %= self.n
        a = self.a_pair(i)
        if a == 0:
            raise NoSParameterError(f"node {i} has a_(i,tau(i)) = 0, no s parameter")
        if a == 2:
            return 0
        # a == -1: only A3 with n odd, at i in {n', n'+1}
        return 1 if i == self.nprime + 1 else 0

    def nodes(self) -> range:
        return range(self.n)
