"""Symmetric chain decomposition (SCD) of the subset lattice.

Partitions the subsets of {1..n} into saturated chains symmetric about
rank n/2, by the same one-element-at-a-time recursion the Jordan basis
build follows: a chain C = (X_k, ..., X_{n-k}) over {1..n} emits the
extended chain (X_k, ..., X_{n-k}, X_{n-k} + {n+1}) and, when C has at
least two subsets, the shortened chain (X_k + {n+1}, ..., X_{n-k-1} +
{n+1}).  Emission order mirrors the basis builder chain for chain, which
is what makes the two length profiles comparable position by position.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .lattice import check_ground_size, rank_of


@dataclass
class SubsetChain:
    """Saturated chain of subsets, one rank per step."""

    n: int
    subsets: list[int]

    @property
    def start_rank(self) -> int:
        return rank_of(self.subsets[0])

    @property
    def length(self) -> int:
        return len(self.subsets)

    @property
    def top_rank(self) -> int:
        return rank_of(self.subsets[-1])


@dataclass
class ChainDecomposition:
    n: int
    chains: list[SubsetChain] = field(default_factory=list)

    def total_subsets(self) -> int:
        return sum(ch.length for ch in self.chains)


def build_scd(n: int, cap: int | None = None) -> ChainDecomposition:
    """Partition of the subsets of {1..n} into symmetric saturated chains."""
    check_ground_size(n, cap)
    chains: list[list[int]] = [[0]]
    for m in range(n):
        bit = 1 << m
        new_chains: list[list[int]] = []
        for ch in chains:
            new_chains.append(ch + [ch[-1] | bit])
            if len(ch) >= 2:
                new_chains.append([s | bit for s in ch[:-1]])
        chains = new_chains
    return ChainDecomposition(n, [SubsetChain(n, ch) for ch in chains])


def chain_length_sequence(obj) -> list[tuple[int, int]]:
    """(start_rank, length) per chain, in the canonical emission order.

    Accepts either a ChainDecomposition or a JordanBasis.
    """
    return [(ch.start_rank, ch.length) for ch in obj.chains]


def chain_length_profile(obj) -> Counter:
    """Multiset of (start_rank, length) over all chains."""
    return Counter(chain_length_sequence(obj))
