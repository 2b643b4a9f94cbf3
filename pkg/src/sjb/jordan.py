"""Inductive construction of a symmetric Jordan basis (SJB).

A symmetric Jordan chain (SJC) is a sequence of nonzero homogeneous
vectors v_k, ..., v_{n-k} with up(v_l) = v_{l+1}, up(v_{n-k}) = 0, and
ranks symmetric about n/2.  An SJB is a basis of the whole space that is
a disjoint union of SJCs.

The build goes one ground element at a time.  Each chain of the basis
for {1..n} yields chains for {1..n+1}:

  case (a), a single middle-rank vector x (2k = n): emit (x, lift(x)).

  case (b), a longer chain x_k..x_{n-k}: emit the extended chain
    y_l = x_l + (l-k) * lift(x_{l-1})        for l = k .. n+1-k
  and the shortened chain
    z_l = (n-k-l+1) * lift(x_{l-1}) - x_l    for l = k+1 .. n-k,
  reading x_{k-1} = x_{n+1-k} = 0.

Emission order (parents in stored order; y before z) is fixed so output
is canonical.  Coefficients are kept exactly as constructed: rescaling
any single vector would break the up-links.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .lattice import check_ground_size
from .operators import embed, lift
from .vectors import Vector


class CaseError(ValueError):
    """Chain shape does not match the requested extension."""


@dataclass
class JordanChain:
    """Chain of vectors spanning ranks start_rank .. n - start_rank."""

    n: int
    start_rank: int
    vectors: list[Vector]

    @property
    def length(self) -> int:
        return len(self.vectors)

    @property
    def top_rank(self) -> int:
        return self.start_rank + len(self.vectors) - 1

    def __repr__(self) -> str:
        return (f"JordanChain(n={self.n}, start_rank={self.start_rank}, "
                f"length={self.length})")


@dataclass
class JordanBasis:
    n: int
    chains: list[JordanChain] = field(default_factory=list)

    def total_vectors(self) -> int:
        return sum(ch.length for ch in self.chains)

    def vectors_of_rank(self, r: int) -> list[tuple[int, int, Vector]]:
        """(chain index, position, vector) for every vector of rank r."""
        out = []
        for ci, ch in enumerate(self.chains):
            if ch.start_rank <= r <= ch.top_rank:
                pos = r - ch.start_rank
                out.append((ci, pos, ch.vectors[pos]))
        return out

    def __repr__(self) -> str:
        return f"JordanBasis(n={self.n}, chains={len(self.chains)})"


def base_basis() -> JordanBasis:
    """The basis for the empty ground set: one chain holding the empty set."""
    return JordanBasis(0, [JordanChain(0, 0, [Vector.unit(0, 0)])])


def case_b_determinant(n: int, k: int, l: int) -> int:
    """Determinant showing y_l and z_l are independent combinations.

    The pair (y_l, z_l) expresses (x_l, lift(x_{l-1})) through the matrix
    [[1, l-k], [-1, n-k-l+1]], whose determinant is n - 2k + 1
    independently of l.
    """
    if not k + 1 <= l <= n - k:
        raise ValueError(f"position must be in {k + 1}..{n - k}, got {l}")
    det = (n - k - l + 1) + (l - k)
    assert det == n - 2 * k + 1 and det > 0, "chain extension became singular"
    return det


def extend_case_a(chain: JordanChain) -> JordanChain:
    """Extend a single-vector middle chain: (x,) over n -> (x, lift(x)) over n+1."""
    n, k = chain.n, chain.start_rank
    if chain.length != 1 or 2 * k != n:
        raise CaseError(
            f"case (a) needs a single vector at rank n/2, got length "
            f"{chain.length} at start rank {k} over n={n}")
    x = chain.vectors[0]
    return JordanChain(n + 1, k, [embed(x, n + 1), lift(x)])


def extend_case_b(chain: JordanChain) -> tuple[JordanChain, JordanChain]:
    """Extend a chain with start rank below n/2 into a longer and a shorter chain."""
    n, k = chain.n, chain.start_rank
    if 2 * k == n:
        raise CaseError(f"chain at middle rank {k} of n={n} belongs to case (a)")
    m = n + 1
    zero = Vector.zero(n)

    def x(l: int) -> Vector:
        # Out-of-range positions read as the zero vector.
        if k <= l <= n - k:
            return chain.vectors[l - k]
        return zero

    ys = []
    for l in range(k, m - k + 1):
        ys.append(embed(x(l), m) + (l - k) * lift(x(l - 1)))
    zs = []
    for l in range(k + 1, n - k + 1):
        case_b_determinant(n, k, l)
        zs.append((n - k - l + 1) * lift(x(l - 1)) - embed(x(l), m))
    return JordanChain(m, k, ys), JordanChain(m, k + 1, zs)


def _extend_basis(basis: JordanBasis) -> JordanBasis:
    new_chains: list[JordanChain] = []
    for ch in basis.chains:
        if ch.length == 1:
            new_chains.append(extend_case_a(ch))
        else:
            y, z = extend_case_b(ch)
            new_chains.append(y)
            new_chains.append(z)
    return JordanBasis(basis.n + 1, new_chains)


def build_sjb(n: int, cap: int | None = None) -> JordanBasis:
    """Symmetric Jordan basis of the space on subsets of {1..n}.

    Deterministic: repeated builds produce identical chains in identical
    order.  Intermediate levels are dropped as soon as the next one is
    materialized.
    """
    check_ground_size(n, cap)
    basis = base_basis()
    for _ in range(n):
        basis = _extend_basis(basis)
    return basis


def build_sjb_levels(n: int, cap: int | None = None) -> list[JordanBasis]:
    """All bases for ground sizes 0..n, in one inductive pass."""
    check_ground_size(n, cap)
    levels = [base_basis()]
    for _ in range(n):
        levels.append(_extend_basis(levels[-1]))
    return levels
