"""The up operator, its adjoint, and ground-set embeddings.

up sends a subset to the sum of the subsets covering it; down is its
adjoint under the standard inner product.  lift adjoins the new top
element n+1 to every subset, mapping vectors over {1..n} into the
"contains n+1" half of the space over {1..n+1}.  Both operators work by
direct sparse expansion; the dense matrix form exists only for rank
checks and export.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lattice import binomial, covered_by, covers_of, subsets_of_rank
from .vectors import Vector


def up(v: Vector) -> Vector:
    """Sum of covering subsets, extended linearly."""
    acc: dict[int, int] = {}
    n = v.n
    for mask, c in v._terms.items():
        for cover in covers_of(mask, n):
            s = acc.get(cover, 0) + c
            if s == 0:
                del acc[cover]
            else:
                acc[cover] = s
    out = Vector.__new__(Vector)
    out.n = n
    out._terms = acc
    return out


def down(v: Vector) -> Vector:
    """Sum of covered subsets, extended linearly; adjoint of up."""
    acc: dict[int, int] = {}
    for mask, c in v._terms.items():
        for sub in covered_by(mask):
            s = acc.get(sub, 0) + c
            if s == 0:
                del acc[sub]
            else:
                acc[sub] = s
    out = Vector.__new__(Vector)
    out.n = v.n
    out._terms = acc
    return out


def embed(v: Vector, n: int) -> Vector:
    """Relabel a vector over a larger ground set; masks are unchanged."""
    if n < v.n:
        raise ValueError(f"cannot embed ground set {v.n} into smaller {n}")
    out = Vector.__new__(Vector)
    out.n = n
    out._terms = dict(v._terms)
    return out


def lift(v: Vector) -> Vector:
    """Adjoin element n+1 to every subset; coefficients unchanged.

    An isomorphism onto the span of subsets containing n+1.
    """
    top = 1 << v.n
    out = Vector.__new__(Vector)
    out.n = v.n + 1
    out._terms = {mask | top: c for mask, c in v._terms.items()}
    return out


def split_by_top(v: Vector) -> tuple[Vector, Vector]:
    """Split v = v0 + v1 by membership of the largest ground element.

    v0 is supported on subsets avoiding it, v1 on subsets containing it;
    both keep the ground set of v.
    """
    if v.n == 0:
        return v, Vector.zero(0)
    top = 1 << (v.n - 1)
    t0: dict[int, int] = {}
    t1: dict[int, int] = {}
    for mask, c in v._terms.items():
        (t1 if mask & top else t0)[mask] = c
    v0 = Vector.__new__(Vector)
    v0.n = v.n
    v0._terms = t0
    v1 = Vector.__new__(Vector)
    v1.n = v.n
    v1._terms = t1
    return v0, v1


@dataclass
class UpMatrix:
    """0/1 matrix of up restricted to rank k, in ascending-mask basis order."""

    n: int
    k: int
    row_basis: list[int]  # masks of rank k+1
    col_basis: list[int]  # masks of rank k
    rows: list[list[int]]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.row_basis), len(self.col_basis)


def up_matrix(n: int, k: int) -> UpMatrix:
    """Matrix of up from rank k to rank k+1 of B(n)."""
    if not 0 <= k < n:
        raise ValueError(f"rank must be in 0..{n - 1}, got {k}")
    col_basis = subsets_of_rank(n, k)
    row_basis = subsets_of_rank(n, k + 1)
    row_index = {mask: i for i, mask in enumerate(row_basis)}
    rows = [[0] * len(col_basis) for _ in row_basis]
    for j, mask in enumerate(col_basis):
        for cover in covers_of(mask, n):
            rows[row_index[cover]][j] = 1
    m = UpMatrix(n, k, row_basis, col_basis, rows)
    assert m.shape == (binomial(n, k + 1), binomial(n, k))
    return m
