"""Integer lattices via row-style Hermite normal form.

Lattices are spanned by integer row vectors.  ``hnf`` returns the unique
reduced basis: pivots positive, entries above each pivot in ``[0, pivot)``,
zero rows dropped.  Two generating sets span the same lattice iff their HNFs
coincide.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

Matrix = list[list[int]]


def _echelon(rows: Matrix, ncols: int) -> tuple[Matrix, int]:
    """Unimodular row reduction on the first ``ncols`` columns (rows may be longer)."""
    A = [list(r) for r in rows]
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(A):
            break
        while True:
            live = [r for r in range(pivot_row, len(A)) if A[r][col]]
            if not live:
                break
            best = min(live, key=lambda r: abs(A[r][col]))
            A[pivot_row], A[best] = A[best], A[pivot_row]
            p = A[pivot_row][col]
            done = True
            for r in range(pivot_row + 1, len(A)):
                if A[r][col]:
                    f = A[r][col] // p
                    A[r] = [x - f * y for x, y in zip(A[r], A[pivot_row])]
                    if A[r][col]:
                        done = False
            if done:
                break
        if pivot_row < len(A) and A[pivot_row][col]:
            if A[pivot_row][col] < 0:
                A[pivot_row] = [-x for x in A[pivot_row]]
            p = A[pivot_row][col]
            for r in range(pivot_row):
                f = A[r][col] // p
                if f:
                    A[r] = [x - f * y for x, y in zip(A[r], A[pivot_row])]
            pivot_row += 1
    return A, pivot_row


def hnf(rows: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    A, rank = _echelon(rows, ncols)
    return A[:rank]


def rank(rows: Sequence[Sequence[int]]) -> int:
    return len(hnf(rows))


def kernel(rows: Sequence[Sequence[int]]) -> Matrix:
    """HNF basis of {x in Z^m : sum_r x_r * rows[r] = 0}."""
    m = len(rows)
    if m == 0:
        return []
    k = len(rows[0])
    aug = [list(r) + [int(i == j) for j in range(m)] for i, r in enumerate(rows)]
    A, rk = _echelon(aug, k)
    return hnf([row[k:] for row in A[rk:]], m)


def intersect(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    """HNF basis of span(a) & span(b)."""
    a, b = hnf(a), hnf(b)
    if not a or not b:
        return []
    coeffs = kernel(a + b)
    return hnf([[sum(c * row[j] for c, row in zip(x[:len(a)], a)) for j in range(len(a[0]))]
                for x in coeffs], len(a[0]))


def same_lattice(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], ncols: int) -> bool:
    return hnf(a, ncols) == hnf(b, ncols)


def contains(lattice: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    base = hnf(lattice)
    return hnf(base + [list(v)], len(v)) == base


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^basis, stored as its HNF rows, with the basis labels."""

    labels: tuple
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def spanned_by(cls, labels, vectors) -> "Lattice":
        return cls(tuple(labels), tuple(tuple(r) for r in hnf(vectors, len(labels))))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __contains__(self, v) -> bool:
        return contains([list(r) for r in self.rows], v) if self.rows else not any(v)

    def intersect(self, other: "Lattice") -> "Lattice":
        return Lattice.spanned_by(self.labels, intersect(self.rows, other.rows))
