from __future__ import annotations

from hypothesis import given, settings, strategies as st
from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_form

from greenring.lattice import Lattice, contains, hnf, intersect, kernel, rank, same_lattice

matrices = st.integers(1, 4).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-6, 6), min_size=cols, max_size=cols),
                          min_size=1, max_size=5))


def _sympy_row_lattice(rows):
    """Row lattice of ``rows`` as computed by sympy (column HNF of the transpose)."""
    if not any(any(r) for r in rows):
        return []
    H = hermite_normal_form(Matrix(rows).T)
    return [list(H[:, c]) for c in range(H.shape[1])]


def test_small_example():
    assert hnf([[2, 4, 6], [1, 3, 5]]) == [[1, 1, 1], [0, 2, 4]]
    assert rank([[1, 1, 0], [1, 1, 0], [0, 0, 1]]) == 2
    assert kernel([[1, 1, 0], [1, 1, 0], [0, 0, 1]]) == [[1, -1, 0]]


@given(matrices)
def test_hnf_is_reduced(rows):
    H = hnf(rows)
    pivots = []
    for r in H:
        col = next(c for c, x in enumerate(r) if x)
        pivots.append(col)
        assert r[col] > 0
    assert pivots == sorted(set(pivots))
    for i, col in enumerate(pivots):
        for above in H[:i]:
            assert 0 <= above[col] < H[i][col]


@settings(max_examples=60)
@given(matrices)
def test_hnf_matches_sympy(rows):
    ncols = len(rows[0])
    assert same_lattice(rows, _sympy_row_lattice(rows), ncols)
    assert rank(rows) == Matrix(rows).rank()


@settings(max_examples=60)
@given(matrices)
def test_kernel_is_saturated(rows):
    K = kernel(rows)
    m = len(rows)
    assert len(K) == m - Matrix(rows).rank()
    for x in K:
        assert all(sum(x[r] * rows[r][c] for r in range(m)) == 0 for c in range(len(rows[0])))
    if K:
        snf = smith_normal_form(Matrix(K))
        assert all(abs(snf[i, i]) == 1 for i in range(len(K)))


@given(matrices, matrices)
def test_intersection(a, b):
    if len(a[0]) != len(b[0]):
        return
    both = intersect(a, b)
    for v in both:
        assert contains(a, v) and contains(b, v)
    for v in hnf(a):
        if contains(b, v):
            assert contains(both, v)


def test_lattice_object():
    L = Lattice.spanned_by(("x", "y"), [[2, 0], [0, 4]])
    assert L.rank == 2
    assert [4, 8] in L and [1, 0] not in L
    M = Lattice.spanned_by(("x", "y"), [[3, 0], [0, 6]])
    assert L.intersect(M).rows == ((6, 0), (0, 12))
