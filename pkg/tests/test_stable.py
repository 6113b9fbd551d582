from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from greenring.catalog import M
from greenring.datum import build_radford_datum
from greenring.errors import EmptyStableBasis, IndexOutOfRange, NonPositiveIndex
from greenring.green_ring import green_ring
from greenring.stable import (
    dickson,
    dickson_value,
    eigenvector_residual,
    fpdim_closed,
    fpdim_eigen,
    fpdim_table,
    fusion_axioms_check,
    stable_ring,
)


def test_projectives_vanish(datum):
    S = stable_ring(datum)
    R = green_ring(datum)
    assert S.project(R.M(datum.n)).is_zero()
    assert S.project(R.one) == S.one


def test_radford_23_product():
    S = stable_ring(build_radford_datum(2, 3))
    m2 = S.element(M(2, (0,)))
    assert str(m2 * m2) == "M(1,2)"


def test_structure_constants_non_negative():
    S = stable_ring(build_radford_datum(2, 3))
    for b1 in S.basis:
        for b2 in S.basis:
            assert all(c >= 0 for c in S.basis_product(b1, b2).values())


def test_fusion_radford_22(r22):
    rep = fusion_axioms_check(r22)
    assert rep.passed and len(rep.results) == 5
    assert [str(b) for b in stable_ring(r22).basis] == ["M(1,0)", "M(1,2)"]


def test_fusion_all(datum):
    rep = fusion_axioms_check(datum)
    assert rep.passed, [r for r in rep.results if not r.passed]


def test_psi_unit(datum):
    S = stable_ring(datum)
    assert S.psi(S.one * S.one) == 1


def test_dickson_small():
    assert str(dickson(1)) == "1"
    assert str(dickson(2)) == "Z"
    assert str(dickson(3)) == "Z^2 - Y"
    assert str(dickson(4)) == "Z^3 - 2*Y*Z"
    with pytest.raises(NonPositiveIndex):
        dickson(0)


@given(st.integers(1, 12), st.integers(-3, 3), st.integers(-3, 3))
def test_dickson_recursion_agrees(j, y, z):
    assert dickson(j).evaluate(y, z) == dickson_value(j, y, z, 1)
    assert dickson(j).z_degree == j - 1


@given(st.integers(2, 12), st.floats(0.1, 3.0))
def test_dickson_chebyshev(j, theta):
    # F_j(1, 2cos t) = sin(j t) / sin(t)
    if abs(math.sin(theta)) < 1e-3:
        return
    value = dickson_value(j, 1.0, 2 * math.cos(theta), 1.0)
    assert value == pytest.approx(math.sin(j * theta) / math.sin(theta), abs=1e-9)


def test_dickson_in_green_ring(datum):
    R = green_ring(datum)
    assert dickson(datum.n).evaluate(R.a, R.M(2), R.one) == R.M(datum.n)
    for j in range(1, datum.n + 1):
        assert dickson_value(j, R.a, R.M(2), R.one) == R.M(j)


def test_fpdim_values():
    d24 = build_radford_datum(2, 4)
    assert fpdim_eigen(d24, M(2, (0,))) == pytest.approx(math.sqrt(2), abs=1e-9)
    assert fpdim_closed(build_radford_datum(2, 3), M(2, (0,))) == pytest.approx(1.0)
    assert fpdim_closed(d24, M(3, (2,))) == pytest.approx(1.0)
    with pytest.raises(IndexOutOfRange):
        fpdim_closed(d24, M(4, (0,)))


def test_fpdim_agreement(datum):
    for row in fpdim_table(datum):
        assert row.eigen >= 1 - 1e-12
        assert row.diff <= 1e-9
    assert eigenvector_residual(datum) <= 1e-9


def test_empty_stable_basis(monkeypatch, r22):
    S = stable_ring(r22)
    monkeypatch.setattr(type(S), "basis", property(lambda self: ()))
    with pytest.raises(EmptyStableBasis):
        fpdim_eigen(r22, M(1, (0,)))
