from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings, strategies as st

from greenring.catalog import M, P
from greenring.datum import build_radford_datum
from greenring.errors import DatumMismatch
from greenring.green_ring import green_ring
from greenring.sparse import Element


@pytest.fixture
def R(r22):
    return green_ring(r22)


def test_radford_22_products(R):
    assert str(R.multiply("M(2,0)", "P[1]")) == "2*P[1]"
    assert str(R.multiply("P[1]", "P[1]")) == "M(2,0) + M(2,2)"
    assert str(R.multiply("M(2,0)", "M(2,0)")) == "M(2,0) + M(2,2)"


def test_radford_32_p_square():
    R = green_ring(build_radford_datum(3, 2))
    assert str(R.multiply("P[1]", "P[1]")) == "2*P[2]"


def test_radford_23_m2_square():
    R = green_ring(build_radford_datum(2, 3))
    assert str(R.M(2) * R.M(2)) == "M(3,0) + M(1,2)"


def test_unit(datum):
    R = green_ring(datum)
    for b in R.basis:
        x = Element(R, {b: 1})
        assert R.one * x == x == x * R.one


def test_commutative(datum):
    R = green_ring(datum)
    for b1, b2 in itertools.product(R.basis, repeat=2):
        assert R.table[b1, b2] == R.table[b2, b1]


def test_a_has_order_n(datum):
    R = green_ring(datum)
    assert R.a ** datum.n == R.one
    assert all(R.a ** t != R.one for t in range(1, datum.n))


def test_dimension_is_multiplicative(datum):
    R = green_ring(datum)
    for b1, b2 in itertools.product(R.basis, repeat=2):
        x, y = Element(R, {b1: 1}), Element(R, {b2: 1})
        assert R.dim(x * y) == R.dim(x) * R.dim(y)


def test_dualize(R):
    assert R.dualize(R.one) == R.one
    assert R.dualize(R.a) == R.a ** (R.datum.n - 1)
    assert R.dualize("M(2,0)") == R.element("M(2,2)")


def test_dualize_is_antimultiplicative(datum):
    R = green_ring(datum)
    for b1, b2 in itertools.product(R.basis, repeat=2):
        x, y = Element(R, {b1: 1}), Element(R, {b2: 1})
        assert R.dualize(x * y) == R.dualize(y) * R.dualize(x)


def test_delta_examples(R):
    assert R.delta(M(1, (0,))) == R.one + R.a - R.M(2)
    assert R.delta(P((1,))) == R.P((1,))
    assert str(R.delta(M(2, (0,)))) == "M(2,0) - M(1,2)"


def test_dual_basis_radford_22(R):
    d = R.dualize(R.delta(M(2, (0,))))
    for b in R.basis:
        assert R.bilinear_form(d, Element(R, {b: 1})) == int(b == M(2, (0,)))
    assert R.bilinear_form("M(2,0)", "P[1]") == 0


def test_bilinear_form_is_symmetric(datum):
    R = green_ring(datum)
    for b1, b2 in itertools.product(R.basis, repeat=2):
        assert R.bilinear_form(b1, b2) == R.bilinear_form(b2, b1)


def test_mixed_data_rejected(R):
    other = green_ring(build_radford_datum(3, 2))
    with pytest.raises(DatumMismatch):
        R.multiply(R.one, other.one)


def test_table_json_is_deterministic(R):
    text = R.table_json()
    assert text == green_ring(build_radford_datum(2, 2)).table_json()
    doc = json.loads(text)
    assert doc["products"]["M(2,0)*P[1]"] == "2*P[1]"
    assert len(doc["products"]) == 25


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)]), st.data())
def test_associative(params, data):
    R = green_ring(build_radford_datum(*params))
    x, y, z = (Element(R, {data.draw(st.sampled_from(R.basis)): 1}) for _ in range(3))
    assert (x * y) * z == x * (y * z)
