from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from greenring.catalog import Catalog, M, P, V, enumerate_basis, parse_label
from greenring.datum import build_radford_datum
from greenring.errors import LabelError


def test_basis_radford_22():
    d = build_radford_datum(2, 2)
    assert [str(b) for b in enumerate_basis(d)] == ["M(1,0)", "M(2,0)", "M(1,2)", "M(2,2)", "P[1]"]


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 3)])
def test_radford_basis_size(m, n):
    assert len(enumerate_basis(build_radford_datum(m, n))) == n * n + m - 1


def test_basis_size_formula(datum):
    expected = datum.n * len(datum.omega0) + len(datum.orbit_table.orbits1)
    assert len(Catalog(datum)) == expected


def test_duals_radford_22(r22):
    cat = Catalog(r22)
    assert cat.dual_label(M(2, (0,))) == M(2, (2,))
    assert cat.dual_label(P((1,))) == P((1,))
    assert cat.dual_label(M(1, (2,))) == M(1, (2,))
    assert cat.dual_label(cat.unit) == cat.unit


def test_dual_is_involution(datum):
    cat = Catalog(datum)
    for b in cat.basis:
        assert cat.dual_label(cat.dual_label(b)) == b
        assert cat.dual_label(b) in cat.position


def test_p_labels_normalize_to_orbit_minimum(r22):
    assert parse_label("P[3]", r22) == P((1,))
    assert parse_label("P[-1]", r22) == P((1,))


def test_parse_errors(r22):
    for text in ["M(3,0)", "M(1,1)", "P[0]", "Q(1)", "M(1)", "P[]"]:
        with pytest.raises(LabelError):
            parse_label(text, r22)
    with pytest.raises(LabelError):
        Catalog(r22).parse("V(0)")


def test_multi_index_labels():
    from conftest import PRODUCT_DATUM
    from greenring.datum import validate_datum
    d = validate_datum(PRODUCT_DATUM)
    cat = Catalog(d)
    for b in cat.basis:
        assert parse_label(str(b), d) == b
    assert str(cat.a) == "M(1,1,2)"


def test_projective_basis_is_orbit_grouped(datum):
    cat = Catalog(datum)
    proj = cat.projective_basis
    assert set(proj) == {b for b in cat.basis if cat.is_projective(b)}
    for orbit in datum.orbit_table.orbits0:
        start = proj.index(M(datum.n, orbit[0]))
        assert [p.i for p in proj[start:start + datum.n]] == list(orbit)


def test_v_label_round_trip(r22):
    assert parse_label(str(V((2,))), r22) == V((2,))


@given(st.sampled_from([(2, 2), (2, 3), (3, 2), (3, 3), (2, 4)]), st.data())
def test_label_round_trip(params, data):
    d = build_radford_datum(*params)
    b = data.draw(st.sampled_from(enumerate_basis(d)))
    assert parse_label(str(b), d) == b
