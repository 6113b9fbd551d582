from __future__ import annotations

from greenring.datum import build_radford_datum
from greenring.green_ring import green_ring
from greenring.grothendieck import grothendieck
from greenring.radical import (
    is_idempotent,
    lattice_elements,
    principal_generator_check,
    radical_by_intersection,
    radical_lattice,
    radical_report,
    radical_generator,
    search_idempotents,
)
from greenring.sparse import Element


def test_radford_22(r22):
    R = green_ring(r22)
    rad = radical_lattice(r22)
    assert rad.rank == 1
    assert [str(x) for x in lattice_elements(rad, R)] == ["M(2,0) - M(2,2)"]
    check = principal_generator_check(r22)
    assert check.equal
    assert str(check.generator) == "M(2,0) - M(2,2)"


def test_radford_23_rank():
    assert radical_lattice(build_radford_datum(2, 3)).rank == 2


def test_principal_radford_33():
    assert principal_generator_check(build_radford_datum(3, 3)).equal


def test_radical_properties(datum):
    R = green_ring(datum)
    G = grothendieck(datum)
    rad = radical_lattice(datum)
    assert rad.rank == (datum.n - 1) * len(datum.orbit_table.orbits0)
    assert rad == radical_by_intersection(datum)
    projectives = [Element(R, {p: 1}) for p in R.catalog.projective_basis]
    for x in lattice_elements(rad, R):
        assert G.phi(x).is_zero()
        assert all(R.bilinear_form(x, p) == 0 for p in projectives)
        assert (x * x).is_zero()


def test_generator_squares_to_zero(datum):
    gen = radical_generator(datum)
    assert (gen * gen).is_zero()


def test_idempotent_predicate(r22):
    R = green_ring(r22)
    assert is_idempotent(R.one) and is_idempotent(Element(R))
    assert not is_idempotent(R.a)


def test_search_radford_22(r22):
    found = search_idempotents(r22)
    assert found.nontrivial == []
    assert len(found.found) == 2


def test_report_keys(r22):
    rep = radical_report(r22)
    assert rep["principal"] and rep["matches_intersection"] and rep["basis_squares_vanish"]
    assert rep["rank"] == rep["expected_rank"] == 1
