from __future__ import annotations

from greenring.catalog import M, P, V
from greenring.datum import build_radford_datum
from greenring.green_ring import green_ring
from greenring.grothendieck import cartan_matrix, grothendieck
from greenring.sparse import Element


def test_phi_examples(r22):
    G = grothendieck(r22)
    assert G.phi("M(2,0)") == Element(G.g0, {V((0,)): 1, V((2,)): 1})
    assert G.phi(G.green.delta(M(1, (0,)))).is_zero()


def test_g0_products():
    G = grothendieck(build_radford_datum(2, 2))
    p = Element(G.g0, {P((1,)): 1})
    assert p * p == Element(G.g0, {V((0,)): 2, V((2,)): 2})
    G32 = grothendieck(build_radford_datum(3, 2))
    p1 = Element(G32.g0, {P((1,)): 1})
    assert p1 * p1 == Element(G32.g0, {P((2,)): 2})


def test_cartan_radford_22(r22):
    C = cartan_matrix(r22)
    assert C.entries == ((1, 1, 0), (1, 1, 0), (0, 0, 1))
    assert [str(b) for b in C.col_labels] == ["M(2,0)", "M(2,2)", "P[1]"]


def test_cartan_radford_23():
    C = cartan_matrix(build_radford_datum(2, 3))
    assert C.entries == ((1, 1, 1, 0), (1, 1, 1, 0), (1, 1, 1, 0), (0, 0, 0, 1))


def test_cartan_column_sums(datum):
    C = cartan_matrix(datum)
    sums = [sum(row[c] for row in C.entries) for c in range(len(C.col_labels))]
    assert sums == [datum.n if isinstance(b, M) else 1 for b in C.col_labels]


def test_embedding(r22):
    G = grothendieck(r22)
    img = G.embed_into_rkG(Element(G.g0, {P((1,)): 1}))
    assert img == Element(G.rkG, {V((1,)): 1, V((3,)): 1})


def test_embedding_is_injective_and_multiplicative(datum):
    G = grothendieck(datum)
    assert G.embedding_rank() == len(G.g0.basis)
    for b1 in G.g0.basis:
        for b2 in G.g0.basis:
            x, y = Element(G.g0, {b1: 1}), Element(G.g0, {b2: 1})
            assert G.embed_into_rkG(x * y) == G.embed_into_rkG(x) * G.embed_into_rkG(y)


def test_phi_is_ring_hom(datum):
    assert grothendieck(datum).is_ring_hom_on_basis() == []


def test_kernel_routes_agree(datum):
    G = grothendieck(datum)
    K = G.kernel_phi()
    assert K == G.delta_span() == G.projective_perp()
    assert K.rank == len(G.green.basis) - len(G.g0.basis)


def test_delta_elements_annihilate(datum):
    G = grothendieck(datum)
    R = green_ring(datum)
    for b in R.basis:
        if not R.catalog.is_projective(b):
            assert G.phi(R.delta(b)).is_zero()
