"""Jacobson radical of r(H) and a bounded search for idempotents."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Any

from .datum import Datum
from .green_ring import green_ring
from .grothendieck import grothendieck
from .lattice import Lattice, kernel
from .sparse import Element


def radical_lattice(datum: Datum) -> Lattice:
    """ker(phi restricted to the projective span): the kernel of the Cartan matrix."""
    G = grothendieck(datum)
    cartan = G.cartan_matrix()
    basis = G.green.basis
    columns = [[row[c] for row in cartan.entries] for c in range(len(cartan.col_labels))]
    vectors = []
    for coeffs in kernel(columns):
        x = dict(zip(cartan.col_labels, coeffs))
        vectors.append([x.get(b, 0) for b in basis])
    return Lattice.spanned_by(basis, vectors)


def radical_generator(datum: Datum) -> Element:
    """(1 - a) M[n,0]."""
    R = green_ring(datum)
    return (R.one - R.a) * R.M(datum.n)


def ideal_lattice(generator: Element) -> Lattice:
    """The principal ideal generated by ``generator``, as a Z-lattice."""
    R = generator.ring
    return Lattice.spanned_by(R.basis, [(generator * Element(R, {b: 1})).vector() for b in R.basis])


@dataclass
class GeneratorCheck:
    equal: bool
    generator: Element
    ideal: Lattice
    radical: Lattice


def principal_generator_check(datum: Datum) -> GeneratorCheck:
    gen = radical_generator(datum)
    ideal = ideal_lattice(gen)
    rad = radical_lattice(datum)
    return GeneratorCheck(ideal.rows == rad.rows, gen, ideal, rad)


def radical_by_intersection(datum: Datum) -> Lattice:
    """ker(phi) & span(projectives), computed without the Cartan matrix."""
    G = grothendieck(datum)
    return G.kernel_phi().intersect(G.projective_span())


def lattice_elements(lattice: Lattice, ring) -> list[Element]:
    return [Element(ring, dict(zip(lattice.labels, row))) for row in lattice.rows]


def is_idempotent(x: Element) -> bool:
    return x * x == x


@dataclass
class IdempotentSearch:
    coefficient_bound: int
    max_support: int
    candidates: int = 0
    found: list[Element] = field(default_factory=list)

    @property
    def nontrivial(self) -> list[Element]:
        return [e for e in self.found if not (e.is_zero() or e == e.ring.one)]

    def to_dict(self) -> dict[str, Any]:
        return {
            "coefficient_bound": self.coefficient_bound,
            "max_support": self.max_support,
            "candidates": self.candidates,
            "idempotents": [str(e) for e in self.found],
            "nontrivial": [str(e) for e in self.nontrivial],
        }


def search_idempotents(datum: Datum, bound: int = 1, max_support: int = 3) -> IdempotentSearch:
    """Every element with at most ``max_support`` non-zero coefficients in [-bound, bound].

    Evidence only: a clean run says nothing about elements outside the box.
    """
    R = green_ring(datum)
    report = IdempotentSearch(bound, max_support)
    values = [c for c in range(-bound, bound + 1) if c]
    zero = Element(R)
    report.candidates += 1
    if is_idempotent(zero):
        report.found.append(zero)
    for size in range(1, max_support + 1):
        for support in itertools.combinations(R.basis, size):
            for coeffs in itertools.product(values, repeat=size):
                x = Element(R, dict(zip(support, coeffs)))
                report.candidates += 1
                if is_idempotent(x):
                    report.found.append(x)
    return report


def radical_report(datum: Datum) -> dict[str, Any]:
    R = green_ring(datum)
    rad = radical_lattice(datum)
    check = principal_generator_check(datum)
    return {
        "datum": datum.to_dict(),
        "rank": rad.rank,
        "expected_rank": (datum.n - 1) * len(datum.orbit_table.orbits0),
        "generator": str(check.generator),
        "generator_squared": str(check.generator * check.generator),
        "principal": check.equal,
        "basis": [str(e) for e in lattice_elements(rad, R)],
        "basis_squares_vanish": all((e * e).is_zero() for e in lattice_elements(rad, R)),
        "matches_intersection": radical_by_intersection(datum).rows == rad.rows,
    }
