"""G_0(H), the quotient map phi, the Cartan matrix, and the embedding into r(kG)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cache, cached_property
from typing import Any

from .catalog import M, P, V, label_sort_key, parse_label
from .datum import Datum
from .errors import LabelError
from .green_ring import GreenRing, green_ring
from .lattice import Lattice, hnf, kernel
from .sparse import Element, parse_element


class G0Ring:
    """G_0(H) on the basis [V_i] (i in Omega_0), P[j] ([j] in Omega_1 / tau)."""

    def __init__(self, datum: Datum):
        self.datum = datum

    def __eq__(self, other):
        return isinstance(other, G0Ring) and self.datum == other.datum

    def __hash__(self):
        return hash(("G0", self.datum))

    def __repr__(self):
        return f"G0Ring({self.datum!r})"

    @cached_property
    def basis(self) -> tuple:
        """Orbit-grouped: V_i, V_tau(i), ..., per Omega_0-orbit, then the P-labels."""
        table = self.datum.orbit_table
        return tuple([V(i) for orbit in table.orbits0 for i in orbit]
                     + [P(orbit[0]) for orbit in table.orbits1])

    @cached_property
    def _order(self) -> dict:
        return {b: pos for pos, b in enumerate(self.basis)}

    def sort_key(self, label):
        return self._order[label]

    @cached_property
    def one(self) -> Element:
        return Element(self, {V(self.datum.zero): 1})

    @cached_property
    def a(self) -> Element:
        return Element(self, {V(self.datum.tau(self.datum.zero)): 1})

    def parse(self, text: str):
        label = parse_label(text, self.datum)
        if isinstance(label, M):
            raise LabelError(f"{text!r} is not a G_0 basis label; use V(i) or P[j]")
        if isinstance(label, V) and not self.datum.in_omega0(label.i):
            raise LabelError(f"{text!r}: V(i) with i outside Omega_0 is not a G_0 basis label")
        return label

    def element(self, x) -> Element:
        if isinstance(x, Element):
            return x
        if isinstance(x, (V, P)):
            return Element(self, {x: 1})
        if isinstance(x, str):
            return parse_element(x, self, self.parse)
        return Element(self, dict(x))

    def _orbit_sum(self, s) -> dict:
        return {V(self.datum.tau(s, t)): 1 for t in range(self.datum.n)}

    def basis_product(self, b1, b2) -> dict:
        d = self.datum
        if isinstance(b1, V) and isinstance(b2, V):
            return {V(d.add(b1.i, b2.i)): 1}
        if isinstance(b1, P) and isinstance(b2, P):
            s = d.add(b1.j, b2.j)
            if d.in_omega0(s):
                return {b: d.n for b in self._orbit_sum(s)}
            return {P(d.rep(s)): d.n}
        v, p = (b1, b2) if isinstance(b1, V) else (b2, b1)
        return {P(d.rep(d.add(v.i, p.j))): 1}

    def multiply(self, x, y) -> Element:
        return self.element(x) * self.element(y)


class CharacterRing:
    """r(kG) for abelian G: the group ring of the character group."""

    def __init__(self, datum: Datum):
        self.datum = datum

    def __eq__(self, other):
        return isinstance(other, CharacterRing) and self.datum == other.datum

    def __hash__(self):
        return hash(("r(kG)", self.datum))

    @cached_property
    def basis(self) -> tuple:
        return tuple(V(c) for c in self.datum.characters)

    sort_key = staticmethod(label_sort_key)

    @cached_property
    def one(self) -> Element:
        return Element(self, {V(self.datum.zero): 1})

    def basis_product(self, b1, b2) -> dict:
        return {V(self.datum.add(b1.i, b2.i)): 1}


@dataclass(frozen=True)
class CartanMatrix:
    entries: tuple[tuple[int, ...], ...]
    row_labels: tuple
    col_labels: tuple

    def to_dict(self) -> dict[str, Any]:
        return {
            "rows": [str(b) for b in self.row_labels],
            "columns": [str(b) for b in self.col_labels],
            "entries": [list(r) for r in self.entries],
        }

    def __str__(self):
        width = max(len(str(b)) for b in self.row_labels + self.col_labels)
        head = " " * width + " " + " ".join(f"{str(b):>{width}}" for b in self.col_labels)
        lines = [head]
        for label, row in zip(self.row_labels, self.entries):
            lines.append(f"{str(label):>{width}} " + " ".join(f"{x:>{width}}" for x in row))
        return "\n".join(lines)


class Grothendieck:
    """phi: r(H) -> G_0(H) and everything built on it."""

    def __init__(self, datum: Datum):
        self.datum = datum
        self.green: GreenRing = green_ring(datum)
        self.g0 = G0Ring(datum)
        self.rkG = CharacterRing(datum)

    # phi -------------------------------------------------------------------
    def _phi_label(self, b) -> dict:
        if isinstance(b, P):
            return {b: 1}
        return {V(self.datum.tau(b.i, t)): 1 for t in range(b.k)}

    def phi(self, x) -> Element:
        out: dict = {}
        for b, c in self.green.element(x).coeffs.items():
            for v, e in self._phi_label(b).items():
                out[v] = out.get(v, 0) + c * e
        return Element(self.g0, out)

    def g0_multiply(self, x, y) -> Element:
        return self.g0.multiply(x, y)

    # Cartan map --------------------------------------------------------------
    def cartan_matrix(self) -> CartanMatrix:
        rows = self.g0.basis
        cols = self.green.catalog.projective_basis
        images = [self.phi(Element(self.green, {p: 1})) for p in cols]
        entries = tuple(tuple(img[r] for img in images) for r in rows)
        return CartanMatrix(entries, rows, cols)

    # embedding into r(kG) ---------------------------------------------------
    def embed_into_rkG(self, x) -> Element:
        d = self.datum
        out: dict = {}
        for b, c in self.g0.element(x).coeffs.items():
            chars = [b.i] if isinstance(b, V) else [d.tau(b.j, t) for t in range(d.n)]
            for ch in chars:
                out[V(ch)] = out.get(V(ch), 0) + c
        return Element(self.rkG, out)

    def embedding_rank(self) -> int:
        return len(hnf([self.embed_into_rkG(Element(self.g0, {b: 1})).vector()
                        for b in self.g0.basis], len(self.rkG.basis)))

    # lattices inside r(H) ---------------------------------------------------
    def _lattice(self, vectors) -> Lattice:
        return Lattice.spanned_by(self.green.basis, vectors)

    def phi_matrix(self) -> list[list[int]]:
        return [self.phi(Element(self.green, {b: 1})).vector() for b in self.green.basis]

    def kernel_phi(self) -> Lattice:
        return self._lattice(kernel(self.phi_matrix()))

    def delta_span(self) -> Lattice:
        """Z-span of delta_M[k,i] for i in Omega_0 and k < n."""
        g = self.green
        return self._lattice([g.delta(M(k, i)).vector()
                              for i in self.datum.omega0 for k in range(1, self.datum.n)])

    def projective_perp(self) -> Lattice:
        """{x : (x, p) = 0 for every projective basis label p}, from the bilinear form alone."""
        g = self.green
        projectives = g.catalog.projective_basis
        gram = [[g.bilinear_form(Element(g, {b: 1}), Element(g, {p: 1})) for p in projectives]
                for b in g.basis]
        return self._lattice(kernel(gram))

    def projective_span(self) -> Lattice:
        basis = self.green.basis
        return self._lattice([[int(b == p) for b in basis]
                              for p in self.green.catalog.projective_basis])

    def is_ring_hom_on_basis(self) -> list[tuple]:
        """Basis pairs where phi(xy) != phi(x)phi(y); empty when phi is multiplicative."""
        g = self.green
        bad = []
        for b1, b2 in itertools.product(g.basis, repeat=2):
            x, y = Element(g, {b1: 1}), Element(g, {b2: 1})
            if self.phi(x * y) != self.phi(x) * self.phi(y):
                bad.append((b1, b2))
        return bad


@cache
def grothendieck(datum: Datum) -> Grothendieck:
    return Grothendieck(datum)


def cartan_matrix(datum: Datum) -> CartanMatrix:
    return grothendieck(datum).cartan_matrix()
