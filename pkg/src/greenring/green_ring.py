"""The Green ring r(H): Clebsch-Gordan products, duality, delta-elements and the form."""

from __future__ import annotations

import itertools
import json
from functools import cache, cached_property
from typing import Any

from .catalog import Catalog, IndecLabel, M, P, label_sort_key, make_m, make_p
from .datum import Datum
from .errors import DatumMismatch
from .sparse import Element, parse_element


def _add(out: dict, label, c: int = 1) -> None:
    out[label] = out.get(label, 0) + c


class GreenRing:
    """r(H) for a validated datum, with its structure-constant table."""

    def __init__(self, datum: Datum):
        self.datum = datum
        self.catalog = Catalog(datum)

    def __eq__(self, other):
        return isinstance(other, GreenRing) and self.datum == other.datum

    def __hash__(self):
        return hash(("r(H)", self.datum))

    def __repr__(self):
        return f"GreenRing({self.datum!r})"

    # basis ---------------------------------------------------------------
    @property
    def basis(self) -> tuple[IndecLabel, ...]:
        return self.catalog.basis

    sort_key = staticmethod(label_sort_key)

    @cached_property
    def one(self) -> Element:
        return Element(self, {self.catalog.unit: 1})

    @cached_property
    def a(self) -> Element:
        return Element(self, {self.catalog.a: 1})

    def element(self, x) -> Element:
        if isinstance(x, Element):
            if x.ring != self:
                raise DatumMismatch("element belongs to a different ring")
            return x
        if isinstance(x, (M, P)):
            return Element(self, {x: 1})
        if isinstance(x, str):
            return parse_element(x, self, self.catalog.parse)
        if isinstance(x, int):
            return self.one * x
        return Element(self, dict(x))

    def M(self, k: int, i=None) -> Element:
        return Element(self, {make_m(self.datum, k, self.datum.zero if i is None else i): 1})

    def P(self, j) -> Element:
        return Element(self, {make_p(self.datum, j): 1})

    # products ------------------------------------------------------------
    def _cg(self, b1: IndecLabel, b2: IndecLabel) -> dict:
        d = self.datum
        n = d.n
        out: dict = {}
        if isinstance(b1, M) and isinstance(b2, M):
            k, l = b1.k, b2.k
            s = d.add(b1.i, b2.i)
            top = k + l - 1
            if top <= n:
                for t in range(min(k, l)):
                    _add(out, M(top - 2 * t, d.tau(s, t)))
            else:
                overflow = top - n
                for t in range(overflow + 1):
                    _add(out, M(n, d.tau(s, t)))
                for t in range(overflow + 1, min(k, l)):
                    _add(out, M(top - 2 * t, d.tau(s, t)))
            return out
        if isinstance(b1, P) and isinstance(b2, P):
            s = d.add(b1.j, b2.j)
            if d.in_omega0(s):
                for t in range(n):
                    _add(out, M(n, d.tau(s, t)))
            else:
                _add(out, P(d.rep(s)), n)
            return out
        m, p = (b1, b2) if isinstance(b1, M) else (b2, b1)
        _add(out, P(d.rep(d.add(m.i, p.j))), m.k)
        return out

    @cached_property
    def table(self) -> dict[tuple[IndecLabel, IndecLabel], dict]:
        return {(b1, b2): self._cg(b1, b2)
                for b1, b2 in itertools.product(self.basis, repeat=2)}

    def basis_product(self, b1, b2) -> dict:
        return self.table[b1, b2]

    def multiply(self, x, y) -> Element:
        return self.element(x) * self.element(y)

    # duality, delta, form -----------------------------------------------
    def dualize(self, x) -> Element:
        return self.element(x).map_labels(self.catalog.dual_label)

    @cached_property
    def delta_k(self) -> Element:
        """delta_[k] = 1 + a - M[2,0], from the sequence 0 -> V_{chi^-1} -> M(2,0) -> k -> 0."""
        return self.one + self.a - self.M(2)

    def delta(self, label: IndecLabel) -> Element:
        if isinstance(label, P):
            return Element(self, {label: 1})
        if label.k < self.datum.n:
            return self.delta_k * Element(self, {label: 1})
        # projective M(n,i): [Z] - [rad Z], rad M(n,i) = M(n-1, tau(i))
        return Element(self, {label: 1, M(label.k - 1, self.datum.tau(label.i)): -1})

    def trivial_top(self, x) -> int:
        """dim Hom(X, k): counts M(k,0) summands; projective P-labels have no trivial top."""
        zero = self.datum.zero
        return sum(c for b, c in self.element(x).coeffs.items() if isinstance(b, M) and b.i == zero)

    def bilinear_form(self, x, y) -> int:
        """(X, Y) = dim Hom(X, Y*) = dim Hom(X (x) Y, k)."""
        return self.trivial_top(self.multiply(x, y))

    def dim(self, x) -> int:
        return sum(c * self.catalog.dim(b) for b, c in self.element(x).coeffs.items())

    # export --------------------------------------------------------------
    def table_document(self) -> dict[str, Any]:
        return {
            "datum": self.datum.to_dict(),
            "basis": [str(b) for b in self.basis],
            "products": {
                f"{b1}*{b2}": str(Element(self, self.table[b1, b2]))
                for b1, b2 in itertools.product(self.basis, repeat=2)
            },
        }

    def table_json(self) -> str:
        return json.dumps(self.table_document(), indent=2, sort_keys=True)


@cache
def green_ring(datum: Datum) -> GreenRing:
    return GreenRing(datum)
