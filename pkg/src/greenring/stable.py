"""The stable Green ring r(H)/P: fusion-ring axioms, Dickson polynomials, FPdim."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cache, cached_property
from typing import Any

import numpy as np

from .catalog import M, label_sort_key
from .datum import Datum
from .errors import DatumMismatch, EmptyStableBasis, IndexOutOfRange, NonPositiveIndex
from .green_ring import GreenRing, green_ring
from .sparse import Element


class StableRing:
    """r_st(H) on the basis of non-projective labels M(j,i), j < n."""

    def __init__(self, datum: Datum):
        self.datum = datum
        self.green: GreenRing = green_ring(datum)

    def __eq__(self, other):
        return isinstance(other, StableRing) and self.datum == other.datum

    def __hash__(self):
        return hash(("r_st", self.datum))

    def __repr__(self):
        return f"StableRing({self.datum!r})"

    @cached_property
    def basis(self) -> tuple[M, ...]:
        return self.green.catalog.stable_basis

    sort_key = staticmethod(label_sort_key)

    @cached_property
    def one(self) -> Element:
        return Element(self, {self.green.catalog.unit: 1})

    def project(self, x) -> Element:
        x = self.green.element(x)
        return Element(self, {b: c for b, c in x.coeffs.items() if b in self._index})

    def lift(self, x: Element) -> Element:
        if x.ring != self:
            raise DatumMismatch("element is not in this stable ring")
        return Element(self.green, x.coeffs)

    @cached_property
    def _index(self) -> dict[M, int]:
        return {b: pos for pos, b in enumerate(self.basis)}

    def basis_product(self, b1, b2) -> dict:
        return {b: c for b, c in self.green.table[b1, b2].items() if b in self._index}

    def multiply(self, x: Element, y: Element) -> Element:
        return x * y

    def element(self, label: M) -> Element:
        return Element(self, {label: 1})

    def dual(self, label: M) -> M:
        return self.green.catalog.dual_label(label)

    def psi(self, x: Element) -> int:
        """(delta*_[k], lift(x)): the unit coefficient, computed through the form."""
        g = self.green
        return g.bilinear_form(g.dualize(g.delta_k), self.lift(x))

    def left_multiplication(self, label: M) -> np.ndarray:
        """N[r][c] = coefficient of basis[c] in label * basis[r]."""
        size = len(self.basis)
        N = np.zeros((size, size), dtype=np.int64)
        for r, b in enumerate(self.basis):
            for c_label, c in self.basis_product(label, b).items():
                N[r, self._index[c_label]] = c
        return N


@cache
def stable_ring(datum: Datum) -> StableRing:
    return StableRing(datum)


def project_stable(x: Element) -> Element:
    return stable_ring(x.ring.datum).project(x)


def stable_multiply(x: Element, y: Element) -> Element:
    if x.ring != y.ring:
        raise DatumMismatch("stable elements over different data")
    return x * y


# --------------------------------------------------------------------------
# fusion ring axioms


@dataclass
class AxiomResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class FusionReport:
    datum: Datum
    results: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict[str, Any]:
        return {
            "datum": self.datum.to_dict(),
            "passed": self.passed,
            "axioms": [{"name": r.name, "passed": r.passed, "witness": r.witness}
                       for r in self.results],
        }


def fusion_axioms_check(datum: Datum) -> FusionReport:
    S = stable_ring(datum)
    B = S.basis
    report = FusionReport(datum)
    products = {(b1, b2): S.element(b1) * S.element(b2) for b1, b2 in itertools.product(B, repeat=2)}

    negative = next(((b1, b2) for (b1, b2), x in products.items()
                     if any(c < 0 for c in x.coeffs.values())), None)
    report.results.append(AxiomResult(
        "non-negative structure constants", negative is None,
        None if negative is None else f"{negative[0]}*{negative[1]} = {products[negative]}"))

    unit = S.green.catalog.unit
    unit_ok = unit in B and all(products[unit, b] == S.element(b) for b in B)
    report.results.append(AxiomResult(
        "unit is the basis element M(1,0)", unit_ok, None if unit_ok else str(unit)))

    bad_psi = None
    for (b1, b2), x in products.items():
        expected = int(b1 == S.dual(b2))
        if S.psi(x) != expected or x[unit] != expected:
            bad_psi = f"psi({b1}*{b2}) = {S.psi(x)}, expected {expected}"
            break
    report.results.append(AxiomResult("psi(b_i b_j) = [i = j*]", bad_psi is None, bad_psi))

    bad_inv = None
    for b in B:
        if S.dual(b) not in S._index or S.dual(S.dual(b)) != b:
            bad_inv = f"{b}* = {S.dual(b)}"
            break
    if bad_inv is None:
        dual = lambda x: x.map_labels(S.dual)  # noqa: E731
        for (b1, b2), x in products.items():
            if dual(x) != products[S.dual(b2), S.dual(b1)]:
                bad_inv = f"({b1}*{b2})* != {S.dual(b2)}*{S.dual(b1)}"
                break
    report.results.append(AxiomResult("* is an anti-involution", bad_inv is None, bad_inv))

    bad_trans = None
    for bi, bj in itertools.product(B, repeat=2):
        right = any(products[bi, bk][bj] for bk in B)
        left = any(products[bl, bi][bj] for bl in B)
        if not (right and left):
            bad_trans = f"no b_k with {bj} in {bi}*b_k"
            break
    report.results.append(AxiomResult("transitivity", bad_trans is None, bad_trans))
    return report


# --------------------------------------------------------------------------
# Dickson polynomials and FPdim


@dataclass(frozen=True)
class DicksonPoly:
    """F_j(Y, Z) as {(deg_Y, deg_Z): coefficient}."""

    j: int
    coeffs: tuple[tuple[tuple[int, int], int], ...]

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.coeffs)

    @property
    def z_degree(self) -> int:
        return max(dz for (_, dz), _ in self.coeffs)

    def evaluate(self, y, z, one=1):
        total = one * 0
        for (dy, dz), c in self.coeffs:
            total = total + (y ** dy) * (z ** dz) * c if dy or dz else total + one * c
        return total

    def __str__(self):
        terms = []
        for (dy, dz), c in sorted(self.coeffs, key=lambda t: (-t[0][1], t[0][0])):
            mono = "*".join(p for p in (_power("Y", dy), _power("Z", dz)) if p)
            terms.append((c, mono))
        out = ""
        for pos, (c, mono) in enumerate(terms):
            mag = str(abs(c)) if (abs(c) != 1 or not mono) else ""
            body = mag + ("*" if mag and mono else "") + mono
            out += ("-" if c < 0 else "") + body if pos == 0 else (" - " if c < 0 else " + ") + body
        return out or "0"


def _power(var: str, e: int) -> str:
    return "" if e == 0 else var if e == 1 else f"{var}^{e}"


@cache
def dickson(j: int) -> DicksonPoly:
    if j < 1:
        raise NonPositiveIndex(f"Dickson index must be >= 1, got {j}")
    prev, cur = {}, {(0, 0): 1}
    for _ in range(j - 1):
        nxt: dict = {}
        for (dy, dz), c in cur.items():
            nxt[dy, dz + 1] = nxt.get((dy, dz + 1), 0) + c
        for (dy, dz), c in prev.items():
            nxt[dy + 1, dz] = nxt.get((dy + 1, dz), 0) - c
        prev, cur = cur, {k: v for k, v in nxt.items() if v}
    return DicksonPoly(j, tuple(sorted(cur.items())))


def dickson_value(j: int, y, z, one):
    """F_j(y, z) by the three-term recursion, for any ring with + and *."""
    if j < 1:
        raise NonPositiveIndex(f"Dickson index must be >= 1, got {j}")
    prev, cur = None, one
    for _ in range(j - 1):
        nxt = z * cur if prev is None else z * cur - y * prev
        prev, cur = cur, nxt
    return cur


def fpdim_eigen(datum: Datum, label: M) -> float:
    """Perron root of the left-multiplication matrix of ``label`` on the stable basis."""
    S = stable_ring(datum)
    if not S.basis:
        raise EmptyStableBasis("H is semisimple: no non-projective indecomposables")
    N = S.left_multiplication(label).astype(float)
    return float(max(abs(np.linalg.eigvals(N))))


def fpdim_closed(datum: Datum, label: M) -> float:
    """dim(V_i) * F_j(1, 2cos(pi/n)); dim V_i = 1 for abelian G."""
    if not 1 <= label.k <= datum.n - 1:
        raise IndexOutOfRange(f"{label}: stable labels have length 1..{datum.n - 1}")
    return float(dickson_value(label.k, 1.0, 2 * math.cos(math.pi / datum.n), 1.0))


@dataclass
class FPdimRow:
    label: M
    eigen: float
    closed: float

    @property
    def diff(self) -> float:
        return abs(self.eigen - self.closed)


def fpdim_table(datum: Datum) -> list[FPdimRow]:
    return [FPdimRow(b, fpdim_eigen(datum, b), fpdim_closed(datum, b))
            for b in stable_ring(datum).basis]


def eigenvector_residual(datum: Datum) -> float:
    """max_b |N_b v - FPdim(b) v|_inf with v the closed-form FPdim vector."""
    S = stable_ring(datum)
    v = np.array([fpdim_closed(datum, b) for b in S.basis])
    worst = 0.0
    for b in S.basis:
        N = S.left_multiplication(b).astype(float)
        worst = max(worst, float(np.max(np.abs(N @ v - fpdim_closed(datum, b) * v))))
    return worst
