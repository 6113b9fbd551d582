"""Brute-force check of the Clebsch-Gordan rules with explicit matrices over Q(w).

Each basis label is realized as matrices for the group generators and for y,
tensor products are formed with the coproduct, and the result is decomposed
by rank counting.  Nothing here consults the structure-constant table except
``verify_structure_constants``, which compares against it.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache, cached_property
from typing import Any

from . import cyclotomic as cm
from .catalog import IndecLabel, M, P
from .cyclotomic import CyclotomicField
from .datum import Datum, Index
from .errors import DimensionMismatch, RelationViolation
from .green_ring import green_ring


@cache
def field_for(datum: Datum) -> CyclotomicField:
    return CyclotomicField(datum.exponent)


@dataclass
class ModuleRealization:
    datum: Datum
    gens: list[cm.Matrix]  # one matrix per cyclic generator of G
    y: cm.Matrix

    @property
    def field(self) -> CyclotomicField:
        return field_for(self.datum)

    @property
    def dim(self) -> int:
        return len(self.y)

    def group_element(self, h: Index) -> cm.Matrix:
        out = cm.identity(self.field, self.dim)
        for gen, k in zip(self.gens, h):
            for _ in range(k):
                out = cm.matmul(out, gen)
        return out

    @cached_property
    def g(self) -> cm.Matrix:
        return self.group_element(self.datum.raw.g)

    def relation_failures(self) -> list[str]:
        """Which of y^n = g^n - 1 and y h = chi(h) h y fail."""
        d, F = self.datum, self.field
        failures = []
        if self.dim == 0:
            return failures
        I = cm.identity(F, self.dim)
        lhs = cm.matpow(self.y, d.n)
        rhs = cm.matadd(cm.matpow(self.g, d.n), I, -1)
        if not cm.mat_equal(lhs, rhs):
            failures.append("y^n != g^n - 1")
        for a, h in enumerate(self.gens):
            chi_h = F.root(d.evaluate(d.raw.chi, d.generator(a)))
            left = cm.matmul(self.y, h)
            right = [[chi_h * x for x in row] for row in cm.matmul(h, self.y)]
            if not cm.mat_equal(left, right):
                failures.append(f"y h_{a} != chi(h_{a}) h_{a} y")
        return failures

    def check_relations(self) -> None:
        failures = self.relation_failures()
        if failures:
            raise RelationViolation("; ".join(failures))

    def central_idempotent(self) -> cm.Matrix:
        """e = (1/r) sum_s g^{sn}."""
        d, F = self.datum, self.field
        gn = cm.matpow(self.g, d.n)
        acc = cm.zeros(F, self.dim, self.dim)
        power = cm.identity(F, self.dim)
        for _ in range(d.r):
            acc = cm.matadd(acc, power)
            power = cm.matmul(power, gn)
        inv_r = Fraction(1, d.r)
        return [[x * inv_r for x in row] for row in acc]

    def weight_characters(self) -> list[Index]:
        """Character of each coordinate; the group must act diagonally."""
        d, F = self.datum, self.field
        if not all(cm.is_diagonal(h) for h in self.gens):
            raise RelationViolation("group generators are not diagonal in this basis")
        chars = []
        for p in range(self.dim):
            c = []
            for a, h in enumerate(self.gens):
                e = F.root_exponent(h[p][p])
                if e is None or (e * d.orders[a]) % d.exponent:
                    raise RelationViolation(f"entry {h[p][p]} is not a character value")
                c.append(e * d.orders[a] // d.exponent)
            chars.append(tuple(c))
        return chars


def _diag_action(datum: Datum, chars: list[Index]) -> list[cm.Matrix]:
    F = field_for(datum)
    return [cm.diagonal([F.root(datum.evaluate(c, datum.generator(a))) for c in chars])
            for a in range(len(datum.orders))]


def realize(datum: Datum, label: IndecLabel) -> ModuleRealization:
    """Basis x^t v (t = 0..len-1): h acts by chi^{-t}(h) times the top character, y shifts."""
    F = field_for(datum)
    if isinstance(label, M):
        top, length = label.i, label.k
    else:
        top, length = label.j, datum.n
    chars = [datum.tau(top, t) for t in range(length)]
    y = cm.zeros(F, length, length)
    for t in range(length - 1):
        y[t + 1][t] = F.one
    if isinstance(label, P):
        y[0][length - 1] = F.root(datum.lam(top)) - 1
    return ModuleRealization(datum, _diag_action(datum, chars), y)


def tensor(A: ModuleRealization, B: ModuleRealization) -> ModuleRealization:
    """Delta(h) = h (x) h, Delta(y) = y (x) g + 1 (x) y."""
    F = A.field
    gens = [cm.kron(ha, hb) for ha, hb in zip(A.gens, B.gens)]
    y = cm.matadd(cm.kron(A.y, B.g), cm.kron(cm.identity(F, A.dim), B.y))
    out = ModuleRealization(A.datum, gens, y)
    out.check_relations()
    return out


def dual(A: ModuleRealization) -> ModuleRealization:
    """(hf)(v) = f(S(h)v) with S(h) = h^{-1}, S(y) = -y g^{-1}."""
    gens = [cm.transpose(cm.diagonal([x.inverse() for x in (h[p][p] for p in range(A.dim))]))
            for h in A.gens]
    g_inv = cm.diagonal([A.g[p][p].inverse() for p in range(A.dim)])
    y = cm.transpose([[-x for x in row] for row in cm.matmul(A.y, g_inv)])
    out = ModuleRealization(A.datum, gens, y)
    out.check_relations()
    return out


def decompose(module: ModuleRealization) -> Counter:
    """Multiset of indecomposable summands.

    On the e-part, M(k,i) occurs d(k, j) - d(k+1, j) times with
    j = tau^{k-1}(i) and d(k, j) the dimension of ker y & im y^{k-1} inside
    the j-eigenspace.  The (1-e)-part is semisimple and P[j] occurs as often
    as the character j does there.
    """
    d = module.datum
    module.check_relations()
    e = module.central_idempotent()
    if not cm.is_diagonal(e) or any(e[p][p] not in (0, 1) for p in range(module.dim)):
        raise RelationViolation("central idempotent is not a coordinate projection")
    chars = module.weight_characters()
    e_coords = [p for p in range(module.dim) if e[p][p] == 1]
    f_coords = [p for p in range(module.dim) if e[p][p] == 0]
    result: Counter = Counter()

    ye = cm.submatrix(module.y, e_coords, e_coords)
    powers = [cm.identity(module.field, len(e_coords))]
    for _ in range(d.n + 1):
        powers.append(cm.matmul(powers[-1], ye))
    by_char: dict[Index, list[int]] = {}
    for pos, p in enumerate(e_coords):
        by_char.setdefault(chars[p], []).append(pos)

    def power_rank(k: int, c: Index) -> int:
        cols = by_char.get(c, [])
        if not cols:
            return 0
        return cm.rank(cm.submatrix(powers[k], list(range(len(e_coords))), cols))

    def socle_count(k: int, j: Index) -> int:
        # ker y & y^{k-1}(V_c) with c = tau^{1-k}(j), the only weight space landing in V_j
        c = d.tau(j, 1 - k)
        return power_rank(k - 1, c) - power_rank(k, c)

    for i in d.omega0:
        for k in range(1, d.n + 1):
            j = d.tau(i, k - 1)
            mult = socle_count(k, j) - socle_count(k + 1, j)
            if mult < 0:
                raise DimensionMismatch(f"negative multiplicity for M({k},{i})")
            if mult:
                result[M(k, i)] = mult

    f_counts = Counter(chars[p] for p in f_coords)
    for orbit in d.orbit_table.orbits1:
        counts = {f_counts.get(c, 0) for c in orbit}
        if len(counts) != 1:
            raise DimensionMismatch(f"orbit {orbit} has unequal weight multiplicities {counts}")
        mult = counts.pop()
        if mult:
            result[P(orbit[0])] = mult

    total = sum(mult * (b.k if isinstance(b, M) else d.n) for b, mult in result.items())
    if total != module.dim:
        raise DimensionMismatch(f"summands have total dimension {total}, module has {module.dim}")
    return result


@dataclass
class VerificationReport:
    datum: Datum
    pairs: int = 0
    mismatches: list[dict[str, str]] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        return f"{len(self.mismatches)} mismatches / {self.pairs} pairs"

    def to_dict(self) -> dict[str, Any]:
        return {
            "datum": self.datum.to_dict(),
            "pairs": self.pairs,
            "mismatches": self.mismatches,
            "seconds": round(self.seconds, 3),
        }


def _counter_str(c: Counter) -> str:
    return " + ".join(f"{m}*{b}" if m != 1 else str(b) for b, m in sorted(c.items(), key=lambda t: str(t[0]))) or "0"


def verify_structure_constants(datum: Datum) -> VerificationReport:
    start = time.perf_counter()
    R = green_ring(datum)
    realized = {b: realize(datum, b) for b in R.basis}
    report = VerificationReport(datum)
    for b1, b2 in itertools.product(R.basis, repeat=2):
        report.pairs += 1
        predicted = Counter({b: c for b, c in R.table[b1, b2].items()})
        try:
            observed = decompose(tensor(realized[b1], realized[b2]))
        except (RelationViolation, DimensionMismatch) as exc:
            report.mismatches.append({"pair": f"{b1}*{b2}", "error": str(exc)})
            continue
        if observed != predicted:
            report.mismatches.append({
                "pair": f"{b1}*{b2}",
                "predicted": _counter_str(predicted),
                "observed": _counter_str(observed),
            })
    report.seconds = time.perf_counter() - start
    return report


def verify_duals(datum: Datum) -> list[str]:
    """Labels whose realized dual module does not decompose to dual_label."""
    R = green_ring(datum)
    bad = []
    for b in R.basis:
        observed = decompose(dual(realize(datum, b)))
        if observed != Counter({R.catalog.dual_label(b): 1}):
            bad.append(f"{b}* = {_counter_str(observed)}, table says {R.catalog.dual_label(b)}")
    return bad
