"""Generators and relations for the Green ring and G_0 of the Radford algebras.

Polynomials live in Z[Y, Z, X_1, ..., X_{m-1}] (Z is omitted for G_0) and are
stored as ``{exponent tuple: coefficient}``.  ``normal_form`` rewrites them
onto the basis {Y^i Z^k : i, k < n} u {X_j} (resp. {Y^i} u {X_j}).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any

from .catalog import P
from .datum import Datum, build_radford_datum
from .grothendieck import grothendieck
from .green_ring import green_ring
from .lattice import hnf
from .sparse import Element
from .stable import dickson

Poly = dict[tuple[int, ...], int]


def _clean(p: Poly) -> Poly:
    return {e: c for e, c in p.items() if c}


def poly_add(p: Poly, q: Poly, scale: int = 1) -> Poly:
    out = dict(p)
    for e, c in q.items():
        out[e] = out.get(e, 0) + scale * c
    return _clean(out)


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (e1, c1), (e2, c2) in itertools.product(p.items(), q.items()):
        e = tuple(a + b for a, b in zip(e1, e2))
        out[e] = out.get(e, 0) + c1 * c2
    return _clean(out)


class _RadfordQuotient:
    """Shared machinery; subclasses fix the variables and the X_1^m rule."""

    has_z: bool

    def __init__(self, m: int, n: int):
        self.datum: Datum = build_radford_datum(m, n)
        self.m, self.n = m, n

    # variables -------------------------------------------------------------
    @cached_property
    def variables(self) -> tuple[str, ...]:
        return (("Y", "Z") if self.has_z else ("Y",)) + tuple(f"X{j}" for j in range(1, self.m))

    @property
    def _x0(self) -> int:
        return 2 if self.has_z else 1

    def monomial(self, **powers: int) -> Poly:
        e = [0] * len(self.variables)
        for name, k in powers.items():
            e[self.variables.index(name)] = k
        return {tuple(e): 1}

    def const(self, c: int) -> Poly:
        return {(0,) * len(self.variables): c} if c else {}

    def var(self, name: str) -> Poly:
        return self.monomial(**{name: 1})

    def X(self, j: int) -> Poly:
        return self.var(f"X{j}")

    def geometric_Y(self) -> Poly:
        """1 + Y + ... + Y^{n-1}."""
        out: Poly = {}
        for t in range(self.n):
            out = poly_add(out, self.monomial(Y=t))
        return out

    def F(self, j: int) -> Poly:
        """Dickson F_j(Y, Z) embedded in this polynomial ring."""
        out: Poly = {}
        for (dy, dz), c in dickson(j).coeffs:
            out = poly_add(out, self.monomial(Y=dy, Z=dz), c)
        return out

    # rewriting ---------------------------------------------------------------
    def _x1_power(self, w: int) -> Poly:
        """X_1^w for w >= 1 in normal form."""
        m, n = self.m, self.n
        if w < m:
            return {next(iter(self.X(w))): n ** (w - 1)}
        if w == m:
            return self._x1_m()
        # X_1^m acts on X_1 as the scalar n^m in both quotients
        return {e: c * n ** m for e, c in self._x1_power(w - m).items()}

    def _x1_m(self) -> Poly:
        raise NotImplementedError

    def _reduce_base(self, e: tuple[int, ...]) -> Poly:
        raise NotImplementedError

    def normal_form(self, p: Poly) -> Poly:
        """Canonical representative on the normal-form basis.

        X_j is rewritten as X_1^j / n^{j-1}; the division is exact in the
        torsion-free quotient.  Y and Z act on any X-monomial by 1 and 2.
        """
        out: Poly = {}
        x0 = self._x0
        for e, c in p.items():
            xs = e[x0:]
            weight = sum((j + 1) * k for j, k in enumerate(xs))
            if weight == 0:
                out = poly_add(out, self._reduce_base(e), c)
                continue
            denom = 1
            for j, k in enumerate(xs):
                denom *= self.n ** (j * k)
            scale = c * (2 ** e[1] if self.has_z else 1)
            for e2, c2 in self._x1_power(weight).items():
                num = scale * c2
                if num % denom:
                    raise ArithmeticError(f"non-integral rewrite of monomial {e}")
                out = poly_add(out, {e2: num // denom})
        return out

    # basis and the map to the representation ring ---------------------------
    @cached_property
    def normal_basis(self) -> tuple[Poly, ...]:
        raise NotImplementedError

    def format(self, p: Poly) -> str:
        if not p:
            return "0"
        terms = []
        for e, c in sorted(p.items(), key=lambda t: (-sum(t[0]), t[0])):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.variables, e) if k)
            mag = str(abs(c)) if abs(c) != 1 or not mono else ""
            body = mag + ("*" if mag and mono else "") + mono
            terms.append((c < 0, body))
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def images(self) -> dict[str, Element]:
        raise NotImplementedError

    @cached_property
    def _images(self) -> list[Element]:
        imgs = self.images()
        return [imgs[v] for v in self.variables]

    def _power(self, var: int, k: int) -> Element:
        cache = self.__dict__.setdefault("_pow_cache", {})
        if (var, k) not in cache:
            cache[var, k] = self._images[var] ** k
        return cache[var, k]

    def evaluate(self, p: Poly) -> Element:
        """The substitution homomorphism, applied to a polynomial."""
        target = self._images[0].ring
        total = Element(target)
        for e, c in p.items():
            term = target.one * c
            for var, k in enumerate(e):
                if k:
                    term = term * self._power(var, k)
            total = total + term
        return total

    def relations(self) -> list[tuple[str, Poly]]:
        raise NotImplementedError

    def expected_rank(self) -> int:
        raise NotImplementedError

    def verify(self) -> "PresentationReport":
        report = PresentationReport(self.kind, self.m, self.n, self.expected_rank(), len(self.normal_basis))
        for name, rel in self.relations():
            if not self.evaluate(rel).is_zero():
                report.mismatches.append(f"relation {name} does not vanish: {self.evaluate(rel)}")
            if self.normal_form(rel):
                report.mismatches.append(f"relation {name} has non-zero normal form {self.format(self.normal_form(rel))}")
        imgs = [self.evaluate(u) for u in self.normal_basis]
        target = imgs[0].ring
        report.image_rank = len(hnf([x.vector() for x in imgs], len(target.basis)))
        report.target_rank = len(target.basis)
        spans = hnf([x.vector() for x in imgs], len(target.basis))
        identity = [[int(i == j) for j in range(len(target.basis))] for i in range(len(target.basis))]
        report.surjective = spans == identity
        if report.rank != report.expected_rank or report.target_rank != report.rank:
            report.mismatches.append(
                f"rank {report.rank}, target rank {report.target_rank}, expected {report.expected_rank}")
        if not report.surjective:
            report.mismatches.append("images of the normal-form basis do not span the full lattice")
        for (u, iu), (v, iv) in itertools.product(zip(self.normal_basis, imgs), repeat=2):
            report.pairs += 1
            lhs = self.evaluate(self.normal_form(poly_mul(u, v)))
            if lhs != iu * iv:
                report.mismatches.append(
                    f"({self.format(u)})*({self.format(v)}) -> {lhs} but ring product is {iu * iv}")
        self._extra_checks(report)
        return report

    def _extra_checks(self, report: "PresentationReport") -> None:
        pass

    def document(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "m": self.m,
            "n": self.n,
            "variables": list(self.variables),
            "relations": [{"name": name, "polynomial": self.format(p)} for name, p in self.relations()],
            "normal_basis": [self.format(u) for u in self.normal_basis],
        }

    def text(self) -> str:
        lines = [f"Z[{', '.join(self.variables)}] / I   ({self.kind}, m={self.m}, n={self.n})"]
        lines += [f"  {self.format(p)}" for _, p in self.relations()]
        return "\n".join(lines)


class Presentation(_RadfordQuotient):
    """r(H) = Z[Y, Z, X_1..X_{m-1}] / I with Y -> a, Z -> M[2,0], X_j -> P[j]."""

    has_z = True
    kind = "green"

    def _x1_m(self) -> Poly:
        gf = poly_mul(self.geometric_Y(), self.F(self.n))
        return self.normal_form({e: c * self.n ** (self.m - 2) for e, c in gf.items()})

    @cached_property
    def _z_top(self) -> Poly:
        """Z^n expressed in lower Z-degree, from (1 + Y - Z) F_n(Y, Z) = 0."""
        rel = poly_mul(poly_add(poly_add(self.const(1), self.var("Y")), self.var("Z"), -1), self.F(self.n))
        return poly_add(rel, self.monomial(Z=self.n))

    def _reduce_base(self, e: tuple[int, ...]) -> Poly:
        n = self.n
        pending: Poly = {e: 1}
        out: Poly = {}
        while pending:
            e, c = pending.popitem()
            y, z = e[0] % n, e[1]
            if z < n:
                out = poly_add(out, {(y, z) + e[2:]: c})
                continue
            shift = {(y, z - n) + e[2:]: c}
            for e2, c2 in poly_mul(shift, self._z_top).items():
                pending[e2] = pending.get(e2, 0) + c2
            pending = _clean(pending)
        return out

    @cached_property
    def normal_basis(self) -> tuple[Poly, ...]:
        n = self.n
        return tuple([self.monomial(Y=i, Z=k) for i in range(n) for k in range(n)]
                     + [self.X(j) for j in range(1, self.m)])

    def images(self) -> dict[str, Element]:
        R = green_ring(self.datum)
        out = {"Y": R.a, "Z": R.M(2)}
        for j in range(1, self.m):
            out[f"X{j}"] = R.P((j,))
        return out

    def relations(self) -> list[tuple[str, Poly]]:
        n, m = self.n, self.m
        one = self.const(1)
        rels = [
            ("Y^n - 1", poly_add(self.monomial(Y=n), one, -1)),
            ("(1+Y-Z)F_n(Y,Z)",
             poly_mul(poly_add(poly_add(one, self.var("Y")), self.var("Z"), -1), self.F(n))),
            ("Y*X1 - X1", poly_add(self.monomial(Y=1, X1=1), self.X(1), -1)),
            ("Z*X1 - 2*X1", poly_add(self.monomial(Z=1, X1=1), self.X(1), -2)),
        ]
        for j in range(2, m):
            rels.append((f"X1^{j} - n^{j - 1}*X{j}",
                         poly_add(self.monomial(X1=j), self.X(j), -(n ** (j - 1)))))
        rels.append(("X1^m - n^(m-2)(1+...+Y^(n-1))F_n(Y,Z)",
                     poly_add(self.monomial(X1=m),
                              poly_mul(self.geometric_Y(), self.F(n)), -(n ** (m - 2)))))
        return rels

    def expected_rank(self) -> int:
        return self.n ** 2 + self.m - 1

    def radical_generator(self) -> Poly:
        """(1 - Y) F_n(Y, Z)."""
        return poly_mul(poly_add(self.const(1), self.var("Y"), -1), self.F(self.n))

    def _extra_checks(self, report) -> None:
        from .radical import radical_generator

        R = green_ring(self.datum)
        image = self.evaluate(self.radical_generator())
        report.radical_generator_ok = image == radical_generator(self.datum)
        if not report.radical_generator_ok:
            report.mismatches.append(f"(1-Y)F_n(Y,Z) maps to {image}, not (1-a)M[n,0]")
        for i, j in itertools.product(range(1, self.m), repeat=2):
            lhs = R.P((i,)) * R.P((j,))
            if (i + j) % self.m == 0:
                rhs = (sum((R.a ** t for t in range(1, self.n)), R.one)) * R.M(self.n)
            else:
                rhs = R.P(((i + j) % (self.m * self.n),)) * self.n
            if lhs != rhs:
                report.mismatches.append(f"P[{i}]P[{j}] = {lhs}, expected {rhs}")


class G0Presentation(_RadfordQuotient):
    """G_0(H) = Z[Y, X_1..X_{m-1}] / I_0 with Y -> [V_m], X_j -> P[j]."""

    has_z = False
    kind = "grothendieck"

    def _x1_m(self) -> Poly:
        return {e: c * self.n ** (self.m - 1) for e, c in self.geometric_Y().items()}

    def _reduce_base(self, e: tuple[int, ...]) -> Poly:
        return {(e[0] % self.n,) + e[1:]: 1}

    @cached_property
    def normal_basis(self) -> tuple[Poly, ...]:
        return tuple([self.monomial(Y=i) for i in range(self.n)]
                     + [self.X(j) for j in range(1, self.m)])

    def images(self) -> dict[str, Element]:
        G = grothendieck(self.datum)
        out = {"Y": G.g0.a}
        for j in range(1, self.m):
            out[f"X{j}"] = Element(G.g0, {P((j,)): 1})
        return out

    def relations(self) -> list[tuple[str, Poly]]:
        n, m = self.n, self.m
        one = self.const(1)
        rels = [
            ("Y^n - 1", poly_add(self.monomial(Y=n), one, -1)),
            ("Y*X1 - X1", poly_add(self.monomial(Y=1, X1=1), self.X(1), -1)),
        ]
        for j in range(2, m):
            rels.append((f"X1^{j} - n^{j - 1}*X{j}",
                         poly_add(self.monomial(X1=j), self.X(j), -(n ** (j - 1)))))
        rels.append(("X1^m - n^(m-1)(1+...+Y^(n-1))",
                     poly_add(self.monomial(X1=m), self.geometric_Y(), -(n ** (m - 1)))))
        return rels

    def expected_rank(self) -> int:
        return self.n + self.m - 1


@dataclass
class PresentationReport:
    kind: str
    m: int
    n: int
    expected_rank: int
    rank: int
    target_rank: int = 0
    image_rank: int = 0
    surjective: bool = False
    pairs: int = 0
    radical_generator_ok: bool | None = None
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict[str, Any]:
        return {
            "kind": self.kind, "m": self.m, "n": self.n,
            "rank": self.rank, "expected_rank": self.expected_rank,
            "target_rank": self.target_rank, "surjective": self.surjective,
            "pairs": self.pairs, "radical_generator_ok": self.radical_generator_ok,
            "mismatches": self.mismatches,
        }


def normal_form(m: int, n: int, p: Poly) -> Poly:
    return Presentation(m, n).normal_form(p)


def verify_presentation(m: int, n: int) -> PresentationReport:
    return Presentation(m, n).verify()


def verify_g0_presentation(m: int, n: int) -> PresentationReport:
    return G0Presentation(m, n).verify()
