"""Exact arithmetic in Q(w), w a primitive L-th root of unity, and matrices over it.

Elements are coefficient vectors of polynomials in w of degree < phi(L),
reduced modulo the L-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

Coeffs = tuple[Fraction, ...]


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, c in enumerate(b):
            a[i + shift] -= f * c
        _trim(a)
    return q, a


@cache
def cyclotomic_polynomial(L: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_L, lowest degree first."""
    num = [Fraction(-1)] + [Fraction(0)] * (L - 1) + [Fraction(1)]
    for d in range(1, L):
        if L % d == 0:
            num, rem = _poly_divmod(num, [Fraction(c) for c in cyclotomic_polynomial(d)])
            assert not rem
    return tuple(int(c) for c in _trim(num))


class CyclotomicField:
    def __init__(self, L: int):
        self.L = L
        self.modulus = [Fraction(c) for c in cyclotomic_polynomial(L)]
        self.degree = len(self.modulus) - 1
        self.zero = Cyc(self, (Fraction(0),) * self.degree)
        self.one = self.rational(1)
        self._roots = [self._reduce([Fraction(0)] * k + [Fraction(1)]) for k in range(L)]
        self._root_lookup = {c: k for k, c in enumerate(self._roots)}

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and self.L == other.L

    def __hash__(self):
        return hash(("Q(w)", self.L))

    def __repr__(self):
        return f"CyclotomicField({self.L})"

    def _reduce(self, p: list) -> Coeffs:
        if len(p) > self.degree:
            _, p = _poly_divmod(p, self.modulus)
        p = list(p) + [Fraction(0)] * (self.degree - len(p))
        return tuple(p)

    def rational(self, x) -> "Cyc":
        return Cyc(self, (Fraction(x),) + (Fraction(0),) * (self.degree - 1))

    def element(self, coeffs) -> "Cyc":
        """sum_k coeffs[k] * w^k, reduced."""
        return Cyc(self, self._reduce([Fraction(c) for c in coeffs]))

    def root(self, k: int) -> "Cyc":
        """w ** k."""
        return Cyc(self, self._roots[k % self.L])

    def root_exponent(self, x: "Cyc") -> int | None:
        """k with x == w ** k, or None if x is not an L-th root of unity."""
        return self._root_lookup.get(x.c)


class Cyc:
    __slots__ = ("field", "c")

    def __init__(self, field: CyclotomicField, c: Coeffs):
        self.field = field
        self.c = c

    def _lift(self, other) -> "Cyc":
        if isinstance(other, Cyc):
            return other
        return self.field.rational(other)

    def __add__(self, other):
        other = self._lift(other)
        return Cyc(self.field, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.field, tuple(-a for a in self.c))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyc(self.field, tuple(a * other for a in self.c))
        if self.is_zero() or other.is_zero():
            return self.field.zero
        prod = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(other.c):
                    if b:
                        prod[i + j] += a * b
        return Cyc(self.field, self.field._reduce(_trim(prod)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(w)")
        # extended Euclid: s*self + t*modulus = 1
        r0, r1 = list(self.field.modulus), _trim(list(self.c))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s_new = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - len(s0))
            for i, a in enumerate(q):
                for j, b in enumerate(s1):
                    s_new[i + j] -= a * b
            s0, s1 = s1, _trim(s_new)
        unit = r1[0]
        return Cyc(self.field, self.field._reduce([x / unit for x in s1]))

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, k: int):
        result, base = self.field.one, self
        if k < 0:
            base, k = self.inverse(), -k
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.rational(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def __repr__(self):
        terms = [f"{a}*w^{i}" if i else f"{a}" for i, a in enumerate(self.c) if a]
        return " + ".join(terms) or "0"


# ---------------------------------------------------------------------------
# dense matrices over Q(w): lists of rows


Matrix = list[list[Cyc]]


def zeros(F: CyclotomicField, rows: int, cols: int) -> Matrix:
    return [[F.zero] * cols for _ in range(rows)]


def identity(F: CyclotomicField, size: int) -> Matrix:
    return [[F.one if i == j else F.zero for j in range(size)] for i in range(size)]


def diagonal(entries: list[Cyc]) -> Matrix:
    F = entries[0].field
    size = len(entries)
    return [[entries[i] if i == j else F.zero for j in range(size)] for i in range(size)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if not A:
        return []
    F = A[0][0].field if A[0] else None
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        new = [F.zero] * cols
        for k, a in enumerate(row):
            if a:
                for j, b in enumerate(B[k]):
                    if b:
                        new[j] = new[j] + a * b
        out.append(new)
    return out


def matadd(A: Matrix, B: Matrix, scale=1) -> Matrix:
    return [[a + b * scale for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def matpow(A: Matrix, k: int) -> Matrix:
    F = A[0][0].field
    result = identity(F, len(A))
    for _ in range(k):
        result = matmul(result, A)
    return result


def kron(A: Matrix, B: Matrix) -> Matrix:
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)] if A else []


def submatrix(A: Matrix, rows: list[int], cols: list[int]) -> Matrix:
    return [[A[r][c] for c in cols] for r in rows]


def is_diagonal(A: Matrix) -> bool:
    return all(not x for i, row in enumerate(A) for j, x in enumerate(row) if i != j)


def mat_equal(A: Matrix, B: Matrix) -> bool:
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb)) and len(A) == len(B)


def rank(A: Matrix) -> int:
    """Exact rank by Gaussian elimination over Q(w)."""
    rows = [list(r) for r in A if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        inv = rows[rk][col].inverse()
        prow = [x * inv for x in rows[rk]]
        rows[rk] = prow
        for r in range(rk + 1, len(rows)):
            f = rows[r][col]
            if f:
                rows[r] = [x - f * y for x, y in zip(rows[r], prow)]
        rk += 1
        if rk == len(rows):
            break
    return rk
