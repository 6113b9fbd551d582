"""Group data (G, chi, g, 1) over finite abelian groups.

G is the product of cyclic groups Z/d_1 x ... x Z/d_s.  Elements and
characters are both integer tuples; the character with index ``c`` sends the
a-th generator to ``w_{d_a} ** c_a``.  All roots of unity are stored as
exponents of a primitive ``L``-th root of unity, ``L = lcm(d_1, ..., d_s)``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, Iterable

from .errors import (
    CharacterOrderMismatch,
    DegenerateOrder,
    InvalidParameters,
    MalformedTuple,
    NilpotentType,
)

Index = tuple[int, ...]


@dataclass(frozen=True)
class GroupDatum:
    """Raw datum: cyclic orders, character exponents and the central element g."""

    cyclic_orders: tuple[int, ...]
    chi: tuple[int, ...]
    g: tuple[int, ...]
    mu: int = 1

    def __post_init__(self):
        orders = tuple(int(d) for d in self.cyclic_orders)
        if not orders:
            raise MalformedTuple("cyclic_orders must be non-empty")
        if any(d < 1 for d in orders):
            raise MalformedTuple(f"cyclic orders must be positive, got {orders}")
        if len(self.chi) != len(orders) or len(self.g) != len(orders):
            raise MalformedTuple(
                f"chi {tuple(self.chi)} and g {tuple(self.g)} must have arity {len(orders)}"
            )
        if self.mu != 1:
            raise MalformedTuple("only mu = 1 is supported")
        object.__setattr__(self, "cyclic_orders", orders)
        object.__setattr__(self, "chi", tuple(int(c) % d for c, d in zip(self.chi, orders)))
        object.__setattr__(self, "g", tuple(int(x) % d for x, d in zip(self.g, orders)))


@dataclass(frozen=True)
class CharacterIndex:
    index: Index
    lam: int  # exponent of the scalar by which g^n acts, mod L

    @property
    def in_omega0(self) -> bool:
        return self.lam == 0


@dataclass(frozen=True)
class OrbitTable:
    tau: dict[Index, Index] = field(compare=False)
    orbits0: tuple[tuple[Index, ...], ...]
    orbits1: tuple[tuple[Index, ...], ...]


class Datum:
    """A validated non-nilpotent datum together with everything derived from it.

    Instances are immutable once built and compare equal iff the underlying
    raw data agree.
    """

    def __init__(self, raw: GroupDatum, n: int, r: int, q: int):
        self.raw = raw
        self.orders = raw.cyclic_orders
        self.exponent = math.lcm(*self.orders)
        self.n = n
        self.r = r
        self.q = q  # chi(g) = w_L ** q

    def __eq__(self, other):
        return isinstance(other, Datum) and self.raw == other.raw

    def __hash__(self):
        return hash(self.raw)

    def __repr__(self):
        return (f"Datum(orders={self.orders}, chi={self.raw.chi}, g={self.raw.g}, "
                f"n={self.n}, r={self.r})")

    # group / character arithmetic -----------------------------------------
    @property
    def order(self) -> int:
        return math.prod(self.orders)

    @property
    def dim_H(self) -> int:
        return self.n * self.order

    def reduce(self, t: Iterable[int]) -> Index:
        t = tuple(t)
        if len(t) != len(self.orders):
            raise MalformedTuple(f"expected a tuple of arity {len(self.orders)}, got {t}")
        return tuple(x % d for x, d in zip(t, self.orders))

    def add(self, a: Index, b: Index) -> Index:
        return tuple((x + y) % d for x, y, d in zip(a, b, self.orders))

    def neg(self, a: Index) -> Index:
        return tuple(-x % d for x, d in zip(a, self.orders))

    def scale(self, k: int, a: Index) -> Index:
        return tuple(k * x % d for x, d in zip(a, self.orders))

    @property
    def zero(self) -> Index:
        return (0,) * len(self.orders)

    def evaluate(self, c: Index, h: Index) -> int:
        """Exponent e with c(h) = w_L ** e."""
        L = self.exponent
        return sum(ci * hi * (L // d) for ci, hi, d in zip(c, h, self.orders)) % L

    def generator(self, a: int) -> Index:
        return tuple(int(b == a) for b in range(len(self.orders)))

    @cached_property
    def characters(self) -> tuple[Index, ...]:
        return tuple(itertools.product(*(range(d) for d in self.orders)))

    def lam(self, c: Index) -> int:
        """Exponent of the scalar by which g^n acts on V_c."""
        return self.evaluate(c, self.scale(self.n, self.raw.g))

    def character_index(self, c: Index) -> CharacterIndex:
        c = self.reduce(c)
        return CharacterIndex(c, self.lam(c))

    @cached_property
    def omega0(self) -> tuple[Index, ...]:
        return tuple(c for c in self.characters if self.lam(c) == 0)

    @cached_property
    def omega1(self) -> tuple[Index, ...]:
        return tuple(c for c in self.characters if self.lam(c) != 0)

    def in_omega0(self, c: Index) -> bool:
        return self.lam(c) == 0

    @property
    def chi_inverse(self) -> Index:
        return self.neg(self.raw.chi)

    def tau(self, c: Index, t: int = 1) -> Index:
        """tau^t(c): the character of V_{chi^{-t}} (x) V_c."""
        return self.add(c, self.scale(-t, self.raw.chi))

    @cached_property
    def orbit_table(self) -> OrbitTable:
        return build_orbit_table(self)

    def rep(self, c: Index) -> Index:
        """Canonical (lexicographically least) member of the tau-orbit of c."""
        return self._rep_map[self.reduce(c)]

    @cached_property
    def _rep_map(self) -> dict[Index, Index]:
        out = {}
        table = self.orbit_table
        for orbit in table.orbits0 + table.orbits1:
            for c in orbit:
                out[c] = orbit[0]
        return out

    def to_dict(self) -> dict[str, Any]:
        return {
            "cyclic_orders": list(self.orders),
            "chi": list(self.raw.chi),
            "g": list(self.raw.g),
            "n": self.n,
            "r": self.r,
            "omega0": [list(c) for c in self.omega0],
            "omega1": [list(c) for c in self.omega1],
        }


def _element_order(g: Index, orders: tuple[int, ...]) -> int:
    return math.lcm(*(d // math.gcd(d, x) for x, d in zip(g, orders)))


def validate_datum(d: GroupDatum) -> Datum:
    L = math.lcm(*d.cyclic_orders)
    zero = (0,) * len(d.cyclic_orders)
    q = sum(c * x * (L // o) for c, x, o in zip(d.chi, d.g, d.cyclic_orders)) % L
    n = L // math.gcd(L, q)
    if n < 2:
        raise DegenerateOrder("chi(g) = 1; H would be the group algebra")
    g_n = tuple(n * x % o for x, o in zip(d.g, d.cyclic_orders))
    if g_n == zero:
        raise NilpotentType(f"g^{n} = 1: datum is of nilpotent type")
    if tuple(n * c % o for c, o in zip(d.chi, d.cyclic_orders)) != zero:
        raise CharacterOrderMismatch(f"chi^{n} != 1 and g^{n} != 1")
    r = _element_order(d.g, d.cyclic_orders) // n
    return Datum(d, n=n, r=r, q=q)


def build_orbit_table(d: Datum) -> OrbitTable:
    tau = {c: d.tau(c) for c in d.characters}
    seen: set[Index] = set()
    orbits0, orbits1 = [], []
    for c in d.characters:  # lexicographic order, so c is the orbit minimum
        if c in seen:
            continue
        orbit = [c]
        while (nxt := tau[orbit[-1]]) != c:
            orbit.append(nxt)
        seen.update(orbit)
        (orbits0 if d.in_omega0(c) else orbits1).append(tuple(orbit))
    return OrbitTable(tau, tuple(orbits0), tuple(orbits1))


def dual_character(d: Datum, c: Index) -> Index:
    return d.neg(c)


def radford_group_datum(m: int, n: int) -> GroupDatum:
    if m <= 1 or n < 2:
        raise InvalidParameters(f"Radford algebra needs m > 1 and n >= 2, got m={m}, n={n}")
    return GroupDatum((m * n,), (-m % (m * n),), (1,))


def build_radford_datum(m: int, n: int) -> Datum:
    return validate_datum(radford_group_datum(m, n))


def datum_from_mapping(doc: dict[str, Any]) -> Datum:
    if "radford" in doc:
        params = doc["radford"]
        return build_radford_datum(int(params["m"]), int(params["n"]))
    try:
        raw = GroupDatum(tuple(doc["cyclic_orders"]), tuple(doc["chi"]), tuple(doc["g"]))
    except KeyError as exc:
        raise MalformedTuple(f"datum document is missing key {exc}") from None
    return validate_datum(raw)


def load_datum(path: str | Path) -> Datum:
    return datum_from_mapping(json.loads(Path(path).read_text()))
