"""The indecomposable modules M(k,i) and P[j]: labels, dimensions, duality."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Union

from .datum import Datum, Index, dual_character
from .errors import LabelError


def _fmt(index: Index) -> str:
    return ",".join(str(x) for x in index)


@dataclass(frozen=True)
class M:
    """M(k,i): the uniserial module of length k with top V_i, i in Omega_0."""

    k: int
    i: Index

    def __str__(self):
        return f"M({self.k},{_fmt(self.i)})"


@dataclass(frozen=True)
class P:
    """P[j]: the simple projective attached to the orbit of j in Omega_1."""

    j: Index

    def __str__(self):
        return f"P[{_fmt(self.j)}]"


@dataclass(frozen=True)
class V:
    """[V_i]: a simple kG-module, used as a basis label of G_0 and r(kG)."""

    i: Index

    def __str__(self):
        return f"V({_fmt(self.i)})"


IndecLabel = Union[M, P]
Label = Union[M, P, V]

_LABEL_RE = re.compile(r"^\s*(?:M\(([-\d,\s]+)\)|P\[([-\d,\s]+)\]|V\(([-\d,\s]+)\))\s*$")


def parse_label(text: str, datum: Datum) -> Label:
    """Parse ``M(k,i)``, ``P[j]`` or ``V(i)``; P-labels are normalized to the orbit minimum."""
    match = _LABEL_RE.match(text)
    if not match:
        raise LabelError(f"cannot parse label {text!r}")
    m_args, p_args, v_args = match.groups()
    try:
        if m_args is not None:
            k, *rest = (int(x) for x in m_args.split(","))
            return make_m(datum, k, tuple(rest))
        if p_args is not None:
            return make_p(datum, tuple(int(x) for x in p_args.split(",")))
        return V(datum.reduce(int(x) for x in v_args.split(",")))
    except ValueError as exc:
        raise LabelError(f"bad label {text!r}: {exc}") from None


def make_m(datum: Datum, k: int, i) -> M:
    i = datum.reduce(i)
    if not 1 <= k <= datum.n:
        raise LabelError(f"M({k},{_fmt(i)}): length must lie in 1..{datum.n}")
    if not datum.in_omega0(i):
        raise LabelError(f"M({k},{_fmt(i)}): index is not in Omega_0")
    return M(k, i)


def make_p(datum: Datum, j) -> P:
    j = datum.reduce(j)
    if datum.in_omega0(j):
        raise LabelError(f"P[{_fmt(j)}]: index is not in Omega_1")
    return P(datum.rep(j))


def label_sort_key(label: Label):
    if isinstance(label, M):
        return (0, label.i, label.k)
    if isinstance(label, P):
        return (1, label.j, 0)
    return (2, label.i, 0)


class Catalog:
    """Ordered basis of r(H) for a validated datum."""

    def __init__(self, datum: Datum):
        self.datum = datum

    @cached_property
    def basis(self) -> tuple[IndecLabel, ...]:
        d = self.datum
        ms = [M(k, i) for i in d.omega0 for k in range(1, d.n + 1)]
        ps = [P(orbit[0]) for orbit in d.orbit_table.orbits1]
        return tuple(sorted(ms, key=label_sort_key) + sorted(ps, key=label_sort_key))

    @cached_property
    def position(self) -> dict[IndecLabel, int]:
        return {b: pos for pos, b in enumerate(self.basis)}

    @cached_property
    def projective_basis(self) -> tuple[IndecLabel, ...]:
        """Projectives in orbit-grouped order: M(n,i), M(n,tau(i)), ... then P-labels."""
        d = self.datum
        table = d.orbit_table
        return tuple([M(d.n, i) for orbit in table.orbits0 for i in orbit]
                     + [P(orbit[0]) for orbit in table.orbits1])

    @cached_property
    def stable_basis(self) -> tuple[M, ...]:
        return tuple(b for b in self.basis if not self.is_projective(b))

    @property
    def unit(self) -> M:
        return M(1, self.datum.zero)

    @property
    def a(self) -> M:
        """a = [V_{chi^{-1}}] = M(1, tau(0))."""
        return M(1, self.datum.tau(self.datum.zero))

    def dim(self, label: IndecLabel) -> int:
        return label.k if isinstance(label, M) else self.datum.n

    def is_projective(self, label: IndecLabel) -> bool:
        return isinstance(label, P) or label.k == self.datum.n

    def dual_label(self, label: IndecLabel) -> IndecLabel:
        d = self.datum
        if isinstance(label, M):
            return M(label.k, d.tau(dual_character(d, label.i), 1 - label.k))
        return P(d.rep(dual_character(d, label.j)))

    def parse(self, text: str) -> IndecLabel:
        label = parse_label(text, self.datum)
        if isinstance(label, V):
            raise LabelError(f"{text!r} is not a label of r(H); use M(1,i) for simple kG-modules")
        return label

    def __len__(self):
        return len(self.basis)


def enumerate_basis(datum: Datum) -> tuple[IndecLabel, ...]:
    return Catalog(datum).basis
