"""Sparse integer linear combinations over a ring with a finite labelled basis.

A ring object supplies ``basis``, ``sort_key(label)``, ``one`` and
``basis_product(b1, b2) -> dict``; :class:`Element` does the bilinear rest.
"""

from __future__ import annotations

import re
from typing import Callable, Iterator, Mapping

from .errors import DatumMismatch, LabelError


class Element:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs: Mapping | None = None):
        self.ring = ring
        self.coeffs = {b: int(c) for b, c in (coeffs or {}).items() if c}

    # construction helpers -------------------------------------------------
    def _coerce(self, other) -> "Element":
        if isinstance(other, Element):
            if other.ring is not self.ring and other.ring != self.ring:
                raise DatumMismatch(f"cannot combine elements of {self.ring!r} and {other.ring!r}")
            return other
        if isinstance(other, int):
            return self.ring.one * other
        return NotImplemented

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for b, c in other.coeffs.items():
            out[b] = out.get(b, 0) + c
        return Element(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Element(self.ring, {b: -c for b, c in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Element(self.ring, {b: c * other for b, c in self.coeffs.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = {}
        product = self.ring.basis_product
        for b1, c1 in self.coeffs.items():
            for b2, c2 in other.coeffs.items():
                for b, c in product(b1, b2).items():
                    out[b] = out.get(b, 0) + c1 * c2 * c
        return Element(self.ring, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result, base = self.ring.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison and inspection -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.one * other
        if not isinstance(other, Element):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __getitem__(self, label) -> int:
        return self.coeffs.get(label, 0)

    def __iter__(self) -> Iterator:
        return iter(sorted(self.coeffs.items(), key=lambda kv: self.ring.sort_key(kv[0])))

    def __bool__(self):
        return bool(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def support(self) -> list:
        return [b for b, _ in self]

    def vector(self) -> list[int]:
        return [self.coeffs.get(b, 0) for b in self.ring.basis]

    def map_labels(self, f: Callable) -> "Element":
        out: dict = {}
        for b, c in self.coeffs.items():
            nb = f(b)
            out[nb] = out.get(nb, 0) + c
        return Element(self.ring, out)

    def __str__(self):
        return format_terms(list(self))

    def __repr__(self):
        return f"<{type(self.ring).__name__} element {self}>"


def format_terms(terms) -> str:
    """Render sorted (label, coeff) pairs as ``2*P[1] + M(2,0) - M(1,2)``."""
    if not terms:
        return "0"
    parts = []
    for pos, (b, c) in enumerate(terms):
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        sign = "-" if c < 0 else "+"
        if pos == 0:
            parts.append(("-" if c < 0 else "") + mag + str(b))
        else:
            parts.append(f" {sign} {mag}{b}")
    return "".join(parts)


_TERM_RE = re.compile(r"([+-]?)\s*(?:(\d+)\s*\*?\s*)?([MPV][\(\[][-\d,\s]*[\)\]])")


def parse_element(text: str, ring, parse: Callable) -> Element:
    """Parse a signed sum of ``coeff*label`` terms; a bare integer means a multiple of 1."""
    text = text.strip()
    if re.fullmatch(r"[+-]?\d+", text):
        return ring.one * int(text)
    out: dict = {}
    pos = 0
    for match in _TERM_RE.finditer(text):
        if text[pos:match.start()].strip():
            raise LabelError(f"cannot parse element {text!r}")
        sign, coeff, label = match.groups()
        c = int(coeff) if coeff else 1
        if sign == "-":
            c = -c
        b = parse(label)
        out[b] = out.get(b, 0) + c
        pos = match.end()
    if pos == 0 or text[pos:].strip():
        raise LabelError(f"cannot parse element {text!r}")
    return Element(ring, out)
