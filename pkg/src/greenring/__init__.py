"""Exact Green rings of pointed rank one Hopf algebras of non-nilpotent type."""

from .catalog import Catalog, M, P, V, enumerate_basis, parse_label
from .datum import (
    Datum,
    GroupDatum,
    build_orbit_table,
    build_radford_datum,
    dual_character,
    load_datum,
    validate_datum,
)
from .green_ring import GreenRing, green_ring
from .sparse import Element

__all__ = [
    "Catalog", "M", "P", "V", "enumerate_basis", "parse_label",
    "Datum", "GroupDatum", "build_orbit_table", "build_radford_datum", "dual_character",
    "load_datum", "validate_datum",
    "GreenRing", "green_ring", "Element",
]
