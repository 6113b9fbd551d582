"""Command-line front end: ``greenring <command> (--datum FILE | --radford m,n)``.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2 on
bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from .datum import Datum, build_radford_datum, datum_from_mapping
from .errors import GreenRingError
from .green_ring import green_ring
from .grothendieck import cartan_matrix
from .oracle import verify_structure_constants
from .radford import G0Presentation, Presentation
from .radical import radical_report, search_idempotents
from .stable import eigenvector_residual, fpdim_table, fusion_axioms_check

OK, MISMATCH, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


def _parse_radford(text: str) -> tuple[int, int]:
    try:
        m, n = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected m,n but got {text!r}") from None
    return m, n


def _load(args) -> tuple[Datum, tuple[int, int] | None]:
    if args.radford is not None:
        return build_radford_datum(*args.radford), args.radford
    try:
        with open(args.datum) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {args.datum}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{args.datum} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{args.datum} must hold a JSON object")
    params = None
    if "radford" in doc:
        params = (int(doc["radford"]["m"]), int(doc["radford"]["n"]))
    return datum_from_mapping(doc), params


# Each command returns (document, text, status).
Result = tuple[Any, str, int]


def cmd_validate(datum: Datum, args, _) -> Result:
    doc = datum.to_dict()
    table = datum.orbit_table
    lines = [
        f"G = {' x '.join(f'Z/{d}' for d in datum.orders)}, chi = {datum.raw.chi}, g = {datum.raw.g}",
        f"n = {datum.n}, r = {datum.r}, dim H = {datum.dim_H}",
        f"|Omega0| = {len(datum.omega0)} in {len(table.orbits0)} orbits, "
        f"|Omega1| = {len(datum.omega1)} in {len(table.orbits1)} orbits",
    ]
    doc["dim_H"] = datum.dim_H
    return doc, "\n".join(lines), OK


def cmd_basis(datum: Datum, args, _) -> Result:
    basis = [str(b) for b in green_ring(datum).basis]
    return {"datum": datum.to_dict(), "basis": basis}, "\n".join(basis), OK


def cmd_mul(datum: Datum, args, _) -> Result:
    R = green_ring(datum)
    x, y = R.element(args.left), R.element(args.right)
    product = str(x * y)
    return {"left": str(x), "right": str(y), "product": product}, product, OK


def cmd_table(datum: Datum, args, _) -> Result:
    doc = green_ring(datum).table_document()
    text = "\n".join(f"{k} = {v}" for k, v in doc["products"].items())
    return doc, text, OK


def cmd_cartan(datum: Datum, args, _) -> Result:
    C = cartan_matrix(datum)
    return C.to_dict(), str(C), OK


def cmd_radical(datum: Datum, args, _) -> Result:
    rep = radical_report(datum)
    good = (rep["rank"] == rep["expected_rank"] and rep["principal"]
            and rep["basis_squares_vanish"] and rep["matches_intersection"])
    lines = [
        f"rank {rep['rank']} (expected {rep['expected_rank']})",
        f"generator (1-a)M[n,0] = {rep['generator']}",
        f"principal: {rep['principal']}",
        f"equals ker(phi) & P: {rep['matches_intersection']}",
        f"basis squares vanish: {rep['basis_squares_vanish']}",
        "basis:",
    ] + [f"  {b}" for b in rep["basis"]]
    return rep, "\n".join(lines), OK if good else MISMATCH


def cmd_idempotents(datum: Datum, args, _) -> Result:
    found = search_idempotents(datum, args.bound, args.max_support)
    text = (f"{found.candidates} candidates, idempotents: "
            f"{', '.join(str(e) for e in found.found) or 'none'}")
    return found.to_dict(), text, MISMATCH if found.nontrivial else OK


def cmd_fusion(datum: Datum, args, _) -> Result:
    rep = fusion_axioms_check(datum)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}" + (f"  ({r.witness})" if r.witness else "")
             for r in rep.results]
    return rep.to_dict(), "\n".join(lines), OK if rep.passed else MISMATCH


def cmd_fpdim(datum: Datum, args, _) -> Result:
    rows = fpdim_table(datum)
    residual = eigenvector_residual(datum)
    tol = args.tolerance
    good = residual <= tol and all(r.diff <= tol for r in rows)
    doc = {
        "datum": datum.to_dict(),
        "tolerance": tol,
        "eigenvector_residual": residual,
        "rows": [{"label": str(r.label), "eigen": r.eigen, "closed": r.closed, "diff": r.diff}
                 for r in rows],
    }
    lines = [f"{str(r.label):<14} {r.eigen:.12f}  {r.closed:.12f}  diff {r.diff:.1e}" for r in rows]
    lines.append(f"eigenvector residual {residual:.1e} (tolerance {tol:g})")
    return doc, "\n".join(lines), OK if good else MISMATCH


def _presentation(cls) -> Callable:
    def run(datum: Datum, args, params) -> Result:
        if params is None:
            raise InputError("presentations need a Radford datum (--radford m,n or a radford file)")
        pres = cls(*params)
        rep = pres.verify()
        doc = {"presentation": pres.document(), "verification": rep.to_dict()}
        text = pres.text() + (
            f"\nrank {rep.rank} (expected {rep.expected_rank}), "
            f"{len(rep.mismatches)} mismatches / {rep.pairs} pairs")
        text += "".join(f"\n  {m}" for m in rep.mismatches)
        return doc, text, OK if rep.ok else MISMATCH
    return run


def cmd_oracle(datum: Datum, args, _) -> Result:
    rep = verify_structure_constants(datum)
    doc = rep.to_dict()
    doc.pop("seconds")  # keep output byte-deterministic
    text = rep.summary() + "".join(f"\n  {m}" for m in rep.mismatches)
    return doc, text, OK if rep.ok else MISMATCH


COMMANDS: dict[str, tuple[Callable, str]] = {
    "validate": (cmd_validate, "check the group datum and print n, r and the orbits"),
    "basis": (cmd_basis, "list the indecomposable basis of r(H)"),
    "mul": (cmd_mul, "multiply two elements of r(H)"),
    "table": (cmd_table, "full structure-constant table"),
    "cartan": (cmd_cartan, "Cartan matrix of the projective ideal"),
    "radical": (cmd_radical, "Jacobson radical lattice and its generator"),
    "idempotents": (cmd_idempotents, "bounded search for idempotents"),
    "fusion": (cmd_fusion, "fusion ring axioms for the stable Green ring"),
    "fpdim": (cmd_fpdim, "Frobenius-Perron dimensions, two ways"),
    "radford-presentation": (_presentation(Presentation), "generators and relations of r(H)"),
    "g0-presentation": (_presentation(G0Presentation), "generators and relations of G_0(H)"),
    "oracle-verify": (cmd_oracle, "check every product against explicit matrices"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group(required=True)
    source.add_argument("--datum", metavar="FILE", help="JSON datum file")
    source.add_argument("--radford", metavar="m,n", type=_parse_radford, help="Radford datum")
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--tolerance", type=float, default=1e-9, help="FPdim tolerance")

    parser = argparse.ArgumentParser(prog="greenring", description="Green rings of rank one Hopf algebras")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "mul":
            p.add_argument("left", help='element such as "M(2,0)" or "2*P[1] - M(1,0)"')
            p.add_argument("right")
        elif name == "idempotents":
            p.add_argument("--bound", type=int, default=1)
            p.add_argument("--max-support", type=int, default=3)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        datum, params = _load(args)
        doc, text, status = handler(datum, args, params)
    except (GreenRingError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    if args.json:
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
