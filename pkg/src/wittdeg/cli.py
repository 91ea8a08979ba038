"""Command-line front end.

Subcommands: degree, nori-check, witt invariants, witt is-zero,
koszul verify, row check, row compose.  Output is deterministic; --json
emits the versioned report schema.  Exit codes: 0 success, 2 parse or
validation error, 3 mathematical hypothesis failure (NotFiniteLength,
SupportNotOrigin, NotOriginPreserving, EvenN).

Job files::

    field = Q            # or F<p> with p an odd prime
    vars = x1, x2, x3
    map x1 = x1^2 - x2^2 # degree jobs: one map line per variable
    map x2 = x1*x2
    map x3 = x3

Row files use the same header plus optional ``rel = <poly>`` lines and one
``row = <poly>, <poly>, ...`` line.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from typing import Optional

from .degree import DegreeReport, Endo, degree_of
from .errors import (
    AlgebraError,
    EvenN,
    JobFileError,
    NotFiniteLength,
    NotOriginPreserving,
    ParseError,
    SupportNotOrigin,
)
from .fields import FieldSpec
from .koszul import (
    dual_differential_sign,
    generic_duality,
    resolve_dual_signs,
    symmetry_sign,
    verify_chain_map,
    verify_symmetry,
)
from .orders import by_name
from .poly import Poly, Ring, parse_poly
from .umrow import (
    AlgebraPresentation,
    UnimodularRow,
    compose_with_endo,
    is_unimodular,
    obstruction_report,
)
from .witt import invariants, is_witt_zero, parse_diag, witt_class_display

HYPOTHESIS_ERRORS = (NotFiniteLength, SupportNotOrigin, NotOriginPreserving, EvenN)


@dataclass
class JobFile:
    """Parsed job or row file."""

    field: FieldSpec
    ring: Ring
    maps: dict[str, Poly]
    relations: tuple[Poly, ...]
    row: Optional[tuple[Poly, ...]]


def _parse_field(text: str) -> FieldSpec:
    text = text.strip()
    if text == "Q":
        return FieldSpec.rationals()
    if text.startswith("F"):
        try:
            return FieldSpec.prime_field(int(text[1:]))
        except ValueError:
            pass
    raise JobFileError(f"bad field {text!r} (expected Q or F<p>)")


def parse_job_file(path: str) -> JobFile:
    field = None
    ring = None
    maps: dict[str, Poly] = {}
    relations: list[Poly] = []
    row = None
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                key, _, value = line.partition("=")
                key = key.strip()
                value = value.strip()
                if not _ or not value:
                    raise JobFileError("expected 'key = value'")
                if key == "field":
                    field = _parse_field(value)
                elif key == "vars":
                    if field is None:
                        raise JobFileError("'field' must precede 'vars'")
                    names = [v.strip() for v in value.split(",")]
                    ring = Ring(tuple(names), field)
                elif key.startswith("map "):
                    if ring is None:
                        raise JobFileError("'vars' must precede 'map'")
                    var = key[4:].strip()
                    if var not in ring.variables:
                        raise JobFileError(f"map for undeclared variable {var!r}")
                    if var in maps:
                        raise JobFileError(f"duplicate map for {var!r}")
                    maps[var] = parse_poly(value, ring)
                elif key == "rel":
                    if ring is None:
                        raise JobFileError("'vars' must precede 'rel'")
                    relations.append(parse_poly(value, ring))
                elif key == "row":
                    if ring is None:
                        raise JobFileError("'vars' must precede 'row'")
                    if row is not None:
                        raise JobFileError("duplicate 'row' line")
                    row = tuple(
                        parse_poly(part, ring) for part in value.split(",")
                    )
                else:
                    raise JobFileError(f"unknown key {key!r}")
            except (JobFileError, ParseError) as exc:
                raise JobFileError(f"{path}:{lineno}: {exc}") from None
    if field is None or ring is None:
        raise JobFileError(f"{path}: missing 'field' or 'vars'")
    return JobFile(
        field=field, ring=ring, maps=maps, relations=tuple(relations), row=row
    )


def _endo_from_job(job: JobFile, path: str) -> Endo:
    missing = [v for v in job.ring.variables if v not in job.maps]
    if missing:
        raise JobFileError(f"{path}: missing map for {', '.join(missing)}")
    images = tuple(job.maps[v] for v in job.ring.variables)
    return Endo(ring=job.ring, images=images)


def _row_from_job(job: JobFile, path: str) -> UnimodularRow:
    if job.row is None:
        raise JobFileError(f"{path}: missing 'row' line")
    alg = AlgebraPresentation(ring=job.ring, relations=job.relations)
    return UnimodularRow(algebra=alg, entries=job.row)


# -- output helpers ---------------------------------------------------------


def _print_json(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _degree_summary(report: DegreeReport) -> str:
    cls = witt_class_display(report.diag)
    status = "zero" if report.is_zero else "nonzero"
    return (
        f"length {report.length}; degree = {cls}; {status} in W({report.field})"
    )


def _print_degree_verbose(report: DegreeReport) -> None:
    inv = report.invariants
    print(f"standard monomials: {', '.join(report.gram.basis_labels)}")
    print("gram matrix:")
    fmt = report.field.format_scalar
    for row in report.gram.matrix:
        print("  [" + ", ".join(fmt(x) for x in row) + "]")
    print(f"diagonal form: {report.diag}")
    sig = "" if inv.signature is None else f"; signature {inv.signature}"
    print(
        f"rank {inv.rank}{sig}; signed discriminant "
        f"{fmt(inv.signed_discriminant)}"
    )
    if inv.hasse:
        print("hasse: " + ", ".join(f"{v} {s:+d}" for v, s in inv.hasse.items()))


def _nori_lines(report: DegreeReport) -> list[str]:
    n = report.n
    nm1 = math.factorial(max(n - 1, 1))
    nf = math.factorial(n)
    return [
        f"(n-1)! = {nm1} divides length: "
        + ("yes" if report.divisible_by_nminus1_factorial else "no"),
        f"n! = {nf} divides length: "
        + ("yes" if report.divisible_by_n_factorial else "no"),
    ]


# -- subcommands -------------------------------------------------------------


def _cmd_degree(args) -> int:
    job = parse_job_file(args.file)
    endo = _endo_from_job(job, args.file)
    report = degree_of(endo, by_name(args.order))
    if args.json:
        _print_json(report.to_json_dict())
    else:
        print(_degree_summary(report))
        if args.verbose:
            _print_degree_verbose(report)
    return 0


def _cmd_nori_check(args) -> int:
    job = parse_job_file(args.file)
    endo = _endo_from_job(job, args.file)
    report, verdict = obstruction_report(endo, by_name(args.order))
    if args.json:
        data = report.to_json_dict()
        data["verdict"] = verdict
        _print_json(data)
    else:
        print(_degree_summary(report))
        for line in _nori_lines(report):
            print(line)
        print(f"verdict: {verdict}")
    return 0


def _parse_cli_field(text: str) -> FieldSpec:
    try:
        return _parse_field(text)
    except JobFileError as exc:
        raise AlgebraError(str(exc)) from None


def _cmd_witt_invariants(args) -> int:
    field = _parse_cli_field(args.field)
    d = parse_diag(field, args.entries)
    inv = invariants(d)
    if args.json:
        fmt = field.format_scalar
        _print_json(
            {
                "schema": 1,
                "field": str(field),
                "entries": [fmt(e) for e in d.entries],
                "rank": inv.rank,
                "signature": inv.signature,
                "signed_discriminant": fmt(inv.signed_discriminant),
                "hasse": dict(inv.hasse),
            }
        )
    else:
        fmt = field.format_scalar
        sig = "" if inv.signature is None else f"; signature {inv.signature}"
        print(
            f"rank {inv.rank}{sig}; signed discriminant "
            f"{fmt(inv.signed_discriminant)}"
        )
        if inv.hasse:
            print(
                "hasse: " + ", ".join(f"{v} {s:+d}" for v, s in inv.hasse.items())
            )
    return 0


def _cmd_witt_is_zero(args) -> int:
    field = _parse_cli_field(args.field)
    d = parse_diag(field, args.entries)
    zero = is_witt_zero(d)
    if args.json:
        fmt = field.format_scalar
        _print_json(
            {
                "schema": 1,
                "field": str(field),
                "entries": [fmt(e) for e in d.entries],
                "is_zero": zero,
            }
        )
    else:
        print("zero (hyperbolic)" if zero else f"nonzero in W({field})")
    return 0


def _cmd_koszul_verify(args) -> int:
    n = args.n
    if n < 1:
        raise AlgebraError("--n must be at least 1")
    dd = generic_duality(FieldSpec.rationals(), n)
    resolved = resolve_dual_signs(dd)
    chain_ok = verify_chain_map(dd)
    sym_ok = verify_symmetry(dd)
    unsigned_ok = verify_chain_map(dd, dd.wedge_maps)
    dsign = -1 if dual_differential_sign(1, n) else 1
    ssign = symmetry_sign(n)
    if args.json:
        _print_json(
            {
                "schema": 1,
                "n": n,
                "dual_differential_sign": dsign,
                "double_dual_sign": ssign,
                "squares": {
                    str(i + 1): s == dual_differential_sign(i + 1, n)
                    for i, s in enumerate(resolved)
                },
                "chain_map": chain_ok,
                "symmetry": sym_ok,
                "unsigned_family_chain_map": unsigned_ok,
            }
        )
        return 0
    print(
        f"n = {n}; resolved convention: dual differential = "
        f"{dsign:+d} * transpose(d_(n-i+1)); "
        f"symmetry transpose sign = {ssign:+d}"
    )
    for i, s in enumerate(resolved, 1):
        ok = s == dual_differential_sign(i, n)
        print(f"square i={i}: {'pass' if ok else 'FAIL'}")
    print(f"symmetry: {'pass' if sym_ok else 'FAIL'}")
    print(
        "unsigned family chain map: "
        + ("unexpectedly passes" if unsigned_ok else "fails (expected)")
    )
    return 0 if chain_ok and sym_ok and not unsigned_ok else 1


def _describe_row(row: UnimodularRow) -> list[str]:
    ring = row.algebra.ring
    lines = [f"row: ({', '.join(str(p) for p in row.entries)})"]
    if row.algebra.relations:
        rels = "; ".join(str(r) for r in row.algebra.relations)
        lines.append(f"relations: {rels}")
    lines.append(f"ring: {', '.join(ring.variables)} over {ring.field}")
    return lines


def _report_row(row: UnimodularRow, args, label: str = "row") -> int:
    cert = is_unimodular(row, by_name(args.order))
    if args.json:
        data = {
            "schema": 1,
            "field": str(row.algebra.ring.field),
            label: [str(p) for p in row.entries],
            "relations": [str(r) for r in row.algebra.relations],
            "unimodular": cert is not None,
        }
        if cert is not None:
            data["certificate"] = [str(c) for c in cert]
        _print_json(data)
        return 0
    for line in _describe_row(row):
        print(line)
    if cert is None:
        print("unimodular: no")
    else:
        print("unimodular: yes")
        print(f"certificate: ({', '.join(str(c) for c in cert)})")
    return 0


def _cmd_row_check(args) -> int:
    job = parse_job_file(args.file)
    row = _row_from_job(job, args.file)
    return _report_row(row, args)


def _cmd_row_compose(args) -> int:
    rowjob = parse_job_file(args.rowfile)
    row = _row_from_job(rowjob, args.rowfile)
    endojob = parse_job_file(args.endofile)
    endo = _endo_from_job(endojob, args.endofile)
    if endo.field != row.algebra.ring.field:
        raise AlgebraError("row and endomorphism use different fields")
    composed = compose_with_endo(row, endo)
    return _report_row(composed, args, label="row")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wittdeg",
        description=(
            "Exact Witt-group degrees of endomorphisms of punctured affine "
            "space and unimodular-row obstructions"
        ),
    )
    parser.add_argument("--json", action="store_true", help="emit JSON output")
    parser.add_argument(
        "--order",
        choices=("grevlex", "lex"),
        default="grevlex",
        help="monomial order for Groebner computations",
    )
    parser.add_argument(
        "--verbose", action="store_true", help="print intermediate data"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("degree", help="degree of the endomorphism in a job file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser(
        "nori-check", help="degree plus factorial-divisibility verdicts"
    )
    p.add_argument("file")
    p.set_defaults(func=_cmd_nori_check)

    witt = sub.add_parser("witt", help="diagonal-form utilities")
    wsub = witt.add_subparsers(dest="witt_command", required=True)
    p = wsub.add_parser("invariants", help="rank/signature/discriminant/hasse")
    p.add_argument("entries", help='comma-separated entries, e.g. "1,1,-2"')
    p.add_argument("--field", default="Q", help="Q (default) or F<p>")
    p.set_defaults(func=_cmd_witt_invariants)
    p = wsub.add_parser("is-zero", help="decide triviality in the Witt group")
    p.add_argument("entries")
    p.add_argument("--field", default="Q", help="Q (default) or F<p>")
    p.set_defaults(func=_cmd_witt_is_zero)

    koszul = sub.add_parser("koszul", help="duality sign verification")
    ksub = koszul.add_subparsers(dest="koszul_command", required=True)
    p = ksub.add_parser("verify", help="check the sign family symbolically")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_koszul_verify)

    row = sub.add_parser("row", help="unimodular-row utilities")
    rsub = row.add_subparsers(dest="row_command", required=True)
    p = rsub.add_parser("check", help="certify unimodularity of a row file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_row_check)
    p = rsub.add_parser("compose", help="compose a row with an endomorphism")
    p.add_argument("rowfile")
    p.add_argument("endofile")
    p.set_defaults(func=_cmd_row_compose)

    return parser


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HYPOTHESIS_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (AlgebraError, OSError) as exc:
        name = type(exc).__name__ if isinstance(exc, AlgebraError) else "IOError"
        print(f"error: {name}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
