"""Command line front end: reproducible enumeration, verification,
bijection, formula and sampling runs.

Every subcommand renders to JSON, an aligned text table, or CSV, and
writes to stdout or ``--out FILE``.  Outputs are deterministic byte for
byte given the same flags (timing goes to stderr), big integers print as
decimal strings and probabilities as ``p/q``.

Exit codes: 0 success / all checks pass; 1 a verification or round-trip
check failed (a witness is printed to stderr); 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Sequence

from .bijections import (
    symmetric_corner_decomposition,
    symmetric_to_type_b,
    type_b_to_symmetric,
)
from .chain import corner_distribution, expected_corners, total_corners
from .enumerator import census, enumerate_tableaux
from .errors import BijectionError, CornersError
from .families import Family
from .sampler import monte_carlo_corner_report, sample_permutation_tableaux, sample_trajectories
from .tableaux import SymmetricTreeLikeTableau, TypeBTableau, from_record, to_record, validate
from .verification import SUITES, run_suite

__all__ = ["main", "run_command"]

_FORMATS = ("table", "json", "csv")


def _fail_usage(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _table_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    cells = [[str(x) for x in row] for row in rows]
    widths = [len(h) for h in header]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip(),
        "  ".join("-" * w for w in widths),
    ]
    for row in cells:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def _render(fmt: str, payload: dict, header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    if fmt == "json":
        return _json_text(payload)
    if fmt == "csv":
        return _csv_text(header, rows)
    return _table_text(header, rows)


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _census_pairs(data: dict) -> list[tuple[str, str]]:
    pairs = [
        ("family", data["family"]),
        ("n", str(data["n"])),
        ("cardinality", data["cardinality"]),
        ("totalCorners", data["totalCorners"]),
    ]
    pairs += [(f"corners@{k}", v) for k, v in data["cornerCountsByK"].items()]
    pairs += [
        ("lastStepSouthCount", data["lastStepSouthCount"]),
        ("firstStepWestCount", data["firstStepWestCount"]),
    ]
    if "uHistogram" in data:
        pairs += [(f"u={u}", v) for u, v in data["uHistogram"].items()]
    if "totalOccupiedCorners" in data:
        pairs.append(("totalOccupiedCorners", data["totalOccupiedCorners"]))
    return pairs


def _cmd_census(args: argparse.Namespace) -> int:
    data = census(args.size, args.family, method=args.method).to_json_dict()
    _emit(_render(args.format, data, ("field", "value"), _census_pairs(data)), args.out)
    return 0


def _cmd_enumerate(args: argparse.Namespace) -> int:
    records = [to_record(t) for t in enumerate_tableaux(args.size, args.family)]
    payload = {
        "schema": "tableau-list/v1",
        "family": args.family.value,
        "n": args.size,
        "count": str(len(records)),
        "tableaux": records,
    }
    rows = [(i, r["path"], "|".join(r["rows"])) for i, r in enumerate(records)]
    _emit(_render(args.format, payload, ("index", "path", "rows"), rows), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    report = run_suite(args.suite, args.max_size)
    elapsed = time.perf_counter() - started
    header = ("identity", "parameters", "lhs", "rhs", "status")
    rows = [(r.identity, r.parameters, r.lhs, r.rhs, r.status) for r in report.rows]
    _emit(_render(args.format, report.to_json_dict(), header, rows), args.out)
    print(f"verify: suite={report.suite} rows={len(report.rows)} elapsed={elapsed:.2f}s", file=sys.stderr)
    if not report.passed:
        for row in report.failures():
            print(f"FAIL {row.identity} [{row.parameters}]: {row.lhs} != {row.rhs}", file=sys.stderr)
        return 1
    return 0


def _cmd_formula(args: argparse.Namespace) -> int:
    family, n = args.family, args.size
    if args.kind == "corners":
        values = corner_distribution(n, family, method=args.method)
        payload = {
            "schema": "formula/v1",
            "kind": "corners",
            "family": family.value,
            "n": n,
            "values": {str(k): _frac(v) for k, v in sorted(values.items())},
        }
        rows = [(k, _frac(v)) for k, v in sorted(values.items())]
        _emit(_render(args.format, payload, ("k", "probability"), rows), args.out)
        return 0
    if args.kind == "expected":
        value = _frac(expected_corners(n, family))
    else:  # total
        value = str(total_corners(n, family))
    payload = {
        "schema": "formula/v1",
        "kind": args.kind,
        "family": family.value,
        "n": n,
        "value": value,
    }
    _emit(_render(args.format, payload, ("field", "value"), [(args.kind, value)]), args.out)
    return 0


def _read_record(path: str | None):
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    t = from_record(json.loads(text))
    result = validate(t)
    if not result.ok:
        raise CornersError(f"input tableau is invalid: {result.violations[0].message}")
    return t


def _cmd_bijection(args: argparse.Namespace) -> int:
    if args.direction in ("fold", "unfold"):
        t = _read_record(args.infile)
        if args.direction == "fold":
            if not isinstance(t, SymmetricTreeLikeTableau):
                raise CornersError("fold expects a symmetric tree-like tableau record")
            image = symmetric_to_type_b(t)
        else:
            if not isinstance(t, TypeBTableau):
                raise CornersError("unfold expects a type-b tableau record")
            image = type_b_to_symmetric(t)
        _emit(_json_text(to_record(image)), args.out)
        return 0
    if args.direction == "roundtrip":
        if args.family not in (Family.TYPE_B, Family.SYMMETRIC):
            raise CornersError("roundtrip sweeps run on type-b or symmetric families")
        checked = 0
        for t in enumerate_tableaux(args.size, args.family):
            if args.family is Family.TYPE_B:
                back = symmetric_to_type_b(type_b_to_symmetric(t))
            else:
                back = type_b_to_symmetric(symmetric_to_type_b(t))
            checked += 1
            if back != t:
                print("round-trip failure, witness:", file=sys.stderr)
                print(json.dumps(to_record(t)), file=sys.stderr)
                return 1
        payload = {
            "schema": "bijection-roundtrip/v1",
            "family": args.family.value,
            "n": args.size,
            "checked": str(checked),
            "failures": "0",
        }
        rows = [("family", args.family.value), ("n", str(args.size)), ("checked", str(checked)), ("failures", "0")]
        _emit(_render(args.format, payload, ("field", "value"), rows), args.out)
        return 0
    # decompose
    d = symmetric_corner_decomposition(args.size)
    payload = {
        "schema": "corner-decomposition/v1",
        "n": d.index,
        "twiceB": str(d.twice_type_b),
        "southTerm": str(d.south_term),
        "westTerm": str(d.west_term),
        "total": str(d.total),
    }
    rows = [(k, payload[k]) for k in ("n", "twiceB", "southTerm", "westTerm", "total")]
    _emit(_render(args.format, payload, ("field", "value"), rows), args.out)
    return 0


def _cmd_sample(args: argparse.Namespace) -> int:
    if args.kind == "report":
        report = monte_carlo_corner_report(args.size, args.family, args.count, args.seed)
        payload = report.to_json_dict()
        header = ("name", "estimate", "standardError", "reference", "zScore")
        stats = [payload["meanCorners"], *payload["perPosition"]]
        rows = [(s["name"], s["estimate"], s["standardError"], s["reference"], s["zScore"]) for s in stats]
        _emit(_render(args.format, payload, header, rows), args.out)
        return 0
    if args.kind == "tableaux":
        if args.family is not Family.PERMUTATION:
            raise CornersError("tableau sampling is implemented for the permutation family")
        records = [to_record(t) for t in sample_permutation_tableaux(args.size, args.seed, args.count)]
        payload = {
            "schema": "tableau-list/v1",
            "family": args.family.value,
            "n": args.size,
            "seed": args.seed,
            "count": str(len(records)),
            "tableaux": records,
        }
        rows = [(i, r["path"], "|".join(r["rows"])) for i, r in enumerate(records)]
        _emit(_render(args.format, payload, ("index", "path", "rows"), rows), args.out)
        return 0
    trajectories = list(sample_trajectories(args.size, args.family, args.seed, args.count))
    payload = {
        "schema": "trajectory-list/v1",
        "family": args.family.value,
        "n": args.size,
        "seed": args.seed,
        "count": str(len(trajectories)),
        "trajectories": [
            {"steps": tr.steps, "uSequence": list(tr.u_sequence)} for tr in trajectories
        ],
    }
    rows = [(i, tr.steps, " ".join(map(str, tr.u_sequence))) for i, tr in enumerate(trajectories)]
    _emit(_render(args.format, payload, ("index", "steps", "uSequence"), rows), args.out)
    return 0


def _add_common(parser: argparse.ArgumentParser, *, family: Family | None = None, size: bool = True) -> None:
    parser.add_argument(
        "--family",
        type=Family.parse,
        default=family,
        required=family is None,
        help="tree-like, permutation, type-b or symmetric",
    )
    if size:
        parser.add_argument("--size", "-n", "--n", dest="size", type=int, required=True,
                            help="tableau size (family index for chain-level commands)")
    parser.add_argument("--format", choices=_FORMATS, default="table")
    parser.add_argument("--out", metavar="FILE", default=None, help="write output to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="corners",
        description="Exact corner statistics of tree-like, permutation, type-B and symmetric tableaux.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", help="enumerate one family at one size and aggregate statistics")
    _add_common(p)
    p.add_argument("--method", choices=("auto", "brute", "extension"), default="auto")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("enumerate", help="list every tableau of one family at one size")
    _add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="check closed-form identities against enumeration and DP")
    p.add_argument("--suite", choices=("all", *SUITES), default="all")
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--format", choices=_FORMATS, default="table")
    p.add_argument("--out", metavar="FILE", default=None)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("formula", help="evaluate closed forms: per-position law, expectation, total")
    p.add_argument("kind", choices=("corners", "expected", "total"))
    _add_common(p)
    p.add_argument("--method", choices=("formula", "dp"), default="formula")
    p.set_defaults(func=_cmd_formula)

    p = sub.add_parser("bijection", help="fold/unfold between symmetric and type-B tableaux")
    p.add_argument("direction", choices=("fold", "unfold", "roundtrip", "decompose"))
    p.add_argument("--family", type=Family.parse, default=None)
    p.add_argument("--size", "-n", "--n", dest="size", type=int, default=None)
    p.add_argument("--in", dest="infile", metavar="FILE", default=None,
                   help="tableau record JSON (defaults to stdin) for fold/unfold")
    p.add_argument("--format", choices=_FORMATS, default="table")
    p.add_argument("--out", metavar="FILE", default=None)
    p.set_defaults(func=_cmd_bijection)

    p = sub.add_parser("sample", help="seeded random tableaux, trajectories and Monte Carlo reports")
    _add_common(p, family=Family.PERMUTATION)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--kind", choices=("report", "tableaux", "trajectories"), default="report")
    p.set_defaults(func=_cmd_sample)

    return parser


def run_command(argv: Sequence[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "command", None) == "bijection":
        if args.direction in ("roundtrip", "decompose") and args.size is None:
            return _fail_usage(f"bijection {args.direction} needs --size")
        if args.direction == "roundtrip" and args.family is None:
            return _fail_usage("bijection roundtrip needs --family")
    try:
        return args.func(args)
    except BijectionError as exc:
        print(f"bijection failure: {exc}", file=sys.stderr)
        return 1
    except CornersError as exc:
        return _fail_usage(str(exc))
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        return _fail_usage(str(exc))


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))
