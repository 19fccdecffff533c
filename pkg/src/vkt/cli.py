"""Command line interface: ``vkt report | tabulate | twin | project | group | hom``.

Exit codes: 0 success, 1 parse error, 2 homomorphism search budget exceeded,
3 precondition violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from collections import OrderedDict
from typing import Dict, List, Optional, Sequence

from .alexander import delta, delta_interpretation, genus_lower_bound, gks, hbar, knot_determinant, mod_p_obstruction
from .diagram import DiagramError, GaussCodeError, GaussDiagram, carter_genus, parse_gauss, read_table, to_code, vertical_mirror
from .parity import PreconditionError, chord_indices, is_numberable, projection_trace, stable_project
from .presentations import BudgetExceeded, PresentationError, budget_from_env, group, hom_count, parse_presentation

EXIT_OK, EXIT_PARSE, EXIT_BUDGET, EXIT_PRECONDITION = 0, 1, 2, 3
DEFAULT_MODS = (0, 2, 3, 4, 5)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _budget(args) -> int:
    return args.budget if args.budget is not None else budget_from_env()


def _mods(args) -> List[int]:
    mods = args.mod if args.mod else list(DEFAULT_MODS)
    for p in mods:
        if p < 0 or p == 1:
            raise CliError(f"invalid modulus {p}: use 0 or p >= 2", EXIT_PRECONDITION)
    return mods


def _load_inputs(source: str) -> List[tuple]:
    """A table file gives several records; anything else is one Gauss code."""
    if source and os.path.isfile(source):
        records, errors = read_table(source)
        if errors:
            e = errors[0]
            raise CliError(f"{source}:{e.line}: {e.message}", EXIT_PARSE)
        return [(r.name, r.code) for r in records]
    try:
        parse_gauss(source)
    except GaussCodeError as exc:
        raise CliError(f"line 1: {exc}", EXIT_PARSE) from None
    return [("input", source)]


# ---------------------------------------------------------------------------
# records


def knot_record(name: str, d: GaussDiagram, mods: Sequence[int], degrees: Sequence[int], budget: int) -> "OrderedDict":
    """All invariants of one diagram, in a fixed field order."""
    rec: "OrderedDict[str, object]" = OrderedDict()
    knot = d.n_components == 1
    rec["name"] = name
    rec["code"] = to_code(d)
    rec["crossings"] = d.n_chords
    rec["components"] = d.n_components
    rec["genus"] = carter_genus(d)
    rec["indices"] = OrderedDict((str(k), v) for k, v in chord_indices(d).items()) if knot else None
    rec["numberable"] = OrderedDict((str(p), is_numberable(d, p)) for p in mods) if knot else None
    rec["level"] = OrderedDict((str(p), stable_project(d, p)[1]) for p in mods) if knot else None
    h = hbar(d)
    rec["hbar"] = str(h)
    rec["hbar_is_zero"] = not h.terms
    rec["gks"] = str(gks(d))
    dl = delta(d)
    rec["delta"] = str(dl)
    rec["delta_note"] = delta_interpretation(d)
    rec["det"] = knot_determinant(d)
    rec["genus_lower_bound"] = str(genus_lower_bound(d))
    rec["mod_p"] = OrderedDict()
    for p in mods:
        if p >= 2:
            r = mod_p_obstruction(d, p)
            rec["mod_p"][str(p)] = OrderedDict(
                [("hbar_vanishes_at_zeta", r.hbar_vanishes_at_zeta), ("phi_divides_gks", r.phi_divides_gks)]
            )
    counts: "OrderedDict[str, object]" = OrderedDict()
    for which in ("G", "Gbar"):
        pres = group(d, which)
        counts[which] = OrderedDict((str(n), hom_count(pres, n, budget=budget)) for n in degrees)
    rec["hom_counts"] = counts
    return rec


def _render_text(rec: Dict) -> str:
    lines = []
    for k, v in rec.items():
        if isinstance(v, dict):
            inner = ", ".join(f"{a}: {json.dumps(b) if isinstance(b, dict) else _fmt(b)}" for a, b in v.items())
            lines.append(f"{k}: {{{inner}}}")
        else:
            lines.append(f"{k}: {_fmt(v)}")
    return "\n".join(lines)


def _fmt(v) -> str:
    if v is None:
        return "n/a"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v == "":
        return '""'
    return str(v)


# ---------------------------------------------------------------------------
# subcommands


def cmd_report(args, out) -> int:
    mods = _mods(args)
    degrees = list(range(3, args.target_sn + 1))
    recs = []
    for name, code in _load_inputs(args.source):
        recs.append(knot_record(name, parse_gauss(code), mods, degrees, _budget(args)))
    if args.json:
        payload = recs[0] if len(recs) == 1 else recs
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("\n\n".join(_render_text(r) for r in recs) + "\n")
    return EXIT_OK


def _tabulate_row(item):
    name, code, mods = item
    d = parse_gauss(code)
    knot = d.n_components == 1
    numberable = [is_numberable(d, p) if knot else False for p in mods]
    level = stable_project(d, mods[0])[1] if knot else None
    dl = delta(d)
    return OrderedDict(
        [
            ("name", name),
            ("crossings", d.n_chords),
            ("genus", carter_genus(d)),
            ("numberable", numberable),
            ("level", level),
            ("delta", str(dl)),
            ("det", knot_determinant(d)),
            ("hbar_is_zero", not hbar(d).terms),
        ]
    )


def cmd_tabulate(args, out, err) -> int:
    mods = _mods(args)
    records, errors = read_table(args.table) if os.path.isfile(args.table) else (None, None)
    if records is None:
        raise CliError(f"no such table file: {args.table}", EXIT_PARSE)
    for e in errors:
        err.write(f"{args.table}:{e.line}: {e.message}\n")
    items = []
    for r in records:
        if args.max_crossings is not None and parse_gauss(r.code).n_chords > args.max_crossings:
            continue
        items.append((r.name, r.code, mods))
    if args.jobs and args.jobs > 1:
        from multiprocessing import Pool

        with Pool(args.jobs) as pool:
            rows = list(pool.imap(_tabulate_row, items, chunksize=64))
    else:
        rows = [_tabulate_row(it) for it in items]
    counts: "OrderedDict[int, List[int]]" = OrderedDict()
    for row in sorted(rows, key=lambda r: r["crossings"]):
        c = counts.setdefault(row["crossings"], [0] * len(mods))
        for k, flag in enumerate(row["numberable"]):
            c[k] += int(flag)
    totals = [sum(c[k] for c in counts.values()) for k in range(len(mods))]
    labels = ["AC" if p == 0 else f"mod{p}" for p in mods]
    if args.json:
        payload = OrderedDict(
            [
                ("moduli", mods),
                ("counts", OrderedDict((str(n), OrderedDict(zip(labels, c))) for n, c in counts.items())),
                ("totals", OrderedDict(zip(labels, totals))),
                ("records", rows),
            ]
        )
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        out.write("# crossings " + " ".join(labels) + "\n")
        for n, c in counts.items():
            out.write(f"# {n} " + " ".join(str(x) for x in c) + "\n")
        out.write("# total " + " ".join(str(x) for x in totals) + "\n")
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["name", "crossings", "genus"] + [f"numberable_{l}" for l in labels] + ["level", "delta", "det", "hbar_is_zero"])
        for row in rows:
            w.writerow(
                [row["name"], row["crossings"], row["genus"]]
                + [int(x) for x in row["numberable"]]
                + ["" if row["level"] is None else row["level"], row["delta"], row["det"], int(row["hbar_is_zero"])]
            )
    return EXIT_PARSE if errors else EXIT_OK


def _single_knot(source: str) -> GaussDiagram:
    inputs = _load_inputs(source)
    if len(inputs) != 1:
        raise CliError("expected a single diagram", EXIT_PRECONDITION)
    d = parse_gauss(inputs[0][1])
    if d.n_components != 1:
        raise CliError("defined for knot diagrams (one circle) only", EXIT_PRECONDITION)
    return d


def cmd_twin(args, out) -> int:
    d = _single_knot(args.source)
    m = vertical_mirror(d)
    budget = _budget(args)
    rows = []
    differ = False
    for n in range(3, args.target_sn + 1):
        a = hom_count(group(d, "G"), n, budget=budget)
        b = hom_count(group(m, "G"), n, budget=budget)
        rows.append(OrderedDict([("degree", n), ("G", a), ("G_mirror", b)]))
        differ = differ or a != b
    if args.json:
        out.write(json.dumps(OrderedDict([("code", to_code(d)), ("counts", rows), ("differ", differ)]), indent=2) + "\n")
    else:
        for r in rows:
            out.write(f"S{r['degree']}: G={r['G']} G*={r['G_mirror']}\n")
        out.write("twin property violated\n" if differ else "counts agree\n")
    return EXIT_OK


def cmd_project(args, out) -> int:
    d = _single_knot(args.source)
    p = args.mod[0] if args.mod else 0
    if p < 0 or p == 1:
        raise CliError(f"invalid modulus {p}", EXIT_PRECONDITION)
    trace = projection_trace(d, p)
    codes = [to_code(x) for x in trace]
    level = len(trace) - 1
    if args.json:
        body = OrderedDict([("p", p), ("level", level), ("final", codes[-1])])
        if args.trace:
            body["trace"] = codes
        out.write(json.dumps(body, indent=2) + "\n")
    else:
        if args.trace:
            for k, c in enumerate(codes):
                out.write(f"P^{k}: {c if c else '(unknot)'}\n")
        else:
            out.write(f"final: {codes[-1] if codes[-1] else '(unknot)'}\n")
        out.write(f"level: {level}\n")
    return EXIT_OK


def cmd_group(args, out) -> int:
    inputs = _load_inputs(args.source)
    if len(inputs) != 1:
        raise CliError("expected a single diagram", EXIT_PRECONDITION)
    p = group(parse_gauss(inputs[0][1]), args.which)
    if args.simplify:
        from .presentations import tietze_simplify

        p = tietze_simplify(p)
    out.write(p.to_text())
    return EXIT_OK


def cmd_hom(args, out) -> int:
    try:
        with open(args.presentation) as fh:
            pres = parse_presentation(fh.read())
    except OSError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    except PresentationError as exc:
        raise CliError(f"{args.presentation}: {exc}", EXIT_PARSE) from None
    budget = _budget(args)
    for n in range(3, args.target_sn + 1) if args.degree is None else [args.degree]:
        out.write(f"S{n}: {hom_count(pres, n, budget=budget)}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vkt", description="Invariants of virtual knots given as Gauss codes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, mods=True, sn=True):
        if mods:
            sp.add_argument("--mod", type=int, action="append", metavar="P", help="modulus (repeatable; 0 = integers)")
        if sn:
            sp.add_argument("--target-sn", type=int, default=4, metavar="N", help="largest symmetric group degree")
        sp.add_argument("--json", action="store_true", help="JSON output")
        sp.add_argument("--budget", type=int, default=None, help="homomorphism search node budget")

    sp = sub.add_parser("report", help="full invariant report for a code or table file")
    sp.add_argument("source", nargs="?", default="", help="Gauss code (quote it) or table file")
    common(sp)
    sp = sub.add_parser("tabulate", help="count numberable diagrams per crossing number")
    sp.add_argument("table", help="table file of '<name> <code>' lines")
    sp.add_argument("--max-crossings", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(sp, sn=False)
    sp = sub.add_parser("twin", help="compare hom counts of G for a diagram and its vertical mirror")
    sp.add_argument("source", nargs="?", default="")
    common(sp, mods=False)
    sp = sub.add_parser("project", help="iterate the parity projection")
    sp.add_argument("source", nargs="?", default="")
    sp.add_argument("--trace", action="store_true", help="print every intermediate diagram")
    common(sp, sn=False)
    sp = sub.add_parser("group", help="print a group presentation of a diagram")
    sp.add_argument("source", nargs="?", default="")
    sp.add_argument("--which", default="G", choices=["G", "Gbar", "EG", "WG", "VG", "QG"])
    sp.add_argument("--simplify", action="store_true")
    sp = sub.add_parser("hom", help="count homomorphisms of a presentation file into S_n")
    sp.add_argument("presentation")
    sp.add_argument("--degree", type=int, default=None)
    common(sp, mods=False)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "report":
            return cmd_report(args, out)
        if args.command == "tabulate":
            return cmd_tabulate(args, out, err)
        if args.command == "twin":
            return cmd_twin(args, out)
        if args.command == "project":
            return cmd_project(args, out)
        if args.command == "group":
            return cmd_group(args, out)
        if args.command == "hom":
            return cmd_hom(args, out)
    except CliError as exc:
        err.write(f"vkt: {exc}\n")
        return exc.code
    except GaussCodeError as exc:
        err.write(f"vkt: parse error: {exc}\n")
        return EXIT_PARSE
    except BudgetExceeded as exc:
        err.write(f"vkt: {exc}\n")
        return EXIT_BUDGET
    except (PreconditionError, DiagramError, PresentationError) as exc:
        err.write(f"vkt: {exc}\n")
        return EXIT_PRECONDITION
    return EXIT_OK


def run(argv: Optional[Sequence[str]] = None) -> "tuple[int, str, str]":
    """Run in-process and capture output; convenient for tests."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
