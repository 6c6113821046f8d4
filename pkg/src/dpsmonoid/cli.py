"""``dps`` command-line front end.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 budget
exceeded. With ``--json`` every result goes to stdout as one JSON document
(``enumerate`` emits JSON lines) and errors go to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, TextIO

from .core_maps import parse_map
from .errors import DPSError, LimitExceeded
from .generation import DEFAULT_SUBSET_BUDGET, find_generating_set
from .green import MODE_LIMITS, green_classify
from .monoid import dps_count, enumerate_dps
from .presentations import (
    check_relations,
    dps_presentation,
    format_presentation,
    parse_presentation,
    standard_assignment,
    symmetric_inverse_presentation,
    tietze_replay,
)
from .quotient import DEFAULT_MAX_CLASSES, enumerate_quotient, verify_presentation_defines
from .star_metric import is_dps_member, is_partial_isometry

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _default_max_classes() -> int:
    raw = os.environ.get("DPS_MAX_CLASSES")
    if raw is None:
        return DEFAULT_MAX_CLASSES
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"DPS_MAX_CLASSES must be an integer, got {raw!r}") from None
    if value < 1:
        raise UsageError("DPS_MAX_CLASSES must be positive")
    return value


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed-order", choices=["canonical"], default=argparse.SUPPRESS,
                        help="element order for enumerations (only 'canonical')")

    parser = _Parser(prog="dps", parents=[common],
                     description="Partial isometries of the star graph S_n.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text, description=help_text)

    p = add("count", "cardinality of DPS_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--table", action="store_true", help="print counts for 1..n")

    p = add("enumerate", "list the elements of DPS_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["jsonl", "text"], default="jsonl")

    p = add("member", "test whether a map lies in DPS_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--map", required=True, help='JSON array, e.g. "[1,0,null]"')

    p = add("green", "Green's relations on DPS_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["characterized", "ideal"], default="characterized")

    p = add("rank", "search for a generating set of a given size")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prune", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_SUBSET_BUDGET,
                   help="largest number of subsets an unpruned search may try")

    p = add("presentation", "print the presentation of DPS_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--export", metavar="FILE")

    p = add("check-relations", "evaluate every relation under the standard generators")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--presentation", metavar="FILE", help="read relations from FILE")
    p.add_argument("--swap", nargs=2, metavar=("X", "Y"),
                   help="exchange the images of two letters first")

    p = add("verify-presentation", "enumerate the presented monoid and compare with DPS_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-classes", type=int, default=None)
    p.add_argument("--dump-table", metavar="FILE")
    p.add_argument("--presentation", metavar="FILE", help="read relations from FILE")

    p = add("tietze-replay", "turn one presentation of I_m into another by Tietze steps")
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--max-classes", type=int, default=None)
    return parser


def _read_presentation(path):
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read())


# ---------------------------------------------------------------- commands


def _cmd_count(args, out):
    ns = range(1, args.n + 1) if args.table else [args.n]
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    rows = [(n, dps_count(n)) for n in ns]
    if args.json:
        if args.table:
            out.write(_dump({"table": [{"n": n, "count": c} for n, c in rows]}) + "\n")
        else:
            out.write(_dump({"n": args.n, "count": rows[0][1]}) + "\n")
    elif args.table:
        width = len(str(rows[-1][1]))
        for n, c in rows:
            out.write(f"{n:>3}  {c:>{width}}\n")
    else:
        out.write(f"{rows[0][1]}\n")
    return EXIT_OK


def _cmd_enumerate(args, out):
    elements = enumerate_dps(args.n)
    for f in elements:
        if args.json or args.format == "jsonl":
            out.write(f.to_json() + "\n")
        else:
            out.write(" ".join("-" if y is None else str(y) for y in f.images) + "\n")
    return EXIT_OK


def _cmd_member(args, out):
    f = parse_map(args.map, injective=False)
    if f.degree != args.n:
        raise UsageError(f"map has degree {f.degree}, expected {args.n}")
    member = is_dps_member(f)
    if args.json:
        out.write(_dump({"n": args.n, "map": f.to_list(), "member": member,
                         "partial_isometry": is_partial_isometry(f)}) + "\n")
    else:
        out.write(("true" if member else "false") + "\n")
    return EXIT_OK


def _cmd_green(args, out):
    mode = "ideal_bruteforce" if args.mode == "ideal" else args.mode
    if args.n > MODE_LIMITS[mode]:
        raise LimitExceeded(f"{args.mode} mode supports n <= {MODE_LIMITS[mode]}", args.n)
    gc = green_classify(args.n, mode)
    if args.json:
        out.write(_dump(gc.to_dict()) + "\n")
        return EXIT_OK
    out.write(f"DPS_{args.n}: {len(gc.elements)} elements ({gc.mode})\n")
    for rel in ("L", "R", "H", "D", "J"):
        sizes = gc.class_sizes(rel)
        out.write(f"{rel}: {len(sizes)} classes, sizes {sorted(sizes, reverse=True)}\n")
    return EXIT_OK


def _cmd_rank(args, out):
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    res = find_generating_set(args.n, args.k, prune=args.prune, jobs=args.jobs,
                              budget=args.budget)
    if args.json:
        out.write(_dump({
            "n": args.n, "k": args.k, "pruned": res.pruned, "found": res.found,
            "witness": [f.to_list() for f in res.witness] if res.found else None,
            "examined": res.examined,
        }) + "\n")
        return EXIT_OK
    if res.found:
        out.write("FOUND " + " ".join(f.to_json() for f in res.witness) + "\n")
    else:
        out.write("NONE\n")
    out.write(f"examined {res.examined}\n")
    return EXIT_OK


def _cmd_presentation(args, out):
    p = dps_presentation(args.n)
    text = format_presentation(p)
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            fh.write(text)
    if args.json:
        out.write(_dump({"n": args.n, "alphabet": list(p.alphabet),
                         "relations": [str(r) for r in p.relations]}) + "\n")
    else:
        out.write(text)
    return EXIT_OK


def _cmd_check_relations(args, out):
    p = _read_presentation(args.presentation) if args.presentation else dps_presentation(args.n)
    a = standard_assignment(args.n)
    if args.swap:
        a = a.swapped(*args.swap)
    report = check_relations(p, a)
    if args.json:
        out.write(_dump({"n": args.n, **report.to_dict(), "ok": report.ok}) + "\n")
    else:
        for i, rel, lhs, rhs in report.failures:
            out.write(f"FAIL #{i} {rel}: {lhs.to_json()} != {rhs.to_json()}\n")
        out.write(f"{report.total - len(report.failures)}/{report.total} relations hold\n")
    return EXIT_OK if report.ok else EXIT_FAILED


def _cmd_verify(args, out):
    max_classes = args.max_classes if args.max_classes is not None else _default_max_classes()
    if max_classes < 1:
        raise UsageError("--max-classes must be positive")
    p = _read_presentation(args.presentation) if args.presentation else dps_presentation(args.n)
    verdict = verify_presentation_defines(args.n, max_classes, presentation=p)
    if args.dump_table and verdict.class_count is not None:
        table = enumerate_quotient(p, max_classes)
        with open(args.dump_table, "w", encoding="utf-8") as fh:
            fh.write(table.to_json() + "\n")
    if args.json:
        out.write(_dump(verdict.to_dict()) + "\n")
    else:
        out.write(str(verdict) + "\n")
    return EXIT_OK if verdict.defined else EXIT_FAILED


def _cmd_tietze(args, out):
    max_classes = args.max_classes if args.max_classes is not None else _default_max_classes()
    history = tietze_replay(args.m, max_classes)
    final = history[-1][1].canonical()
    target = symmetric_inverse_presentation(args.m, "b1").canonical()
    matches = final == target
    start_classes = enumerate_quotient(history[0][1], max_classes).class_count
    end_classes = enumerate_quotient(history[-1][1], max_classes).class_count
    if args.json:
        out.write(_dump({
            "m": args.m,
            "steps": [{"label": label, "alphabet": list(p.alphabet),
                       "relations": [str(r) for r in p.relations]} for label, p in history],
            "matches_b1": matches,
            "classes": [start_classes, end_classes],
        }) + "\n")
    else:
        for label, p in history:
            out.write(f"== {label}\n")
            out.write(format_presentation(p))
        out.write(f"canonical form equals variant b1: {'yes' if matches else 'no'}\n")
        out.write(f"classes: {start_classes} -> {end_classes}\n")
    return EXIT_OK if matches and start_classes == end_classes else EXIT_FAILED


COMMANDS = {
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "member": _cmd_member,
    "green": _cmd_green,
    "rank": _cmd_rank,
    "presentation": _cmd_presentation,
    "check-relations": _cmd_check_relations,
    "verify-presentation": _cmd_verify,
    "tietze-replay": _cmd_tietze,
}


def _report_error(err: TextIO, as_json: bool, kind: str, message: str, code: int, **extra):
    if as_json:
        err.write(_dump({"error": kind, "message": message, "exit": code, **extra}) + "\n")
    else:
        err.write(f"dps: {message}\n")
    return code


def run(argv: Optional[Sequence[str]] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    """Execute one command line and return its exit status."""
    argv = list(sys.argv[1:] if argv is None else argv)
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    as_json = "--json" in argv
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        args.json = getattr(args, "json", False)
        args.seed_order = getattr(args, "seed_order", "canonical")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        if not as_json:
            parser.print_usage(err)
        return _report_error(err, as_json, "usage", str(exc), EXIT_USAGE)
    except LimitExceeded as exc:
        return _report_error(err, as_json, type(exc).__name__, str(exc), EXIT_BUDGET,
                             count=exc.count)
    except (DPSError, ValueError, OSError) as exc:
        return _report_error(err, as_json, type(exc).__name__, str(exc), EXIT_USAGE)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
