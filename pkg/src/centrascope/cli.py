"""Command-line front end: enum, analyze, table1, conjectures, classify."""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction

from . import experiments as ex
from .centrality import KINDS, all_centralities
from .discriminance import discriminance_record
from .enumerate import enumerate_connected, read_graph6_file, write_graph6_file
from .graph import Graph6Error, canonical_graph6, is_connected, parse_graph6

log = logging.getLogger("centrascope")


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"5..8"``, ``"5-8"``, ``"6"`` or ``"5,7"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        if "-" in text:
            lo, hi = text.split("-")
            return list(range(int(lo), int(hi) + 1))
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad node range {text!r}") from None


def _fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v) if v.denominator == 1 else f"{v} ({float(v):.6g})"
    if isinstance(v, float):
        return f"{v:.12g}"
    return str(v)


def _output_format(args) -> str:
    if args.format:
        return args.format
    return "csv" if args.output else "text"


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enum(args) -> int:
    stream = enumerate_connected(args.n, args.workers)
    if args.output:
        count = write_graph6_file(stream, args.output)
    else:
        count = 0
        for g in stream:
            sys.stdout.write(canonical_graph6(g) + "\n")
            count += 1
    log.info("n=%d: %d connected graphs", args.n, count)
    return 0


def cmd_analyze(args) -> int:
    g = parse_graph6(args.graph6)
    if not is_connected(g):
        raise UsageError("analyze needs a connected graph")
    lines = [f"graph6 {args.graph6}  canonical {canonical_graph6(g)}  n={g.n} m={g.edge_count}"]
    name = ex.identify(args.graph6)
    if name:
        lines.append(f"recognised as {name}")
    if g.n > 1:
        vectors = all_centralities(g)
        for kind in KINDS:
            values = ", ".join(_fmt_value(v) for v in vectors[kind].values)
            lines.append(f"{kind:>12}: [{values}]")
        lines.append("betweenness counts ordered pairs; halve for the unordered convention")
    record = discriminance_record(g)
    p = record.profile
    lines.append("structure: " + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in p.flags().items()))
    lines.append("orbits: " + " | ".join(" ".join(map(str, b)) for b in p.orbits))
    lines.append("zero spread: " + " ".join(
        f"{k}={'yes' if record.zero_flags[k] else 'no'}" for k in KINDS))
    lines.append(f"subgraph exact test (walk diagonals): {'yes' if record.subgraph_exact else 'no'}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _sweeps(n_range, workers):
    out = {}
    for n in n_range:
        log.info("sweeping n=%d", n)
        out[n] = ex.sweep(n, workers)
        log.info("n=%d: %d graphs", n, len(out[n].records))
    return out


def cmd_table1(args) -> int:
    report = ex.table1(args.range, args.workers, _sweeps(args.range, args.workers))
    _emit(args, ex.render(report, _output_format(args)))
    for note in report.notes:
        log.info("%s", note)
    if report.mismatches:
        log.warning("%d cell(s) differ from the published table", len(report.mismatches))
        if args.strict:
            return 1
    return 0


def _conjecture_output(args, reports) -> int:
    fmt = _output_format(args)
    if fmt == "text":
        _emit(args, "".join(ex.render_text(r) for r in reports))
    elif fmt == "csv":
        chunks = [ex.render(r, "csv") for r in reports]
        body = chunks[0] + "".join(c.split("\n", 1)[1] for c in chunks[1:])
        _emit(args, body)
    else:
        import json
        _emit(args, json.dumps([ex._json_payload(r) for r in reports], indent=2) + "\n")
    return 1 if any(r.verdict == "violated" for r in reports) else 0


def cmd_conjectures(args) -> int:
    reports = []
    sweeps = _sweeps(args.range, args.workers)
    for which in args.which:
        for n in args.range:
            report = ex.CONJECTURES[which](sweeps[n])
            report.source = f"generated:n={n}"
            reports.append(report)
    return _conjecture_output(args, reports)


def cmd_classify(args) -> int:
    graphs = []
    for path in args.input:
        graphs.extend(read_graph6_file(path))
    log.info("read %d graphs", len(graphs))
    result = ex.sweep(graphs, args.workers)
    if args.conjecture:
        label = ",".join(args.input)
        reports = []
        for which in args.conjecture:
            report = ex.CONJECTURES[which](result)
            report.source = label
            reports.append(report)
        return _conjecture_output(args, reports)
    _emit(args, ex.render(result, _output_format(args)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centrascope",
        description="Discriminant power of node centrality measures on small connected graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, output=True):
        p.add_argument("-w", "--workers", type=int, default=None,
                       help="parallel worker processes (default: $CENTRASCOPE_WORKERS or 1)")
        if output:
            p.add_argument("-o", "--output", help="write to this file instead of stdout")
            p.add_argument("-f", "--format", choices=("text", "csv", "json"),
                           help="default: text on stdout, csv with --output")

    p = sub.add_parser("enum", help="list all connected graphs on n nodes as graph6")
    p.add_argument("-n", type=int, required=True, help="node count (1..10)")
    p.add_argument("-o", "--output", help="graph6 output file")
    p.add_argument("-w", "--workers", type=int, default=None)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("analyze", help="centralities, structure and zero-spread flags for one graph")
    p.add_argument("-g", "--graph6", required=True, help="graph6 string")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("table1", help="count zero-spread graphs per measure and compare with the published table")
    p.add_argument("-r", "--range", type=parse_range, default=list(range(5, 9)), help="node range, e.g. 5..8")
    p.add_argument("--strict", action="store_true", help="exit 1 when any cell differs from the published value")
    common(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("conjectures", help="check the conjectures on enumerated graphs")
    p.add_argument("--which", type=parse_range, default=[1, 2, 3], help="conjecture ids, e.g. 3 or 1,2,3")
    p.add_argument("-r", "--range", type=parse_range, default=list(range(5, 9)))
    common(p)
    p.set_defaults(func=cmd_conjectures)

    p = sub.add_parser("classify", help="records or conjecture checks for graphs read from graph6 files")
    p.add_argument("-i", "--input", action="append", required=True, help="graph6 file (repeatable)")
    p.add_argument("--conjecture", type=parse_range, help="conjecture ids to check")
    common(p)
    p.set_defaults(func=cmd_classify)
    return parser


def _validate(args):
    if args.command == "enum" and not 1 <= args.n <= 10:
        raise UsageError("-n must lie in 1..10")
    for attr in ("which", "conjecture"):
        ids = getattr(args, attr, None)
        if ids and any(i not in ex.CONJECTURES for i in ids):
            raise UsageError("conjecture ids are 1, 2 and 3")
    n_range = getattr(args, "range", None)
    if n_range and any(not 1 <= n <= 10 for n in n_range):
        raise UsageError("node range must lie within 1..10")
    if getattr(args, "workers", None) is None:
        args.workers = ex.default_workers()
    if args.workers < 1:
        raise UsageError("--workers must be positive")


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        _validate(args)
        return args.func(args)
    except (UsageError, Graph6Error, OSError, ValueError) as exc:
        print(f"centrascope: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
