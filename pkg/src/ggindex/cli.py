"""Batch command line: compute indices, build families, enumerate, verify.

Four subcommands. `index` reads graph6 or edge-list files and prints index
values per graph. `family` builds one parametric graph from a spec string
like CH:9 or KB:3,4. `enumerate` streams an exhaustive class as graph6.
`verify` runs one of the extremal/closed-form checks and reports pass/fail.

Output discipline: everything the run computes goes to stdout in the chosen
format (text, json or csv); progress and timing go to stderr. JSON and CSV
render floats with 10 significant digits, text mode with 4 decimals. A given
command line produces byte-identical stdout across runs and worker counts;
nothing time- or host-dependent is serialized.

Exit status: 0 on success, 1 when a verification claim fails, 2 on any error
(bad arguments, malformed input, refused enumeration bounds).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Iterable, Optional, Sequence

from .enumeration import (
    Constraints,
    EnumerationBoundError,
    FeasibilityBounds,
    count_classes,
    enumerate_connected,
    enumerate_trees,
)
from .extremal import (
    DEFAULT_EPSILON,
    AsymptoticRow,
    CrossoverRow,
    ExtremalError,
    VerificationReport,
    asymptotic_check,
    crossover_pattern_ok,
    crossover_scan,
    probe_conjecture,
    residuals_positive_decreasing,
    verify_max_bipartite,
    verify_min_bipartite,
    verify_tree_extremals,
)
from .families import FamilyError, construct, ngg_closed, parse_spec
from .formats import FormatError, decode_graph6, parse_edge_list_block
from .graphs import Graph, GraphError, build_graph, to_graph6
from .indices import abc_index, edge_splits, gg_index, ngg_index

OK, VERIFY_FAILED, ERROR = 0, 1, 2

_INDEX_FNS = {"gg": gg_index, "ngg": ngg_index, "abc": abc_index}

VERIFY_CLAIMS = (
    "max-bipartite",
    "min-bipartite",
    "trees",
    "crossover",
    "asymptote",
    "conjecture1",
    "conjecture2",
    "conjecture3",
)

_DEFAULT_RANGES = {
    "max-bipartite": "4..10",
    "min-bipartite": "4..10",
    "trees": "4..12",
    "crossover": "5..99",
    "asymptote": "100,1000,10000,100000,1000000",
    "conjecture1": "5..8",
    "conjecture2": "6..10",
    "conjecture3": "6..12",
}


class CliError(ValueError):
    """Command-level usage problem not caught by argparse."""


# ------------------------------------------------------------- formatting ----

def _fmt(v: float, fmt: str) -> str:
    return format(v, ".4f") if fmt == "text" else format(v, ".10g")


def _json_scalar(v, out: list[str]) -> None:
    if v is None:
        out.append("null")
    elif v is True:
        out.append("true")
    elif v is False:
        out.append("false")
    elif isinstance(v, float):
        out.append(format(v, ".10g"))
    elif isinstance(v, int):
        out.append(str(v))
    elif isinstance(v, str):
        out.append(json.dumps(v))
    else:
        raise TypeError(f"unserializable value {v!r}")


def _json_emit(obj, out: list[str]) -> None:
    if isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(k))
            out.append(": ")
            _json_emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _json_emit(v, out)
        out.append("]")
    else:
        _json_scalar(obj, out)


def dump_json(obj) -> str:
    """Deterministic JSON: insertion-ordered keys, floats at 10 sig digits."""
    out: list[str] = []
    _json_emit(obj, out)
    return "".join(out) + "\n"


def _csv_line(cells: Iterable) -> str:
    rendered = []
    for c in cells:
        if isinstance(c, float):
            c = format(c, ".10g")
        else:
            c = str(c)
        if any(ch in c for ch in ",\"\n"):
            c = '"' + c.replace('"', '""') + '"'
        rendered.append(c)
    return ",".join(rendered) + "\n"


def _write_output(text: str, out_path: Optional[str]) -> None:
    if out_path and out_path != "-":
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------ input files ----

def _load_graphs(path: str) -> list[tuple[str, int, Graph]]:
    """Read one input file into (source, line, Graph) records.

    Sniffing rule: a first nonblank line starting with a digit means
    edge-list blocks (header "n m"), anything else means one graph6 string
    per line. graph6 size bytes are always at or above '?' (63), so the two
    are never ambiguous.
    """
    if path == "-":
        lines = sys.stdin.read().splitlines()
        label = "<stdin>"
    else:
        with open(path, encoding="ascii") as fh:
            lines = fh.read().splitlines()
        label = path
    first = next((ln for ln in lines if ln.strip()), None)
    if first is None:
        raise FormatError(f"{label}: no graphs in input")
    records = []
    if first.strip()[0].isdigit():
        block: list[str] = []
        start = 1
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if line:
                if not block:
                    start = lineno
                block.append(line)
                continue
            if block:
                n, edges = parse_edge_list_block(block, where=f"{label}:{start}: ")
                records.append((label, start, _build(label, start, n, edges)))
                block = []
        if block:
            n, edges = parse_edge_list_block(block, where=f"{label}:{start}: ")
            records.append((label, start, _build(label, start, n, edges)))
    else:
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                n, edges = decode_graph6(line)
            except FormatError as exc:
                raise FormatError(f"{label}:{lineno}: {exc}") from None
            records.append((label, lineno, _build(label, lineno, n, edges)))
    return records


def _build(label: str, lineno: int, n: int, edges) -> Graph:
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise GraphError(f"{label}:{lineno}: {exc}") from None


def parse_n_values(text: str) -> list[int]:
    """Accept N, A..B (inclusive), or a comma list of those."""
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo_text, _, hi_text = part.partition("..")
            try:
                lo, hi = int(lo_text), int(hi_text)
            except ValueError:
                raise CliError(f"bad range {part!r}; expected forms: 8, 4..10, 5,7,9") from None
            if hi < lo:
                raise CliError(f"empty range {part!r}")
            values.extend(range(lo, hi + 1))
        else:
            try:
                values.append(int(part))
            except ValueError:
                raise CliError(f"bad order {part!r}; expected forms: 8, 4..10, 5,7,9") from None
    if not values:
        raise CliError(f"no orders given in {text!r}")
    return values


# ------------------------------------------------------------ subcommands ----

def _cmd_index(args) -> int:
    which = [w.strip() for w in args.which.split(",") if w.strip()]
    bad = [w for w in which if w not in _INDEX_FNS]
    if bad or not which:
        raise CliError(f"--which takes a comma subset of gg,ngg,abc, got {args.which!r}")
    if args.splits and args.format == "csv":
        raise CliError("--splits is not representable in csv; use json or text")

    records = []
    for path in args.inputs:
        records.extend(_load_graphs(path))

    if args.format == "json":
        payload = {"command": "index", "records": []}
        for label, lineno, g in records:
            rec = {"source": label, "line": lineno, "n": g.n, "m": g.m}
            for w in which:
                rec[w] = _INDEX_FNS[w](g)
            if args.splits:
                rec["splits"] = [
                    [s.edge[0], s.edge[1], s.n_u, s.n_v] for s in edge_splits(g)
                ]
            payload["records"].append(rec)
        _write_output(dump_json(payload), args.out)
    elif args.format == "csv":
        text = _csv_line(["source", "line", "n", "m", *which])
        for label, lineno, g in records:
            text += _csv_line([label, lineno, g.n, g.m, *(_INDEX_FNS[w](g) for w in which)])
        _write_output(text, args.out)
    else:
        chunks = []
        for label, lineno, g in records:
            vals = "  ".join(f"{w} {_fmt(_INDEX_FNS[w](g), 'text')}" for w in which)
            chunks.append(f"{label}:{lineno}  n={g.n} m={g.m}  {vals}\n")
            if args.splits:
                for s in edge_splits(g):
                    chunks.append(
                        f"    edge {s.edge[0]}-{s.edge[1]}: n_u={s.n_u} n_v={s.n_v}\n"
                    )
        _write_output("".join(chunks), args.out)
    return OK


def _cmd_family(args) -> int:
    spec = parse_spec(args.spec)
    g = construct(spec)
    try:
        closed = ngg_closed(spec)
    except FamilyError:
        closed = None
    line = to_graph6(g)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(line + "\n")
    if args.format == "json":
        payload = {
            "command": "family",
            "spec": spec.text,
            "n": g.n,
            "m": g.m,
            "graph6": line,
            "ngg_closed": closed,
        }
        sys.stdout.write(dump_json(payload))
    elif args.format == "csv":
        sys.stdout.write(_csv_line(["spec", "n", "m", "graph6", "ngg_closed"]))
        sys.stdout.write(
            _csv_line([spec.text, g.n, g.m, line, "" if closed is None else closed])
        )
    else:
        sys.stdout.write(f"spec {spec.text}\nn {g.n}\nm {g.m}\ngraph6 {line}\n")
        if closed is not None:
            sys.stdout.write(f"ngg-closed {_fmt(closed, 'text')}\n")
    return OK


def _stream_for(args, bounds: FeasibilityBounds):
    cons = Constraints(
        args.n,
        bipartite_only=args.bipartite,
        max_degree=args.max_degree,
        trees_only=args.trees,
        cyclomatic=args.cyclomatic,
    )
    if cons.trees_only and cons.cyclomatic in (None, 0):
        return cons, enumerate_trees(
            args.n, max_degree=args.max_degree, bounds=bounds, workers=args.workers
        )
    return cons, enumerate_connected(cons, bounds=bounds, workers=args.workers)


def _cmd_enumerate(args) -> int:
    bounds = FeasibilityBounds.from_env().override(args.max_n)
    cons, stream = _stream_for(args, bounds)
    lines = [to_graph6(g) for g in stream]
    cons_fields = {
        "n": cons.n,
        "bipartite": cons.bipartite_only,
        "trees": cons.trees_only,
        "max_degree": cons.max_degree,
        "cyclomatic": cons.cyclomatic,
    }
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.writelines(line + "\n" for line in lines)
        body = None
    else:
        body = "".join(line + "\n" for line in lines)

    if args.format == "json":
        payload = {
            "command": "enumerate",
            "constraints": cons_fields,
            "count": len(lines),
        }
        if args.out:
            payload["out"] = args.out
        else:
            payload["graphs"] = lines
        sys.stdout.write(dump_json(payload))
    elif args.format == "csv":
        text = _csv_line(["graph6"]) + "".join(_csv_line([line]) for line in lines)
        if args.out:
            sys.stdout.write(_csv_line(["count"]) + _csv_line([len(lines)]))
        else:
            sys.stdout.write(text)
    else:
        if body is not None:
            sys.stdout.write(body)
        print(f"count {len(lines)}", file=sys.stderr)
    return OK


def _report_payload(report: VerificationReport) -> dict:
    rows = []
    for r in report.rows:
        rows.append(
            {
                "n": r.n,
                "passed": r.passed,
                "label": r.label,
                "value": r.value,
                "expected": list(r.expected),
                "witnesses": list(r.witnesses),
                "exact_witnesses": list(r.exact_witnesses),
                "classes": r.total_classes,
                "note": r.note,
            }
        )
    payload = {
        "command": "verify",
        "claim": report.claim,
        "passed": report.passed,
        "rows": rows,
    }
    if report.caveat:
        payload["caveat"] = report.caveat
    return payload


def _render_report(report: VerificationReport, fmt: str) -> str:
    if fmt == "json":
        return dump_json(_report_payload(report))
    if fmt == "csv":
        text = _csv_line(
            ["n", "passed", "label", "value", "expected", "witnesses", "exact_witnesses", "classes", "note"]
        )
        for r in report.rows:
            text += _csv_line(
                [
                    r.n,
                    r.passed,
                    r.label,
                    r.value,
                    ";".join(r.expected),
                    ";".join(r.witnesses),
                    ";".join(r.exact_witnesses),
                    r.total_classes,
                    r.note,
                ]
            )
        return text
    chunks = [f"claim {report.claim}: {'pass' if report.passed else 'FAIL'}\n"]
    if report.caveat:
        chunks.append(f"note: {report.caveat}\n")
    for r in report.rows:
        extra = f" [{r.note}]" if r.note else ""
        chunks.append(
            f"  n={r.n}{extra} {r.label}: value={_fmt(r.value, 'text')}"
            f" witnesses={','.join(r.witnesses)}"
        )
        if r.expected:
            chunks.append(f" expected={','.join(r.expected)}")
        chunks.append(f" classes={r.total_classes}\n")
    return "".join(chunks)


def _render_crossover(rows: Sequence[CrossoverRow], passed: bool, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "command": "verify",
            "claim": "crossover",
            "passed": passed,
            "rows": [
                {
                    "n": r.n,
                    "k": r.k,
                    "ngg_cycle_pendant": r.ngg_cycle_pendant,
                    "ngg_cycle_hook": r.ngg_cycle_hook,
                    "comparison": r.comparison,
                }
                for r in rows
            ],
        }
        return dump_json(payload)
    if fmt == "csv":
        text = _csv_line(["n", "k", "ngg_cycle_pendant", "ngg_cycle_hook", "comparison"])
        for r in rows:
            text += _csv_line([r.n, r.k, r.ngg_cycle_pendant, r.ngg_cycle_hook, r.comparison])
        return text
    chunks = [f"claim crossover: {'pass' if passed else 'FAIL'}\n"]
    for r in rows:
        chunks.append(
            f"  n={r.n} k={r.k}  C'={_fmt(r.ngg_cycle_pendant, 'text')}"
            f"  C''={_fmt(r.ngg_cycle_hook, 'text')}  {r.comparison}\n"
        )
    return "".join(chunks)


def _render_asymptote(rows: Sequence[AsymptoticRow], passed: bool, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "command": "verify",
            "claim": "asymptote",
            "passed": passed,
            "rows": [
                {"n": r.n, "ngg_path": r.ngg_path, "residual": r.residual} for r in rows
            ],
        }
        return dump_json(payload)
    if fmt == "csv":
        text = _csv_line(["n", "ngg_path", "residual"])
        for r in rows:
            text += _csv_line([r.n, r.ngg_path, r.residual])
        return text
    chunks = [f"claim asymptote: {'pass' if passed else 'FAIL'}\n"]
    for r in rows:
        chunks.append(
            f"  n={r.n}  ngg={_fmt(r.ngg_path, 'text')}  residual={_fmt(r.residual, 'text')}\n"
        )
    return "".join(chunks)


def _cmd_verify(args) -> int:
    bounds = FeasibilityBounds.from_env().override(args.max_n)
    ns = parse_n_values(args.n or _DEFAULT_RANGES[args.claim])
    t0 = time.perf_counter()

    if args.claim == "crossover":
        odd = [n for n in ns if n % 2 == 1 and n >= 5]
        if not odd:
            raise CliError("crossover wants odd orders >= 5 in --n")
        rows = crossover_scan(odd)
        passed = crossover_pattern_ok(rows)
        text = _render_crossover(rows, passed, args.format)
    elif args.claim == "asymptote":
        rows = asymptotic_check(ns)
        passed = residuals_positive_decreasing(rows)
        text = _render_asymptote(rows, passed, args.format)
    else:
        kwargs = dict(epsilon=args.epsilon, bounds=bounds, workers=args.workers)
        if args.claim == "max-bipartite":
            report = verify_max_bipartite(ns, **kwargs)
        elif args.claim == "min-bipartite":
            report = verify_min_bipartite(ns, **kwargs)
        elif args.claim == "trees":
            report = verify_tree_extremals(ns, **kwargs)
        else:
            which = int(args.claim[-1])
            report = probe_conjecture(which, ns, args.max_degree, **kwargs)
        passed = report.passed
        text = _render_report(report, args.format)

    _write_output(text, args.out)
    print(f"verify {args.claim}: {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    return OK if passed else VERIFY_FAILED


# ------------------------------------------------------------------ parser ----

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ggindex",
        description="Distance-based graph indices: compute, construct, enumerate, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, epsilon=False, workers=False, max_n=False):
        p.add_argument(
            "--format", choices=("text", "json", "csv"), default="text",
            help="output format (default text)",
        )
        p.add_argument("--out", help="write the primary output to this file")
        if epsilon:
            p.add_argument(
                "--epsilon", type=float, default=DEFAULT_EPSILON,
                help="absolute tie window on objective values (default 1e-9)",
            )
        if workers:
            p.add_argument(
                "--workers", type=int, default=1,
                help="process count for enumeration levels (default 1)",
            )
        if max_n:
            p.add_argument(
                "--max-n", type=int, default=None,
                help="raise the feasibility bound for this run (also: GGINDEX_MAX_N)",
            )

    p = sub.add_parser("index", help="compute GG/NGG/ABC for graphs in files")
    p.add_argument("inputs", nargs="+", help="graph6 or edge-list files ('-' for stdin)")
    p.add_argument("--which", default="gg,ngg,abc", help="comma subset of gg,ngg,abc")
    p.add_argument("--splits", action="store_true", help="include per-edge n_u/n_v")
    common(p)
    p.set_defaults(fn=_cmd_index)

    p = sub.add_parser("family", help="construct one parametric family graph")
    p.add_argument("spec", help="family spec, e.g. P:7 C:8 K:5 KB:3,4 S:9 CP:9 CH:9 TH:4,2,2 AD:41,3")
    common(p)
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser("enumerate", help="stream an exhaustive isomorph-free class")
    p.add_argument("--n", type=int, required=True, help="vertex count")
    p.add_argument("--bipartite", action="store_true")
    p.add_argument("--trees", action="store_true")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--cyclomatic", type=int, default=None)
    common(p, workers=True, max_n=True)
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("verify", help="run one extremal / closed-form check")
    p.add_argument("claim", choices=VERIFY_CLAIMS)
    p.add_argument("--n", default=None, help="orders: 8, 4..10, or 5,7,9 (claim default otherwise)")
    p.add_argument("--max-degree", type=int, default=3, help="degree bound for conjecture probes")
    common(p, epsilon=True, workers=True, max_n=True)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "epsilon", None) is not None and args.epsilon <= 0:
        parser.error("--epsilon must be positive")
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be at least 1")
    try:
        return args.fn(args)
    except (
        CliError,
        GraphError,
        FormatError,
        FamilyError,
        EnumerationBoundError,
        ExtremalError,
        ValueError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


if __name__ == "__main__":
    sys.exit(main())
