"""Command-line entry point.

Exit codes: 0 success / routes agree, 1 route disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from .closed_form import catalan
from .errors import DomainError
from .intersect import KappaQuery, kappa
from .traffic import Zone, classify, count_paths, sufficient_bounds
from .verify import ROUTES, cross_check, route_table

log = logging.getLogger("grasslines")

N_MAX_DEFAULT = 8
N_MAX_CEILING = 30
FAULT_ENV = "GRASSLINES_INJECT_FAULT"

ORIENTATION_HELP = (
    "ASCII triangles put n on rows (increasing downward) and m on columns "
    "(increasing rightward).  The traffic map is drawn with north up: n "
    "increases upward, m rightward."
)

BLOCK = "■"
BEACH = "~"
GATE_MARK = "*"
UNREACHED = "."


class UsageError(Exception):
    pass


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(query, results, **extra) -> str:
    return json.dumps({"query": query, "results": results, **extra}, indent=2) + "\n"


def _strs(d: dict) -> dict:
    return {k: (None if v is None else str(v)) for k, v in d.items()}


def _n_max(args) -> int:
    n_max = getattr(args, "n_max", None)
    if n_max is None:
        n_max = N_MAX_DEFAULT
    if n_max < 0:
        raise UsageError("--n-max must be >= 0")
    if n_max > N_MAX_CEILING:
        log.warning("n_max=%d exceeds %d; this may take a while", n_max, N_MAX_CEILING)
    return n_max


def _fmt(args) -> str:
    return getattr(args, "format", None) or "ascii"


def render_triangle(records) -> str:
    """ASCII triangle of (m, n, value) records."""
    rows: dict[int, dict[int, int]] = {}
    for m, n, v in records:
        rows.setdefault(n, {})[m] = v
    n_max = max(rows)
    width = max(len(str(v)) for r in rows.values() for v in r.values())
    width = max(width, len(str(n_max))) + 1
    lines = ["# K(m, n) = kappa_{2m, n-m}; rows n (down), columns m (right)"]
    lines.append("n\\m " + "".join(f"{m:>{width}}" for m in range(n_max + 1)))
    for n in sorted(rows):
        lines.append(f"{n:>3} " + "".join(f"{rows[n][m]:>{width}}" for m in sorted(rows[n])))
    return "\n".join(lines) + "\n"


def parse_triangle(text: str) -> list[tuple[int, int, int]]:
    out = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#") or line.startswith("n\\m"):
            continue
        n, *vals = (int(t) for t in line.split())
        out.extend((m, n, v) for m, v in enumerate(vals))
    return out


def cmd_kappa(args) -> tuple[str, int]:
    if None in (args.a, args.b, args.n):
        raise UsageError("kappa needs --a, --b and --n")
    try:
        q = KappaQuery(args.a, args.b, args.n)
    except DomainError as exc:
        raise UsageError(f"{exc} (constraint: a + 2b = 2n)") from exc
    value = kappa(q)
    fmt = _fmt(args)
    if fmt == "csv":
        return _csv(["a", "b", "n", "value"], [[q.a, q.b, q.n, value]]), 0
    if fmt == "json":
        query = {"command": "kappa", "a": q.a, "b": q.b, "n": q.n}
        return _json(query, [_strs({"a": q.a, "b": q.b, "n": q.n, "value": value})]), 0
    return f"{value}\n", 0


def cmd_table(args) -> tuple[str, int]:
    n_max = _n_max(args)
    if args.route not in ROUTES:
        raise UsageError(f"unknown route {args.route!r}")
    records = list(route_table(args.route, n_max).records())
    fmt = _fmt(args)
    if fmt == "csv":
        return _csv(["m", "n", "value"], records), 0
    if fmt == "json":
        query = {"command": "table", "n_max": n_max, "route": args.route}
        return _json(query, [_strs({"m": m, "n": n, "value": v}) for m, n, v in records]), 0
    return render_triangle(records), 0


def traffic_records(n_max: int):
    """(m, n, zone, count-or-None) over the automatic window, rows bottom-up."""
    bounds = sufficient_bounds(n_max)
    grid = count_paths(bounds)
    for p in bounds.points():
        zone = classify(p)
        count = grid.counts.get(p)
        yield p.m, p.n, zone.value, count


def render_map(records) -> str:
    cells = {}
    for m, n, zone, count in records:
        if zone == Zone.ROAD_BLOCK.value:
            tok = BLOCK
        elif zone == Zone.BEACH_FORBIDDEN.value:
            tok = BEACH
        elif count is None:
            tok = UNREACHED
        else:
            tok = str(count) + (GATE_MARK if zone == Zone.GATE.value else "")
        cells[m, n] = tok
    ms = sorted({m for m, _ in cells})
    ns = sorted({n for _, n in cells}, reverse=True)
    width = max(max(len(t) for t in cells.values()), max(len(str(m)) for m in ms)) + 1
    lines = [
        f"# traffic map: north up; {BLOCK} road block, {BEACH} beach (m > n), "
        f"{GATE_MARK} gate (2m + n = 0), {UNREACHED} unreached",
    ]
    for n in ns:
        lines.append(f"{n:>3} |" + "".join(f"{cells[m, n]:>{width}}" for m in ms))
    lines.append("    +" + "-" * (width * len(ms)))
    lines.append("  m  " + "".join(f"{m:>{width}}" for m in ms))
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> list[tuple[int, int, int]]:
    """(m, n, count) for every counted cell of an ASCII traffic map."""
    lines = text.splitlines()
    ms = [int(t) for t in lines[-1].split()[1:]]
    out = []
    for line in lines[1:-2]:
        label, body = line.split("|", 1)
        n = int(label)
        for m, tok in zip(ms, body.split()):
            tok = tok.rstrip(GATE_MARK)
            if tok.isdigit():
                out.append((m, n, int(tok)))
    return sorted(out, key=lambda r: (r[1], r[0]))


def cmd_traffic(args) -> tuple[str, int]:
    n_max = _n_max(args)
    records = list(traffic_records(n_max))
    fmt = _fmt(args)
    if fmt == "csv":
        rows = [[m, n, z, "" if c is None else c] for m, n, z, c in records]
        return _csv(["m", "n", "zone", "value"], rows), 0
    if fmt == "json":
        query = {"command": "traffic", "n_max": n_max}
        res = [_strs({"m": m, "n": n, "zone": z, "value": c}) for m, n, z, c in records]
        return _json(query, res), 0
    return render_map(records), 0


def _fault_from_env():
    raw = os.environ.get(FAULT_ENV)
    if not raw:
        return None
    m, n = (int(t) for t in raw.split(","))
    return m, n


def cmd_verify(args) -> tuple[str, int]:
    n_max = _n_max(args)
    report = cross_check(n_max, inject_fault=_fault_from_env())
    status = 0 if report.ok else 1
    fmt = _fmt(args)
    cols = ["m", "n", *ROUTES, "agree"]

    def row(c):
        return [c.m, c.n, *("" if c.value(r) is None else c.value(r) for r in ROUTES),
                "yes" if c.agree else "no"]

    if fmt == "csv":
        return _csv(cols, [row(c) for c in report.cells]), status
    if fmt == "json":
        query = {"command": "verify", "n_max": n_max}
        results = [dict(zip(cols, map(str, row(c)))) for c in report.cells]
        return _json(
            query, results,
            summary={k: _strs(v) for k, v in report.summary.items()},
            orientation=report.orientation_note,
            core_disagreements=[[str(c.m), str(c.n)] for c in report.core_disagreements],
            double_sum_flags=[[str(c.m), str(c.n)] for c in report.double_sum_flags],
            passed=report.ok,
        ), status
    width = max(len(str(v)) for c in report.cells for v in row(c)) + 1
    width = max(width, max(len(h) for h in cols) + 1)
    lines = ["".join(f"{h:>{width}}" for h in cols)]
    lines += ["".join(f"{str(v):>{width}}" for v in row(c)) for c in report.cells]
    for pair, s in report.summary.items():
        lines.append(f"# {pair}: agree={s['agree']} disagree={s['disagree']}")
    lines.append(f"# orientation: {report.orientation_note}")
    for c in report.core_disagreements:
        lines.append(f"DISAGREE m={c.m} n={c.n}")
    for c in report.double_sum_flags:
        lines.append(f"FLAG double_sum m={c.m} n={c.n}")
    lines.append("RESULT: " + ("PASS" if report.ok else "FAIL"))
    return "\n".join(lines) + "\n", status


def cmd_catalan(args) -> tuple[str, int]:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    values = [catalan(k) for k in range(args.count)]
    fmt = _fmt(args)
    if fmt == "csv":
        return _csv(["n", "value"], list(enumerate(values))), 0
    if fmt == "json":
        return _json({"command": "catalan", "count": args.count}, [str(v) for v in values]), 0
    return " ".join(map(str, values)) + "\n", 0


def build_parser() -> argparse.ArgumentParser:
    # global flags accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("ascii", "csv", "json"), default=argparse.SUPPRESS,
                        help="output format (default: ascii)")
    common.add_argument("--n-max", type=int, default=argparse.SUPPRESS,
                        help=f"largest n to tabulate (default: {N_MAX_DEFAULT})")

    parser = argparse.ArgumentParser(
        prog="grasslines",
        parents=[common],
        description="Intersection numbers on the Grassmannian of lines and Catalan traffic.",
        epilog=ORIENTATION_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", parents=[common], help="one intersection number kappa_{a,b}")
    p.add_argument("--a", type=int, help="power of sigma_1")
    p.add_argument("--b", type=int, help="power of sigma_2")
    p.add_argument("--n", type=int, help="lines in P^{n+1}; needs a + 2b = 2n")
    p.set_defaults(func=cmd_kappa)

    p = sub.add_parser("table", parents=[common], help="triangle of K(m, n)", epilog=ORIENTATION_HELP)
    p.add_argument("--route", default="operator", help=f"one of {', '.join(ROUTES)} "
                   "(double-sum also accepted)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("traffic", parents=[common], help="city map with path counts",
                       epilog=ORIENTATION_HELP)
    p.set_defaults(func=cmd_traffic)

    p = sub.add_parser("verify", parents=[common], help="cross-check all routes; exit 1 on disagreement")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalan", parents=[common], help="first COUNT Catalan numbers")
    p.add_argument("--count", type=int, default=10)
    p.set_defaults(func=cmd_catalan)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(message)s", stream=sys.stderr)
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "route", None):
        args.route = args.route.replace("-", "_")
    try:
        text, status = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    raise SystemExit(main())
