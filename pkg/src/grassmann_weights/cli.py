"""Command line front end.

    grassmann-weights weights --m 4 --q 2 --method exact --format json
    grassmann-weights verify --m 5 --q 2 --max-r 2
    grassmann-weights enumerate --m 9 --area 20
    grassmann-weights admissible --m 15

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .engine import (
    LARGE_Q,
    EngineError,
    Method,
    admissibility_map,
    hierarchy,
    lr_choice,
)
from .grid import GridError, grid_from_corners
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    OracleError,
    brute_hierarchy,
    generator_matrix,
    grassmann_points,
    random_corner_sets,
    schubert_union_points,
    span_dimension,
)
from .qpoly import evaluate, g_profile, n_points
from .tableau import profile_of, subtableaux_of_area

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


@dataclass
class RunConfig:
    command: str
    m: int
    q: int | None = None
    method: str = "exact"
    max_r: int | None = None
    area: int | None = None
    fmt: str = "text"
    out: str | None = None
    budget: int = DEFAULT_BUDGET
    jobs: int = 1
    cache_dir: str | None = None
    sweep: int = 50

    def validate(self) -> None:
        if self.m < 2:
            raise ValueError("--m must be at least 2")
        if self.q is not None and self.q < 2:
            raise ValueError("--q must be at least 2")
        if self.fmt not in ("text", "csv", "json"):
            raise ValueError("--format must be text, csv or json")
        if self.budget <= 0:
            raise ValueError("--budget must be positive")
        if self.jobs < 1:
            raise ValueError("--jobs must be at least 1")


def _s(v) -> str:
    return str(int(v))


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _coeffs(p) -> list[str]:
    return [_s(c) for c in p.coeffs]


# -- cache -------------------------------------------------------------------


def _cache_path(cfg: RunConfig, key: str) -> Path | None:
    if not cfg.cache_dir:
        return None
    return Path(cfg.cache_dir) / f"{key}-v{__version__}.json"


def _digest(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()


def cache_load(cfg: RunConfig, key: str):
    path = _cache_path(cfg, key)
    if path is None or not path.exists():
        return None
    try:
        blob = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    payload = blob.get("payload")
    if payload is None or blob.get("sha256") != _digest(payload):
        return None
    return payload


def cache_store(cfg: RunConfig, key: str, payload) -> None:
    path = _cache_path(cfg, key)
    if path is None:
        return
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps({"sha256": _digest(payload), "payload": payload}))


# -- weights -----------------------------------------------------------------


def weights_payload(m: int, q: int, method: str) -> dict:
    """The JSON document emitted by ``weights``; every integer is a decimal string."""
    methods = [Method.EXACT, Method.LR] if method == "both" else [Method(method)]
    hs = {meth: hierarchy(m, q, meth) for meth in methods}
    main = hs[methods[0]]
    rows = []
    for i in range(1, main.k + 1):
        choice = lr_choice(m, main.k - i)
        row = {
            "i": _s(i),
            "d": _s(main.d(i)),
            "witnesses": [[_s(h) for h in p.heights] for p in main.witnesses[i - 1]],
            "gL": _coeffs(choice.gL),
            "gR": _coeffs(choice.gR),
        }
        if method == "both":
            row["d_exact"] = _s(hs[Method.EXACT].d(i))
            row["d_lr"] = _s(hs[Method.LR].d(i))
            row["lr_winner"] = choice.winner.value
        rows.append(row)
    payload = {
        "m": _s(m),
        "q": _s(q),
        "n": _s(main.n),
        "k": _s(main.k),
        "method": method,
        "large_q_heuristic": method in ("lr", "both") and q < LARGE_Q,
        "weights": rows,
    }
    return payload


def _render_weights(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(payload)
    both = payload["method"] == "both"
    header = ["i", "d"] + (["d_exact", "d_lr", "lr_winner"] if both else []) + ["witnesses", "gL", "gR"]

    def cells(row):
        extra = [row["d_exact"], row["d_lr"], row["lr_winner"]] if both else []
        wit = ";".join("(" + ",".join(w) + ")" for w in row["witnesses"])
        return [row["i"], row["d"]] + extra + [wit, " ".join(row["gL"]), " ".join(row["gR"])]

    rows = [cells(r) for r in payload["weights"]]
    if fmt == "csv":
        return _csv_text(header, rows)
    lines = [
        f"# C(2,{payload['m']}) over F_{payload['q']}: n={payload['n']} k={payload['k']} method={payload['method']}"
    ]
    if payload["large_q_heuristic"]:
        lines.append("# lr values are only guaranteed for large q")
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    for r in [header] + rows:
        lines.append("  ".join(str(c).rjust(w) for c, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def cmd_weights(cfg: RunConfig) -> tuple[int, str]:
    if cfg.q is None:
        raise ValueError("weights needs --q")
    if cfg.method not in ("exact", "lr", "both"):
        raise ValueError("--method must be exact, lr or both")
    key = f"weights-m{cfg.m}-q{cfg.q}-{cfg.method}"
    payload = cache_load(cfg, key)
    if payload is None:
        payload = weights_payload(cfg.m, cfg.q, cfg.method)
        cache_store(cfg, key, payload)
    return EXIT_OK, _render_weights(payload, cfg.fmt)


# -- verify ------------------------------------------------------------------


def verify_report(cfg: RunConfig) -> dict:
    """Run the oracle/engine agreement checks; ``report["diff"]`` lists mismatches."""
    m, q = cfg.m, cfg.q
    pts = grassmann_points(m, q)
    gen = generator_matrix(pts)
    k = gen.k
    r_max = k if cfg.max_r is None else min(cfg.max_r, k)
    diff = []

    def check(name, expected, got):
        if expected != got:
            diff.append({"check": name, "expected": expected, "got": got})

    n = evaluate(n_points(m), q)
    check("word_length", _s(n), _s(gen.n))
    check("rank", _s(m * (m - 1) // 2), _s(k))

    for cs in random_corner_sets(m, cfg.sweep, seed=m * 1000 + q):
        profile = grid_from_corners(cs)
        tag = ";".join(f"({a},{b})" for a, b in cs.as_tuples())
        check(f"points{tag}", _s(evaluate(g_profile(profile), q)), _s(schubert_union_points(pts, cs)))
        check(f"span{tag}", _s(profile.area), _s(span_dimension(pts, cs)))

    key = f"oracle-m{m}-q{q}-r{r_max}"
    cached = cache_load(cfg, key)
    if cached is None:
        brute = [int(v) for v in brute_hierarchy(gen, r_max, cfg.budget, cfg.jobs)]
        cache_store(cfg, key, [_s(v) for v in brute])
    else:
        brute = [int(v) for v in cached]
    exact = hierarchy(m, q, Method.EXACT).weights[:r_max]
    for i, (a, b) in enumerate(zip(exact, brute), start=1):
        check(f"d_{i}", _s(a), _s(b))
    return {
        "m": _s(m),
        "q": _s(q),
        "max_r": _s(r_max),
        "oracle_weights": [_s(v) for v in brute],
        "engine_weights": [_s(v) for v in exact],
        "corner_sets": _s(cfg.sweep),
        "status": "pass" if not diff else "fail",
        "diff": diff,
    }


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    if cfg.q is None:
        raise ValueError("verify needs --q")
    try:
        report = verify_report(cfg)
    except BudgetExceeded as exc:
        report = {
            "m": _s(cfg.m),
            "q": _s(cfg.q),
            "status": "budget_exceeded",
            "first_infeasible_r": _s(exc.r),
            "subspaces": _s(exc.count),
            "budget": _s(exc.budget),
            "partial_weights": [_s(v) for v in exc.partial],
        }
        return EXIT_BUDGET, _render_report(report, cfg.fmt)
    code = EXIT_OK if report["status"] == "pass" else EXIT_MISMATCH
    return code, _render_report(report, cfg.fmt)


def _render_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return _dump_json(report)
    if fmt == "csv":
        rows = [[d["check"], d["expected"], d["got"]] for d in report.get("diff", [])]
        return _csv_text(["check", "expected", "got"], rows)
    lines = [f"verify m={report['m']} q={report['q']}: {report['status']}"]
    if report["status"] == "budget_exceeded":
        lines.append(
            f"  dimension {report['first_infeasible_r']} needs {report['subspaces']} subspaces "
            f"(budget {report['budget']}); weights so far: {', '.join(report['partial_weights'])}"
        )
    else:
        lines.append("  oracle: " + ", ".join(report["oracle_weights"]))
        lines.append("  engine: " + ", ".join(report["engine_weights"]))
        for d in report["diff"]:
            lines.append(f"  MISMATCH {d['check']}: expected {d['expected']}, got {d['got']}")
    return "\n".join(lines) + "\n"


# -- enumerate ---------------------------------------------------------------


def cmd_enumerate(cfg: RunConfig) -> tuple[int, str]:
    if cfg.area is None:
        raise ValueError("enumerate needs --area")
    q = cfg.q or 2
    rows = []
    for s in subtableaux_of_area(cfg.m, cfg.area):
        p = profile_of(s)
        g = g_profile(p)
        rows.append(
            {
                "profile": [_s(h) for h in p.heights],
                "corners": [[_s(a), _s(b)] for a, b in p.corners().as_tuples()],
                "g": _coeffs(g),
                "value": _s(evaluate(g, q)),
            }
        )
    if cfg.fmt == "json":
        return EXIT_OK, _dump_json({"m": _s(cfg.m), "area": _s(cfg.area), "q": _s(q), "profiles": rows})
    header = ["profile", "corners", "g", f"g({q})"]
    table = [
        [
            "(" + ",".join(r["profile"]) + ")",
            ";".join("(" + ",".join(c) + ")" for c in r["corners"]),
            " ".join(r["g"]) or "0",
            r["value"],
        ]
        for r in rows
    ]
    if cfg.fmt == "csv":
        return EXIT_OK, _csv_text(header, table)
    widths = [max(len(c) for c in col) for col in zip(header, *table)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header] + table]
    return EXIT_OK, "\n".join(lines) + "\n"


# -- admissible --------------------------------------------------------------


def cmd_admissible(cfg: RunConfig) -> tuple[int, str]:
    if cfg.m > 64:
        raise ValueError("--m must be at most 64")
    rows = admissibility_map(cfg.m)
    if cfg.fmt == "json":
        out = [{k: (_s(v) if not isinstance(v, bool) else v) for k, v in r.items()} for r in rows]
        return EXIT_OK, _dump_json({"m": _s(cfg.m), "points": out})
    if cfg.fmt == "csv":
        header = ["x", "y", "d", "cost", "admissible", "lemma"]
        table = [
            [r["x"], r["y"], r["d"], r["cost"], int(r["admissible"]), int(r["lemma"])] for r in rows
        ]
        return EXIT_OK, _csv_text(header, table)
    lines = []
    m = cfg.m
    cell = {(r["x"], r["y"]): r for r in rows}
    width = len(str(max(r["cost"] for r in rows))) + 1
    for y in range(m, 1, -1):
        parts = []
        for x in range(1, y):
            r = cell[(x, y)]
            mark = "" if r["admissible"] else "x"
            parts.append((str(r["cost"]) + mark).rjust(width + 1))
        lines.append(f"{y:>3} |" + "".join(parts))
    lines.append("    (cost of I_(x,y); 'x' marks non-admissible points)")
    return EXIT_OK, "\n".join(lines) + "\n"


# -- entry point -------------------------------------------------------------


COMMANDS = {
    "weights": cmd_weights,
    "verify": cmd_verify,
    "enumerate": cmd_enumerate,
    "admissible": cmd_admissible,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, required=True)
    common.add_argument("--q", type=int)
    common.add_argument("--format", dest="fmt", choices=["text", "csv", "json"], default=None)
    common.add_argument("--out")
    common.add_argument("--cache-dir")
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="grassmann-weights", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", parents=[common], help="weight hierarchy d_1..d_k")
    p.add_argument("--method", choices=["exact", "lr", "both"], default="exact")

    p = sub.add_parser("verify", parents=[common], help="brute-force agreement checks")
    p.add_argument("--max-r", type=int)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--sweep", type=int, default=50, help="number of random corner sets")

    p = sub.add_parser("enumerate", parents=[common], help="all Schubert unions of one area")
    p.add_argument("--area", type=int, required=True)

    sub.add_parser("admissible", parents=[common], help="cost and admissibility map")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    default_fmt = "csv" if args.command == "admissible" else "text"
    return RunConfig(
        command=args.command,
        m=args.m,
        q=args.q,
        method=getattr(args, "method", "exact"),
        max_r=getattr(args, "max_r", None),
        area=getattr(args, "area", None),
        fmt=args.fmt or default_fmt,
        out=args.out,
        budget=getattr(args, "budget", DEFAULT_BUDGET),
        jobs=args.jobs,
        cache_dir=args.cache_dir,
        sweep=getattr(args, "sweep", 50),
    )


def run(cfg: RunConfig) -> tuple[int, str]:
    cfg.validate()
    return COMMANDS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = config_from_args(args)
    try:
        code, text = run(cfg)
    except (ValueError, EngineError, GridError, OracleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
