"""Command line interface.

Subcommands cover single decompositions (decompose-tensor, decompose-lie,
stohr, gzeta), the classification sweeps (theorem-a, theorem-b, theorem-c,
theorem-37), and a batch driver (report-all).  Output is JSON by default,
with csv and pretty as alternatives; an on-disk cache of tilting character
tables accelerates repeated runs.

Exit codes: 0 on success, 1 on a verification failure (a computed result
contradicting a structural guarantee), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from .cache import CharTableCache, flush_tilting, warm_tilting
from .charring import ConsistencyError
from .gzeta import gzeta_dim, gzeta_profile, theorem_b_predicate
from .liechar import lie_tilting_decomp, stohr_pairs, stohr_tilting_decomp
from .modarith import PrimeChar
from .report import sweep, theorem_37_report, theorem_a_report, theorem_c_report
from .tiltchar import tensor_power_decomp

__all__ = ["build_parser", "main"]

PROVENANCE = {
    "tensor-power": "tilting multiplicities by greedy highest-weight elimination",
    "lie-power": "necklace weight counts, then greedy tilting elimination",
    "stohr": "bidegree Weyl product characters in the tilting basis",
    "gzeta": "signed binomial coefficient sequence and subset-sum rank",
    "theorem-a": "zero weight space, coefficient-sequence dichotomy, and bidegree summand coverage",
    "theorem-b": "coefficient-sequence dimension dichotomy",
    "theorem-c": "stated exception lists with one-subtraction character consistency",
    "theorem-37": "odd-degree tilting with signed certificates for even degrees",
    "report-all": "combined decomposition and classification sweep",
}

_NEEDS_TILTING_TABLES = {
    "decompose-tensor",
    "decompose-lie",
    "stohr",
    "theorem-a",
    "theorem-c",
    "theorem-37",
    "report-all",
}


def _prime(text: str) -> int:
    try:
        return int(PrimeChar(int(text)))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lietilt",
        description="Exact tilting decompositions of tensor and Lie powers for SL(2) in prime characteristic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--out", type=Path, default=None, help="write output to a file instead of stdout")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help="cache directory (default: $LIETILT_CACHE_DIR or ~/.cache/lietilt)")
    common.add_argument("--no-cache", action="store_true", help="disable the on-disk cache")

    def command(name: str, help_text: str, *, p: str | None = None, r: str = "single"):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        if p == "required":
            sp.add_argument("--p", type=_prime, required=True)
        elif p == "default2":
            sp.add_argument("--p", type=_prime, default=2)
        if r in ("single", "both"):
            sp.add_argument("--r", type=_positive)
        if r in ("range", "both"):
            sp.add_argument("--r-min", type=_positive)
            sp.add_argument("--r-max", type=_positive)
        return sp

    command("decompose-tensor", "tilting multiplicities of the r-fold tensor power", p="required")
    command("decompose-lie", "tilting content and verdict for the degree-r Lie power", p="required")
    command("stohr", "characteristic-2 bidegree summands of the degree-r Lie power")
    command("gzeta", "near-top submodule dimension profile (requires p | r)", p="required")
    command("theorem-a", "characteristic-2 summand classification for degree r > 6", r="both")
    command("theorem-b", "near-top summand predicate", p="required", r="both")
    command("theorem-c", "odd-characteristic classification at p-power-shaped degrees", p="required")
    command("theorem-37", "characteristic-2 tilting dichotomy for degree r > 6", r="both")
    command("report-all", "batch report across a degree range", p="default2", r="range")
    return parser


def _resolve_degrees(args: argparse.Namespace, parser: argparse.ArgumentParser) -> tuple[list[int], bool]:
    """Return (degrees, is_single) from --r or --r-min/--r-max."""
    r = getattr(args, "r", None)
    r_min = getattr(args, "r_min", None)
    r_max = getattr(args, "r_max", None)
    if r is not None:
        if r_min is not None or r_max is not None:
            parser.error("give either --r or --r-min/--r-max, not both")
        return [r], True
    if r_min is not None and r_max is not None:
        if r_min > r_max:
            parser.error("--r-min must not exceed --r-max")
        return list(range(r_min, r_max + 1)), False
    parser.error("missing --r (or --r-min and --r-max)")
    raise AssertionError  # parser.error never returns


def _entries_obj(entries: dict[int, int]) -> dict[str, int]:
    return {str(m): entries[m] for m in sorted(entries, reverse=True)}


def payload_tensor(r: int, p: int) -> dict:
    dec = tensor_power_decomp(r, p)
    return {"r": r, "p": p, "kind": "tensor-power", "basis": dec.basis.value,
            "entries": _entries_obj(dec.entries), "provenance": PROVENANCE["tensor-power"]}


def payload_lie(r: int, p: int) -> dict:
    rep = lie_tilting_decomp(r, p)
    return {"r": r, "p": p, "kind": "lie-power", "basis": rep.decomposition.basis.value,
            "entries": _entries_obj(rep.decomposition.entries), "verdict": rep.verdict.value,
            "provenance": PROVENANCE["lie-power"]}


def payload_stohr(r: int) -> dict:
    summands = []
    for x in stohr_pairs(r):
        dec = stohr_tilting_decomp(x)
        summands.append({"s": x.s, "t": x.t, "mult": x.mult, "entries": _entries_obj(dec.entries)})
    return {"r": r, "p": 2, "kind": "stohr", "summands": summands, "provenance": PROVENANCE["stohr"]}


def payload_gzeta(r: int, p: int) -> dict:
    prof = gzeta_profile(r, p)
    return {"r": r, "p": p, "kind": "gzeta", "dim": prof.dim, "is_p_power": prof.is_p_power,
            "provenance": PROVENANCE["gzeta"]}


def payload_theorem_a(r: int) -> dict:
    rows = [
        {"lambda1": row.partition.lambda1, "lambda2": row.partition.lambda2,
         "expected": row.expected, "evidence": row.evidence.value, "certified": row.certified}
        for row in theorem_a_report(r)
    ]
    return {"r": r, "p": 2, "kind": "theorem-a", "rows": rows, "provenance": PROVENANCE["theorem-a"]}


def payload_theorem_b(r: int, p: int) -> dict:
    return {"r": r, "p": p, "kind": "theorem-b", "holds": theorem_b_predicate(r, p),
            "gzeta_dim": gzeta_dim(r, p) if r % p == 0 else None,
            "provenance": PROVENANCE["theorem-b"]}


def payload_theorem_c(r: int, p: int) -> dict:
    rows = [
        {"clause": row.clause.value, "lambda1": row.partition.lambda1, "lambda2": row.partition.lambda2,
         "claimed": row.claimed, "char_consistent": row.char_consistent}
        for row in theorem_c_report(r, p)
    ]
    return {"r": r, "p": p, "kind": "theorem-c", "rows": rows, "provenance": PROVENANCE["theorem-c"]}


def payload_theorem_37(r: int) -> dict:
    rep = theorem_37_report(r)
    return {"r": r, "p": 2, "kind": "theorem-37", "basis": rep.decomposition.basis.value,
            "entries": _entries_obj(rep.decomposition.entries), "verdict": rep.verdict.value,
            "provenance": PROVENANCE["theorem-37"]}


def payload_report_all(r: int, p: int) -> dict:
    lie = lie_tilting_decomp(r, p)
    out = {
        "r": r,
        "p": p,
        "kind": "report-all",
        "tensor": _entries_obj(tensor_power_decomp(r, p).entries),
        "lie": {"entries": _entries_obj(lie.decomposition.entries), "verdict": lie.verdict.value},
        "gzeta": None,
        "theorem_a_certified": None,
        "theorem_37_verdict": None,
    }
    if r % p == 0:
        prof = gzeta_profile(r, p)
        out["gzeta"] = {"dim": prof.dim, "is_p_power": prof.is_p_power}
    if p == 2 and r > 6:
        out["theorem_a_certified"] = all(row.certified for row in theorem_a_report(r))
        out["theorem_37_verdict"] = theorem_37_report(r).verdict.value
    return out


def _dispatch(args: argparse.Namespace, parser: argparse.ArgumentParser):
    cmd = args.command
    if cmd == "decompose-tensor":
        degrees, _ = _resolve_degrees(args, parser)
        return payload_tensor(degrees[0], args.p)
    if cmd == "decompose-lie":
        degrees, _ = _resolve_degrees(args, parser)
        return payload_lie(degrees[0], args.p)
    if cmd == "stohr":
        degrees, _ = _resolve_degrees(args, parser)
        return payload_stohr(degrees[0])
    if cmd == "gzeta":
        degrees, _ = _resolve_degrees(args, parser)
        return payload_gzeta(degrees[0], args.p)
    if cmd == "theorem-a":
        degrees, single = _resolve_degrees(args, parser)
        payloads = sweep(payload_theorem_a, degrees)
        return payloads[0] if single else payloads
    if cmd == "theorem-b":
        degrees, single = _resolve_degrees(args, parser)
        payloads = sweep(lambda r: payload_theorem_b(r, args.p), degrees)
        return payloads[0] if single else payloads
    if cmd == "theorem-c":
        degrees, _ = _resolve_degrees(args, parser)
        return payload_theorem_c(degrees[0], args.p)
    if cmd == "theorem-37":
        degrees, single = _resolve_degrees(args, parser)
        payloads = sweep(payload_theorem_37, degrees)
        return payloads[0] if single else payloads
    if cmd == "report-all":
        degrees, _ = _resolve_degrees(args, parser)
        return sweep(lambda r: payload_report_all(r, args.p), degrees)
    raise AssertionError(f"unhandled command {cmd!r}")


def _bool_str(value: bool) -> str:
    return "true" if value else "false"


def _csv_rows(payload: dict) -> tuple[list[str], list[list]]:
    kind = payload["kind"]
    if kind in ("tensor-power", "lie-power", "theorem-37"):
        return ["weight", "multiplicity"], [[m, c] for m, c in payload["entries"].items()]
    if kind == "stohr":
        rows = []
        for x in payload["summands"]:
            for m, c in x["entries"].items():
                rows.append([x["s"], x["t"], x["mult"], m, c])
        return ["s", "t", "mult", "weight", "multiplicity"], rows
    if kind == "gzeta":
        return ["r", "p", "dim", "is_p_power"], [
            [payload["r"], payload["p"], payload["dim"], _bool_str(payload["is_p_power"])]
        ]
    if kind == "theorem-a":
        return ["lambda1", "lambda2", "expected", "evidence", "certified"], [
            [row["lambda1"], row["lambda2"], _bool_str(row["expected"]), row["evidence"], _bool_str(row["certified"])]
            for row in payload["rows"]
        ]
    if kind == "theorem-b":
        dim = payload["gzeta_dim"]
        return ["r", "p", "holds", "gzeta_dim"], [
            [payload["r"], payload["p"], _bool_str(payload["holds"]), "" if dim is None else dim]
        ]
    if kind == "theorem-c":
        return ["lambda1", "lambda2", "clause", "claimed", "char_consistent"], [
            [row["lambda1"], row["lambda2"], row["clause"], _bool_str(row["claimed"]), _bool_str(row["char_consistent"])]
            for row in payload["rows"]
        ]
    raise ValueError(f"csv output is not available for {kind}")


def render_csv(payload) -> str:
    payloads = payload if isinstance(payload, list) else [payload]
    if not payloads:
        raise ValueError("nothing to render")
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    header = None
    for item in payloads:
        head, rows = _csv_rows(item)
        if header is None:
            header = head
            writer.writerow(head)
        elif head != header:
            raise ValueError("cannot mix row shapes in one csv")
        writer.writerows(rows)
    return buf.getvalue()


def _pretty_block(payload: dict) -> list[str]:
    kind = payload["kind"]
    if kind in ("tensor-power", "lie-power", "theorem-37"):
        head = f"r={payload['r']} p={payload['p']} {kind} ({payload['basis']} basis)"
        if "verdict" in payload:
            head += f" verdict={payload['verdict']}"
        lines = [head]
        lines += [f"  {m:>4}  {c}" for m, c in payload["entries"].items()]
        return lines
    if kind == "stohr":
        lines = [f"r={payload['r']} p=2 bidegree summands"]
        for x in payload["summands"]:
            entries = ", ".join(f"{m}:{c}" for m, c in x["entries"].items())
            lines.append(f"  (s={x['s']}, t={x['t']}) mult={x['mult']}  {entries}")
        if not payload["summands"]:
            lines.append("  (none)")
        return lines
    if kind == "gzeta":
        return [f"r={payload['r']} p={payload['p']} gzeta dim={payload['dim']} "
                f"p-power={_bool_str(payload['is_p_power'])}"]
    if kind == "theorem-a":
        lines = [f"r={payload['r']} p=2 summand classification"]
        for row in payload["rows"]:
            lines.append(f"  ({row['lambda1']},{row['lambda2']}) expected={_bool_str(row['expected'])} "
                         f"evidence={row['evidence']} certified={_bool_str(row['certified'])}")
        return lines
    if kind == "theorem-b":
        dim = payload["gzeta_dim"]
        tail = "" if dim is None else f" gzeta_dim={dim}"
        return [f"r={payload['r']} p={payload['p']} near-top summand holds={_bool_str(payload['holds'])}{tail}"]
    if kind == "theorem-c":
        lines = [f"r={payload['r']} p={payload['p']} odd-characteristic classification"]
        for row in payload["rows"]:
            lines.append(f"  ({row['lambda1']},{row['lambda2']}) clause={row['clause']} "
                         f"claimed={_bool_str(row['claimed'])} char_consistent={_bool_str(row['char_consistent'])}")
        return lines
    if kind == "report-all":
        lines = [f"r={payload['r']} p={payload['p']} report"]
        lines.append("  tensor: " + ", ".join(f"{m}:{c}" for m, c in payload["tensor"].items()))
        lie = payload["lie"]
        lines.append("  lie:    " + ", ".join(f"{m}:{c}" for m, c in lie["entries"].items())
                     + f"  verdict={lie['verdict']}")
        if payload["gzeta"] is not None:
            lines.append(f"  gzeta:  dim={payload['gzeta']['dim']} "
                         f"p-power={_bool_str(payload['gzeta']['is_p_power'])}")
        if payload["theorem_37_verdict"] is not None:
            lines.append(f"  theorem-a certified={_bool_str(payload['theorem_a_certified'])} "
                         f"theorem-37 verdict={payload['theorem_37_verdict']}")
        return lines
    raise ValueError(f"pretty output is not available for {kind}")


def render(payload, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, separators=(",", ":")) + "\n"
    if fmt == "csv":
        return render_csv(payload)
    payloads = payload if isinstance(payload, list) else [payload]
    lines: list[str] = []
    for item in payloads:
        lines.extend(_pretty_block(item))
    return "\n".join(lines) + "\n"


def _cache_dir(args: argparse.Namespace) -> Path | None:
    if args.no_cache:
        return None
    if args.cache_dir is not None:
        return args.cache_dir
    env = os.environ.get("LIETILT_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "lietilt"


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    cache = None
    if args.command in _NEEDS_TILTING_TABLES:
        directory = _cache_dir(args)
        if directory is not None:
            cache = CharTableCache(directory)
    cache_p = getattr(args, "p", 2)

    try:
        if cache is not None:
            warm_tilting(cache, cache_p)
        payload = _dispatch(args, parser)
        text = render(payload, args.format)
    except SystemExit as exc:
        return int(exc.code or 0)
    except ConsistencyError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if cache is not None:
        flush_tilting(cache, cache_p)
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
