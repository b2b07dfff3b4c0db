"""Command-line front end.

Subcommands:
  count       counting table over a range of vertex counts
  enumerate   signature streams for one vertex count
  build       realize a signature and export the embedded graph
  verify      check construction against the closed-form counts
  congruence  roots of x^2 + x + 1 modulo n

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
Range work fans out to a process pool (--jobs, or TRIHEX_JOBS; 0 = all
cores); results are re-ordered before emission so output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import counting, enumeration, graph
from .errors import InternalInconsistencyError, VerificationFailureError
from .numtheory import factorize, omega_count, solve_fast, solve_naive
from .signature import Signature, has_mirror_symmetry, is_coinciding, orbit, parse_signature

SCHEMA_VERSION = 1

_STREAMS = {
    "all": enumeration.all_signatures,
    "reps": enumeration.trihex_reps,
    "coinciding": enumeration.coinciding_signatures,
    "self-mirror": enumeration.self_mirror_signatures,
    "classes": enumeration.graph_class_reps,
}


class UsageError(Exception):
    pass


def _parse_range(args) -> list[int]:
    if args.v is not None:
        start = end = args.v
    else:
        if args.start is None or args.end is None:
            raise UsageError("give either --v or both --from and --to")
        start, end = args.start, args.end
    if start % 4 or end % 4 or start < 4:
        raise UsageError(f"vertex counts must be multiples of 4 and >= 4: {start}..{end}")
    if start > end:
        raise UsageError(f"empty range: {start} > {end}")
    return list(range(start, end + 1, 4))


def _jobs(args) -> int:
    jobs = args.jobs
    if jobs is None:
        jobs = int(os.environ.get("TRIHEX_JOBS", "1"))
    if jobs < 0:
        raise UsageError(f"--jobs must be nonnegative, got {jobs}")
    return jobs if jobs else os.cpu_count() or 1


def _map_ordered(fn, items, jobs: int):
    """Apply fn over items, preserving order; fan out when jobs > 1."""
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_bytes(data: bytes, args) -> None:
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def cmd_count(args) -> int:
    vs = _parse_range(args)
    reports = _map_ordered(counting.report, vs, _jobs(args))
    if args.format == "csv":
        lines = [",".join(counting.CSV_COLUMNS)]
        lines.extend(r.csv_row() for r in reports)
        _emit("\n".join(lines) + "\n", args)
    else:
        doc = {"schema_version": SCHEMA_VERSION, "reports": [r.as_dict() for r in reports]}
        _emit(json.dumps(doc, indent=2) + "\n", args)
    return 0


def cmd_enumerate(args) -> int:
    if args.v is None:
        raise UsageError("enumerate requires --v")
    vs = _parse_range(args)
    signatures = _STREAMS[args.stream](vs[0])
    if args.format == "text":
        _emit("".join(f"{sig}\n" for sig in signatures), args)
    elif args.format == "csv":
        lines = ["s,b,f"]
        lines.extend(f"{sig.s},{sig.b},{sig.f}" for sig in signatures)
        _emit("\n".join(lines) + "\n", args)
    else:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "V": vs[0],
            "stream": args.stream,
            "signatures": [list(sig.as_tuple()) for sig in signatures],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args)
    return 0


def cmd_build(args) -> int:
    try:
        sig = parse_signature(args.sig)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    g = graph.build(sig)
    if not args.quiet:
        census: dict[int, int] = {}
        for face in graph.faces(g):
            census[len(face)] = census.get(len(face), 0) + 1
        print(
            f"signature {sig}: {g.n} vertices, faces "
            + ", ".join(f"{census[k]} of length {k}" for k in sorted(census)),
            file=sys.stderr,
        )
    _emit_bytes(graph.export(g, args.format), args)
    return 0


def _verify_one(task: tuple[int, bool]) -> tuple[int, list[str]]:
    v, with_graphs = task
    problems: list[str] = []
    try:
        result = enumeration.verify(v)
    except VerificationFailureError as exc:
        return v, [f"{exc.field}: expected {exc.expected}, got {exc.actual}"]
    if not with_graphs:
        return v, problems

    oriented: dict[tuple[int, ...], Signature] = {}
    reflective: set[tuple[int, ...]] = set()
    for rep in result.trihex_reps:
        try:
            g = graph.build(rep)
        except InternalInconsistencyError as exc:
            problems.append(f"build {rep}: {exc}")
            continue
        code = graph.canonical_code(g, use_reflection=True)
        fwd = graph.canonical_code(g, use_reflection=False)
        if (fwd.oriented_aut_count % 3 == 0) != is_coinciding(rep):
            problems.append(f"{rep}: 3-fold symmetry vs automorphism count")
        if graph.is_chiral(g) == has_mirror_symmetry(rep):
            problems.append(f"{rep}: chirality vs mirror symmetry")
        if fwd.code in oriented:
            problems.append(f"{rep}: oriented code collides with {oriented[fwd.code]}")
        oriented[fwd.code] = rep
        reflective.add(code.code)
        for member in orbit(rep).members():
            if member != rep:
                mg = graph.build(member)
                if graph.canonical_code(mg, use_reflection=False).code != fwd.code:
                    problems.append(f"{rep}: equivalent signature {member} builds a different graph")
    if len(reflective) != counting.gamma(v):
        problems.append(f"reflective classes {len(reflective)} != gamma {counting.gamma(v)}")
    return v, problems


def cmd_verify(args) -> int:
    vs = _parse_range(args)
    tasks = [(v, args.with_graphs) for v in vs]
    results = _map_ordered(_verify_one, tasks, _jobs(args))
    lines = []
    failures = 0
    for v, problems in results:
        if problems:
            failures += 1
            lines.append(f"V={v}: FAIL")
            lines.extend(f"  {p}" for p in problems)
        elif not args.quiet:
            lines.append(f"V={v}: ok")
    lines.append(f"checked {len(vs)} vertex counts, {failures} failures")
    _emit("\n".join(lines) + "\n", args)
    return 1 if failures else 0


def cmd_congruence(args) -> int:
    if args.n < 1:
        raise UsageError(f"--n must be positive, got {args.n}")
    fast = solve_fast(factorize(args.n))
    naive = solve_naive(args.n)
    if fast.roots != naive.roots or len(fast.roots) != omega_count(factorize(args.n)):
        raise InternalInconsistencyError(f"solver routes disagree for n={args.n}")
    if args.format == "structured":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "n": args.n,
            "roots": list(fast.roots),
            "count": len(fast.roots),
        }
        _emit(json.dumps(doc, indent=2) + "\n", args)
    else:
        _emit(" ".join(str(x) for x in fast.roots) + f"\ncount {len(fast.roots)}\n", args)
    return 0


def _add_range_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--v", type=int, default=None, help="single vertex count")
    p.add_argument("--from", dest="start", type=int, default=None, help="range start (inclusive)")
    p.add_argument("--to", dest="end", type=int, default=None, help="range end (inclusive)")


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", default=None, help="write to this file instead of stdout")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (0 = all cores)")
    p.add_argument("--quiet", action="store_true", help="suppress diagnostics and per-item progress")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trihex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="counting table for a range of vertex counts")
    _add_range_flags(p)
    p.add_argument("--format", choices=("csv", "structured"), default="csv")
    _add_common_flags(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="signature streams for one vertex count")
    _add_range_flags(p)
    p.add_argument("--stream", choices=sorted(_STREAMS), default="all")
    p.add_argument("--format", choices=("text", "csv", "structured"), default="text")
    _add_common_flags(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("build", help="realize a signature as an embedded graph")
    p.add_argument("--sig", required=True, help="signature as s,b,f")
    p.add_argument("--format", choices=("planar_code", "dot", "structured"), default="planar_code")
    _add_common_flags(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check enumeration against the counting formulas")
    _add_range_flags(p)
    p.add_argument("--with-graphs", action="store_true", help="also run graph-level checks")
    _add_common_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("congruence", help="roots of x^2 + x + 1 modulo n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    _add_common_flags(p)
    p.set_defaults(func=cmd_congruence)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"trihex: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
