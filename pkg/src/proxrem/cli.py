"""Command-line front end.

Subcommands: ``compute`` (invariants of one graph), ``verify`` (all
bounds, optionally with the certified inequality chains), ``extremal``
(family generation and sharpness gaps), ``oracle`` (exhaustive sweeps).

Exit codes: 0 success, 1 a verified claim failed (counterexample found),
2 usage or input error.  Output is byte-identical for identical inputs
and flags; ``--timings`` adds wall-clock data and is off by default so
the default output stays deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .construction import ConstructionError, bound_report
from .extremal import ExtremalParams, extremal_graph, sharpness_report, valid_Deltas
from .graphs import ParseError, all_pairs_distances, parse_graph, render_graph
from .invariants import invariant_summary
from .oracle import (
    DEFAULT_SEED,
    exhaustive_bound_check,
    lemma_sweep,
    parallel_map,
)
from . import report as rpt

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_USAGE = 2


def _emit(doc: dict, timings: dict | None) -> None:
    if timings is not None:
        doc["timings"] = timings
    print(json.dumps(doc, indent=2))


def _load_graph(path: str):
    text = Path(path).read_text()
    return parse_graph(text)


def _cmd_compute(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    g = _load_graph(args.input)
    inv = invariant_summary(g)
    timings = {"seconds": time.perf_counter() - t0} if args.timings else None
    if args.format == "text":
        print(f"order {g.n}, edges {g.edge_count()}")
        print(f"proximity {rpt.frac_str(inv.proximity)}  median {list(inv.median)}")
        print(f"remoteness {rpt.frac_str(inv.remoteness)}  antimedian {list(inv.antimedian)}")
        print("transmissions " + " ".join(str(t) for t in inv.transmissions))
    else:
        _emit(rpt.compute_document(g, inv, args.input), timings)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    g = _load_graph(args.input)
    d = all_pairs_distances(g)
    if not d.all_finite():
        print("error: input graph is disconnected", file=sys.stderr)
        return EXIT_USAGE
    report = bound_report(g, include_chains=args.chain, oracle=d)
    timings = {"seconds": time.perf_counter() - t0} if args.timings else None
    _emit(rpt.verify_document(g, report, args.input), timings)
    return EXIT_OK if report.all_hold() else EXIT_CLAIM_FAILED


def _cmd_extremal(args: argparse.Namespace) -> int:
    if args.sweep is not None:
        lo, hi = args.sweep
        records = parallel_map(
            sharpness_report,
            [
                ExtremalParams(n, args.delta, D)
                for n in range(lo, hi + 1)
                for D in valid_Deltas(n, args.delta)
            ],
            args.jobs,
        )
        rows = "\n".join(rpt.sharpness_csv_rows(records)) + "\n"
        if args.csv:
            Path(args.csv).write_text(rows)
            print(json.dumps({"records": len(records), "ok": all(r.within_limits for r in records)}))
        else:
            sys.stdout.write(rows)
        return EXIT_OK if all(r.within_limits for r in records) else EXIT_CLAIM_FAILED

    if args.n is None or args.Delta is None:
        print("error: --n and --Delta are required without --sweep", file=sys.stderr)
        return EXIT_USAGE
    try:
        params = ExtremalParams(args.n, args.delta, args.Delta)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.sharpness:
        record = sharpness_report(params)
        _emit(rpt.sharpness_document(record), None)
        return EXIT_OK if record.within_limits else EXIT_CLAIM_FAILED
    text = render_graph(extremal_graph(params))
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_oracle_lemma_sweep(args: argparse.Namespace) -> int:
    report = lemma_sweep(args.max_n, args.max_order, jobs=args.jobs)
    if args.csv:
        Path(args.csv).write_text("\n".join(rpt.sweep_csv_rows(report)) + "\n")
    if args.instances:
        from .oracle import instance_csv_rows

        with open(args.instances, "w") as fh:
            for row in instance_csv_rows(args.max_n, args.max_order):
                fh.write(row + "\n")
    _emit(rpt.sweep_document(report), None)
    if report.violations:
        for i, v in enumerate(report.violations):
            _dump_violation(v, i)
        return EXIT_CLAIM_FAILED
    return EXIT_OK


def _dump_violation(v, index: int) -> None:
    from .oracle import prufer_decode
    from .weighted import WeightFunction

    tree = prufer_decode(v.prufer, v.order)
    base = Path(f"counterexample-{index}")
    base.with_suffix(".edges").write_text(render_graph(tree))
    base.with_suffix(".weights").write_text(
        WeightFunction.of(v.weights).to_lines()
    )
    print(
        f"violation[{index}]: kind={v.kind} order={v.order} heavy={v.heavy} "
        f"observed={v.observed} bound={rpt.frac_str(v.bound)} "
        f"(dumped to {base}.edges / {base}.weights)",
        file=sys.stderr,
    )


def _cmd_oracle_bound_check(args: argparse.Namespace) -> int:
    if args.trees is not None:
        report = exhaustive_bound_check(args.trees, "exhaustive-trees", jobs=args.jobs)
    elif args.random is not None:
        report = exhaustive_bound_check(
            args.max_n, "random", samples=args.random, seed=args.seed, jobs=args.jobs
        )
    else:
        print("error: one of --trees or --random is required", file=sys.stderr)
        return EXIT_USAGE
    _emit(rpt.bound_check_document(report), None)
    return EXIT_OK if report.ok else EXIT_CLAIM_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="proxrem",
        description="Exact proximity/remoteness invariants and bound verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariants of one edge-list graph")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--timings", action="store_true", help="add wall-clock timings")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify", help="check every bound on one graph")
    p.add_argument("input", help="edge-list file")
    p.add_argument("--chain", action="store_true", help="certify the inequality chains")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("extremal", help="generate the near-extremal family")
    p.add_argument("--n", type=int)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--Delta", type=int, dest="Delta")
    p.add_argument("--sharpness", action="store_true", help="measure bound gaps")
    p.add_argument("--sweep", type=int, nargs=2, metavar=("N_LO", "N_HI"),
                   help="sharpness CSV over all valid (n, Delta) in the range")
    p.add_argument("--csv", help="write sweep CSV to a file")
    p.add_argument("--output", "-o", help="write the graph to a file")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("oracle", help="brute-force verification sweeps")
    osub = p.add_subparsers(dest="oracle_command", required=True)

    q = osub.add_parser("lemma-sweep", help="exhaustive weighted-distance bound sweep")
    q.add_argument("--max-n", type=int, default=9, help="largest total weight")
    q.add_argument("--max-order", type=int, default=7, help="largest tree order")
    q.add_argument("--csv", help="write per-(total,heavy) records to a file")
    q.add_argument("--instances", help="write the per-instance CSV to a file")
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=_cmd_oracle_lemma_sweep)

    q = osub.add_parser("bound-check", help="verify all bounds on trees or random graphs")
    group = q.add_mutually_exclusive_group()
    group.add_argument("--trees", type=int, help="exhaustive over trees up to this order")
    group.add_argument("--random", type=int, help="number of random connected graphs")
    q.add_argument("--max-n", type=int, default=60, help="largest random order")
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    q.add_argument("--jobs", type=int, default=1)
    q.set_defaults(func=_cmd_oracle_bound_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError, PermissionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"construction invariant failed: {exc}", file=sys.stderr)
        return EXIT_CLAIM_FAILED


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
