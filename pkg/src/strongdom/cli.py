"""Command-line entry point: ``strongdom {solve,audit,fuzz,search,generate}``.

Exit codes: 0 success (every audit passed or was not applicable), 1 at least
one audit failed, 2 bad input or arguments, 3 a resource cap or node budget
was hit. Reports are JSON lines on stdout or ``--output``.

Environment overrides: ``STRONGDOM_NODE_BUDGET``, ``STRONGDOM_ORACLE_CAP``
(solver defaults) and ``STRONGDOM_FUZZ_MAX_N`` (largest fuzz order, default 12).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable

from strongdom import audits
from strongdom.errors import BudgetExhausted, GraphValidationError, ParseError, ResourceCapError
from strongdom.graph import (
    FIXTURE_IDS,
    Graph,
    corona,
    fixture,
    named_graph,
    random_graph,
)
from strongdom.io import (
    ReportRecord,
    dumps_record,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from strongdom.solver import Mode, SolverConfig, solve
from strongdom.transforms import k_subdivision

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

AUDIT_THEOREMS = ("edge-deletion", "edge-subdivision", "edge-contraction", "corollary",
                  "corona-deletion", "corona-subdivision", "ksub", "fixtures")
FUZZ_THEOREMS = ("edge-deletion", "edge-subdivision", "edge-contraction", "corollary", "ksub")


class UsageError(Exception):
    pass


def load_graph(spec: str, fmt: str | None = None) -> Graph:
    """A file path (edge list, or graph6 for ``.g6`` / ``--format g6``), a
    figure id such as ``fig2-H``, or a shorthand token such as ``C6``."""
    path = Path(spec)
    if path.is_file():
        text = path.read_text()
        fmt = fmt or ("g6" if path.suffix == ".g6" else "el")
        return parse_graph6(text.strip() + "\n") if fmt == "g6" else parse_edge_list(text)
    if spec in FIXTURE_IDS:
        return fixture(spec)[0]
    try:
        return named_graph(spec)
    except GraphValidationError:
        raise ParseError(f"{spec!r} is neither a readable file nor a graph token") from None


class _Writer:
    def __init__(self, output: str | None):
        self._fh = open(output, "w") if output else sys.stdout

    def write(self, rec: ReportRecord) -> None:
        self._fh.write(dumps_record(rec) + "\n")
        self._fh.flush()

    def close(self) -> None:
        if self._fh is not sys.stdout:
            self._fh.close()


# -- solve --------------------------------------------------------------------

def cmd_solve(args) -> int:
    g = load_graph(args.input, args.format)
    config = SolverConfig.from_env()
    if args.budget is not None:
        config = SolverConfig(config.oracle_cap, args.budget)
    out = _Writer(args.output)
    inst = audits.describe(g, source=args.input)
    try:
        res = solve(g, Mode(args.mode), config)
    except BudgetExhausted as exc:
        out.write(ReportRecord("solve", inst, {"lower": exc.lower, "upper": exc.upper},
                               "budget-exhausted", None, None, None,
                               {"mode": args.mode, "nodes": exc.nodes}))
        out.close()
        print(f"budget exhausted after {exc.nodes} nodes: gamma in [{exc.lower}, {exc.upper}]",
              file=sys.stderr)
        return EXIT_RESOURCE
    out.write(ReportRecord("solve", inst, {"gamma": res.gamma}, "applicable", None, None, None,
                           {"mode": res.mode.value, "method": res.method, "nodes": res.nodes,
                            "witness": sorted(res.witness)}))
    out.close()
    if args.output:
        print(f"gamma {res.gamma}")
    return EXIT_OK


# -- audit --------------------------------------------------------------------

def _records_for(theorem: str, args) -> Iterable:
    if theorem == "fixtures":
        ids = [args.fixture] if args.fixture else FIXTURE_IDS
        for fid in ids:
            yield audits.audit_fixture_tightness(fid)
        return
    if theorem in ("corona-deletion", "corona-subdivision"):
        if not (args.g1 and args.g2):
            raise UsageError(f"{theorem} needs --g1 and --g2")
        g1, g2 = load_graph(args.g1), load_graph(args.g2)
        fn = audits.audit_corona_deletion if theorem == "corona-deletion" else audits.audit_corona_subdivision
        for cls in audits.corona_edge_classes(g1, g2):
            yield fn(g1, g2, cls)
        return
    if not args.input:
        raise UsageError(f"{theorem} needs --input")
    g = load_graph(args.input, args.format)
    if theorem == "ksub":
        for k in args.k or [2]:
            yield from audits.audit_ksub(g, k, source=args.input)
        return
    edges = [tuple(args.edge)] if args.edge else list(g.edges)
    for e in edges:
        yield audits.EDGE_AUDITORS[theorem](g, e, source=args.input)


def cmd_audit(args) -> int:
    out = _Writer(args.output)
    failed = False
    try:
        for audit in _records_for(args.theorem, args):
            rec = audit.to_record()
            out.write(rec)
            failed |= rec.passed is False
    finally:
        out.close()
    return EXIT_FAIL if failed else EXIT_OK


# -- fuzz ---------------------------------------------------------------------

def _fuzz_instance(job: tuple) -> list[dict]:
    index, n, p, seed, theorems, ks = job
    g = random_graph(n, p, seed)
    label = {"index": index, "seed": seed}
    recs = []
    edge_theorems = [t for t in theorems if t in audits.EDGE_AUDITORS]
    for audit in audits.audit_all_edges(g, edge_theorems, **label):
        recs.append(audit.to_record().to_dict())
    if "ksub" in theorems:
        for k in ks:
            for audit in audits.audit_ksub(g, k, **label):
                recs.append(audit.to_record().to_dict())
    return recs


def fuzz_jobs(n_min: int, n_max: int, p: float, count: int, seed: int,
              theorems: list[str], ks: list[int]) -> list[tuple]:
    rng = random.Random(seed)
    return [(i, rng.randint(n_min, n_max), p, rng.randrange(2**32), tuple(theorems), tuple(ks))
            for i in range(count)]


def cmd_fuzz(args) -> int:
    cap = int(os.environ.get("STRONGDOM_FUZZ_MAX_N", 12))
    if not 1 <= args.n_min <= args.n_max <= cap:
        raise UsageError(f"need 1 <= n-min <= n-max <= {cap}")
    if not 0.0 <= args.p <= 1.0 or args.count < 0:
        raise UsageError("p must lie in [0, 1] and count must be nonnegative")
    theorems = [t.strip() for t in args.theorems.split(",")] if args.theorems != "all" else list(FUZZ_THEOREMS)
    unknown = set(theorems) - set(FUZZ_THEOREMS)
    if unknown:
        raise UsageError(f"unknown fuzz theorem(s): {sorted(unknown)}")
    ks = args.k or [2, 3, 4]
    jobs = fuzz_jobs(args.n_min, args.n_max, args.p, args.count, args.seed, theorems, ks)
    out = _Writer(args.output)
    out.write(ReportRecord("fuzz-header", {}, {}, "applicable", None, None, None,
                           {"seed": args.seed, "n_min": args.n_min, "n_max": args.n_max, "p": args.p,
                            "count": args.count, "theorems": theorems, "k": ks}))
    tally: dict[str, Counter] = defaultdict(Counter)
    if args.workers > 1 and jobs:
        with ProcessPoolExecutor(args.workers) as pool:
            batches = list(pool.map(_fuzz_instance, jobs, chunksize=4))
    else:
        batches = map(_fuzz_instance, jobs)
    for batch in batches:
        for d in batch:
            rec = ReportRecord.from_dict(d)
            out.write(rec)
            t = tally[rec.theorem]
            t["pass" if rec.passed else "fail" if rec.passed is False else "not-applicable"] += 1
            t["tight_lower"] += bool(rec.tight_lower)
            t["tight_upper"] += bool(rec.tight_upper)
    summary = {name: dict(sorted(c.items())) for name, c in sorted(tally.items())}
    out.write(ReportRecord("fuzz-summary", {}, summary, "applicable", None, None, None, {"seed": args.seed}))
    out.close()
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return EXIT_FAIL if any(c["fail"] for c in tally.values()) else EXIT_OK


# -- search -------------------------------------------------------------------

def cmd_search(args) -> int:
    if args.problem != "equal-del-sub":
        raise UsageError(f"unknown search {args.problem!r}")
    if not 1 <= args.max_n <= 7:
        raise UsageError("max-n must lie in 1..7")
    pool = audits.equality_pool(args.max_n, args.seed, random_count=args.random_count)
    out = _Writer(args.output)
    out.write(ReportRecord("search-header", {}, {}, "applicable", None, None, None,
                           {"seed": args.seed, "max_n": args.max_n, "random_count": args.random_count}))
    hits = audits.search_equal_deletion_subdivision(pool)
    for g, e in hits:
        out.write(ReportRecord("equal-del-sub", audits.describe(g, e), {}, "applicable", True, None, None))
    out.close()
    print(f"{len(hits)} (graph, edge) pairs with equal deletion and subdivision values", file=sys.stderr)
    return EXIT_OK


# -- generate -----------------------------------------------------------------

def cmd_generate(args) -> int:
    family = args.family or (args.spec[0] if args.spec else None)
    params = args.args if args.family else args.spec[1:]
    if family is None:
        raise UsageError("no family given")
    sidecar = None
    if family == "corona":
        if len(params) != 2:
            raise UsageError("corona takes two graph tokens")
        g, lab = corona(load_graph(params[0]), load_graph(params[1]))
        sidecar = {"hubs": list(lab.hubs), "copies": [list(c) for c in lab.copies]}
    elif family == "ksub":
        if len(params) != 1 or args.k is None:
            raise UsageError("ksub takes one graph token and --k")
        g, lab = k_subdivision(load_graph(params[0]), args.k[0])
        sidecar = {"k": lab.k, "superedges": [[list(e), list(v)] for e, v in lab.superedges.items()]}
    elif family == "fixture":
        g = fixture(params[0])[0]
    else:
        from strongdom.graph import FamilySpec, generate
        try:
            g = generate(FamilySpec(family, tuple(int(p) for p in params)))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    text = write_graph6(g) + "\n" if args.format == "g6" else write_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
        if sidecar is not None:
            Path(args.output + ".json").write_text(json.dumps(sidecar, sort_keys=True) + "\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- wiring -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strongdom", description="Strong domination toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute a domination number")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=["el", "g6"])
    p.add_argument("--mode", choices=[m.value for m in Mode], default="strong")
    p.add_argument("--budget", type=int, help="branch-and-bound node budget")
    p.add_argument("--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("audit", help="audit one theorem")
    p.add_argument("theorem", choices=AUDIT_THEOREMS)
    p.add_argument("--input")
    p.add_argument("--format", choices=["el", "g6"])
    group = p.add_mutually_exclusive_group()
    group.add_argument("--edge", nargs=2, type=int, metavar=("U", "V"))
    group.add_argument("--all-edges", action="store_true", help="default when --edge is absent")
    p.add_argument("--k", type=int, action="append")
    p.add_argument("--g1")
    p.add_argument("--g2")
    p.add_argument("--fixture", choices=FIXTURE_IDS)
    p.add_argument("--output")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("fuzz", help="audit random graphs")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--theorems", default="all", help=f"comma list from {','.join(FUZZ_THEOREMS)}")
    p.add_argument("--k", type=int, action="append", help="k values for ksub (default 2, 3, 4)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("search", help="empirical searches")
    p.add_argument("problem", choices=["equal-del-sub"])
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--random-count", type=int, default=200)
    p.add_argument("--output")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("generate", help="write a graph file")
    p.add_argument("spec", nargs="*", help="FAMILY ARGS..., e.g. 'cycle 10' or 'corona C3 K1'")
    p.add_argument("--family")
    p.add_argument("--args", nargs="+", default=[])
    p.add_argument("--k", type=int, action="append")
    p.add_argument("--format", choices=["el", "g6"], default="el")
    p.add_argument("--output")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed early (e.g. ``| head``); the run is incomplete
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_FAIL
    except (ResourceCapError, BudgetExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, ParseError, GraphValidationError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # keep the exit-code contract total
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
