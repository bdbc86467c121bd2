"""Command-line entry point.

Exit codes are shared by all subcommands: 0 = the host arrows (or the
command succeeded), 1 = refuted / a check failed, 2 = usage, budget or
internal error.  ``color`` exits 0 when it prints a coloring and 1 when the
host turns out to arrow.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .arrowing import (
    DEFAULT_BUDGET_NODES,
    ArrowingInstance,
    SearchBudgetExceeded,
    arrows,
    check_certificate,
    find_good_coloring,
)
from .constructions import construct_upper, m_min
from .enumeration import (
    MAX_ENUM_EDGES,
    EnumerationBudgetExceeded,
    GraphClassQuery,
    NoArrowingHost,
    VerdictCache,
    compute_size_ramsey,
    enumerate_graphs,
)
from .graph import Graph6Error, GraphError, parse_graph6, to_graph6
from .proof import PreconditionError, TheoremViolation, check_preconditions, proof_color
from .sampling import random_host

EXIT_ARROWS, EXIT_REFUTED, EXIT_ERROR = 0, 1, 2
DEFAULT_SEED = 20240501


def _instance(args) -> ArrowingInstance:
    return ArrowingInstance(args.n, args.p, args.m)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _cache(args) -> VerdictCache:
    return VerdictCache(args.cache) if args.cache else VerdictCache.default()


def cmd_arrow(args) -> int:
    g = parse_graph6(args.graph)
    cert = arrows(g, _instance(args), args.budget_nodes, args.time_limit)
    text = cert.to_json()
    if args.cert:
        Path(args.cert).write_text(text + "\n", encoding="utf-8")
    verdict = "arrows" if cert.arrows else "refuted"
    print(f"{verdict}: {to_graph6(g)} -> {cert.instance}: {cert.arrows}")
    print(f"nodes={cert.stats.nodes} wall={cert.stats.wall_time:.3f}s")
    print(text)
    return EXIT_ARROWS if cert.arrows else EXIT_REFUTED


def cmd_construct(args) -> int:
    print(to_graph6(construct_upper(args.n, args.p, args.m)))
    return 0


def cmd_color(args) -> int:
    g = parse_graph6(args.graph)
    inst = _instance(args)
    try:
        check_preconditions(g, inst)
    except PreconditionError as exc:
        if not args.force_search:
            print(f"precondition violated: {exc} (use --force-search)", file=sys.stderr)
            return EXIT_ERROR
        witness, stats = find_good_coloring(g, inst, args.budget_nodes, args.time_limit)
        if witness is None:
            print(f"arrows: no good coloring exists (nodes={stats.nodes})")
            return EXIT_REFUTED
        print("red " + " ".join(map(str, sorted(witness.red))))
        print("trace: exhaustive search (theorem preconditions not met)")
        return 0
    try:
        coloring, trace = proof_color(g, inst, budget_nodes=args.budget_nodes)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print("red " + " ".join(map(str, sorted(coloring.red))))
    print(trace.to_json() if args.trace == "json" else trace.to_text())
    return 0


def cmd_rc(args) -> int:
    inst = _instance(args)
    try:
        result = compute_size_ramsey(inst, args.connected, args.e_max, _cache(args), args.budget_nodes)
    except NoArrowingHost as exc:
        kind = "r_c" if args.connected else "r"
        print(f"{kind} {inst} >= {exc.lower_bound} (no arrowing host up to {args.e_max} edges)")
        for e, c in sorted(exc.refuted_counts.items()):
            print(f"  e={e}: {c} hosts refuted")
        return EXIT_ERROR
    print(f"value {result.value}")
    print(result.summary())
    return 0


def verify_theorem(n_max: int, p_max: int, k: int, samples: int, seed: int,
                   enum_limit: int, budget_nodes: int, out=print) -> bool:
    ok = True
    for n in range(1, n_max + 1):
        for p in range(1, p_max + 1):
            for m in range(m_min(n, p), m_min(n, p) + k + 1):
                inst = ArrowingInstance(n, p, m)
                cert = arrows(construct_upper(n, p, m), inst, budget_nodes)
                upper = "upper verified" if cert.arrows else "UPPER FAILED"
                ok &= cert.arrows
                budget = n * (m + p) - 2
                fallbacks = 0
                if budget < 1:
                    lower, hosts = "lower vacuous", []
                elif budget <= enum_limit:
                    hosts = list(enumerate_graphs(GraphClassQuery(budget, True)))
                    lower = f"lower enumerated ({len(hosts)} hosts)"
                else:
                    rng = random.Random(f"{seed}-{n}-{p}-{m}")
                    hosts = [random_host(rng, n, p, m, budget) for _ in range(samples)]
                    lower = f"lower sampled ({len(hosts)} hosts)"
                for g in hosts:
                    _, trace = proof_color(g, inst, budget_nodes=budget_nodes)
                    fallbacks += trace.count("FALLBACK_SEARCH")
                out(f"n={n} p={p} m={m}: {upper}, {lower}, "
                    f"construction nodes={cert.stats.nodes}, fallbacks={fallbacks}")
    return ok


def cmd_verify_theorem(args) -> int:
    try:
        ok = verify_theorem(args.n_max, args.p_max, args.k, args.samples, args.seed,
                            args.enum_limit, args.budget_nodes)
    except TheoremViolation as exc:
        print(f"THEOREM VIOLATION: {exc}", file=sys.stderr)
        return EXIT_ERROR
    print("all checks passed" if ok else "some checks FAILED")
    return 0 if ok else EXIT_REFUTED


def cmd_check(args) -> int:
    bad = 0
    total = 0
    for line in Path(args.cert).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        total += 1
        record = json.loads(line)
        if not check_certificate(record):
            bad += 1
            print(f"INVALID: {record.get('graph6')}")
    print(f"{total - bad}/{total} certificates valid")
    return 0 if bad == 0 else EXIT_REFUTED


def cmd_enumerate(args) -> int:
    q = GraphClassQuery(args.edges, args.connected, args.max_vertices)
    for g in enumerate_graphs(q):
        print(to_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sizeramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_flags(sp, required=True):
        sp.add_argument("-n", type=_positive, required=required, help="number of red stars")
        sp.add_argument("-p", type=_positive, required=required, help="red star size")
        sp.add_argument("-m", type=_positive, required=required, help="blue star size")

    def search_flags(sp):
        sp.add_argument("--budget-nodes", type=_positive, default=DEFAULT_BUDGET_NODES)
        sp.add_argument("--time-limit", type=float, default=None, help="soft wall-clock limit (s)")

    sp = sub.add_parser("arrow", help="decide G -> (nK_1,p, K_1,m) and emit a certificate")
    sp.add_argument("-g", "--graph", required=True, help="host in graph6")
    instance_flags(sp)
    search_flags(sp)
    sp.add_argument("--cert", help="write the JSON certificate here")
    sp.set_defaults(func=cmd_arrow)

    sp = sub.add_parser("construct", help="print the upper-bound host in graph6")
    instance_flags(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("color", help="good coloring of a sub-threshold host")
    sp.add_argument("-g", "--graph", required=True)
    instance_flags(sp)
    search_flags(sp)
    sp.add_argument("--trace", choices=("text", "json"), default="text")
    sp.add_argument("--force-search", action="store_true",
                    help="outside the theorem's range, fall back to exact search")
    sp.set_defaults(func=cmd_color)

    sp = sub.add_parser("rc", help="exact (connected) size Ramsey number by enumeration")
    instance_flags(sp)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--connected", dest="connected", action="store_true", default=True)
    group.add_argument("--any", dest="connected", action="store_false")
    sp.add_argument("--e-max", type=_positive, default=10)
    sp.add_argument("--cache", help="JSON Lines verdict cache (default: $SIZERAMSEY_CACHE_DIR)")
    search_flags(sp)
    sp.set_defaults(func=cmd_rc)

    sp = sub.add_parser("verify-theorem", help="probe the threshold on small (n, p)")
    sp.add_argument("--n-max", type=_positive, default=2)
    sp.add_argument("--p-max", type=_positive, default=2)
    sp.add_argument("-k", type=int, default=1, help="also test m_min+1 .. m_min+k")
    sp.add_argument("--samples", type=_positive, default=200)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--enum-limit", type=int, default=8,
                    help="enumerate all hosts when the edge budget is at most this")
    search_flags(sp)
    sp.set_defaults(func=cmd_verify_theorem)

    sp = sub.add_parser("check", help="re-validate certificates without search")
    sp.add_argument("cert", help="file with one JSON certificate per line")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("enumerate", help="stream isomorph-free hosts as graph6")
    sp.add_argument("-e", "--edges", type=_positive, required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--connected", dest="connected", action="store_true", default=True)
    group.add_argument("--any", dest="connected", action="store_false")
    sp.add_argument("--max-vertices", type=_positive, default=None)
    sp.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify-theorem" and args.k < 0:
        parser.error("-k must be non-negative")
    if getattr(args, "e_max", 0) and args.e_max > MAX_ENUM_EDGES:
        parser.error(f"--e-max is capped at {MAX_ENUM_EDGES}")
    try:
        return args.func(args)
    except (Graph6Error, GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (SearchBudgetExceeded, EnumerationBudgetExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
