"""Command-line entry point: ``symgraph {check,solve,generate,analyze,sweep}``.

Exit codes: 0 success (``check``: feasible), 1 usage, I/O or format error,
2 infeasible quotient.
"""
from __future__ import annotations

import argparse
import sys

from .automorphism import orbits
from .cardinality import scale, solve_minimal
from .errors import DomainError, InputError, SearchBudgetExceeded
from .feasibility import build_system, is_feasible
from .graphio import read_edge_list, to_dot, write_edge_list
from .metrics import alignment_metric, summarize, sweep, write_records_csv, write_summary_csv
from .quotient import coarsest_equitable, parse_quotient
from .rewire import randomize
from .rng import derive_seed
from .wiring import generate

EXIT_OK, EXIT_ERROR, EXIT_INFEASIBLE = 0, 1, 2

FORMATS = """\
quotient file (.qg), 1-indexed clusters, '#' comments:
  quotient 3          # p clusters
  self 1 1            # each vertex of cluster 1 has 1 neighbor in cluster 1
  self 2 2
  edge 1 2 2 1        # edge j k w0 w1 (j < k): vertices of j see w0 of k,
  edge 1 3 1 2        #   vertices of k see w1 of j

graph edge list (.el), 1-indexed:
  graph 5
  node 1 1            # node <id> <cluster>, cluster 0 = unassigned
  edge 1 4 edge:1-2   # edge u v [self:<i> | edge:<j>-<k>], u < v

sweep CSV:   s,trial,n,mbc,oag,f
summary CSV: s,mean_f,std_f,trials
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _scales(text: str) -> list[int]:
    out = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if ".." in chunk:
            a, b = chunk.split("..", 1)
            out.extend(range(int(a), int(b) + 1))
        elif chunk:
            out.append(int(chunk))
    if not out or min(out) < 1:
        raise argparse.ArgumentTypeError(f"invalid scale list {text!r}")
    return out


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _seed(text):
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"seed must fit in an unsigned 64-bit integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="symgraph",
        description="Generate graphs realizing a quotient graph and compare their MBC with their automorphism orbits.",
        epilog=FORMATS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", help="feasibility verdict for a quotient file", epilog=FORMATS,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("quotient")

    p = sub.add_parser("solve", help="minimal cluster sizes for a quotient file", epilog=FORMATS,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("quotient")
    p.add_argument("--scale", type=_positive_int, default=1)

    p = sub.add_parser("generate", help="wire a full graph from a quotient file", epilog=FORMATS,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("quotient")
    p.add_argument("--scale", type=_positive_int, default=1)
    p.add_argument("--randomize", action="store_true", help="apply quotient-preserving edge swaps")
    p.add_argument("--swaps", type=float, default=10.0, help="swap attempts per edge (default 10)")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--b-random", action="store_true", help="seeded-random offset compositions")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--dot")

    p = sub.add_parser("analyze", help="MBC, orbits and alignment of an edge-list graph", epilog=FORMATS,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("graph")
    p.add_argument("--mbc", action="store_true")
    p.add_argument("--oag", action="store_true")
    p.add_argument("--metric", action="store_true")

    p = sub.add_parser("sweep", help="alignment metric over scale factors", epilog=FORMATS,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("quotient")
    p.add_argument("--scales", type=_scales, required=True, help="'a..b' inclusive and/or comma list")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=_seed, required=True)
    p.add_argument("--swaps", type=float, default=10.0)
    p.add_argument("--b-random", action="store_true")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--summary", help="write the per-scale summary here instead of stderr")
    return parser


def _read(path):
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


def _load_solution(path, s):
    q = parse_quotient(_read(path))
    sys_ = build_system(q)
    res = is_feasible(sys_)
    if not res:
        return q, sys_, res, None
    return q, sys_, res, scale(solve_minimal(sys_), s)


def _fmt(vec):
    return " ".join(str(v) for v in vec)


def _cmd_check(args, out):
    q, sys_, res, _ = _load_solution(args.quotient, 1)
    if res:
        print("FEASIBLE", file=out)
        print(f"x_primitive {_fmt(res.certificate)}", file=out)
        print(f"x_lower {_fmt(sys_.x_lower)}", file=out)
        return EXIT_OK
    print("INFEASIBLE", file=out)
    print("witness_cycle " + " ".join(f"{j + 1}-{k + 1}" for j, k in res.witness), file=out)
    return EXIT_INFEASIBLE


def _infeasible(res, err):
    cycle = " ".join(f"{j + 1}-{k + 1}" for j, k in res.witness)
    print(f"symgraph: infeasible quotient, inconsistent cycle {cycle}", file=err)
    return EXIT_INFEASIBLE


def _cmd_solve(args, out, err):
    q, sys_, res, sol = _load_solution(args.quotient, args.scale)
    if sol is None:
        return _infeasible(res, err)
    print(f"x {_fmt(sol.x)}", file=out)
    print(f"n {_fmt(sol.n)}", file=out)
    print(f"scale {sol.s}", file=out)
    print(f"total {sol.total_n}", file=out)
    return EXIT_OK


def _cmd_generate(args, out, err):
    q, sys_, res, sol = _load_solution(args.quotient, args.scale)
    if sol is None:
        return _infeasible(res, err)
    b_seed = derive_seed(args.seed, "b") if args.b_random else None
    g, part = generate(q, sol, b_seed=b_seed)
    if args.randomize:
        g = randomize(g, part, derive_seed(args.seed, "swap"), args.swaps)
    _write(args.output, write_edge_list(g, part))
    if args.dot:
        _write(args.dot, to_dot(g, part))
    print(f"n {g.n}", file=out)
    print(f"edges {len(g.edges)}", file=out)
    print(f"sizes {_fmt(sol.n)}", file=out)
    return EXIT_OK


def _cmd_analyze(args, out):
    g, _ = read_edge_list(_read(args.graph))
    show_all = not (args.mbc or args.oag or args.metric)
    print(f"n {g.n}", file=out)
    mbc = oag = None
    if show_all or args.mbc or args.metric:
        part = coarsest_equitable(g)
        mbc = part.p
        if show_all or args.mbc:
            print(f"mbc {mbc}", file=out)
            print(f"mbc_sizes {_fmt(sorted(part.sizes, reverse=True))}", file=out)
    if show_all or args.oag or args.metric:
        o = orbits(g)
        oag = o.size
        if show_all or args.oag:
            print(f"oag {oag}", file=out)
            print(f"oag_sizes {_fmt(o.orbit_sizes)}", file=out)
            print(f"generators {len(o.generators)}", file=out)
    if show_all or args.metric:
        f = alignment_metric(g.n, mbc, oag)
        note = " (degenerate: n == mbc)" if g.n == mbc else ""
        print(f"f {f} {float(f):.6f}{note}", file=out)
    return EXIT_OK


def _cmd_sweep(args, out, err):
    q = parse_quotient(_read(args.quotient))
    res = is_feasible(build_system(q))
    if not res:
        return _infeasible(res, err)
    if args.trials < 0:
        raise InputError("--trials must be nonnegative")
    records = sweep(q, args.scales, args.trials, args.seed, args.swaps, args.b_random, args.workers)
    with open(args.output, "w", newline="") as fh:
        write_records_csv(records, fh)
    summary = summarize(records)
    if args.summary:
        with open(args.summary, "w", newline="") as fh:
            write_summary_csv(summary, fh)
    else:
        write_summary_csv(summary, err)
    print(f"records {len(records)}", file=out)
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"symgraph: {exc}", file=err)
        return EXIT_ERROR
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "check":
            return _cmd_check(args, out)
        if args.command == "solve":
            return _cmd_solve(args, out, err)
        if args.command == "generate":
            return _cmd_generate(args, out, err)
        if args.command == "analyze":
            return _cmd_analyze(args, out)
        return _cmd_sweep(args, out, err)
    except (OSError, InputError, DomainError, SearchBudgetExceeded) as exc:
        msg = str(exc).replace("\n", " ")
        print(f"symgraph: {msg}", file=err)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
