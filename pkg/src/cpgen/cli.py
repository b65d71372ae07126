"""Command line front end: ``cpg gen | filter | classify | construct | oracle``."""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import canon
from .ccpm import CCPMGenerator, Constraints, Split
from .graph import encode_graph6
from .orderly import OrderlyGenerator
from .props import is_three_edge_colorable

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_UNSUPPORTED = 0, 1, 2, 3


def _order(text):
    n = int(text)
    if n % 2 or n < 6:
        raise argparse.ArgumentTypeError(f"order must be even and at least 6, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cpg", description="Cycle permutation graph generator and tools.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate cycle permutation graphs of one order")
    g.add_argument("n", type=_order)
    g.add_argument("--girth", type=int, default=0, help="lower bound on the girth")
    g.add_argument("--non-hamiltonian", action="store_true")
    g.add_argument("--snarks-only", action="store_true", help="keep only non-3-edge-colourable graphs (implies --non-hamiltonian)")
    g.add_argument("--algorithm", choices=("ccpm", "orderly"), default="ccpm")
    g.add_argument("--dedup", action="store_true", help="drop isomorphic repeats (orderly output)")
    g.add_argument("--count-only", action="store_true")
    g.add_argument("--res", type=int, default=0)
    g.add_argument("--mod", type=int, default=1)
    g.add_argument("--split-depth", type=int, default=None)
    g.add_argument("--jobs", type=int, default=1, help="worker processes; output stays in slice order")
    g.add_argument("--output", "-o", default=None, help="graph6 output file (default stdout)")

    f = sub.add_parser("filter", help="check graph6 input for permutation 2-factors")
    _filter_args(f)
    c = sub.add_parser("classify", help="same as filter --classify")
    _filter_args(c)

    k = sub.add_parser("construct", help="build a non-hamiltonian CPG from bad permutation blocks")
    k.add_argument("n", type=int)
    k.add_argument("--output", "-o", default=None)

    o = sub.add_parser("oracle", help="slow reference generator (small orders)")
    o.add_argument("n", type=_order)
    o.add_argument("--girth", type=int, default=0)
    o.add_argument("--non-hamiltonian", action="store_true")
    o.add_argument("--max-order", type=int, default=18)
    o.add_argument("--output", "-o", default=None)
    return p


def _filter_args(f):
    f.add_argument("--enumerate-factors", action="store_true", help="count all permutation 2-factors")
    f.add_argument("--classify", action="store_true", help="add girth, hamiltonicity, colourability, cyclic 5-connectivity")
    f.add_argument("--input", "-i", default=None, help="graph6 input file (default stdin)")
    f.add_argument("--plot", default=None, help="write a bar chart of the counts to this image file")


def _open_out(path):
    if path is None or path == "-":
        return sys.stdout.buffer, False
    return open(path, "wb"), True


# -- gen ---------------------------------------------------------------------


def _run_slice(n, constraints, split, algorithm, snarks_only, keep_graphs):
    """Run one slice; returns ``(raw_count, kept)`` where kept holds ``(cert or None, graph6)``."""
    kept = []
    raw = 0

    def sink(g, *_):
        nonlocal raw
        raw += 1
        if snarks_only and is_three_edge_colorable(g):
            return
        cert = canon.cert(g) if algorithm == "orderly" else None
        kept.append((cert, encode_graph6(g) if keep_graphs else None))

    if algorithm == "ccpm":
        CCPMGenerator(n, constraints, split).run(sink)
    else:
        OrderlyGenerator(n, constraints, split).run(sink)
    return raw, kept


def cmd_gen(args) -> int:
    constraints = Constraints(girth=args.girth, nonhamiltonian=args.non_hamiltonian or args.snarks_only)
    jobs = max(args.jobs, 1)
    # each worker takes one residue of the finer modulus mod * jobs
    splits = [Split(args.res + t * args.mod, args.mod * jobs, args.split_depth) for t in range(jobs)]
    keep_graphs = not args.count_only
    tasks = [(args.n, constraints, s, args.algorithm, args.snarks_only, keep_graphs) for s in splits]
    if jobs == 1:
        results = [_run_slice(*tasks[0])]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_slice, *zip(*tasks)))

    raw = sum(r for r, _ in results)
    seen = set()
    lines = []
    for _, kept in results:
        for cert, g6 in kept:
            if args.dedup and cert is not None:
                if cert in seen:
                    continue
                seen.add(cert)
            lines.append(g6)

    label = constraints.describe()
    if args.snarks_only:
        label += ",snark"
    if not args.count_only:
        try:
            out, close = _open_out(args.output)
            try:
                for g6 in lines:
                    out.write(g6 + b"\n")
                out.flush()
            finally:
                if close:
                    out.close()
        except OSError as exc:
            print(f"cpg: cannot write output: {exc}", file=sys.stderr)
            return EXIT_IO
    if args.algorithm == "orderly" and not args.dedup:
        label += ",raw"
    print(f"{args.n}\t{label}\t{len(lines)}", file=sys.stderr)
    if args.algorithm == "orderly" and args.dedup:
        print(f"{args.n}\t{constraints.describe()},raw\t{raw}", file=sys.stderr)
    return EXIT_OK


# -- filter / classify -------------------------------------------------------


def cmd_filter(args, classify=False) -> int:
    from .filter import RECORD_HEADER, audit_stream

    classify = classify or args.classify
    try:
        stream = open(args.input, "rb") if args.input else sys.stdin.buffer
    except OSError as exc:
        print(f"cpg: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    out = sys.stdout
    print(RECORD_HEADER, file=out)
    try:
        report = audit_stream(stream, classify=classify, enumerate_factors=args.enumerate_factors,
                              on_record=lambda r: print(r.row(), file=out))
    finally:
        if args.input:
            stream.close()
    for line, msg in report.errors:
        print(f"cpg: line {line}: {msg}", file=sys.stderr)
    for line in report.count_lines():
        print(line, file=sys.stderr)
    if args.plot:
        from .report import plot_counts

        try:
            plot_counts(report.counts(), args.plot, title="audit counts")
        except OSError as exc:
            print(f"cpg: cannot write plot: {exc}", file=sys.stderr)
            return EXIT_IO
    return EXIT_IO if report.errors else EXIT_OK


# -- construct / oracle --------------------------------------------------------


def cmd_construct(args) -> int:
    from .klee import UnsupportedOrder, construct_nonhamiltonian

    try:
        g = construct_nonhamiltonian(args.n)
    except UnsupportedOrder as exc:
        print(f"cpg: unsupported order: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    return _write_graphs([g], args.output, args.n, "nonham,constructed")


def cmd_oracle(args) -> int:
    from .oracle import OracleTooLarge, generate_by_lists

    constraints = Constraints(girth=args.girth, nonhamiltonian=args.non_hamiltonian)
    try:
        found = generate_by_lists(args.n, constraints, max_order=args.max_order)
    except OracleTooLarge as exc:
        print(f"cpg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    graphs = [found[c] for c in sorted(found)]
    return _write_graphs(graphs, args.output, args.n, constraints.describe() + ",oracle")


def _write_graphs(graphs, path, n, label) -> int:
    try:
        out, close = _open_out(path)
        try:
            for g in graphs:
                out.write(encode_graph6(g) + b"\n")
            out.flush()
        finally:
            if close:
                out.close()
    except OSError as exc:
        print(f"cpg: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    print(f"{n}\t{label}\t{len(graphs)}", file=sys.stderr)
    return EXIT_OK


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "gen":
        if args.mod < 1 or not 0 <= args.res < args.mod:
            parser.error(f"need 0 <= res < mod, got res={args.res} mod={args.mod}")
        if args.girth < 0 or args.jobs < 1:
            parser.error("girth must be non-negative and jobs positive")
        if args.split_depth is not None and args.split_depth < 0:
            parser.error("split depth must be non-negative")
        return cmd_gen(args)
    if args.command == "filter":
        return cmd_filter(args)
    if args.command == "classify":
        return cmd_filter(args, classify=True)
    if args.command == "construct":
        return cmd_construct(args)
    if args.command == "oracle":
        return cmd_oracle(args)
    parser.error(f"unknown command {args.command}")
    return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
