"""Command-line entry point.

Exit codes: 0 pass, 1 check failure, 2 usage error, 3 budget exceeded.
"""

import argparse
import signal
import sys
import time

from . import extremal
from ._backend import kernels
from .cache import CensusCache, atomic_write_text
from .census import count_cycles, count_triangles, edge_plus_triangle
from .constructions import blow_up, complete, cycle, extremal_construction, path, star, turan
from .detection import ForbiddenFamily, find_packing
from .errors import BudgetError, Graph6ParseError, InvalidParameterError, TuranLabError
from .graph import empty
from .graph6 import decode_graph6, encode_graph6
from .report import ReportDocument

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(TuranLabError):
    pass


def parse_range(text):
    """``"4..9"`` -> [4, ..., 9]; ``"3,5"`` -> [3, 5]; ``"7"`` -> [7]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}; use A..B or a,b,c") from None


def parse_family(text):
    try:
        t, m = (int(x) for x in text.replace("x", ",").split(","))
        return ForbiddenFamily(t, m)
    except (ValueError, InvalidParameterError) as exc:
        raise argparse.ArgumentTypeError(f"invalid family {text!r}: expected t,m ({exc})") from None


def _ints(params, count, what):
    if len(params) != count:
        raise UsageError(f"{what} takes {count} integer parameter(s), got {len(params)}")
    return params


CONSTRUCTORS = {
    "empty": (1, empty),
    "complete": (1, complete),
    "path": (1, path),
    "cycle": (1, cycle),
    "star": (1, star),
    "turan": (2, turan),
    "extremal": (2, extremal_construction),
}


def cmd_construct(args, out):
    if args.type == "blowup-cycle":
        if len(args.params) < 4:
            raise UsageError("blowup-cycle takes the cycle length followed by one part size per vertex")
        m, *sizes = args.params
        g = blow_up(cycle(m), sizes)
    else:
        arity, fn = CONSTRUCTORS[args.type]
        g = fn(*_ints(args.params, arity, args.type))
    line = encode_graph6(g) + "\n"
    if args.out:
        atomic_write_text(args.out, line)
    else:
        out.write(line)
    return EXIT_OK


def _read_graphs(args):
    lines = list(args.graph6 or [])
    if args.input == "-":
        lines.extend(line.rstrip("\n") for line in sys.stdin if line.strip())
    elif args.input:
        with open(args.input, encoding="ascii") as fh:
            lines.extend(line.rstrip("\n") for line in fh if line.strip())
    if not lines:
        raise UsageError("no graph6 input given")
    return [decode_graph6(s) for s in lines]


def cmd_count(args, out):
    what = args.what
    for g in _read_graphs(args):
        if what == "triangles":
            value = count_triangles(g)
        elif what == "edges":
            value = g.edge_count()
        elif what == "e_plus_t":
            value = edge_plus_triangle(g)
        elif what.startswith("cycles:"):
            value = count_cycles(g, int(what.split(":", 1)[1]))
        else:
            raise UsageError(f"unknown count {what!r}")
        out.write(f"{value}\n")
    return EXIT_OK


def cmd_check(args, out):
    for g in _read_graphs(args):
        w = find_packing(g, args.family)
        if w is None:
            out.write("FREE\n")
        else:
            out.write("PACKING " + " | ".join(" ".join(map(str, c)) for c in w.cycles) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    cache = CensusCache(args.cache_dir, max_n=args.max_n, workers=args.workers)
    graphs = cache(args.n, args.family)
    if args.out:
        atomic_write_text(args.out, "".join(encode_graph6(g) + "\n" for g in graphs))
    out.write(f"{len(graphs)} graphs ({'cached' if cache.hits else 'computed'}) -> {cache.path(args.n, args.family)}\n")
    return EXIT_OK


def _run_verify(args, census):
    t = args.target
    if t == "main":
        return extremal.verify_main_theorem(args.ell, args.k, args.n, census)
    if t == "lemma":
        return extremal.verify_key_lemma(args.k, args.n, census)
    if t == "erdos-gallai":
        return extremal.verify_erdos_gallai(args.k_range or [args.k], args.n, census)
    if t == "furedi-gunderson":
        return extremal.verify_furedi_gunderson(args.k, args.n, census)
    if t == "alon-shikhelman":
        return extremal.verify_alon_shikhelman(args.k, args.n, census)
    if t == "stability":
        if len(args.n) != 1:
            raise UsageError("stability takes a single n")
        return extremal.stability_probe(args.k, args.n[0], args.slack, census)
    raise UsageError(f"unknown target {t!r}")


def _summary(report, out):
    head = f"{report.target}: {'PASS' if report.passed else 'FAIL'}"
    if report.onset is not None:
        head += f"; onset={report.onset}"
    out.write(head + "\n")
    for row in report.rows:
        shown = {k: v for k, v in row.items() if v is not None and not k.startswith("extremal_")}
        out.write("  " + ", ".join(f"{k}={v}" for k, v in shown.items()) + "\n")
    for note in report.notes:
        out.write(f"  note: {note}\n")


def cmd_verify(args, out):
    cache = CensusCache(args.cache_dir, max_n=args.max_n, workers=args.workers)
    census = cache if not args.no_cache else _bounded_memory(args.max_n)
    start = time.perf_counter()
    report = _run_verify(args, census)
    elapsed = time.perf_counter() - start
    doc = ReportDocument.from_verification(
        f"verify {args.target}", report, {"seconds": round(elapsed, 3), "backend": kernels.NAME}
    )
    _summary(report, out)
    if args.report:
        doc.write(args.report)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _bounded_memory(max_n):
    def census(n, forbidden=None):
        if max_n is not None and n > max_n:
            raise BudgetError(f"census on {n} vertices exceeds the budget max_n={max_n}")
        return extremal.memory_census(n, forbidden)

    return census


def build_parser():
    p = argparse.ArgumentParser(prog="turanlab", description="Exact generalized Turán number laboratory")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a named graph as graph6")
    c.add_argument("type", choices=sorted(CONSTRUCTORS) + ["blowup-cycle"])
    c.add_argument("params", nargs="*", type=int)
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_construct)

    for name, func, helptext in (
        ("count", cmd_count, "count substructures of graph6 graphs"),
        ("check", cmd_check, "test freeness of a disjoint cycle family"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("graph6", nargs="*")
        s.add_argument("-i", "--input", help="file of graph6 lines ('-' for stdin)")
        s.set_defaults(func=func)
        if name == "count":
            s.add_argument("--what", default="triangles",
                           help="triangles, edges, e_plus_t or cycles:M")
        else:
            s.add_argument("--family", type=parse_family, required=True, help="t,m for t disjoint C_m")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--cache-dir", help="census cache (default $TURANLAB_CACHE or ./.turanlab-cache)")
    budget.add_argument("--max-n", type=int, default=10, help="largest census size allowed")
    budget.add_argument("--time-limit", type=float, default=None, help="seconds before aborting with exit 3")
    budget.add_argument("--workers", type=int, default=1)

    e = sub.add_parser("enumerate", parents=[budget], help="census of graphs up to isomorphism")
    e.add_argument("n", type=int)
    e.add_argument("--family", type=parse_family, default=None)
    e.add_argument("-o", "--out")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", parents=[budget], help="run a verification harness")
    v.add_argument("target", choices=["main", "lemma", "erdos-gallai", "furedi-gunderson",
                                      "alon-shikhelman", "stability"])
    v.add_argument("--ell", type=int, default=1)
    v.add_argument("--k", type=int, default=1)
    v.add_argument("--k-range", type=parse_range, default=None)
    v.add_argument("--n", type=parse_range, required=True)
    v.add_argument("--slack", type=int, default=0)
    v.add_argument("--report", help="write the JSON report here")
    v.add_argument("--no-cache", action="store_true")
    v.set_defaults(func=cmd_verify)
    return p


def _alarm(signum, frame):
    raise BudgetError("time limit exceeded")


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    limit = getattr(args, "time_limit", None)
    if limit:
        signal.signal(signal.SIGALRM, _alarm)
        signal.setitimer(signal.ITIMER_REAL, limit)
    try:
        return args.func(args, out)
    except BudgetError as exc:
        print(f"turanlab: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, InvalidParameterError, Graph6ParseError, OSError) as exc:
        print(f"turanlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if limit:
            signal.setitimer(signal.ITIMER_REAL, 0)


if __name__ == "__main__":
    sys.exit(main())
