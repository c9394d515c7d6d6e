"""Compare the compiled and pure-Python kernel backends.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time

from turanlab import _backend
from turanlab.constructions import blow_up, cycle, extremal_construction
from turanlab.enumeration import EnumerationFilter, enumerate_count
from turanlab.detection import ForbiddenFamily


def random_rows(rng, n, p):
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return rows


def cases():
    rng = random.Random(7)
    sample = [(n, random_rows(rng, n, 0.5)) for n in (10, 14, 18) for _ in range(20)]
    g = extremal_construction(2, 15)
    h = blow_up(cycle(5), [2] * 5)
    return [
        ("canonical_labeling x60", lambda k: [k.canonical_labeling(n, r) for n, r in sample]),
        ("count_triangles x60", lambda k: [k.count_triangles(n, r) for n, r in sample]),
        ("count_cycles C5 blow-up", lambda k: k.count_cycles(h.n, list(h.rows), 5)),
        ("find_packing 3xC5 n=15", lambda k: k.find_packing(g.n, list(g.rows), 3, 5)),
        ("max_cut n=18 x20", lambda k: [k.max_cut(n, r) for n, r in sample if n == 18]),
        ("enumerate n=7", lambda k: enumerate_count(7, backend=k.NAME)),
        ("enumerate n=7 2xC3-free",
         lambda k: enumerate_count(7, EnumerationFilter(ForbiddenFamily(2, 3)), backend=k.NAME)),
    ]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    names = _backend.available()
    print(f"{'case':28s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases():
        best = []
        for name in names:
            k = _backend.get(name)
            times = []
            for _ in range(args.repeat):
                t = time.perf_counter()
                fn(k)
                times.append(time.perf_counter() - t)
            best.append(min(times))
        line = f"{label:28s}" + "".join(f"{t:11.4f}s" for t in best)
        if len(best) > 1:
            line += f"{best[1] / best[0]:11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
