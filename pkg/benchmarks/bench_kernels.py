"""Compare the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]

Every workload is run through both backends; results are checked to be
identical before timings are reported.
"""

import argparse
import time

from latshell import _pykernels
from latshell.corpus import corpus, random_dismantlable
from latshell.lattice import build_lattice, is_ranked
from latshell.shelling import _label_ranks, construct_el, search_el

try:
    from latshell import _ckernels
except ImportError:
    _ckernels = None

# ranked lattices that admit no EL-labeling, so the search must exhaust them
HARD = [
    [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 5), (4, 6), (5, 6)],
    [(0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (3, 6), (4, 6), (5, 6)],
]


def closure_workload():
    lattices = list(corpus(8))
    args = [(L.n, L.order, L.lower) for L in lattices]

    def run(mod):
        return [mod.transitive_closure(*a) for a in args]

    return "closure (n<=8 corpus)", run


def bounds_workload():
    lattices = [random_dismantlable(60, s)[0] for s in range(20)]
    args = [(L.n, L.up, L.down) for L in lattices]

    def run(mod):
        return [mod.bound_tables(*a) for a in args]

    return "join/meet tables (n=60)", run


def scan_workload():
    lattices = []
    seed = 0
    while len(lattices) < 10:
        L, _ = random_dismantlable(40, seed, corner_bias=0.9)
        seed += 1
        if is_ranked(L):
            try:
                f = construct_el(L)
            except Exception:
                continue
            lattices.append((L, _label_ranks(L, f)))
    full = [(1 << L.n) - 1 for L, _ in lattices]

    def run(mod):
        return [
            mod.rising_scan(L.n, L.order, L.up, L.down, L.upper, lab, list(L.order), m, True, m)
            for (L, lab), m in zip(lattices, full)
        ]

    return "EL verification scan (n=40)", run


def search_workload():
    lattices = [build_lattice(c) for c in HARD]

    def run(mod):
        import latshell.kernels as k

        saved = k._pick
        k._pick = lambda n: mod
        try:
            return [search_el(L) for L in lattices]
        finally:
            k._pick = saved

    return "exhaustive EL search (2 non-EL cases)", run


def main():
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernels not built; nothing to compare")
        return
    print(f"{'workload':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for make in (closure_workload, bounds_workload, scan_workload, search_workload):
        name, run = make()
        times = {}
        results = {}
        for label, mod in (("python", _pykernels), ("cython", _ckernels)):
            best = float("inf")
            for _ in range(args.repeat):
                t = time.perf_counter()
                results[label] = run(mod)
                best = min(best, time.perf_counter() - t)
            times[label] = best
        assert results["python"] == results["cython"], f"backends disagree on {name}"
        print(f"{name:40s} {times['python']:10.4f} {times['cython']:10.4f} {times['python'] / times['cython']:8.1f}x")


if __name__ == "__main__":
    main()
