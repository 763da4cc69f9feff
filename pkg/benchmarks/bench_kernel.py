"""Compare the compiled and pure-Python b-fold search kernels.

    python benchmarks/bench_kernel.py [--repeat N] [--quick]

Both backends run the same searches; node counts must agree, so the table
also doubles as a consistency check.
"""

import argparse
import statistics
import sys
import time

from orifrac import kernel
from orifrac.graph import directed_cycle
from orifrac.reproduce import random_corpus
from orifrac.solver import SearchBudget, chi_b, exists_bfold

UNLIMITED = SearchBudget.unlimited()


def _single(r, b, k, symmetry):
    def job(backend):
        res = exists_bfold(directed_cycle(r), b, k, UNLIMITED, symmetry=symmetry, backend=backend)
        return f"{res.outcome}, {res.nodes} nodes"
    return f"C_{r} b={b} k={k} ({symmetry})", job


def _corpus(count):
    graphs = random_corpus(count=count)

    def job(backend):
        values = [chi_b(g, 2, UNLIMITED, backend=backend).value for g in graphs]
        return f"sum of chi_2 = {sum(values)}"
    return f"chi_2 over {count} random graphs", job


def workloads(quick):
    jobs = [
        _single(7, 2, 6, "root"),
        _single(11, 3, 11, "colors"),
        _single(13, 3, 11, "colors"),
        _corpus(40),
    ]
    if not quick:
        jobs.append(_single(16, 3, 11, "colors"))
    return jobs


def timed(job, backend, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = job(backend)
        times.append(time.perf_counter() - start)
    return statistics.median(times), result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the slow pure-Python cases")
    args = ap.parse_args(argv)
    if not kernel.HAVE_COMPILED:
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1

    print(f"{'workload':42} {'python s':>10} {'cython s':>10} {'speedup':>8}  result")
    mismatches = 0
    for name, job in workloads(args.quick):
        t_py, r_py = timed(job, "python", args.repeat)
        t_cy, r_cy = timed(job, "cython", args.repeat)
        same = r_py == r_cy
        mismatches += not same
        speed = t_py / t_cy if t_cy else float("inf")
        note = r_cy if same else f"MISMATCH {r_py} vs {r_cy}"
        print(f"{name:42} {t_py:10.4f} {t_cy:10.4f} {speed:7.1f}x  {note}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
