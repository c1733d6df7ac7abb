"""Compare the compiled elimination kernel with the pure-Python one.

Usage: python benchmarks/bench_rref.py [--repeat N]

Times ``rref_int`` on random small-entry integer matrices of a few shapes,
then the end-to-end corpus run under each backend (the pure one is forced
with LIEAFFINE_PURE_PYTHON in a subprocess).
"""
from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from lieaffine import _rref_py

try:
    from lieaffine._rref import rref_int as compiled
except ImportError:  # pragma: no cover
    compiled = None


def matrices(rng: random.Random, rows: int, cols: int, count: int, bound: int) -> list[list[list[int]]]:
    return [[[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)] for _ in range(count)]


def kernel_table(repeat: int) -> None:
    rng = random.Random(0)
    print(f"{'shape':>8} {'bound':>14} {'python ms':>10} {'compiled ms':>12} {'speedup':>8}")
    for rows, cols, bound in ((8, 8, 3), (16, 16, 3), (27, 64, 2), (64, 81, 2), (12, 12, 10**12)):
        batch = matrices(rng, rows, cols, 20, bound)
        for m in batch:
            if compiled is not None:
                assert compiled(m, cols) == _rref_py.rref_int(m, cols)

        def run_py():
            for m in batch:
                _rref_py.rref_int(m, cols)

        t_py = min(timeit.repeat(run_py, number=1, repeat=repeat)) / len(batch) * 1e3
        if compiled is None:
            print(f"{f'{rows}x{cols}':>8} {bound:>14} {t_py:>10.3f} {'n/a':>12} {'n/a':>8}")
            continue

        def run_c():
            for m in batch:
                compiled(m, cols)

        t_c = min(timeit.repeat(run_c, number=1, repeat=repeat)) / len(batch) * 1e3
        print(f"{f'{rows}x{cols}':>8} {bound:>14} {t_py:>10.3f} {t_c:>12.3f} {t_py / t_c:>7.1f}x")


def corpus_time(pure: bool, runs: int = 3) -> float:
    env = dict(os.environ)
    env.pop("LIEAFFINE_PURE_PYTHON", None)
    if pure:
        env["LIEAFFINE_PURE_PYTHON"] = "1"
    best = float("inf")
    for _ in range(runs):
        start = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "lieaffine", "corpus", "--json"], env=env,
                              capture_output=True, text=True)
        best = min(best, time.perf_counter() - start)
        if proc.returncode != 0:
            raise SystemExit(f"corpus run failed:\n{proc.stdout}{proc.stderr}")
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    kernel_table(args.repeat)
    if compiled is not None:
        print(f"corpus: python {corpus_time(True):.2f}s, compiled {corpus_time(False):.2f}s")
    else:
        print(f"corpus: python {corpus_time(True):.2f}s (compiled kernel not built)")


if __name__ == "__main__":
    main()
