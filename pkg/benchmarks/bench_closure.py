#!/usr/bin/env python3
"""Compare the compiled closure kernel against the pure-Python fallback.

Times raw forward-closure throughput on random CNFs of growing size, then a
full minimal-key enumeration with each backend.  Run after installing the
package:

    python benchmarks/bench_closure.py [--seed 1] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

import hornkeys
import hornkeys.core as core
from hornkeys._closure_py import Engine as PyEngine
from hornkeys.keygen import KeyEnumerationStats, iter_minimal_keys
from hornkeys.oracles import random_horn_cnf

try:
    from hornkeys._fastclosure import Engine as CEngine
except ImportError:
    CEngine = None


def closure_rate(engine_cls, cnf, seeds, repeat: int) -> float:
    bodies = [tuple(sorted(c.body)) for c in cnf.clauses]
    heads = [c.head for c in cnf.clauses]
    best = 0.0
    for _ in range(repeat):
        engine = engine_cls(cnf.n, bodies, heads)
        t0 = time.perf_counter()
        for s in seeds:
            engine.closure(s)
        dt = time.perf_counter() - t0
        best = max(best, len(seeds) / dt)
    return best


def enumeration_time(engine_cls, cnf, repeat: int) -> tuple[float, int]:
    # The enumerator picks its engine through hornkeys.core; swap it in place
    # for the duration of the measurement.
    saved = core.Engine
    core.Engine = engine_cls
    try:
        best = float("inf")
        keys = 0
        for _ in range(repeat):
            stats = KeyEnumerationStats()
            t0 = time.perf_counter()
            for _key in iter_minimal_keys(cnf, stats=stats):
                pass
            best = min(best, time.perf_counter() - t0)
            keys = stats.keys
        return best, keys
    finally:
        core.Engine = saved


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"installed backend: {hornkeys.BACKEND}")
    if CEngine is None:
        print("compiled extension not available; showing the pure backend only")

    import random

    rng = random.Random(args.seed)
    print()
    print(f"{'n':>6} {'m':>6} {'python closures/s':>20} {'cython closures/s':>20} {'speedup':>8}")
    for n, m in [(16, 32), (64, 128), (256, 512), (1024, 2048)]:
        cnf = random_horn_cnf(rng.randrange(2**32), n, m, max_body=4)
        seeds = [rng.sample(range(n), rng.randint(1, max(2, n // 4))) for _ in range(200)]
        py = closure_rate(PyEngine, cnf, seeds, args.repeat)
        if CEngine is not None:
            cy = closure_rate(CEngine, cnf, seeds, args.repeat)
            print(f"{n:>6} {m:>6} {py:>20.0f} {cy:>20.0f} {cy / py:>7.1f}x")
        else:
            print(f"{n:>6} {m:>6} {py:>20.0f} {'-':>20} {'-':>8}")

    print()
    cnf = random_horn_cnf(args.seed, 14, 40, max_body=3)
    t_py, k = enumeration_time(PyEngine, cnf, args.repeat)
    line = f"enumerating {k} minimal keys (n=14, m=40): python {t_py * 1000:.1f} ms"
    if CEngine is not None:
        t_cy, _ = enumeration_time(CEngine, cnf, args.repeat)
        line += f", cython {t_cy * 1000:.1f} ms ({t_py / t_cy:.1f}x)"
    print(line)


if __name__ == "__main__":
    main()
