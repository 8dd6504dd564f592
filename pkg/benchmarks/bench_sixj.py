#!/usr/bin/env python3
"""Benchmark: compiled Racah kernel vs the pure-Python twin.

Two views:
  * raw kernel throughput on a fixed set of symbols (no caching), both
    backends imported side by side;
  * end-to-end pentagon-identity grid verification in fresh worker
    processes, one per backend (SPINNET_NO_EXT selects the fallback).

Usage: python benchmarks/bench_sixj.py [--max-twice N] [--grid-twice N]
"""

import argparse
import os
import subprocess
import sys
import time
from itertools import product

from spinnet import _racah_py
from spinnet.wigner import TRIAD_SLOTS, triad_valid_twice

try:
    from spinnet import _racah_c
except ImportError:
    _racah_c = None

GRID_SNIPPET = """
import time
from spinnet import kernel
from spinnet.identities import BEInstance, be_check, iter_be_grid
t0 = time.perf_counter()
n = sum(1 for t in iter_be_grid({max_twice})
        if be_check(BEInstance.from_twice(t)).equal)
dt = time.perf_counter() - t0
print(f"{{kernel.backend()}} {{n}} {{dt:.3f}}")
"""


def symbol_set(max_twice):
    out = []
    for t in product(range(max_twice + 1), repeat=6):
        if all(triad_valid_twice(t[i], t[j], t[k])
               for i, j, k in TRIAD_SLOTS):
            out.append(t)
    return out


def bench_raw(kernel_mod, symbols, repeats):
    fn = kernel_mod.sixj_raw
    t0 = time.perf_counter()
    for _ in range(repeats):
        for t in symbols:
            fn(*t)
    dt = time.perf_counter() - t0
    return len(symbols) * repeats / dt, dt


def bench_grid(max_twice, force_pure):
    env = dict(os.environ)
    if force_pure:
        env["SPINNET_NO_EXT"] = "1"
    else:
        env.pop("SPINNET_NO_EXT", None)
    res = subprocess.run(
        [sys.executable, "-c", GRID_SNIPPET.format(max_twice=max_twice)],
        capture_output=True, text=True, env=env, check=True)
    backend, n, dt = res.stdout.split()
    return backend, int(n), float(dt)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-twice", type=int, default=8,
                    help="raw benchmark symbol grid size")
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--grid-twice", type=int, default=3,
                    help="end-to-end pentagon grid size")
    args = ap.parse_args()

    symbols = symbol_set(args.max_twice)
    print(f"raw kernel: {len(symbols)} symbols (twice <= {args.max_twice}), "
          f"x{args.repeats}")
    py_rate, py_dt = bench_raw(_racah_py, symbols, args.repeats)
    print(f"  python  {py_rate:10.0f} evals/s   ({py_dt:.3f}s)")
    if _racah_c is None:
        print("  c       not built; install with a C toolchain to compare")
    else:
        c_rate, c_dt = bench_raw(_racah_c, symbols, args.repeats)
        print(f"  c       {c_rate:10.0f} evals/s   ({c_dt:.3f}s)")
        print(f"  speedup x{c_rate / py_rate:.2f}")

    print(f"\nend-to-end: pentagon grid verification "
          f"(twice <= {args.grid_twice}, fresh process, cold caches)")
    backend, n, dt = bench_grid(args.grid_twice, force_pure=True)
    print(f"  {backend:7s} {n} instances in {dt:.3f}s")
    py_grid = dt
    if _racah_c is not None:
        backend, n, dt = bench_grid(args.grid_twice, force_pure=False)
        print(f"  {backend:7s} {n} instances in {dt:.3f}s")
        print(f"  speedup x{py_grid / dt:.2f}")


if __name__ == "__main__":
    main()
