#!/usr/bin/env python3
"""Compare the pure-Python and compiled scanning kernels.

The scanner is the only part of the pipeline that is linear in the input
size, so it dominates runtime on large translation units. This benchmark
synthesizes a big source file by tiling the diffusion fixture and times
the three kernels plus a whole-file transpile.

Usage: python benchmarks/bench_scan.py [--repeat N] [--tiles N]
"""

from __future__ import annotations

import argparse
import pathlib
import time

from pragmaport import Backend, TranspileConfig, default_registry, transpile
from pragmaport import _scan_py

try:
    from pragmaport import _speedups
except ImportError:
    _speedups = None

FIXTURE = pathlib.Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "listing_diffusion.c"


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def drain_scan(impl, source, arg_text):
    impl.line_table(source)
    start = source.find("(")
    while start >= 0:
        impl.scan_balanced(source, start)
        start = source.find("(", start + 1)
    impl.split_points(arg_text)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--tiles", type=int, default=400)
    args = parser.parse_args()

    source = FIXTURE.read_text() * args.tiles
    arg_text = ", ".join(["AS_INDEPENDENT", "COLLAPSE(3)", "ACC_CLAUSE_PRESENT(f, fn)"] * 2000)
    print(f"corpus: {len(source) / 1e6:.2f} MB source, "
          f"{len(arg_text) / 1e3:.0f} kB argument list")

    impls = [("pure", _scan_py)]
    if _speedups is not None:
        impls.append(("compiled", _speedups))
    else:
        print("compiled kernels unavailable; timing the fallback only")

    timings = {}
    for label, impl in impls:
        timings[label] = best_of(args.repeat, drain_scan, impl, source, arg_text)
        print(f"{label:>9}: {timings[label] * 1e3:8.1f} ms  (kernels)")
    if len(timings) == 2:
        print(f"{'speedup':>9}: {timings['pure'] / timings['compiled']:8.1f}x")

    registry = default_registry()
    config = TranspileConfig(backend=Backend.OMP_DISTRIBUTE)
    elapsed = best_of(args.repeat, transpile, source, config, registry)
    from pragmaport.parser import SCAN_IMPL

    print(f"transpile: {elapsed * 1e3:8.1f} ms  (whole file, {SCAN_IMPL} kernels)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
