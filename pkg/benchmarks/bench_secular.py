#!/usr/bin/env python3
"""Benchmark the secular-equation kernels: compiled extension vs numpy twin.

Usage: python benchmarks/bench_secular.py [--sizes 500,1000,2000] [--repeats 3]

Solves the full interlacing root problem for a Drude bath discretized at
fixed grid extent N*delta = 20 and reports wall time per backend plus the
maximum deviation between the two root sets.
"""

import argparse
import importlib
import time

import numpy as np

from bathlab._kernels import secular_py
from bathlab.bath import Drude
from bathlab.oracle import build_bath


def _load_backends():
    backends = {"python": secular_py.solve_secular}
    try:
        compiled = importlib.import_module("bathlab._kernels._secular")
        backends["compiled"] = compiled.solve_secular
    except ImportError:
        pass
    return backends


def _time(fn, weights, delta, repeats):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(weights, delta, 1.0)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="500,1000,2000,5000")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    backends = _load_backends()
    if "compiled" not in backends:
        print("note: compiled extension not built, timing the numpy kernel only")

    print(f"{'N':>7} " + "".join(f"{name + ' [s]':>14}" for name in backends)
          + f"{'speedup':>10}{'max |du/u|':>12}")
    for n in sizes:
        delta = 20.0 / n
        bath = build_bath(Drude(1.0, 1.0), delta, n)
        weights = bath.masses * bath.frequencies**2
        times = {}
        roots = {}
        for name, fn in backends.items():
            times[name], (roots[name], _) = _time(fn, weights, delta, args.repeats)
        line = f"{n:>7} " + "".join(f"{times[name]:>14.4f}" for name in backends)
        if "compiled" in backends:
            rel = np.max(np.abs(roots["python"] - roots["compiled"]) / roots["python"])
            line += f"{times['python'] / times['compiled']:>10.1f}{rel:>12.2e}"
        print(line)


if __name__ == "__main__":
    main()
