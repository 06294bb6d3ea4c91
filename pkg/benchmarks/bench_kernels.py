"""Benchmark the compiled Groebner reduction kernel against the pure-Python
fallback on the node-verification workloads.

Run from the repository root:

    python benchmarks/bench_kernels.py [--seeds 2]

The two lanes execute the identical Buchberger driver; only the inner
reduction kernel differs, so the ratio isolates the kernel speedup.  Both
lanes must (and do) produce identical reduced bases.
"""

from __future__ import annotations

import argparse
import time

from cycontract.groebner import basis as basis_mod
from cycontract.groebner import kernel
from cycontract.groebner.basis import buchberger, quotient_degree
from cycontract.groebner.nodes import CONSTRUCTION_TAGS, build_construction


def run_lane(name: str, workloads) -> dict[str, tuple[float, int]]:
    basis_mod.Engine = kernel.engine_class(name)
    out = {}
    for tag, gens in workloads:
        t0 = time.perf_counter()
        g = buchberger(gens)
        dt = time.perf_counter() - t0
        out[tag] = (dt, quotient_degree(g))
    return out


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=1, help="seeds per construction")
    ap.add_argument("--prime", type=int, default=32003)
    args = ap.parse_args()

    workloads = []
    for tag in CONSTRUCTION_TAGS:
        for seed in range(1, args.seeds + 1):
            ideal = build_construction(tag, args.prime, seed)
            chart = ideal.ring.nvars - 1
            gens = [f.substitute_one(chart) for f in ideal.singular_gens]
            workloads.append((f"{tag}/s{seed}", gens))

    lanes = kernel.available_backends()
    if "cython" not in lanes:
        print("compiled kernel not built; benchmarking the python lane only")
    results = {name: run_lane(name, workloads) for name in lanes}
    basis_mod.Engine = kernel.Engine  # restore the import-time selection

    width = max(len(t) for t, _ in workloads)
    header = f"{'workload':<{width}}  {'degree':>6}"
    for name in lanes:
        header += f"  {name + ' (s)':>12}"
    if len(lanes) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for tag, _ in workloads:
        degs = {results[name][tag][1] for name in lanes}
        assert len(degs) == 1, f"lanes disagree on {tag}"
        line = f"{tag:<{width}}  {degs.pop():>6}"
        for name in lanes:
            line += f"  {results[name][tag][0]:>12.3f}"
        if len(lanes) == 2:
            ratio = results["python"][tag][0] / results["cython"][tag][0]
            line += f"  {ratio:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
