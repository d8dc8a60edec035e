"""Compare the numba-compiled kernels with the interpreted fallback.

Each mode runs in a fresh interpreter with ``MINIPAINT_JIT`` set accordingly:

    python3 benchmarks/bench_kernels.py            # both modes, table on stdout
    python3 benchmarks/bench_kernels.py --worker   # one mode, JSON timings

The first call of every workload is timed separately (it includes compilation
or cache loading under JIT) and excluded from the steady-state figure.
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def workloads():
    from minipaint import io
    from minipaint.generators import generate
    from minipaint.oracle import flood_optimum
    from minipaint.solvers import solve

    fig = io.figure1()
    big = [generate("cogem-free", 20, 6, s, connected=True, non_cograph=True) for s in range(5)]
    mid = [generate("cogem-free", 9, 4, s, connected=True, non_cograph=True, edge_prob=0.55, budget=50_000)
           for s in range(20)]
    return {
        "flood_oracle_figure1": lambda: flood_optimum(fig.graph, fig.template),
        "solve_figure1": lambda: solve(fig.graph, fig.template),
        "solve_n20_x5": lambda: [solve(i.graph, i.template) for i in big],
        "solve_n9_x20": lambda: [solve(i.graph, i.template) for i in mid],
    }


def run_worker(repeat: int) -> dict:
    from minipaint import JIT_ENABLED

    out = {"jit": JIT_ENABLED, "results": {}}
    for name, fn in workloads().items():
        t0 = time.perf_counter()
        fn()
        first = time.perf_counter() - t0
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            fn()
            times.append(time.perf_counter() - t0)
        out["results"][name] = {"first": first, "best": min(times)}
    return out


def run_mode(jit: bool, repeat: int) -> dict:
    env = dict(os.environ, MINIPAINT_JIT="1" if jit else "0")
    proc = subprocess.run([sys.executable, __file__, "--worker", "--repeat", str(repeat)],
                          env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--worker", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if args.worker:
        print(json.dumps(run_worker(args.repeat)))
        return
    jit = run_mode(True, args.repeat)
    py = run_mode(False, args.repeat)
    if not jit["jit"]:
        print("numba unavailable: both columns run the interpreted kernels")
    print(f"{'workload':<24}{'jit first':>11}{'jit best':>11}{'python':>11}{'speedup':>9}")
    for name, r in jit["results"].items():
        p = py["results"][name]["best"]
        print(f"{name:<24}{r['first']:>10.3f}s{r['best']:>10.4f}s{p:>10.4f}s{p / max(r['best'], 1e-9):>8.1f}x")


if __name__ == "__main__":
    main()
