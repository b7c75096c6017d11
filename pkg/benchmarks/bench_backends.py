#!/usr/bin/env python3
"""Compare the GMP-backed scalar core against the pure-Python fallback.

The backend is chosen at import time, so each measurement runs in a fresh
subprocess with TETRASCREEN_BACKEND set.  Workloads cover the hot paths:
raw rational arithmetic, exact screening matrices, theorem verification,
and interval (prefilter) evaluation.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "rational-ops": r"""
import time
from tetrascreen._backend import Q
t0 = time.perf_counter()
acc = Q(0)
x = Q(1234567, 891011)
for k in range(1, 20000):
    acc = acc + Q(k, k + 1) * x - Q(1, k)
print(time.perf_counter() - t0)
""",
    "screen-exact": r"""
import time
from tetrascreen import screen as SC, properties as P
from tetrascreen.tetrahedron import TetraFamily
from tetrascreen._backend import Q
plan = SC.ScreenPlan(TetraFamily.CIRCUMSCRIPTIBLE,
                     [SC.CenterSpec('X7'), SC.CenterSpec('X8'), SC.CenterSpec('X9'),
                      SC.CenterSpec('X11'), SC.CenterSpec('POW', Q(2))],
                     [P.PropertyId.CONCUR, P.PropertyId.HYPERBOLIC,
                      P.PropertyId.COPLANAR, P.PropertyId.EQUAL_CEVIANS],
                     count=40, seed=1)
t0 = time.perf_counter()
SC.run_screen(plan)
print(time.perf_counter() - t0)
""",
    "screen-prefilter": r"""
import time
from tetrascreen import screen as SC, properties as P
from tetrascreen.tetrahedron import TetraFamily
from tetrascreen._backend import Q
plan = SC.ScreenPlan(TetraFamily.GENERAL,
                     [SC.CenterSpec('X7'), SC.CenterSpec('X9'), SC.CenterSpec('X11')],
                     [P.PropertyId.CONCUR, P.PropertyId.COPLANAR],
                     count=40, seed=1, mode_policy='prefilter')
t0 = time.perf_counter()
SC.run_screen(plan)
print(time.perf_counter() - t0)
""",
    "verify-subset": r"""
import time
from tetrascreen import theorems as TH
t0 = time.perf_counter()
TH.verify_cases(['T5.1b', 'T7a', 'T9.1a', 'T6d'], n=20, seed=1)
print(time.perf_counter() - t0)
""",
    "interval-sqrt": r"""
import time
from tetrascreen import scalar as S
from tetrascreen._backend import Q
t0 = time.perf_counter()
for k in range(2, 1500):
    x = S.sqrt(Q(k, k + 1), 256)
    if isinstance(x, S.Interval):
        _ = x * x - Q(k, k + 1)
print(time.perf_counter() - t0)
""",
}


def run(backend: str, code: str) -> float:
    env = dict(os.environ, TETRASCREEN_BACKEND=backend)
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip().splitlines()[-1])


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    try:
        import gmpy2  # noqa: F401
        backends = ["python", "gmp"]
    except ImportError:
        print("gmpy2 not installed; only the python backend is available")
        backends = ["python"]

    results = {}
    for name, code in WORKLOADS.items():
        results[name] = {}
        for backend in backends:
            best = min(run(backend, code) for _ in range(args.repeat))
            results[name][backend] = best

    width = max(map(len, WORKLOADS)) + 2
    header = f"{'workload':<{width}}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, times in results.items():
        row = f"{name:<{width}}" + "".join(f"{times[b]:>11.3f}s" for b in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['gmp']:>9.1f}x"
        print(row)
    print()
    print(json.dumps(results, indent=2))


if __name__ == "__main__":
    main()
