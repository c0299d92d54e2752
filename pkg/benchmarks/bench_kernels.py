"""Compare the compiled kernels with the NumPy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Times a full DSHLP planning call (dominated by the QP kernel), a simplex
solve of an Oracle LP (dominated by pivots) and the raw kernels.
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

CASES = r"""
import json, sys, time
import numpy as np
from scmarl import _kernels as k
from scmarl.dshlp import AdmmConfig, DistributedPlanner
from scmarl.mathprog import LpState, build_lp, solve_lp
from scmarl.network import preset

repeat = int(sys.argv[1])
out = {"backend": k.BACKEND}

def best(fn):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)

topo = preset("four_stage")
T = 30
demand = {r: np.full(T, 5.0) for r in topo.retailers}

def dshlp():
    planner = DistributedPlanner(topo, T, AdmmConfig(max_iters=50))
    planner.plan(LpState.initial(topo, T), {m: 0.0 for m in topo.node_ids}, demand)

out["dshlp_plan_50_iters"] = best(dshlp)
out["oracle_lp_T30"] = best(lambda: solve_lp(build_lp(topo, T, demand)))

rng = np.random.default_rng(0)
n, w = 300, 12
L = np.tril(rng.normal(size=(n, n)))
L[np.subtract.outer(np.arange(n), np.arange(n)) > w] = 0
L[np.diag_indices(n)] = np.abs(np.diag(L)) + 1.0
Lb = np.zeros((n, w + 1))
for j in range(w + 1):
    Lb[j:, j] = np.diagonal(L, -j)
rhs = rng.normal(size=n)
out["band_solve_x100"] = best(lambda: [k.band_solve(Lb, rhs) for _ in range(100)])
tab = rng.normal(size=(200, 400))
d = rng.normal(size=400)
out["pivot_x100"] = best(lambda: [k.pivot(tab, 5, 7, d) for _ in range(100)])
print(json.dumps(out))
"""


def run(pure: bool, repeat: int) -> dict:
    import json

    env = dict(os.environ)
    if pure:
        env["SCMARL_PURE_PYTHON"] = "1"
    else:
        env.pop("SCMARL_PURE_PYTHON", None)
    res = subprocess.run([sys.executable, "-c", CASES, str(repeat)], env=env, capture_output=True, text=True,
                         check=True)
    return json.loads(res.stdout)


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args(argv)
    t0 = time.perf_counter()
    fast = run(False, args.repeat)
    slow = run(True, args.repeat)
    if fast["backend"] != "compiled":
        print("compiled kernels are not built; both columns use the fallback")
    print(f"{'case':<22}{'compiled [s]':>14}{'python [s]':>14}{'speed-up':>10}")
    for key in fast:
        if key == "backend":
            continue
        print(f"{key:<22}{fast[key]:>14.4f}{slow[key]:>14.4f}{slow[key] / fast[key]:>9.1f}x")
    print(f"total wall time {time.perf_counter() - t0:.1f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
