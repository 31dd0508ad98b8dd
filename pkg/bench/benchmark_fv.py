#!/usr/bin/env python3
"""Time the finite-volume kernels on the numba lane vs the pure-Python lane.

The lane is chosen at import time by the CHAPGAS_NO_NUMBA environment
variable, so each timing runs in a fresh subprocess. The pure lane is run on
a reduced grid and scaled, otherwise it dominates the wall clock.

Usage: python bench/benchmark_fv.py [--cells N] [--t-end T]
"""

import argparse
import json
import os
import subprocess
import sys

_WORKER = r"""
import json, os, sys, time
import chapgas as cg
from chapgas import _kernels

cells = int(sys.argv[1])
t_end = float(sys.argv[2])
p = cg.PressureParams.ecg(0.1, 0.1, 2.0, 0.5)
left, right = cg.State(1.0, 0.2), cg.State(0.25, -0.32)

# Warm-up on a tiny grid so jit compilation is not timed.
g0 = cg.GridConfig(-0.4, 0.4, 16, 0.45, 0.01, cg.Scheme.GODUNOV_EXACT)
cg.evolve(p, left, right, g0)

results = {}
for scheme in (cg.Scheme.GODUNOV_EXACT, cg.Scheme.LAX_FRIEDRICHS):
    g = cg.GridConfig(-0.4, 0.4, cells, 0.45, t_end, scheme)
    t0 = time.perf_counter()
    snap = cg.evolve(p, left, right, g)
    results[scheme.value] = {
        "seconds": time.perf_counter() - t0,
        "steps": len(snap.steps),
        "cells": cells,
    }
print(json.dumps({"numba": _kernels.NUMBA_ENABLED, "runs": results}))
"""


def _run(no_numba: bool, cells: int, t_end: float) -> dict:
    env = dict(os.environ)
    env["CHAPGAS_NO_NUMBA"] = "1" if no_numba else "0"
    out = subprocess.run(
        [sys.executable, "-c", _WORKER, str(cells), str(t_end)],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cells", type=int, default=800)
    ap.add_argument("--t-end", type=float, default=0.2)
    ap.add_argument("--pure-cells", type=int, default=100,
                    help="grid for the pure-Python lane (scaled estimate)")
    args = ap.parse_args()

    fast = _run(False, args.cells, args.t_end)
    slow = _run(True, args.pure_cells, args.t_end)
    if not fast["numba"]:
        print("warning: numba lane unavailable, both runs are pure Python")

    print(f"{'scheme':<16} {'numba lane':>14} {'pure lane':>14} {'speedup':>9}")
    for scheme in ("godunov", "lax_friedrichs"):
        tf = fast["runs"][scheme]["seconds"]
        ts = slow["runs"][scheme]["seconds"]
        # work scales ~ cells^2 (cells x steps); normalize the pure timing
        scale = (args.cells / args.pure_cells) ** 2
        ts_scaled = ts * scale
        print(
            f"{scheme:<16} {tf:>13.4f}s {ts_scaled:>13.4f}s {ts_scaled / tf:>8.1f}x"
        )
    print(f"* pure lane measured at {args.pure_cells} cells and scaled by "
          f"(cells ratio)^2 = {(args.cells / args.pure_cells) ** 2:.0f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
