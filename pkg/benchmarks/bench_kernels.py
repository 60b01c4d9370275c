"""Compare the numba kernels against the pure-Python fallback.

Each backend runs in its own interpreter (the choice is made at import time
via GUSTRL_DISABLE_NUMBA).  Usage::

    python3 benchmarks/bench_kernels.py [--steps 2000]
"""
import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
import numpy as np
from gustrl import backend_name
from gustrl.config import RunConfig
from gustrl.env import HoverEnv
from gustrl.mast import rolling_max_filter

steps = int(sys.argv[1])
cfg = RunConfig()
env = HoverEnv(cfg.drone, cfg.drag, cfg.control, "baseline")
env.reset(np.random.default_rng(0), duration=steps * 0.025)
env.step()                                  # compile outside the timed region
env.reset(np.random.default_rng(0), duration=steps * 0.025)
t0 = time.perf_counter()
for _ in range(steps):
    env.step()
sim = time.perf_counter() - t0

rng = np.random.default_rng(1)
t = np.cumsum(rng.uniform(0, 1 / 120, 200_000)); x = rng.normal(size=t.size)
rolling_max_filter(t[:10], x[:10], 0.1)
t0 = time.perf_counter()
rolling_max_filter(t, x, 0.1)
filt = time.perf_counter() - t0
print(json.dumps({"backend": backend_name(), "sim_s": sim, "filter_s": filt}))
"""


def run(disable, steps):
    env = dict(os.environ, GUSTRL_DISABLE_NUMBA="1" if disable else "0")
    out = subprocess.run([sys.executable, "-c", WORKER, str(steps)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--steps", type=int, default=2000, help="control steps (6 physics substeps each)")
    args = ap.parse_args()
    res = [run(False, args.steps), run(True, args.steps)]
    print(f"{'backend':<8} {'control steps/s':>16} {'filter 2e5 (ms)':>16}")
    for r in res:
        print(f"{r['backend']:<8} {args.steps / r['sim_s']:>16.0f} {1e3 * r['filter_s']:>16.1f}")
    print(f"speed-up: simulation x{res[1]['sim_s'] / res[0]['sim_s']:.1f}, "
          f"filter x{res[1]['filter_s'] / res[0]['filter_s']:.1f}")


if __name__ == "__main__":
    main()
