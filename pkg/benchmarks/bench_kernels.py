"""Compiled vs pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Each backend runs in its own interpreter (the pure one via DIFFPOW_PURE_PYTHON)
so that import-time selection is exercised exactly as in normal use.
"""
import argparse
import json
import os
import subprocess
import sys
import timeit

WORKLOADS = {
    "scan_box (xy, z^2) n=4": "scan_box(((0,0,2),(1,1,0)), (6,6,9), 4)",
    "scan_box table row 2 n=3": "scan_box(((1,1,4),(1,4,1),(4,1,1)), (8,8,8), 3)",
    "minimal_elements 2000 vecs": "minimal_elements(VECS)",
    "bruteforce_diffpower corpus[:40] n=3": "[bruteforce_diffpower(I, 3) for I in CORPUS]",
}

SETUP = """
import random
from diffpow.kernels import scan_box, minimal_elements
from diffpow.core import MonomialIdeal
from diffpow.oracle import bruteforce_diffpower
rng = random.Random(1)
VECS = [tuple(rng.randint(0, 12) for _ in range(3)) for _ in range(2000)]
CORPUS = []
while len(CORPUS) < 40:
    d = rng.randint(1, 3)
    I = MonomialIdeal(d, [tuple(rng.randint(0, 4) for _ in range(d)) for _ in range(rng.randint(1, 3))])
    if not I.is_unit:
        CORPUS.append(I)
"""


def measure(repeat):
    from diffpow.kernels import BACKEND
    out = {"backend": BACKEND, "times": {}}
    for name, stmt in WORKLOADS.items():
        t = timeit.Timer(stmt, setup=SETUP)
        loops, _ = t.autorange()
        out["times"][name] = min(t.repeat(repeat, loops)) / loops
    return out


def child(pure, repeat):
    env = dict(os.environ)
    env.pop("DIFFPOW_PURE_PYTHON", None)
    if pure:
        env["DIFFPOW_PURE_PYTHON"] = "1"
    res = subprocess.run([sys.executable, __file__, "--child", "--repeat", str(repeat)],
                         env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()
    if args.child:
        print(json.dumps(measure(args.repeat)))
        return
    fast, slow = child(False, args.repeat), child(True, args.repeat)
    if fast["backend"] == slow["backend"]:
        print(f"note: compiled extension not available, both runs used {fast['backend']}")
    width = max(map(len, WORKLOADS))
    print(f"{'workload':<{width}}  {fast['backend']:>10}  {slow['backend']:>10}  speedup")
    for name in WORKLOADS:
        a, b = fast["times"][name], slow["times"][name]
        print(f"{name:<{width}}  {a * 1e3:>8.3f}ms  {b * 1e3:>8.3f}ms  {b / a:6.1f}x")


if __name__ == "__main__":
    main()
