#!/usr/bin/env python3
"""Benchmark the compiled mod-p kernels against the pure-Python fallback.

Times the three kernel functions on the matrices the Jordan-type oracle
actually produces (J_r (x) J_s - I over F_p) plus dense random inputs,
then times a full Green-ring table build per backend in a subprocess
(backend selection happens at import, so it needs a fresh interpreter).

Run:  python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time

from fusionring.kernels import _purepy

try:
    from fusionring.kernels import _modpcore
except ImportError:
    _modpcore = None


def unipotent_tensor_matrix(r: int, s: int) -> list[list[int]]:
    n = r * s
    a = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(s):
            row = a[i * s + j]
            if j + 1 < s:
                row[i * s + (j + 1)] = 1
            if i + 1 < r:
                row[(i + 1) * s + j] = 1
                if j + 1 < s:
                    row[(i + 1) * s + (j + 1)] = 1
    return a


def random_matrix(n: int, p: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randrange(p) for _ in range(n)] for _ in range(n)]


def time_call(fn, *args, repeat: int = 3) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def backend_rows(quick: bool):
    p = 13
    jordan = unipotent_tensor_matrix(13, 13)          # 169 x 169
    dense = random_matrix(60 if quick else 120, p, 1)
    cases = [
        ("rank_mod_p", "J13xJ13-I (169x169, F13)", lambda impl: impl.rank_mod_p(jordan, p)),
        ("rank_mod_p", f"random ({len(dense)}x{len(dense)}, F13)", lambda impl: impl.rank_mod_p(dense, p)),
        ("matmul_mod_p", "J13xJ13-I squared", lambda impl: impl.matmul_mod_p(jordan, jordan, p)),
        ("nilpotent_rank_profile", "J13xJ13-I, 14 powers", lambda impl: impl.nilpotent_rank_profile(jordan, p, 14)),
    ]
    impls = [("python", _purepy)]
    if _modpcore is not None:
        impls.append(("c", _modpcore))
    rows = []
    for fn_name, case, call in cases:
        times = {}
        for label, impl in impls:
            times[label] = time_call(lambda: call(impl))
        rows.append((fn_name, case, times))
    return rows


def green_table_timings(quick: bool):
    """Wall time of green_ring(p) per backend, in fresh interpreters."""
    p = 7 if quick else 13
    code = (
        "import time; t0 = time.perf_counter(); "
        f"from fusionring.green import green_ring; green_ring({p}); "
        "print(time.perf_counter() - t0)"
    )
    out = {}
    for label, env_val in (("c", None), ("python", "1")):
        if label == "c" and _modpcore is None:
            continue
        env = dict(os.environ)
        env.pop("FUSIONRING_PURE", None)
        if env_val:
            env["FUSIONRING_PURE"] = env_val
        proc = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        if proc.returncode == 0:
            out[label] = float(proc.stdout.strip())
    return p, out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller dense case, p=7 table")
    args = parser.parse_args()

    if _modpcore is None:
        print("compiled kernels not built; timing the pure backend only\n")

    print(f"{'kernel':<24} {'case':<28} {'python':>10} {'c':>10} {'speedup':>9}")
    for fn_name, case, times in backend_rows(args.quick):
        py = times.get("python")
        cc = times.get("c")
        speed = f"{py / cc:8.1f}x" if py and cc else "      n/a"
        cc_s = f"{cc * 1e3:8.2f}ms" if cc is not None else "       -"
        print(f"{fn_name:<24} {case:<28} {py * 1e3:8.2f}ms {cc_s} {speed}")

    p, table = green_table_timings(args.quick)
    print(f"\nfull green_ring({p}) build (fresh interpreter, includes import):")
    for label, seconds in table.items():
        print(f"  {label:<8} {seconds:8.3f}s")
    if "python" in table and "c" in table:
        print(f"  speedup  {table['python'] / table['c']:8.1f}x")


if __name__ == "__main__":
    main()
