"""Compare the gmpy2 and stdlib-fractions rational backends.

The package picks a backend at import time (see etainv.coeffcore), so each
timing runs in a fresh subprocess with ETAINV_RATIONAL set.  The workload is
the real pipeline: eta reports, a family sweep, and the degree-one
polynomial extraction, all exact arithmetic.

Usage: python benchmarks/bench_rational_backends.py [repeats]
"""

import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import etainv
from etainv.invariants import FamilyParams, a1_poly_in_s, family_scan, relative_eta

t0 = time.perf_counter()
for k in (2, 3, 4):
    relative_eta(FamilyParams(k, 1, 2, 3))
family_scan(3, 1, 2, list(range(1, 100, 2)))
for k in (2, 3, 4, 5):
    a1_poly_in_s(k)
elapsed = time.perf_counter() - t0
print(json.dumps({"backend": etainv.RATIONAL_BACKEND, "seconds": elapsed}))
"""


def run_once(backend: str) -> dict:
    env = dict(os.environ, ETAINV_RATIONAL=backend)
    out = subprocess.run(
        [sys.executable, "-c", WORKLOAD], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(f"workload failed under {backend}:\n{out.stderr}")
    result = json.loads(out.stdout)
    if result["backend"] != backend:
        raise RuntimeError(f"requested {backend}, got {result['backend']}")
    return result


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    results = {}
    for backend in ("fraction", "gmpy2"):
        try:
            times = [run_once(backend)["seconds"] for _ in range(repeats)]
        except RuntimeError as exc:
            print(f"{backend:>9}: unavailable ({exc})")
            continue
        best = min(times)
        results[backend] = best
        print(f"{backend:>9}: best of {repeats} = {best:.3f}s")
    if len(results) == 2:
        ratio = results["fraction"] / results["gmpy2"]
        print(f"speedup (gmpy2 over fraction): {ratio:.2f}x")


if __name__ == "__main__":
    main()
