"""Compare the compiled and pure-Python descent kernels on full box scans.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each case classifies every positive lattice vector up to a height bound,
which is the inner loop of root enumeration.
"""

from __future__ import annotations

import argparse
import time

from kmchamber import kernels

CASES = [
    ("affine A1, H=400", ((2, -2), (-2, 2)), 400),
    ("K3, H=300", ((2, -3), (-3, 2)), 300),
    ("markov, H=45", ((2, -2, -2), (-2, 2, -2), (-2, -2, 2)), 45),
    ("affine A3, H=24", ((2, -1, 0, -1), (-1, 2, -1, 0), (0, -1, 2, -1), (-1, 0, -1, 2)), 24),
]


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled kernels are not built; only the pure-Python backend is available")
    print(f"{'case':<18} {'roots':>6} " + " ".join(f"{b + ' (s)':>12}" for b in backends) + "  speedup")
    for label, a, H in CASES:
        results = {b: kernels.scan_box(a, H, b) for b in backends}
        ref = results["python"]
        assert all(r == ref for r in results.values()), "backends disagree"
        times = {b: best_of(lambda b=b: kernels.scan_box(a, H, b), args.repeat) for b in backends}
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else "       -"
        row = " ".join(f"{times[b]:12.4f}" for b in backends)
        print(f"{label:<18} {len(ref):>6} {row}  {speed}")


if __name__ == "__main__":
    main()
