"""Timing comparison of the compiled and pure-Python series kernels.

Run:  python3 benchmarks/bench_kernels.py [order ...]
"""

import sys
import time

import numpy as np

from ksverify.kernels import available_backends, revert


def _inputs(order: int):
    rng = np.random.Generator(np.random.Philox(key=order))
    a = (rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1)) * 0.5 ** np.arange(order + 1)
    b = a[::-1].copy()
    a = a.astype(np.complex128)
    b = b.astype(np.complex128)
    recip_in = a.copy()
    recip_in[0] = 1.0
    comp_inner = b.copy()
    comp_inner[0] = 0.0
    rev_in = a * 0.2
    rev_in[0] = 0.0
    rev_in[1] = 1.0
    zs = 0.9 * np.exp(1j * np.linspace(0.0, 6.28, 720))
    return a, b, recip_in, comp_inner, rev_in, zs


def _time(fn, *args, repeats: int = 20) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(orders) -> None:
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    for order in orders:
        a, b, recip_in, comp_inner, rev_in, zs = _inputs(order)
        print(f"\norder {order}")
        rows = {
            "mul": lambda impl: _time(impl.mul, a, b),
            "reciprocal": lambda impl: _time(impl.reciprocal, recip_in),
            "compose": lambda impl: _time(impl.compose, a, comp_inner, repeats=5),
            "eval_many(720)": lambda impl: _time(impl.eval_many, a, zs),
            "revert": lambda impl: _time(lambda c: revert(c, impl=impl), rev_in, repeats=5),
        }
        for name, runner in rows.items():
            times = {bk: runner(impl) for bk, impl in backends.items()}
            line = "  ".join(f"{bk}: {t * 1e6:9.1f} us" for bk, t in times.items())
            if len(times) == 2:
                py, cy = times.get("python"), times.get("cython")
                if py and cy:
                    line += f"  speedup: {py / cy:5.1f}x"
            print(f"  {name:15s} {line}")


if __name__ == "__main__":
    main([int(x) for x in sys.argv[1:]] or [64, 256, 1024])
