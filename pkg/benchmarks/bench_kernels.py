"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit

from sievekit import _kernels_py as py

try:
    from sievekit import _ckernels as cy
except ImportError:
    cy = None


def workloads(rng: random.Random):
    a = [rng.randint(-9, 9) for _ in range(300)]
    b = [rng.randint(-9, 9) for _ in range(300)]
    prod = py.poly_mul([1] * 40, [1] * 60)
    monic = [rng.randint(-2, 2) for _ in range(24)] + [1]
    xs = [rng.randint(1, 4) for _ in range(30)]
    # matchings of a fan-like triangulation of a 14-gon
    faces = 12
    choices = [[f for f in range(faces) if abs(f - v) <= 2] for v in range(13)]
    return {
        "poly_mul (300x300)": lambda k: k.poly_mul(a, b),
        "poly_div_qint (deg 98 / [7])": lambda k: k.poly_div_qint(prod, 7),
        "poly_rem_monic (deg 299 mod deg 24)": lambda k: k.poly_rem_monic(a, monic),
        "continuant (30 terms)": lambda k: k.continuant(xs, -1),
        "count_matchings (13 slots)": lambda k: k.count_matchings(choices, [1] * faces),
    }


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    rng = random.Random(0)
    print(f"{'kernel':40s} {'python (ms)':>12s} {'cython (ms)':>12s} {'speedup':>8s}")
    for name, call in workloads(rng).items():
        number = 20
        t_py = min(timeit.repeat(lambda: call(py), number=number, repeat=args.repeat)) / number
        if cy is None:
            print(f"{name:40s} {t_py * 1e3:12.3f} {'n/a':>12s}")
            continue
        assert call(py) == call(cy) or list(call(py)) == list(call(cy))
        t_cy = min(timeit.repeat(lambda: call(cy), number=number, repeat=args.repeat)) / number
        print(f"{name:40s} {t_py * 1e3:12.3f} {t_cy * 1e3:12.3f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
