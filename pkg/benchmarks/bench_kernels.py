"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

import numpy as np

from uurjpdd import _fallback
from uurjpdd.measurement import random_unitary

try:
    from uurjpdd import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels is None:
        print("compiled kernels not built; run `python setup.py build_ext --inplace`")
        return

    rng = np.random.default_rng(0)
    print(f"{'kernel':<22}{'d':>3}{'python [s]':>14}{'cython [s]':>14}{'speedup':>10}{'max |diff|':>13}")
    for d in (2, 4, 6, 8):
        x = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        h = x + x.conj().T
        tp = best_of(lambda: _fallback.max_eigenvalue(h), args.repeat, 200)
        tc = best_of(lambda: _kernels.max_eigenvalue(h), args.repeat, 200)
        diff = abs(_fallback.max_eigenvalue(h) - _kernels.max_eigenvalue(h))
        print(f"{'max_eigenvalue':<22}{d:>3}{tp:>14.3e}{tc:>14.3e}{tp / tc:>10.0f}{diff:>13.1e}")
    for d in (3, 4, 5):
        u = random_unitary(d, d)
        number = 1 if d == 5 else 3
        tp = best_of(lambda: _fallback.norm_table(u), args.repeat, number)
        tc = best_of(lambda: _kernels.norm_table(u), args.repeat, number)
        diff = float(np.max(np.abs(_fallback.norm_table(u)[0] - _kernels.norm_table(u)[0])))
        print(f"{'norm_table':<22}{d:>3}{tp:>14.3e}{tc:>14.3e}{tp / tc:>10.0f}{diff:>13.1e}")
    for d in (6, 7, 8):
        u = random_unitary(d, d)
        tc = best_of(lambda: _kernels.norm_table(u), 1, 1)
        print(f"{'norm_table':<22}{d:>3}{'-':>14}{tc:>14.3e}{'':>10}{'':>13}")


if __name__ == "__main__":
    main()
