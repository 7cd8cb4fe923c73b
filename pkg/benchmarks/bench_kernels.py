#!/usr/bin/env python3
"""Benchmark the jitted Jacobi eigensolver against the plain-Python path.

The jitted dispatcher is whatever triqent.kernels selected at import
time (numba unless TRIQENT_DISABLE_JIT is set or numba is missing);
``jacobi_eigh_py`` is always the un-jitted implementation, so running
this with JIT enabled prints the speedup the hot kernel gets.
"""

import time

import numpy as np

from triqent._jit import JIT_ENABLED
from triqent.kernels import jacobi_eigh, jacobi_eigh_py

REPEATS = 300
REL_TOL = 1e-14
MAX_SWEEPS = 100


def _random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return np.ascontiguousarray((g + g.conj().T) / 2)


def _time(func, mats):
    start = time.perf_counter()
    for m in mats:
        func(m, REL_TOL, MAX_SWEEPS)
    return (time.perf_counter() - start) / len(mats)


def main():
    rng = np.random.default_rng(1234)
    print(f"JIT enabled: {JIT_ENABLED}")
    if JIT_ENABLED:
        jacobi_eigh(_random_hermitian(rng, 2), REL_TOL, MAX_SWEEPS)  # compile once
    print(f"{'dim':>4} {'python (us)':>14} {'selected (us)':>14} {'speedup':>9}")
    for n in (2, 4, 8):
        mats = [_random_hermitian(rng, n) for _ in range(REPEATS)]
        t_py = _time(jacobi_eigh_py, mats)
        t_sel = _time(jacobi_eigh, mats)
        print(f"{n:>4} {t_py * 1e6:>14.2f} {t_sel * 1e6:>14.2f} {t_py / t_sel:>9.1f}x")


if __name__ == "__main__":
    main()
