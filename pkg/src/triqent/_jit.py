"""Optional numba acceleration for the hot kernels.

The jitted path is used when numba is importable and the environment
variable TRIQENT_DISABLE_JIT is unset (or falsy).  With the flag set the
same kernel source runs as plain numpy/Python, which keeps the package
importable without numba and gives a reference path for benchmarking.
"""

import os


def _jit_disabled_by_env() -> bool:
    return os.environ.get("TRIQENT_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes", "on"}


JIT_ENABLED = False
if not _jit_disabled_by_env():
    try:
        from numba import njit as _numba_njit

        JIT_ENABLED = True
    except ImportError:
        pass


if JIT_ENABLED:

    def njit(func):
        return _numba_njit(cache=True)(func)

else:

    def njit(func):
        return func
