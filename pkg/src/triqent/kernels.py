"""Hot numeric kernels, written in loop form so numba can compile them.

The only kernel that dominates runtime is the cyclic Jacobi
diagonalization of a complex Hermitian matrix; everything else in the
package is O(1) numpy work on matrices no larger than 8x8.

``jacobi_eigh`` is the dispatcher selected by :mod:`triqent._jit`
(jitted when available), ``jacobi_eigh_py`` is always the plain-Python
implementation; benchmarks compare the two.
"""

import numpy as np

from ._jit import JIT_ENABLED, njit


def _jacobi_eigh_impl(a, rel_tol, max_sweeps):
    """Cyclic Jacobi rotations for a complex Hermitian matrix.

    One rotation removes the pivot h[p, q] by first rotating its phase
    away and then applying the classic 2x2 symmetric Schur rotation.
    Sweeps stop once the off-diagonal Frobenius norm drops below
    ``rel_tol`` times the Frobenius norm of the input.

    Returns ``(diag, vectors, sweeps, converged)`` with the unsorted real
    diagonal and the accumulated unitary whose columns are eigenvectors.
    """
    n = a.shape[0]
    h = a.copy()
    v = np.eye(n, dtype=np.complex128)

    fro = 0.0
    for r in range(n):
        for c in range(n):
            x = h[r, c]
            fro += x.real * x.real + x.imag * x.imag
    fro = np.sqrt(fro)
    if fro == 0.0:
        return np.zeros(n), v, 0, True
    thresh = rel_tol * fro

    sweeps = 0
    while sweeps <= max_sweeps:
        off = 0.0
        for r in range(n - 1):
            for c in range(r + 1, n):
                x = h[r, c]
                off += 2.0 * (x.real * x.real + x.imag * x.imag)
        if np.sqrt(off) <= thresh:
            d = np.empty(n)
            for r in range(n):
                d[r] = h[r, r].real
            return d, v, sweeps, True
        if sweeps == max_sweeps:
            break

        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = h[p, q]
                r_abs = abs(apq)
                if r_abs == 0.0:
                    continue
                ph = apq / r_abs
                phc = ph.conjugate()
                tau = (h[q, q].real - h[p, p].real) / (2.0 * r_abs)
                if abs(tau) > 1e150:
                    t = 0.5 / tau  # asymptotic small root; tau*tau would overflow
                elif tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c

                for k in range(n):
                    akp = h[k, p]
                    akq = h[k, q]
                    h[k, p] = c * akp - s * phc * akq
                    h[k, q] = s * akp + c * phc * akq
                for k in range(n):
                    apk = h[p, k]
                    aqk = h[q, k]
                    h[p, k] = c * apk - s * ph * aqk
                    h[q, k] = s * apk + c * ph * aqk
                h[p, q] = 0.0
                h[q, p] = 0.0
                for k in range(n):
                    vkp = v[k, p]
                    vkq = v[k, q]
                    v[k, p] = c * vkp - s * phc * vkq
                    v[k, q] = s * vkp + c * phc * vkq
        sweeps += 1

    d = np.empty(n)
    for r in range(n):
        d[r] = h[r, r].real
    return d, v, sweeps, False


jacobi_eigh_py = _jacobi_eigh_impl
jacobi_eigh = njit(_jacobi_eigh_impl) if JIT_ENABLED else _jacobi_eigh_impl
