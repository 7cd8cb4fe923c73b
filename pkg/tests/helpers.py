"""Shared test utilities: random unitaries and structured random states."""

import numpy as np

from triqent import PureState


def random_unitary(rng, n=2):
    """Haar-random unitary via QR with positive diagonal phase fix."""
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(g)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_qubit(rng):
    z = rng.standard_normal(2) + 1j * rng.standard_normal(2)
    return z / np.linalg.norm(z)


def random_pair(rng):
    z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    return z / np.linalg.norm(z)


def random_product_state(rng):
    a, b, c = random_qubit(rng), random_qubit(rng), random_qubit(rng)
    return PureState(np.einsum("i,j,k->ijk", a, b, c).reshape(8))


def random_biseparable(rng, separable_qubit="A"):
    """Random single qubit times a random (generically entangled) pair."""
    s = random_qubit(rng)
    p = random_pair(rng).reshape(2, 2)
    if separable_qubit == "A":
        t = np.einsum("i,jk->ijk", s, p)
    elif separable_qubit == "B":
        t = np.einsum("j,ik->ijk", s, p)
    else:
        t = np.einsum("k,ij->ijk", s, p)
    return PureState(t.reshape(8))


def nonzero_coefficients(rng, n, min_mag=0.1):
    """n complex coefficients, normalized, all magnitudes >= min_mag."""
    while True:
        z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        z /= np.linalg.norm(z)
        if np.abs(z).min() >= min_mag:
            return z
