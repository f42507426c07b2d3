"""Real composition algebras K_n for n in {1, 2, 4, 8}.

K_n is R^n with a bilinear product, unit e_0 and conjugation
x̄ = (x_1, -x_2, ..., -x_n), normalised so that x x̄ = (x|x) e_0 with the
standard inner product. The tables are produced by Cayley–Dickson doubling

    (a, b)(c, d) = (a c - d̄ b,  d a + b c̄),    conj(a, b) = (ā, -b),

which yields R, C, H (with ij = k, jk = i, ki = j) and the octonions.
Products are stored as structure tensors T with (xy)_k = Σ T[i, j, k] x_i y_j.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

COMPOSITION_DIMS = (1, 2, 4, 8)


@lru_cache(maxsize=None)
def multiplication_tensor(n: int) -> np.ndarray:
    """Structure tensor of K_n, shape (n, n, n). Cached, read-only."""
    if n not in COMPOSITION_DIMS:
        raise ValueError(f"no composition algebra of dimension {n}")
    table = np.zeros((1, 1, 1))
    table[0, 0, 0] = 1.0
    m = 1
    while m < n:
        table = _double(table)
        m *= 2
    table.setflags(write=False)
    return table


def _double(table: np.ndarray) -> np.ndarray:
    m = table.shape[0]
    conj = conjugation_signs(m)
    big = np.zeros((2 * m, 2 * m, 2 * m))

    def mul(x, y):
        return np.einsum("ijk,i,j->k", table, x, y)

    eye = np.eye(m)
    for i in range(m):
        for j in range(m):
            a, c = eye[i], eye[j]
            # (a,0)(c,0) = (ac, 0)
            big[i, j, :m] = mul(a, c)
            # (a,0)(0,d) = (0, da)
            big[i, m + j, m:] = mul(c, a)
            # (0,b)(c,0) = (0, b c̄)
            big[m + i, j, m:] = mul(a, conj * c)
            # (0,b)(0,d) = (-d̄ b, 0)
            big[m + i, m + j, :m] = -mul(conj * c, a)
    return big


@lru_cache(maxsize=None)
def conjugation_signs(n: int) -> np.ndarray:
    signs = -np.ones(n)
    signs[0] = 1.0
    signs.setflags(write=False)
    return signs


def multiply(n: int, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.einsum("ijk,i,j->k", multiplication_tensor(n), x, y)


def conjugate(x: np.ndarray) -> np.ndarray:
    return conjugation_signs(len(x)) * x


def quaternion_to_complex_block(q: np.ndarray) -> np.ndarray:
    """2x2 complex image of q = q0 + q1 i + q2 j + q3 k.

    With a = q0 + i q1 and b = q2 + i q3 the image is [[a, b], [-b̄, ā]];
    conjugate quaternions map to conjugate-transpose blocks, so Hermitian
    quaternionic matrices embed as complex Hermitian ones.
    """
    a = q[0] + 1j * q[1]
    b = q[2] + 1j * q[3]
    return np.array([[a, b], [-np.conj(b), np.conj(a)]])


def complex_block_to_quaternion(block: np.ndarray) -> np.ndarray:
    """Inverse of :func:`quaternion_to_complex_block`, averaging both copies."""
    a = 0.5 * (block[0, 0] + np.conj(block[1, 1]))
    b = 0.5 * (block[0, 1] - np.conj(block[1, 0]))
    return np.array([a.real, a.imag, b.real, b.imag])
