"""Simple Euclidean Jordan algebras and their basic operator calculus.

Five families are constructible, keyed by the strings used everywhere in this
package (CLI, JSON, tests):

======== ============================ ===== ================== =================
family   algebra                      rank  Peirce constant n  dimension
======== ============================ ===== ================== =================
spin     R ⊕ R^{n+1}, spin factor     2     any n >= 1         n + 2
hermR    H_r(R), real symmetric       r>=1  1                  r(r+1)/2
hermC    H_r(C), complex Hermitian    r>=1  2                  r^2
hermH    H_r(H), quaternion Hermitian r>=1  4                  r(2r-1)
albert   H_3(O), octonion Hermitian   3     8                  27
======== ============================ ===== ================== =================

Coordinates
-----------
Hermitian families use the diagonal matrix units first (j = 0..r-1), then for
each pair j < k in lexicographic order the n symmetrised off-diagonal units:
coordinate (j, k, d) is the matrix with the d-th K_n basis vector at (j, k)
and its conjugate at (k, j). The spin factor uses coordinates (s, u) in
R ⊕ R^{n+1} with product

    (s, u)∘(t, v) = (st + <u, v>, sv + tu),   unit e = (1, 0).

This is H_2(K_n) in disguise: [[α, u], [ū, β]] ↦ (s, u_0, u) with
s = (α+β)/2 and u_0 = (α-β)/2 is an isomorphism of algebras.

Elements are plain numpy vectors of coordinates; real vectors live in V and
complex vectors in its complexification E = V ⊕ iV. All operators returned
here are dense matrices acting on coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .composition import (
    COMPOSITION_DIMS,
    conjugation_signs,
    multiplication_tensor,
    quaternion_to_complex_block,
    complex_block_to_quaternion,
)
from .errors import ClassificationError, DimensionMismatch, SingularElement

FAMILIES = ("spin", "hermR", "hermC", "hermH", "albert")

_HERM_PEIRCE = {"hermR": 1, "hermC": 2, "hermH": 4, "albert": 8}

# Threshold on |det P(z)| relative to the largest singular value scale.
INVERSE_DET_TOL = 1e-10


@dataclass(frozen=True)
class AlgebraDescriptor:
    """Immutable key identifying one algebra on the classification list."""

    family: str
    rank: int
    peirce_constant: int
    dim: int

    def __repr__(self):  # compact, used in error messages and reports
        return f"Algebra({self.family}, r={self.rank}, n={self.peirce_constant})"


def make_algebra(family: str, rank: int | None = None,
                 peirce_constant: int | None = None) -> AlgebraDescriptor:
    """Validate (family, rank, n) against the classification and build a key.

    Omitted arguments are filled with the family's forced value where one
    exists (spin rank 2; Hermitian Peirce constants 1/2/4; albert 3 and 8).
    """
    if family not in FAMILIES:
        raise ClassificationError(
            f"unknown family {family!r}; expected one of {FAMILIES}")
    if family == "spin":
        rank = 2 if rank is None else rank
        if rank != 2:
            raise ClassificationError("spin factors have rank 2")
        if peirce_constant is None or peirce_constant < 1:
            raise ClassificationError("spin factor needs a Peirce constant n >= 1")
        n = int(peirce_constant)
    elif family == "albert":
        rank = 3 if rank is None else rank
        n = 8 if peirce_constant is None else int(peirce_constant)
        if rank != 3 or n != 8:
            raise ClassificationError("the exceptional algebra has rank 3, n = 8")
    else:
        n = _HERM_PEIRCE[family] if peirce_constant is None else int(peirce_constant)
        if n != _HERM_PEIRCE[family]:
            raise ClassificationError(
                f"{family} forces Peirce constant {_HERM_PEIRCE[family]}, got {n}")
        if rank is None or rank < 1:
            raise ClassificationError(f"{family} needs a rank >= 1")
        if n == 8 and rank > 3:
            raise ClassificationError("octonion entries only allow rank <= 3")
    rank = int(rank)
    dim = rank + (rank * (rank - 1) // 2) * n
    return AlgebraDescriptor(family, rank, n, dim)


def desk_algebras() -> list[AlgebraDescriptor]:
    """The fixed finite catalogue exercised by reports and acceptance runs."""
    out = [make_algebra("spin", 2, n) for n in range(1, 9)]
    out += [make_algebra("hermR", r) for r in range(2, 6)]
    out += [make_algebra("hermC", r) for r in range(2, 6)]
    out += [make_algebra("hermH", r) for r in range(2, 4)]
    out.append(make_algebra("albert"))
    return out


# ---------------------------------------------------------------------------
# basis bookkeeping


def _herm_pairs(r: int) -> list[tuple[int, int]]:
    return [(j, k) for j in range(r) for k in range(j + 1, r)]


def off_diagonal_index(algebra: AlgebraDescriptor, j: int, k: int, d: int) -> int:
    """Coordinate index of the (j, k, d) off-diagonal unit, j < k."""
    r, n = algebra.rank, algebra.peirce_constant
    pos = _herm_pairs(r).index((j, k))
    return r + pos * n + d


@lru_cache(maxsize=None)
def _herm_basis_matrices(rank: int, n: int) -> np.ndarray:
    """All basis elements as K_n-valued matrices, shape (dim, r, r, n)."""
    r = rank
    dim = r + (r * (r - 1) // 2) * n
    basis = np.zeros((dim, r, r, n))
    for j in range(r):
        basis[j, j, j, 0] = 1.0
    conj = conjugation_signs(n)
    idx = r
    for (j, k) in _herm_pairs(r):
        for d in range(n):
            basis[idx, j, k, d] = 1.0
            basis[idx, k, j, d] = conj[d]
            idx += 1
    basis.setflags(write=False)
    return basis


def _kmatrix_to_coords(algebra: AlgebraDescriptor, mat: np.ndarray) -> np.ndarray:
    r, n = algebra.rank, algebra.peirce_constant
    coords = np.empty(algebra.dim, dtype=mat.dtype)
    coords[:r] = mat[range(r), range(r), 0]
    idx = r
    for (j, k) in _herm_pairs(r):
        coords[idx:idx + n] = mat[j, k]
        idx += n
    return coords


@lru_cache(maxsize=None)
def multiplication_table(algebra: AlgebraDescriptor) -> np.ndarray:
    """Structure tensor T with (x∘y)_c = Σ T[a, b, c] x_a y_b. Cached."""
    if algebra.family == "spin":
        n = algebra.peirce_constant
        dim = algebra.dim
        T = np.zeros((dim, dim, dim))
        T[0, 0, 0] = 1.0
        for i in range(1, dim):
            T[0, i, i] = 1.0
            T[i, 0, i] = 1.0
            T[i, i, 0] = 1.0
        T.setflags(write=False)
        return T
    r, n = algebra.rank, algebra.peirce_constant
    basis = _herm_basis_matrices(r, n)
    tk = multiplication_tensor(n)
    prod = np.einsum("aijm,bjln,mnp->abilp", basis, basis, tk)
    sym = 0.5 * (prod + prod.transpose(1, 0, 2, 3, 4))
    T = np.empty((algebra.dim, algebra.dim, algebra.dim))
    for a in range(algebra.dim):
        for b in range(algebra.dim):
            T[a, b] = _kmatrix_to_coords(algebra, sym[a, b])
    T.setflags(write=False)
    return T


@lru_cache(maxsize=None)
def _lmul_basis(algebra: AlgebraDescriptor) -> np.ndarray:
    """Stack of L(b_a) operators, shape (dim, dim, dim)."""
    T = multiplication_table(algebra)
    # L(b_a)[k, j] = T[a, j, k]
    ops = T.transpose(0, 2, 1).copy()
    ops.setflags(write=False)
    return ops


@lru_cache(maxsize=None)
def trace_gram(algebra: AlgebraDescriptor) -> np.ndarray:
    """Gram matrix of the trace form: G[a, b] = tr L(b_a ∘ b_b).

    This is the associative normalisation: every L(a) is self-adjoint for
    it, Peirce spaces are orthogonal, and on a simple algebra it equals
    (dim/rank) times the generic trace form. The non-associative candidate
    tr(L(x)L(y)) differs by a tr(x)tr(y) term and fails both properties.
    """
    T = multiplication_table(algebra)
    ops = _lmul_basis(algebra)
    ltr = np.einsum("cii->c", ops)
    G = np.einsum("abc,c->ab", T, ltr)
    G = 0.5 * (G + G.T)
    G.setflags(write=False)
    return G


def unit(algebra: AlgebraDescriptor) -> np.ndarray:
    e = np.zeros(algebra.dim)
    if algebra.family == "spin":
        e[0] = 1.0
    else:
        e[:algebra.rank] = 1.0
    return e


def standard_frame(algebra: AlgebraDescriptor) -> np.ndarray:
    """A fixed frame of minimal idempotents, rows of shape (rank, dim)."""
    frame = np.zeros((algebra.rank, algebra.dim))
    if algebra.family == "spin":
        frame[0, 0] = frame[1, 0] = 0.5
        frame[0, 1] = 0.5
        frame[1, 1] = -0.5
    else:
        for j in range(algebra.rank):
            frame[j, j] = 1.0
    return frame


# ---------------------------------------------------------------------------
# element plumbing


def as_element(algebra: AlgebraDescriptor, x) -> np.ndarray:
    """Coerce to a coordinate vector; complex dtype is kept, else float."""
    arr = np.asarray(x)
    if arr.shape != (algebra.dim,):
        raise DimensionMismatch(
            f"expected {algebra.dim} coordinates for {algebra}, got shape {arr.shape}")
    if np.iscomplexobj(arr):
        return arr.astype(complex)
    return arr.astype(float)


def as_real_element(algebra: AlgebraDescriptor, x) -> np.ndarray:
    arr = as_element(algebra, x)
    if np.iscomplexobj(arr):
        if np.max(np.abs(arr.imag)) > 0:
            raise DimensionMismatch("expected a real element of V")
        arr = arr.real
    return arr


# ---------------------------------------------------------------------------
# core operations


def jordan_product(algebra: AlgebraDescriptor, x, y) -> np.ndarray:
    """x∘y, complex-bilinear on E = V ⊕ iV."""
    x = as_element(algebra, x)
    y = as_element(algebra, y)
    T = multiplication_table(algebra)
    return np.einsum("abc,a,b->c", T, x, y)


def lmul(algebra: AlgebraDescriptor, x) -> np.ndarray:
    """Multiplication operator L(x) with L(x) y = x∘y."""
    x = as_element(algebra, x)
    ops = _lmul_basis(algebra)
    return np.tensordot(x, ops, axes=(0, 0))


def pquad(algebra: AlgebraDescriptor, x, y=None) -> np.ndarray:
    """Quadratic representation P(x) = 2L(x)² - L(x²), or its polarisation

    P(x, y) = L(x)L(y) + L(y)L(x) - L(x∘y), so that P(x, x) = P(x).
    """
    Lx = lmul(algebra, x)
    if y is None:
        xx = jordan_product(algebra, x, x)
        return 2.0 * (Lx @ Lx) - lmul(algebra, xx)
    Ly = lmul(algebra, y)
    xy = jordan_product(algebra, x, y)
    return Lx @ Ly + Ly @ Lx - lmul(algebra, xy)


def trace_form(algebra: AlgebraDescriptor, x, y) -> float | complex:
    """(x|y) = tr L(x∘y); positive definite on V, bilinear on E.

    All multiplication operators L(a) are self-adjoint with respect to
    this form, equivalently (x∘z|y) = (z|x∘y).
    """
    x = as_element(algebra, x)
    y = as_element(algebra, y)
    val = x @ trace_gram(algebra) @ y
    return val if np.iscomplexobj(val) else float(val)


def generic_trace(algebra: AlgebraDescriptor, x) -> float | complex:
    """Sum of eigenvalues; equals (rank/dim) tr L(x) on a simple algebra."""
    Lx = lmul(algebra, x)
    val = np.trace(Lx) * algebra.rank / algebra.dim
    return val if np.iscomplexobj(val) else float(val)


def star(algebra: AlgebraDescriptor, z) -> np.ndarray:
    """Conjugate-linear involution of E fixing V: (x + iy)* = x - iy."""
    return np.conj(as_element(algebra, z))


def jordan_inverse(algebra: AlgebraDescriptor, z, tol: float = INVERSE_DET_TOL) -> np.ndarray:
    """Solve P(z) w = z; raises SingularElement when P(z) is singular.

    Singularity is decided on the smallest singular value of P(z) relative
    to the largest. A determinant test would be scale and dimension
    fragile: |det P(t·e)| = t^(2 dim) crosses any fixed cutoff for healthy
    invertible elements once the algebra is large.
    """
    z = as_element(algebra, z)
    P = pquad(algebra, z)
    sv = np.linalg.svd(P, compute_uv=False)
    if sv[0] <= 0.0 or sv[-1] <= tol * sv[0]:
        raise SingularElement(
            f"quadratic representation has relative smallest singular value "
            f"{0.0 if sv[0] <= 0 else sv[-1] / sv[0]:.2e} for {algebra}")
    return np.linalg.solve(P, z)


def triple_product(algebra: AlgebraDescriptor, x, y, z) -> np.ndarray:
    """Jordan triple product {x y z} = P(x, z) y*."""
    ystar = star(algebra, y)
    return pquad(algebra, x, z) @ ystar


# ---------------------------------------------------------------------------
# matrix realisations (Hermitian families only)


def element_to_matrix(algebra: AlgebraDescriptor, x) -> np.ndarray:
    """Hermitian matrix realisation used by the spectral routines.

    hermR gives a real symmetric r x r matrix, hermC a complex Hermitian
    r x r matrix, hermH a complex Hermitian 2r x 2r matrix through the
    quaternion block embedding. Spin and albert have no complex matrix model
    here and raise ClassificationError.
    """
    x = as_real_element(algebra, x)
    r = algebra.rank
    fam = algebra.family
    if fam == "hermR":
        M = np.zeros((r, r))
        M[range(r), range(r)] = x[:r]
        idx = r
        for (j, k) in _herm_pairs(r):
            M[j, k] = M[k, j] = x[idx]
            idx += 1
        return M
    if fam == "hermC":
        M = np.zeros((r, r), dtype=complex)
        M[range(r), range(r)] = x[:r]
        idx = r
        for (j, k) in _herm_pairs(r):
            M[j, k] = x[idx] + 1j * x[idx + 1]
            M[k, j] = np.conj(M[j, k])
            idx += 2
        return M
    if fam == "hermH":
        M = np.zeros((2 * r, 2 * r), dtype=complex)
        for j in range(r):
            M[2 * j: 2 * j + 2, 2 * j: 2 * j + 2] = x[j] * np.eye(2)
        idx = r
        for (j, k) in _herm_pairs(r):
            block = quaternion_to_complex_block(x[idx:idx + 4])
            M[2 * j: 2 * j + 2, 2 * k: 2 * k + 2] = block
            M[2 * k: 2 * k + 2, 2 * j: 2 * j + 2] = block.conj().T
            idx += 4
        return M
    raise ClassificationError(f"no complex matrix realisation for family {fam!r}")


def matrix_to_element(algebra: AlgebraDescriptor, M: np.ndarray) -> np.ndarray:
    """Inverse of :func:`element_to_matrix` (Hermitian part is implied)."""
    r = algebra.rank
    fam = algebra.family
    x = np.zeros(algebra.dim)
    if fam == "hermR":
        x[:r] = np.diag(M)
        idx = r
        for (j, k) in _herm_pairs(r):
            x[idx] = 0.5 * (M[j, k] + M[k, j])
            idx += 1
        return x
    if fam == "hermC":
        x[:r] = np.diag(M).real
        idx = r
        for (j, k) in _herm_pairs(r):
            entry = 0.5 * (M[j, k] + np.conj(M[k, j]))
            x[idx], x[idx + 1] = entry.real, entry.imag
            idx += 2
        return x
    if fam == "hermH":
        for j in range(r):
            block = M[2 * j: 2 * j + 2, 2 * j: 2 * j + 2]
            x[j] = 0.5 * np.trace(block).real
        idx = r
        for (j, k) in _herm_pairs(r):
            upper = M[2 * j: 2 * j + 2, 2 * k: 2 * k + 2]
            lower = M[2 * k: 2 * k + 2, 2 * j: 2 * j + 2]
            block = 0.5 * (upper + lower.conj().T)
            x[idx:idx + 4] = complex_block_to_quaternion(block)
            idx += 4
        return x
    raise ClassificationError(f"no complex matrix realisation for family {fam!r}")
