"""Bounded realizations: Cayley transform, Lie ball, Siegel half space.

The Cayley map γ(z) = (z−e)∘(z+e)⁻¹ sends the tube domain Ω ⊕ iV onto a
bounded circled domain with center γ(e) = 0. For the spin family that
domain becomes the classical Lie ball

    D = {z ∈ ℂ^m : (z|z) + sqrt((z|z)² − |⟨z,z⟩|²) < 1}

after the coordinate twist (z₀, z₁, …) ↦ (z₀, iz₁, …); the twist is fixed
here once and verified by sampling in the tests (boundary tube points land
exactly on the smooth boundary stratum). For the rank-2 Hermitian case the
upper half space carries the usual Sp(2r, ℝ) Möbius action, whose isotropy
subalgebra at a rank-deficient cone point is computed as a linear nullity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import algebra as al
from .errors import (
    DimensionMismatch,
    NotInLightCone,
    NotSymplectic,
    NumericalFailure,
    SingularDenominator,
)

INTERIOR = "Interior"
SMOOTH_BOUNDARY = "SmoothBoundary_S1"
SHILOV = "Shilov_S0"
EXTERIOR = "Exterior"

_CACHE_TOL = 1e-12
_SYMPLECTIC_TOL = 1e-10


def cayley(algebra: al.AlgebraDescriptor, z):
    """γ(z) = (z − e) ∘ (z + e)⁻¹, defined where z + e is invertible."""
    z = al.as_element(algebra, z)
    e = al.unit(algebra)
    return al.jordan_product(algebra, z - e, al.jordan_inverse(algebra, z + e))


def inverse_cayley(algebra: al.AlgebraDescriptor, w):
    """γ⁻¹(w) = (e + w) ∘ (e − w)⁻¹."""
    w = al.as_element(algebra, w)
    e = al.unit(algebra)
    return al.jordan_product(algebra, e + w, al.jordan_inverse(algebra, e - w))


def spin_to_ball(z):
    """Coordinate twist identifying the spin Cayley image with the Lie ball."""
    z = np.asarray(z, dtype=complex)
    out = z.copy()
    out[1:] = 1j * z[1:]
    return out


def ball_to_spin(w):
    w = np.asarray(w, dtype=complex)
    out = w.copy()
    out[1:] = -1j * w[1:]
    return out


@dataclass
class LieBallPoint:
    """ℂ^m coordinates with the two cached forms (z|z) and ⟨z,z⟩."""

    coords: np.ndarray
    hermitian: float = None
    bilinear: complex = None

    def __post_init__(self):
        self.coords = np.atleast_1d(np.asarray(self.coords, dtype=complex))
        if self.coords.ndim != 1 or self.coords.size == 0:
            raise DimensionMismatch("Lie ball point must be a nonempty vector")
        h = float(np.real(np.vdot(self.coords, self.coords)))
        b = complex(np.sum(self.coords ** 2))
        if self.hermitian is None:
            self.hermitian = h
        elif abs(self.hermitian - h) > _CACHE_TOL * max(1.0, h):
            raise DimensionMismatch("cached (z|z) disagrees with coordinates")
        if self.bilinear is None:
            self.bilinear = b
        elif abs(self.bilinear - b) > _CACHE_TOL * max(1.0, abs(b)):
            raise DimensionMismatch("cached <z,z> disagrees with coordinates")


def lie_ball_membership(z, tol: float = 1e-8) -> str:
    """Classify against D = {(z|z) + sqrt((z|z)² − |⟨z,z⟩|²) < 1}.

    The Shilov stratum (z|z) = |⟨z,z⟩| = 1 is tested first since it also
    satisfies q = 1; the rest of q = 1 is the smooth boundary stratum.
    """
    point = z if isinstance(z, LieBallPoint) else LieBallPoint(z)
    h = point.hermitian
    babs = abs(point.bilinear)
    q = h + np.sqrt(max(h * h - babs * babs, 0.0))
    if abs(h - 1.0) < tol and abs(babs - 1.0) < tol:
        return SHILOV
    if abs(q - 1.0) < tol:
        return SMOOTH_BOUNDARY
    if q < 1.0 - tol:
        return INTERIOR
    return EXTERIOR


def symplectic_form(r: int) -> np.ndarray:
    """J = (0, e; −e, 0) in r×r blocks."""
    J = np.zeros((2 * r, 2 * r))
    J[:r, r:] = np.eye(r)
    J[r:, :r] = -np.eye(r)
    return J


def symplectic_lie_algebra_basis(r: int) -> np.ndarray:
    """Basis of sp(r, ℝ): blocks (α, β; γ, −αᵀ) with β, γ symmetric."""
    basis = []
    for i in range(r):
        for j in range(r):
            X = np.zeros((2 * r, 2 * r))
            X[i, j] = 1.0
            X[r + j, r + i] = -1.0
            basis.append(X)
    for i in range(r):
        for j in range(i, r):
            B = np.zeros((2 * r, 2 * r))
            B[i, r + j] = B[j, r + i] = 1.0
            basis.append(B)
            C = np.zeros((2 * r, 2 * r))
            C[r + i, j] = C[r + j, i] = 1.0
            basis.append(C)
    return np.stack(basis)


def _check_symplectic(A: np.ndarray, tol: float = _SYMPLECTIC_TOL) -> int:
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] % 2:
        raise NotSymplectic(f"matrix shape {A.shape} is not 2r x 2r")
    r = A.shape[0] // 2
    J = symplectic_form(r)
    resid = np.linalg.norm(A.T @ J @ A - J)
    scale = max(1.0, np.linalg.norm(A) ** 2)
    if resid > tol * scale:
        raise NotSymplectic(f"A^T J A - J has norm {resid:.2e}")
    return r


def siegel_action(A, z):
    """Möbius action A(z) = (az + b)(cz + d)⁻¹ on the Siegel half space.

    z is a complex symmetric r×r matrix; when its imaginary part is
    positive definite the image stays in the half space and that is
    verified on the result.
    """
    A = np.asarray(A, dtype=float)
    r = _check_symplectic(A)
    z = np.asarray(z, dtype=complex)
    if z.shape != (r, r):
        raise DimensionMismatch(f"point shape {z.shape}, expected {(r, r)}")
    if np.linalg.norm(z - z.T) > 1e-8 * max(1.0, np.linalg.norm(z)):
        raise DimensionMismatch("Siegel point must be a symmetric matrix")
    a, b = A[:r, :r], A[:r, r:]
    c, d = A[r:, :r], A[r:, r:]
    denom = c @ z + d
    sv = np.linalg.svd(denom, compute_uv=False)
    if sv[-1] < 1e-12 * max(1.0, sv[0]):
        raise SingularDenominator(
            f"cz + d has smallest singular value {sv[-1]:.2e}")
    w = np.linalg.solve(denom.T, (a @ z + b).T).T
    w = 0.5 * (w + w.T)
    input_upper = np.all(np.linalg.eigvalsh((z - z.conj().T) / 2j) > 0)
    if input_upper:
        lo = np.min(np.linalg.eigvalsh((w - w.conj().T) / 2j))
        if lo < -1e-9 * max(1.0, np.linalg.norm(w)):
            raise NumericalFailure(
                f"image left the Siegel half space (min imag eigenvalue {lo:.2e})")
    return w


def isotropy_dimension(s, tol: float = 1e-8) -> int:
    """Nullity of {X ∈ sp(r,ℝ) : αs + sαᵀ = 0, β + sγs = 0} at a cone point.

    These are the linearized stabilizer equations of the boundary point s
    under the Siegel Möbius action; s must be a nonzero rank-deficient
    positive semidefinite symmetric matrix (a proper cone boundary point).
    """
    s = np.asarray(s, dtype=float)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise NotInLightCone(f"expected a square matrix, got shape {s.shape}")
    r = s.shape[0]
    scale = np.linalg.norm(s)
    if scale == 0:
        raise NotInLightCone("zero matrix is not a cone boundary point")
    if np.linalg.norm(s - s.T) > tol * scale:
        raise NotInLightCone("matrix is not symmetric")
    eig = np.linalg.eigvalsh(s)
    if eig[0] < -tol * scale:
        raise NotInLightCone(f"matrix has a negative eigenvalue {eig[0]:.2e}")
    if eig[0] > tol * scale:
        raise NotInLightCone("matrix has full rank, interior cone point")
    basis = symplectic_lie_algebra_basis(r)
    rows = []
    for X in basis:
        alpha, beta = X[:r, :r], X[:r, r:]
        gamma = X[r:, :r]
        c1 = alpha @ s + s @ alpha.T
        c2 = beta + s @ gamma @ s
        rows.append(np.concatenate([c1.reshape(-1), c2.reshape(-1)]))
    C = np.stack(rows).T
    svals = np.linalg.svd(C, compute_uv=False)
    if svals.size == 0 or svals[0] == 0:
        rank = 0
    else:
        rank = int(np.sum(svals > 1e-8 * svals[0]))
    return len(basis) - rank
