"""Polynomial vector fields f(z)∂ = (iu + Az + iP(z)w)∂ on the tube domain.

The fields split into weights -1, 0, +1 under the Euler field δ = z∂: the
constant parts iu (u real) integrate to translations, the linear parts Az
with A in gl(Ω) = L(V) ⊕ [L(V), L(V)] to cone automorphisms, and iP(z)w to
the nonaffine one-parameter groups. The bracket convention is

    [f∂, g∂] = (g'f - f'g) ∂,

so ad(δ) really has eigenvalues (-1, 0, +1) on the three graded pieces.
Bracket results are verified against finite evaluation at sample points and
the linear coefficient is checked to stay inside gl(Ω).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import algebra as al
from . import spectral as sp
from .errors import (
    ClosureViolation,
    ConditionStarViolated,
    DimensionMismatch,
    FlowSingularity,
    IndexOutOfRange,
    InvalidBound,
    NumericalFailure,
)
from .tube import condition_star_holds

_BRACKET_SAMPLES = 5
_CLOSURE_REL_TOL = 1e-8
_SPAN_REL_CUT = 1e-8


@dataclass(eq=False)
class GradedField:
    """Coefficients of f(z) = iu + Az + iP(z)w with u, w in V and A real."""

    u: np.ndarray
    A: np.ndarray
    w: np.ndarray

    def __post_init__(self):
        self.u = np.asarray(self.u, dtype=float)
        self.A = np.asarray(self.A, dtype=float)
        self.w = np.asarray(self.w, dtype=float)
        d = self.u.shape[0]
        if self.A.shape != (d, d) or self.w.shape != (d,):
            raise DimensionMismatch(
                f"field coefficients disagree: u {self.u.shape}, "
                f"A {self.A.shape}, w {self.w.shape}")


def euler_field(algebra: al.AlgebraDescriptor) -> GradedField:
    """δ = z∂, the grading element."""
    d = algebra.dim
    return GradedField(np.zeros(d), np.eye(d), np.zeros(d))


def evaluate_field(algebra: al.AlgebraDescriptor, field: GradedField, z):
    z = al.as_element(algebra, z)
    return (1j * field.u + field.A @ z
            + 1j * (al.pquad(algebra, z) @ field.w))


def field_derivative(algebra: al.AlgebraDescriptor, field: GradedField, z):
    """Jacobian matrix f'(z) = A + 2i (L(z)L(w) + L(z∘w) - L(w)L(z))."""
    z = al.as_element(algebra, z)
    lz = al.lmul(algebra, z)
    lw = al.lmul(algebra, field.w)
    lzw = al.lmul(algebra, al.jordan_product(algebra, z, field.w))
    return field.A + 2j * (lz @ lw + lzw - lw @ lz)


@dataclass
class GlOmegaSpan:
    """Orthonormal flat basis of gl(Ω) = L(V) + [L(V), L(V)] inside gl(V)."""

    rows: np.ndarray
    dim_der: int
    dim_gl_omega: int

    def contains(self, mat: np.ndarray, rel_tol: float = _CLOSURE_REL_TOL) -> bool:
        flat = mat.reshape(-1)
        resid = flat - self.rows.T @ (self.rows @ flat)
        return np.linalg.norm(resid) <= rel_tol * max(1.0, np.linalg.norm(flat))


def _stack_rank(stack: np.ndarray) -> tuple[int, np.ndarray]:
    if stack.shape[0] == 0:
        return 0, np.zeros((0, stack.shape[1]))
    s = np.linalg.svd(stack, compute_uv=False)
    if s[0] == 0:
        return 0, np.zeros((0, stack.shape[1]))
    rank = int(np.sum(s > _SPAN_REL_CUT * s[0]))
    _, _, vh = np.linalg.svd(stack, full_matrices=False)
    return rank, vh[:rank]


@lru_cache(maxsize=None)
def gl_omega_span(algebra: al.AlgebraDescriptor) -> GlOmegaSpan:
    """Span of the multiplication operators and their commutators.

    The commutators alone span the derivation algebra; the multiplication
    operators contribute the complementary dim V symmetric directions.
    """
    ops = al._lmul_basis(algebra)
    d = algebra.dim
    comms = [ops[i] @ ops[j] - ops[j] @ ops[i]
             for i in range(d) for j in range(i + 1, d)]
    comm_stack = (np.stack(comms).reshape(len(comms), -1)
                  if comms else np.zeros((0, d * d)))
    dim_der, _ = _stack_rank(comm_stack)
    full = np.concatenate([ops.reshape(d, -1), comm_stack])
    dim_gl, rows = _stack_rank(full)
    if dim_gl != d + dim_der:
        raise NumericalFailure(
            f"span of L(V) and derivations has rank {dim_gl}, "
            f"expected {d} + {dim_der}")
    return GlOmegaSpan(rows, dim_der, dim_gl)


def bracket(algebra: al.AlgebraDescriptor, f1: GradedField, f2: GradedField,
            check: bool = True, tol: float = 1e-9) -> GradedField:
    """[f1∂, f2∂] = (f2'f1 - f1'f2)∂, returned in graded coefficients.

    The degree-one coefficient uses M(u, w) = L(u∘w) + L(u)L(w) - L(w)L(u),
    the matrix of z ↦ P(z, u)w. When ``check`` is set the closed form is
    compared against direct evaluation at seeded sample points and the
    linear part is required to stay inside gl(Ω).
    """
    u1, a1, w1 = f1.u, f1.A, f1.w
    u2, a2, w2 = f2.u, f2.A, f2.w
    if u1.shape[0] != algebra.dim or u2.shape[0] != algebra.dim:
        raise DimensionMismatch("field does not live on this algebra")

    def mmat(u, w):
        lu, lw = al.lmul(algebra, u), al.lmul(algebra, w)
        return al.lmul(algebra, al.jordan_product(algebra, u, w)) + lu @ lw - lw @ lu

    u_out = a2 @ u1 - a1 @ u2
    a_out = a2 @ a1 - a1 @ a2 - 2.0 * mmat(u1, w2) + 2.0 * mmat(u2, w1)
    e = al.unit(algebra)
    l1e = al.lmul(algebra, a1 @ e)
    l2e = al.lmul(algebra, a2 @ e)
    w_out = a2 @ w1 - a1 @ w2 + 2.0 * (l1e @ w2) - 2.0 * (l2e @ w1)
    out = GradedField(u_out, a_out, w_out)

    if check:
        rng = np.random.default_rng(0)
        for _ in range(_BRACKET_SAMPLES):
            z = rng.standard_normal(algebra.dim) + 1j * rng.standard_normal(algebra.dim)
            lhs = (field_derivative(algebra, f2, z) @ evaluate_field(algebra, f1, z)
                   - field_derivative(algebra, f1, z) @ evaluate_field(algebra, f2, z))
            rhs = evaluate_field(algebra, out, z)
            resid = np.linalg.norm(lhs - rhs)
            if resid > tol * max(1.0, np.linalg.norm(lhs)):
                raise NumericalFailure(
                    f"bracket closed form off by {resid:.2e} at a sample point")
        if not gl_omega_span(algebra).contains(a_out):
            raise ClosureViolation(
                "bracket linear coefficient escapes gl(Ω)")
    return out


def random_field(algebra: al.AlgebraDescriptor, rng) -> GradedField:
    """Gaussian sample of 𝔥: u, w standard normal, A a random gl(Ω) element."""
    span = gl_omega_span(algebra)
    coeffs = rng.standard_normal(span.rows.shape[0])
    A = (coeffs @ span.rows).reshape(algebra.dim, algebra.dim)
    return GradedField(rng.standard_normal(algebra.dim), A,
                       rng.standard_normal(algebra.dim))


def dim_table(algebra: al.AlgebraDescriptor) -> dict:
    """Numerically computed dimensions of the graded automorphism algebra.

    The sl rows subtract the one-dimensional center of gl(Ω); the full
    field algebra adds translations and quadratic fields, 2·dim V in total.
    The bounded realization has the same semisimple part, hence the equal
    sl_D column.
    """
    span = gl_omega_span(algebra)
    sl = span.dim_gl_omega - 1
    return {
        "dim_der": span.dim_der,
        "dim_sl_omega": sl,
        "dim_aut_H": 2 * algebra.dim + span.dim_gl_omega,
        "dim_sl_D": sl,
    }


def expected_dim_table(algebra: al.AlgebraDescriptor) -> dict:
    """Closed forms for the same dimensions, for cross-checking."""
    r, n = algebra.rank, algebra.peirce_constant
    family = algebra.family
    der = {
        "spin": n * (n + 1) // 2,
        "hermR": r * (r - 1) // 2,
        "hermC": r * r - 1,
        "hermH": r * (2 * r + 1),
        "albert": 52,
    }[family]
    if family == "albert":
        sl, aut = 78, 133
    else:
        sl = n * (r * r - 2) + math.comb(n, 2) + 1
        aut = {
            "spin": (n + 3) * (n + 4) // 2,
            "hermR": r * (2 * r + 1),
            "hermC": 4 * r * r - 1,
            "hermH": 2 * r * (4 * r - 1),
        }[family]
    return {
        "dim_der": der,
        "dim_sl_omega": sl,
        "dim_aut_H": aut,
        "dim_sl_D": sl,
    }


@dataclass
class VanishingReport:
    """Vanishing of f(a) (value_zero) and of f'(a) (one_jet_zero) at a."""

    value_zero: bool
    one_jet_zero: bool
    f_value: np.ndarray
    f_prime: np.ndarray


def vanishing_conditions(algebra: al.AlgebraDescriptor, field: GradedField,
                         a, tol: float = 1e-9) -> VanishingReport:
    """Vanishing of f and f' at a real point a whose spectrum satisfies (*).

    f(a) = 0 splits into the real part Aa = 0 and imaginary part
    u + P(a)w = 0. The derivative vanishes exactly when A = 0 and w lies
    in the Peirce-zero space of the support idempotent of a, so both flags
    are decided from the coefficients alone; the report also carries the
    directly evaluated f(a) and f'(a) for independent confirmation.
    """
    a = al.as_real_element(algebra, a)
    data = sp.spectral_decompose(algebra, a)
    if not condition_star_holds(data.eigenvalues):
        raise ConditionStarViolated(
            f"spectrum {data.eigenvalues} has cancelling eigenvalue pairs")
    scale = max(1.0, float(np.linalg.norm(a)))
    real_part = field.A @ a
    imag_part = field.u + al.pquad(algebra, a) @ field.w
    value_zero = (np.linalg.norm(real_part) <= tol * scale
                  and np.linalg.norm(imag_part) <= tol * scale)
    support = sp.support_idempotent(algebra, a)
    pi0 = sp.peirce_projections(algebra, support).pi0
    one_jet_zero = bool(np.linalg.norm(field.A) <= tol
                        and np.linalg.norm(field.w - pi0 @ field.w) <= tol)
    f_value = real_part + 1j * imag_part
    f_prime = field_derivative(algebra, field, a)
    return VanishingReport(value_zero, one_jet_zero, f_value, f_prime)


@dataclass
class NonresonanceResult:
    nonresonant: bool
    exact: bool
    bound: int
    witness: tuple | None = None


def _multi_indices(length: int, total: int):
    """All m ≥ 0 with |m| = total, first component descending."""
    if length == 1:
        yield (total,)
        return
    for head in range(total, -1, -1):
        for rest in _multi_indices(length - 1, total - head):
            yield (head,) + rest


def monomial_weight(m, j: int, eigenvalues) -> complex:
    """Σ m_i λ_i − λ_j for a multi-index m and a 1-based component j."""
    lam = np.asarray(eigenvalues, dtype=complex)
    m = np.asarray(m, dtype=float)
    if m.shape != lam.shape:
        raise DimensionMismatch(
            f"multi-index length {m.shape} does not match {lam.shape} eigenvalues")
    if not 1 <= j <= lam.size:
        raise IndexOutOfRange(f"component {j} outside 1..{lam.size}")
    return complex(m @ lam - lam[j - 1])


def nonresonant(eigenvalues, bound: int, tol: float = 1e-9) -> NonresonanceResult:
    """Search Σ m_i λ_i = λ_j over 2 ≤ |m| ≤ bound.

    The verdict is exact when the search provably exhausts all resonance
    candidates: all real parts on one side of zero and the bound at least
    max|Re λ| / min|Re λ|. A found witness is always exact.
    """
    lam = np.asarray(eigenvalues, dtype=complex)
    if lam.ndim != 1 or lam.size == 0:
        raise DimensionMismatch("eigenvalue list must be a nonempty vector")
    if bound < 2:
        raise InvalidBound(f"resonance search needs bound >= 2, got {bound}")
    scale = max(1.0, float(np.max(np.abs(lam))))
    for total in range(2, bound + 1):
        for m in _multi_indices(lam.size, total):
            weights = np.asarray(m, dtype=float) @ lam - lam
            hits = np.nonzero(np.abs(weights) <= tol * scale)[0]
            if hits.size:
                return NonresonanceResult(False, True, bound,
                                          (m, int(hits[0]) + 1))
    re = lam.real
    if np.all(re > 0) or np.all(re < 0):
        # any resonance needs |m| * min|Re| <= max|Re|, so the search
        # below this bound is exhaustive
        needed = int(math.ceil(np.max(np.abs(re)) / np.min(np.abs(re))))
        exact = bound >= needed
    else:
        exact = False
    return NonresonanceResult(True, exact, bound)


def diagonal_flow_coefficients(v, c, t: float):
    """Closed-form flow of ż_j = i v_j z_j² through z(0) = c, per coordinate.

    Solves to z_j(t) = c_j / (1 − i v_j c_j t); the pole is reported as a
    FlowSingularity instead of returning an overflow.
    """
    v = np.atleast_1d(np.asarray(v, dtype=float))
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    if v.shape != c.shape:
        raise DimensionMismatch(f"rate shape {v.shape} != start shape {c.shape}")
    denom = 1.0 - 1j * v * c * t
    bad = np.abs(denom) < 1e-12
    if np.any(bad):
        raise FlowSingularity(
            f"flow reaches a pole at t = {t} in component {int(np.nonzero(bad)[0][0])}")
    return c / denom


def diagonal_flow(algebra: al.AlgebraDescriptor, frame, v_coeffs, c_coeffs,
                  t: float):
    """Flow of the field iP(z)w∂ with w = Σ v_j e_j through c = Σ c_j e_j.

    The field is tangent to the diagonal span of the frame, where the ODE
    decouples into scalar Riccati equations with the closed-form solution
    of diagonal_flow_coefficients. Returns the complex element Σ g_j(t) e_j.
    """
    frame = np.asarray(frame, dtype=float)
    if frame.ndim != 2 or frame.shape[1] != algebra.dim:
        raise DimensionMismatch(f"frame shape {frame.shape} does not fit dim "
                                f"{algebra.dim}")
    g = diagonal_flow_coefficients(v_coeffs, c_coeffs, t)
    if g.shape[0] != frame.shape[0]:
        raise DimensionMismatch("coefficient count does not match the frame")
    return g @ frame.astype(complex)
