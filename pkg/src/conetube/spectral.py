"""Spectral decompositions, generic minors, orbit signatures, Peirce theory.

Every real element x decomposes as x = Σ λ_j e_j over a frame of mutually
orthogonal minimal idempotents summing to the unit. The eigenvalue routes are
family specific:

* spin factors have the closed form λ = s ± |u| with frame (1, ±u/|u|)/2;
* hermR/hermC use a symmetric/Hermitian eigendecomposition of the matrix
  realisation (orthonormal eigenvector columns give minimal idempotents even
  for repeated eigenvalues);
* hermH eigendecomposes the 2r x 2r complex realisation, where the spectrum
  comes in pairs; full eigenprojections are polynomial in the matrix, hence
  quaternionic, and map back to idempotents that are split further if needed;
* albert solves the rank-3 characteristic polynomial obtained from power
  traces by Newton's identities and builds Lagrange idempotents from powers
  of x, again splitting repeated roots.

Repeated-root splitting works inside the Peirce-1 subalgebra V_1(c) of the
degenerate idempotent c: a deterministic candidate list (coordinate basis
vectors, then Gaussian vectors from a fixed seed) is projected into V_1(c)
and the candidate whose subalgebra spectrum separates best is used to build
minimal Lagrange idempotents. Final eigenvalues are refined through the
Rayleigh values tr(x ∘ e_j) which are exact on exact frames.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import algebra as al
from .errors import (
    BorderlineSpectrum,
    InvalidFrame,
    NotIdempotent,
    NumericalFailure,
)

SPECTRAL_TOL = 1e-8

# relative gap below which two matrix eigenvalues count as one quaternionic /
# repeated eigenvalue; well above eigh noise, well below generic separations
_CLUSTER_REL_GAP = 1e-6
# polynomial-root noise on an m-fold root scales like eps^(1/m), so the
# rank-3 route needs a wider merge window than the eigh routes
_ROOT_CLUSTER_REL_GAP = 2e-4


class Signature(NamedTuple):
    p: int
    q: int


@dataclass
class SpectralData:
    """Eigenvalues (descending) and frame rows with x = Σ λ_j frame[j]."""

    algebra: al.AlgebraDescriptor
    eigenvalues: np.ndarray
    frame: np.ndarray

    @property
    def rank(self) -> int:
        return len(self.eigenvalues)


@dataclass
class PeirceData:
    """Projections onto the eigenspaces of L(c) at 1, 1/2, 0."""

    algebra: al.AlgebraDescriptor
    idempotent: np.ndarray
    pi1: np.ndarray
    pi_half: np.ndarray
    pi0: np.ndarray
    dims: tuple[int, int, int]


@dataclass
class JointPeirceData:
    """Joint Peirce projections of a frame, keyed by pairs j <= k (0-based)."""

    algebra: al.AlgebraDescriptor
    frame: np.ndarray
    projections: dict[tuple[int, int], np.ndarray]
    dims: dict[tuple[int, int], int]


# ---------------------------------------------------------------------------
# eigenvalues inside a subalgebra via Newton's identities


def _power_traces(algebra, x, m, k_powers=None):
    traces = np.empty(m)
    power = x
    for k in range(m):
        traces[k] = al.generic_trace(algebra, power)
        if k + 1 < m:
            power = al.jordan_product(algebra, power, x)
    return traces


def _char_roots(algebra, x, m):
    """Eigenvalues of x inside a rank-m subalgebra containing it."""
    p = _power_traces(algebra, x, m)
    e = np.zeros(m + 1)
    e[0] = 1.0
    for k in range(1, m + 1):
        acc = 0.0
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * p[i - 1]
        e[k] = acc / k
    coeffs = np.array([(-1) ** k * e[k] for k in range(m + 1)])
    roots = np.roots(coeffs)
    # repeated roots of a degree-m polynomial carry imaginary noise up to
    # roughly eps^(1/m); anything above that is a genuine failure
    if np.max(np.abs(roots.imag)) > 1e-4 * max(1.0, np.max(np.abs(roots))):
        raise NumericalFailure("complex roots in a formally real spectrum")
    roots = np.sort(roots.real)[::-1]
    # a couple of Newton polish steps on the characteristic polynomial
    deriv = np.polyder(coeffs)
    for _ in range(2):
        vals = np.polyval(coeffs, roots)
        dervals = np.polyval(deriv, roots)
        safe = np.abs(dervals) > 1e-30
        roots[safe] -= vals[safe] / dervals[safe]
    return roots


def _refine_cluster_values(power_traces, values, mults):
    """Newton-polish cluster representatives against exact power traces.

    With known multiplicities the values solve Σ_i m_i μ_i^k = p_k for
    k = 1..s; the Jacobian is a generalized Vandermonde matrix, nonsingular
    for separated clusters, so two or three steps reach machine precision
    even when the raw polynomial roots only carried eps^(1/mult) accuracy.
    """
    mu = np.asarray(values, dtype=float).copy()
    m = np.asarray(mults, dtype=float)
    s = len(mu)
    p = np.asarray(power_traces[:s], dtype=float)
    for _ in range(4):
        F = np.array([np.sum(m * mu ** k) - p[k - 1] for k in range(1, s + 1)])
        J = np.array([[k * m[i] * mu[i] ** (k - 1) for i in range(s)]
                      for k in range(1, s + 1)])
        try:
            step = np.linalg.solve(J, F)
        except np.linalg.LinAlgError:
            break
        mu -= step
        if np.max(np.abs(step)) < 1e-14 * max(1.0, np.max(np.abs(mu))):
            break
    return mu


def _cluster(values, gap):
    """Group a descending array into runs separated by more than ``gap``."""
    groups = [[0]]
    for i in range(1, len(values)):
        if values[groups[-1][-1]] - values[i] <= gap:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def _split_candidates(algebra, rng_seed=0):
    dim = algebra.dim
    for i in range(dim):
        vec = np.zeros(dim)
        vec[i] = 1.0
        yield vec
    rng = np.random.default_rng(rng_seed)
    for _ in range(16):
        yield rng.standard_normal(dim)


def _lagrange_idempotents(algebra, x, values, unit_elem):
    """Idempotents ∏_{k≠j}(x - μ_k u)/(μ_j - μ_k); x, u in one subalgebra."""
    out = []
    for j, mu in enumerate(values):
        prod = unit_elem
        denom = 1.0
        for k, nu in enumerate(values):
            if k == j:
                continue
            prod = al.jordan_product(algebra, prod, x - nu * unit_elem)
            denom *= mu - nu
        out.append(prod / denom)
    return out


def _split_idempotent(algebra, c, m, tol):
    """Split an idempotent of rank m into m minimal orthogonal idempotents."""
    if m == 1:
        return [c]
    pi1 = al.pquad(algebra, c)
    best = None
    for cand in _split_candidates(algebra):
        y = pi1 @ cand
        scale = np.max(np.abs(y))
        if scale < 1e-10:
            continue
        try:
            roots = _char_roots(algebra, y, m)
        except NumericalFailure:
            continue
        spread = roots[0] - roots[-1]
        if spread <= 1e-10 * max(1.0, scale):
            continue
        gap = np.min(np.diff(roots[::-1])) / spread
        if best is None or gap > best[0]:
            best = (gap, y, roots)
        if gap > 0.1:
            break
    if best is None or best[0] < 1e-3:
        raise NumericalFailure(
            f"could not separate a rank-{m} idempotent in {algebra}")
    _, y, roots = best
    pieces = _lagrange_idempotents(algebra, y, roots, c)
    out = []
    for piece in pieces:
        rank = int(round(al.generic_trace(algebra, piece)))
        if rank != 1:
            raise NumericalFailure("separating candidate produced a non-minimal piece")
        out.append(piece)
    return out


def _purify_frame(algebra, frame):
    """Push an approximate frame onto an exact one.

    Newton's idempotent iteration c ← 3c² - 2c³ converges quadratically;
    projecting each member into the joint Peirce-0 space of the already
    purified ones restores mutual orthogonality at the same rate.
    """
    e = al.unit(algebra)
    rows = []
    used = np.zeros_like(e)
    for j in range(frame.shape[0]):
        c = frame[j]
        if j:
            c = al.pquad(algebra, e - used) @ c
        for _ in range(3):
            cc = al.jordan_product(algebra, c, c)
            c = 3.0 * cc - 2.0 * al.jordan_product(algebra, c, cc)
        used = used + c
        rows.append(c)
    return np.vstack(rows)


# ---------------------------------------------------------------------------
# spectral decomposition


def _validate_spectral(algebra, eigenvalues, frame, x, tol):
    scale = max(1.0, float(np.max(np.abs(eigenvalues))) if len(eigenvalues) else 1.0)
    e = al.unit(algebra)
    worst = 0.0
    for j in range(len(frame)):
        fj = frame[j]
        worst = max(worst, float(np.max(np.abs(
            al.jordan_product(algebra, fj, fj) - fj))))
        for k in range(j + 1, len(frame)):
            worst = max(worst, float(np.max(np.abs(
                al.jordan_product(algebra, fj, frame[k])))))
    worst = max(worst, float(np.max(np.abs(frame.sum(axis=0) - e))))
    recon = float(np.max(np.abs(eigenvalues @ frame - x)))
    if worst > tol or recon > tol * scale:
        raise NumericalFailure(
            f"frame residual {worst:.2e}, reconstruction residual {recon:.2e} "
            f"exceed tolerance {tol:.1e} for {algebra}")


def spectral_decompose(algebra: al.AlgebraDescriptor, x,
                       tol: float = SPECTRAL_TOL) -> SpectralData:
    """Frame decomposition x = Σ λ_j e_j with eigenvalues descending."""
    x = al.as_real_element(algebra, x)
    fam = algebra.family

    if fam == "spin":
        s, uvec = x[0], x[1:]
        unorm = float(np.linalg.norm(uvec))
        if unorm == 0.0:
            frame = al.standard_frame(algebra)
            eigenvalues = np.array([s, s])
        else:
            direction = uvec / unorm
            plus = 0.5 * np.concatenate(([1.0], direction))
            minus = 0.5 * np.concatenate(([1.0], -direction))
            frame = np.vstack([plus, minus])
            eigenvalues = np.array([s + unorm, s - unorm])
    elif fam in ("hermR", "hermC"):
        M = al.element_to_matrix(algebra, x)
        w, U = np.linalg.eigh(M)
        order = np.argsort(w)[::-1]
        eigenvalues = w[order]
        rows = []
        for idx in order:
            v = U[:, idx]
            rows.append(al.matrix_to_element(algebra, np.outer(v, v.conj())))
        frame = np.vstack(rows)
    elif fam == "hermH":
        M = al.element_to_matrix(algebra, x)
        w, U = np.linalg.eigh(M)
        order = np.argsort(w)[::-1]
        w, U = w[order], U[:, order]
        scale = max(1.0, float(np.max(np.abs(w))))
        groups = _cluster(w, _CLUSTER_REL_GAP * scale)
        eigenvalues_list, rows = [], []
        for group in groups:
            if len(group) % 2:
                raise NumericalFailure("quaternionic spectrum failed to pair up")
            cols = U[:, group]
            proj = cols @ cols.conj().T
            c = al.matrix_to_element(algebra, proj)
            mult = len(group) // 2
            value = float(np.mean(w[group]))
            for piece in _split_idempotent(algebra, c, mult, tol):
                rows.append(piece)
                eigenvalues_list.append(
                    al.generic_trace(algebra, al.jordan_product(algebra, x, piece))
                    if mult > 1 else value)
        frame = np.vstack(rows)
        eigenvalues = np.asarray(eigenvalues_list, dtype=float)
    else:  # albert
        # the frame of x equals the frame of its trace-free part, whose
        # eigenvalue spread is order one after normalisation; recentering
        # keeps the characteristic-root route away from clustered roots
        e = al.unit(algebra)
        lam_mean = float(al.generic_trace(algebra, x)) / algebra.rank
        xc = x - lam_mean * e
        nrm = float(np.linalg.norm(xc))
        if nrm <= 1e-14 * max(1.0, abs(lam_mean)):
            frame = al.standard_frame(algebra)
            eigenvalues = np.full(algebra.rank, lam_mean)
        else:
            y = xc / nrm
            roots = _char_roots(algebra, y, algebra.rank)
            scale = max(1.0, float(np.max(np.abs(roots))))
            groups = _cluster(roots, _ROOT_CLUSTER_REL_GAP * scale)
            if len(groups) == 1:
                raise NumericalFailure(
                    "trace-free unit element reported a triple eigenvalue")
            mults = [len(g) for g in groups]
            values = _refine_cluster_values(
                _power_traces(algebra, y, algebra.rank),
                [float(np.mean(roots[g])) for g in groups], mults)
            idems = _lagrange_idempotents(algebra, y, values, e)
            eigenvalues_list, rows = [], []
            for value, idem, mult in zip(values, idems, mults):
                for piece in _split_idempotent(algebra, idem, mult, tol):
                    rows.append(piece)
                    eigenvalues_list.append(lam_mean + nrm * value)
            frame = np.vstack(rows)
            eigenvalues = np.asarray(eigenvalues_list, dtype=float)

    if fam in ("hermH", "albert") and len(frame) > 1:
        frame = _purify_frame(algebra, frame)
        # Rayleigh values are exact on exact frames
        eigenvalues = np.array([
            al.generic_trace(algebra, al.jordan_product(algebra, x, c))
            for c in frame])

    order = np.argsort(eigenvalues, kind="stable")[::-1]
    eigenvalues = eigenvalues[order]
    frame = frame[order]
    _validate_spectral(algebra, eigenvalues, frame, x, tol)
    return SpectralData(algebra, eigenvalues, frame)


# ---------------------------------------------------------------------------
# minors, signatures, supports


def generic_minors(algebra: al.AlgebraDescriptor, x) -> tuple[np.ndarray, float]:
    """(N_1..N_r, N): j-th elementary symmetric functions of the eigenvalues.

    With this normalisation N = N_r is the product of all eigenvalues and
    N(e) = 1; N_j vanishes identically on elements of rank below j.
    """
    sd = spectral_decompose(algebra, x)
    coeffs = np.poly(sd.eigenvalues)  # t^r + c_1 t^{r-1} + ... ; c_k = (-1)^k N_k
    minors = np.array([(-1) ** k * coeffs[k] for k in range(1, algebra.rank + 1)])
    return minors, float(minors[-1])


def orbit_signature(algebra: al.AlgebraDescriptor, x,
                    tol: float = SPECTRAL_TOL) -> Signature:
    """Orbit label (p, q): counts of positive/negative eigenvalues.

    Eigenvalues are compared against tol relative to the largest magnitude;
    anything falling in the band (tol/10, tol) is refused as borderline.
    """
    sd = spectral_decompose(algebra, x, tol=tol)
    scale = float(np.max(np.abs(sd.eigenvalues)))
    if scale == 0.0:
        return Signature(0, 0)
    rel = sd.eigenvalues / scale
    in_band = (np.abs(rel) > tol / 10) & (np.abs(rel) < tol)
    if np.any(in_band):
        raise BorderlineSpectrum(
            f"eigenvalue ratio(s) {rel[in_band]} inside the ({tol/10:.0e}, {tol:.0e}) band")
    p = int(np.sum(rel >= tol))
    q = int(np.sum(rel <= -tol))
    return Signature(p, q)


def orbit_count(rank: int) -> int:
    """Number of cone-closure orbits: one per signature p + q <= rank."""
    return math.comb(rank + 2, 2)


def support_idempotent(algebra: al.AlgebraDescriptor, x,
                       tol: float = SPECTRAL_TOL) -> np.ndarray:
    """Sum of the frame idempotents belonging to nonzero eigenvalues."""
    sd = spectral_decompose(algebra, x, tol=tol)
    scale = float(np.max(np.abs(sd.eigenvalues)))
    if scale == 0.0:
        return np.zeros(algebra.dim)
    rel = np.abs(sd.eigenvalues) / scale
    in_band = (rel > tol / 10) & (rel < tol)
    if np.any(in_band):
        raise BorderlineSpectrum(
            f"eigenvalue ratio(s) {rel[in_band]} inside the ({tol/10:.0e}, {tol:.0e}) band")
    mask = rel >= tol
    return sd.frame[mask].sum(axis=0) if np.any(mask) else np.zeros(algebra.dim)


# ---------------------------------------------------------------------------
# Peirce decompositions


def peirce_projections(algebra: al.AlgebraDescriptor, c,
                       tol: float = SPECTRAL_TOL) -> PeirceData:
    """Projections onto V_1, V_{1/2}, V_0 for a single idempotent c.

    L(c) has spectrum in {1, 1/2, 0}, so the projections are the quadratic
    polynomials in L(c) interpolating each eigenvalue; no eigensolver runs.
    """
    c = al.as_real_element(algebra, c)
    cc = al.jordan_product(algebra, c, c)
    if np.max(np.abs(cc - c)) > tol * max(1.0, float(np.max(np.abs(c))) ** 2):
        raise NotIdempotent(f"c∘c differs from c by {np.max(np.abs(cc - c)):.2e}")
    L = al.lmul(algebra, c)
    L2 = L @ L
    eye = np.eye(algebra.dim)
    pi1 = 2.0 * L2 - L
    pi_half = 4.0 * (L - L2)
    pi0 = eye - 3.0 * L + 2.0 * L2
    dims = tuple(int(round(float(np.trace(p)))) for p in (pi1, pi_half, pi0))
    return PeirceData(algebra, c, pi1, pi_half, pi0, dims)


def _check_frame(algebra, frame, tol):
    frame = np.asarray(frame, dtype=float)
    if frame.shape != (algebra.rank, algebra.dim):
        raise InvalidFrame(
            f"frame must be {algebra.rank} x {algebra.dim}, got {frame.shape}")
    e = al.unit(algebra)
    for j in range(algebra.rank):
        fj = frame[j]
        if np.max(np.abs(al.jordan_product(algebra, fj, fj) - fj)) > tol:
            raise InvalidFrame(f"frame member {j} is not idempotent")
        if abs(al.generic_trace(algebra, fj) - 1.0) > 1e-6:
            raise InvalidFrame(f"frame member {j} is not minimal")
        for k in range(j + 1, algebra.rank):
            if np.max(np.abs(al.jordan_product(algebra, fj, frame[k]))) > tol:
                raise InvalidFrame(f"frame members {j}, {k} are not orthogonal")
    if np.max(np.abs(frame.sum(axis=0) - e)) > tol:
        raise InvalidFrame("frame does not sum to the unit")
    return frame


def joint_peirce(algebra: al.AlgebraDescriptor, frame,
                 tol: float = SPECTRAL_TOL) -> JointPeirceData:
    """Joint Peirce projections π_jk for a full frame (0-based keys, j <= k).

    π_jj = 2 L_j² - L_j and π_jk = 4 L_j L_k; the L(e_j) commute, all
    projections are polynomial and sum to the identity.
    """
    frame = _check_frame(algebra, frame, tol)
    r = algebra.rank
    Ls = [al.lmul(algebra, frame[j]) for j in range(r)]
    projections: dict[tuple[int, int], np.ndarray] = {}
    dims: dict[tuple[int, int], int] = {}
    total = np.zeros((algebra.dim, algebra.dim))
    for j in range(r):
        for k in range(j, r):
            if j == k:
                pjk = 2.0 * (Ls[j] @ Ls[j]) - Ls[j]
            else:
                pjk = 4.0 * (Ls[j] @ Ls[k])
            projections[(j, k)] = pjk
            dims[(j, k)] = int(round(float(np.trace(pjk))))
            total += pjk
    if np.max(np.abs(total - np.eye(algebra.dim))) > tol * algebra.rank:
        raise InvalidFrame("joint Peirce projections do not resolve the identity")
    return JointPeirceData(algebra, frame, projections, dims)
