"""Tube CR invariants: Levi form, kernel chain, minimality, germ dimensions.

The two bracket oracles below pin the analytic meaning of levi_form and
beta_map. The sections xi^v(z) = Re(z)∘v span the holomorphic tangent
distribution near the base point, and eta^w(z) = ¼ P(z+z̄)w generates the
second kernel step; both brackets are evaluated exactly (the sections are
polynomial in z), so the comparisons run at 1e-9.
"""

import math

import numpy as np
import pytest

import conetube as ct
from conetube import tube as tb

ORACLE_TOL = 1e-9
N_PAIRS = 100

DESK = ct.desk_algebras()


def _degenerate_orbits(A):
    return [(p, q) for p in range(A.rank + 1) for q in range(A.rank + 1 - p)
            if 0 < p + q < A.rank]


def _all_orbits(A):
    return [(p, q) for p in range(A.rank + 1) for q in range(A.rank + 1 - p)]


def _rand_section(orbit, rng, basis):
    coeff = rng.standard_normal(basis.shape[0]) \
        + 1j * rng.standard_normal(basis.shape[0])
    return coeff @ basis


def test_condition_star():
    assert tb.condition_star_holds(np.array([1.0, 2.0, -1.5]))
    assert not tb.condition_star_holds(np.array([1.0, -1.0, 2.0]))
    assert tb.condition_star_holds(np.array([1.0, 0.0, 0.0]))


def test_base_point_eigenvalues():
    # positive entries 1..p, negative entries -(p+3/2), -(p+5/2), ...
    A = ct.make_algebra("hermR", rank=5)
    orb = ct.make_orbit(A, 2, 2)
    lam = np.sort(orb.eigenvalues)[::-1]
    np.testing.assert_allclose(lam[:2], [2.0, 1.0])
    assert abs(lam[2]) < 1e-12
    np.testing.assert_allclose(lam[3:], [-3.5, -4.5])
    assert tb.condition_star_holds(orb.eigenvalues)


def test_cr_dimension_formulas():
    for A in DESK:
        n = A.peirce_constant
        for (p, q) in _all_orbits(A):
            rho = p + q
            rho_p = A.rank - rho
            dims = ct.cr_dimensions(A, p, q)
            assert dims["crdim"] == rho + math.comb(rho, 2) * n \
                + rho * rho_p * n
            assert dims["crcodim"] == rho_p + math.comb(rho_p, 2) * n
            assert dims["levi_kernel_dim"] == rho + math.comb(rho, 2) * n


def test_orbit_subspace_dims():
    for A in DESK:
        for (p, q) in _degenerate_orbits(A):
            orb = ct.make_orbit(A, p, q)
            dims = ct.cr_dimensions(A, p, q)
            assert orb.basis_h.shape[0] == dims["crdim"]
            assert orb.basis_e0.shape[0] == dims["crcodim"]
            assert orb.basis_e1.shape[0] == dims["levi_kernel_dim"]
            total = orb.basis_e1.shape[0] + orb.basis_half.shape[0] \
                + orb.basis_e0.shape[0]
            assert total == A.dim


def test_orbit_basis_orthonormal():
    # rows are orthonormal for the trace form and lie in their blocks
    for A in (ct.make_algebra("hermC", rank=3),
              ct.make_algebra("spin", peirce_constant=6)):
        G = ct.trace_gram(A)
        for (p, q) in _degenerate_orbits(A):
            orb = ct.make_orbit(A, p, q)
            for basis, proj in ((orb.basis_e1, orb.pi_e1),
                                (orb.basis_half, orb.pi_half),
                                (orb.basis_e0, orb.pi_e0)):
                if basis.shape[0] == 0:
                    continue
                gram = basis @ G @ basis.T
                np.testing.assert_allclose(gram, np.eye(basis.shape[0]),
                                           atol=1e-10)
                np.testing.assert_allclose(basis @ proj.T, basis, atol=1e-8)


def test_invalid_signature():
    A = ct.make_algebra("hermR", rank=2)
    with pytest.raises(ct.InvalidSignature):
        ct.make_orbit(A, 2, 1)
    with pytest.raises(ct.InvalidSignature):
        ct.aut_germ_dimension(A, 2, 0)
    with pytest.raises(ct.InvalidSignature):
        ct.aut_germ_dimension(A, 0, 0)


def test_levi_form_bracket_oracle():
    # Levi form == transverse part of the section bracket at the base point
    rng = np.random.default_rng(211)
    for A in DESK:
        for (p, q) in _degenerate_orbits(A)[:3]:
            orb = ct.make_orbit(A, p, q)
            a = orb.base_point
            pairs = N_PAIRS // 10 if A.dim > 15 else N_PAIRS
            for _ in range(pairs):
                v = _rand_section(orb, rng, orb.basis_h)
                w = _rand_section(orb, rng, orb.basis_h)
                lv, lw = orb.linv_h @ v, orb.linv_h @ w
                b1 = ct.jordan_product(A, ct.jordan_product(A, a, lv.real), lw) \
                    - ct.jordan_product(A, ct.jordan_product(A, a, lw.real), lv)
                b2 = ct.jordan_product(A, ct.jordan_product(A, a, (1j * lv).real), lw) \
                    - ct.jordan_product(A, ct.jordan_product(A, a, lw.real), 1j * lv)
                bracket_val = orb.pi_e0 @ (b1 + 1j * b2)
                assert np.max(np.abs(bracket_val - ct.levi_form(orb, v, w))) \
                    < ORACLE_TOL


def test_levi_form_hermitian_symmetry():
    rng = np.random.default_rng(223)
    A = ct.make_algebra("hermC", rank=3)
    orb = ct.make_orbit(A, 1, 1)
    for _ in range(20):
        v = _rand_section(orb, rng, orb.basis_h)
        w = _rand_section(orb, rng, orb.basis_h)
        lhs = ct.levi_form(orb, v, w)
        rhs = np.conj(ct.levi_form(orb, w, v))
        np.testing.assert_allclose(lhs, rhs, atol=1e-10)


def test_levi_form_vanishes_on_e1():
    rng = np.random.default_rng(227)
    for A in (ct.make_algebra("hermR", rank=3),
              ct.make_algebra("spin", peirce_constant=5)):
        for (p, q) in _degenerate_orbits(A)[:2]:
            orb = ct.make_orbit(A, p, q)
            if orb.basis_e1.shape[0] == 0:
                continue
            u = _rand_section(orb, rng, orb.basis_e1)
            v = _rand_section(orb, rng, orb.basis_h)
            np.testing.assert_allclose(ct.levi_form(orb, u, v), 0.0,
                                       atol=1e-10)
            np.testing.assert_allclose(ct.levi_form(orb, v, u), 0.0,
                                       atol=1e-10)


def test_levi_form_rejects_bad_input():
    A = ct.make_algebra("hermR", rank=2)
    orb = ct.make_orbit(A, 1, 0)
    outside = ct.unit(A) - orb.pi_e1 @ ct.unit(A) - orb.pi_half @ ct.unit(A)
    if np.max(np.abs(outside)) > 1e-9:
        with pytest.raises(ct.NotInHolomorphicTangent):
            ct.levi_form(orb, outside.astype(complex), orb.basis_h[0])


def test_levi_kernel_dimension():
    for A in DESK:
        n = A.peirce_constant
        for (p, q) in _degenerate_orbits(A):
            orb = ct.make_orbit(A, p, q)
            kernel = ct.levi_kernel(orb)
            rho = p + q
            assert kernel.dim == rho + math.comb(rho, 2) * n
            # kernel members annihilate the Levi form against all of H
            if kernel.dim:
                v = kernel.vectors[0]
                for h in orb.basis_h[:5]:
                    assert np.max(np.abs(ct.levi_form(orb, v, h))) < 1e-8


def test_beta_map_bracket_oracle():
    # beta(a∘v, P(a)w) equals the antiholomorphic part of [xi^v, eta^w]
    rng = np.random.default_rng(229)
    for A in DESK:
        for (p, q) in _degenerate_orbits(A)[:3]:
            orb = ct.make_orbit(A, p, q)
            if orb.basis_half.shape[0] == 0 or orb.basis_e1.shape[0] == 0:
                continue
            a = orb.base_point
            for _ in range(10):
                v = _rand_section(orb, rng, orb.basis_half)
                w = (_rand_section(orb, rng, orb.basis_e1)).real

                def xi_eta_bracket(vv):
                    # [xi^v, eta^w] at a for polynomial sections, exact
                    term1 = ct.pquad(
                        A, a, ct.jordan_product(A, a, vv + np.conj(vv))) @ w
                    term2 = ct.jordan_product(A, ct.pquad(A, a) @ w, vv)
                    return term1 - term2

                t_v = xi_eta_bracket(v)
                t_iv = xi_eta_bracket(1j * v)
                anti = 0.5 * (t_v + 1j * t_iv)
                direct = ct.beta_map(orb, ct.jordan_product(A, a, v),
                                     ct.pquad(A, a) @ w)
                assert np.max(np.abs(anti - direct)) < ORACLE_TOL


def test_beta_map_rejects_blocks():
    A = ct.make_algebra("hermC", rank=3)
    orb = ct.make_orbit(A, 1, 1)
    v_half = orb.basis_half[0]
    u_e1 = orb.basis_e1[0]
    with pytest.raises(ct.BlockViolation):
        ct.beta_map(orb, u_e1, u_e1)
    with pytest.raises(ct.BlockViolation):
        ct.beta_map(orb, v_half, v_half)


def test_nondegeneracy_order_two_everywhere():
    for A in DESK:
        for (p, q) in _degenerate_orbits(A):
            orb = ct.make_orbit(A, p, q)
            res = ct.nondegeneracy_order(orb)
            assert res.finitely_nondegenerate
            assert res.order == 2
            assert res.chain_dims[-1] == 0
            assert all(a > b for a, b in zip(res.chain_dims,
                                             res.chain_dims[1:]))


def test_nondegeneracy_light_cone_chain():
    # boundary of the 3-dim light cone: chain 2 > 1 > 0
    A = ct.make_algebra("hermR", rank=2)
    orb = ct.make_orbit(A, 1, 0)
    res = ct.nondegeneracy_order(orb)
    assert res.chain_dims == [2, 1, 0]
    assert res.order == 2


def test_nondegeneracy_edge_conventions():
    A = ct.make_algebra("hermR", rank=3)
    res0 = ct.nondegeneracy_order(ct.make_orbit(A, 0, 0))
    assert res0.order == 0
    assert res0.note is not None
    res_open = ct.nondegeneracy_order(ct.make_orbit(A, 2, 1))
    assert res_open.order is None
    assert not res_open.finitely_nondegenerate
    assert "convention" in res_open.note


def test_minimality():
    for A in DESK:
        for (p, q) in _all_orbits(A):
            orb = ct.make_orbit(A, p, q)
            minimal = ct.minimality_check(orbit=orb)
            if p + q == 0:
                assert minimal is False
            else:
                assert minimal is True


def test_aut_germ_dimension_closed_forms():
    # spin boundary cases d = 3..10 give C(d, 2) + 2; light cone gives 5
    assert ct.aut_germ_dimension(ct.make_algebra("hermR", rank=2), 1, 0) == 5
    for n in range(1, 9):
        A = ct.make_algebra("spin", peirce_constant=n)
        d = n + 2
        assert ct.aut_germ_dimension(A, 1, 0) == math.comb(d, 2) + 2
        assert ct.aut_germ_dimension(A, 0, 1) == math.comb(d, 2) + 2
    assert ct.aut_germ_dimension(ct.make_algebra("albert"), 1, 1) == 80


def test_aut_germ_identity():
    # germ dimension = dim gl(Omega) + CR codimension on every orbit
    from conetube import fields as fl
    for A in DESK:
        gl_dim = fl.dim_table(A)["dim_sl_omega"] + 1
        for (p, q) in _degenerate_orbits(A):
            dims = ct.cr_dimensions(A, p, q)
            assert ct.aut_germ_dimension(A, p, q) == gl_dim + dims["crcodim"]


def test_aut1_basis():
    A = ct.make_algebra("hermC", rank=3)
    orb = ct.make_orbit(A, 1, 1)
    fields = ct.aut1_basis(orb)
    dims = ct.cr_dimensions(A, 1, 1)
    assert len(fields) == dims["crcodim"]
    for f in fields:
        assert np.max(np.abs(f.A)) == 0
        assert np.max(np.abs(f.u)) == 0


def test_tangent_data_shapes():
    A = ct.make_algebra("hermR", rank=3)
    orb = ct.make_orbit(A, 1, 1)
    data = ct.tangent_data(orb)
    assert set(data) == {"T_aC", "H_aM", "E_0"}
    assert data["H_aM"].dim == ct.cr_dimensions(A, 1, 1)["crdim"]
    assert data["E_0"].dim == ct.cr_dimensions(A, 1, 1)["crcodim"]
    # the orbit tangent space fills V up to the CR codimension
    assert data["T_aC"].dim == A.dim - data["E_0"].dim
