"""Bounded realizations: Cayley transform, Lie ball strata, Siegel action.

Run as: python3 demos/05_domains.py
"""

import numpy as np

import conetube as ct


def main():
    rng = np.random.default_rng(5)

    print("== Cayley transform of tube points ==")
    for fam, kw in (("hermR", {"rank": 3}), ("spin", {"peirce_constant": 4})):
        A = ct.make_algebra(fam, **kw)
        x = rng.standard_normal(A.dim)
        re = ct.pquad(A, x) @ ct.unit(A) + 0.05 * ct.unit(A)
        z = re + 1j * rng.standard_normal(A.dim)
        w = ct.cayley(A, z)
        back = ct.inverse_cayley(A, w)
        print(f"  {fam:6s} round trip deviation"
              f" {np.max(np.abs(back - z)):.2e}")

    print()
    print("== Lie ball membership for the spin factor ==")
    S = ct.make_algebra("spin", peirce_constant=3)
    samples = {
        "origin": np.zeros(S.dim, dtype=complex),
        "interior": np.array([0.3, 0.1j, 0.0, 0.05, 0.0]),
        "smooth": np.array([0.5, 0.5j, 0.0, 0.0, 0.0]),
        "shilov": np.array([1.0, 0.0, 0.0, 0.0, 0.0], dtype=complex),
        "exterior": np.array([3.0, 0.0, 0.0, 0.0, 0.0], dtype=complex),
    }
    for name, z in samples.items():
        print(f"  {name:9s} -> {ct.lie_ball_membership(z)}")

    print()
    print("== tube boundary maps to the sphere ==")
    T = ct.make_algebra("spin", peirce_constant=1)
    boundary = np.array([1.0, 1.0, 0.0], dtype=complex)
    img = ct.cayley(T, boundary)
    print("  z on the cone boundary: gamma(z) real part",
          np.round(img.real, 6), "->",
          ct.lie_ball_membership(ct.spin_to_ball(img)))

    print()
    print("== symplectic action on the Siegel half-space ==")
    r = 2
    J = np.block([[np.zeros((r, r)), np.eye(r)],
                  [-np.eye(r), np.zeros((r, r))]])
    z = np.array([[0.3, 0.1], [0.1, -0.2]]) + 1j * np.eye(r)
    inv = ct.siegel_action(J, z)
    print("  J acts as z -> -z^{-1}, deviation",
          f"{np.max(np.abs(inv + np.linalg.inv(z))):.2e}")
    basis = ct.symplectic_lie_algebra_basis(r)
    print("  sp(2) has dimension", len(basis), "(= r(2r+1) =", r * (2 * r + 1),
          ")")

    print()
    print("== isotropy of rank-one boundary points ==")
    for _ in range(3):
        u = rng.standard_normal(r)
        s = np.outer(u, u)
        print("  s = u u^T with u =", np.round(u, 3), "-> isotropy dim",
              ct.isotropy_dimension(s))
    print("  matches the light cone germ dimension:",
          ct.aut_germ_dimension(ct.make_algebra("hermR", rank=2), 1, 0))


if __name__ == "__main__":
    main()
