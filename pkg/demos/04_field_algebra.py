"""The graded algebra of polynomial fields f(z) = iu + Az + iP(z)w.

The Euler field grades these into degrees -1, 0, +1; brackets of opposite
extremes recover the full linear part, and the diagonal quadratic flow has
a closed form with movable poles.

Run as: python3 demos/04_field_algebra.py
"""

import numpy as np

import conetube as ct
from conetube import fields as fl


def main():
    rng = np.random.default_rng(4)

    A = ct.make_algebra("hermC", rank=2)
    print("== grading under the Euler field ==")
    delta = fl.euler_field(A)
    parts = {"-1": fl.GradedField(rng.standard_normal(A.dim),
                                  np.zeros((A.dim, A.dim)), np.zeros(A.dim)),
             "+1": fl.GradedField(np.zeros(A.dim), np.zeros((A.dim, A.dim)),
                                  rng.standard_normal(A.dim))}
    for name, f in parts.items():
        ad = fl.bracket(A, delta, f)
        stacked = np.concatenate([ad.u, ad.A.reshape(-1), ad.w])
        flat = np.concatenate([f.u, f.A.reshape(-1), f.w])
        lam = stacked @ flat / (flat @ flat)
        print(f"  degree {name}: ad(delta) eigenvalue {lam:+.1f}")

    print()
    print("== dimension table across the catalogue ==")
    print(f"  {'algebra':14s} {'der':>4s} {'sl(Omega)':>10s}"
          f" {'aut(H)':>7s} {'sl(D)':>6s}")
    for B in ct.desk_algebras():
        row = fl.dim_table(B)
        label = f"{B.family} r{B.rank} n{B.peirce_constant}"
        print(f"  {label:14s} {row['dim_der']:4d} {row['dim_sl_omega']:10d}"
              f" {row['dim_aut_H']:7d} {row['dim_sl_D']:6d}")

    print()
    print("== Jacobi identity on random triples ==")
    worst = 0.0
    for _ in range(50):
        f, g, h = (fl.random_field(A, rng) for _ in range(3))
        t1 = fl.bracket(A, fl.bracket(A, f, g), h)
        t2 = fl.bracket(A, fl.bracket(A, g, h), f)
        t3 = fl.bracket(A, fl.bracket(A, h, f), g)
        worst = max(worst, np.max(np.abs(t1.A + t2.A + t3.A)),
                    np.max(np.abs(t1.u + t2.u + t3.u)),
                    np.max(np.abs(t1.w + t2.w + t3.w)))
    print(f"  max residual over 50 triples: {worst:.2e}")

    print()
    print("== nonresonance of linearisations ==")
    for spectrum, bound in (([1.0], 5), ([1.0, 2.0], 3), ([1.0, 3.5], 4)):
        res = fl.nonresonant(spectrum, bound=bound)
        line = f"  spectrum {spectrum} bound {bound}:" \
            f" nonresonant={res.nonresonant} exact={res.exact}"
        if res.witness is not None:
            m, j = res.witness
            line += f" witness m={tuple(m)} j={j}"
        print(line)

    print()
    print("== diagonal quadratic flow ==")
    R = ct.make_algebra("hermR", rank=3)
    frame = ct.standard_frame(R)
    v = [1.0, -0.7, 0.3]
    c = [1j, 0.4 + 0.2j, -0.8j]
    for t in (0.25, 0.5, 1.0):
        g = ct.diagonal_flow_coefficients(v, c, t)
        print(f"  t={t}: g = {np.array2string(g, precision=4)}")
    print("  unit rate from c=i reaches", ct.diagonal_flow_coefficients(
        [1.0], [1j], 1.0)[0], "at t=1")
    try:
        ct.diagonal_flow_coefficients([1.0], [-1j], 1.0)
    except ct.FlowSingularity as exc:
        print("  pole detected:", exc)


if __name__ == "__main__":
    main()
