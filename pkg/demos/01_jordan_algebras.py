"""Tour of the five algebra families: products, traces, inverses.

Run as: python3 demos/01_jordan_algebras.py
"""

import numpy as np

import conetube as ct


def main():
    rng = np.random.default_rng(1)

    print("== catalogue ==")
    for A in ct.desk_algebras():
        print(f"  {A.family:6s} rank {A.rank}  n {A.peirce_constant}"
              f"  dim {A.dim}")

    print()
    print("== symmetric matrices, rank 3 ==")
    A = ct.make_algebra("hermR", rank=3)
    x = rng.standard_normal(A.dim)
    y = rng.standard_normal(A.dim)
    xy = ct.jordan_product(A, x, y)
    X, Y = ct.element_to_matrix(A, x), ct.element_to_matrix(A, y)
    sym = 0.5 * (X @ Y + Y @ X)
    print("  x o y against (XY+YX)/2, deviation",
          f"{np.max(np.abs(ct.element_to_matrix(A, xy) - sym)):.2e}")

    e = ct.unit(A)
    print("  trace form (e|e) =", f"{ct.trace_form(A, e, e):.1f}",
          " (equals dim =", A.dim, ")")
    z = ct.jordan_product(A, x, x) + 0.1 * e
    w = ct.jordan_inverse(A, z)
    print("  inverse check |z o w - e| =",
          f"{np.max(np.abs(ct.jordan_product(A, z, w) - e)):.2e}")

    print()
    print("== quadratic representation ==")
    P = ct.pquad(A, x)
    X3 = X @ Y @ X
    print("  P(x)y against XYX, deviation",
          f"{np.max(np.abs(ct.element_to_matrix(A, P @ y) - X3)):.2e}")
    lhs = ct.pquad(A, P @ y)
    rhs = P @ ct.pquad(A, y) @ P
    print("  fundamental formula P(P(x)y) = P(x)P(y)P(x), deviation",
          f"{np.max(np.abs(lhs - rhs)):.2e}")

    print()
    print("== exceptional algebra ==")
    O = ct.make_algebra("albert")
    u = rng.standard_normal(O.dim)
    uu = ct.jordan_product(O, u, u)
    u4a = ct.jordan_product(O, uu, uu)
    u4b = ct.jordan_product(O, u, ct.jordan_product(O, u, uu))
    print("  dim", O.dim, ", power associativity deviation",
          f"{np.max(np.abs(u4a - u4b)):.2e}")
    print("  generic trace of the unit =", ct.generic_trace(O, ct.unit(O)))


if __name__ == "__main__":
    main()
