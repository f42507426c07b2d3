"""Spectral decompositions, Peirce blocks, and cone orbit classification.

Run as: python3 demos/02_spectra_and_orbits.py
"""

import math

import numpy as np

import conetube as ct


def main():
    rng = np.random.default_rng(2)

    A = ct.make_algebra("hermC", rank=3)
    x = ct.as_real_element(A, rng.standard_normal(A.dim))
    sd = ct.spectral_decompose(A, x)
    print("== spectral decomposition, hermitian rank 3 ==")
    print("  eigenvalues", np.array2string(sd.eigenvalues, precision=4))
    recon = sd.eigenvalues @ sd.frame
    print("  reconstruction deviation",
          f"{np.max(np.abs(recon - x)):.2e}")
    for j, c in enumerate(sd.frame):
        cc = ct.jordan_product(A, c, c)
        print(f"  frame[{j}] idempotency {np.max(np.abs(cc - c)):.2e}"
              f"  trace {ct.generic_trace(A, c):.3f}")

    print()
    print("== Peirce blocks of the first frame member ==")
    pd = ct.peirce_projections(A, sd.frame[0])
    for lam, dim in zip((1.0, 0.5, 0.0), pd.dims):
        print(f"  eigenvalue {lam}: dimension {dim}")

    print()
    print("== orbit census, rank 3 quaternionic ==")
    H = ct.make_algebra("hermH", rank=3)
    counts = {}
    for _ in range(400):
        sig = ct.orbit_signature(H, rng.standard_normal(H.dim))
        counts[(sig.p, sig.q)] = counts.get((sig.p, sig.q), 0) + 1
    for key in sorted(counts):
        print(f"  signature {key}: {counts[key]} of 400 random elements")
    print("  full-rank signatures seen:", len(counts),
          " total orbit count:", ct.orbit_count(H.rank),
          f" (= C({H.rank}+2,2) = {math.comb(H.rank + 2, 2)})")

    print()
    print("== degenerate element and its support ==")
    frame = ct.standard_frame(H)
    y = 5.0 * frame[0] - 1.0 * frame[1]
    sig = ct.orbit_signature(H, y)
    supp = ct.support_idempotent(H, y)
    print("  signature", (sig.p, sig.q))
    print("  support recovers y: |P(c)y - y| =",
          f"{np.max(np.abs(ct.pquad(H, supp) @ y - y)):.2e}")

    print()
    print("== exceptional spectra ==")
    O = ct.make_algebra("albert")
    z = ct.as_real_element(O, rng.standard_normal(O.dim))
    sdo = ct.spectral_decompose(O, z)
    print("  eigenvalues", np.array2string(sdo.eigenvalues, precision=4))
    print("  frame residual",
          f"{np.max(np.abs(sdo.eigenvalues @ sdo.frame - z)):.2e}")
    _, norm = ct.generic_minors(O, z)
    prod = np.prod(sdo.eigenvalues)
    print("  generic norm vs eigenvalue product, deviation",
          f"{abs(norm - prod):.2e}")


if __name__ == "__main__":
    main()
