"""The quantum Serre relations appear as the polynomial Cartan data of T(q, mu, C).

For each symmetric Cartan matrix below we recompute the minimal
polynomials of the twisting maps and compare them with the closed
product form, then print the Serre coefficients.  They are independent
of mu and equal to signed q-binomials.
"""

from fractions import Fraction

from tgwa import TqmuParams, verify_theorem_5_3

CASES = {
    "A2": [[2, -1], [-1, 2]],
    "affine A1": [[2, -2], [-2, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
}

for name, C in CASES.items():
    mu = {(1, 2): Fraction(3, 2)}
    rep = verify_theorem_5_3(TqmuParams(C, mu=mu))
    print(f"{name}: all checks pass = {rep.ok}")
    for entry in rep.entries:
        i, j = entry["pair"]
        print(f"  p_{i}{j} = {entry['p_ij']}")
        print(f"    Serre coefficients {entry['serre_coefficients']}")
