"""Walk through the type A2 datum on K[H].

After the consistency check we compute the polynomial Cartan matrix.
A few membership questions are then decided with the pairing.
"""

from tgwa import (build_type_A2_example, cartan_of, ideal_witness, is_in_ideal,
                  parse_element, poly_cartan_matrix, project_to_base, shapovalov,
                  validate_tgwc)
from tgwa.locfin import check_serre, serre_elements

d = build_type_A2_example()
print("consistent:", validate_tgwc(d).ok)

P = poly_cartan_matrix(d)
print("polynomial Cartan matrix:", P.rows_as_strings())
print("generalized Cartan matrix:", cartan_of(P))

for e in serre_elements(d, P):
    print(f"Serre ({e.i},{e.j}):", e.x_form, "| in ideal:", check_serre(d, e).ok)

# Degree-zero words collapse to polynomials in H.
w = parse_element(d, "Y(1)*Y(2)*X(1)*X(2)")
print("Y1 Y2 X1 X2 =", project_to_base(d, w))
print("F(X1 X2, X1 X2) =", shapovalov(d, d.word((1, 2)), d.word((1, 2))))

# A perturbed Serre element is not in the ideal; the witness shows why.
bad = parse_element(d, "X(1)^2*X(2) - 3*X(1)*X(2)*X(1) + X(2)*X(1)^2")
print("perturbed element in ideal:", is_in_ideal(d, bad))
wit = ideal_witness(d, bad)
print("  pairing with", wit.word, "gives", wit.value)
