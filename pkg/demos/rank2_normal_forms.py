"""Rank-two rewriting: reduce positive words to the normal-form basis.

The two rules X2 X1 X1 -> xi1 X1 X2 X1 + xi2 X1 X1 X2 and
X2 X2 X1 -> eta1 X2 X1 X2 + eta2 X1 X2 X2 come from the Serre elements.
Every step subtracts an element of the ideal, which we re-verify.
"""

from fractions import Fraction

from tgwa import (TqmuParams, build_tqmu, equal_in_A, is_in_ideal, parse_element,
                  presentation, reduce_rank2, serre_pair_from_cartan)
from tgwa.tgwc import format_word

d = build_tqmu(TqmuParams([[2, -1], [-1, 2]], mu={(1, 2): Fraction(5, 3)}))
sp = serre_pair_from_cartan(d)
print("xi =", [str(c) for c in sp.xi], " eta =", [str(c) for c in sp.eta])

a = parse_element(d, "X(2)^2*X(1)^2")
nf = reduce_rank2(sp, a)
print(f"{len(nf.log)} rewriting steps")
for i, b in enumerate(nf.beta):
    print(f"  {format_word(nf.basis_word(i))}: {b}")
print("normal form equals the input in A:", equal_in_A(d, a, nf.as_element(d)))
print("first step lies in the ideal:", is_in_ideal(d, nf.log[0].delta(sp)))

pr = presentation(d)
print("presentation verified:", pr.ok, "with", len(pr.relations), "relations")
