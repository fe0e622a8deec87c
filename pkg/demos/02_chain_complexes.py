"""Walkthrough: the chain complex on {0,...,n} and its basis structure.

Basis elements are strictly increasing vertex tuples; the boundary is the
alternating sum of vertex omissions and splits into a positive and a
negative part with disjoint supports.
"""

from osimplex import (
    BasisElt,
    Chain,
    basis_elements,
    check_strongly_loopfree,
    check_unital,
    iterated_boundary_part,
    loopfree_less,
)

triangle = BasisElt((0, 1, 2), 2)
chain = Chain.of(triangle)
print("boundary [0,1,2] =", chain.boundary())

neg, pos = chain.boundary_parts()
print("negative part =", neg, "  positive part =", pos)
print("difference reproduces the boundary:", pos - neg == chain.boundary())

# Iterating one part all the way down lands on a single vertex: the first
# vertex for the negative part, the last for the positive part.
for sign in "-+":
    print(f"({sign})^2 [0,1,2] =", iterated_boundary_part(triangle, 2, sign))

tetra = BasisElt((0, 1, 2, 3), 3)
print("(+)^1 [0,1,2,3] =", iterated_boundary_part(tetra, 1, "+"))
print("(-)^2 [0,1,2,3] =", iterated_boundary_part(tetra, 2, "-"))

# Unitality: both fully iterated parts always have augmentation 1.
print("unital for n <= 6:", [bool(check_unital(n)) for n in range(7)])

# Strong loop-freeness: a recursive total order puts negative boundary terms
# below each element and positive ones above.
print("strongly loop-free for n <= 6:", [check_strongly_loopfree(n) for n in range(7)])

a, b = BasisElt((0, 2), 2), BasisElt((0, 1), 2)
print("[0,2] < [0,1] in the order:", loopfree_less(a, b), " (tails compare reversed)")

elements = basis_elements(2)
ranked = sorted(
    elements,
    key=lambda e: sum(1 for other in elements if other != e and loopfree_less(other, e)),
)
print("the order on the basis of n=2:", " < ".join(str(e) for e in ranked))
