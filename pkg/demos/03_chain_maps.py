"""Walkthrough: integer combinations of monotone maps as chain maps.

Every combination induces a chain map between the simplicial complexes by
pushing basis elements through its terms; the translation is an isomorphism
of groups, and the inverse is computed by triangular elimination over the
basis pairs attached to monotone maps.
"""

import random

from osimplex import ZMorphism, from_chain_map, parse_zmorphism, to_chain_map
from osimplex.chains import BasisElt

# A degenerate map kills the simplexes it collapses.
squash = parse_zmorphism("(0,0)", 1)
table = to_chain_map(squash)
print("(0,0) on [0]   =", table.image(BasisElt((0,), 1)))
print("(0,0) on [1]   =", table.image(BasisElt((1,), 1)))
print("(0,0) on [0,1] =", table.image(BasisElt((0, 1), 1)))

# A combination acts linearly; middle terms can vanish.
x = parse_zmorphism("(0,1) - (1,1) + (1,2)", 2)
print("x on [0,1] =", to_chain_map(x).image(BasisElt((0, 1), 1)))

# The translation is invertible, including away from membership: any
# coefficients work.
y = parse_zmorphism("3*(0,1,1) - 2*(1,1,2) + (0,2,2)", 2)
print("roundtrip recovers y:", from_chain_map(to_chain_map(y)) == y)

# Random spot check.
rng = random.Random(1)
values = lambda m, n: tuple(sorted(rng.randint(0, n) for _ in range(m + 1)))
for trial in range(5):
    m, n = rng.randint(0, 4), rng.randint(0, 4)
    z = ZMorphism(m, n, [(values(m, n), rng.randint(-5, 5)) for _ in range(3)])
    assert from_chain_map(to_chain_map(z)) == z
print("5 random roundtrips exact")

# Composition of combinations matches composition of tables.
w = parse_zmorphism("(0,1)", 1).degeneracy(0)
print(
    "functorial:",
    to_chain_map(x.compose(w)) == to_chain_map(x).compose(to_chain_map(w)),
)
