"""Walkthrough: cells over {0,...,n} and their omega-category structure.

A cell is a double sequence of nonnegative chain pairs tied together by the
boundary, with unit augmentation at the bottom.  Atoms come from basis
elements; identities truncate; composition is termwise addition minus the
shared identity.
"""

from osimplex import (
    BasisElt,
    Chain,
    atom,
    check_atom_generation,
    enumerate_cells,
    from_set_pairs,
    violations,
)

# Atoms of the complex on {0,1,2}.
edge = atom(BasisElt((0, 1), 2))
print("atom <[0,1]>   =", edge)
face = atom(BasisElt((0, 1, 2), 2))
print("atom <[0,1,2]> =", face)

# Composition across level 0 glues an edge path; the result is the 1-cell
# carried by [0,1] + [1,2].
other = atom(BasisElt((1, 2), 2))
path = edge.compose(other, 0)
print("<[0,1]> composed with <[1,2]> at level 0 =", path)

# That composite is exactly the level-1 target of the triangle atom, so
# composing the triangle onto it absorbs it.
print("path equals the triangle's target:", face.target(1) == path)
print("absorption:", face.compose(path, 1) == face)

# Validation reports which membership conditions fail.
bad = [
    (Chain(0, 2, [((0,), 1)]), Chain(0, 2, [((1,), 1)])),
    (Chain(1, 2, [((0, 1), 1)]), Chain(1, 2, [((0, 2), 1)])),
]
print("violated conditions for a mismatched pair:", violations(2, bad))

# Cells can be entered as plain sets of basis elements per level.
cell = from_set_pairs(
    2,
    [
        ({BasisElt((0,), 2)}, {BasisElt((2,), 2)}),
        (
            {BasisElt((0, 1), 2), BasisElt((1, 2), 2)},
            {BasisElt((0, 1), 2), BasisElt((1, 2), 2)},
        ),
    ],
)
print("set-pair input reproduces the composite:", cell == path)

# Exhaustive enumeration at small n, and the fact that atoms generate
# everything under identities and composition.
for n in range(3):
    cells = enumerate_cells(n)
    print(f"n={n}: {len(cells)} cells; atoms generate all: {check_atom_generation(n)}")
