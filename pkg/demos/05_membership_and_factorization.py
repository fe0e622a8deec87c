"""Walkthrough: deciding membership and factorizing through fillers.

A combination is a morphism of oriented simplexes exactly when its
coefficients sum to 1 and every composite with an injective map keeps its
injective terms nonnegative.  Members factor into expression trees over
plain monotone maps via the filler and pasting operations.
"""

from osimplex import (
    BasisElt,
    act,
    atom,
    check_membership,
    eliminate_pastings,
    eval_expr,
    factorize,
    filler,
    parse_zmorphism,
    pasting,
)

x = parse_zmorphism("(0,1) - (1,1) + (1,2)", 2)
print("x =", x, "-> member:", bool(check_membership(x)))

bad = parse_zmorphism("2*(0,1) - (1,1)", 2)
verdict = check_membership(bad)
print("bad =", bad, "-> member:", bool(verdict))
print("  witness:", verdict.reason)

# Fillers raise dimension, pastings glue in place; the pasting is the middle
# face of the filler.
left = parse_zmorphism("(0,1)", 2)
right = parse_zmorphism("(1,2)", 2)
y = filler(0, left, right)
print("filler(0, (0,1), (1,2)) =", y)
print("pasting is its middle face:", y.face(1) == pasting(0, left, right) == x)

# Factorization returns an expression tree; evaluation is the exact inverse.
for value in (x, y):
    tree = factorize(value)
    print(f"factor {value}  ->  {tree}")
    assert eval_expr(tree) == value

# The same tree without the degenerate-unit cleanup shows the raw recursion.
print("raw tree for x:", factorize(x, simplify_output=False))

# Pastings can be rewritten away entirely: a pasting is a face of a filler,
# and faces are compositions with monotone maps.
print("filler-only form of x:", eliminate_pastings(factorize(x)))

# Members act on cells; x maps the edge atom to the glued path.
print("x . <[0,1]> =", act(x, atom(BasisElt((0, 1), 1))))
