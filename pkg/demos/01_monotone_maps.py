"""Walkthrough: the simplex category of monotone maps.

Objects are nonnegative integers; a morphism from m to n is a non-decreasing
tuple of m+1 values drawn from {0,...,n}, tagged with its codomain.
"""

from osimplex import (
    MonotoneMap,
    compose,
    degeneracy_generator,
    enumerate_injective_into,
    face_generator,
    identity,
    parse_map,
)

# A map is its value tuple plus an explicit codomain.  The codomain matters:
# (0,1) into 1 and (0,1) into 2 are different morphisms.
f = MonotoneMap((0, 0, 1), 2)
print("f =", f, "domain", f.domain, "codomain", f.codomain)
print("same tuple, different codomains:", MonotoneMap((0, 1), 1) == MonotoneMap((0, 1), 2))

# Composition is function composition; shapes must match.
g = MonotoneMap((0, 2), 2)
print("(0,0,1) o (0,2) =", compose(f, g))
print("identity(2) o (0,2) =", compose(identity(2), g))

# The face generator omits a vertex, the degeneracy generator repeats one.
print("face_generator(1, 2) =", face_generator(1, 2))
print("degeneracy_generator(0, 2) =", degeneracy_generator(0, 2))
print("faces are injective:", face_generator(1, 3).is_injective())
print("degeneracies are surjective:", degeneracy_generator(1, 3).is_surjective())

# The injective maps into m correspond to the nonempty subsets of {0,...,m};
# they drive the membership test for oriental morphisms later on.
for m in range(3):
    maps = enumerate_injective_into(m)
    print(f"injective maps into {m}: {len(maps)} =", ", ".join(str(h) for h in maps))

# Text form round-trips.
print("parsed back:", parse_map("(0,0,1):2") == f)
