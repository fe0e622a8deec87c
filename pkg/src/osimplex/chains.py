"""Simplicial chain complexes on {0,...,n} with exact integer coefficients.

The complex attached to n has one basis element per strictly increasing
vertex tuple; the boundary is the usual alternating sum and the augmentation
sends every vertex to 1.  This module also provides the two-way translation
between integer combinations of monotone maps and chain maps, and the
verification that the prescribed bases are unital and strongly loop-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import ArityError, PreconditionError
from .simplex import MonotoneMap
from .zdelta import ZMorphism


@dataclass(frozen=True, order=True)
class BasisElt:
    """A basis element [a_0,...,a_q]: strictly increasing vertices, ambient n."""

    vertices: tuple
    ambient: int

    def __post_init__(self):
        if not isinstance(self.vertices, tuple):
            object.__setattr__(self, "vertices", tuple(self.vertices))
        if len(self.vertices) == 0:
            raise ValueError("a basis element needs at least one vertex")
        prev = -1
        for v in self.vertices:
            if not isinstance(v, int) or v <= prev:
                raise ValueError(
                    f"vertices {self.vertices} are not strictly increasing from 0"
                )
            prev = v
        if not 0 <= self.vertices[0] or prev > self.ambient:
            raise ValueError(f"vertices {self.vertices} exceed ambient {self.ambient}")

    @property
    def dimension(self):
        return len(self.vertices) - 1

    def __str__(self):
        return "[" + ",".join(str(v) for v in self.vertices) + "]"


def basis_elements(n, dimension=None):
    """The basis elements of the complex on {0,...,n}, optionally of one dimension."""
    dims = range(n + 1) if dimension is None else [dimension]
    out = []
    for q in dims:
        for verts in combinations(range(n + 1), q + 1):
            out.append(BasisElt(verts, n))
    return out


class Chain:
    """A homogeneous integer combination of basis elements of one dimension."""

    __slots__ = ("dimension", "ambient", "terms", "_hash")

    def __init__(self, dimension, ambient, terms=()):
        normalized = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for b, c in items:
            if not isinstance(b, BasisElt):
                b = BasisElt(tuple(b), ambient)
            if b.dimension != dimension or b.ambient != ambient:
                raise ArityError(
                    f"term {b} is not {dimension}-dimensional in ambient {ambient}"
                )
            c = int(c)
            if c:
                c += normalized.get(b, 0)
                if c:
                    normalized[b] = c
                else:
                    del normalized[b]
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "terms", normalized)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Chain values are immutable")

    @classmethod
    def zero(cls, dimension, ambient):
        return cls(dimension, ambient)

    @classmethod
    def of(cls, b, coefficient=1):
        return cls(b.dimension, b.ambient, [(b, coefficient)])

    def is_zero(self):
        return not self.terms

    def is_nonnegative(self):
        return all(c >= 0 for c in self.terms.values())

    def coefficient(self, b):
        return self.terms.get(b, 0)

    def support(self):
        return sorted(self.terms, key=lambda b: b.vertices)

    def _check_shape(self, other):
        if self.dimension != other.dimension or self.ambient != other.ambient:
            raise ArityError(
                f"shape mismatch: dim {self.dimension} in {self.ambient} vs "
                f"dim {other.dimension} in {other.ambient}"
            )

    def __add__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        self._check_shape(other)
        merged = dict(self.terms)
        for b, c in other.terms.items():
            c += merged.get(b, 0)
            if c:
                merged[b] = c
            else:
                del merged[b]
        return Chain(self.dimension, self.ambient, merged)

    def __neg__(self):
        return Chain(self.dimension, self.ambient, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return Chain(
            self.dimension, self.ambient, {b: scalar * c for b, c in self.terms.items()}
        )

    __mul__ = __rmul__

    def boundary(self):
        """The alternating-sum boundary; defined for dimension >= 1."""
        if self.dimension < 1:
            raise PreconditionError("0-chains have no boundary")
        out = {}
        for b, c in self.terms.items():
            verts = b.vertices
            for i in range(len(verts)):
                face = BasisElt(verts[:i] + verts[i + 1:], self.ambient)
                coef = out.get(face, 0) + c * (-1) ** i
                if coef:
                    out[face] = coef
                else:
                    del out[face]
        return Chain(self.dimension - 1, self.ambient, out)

    def augmentation(self):
        """The sum of coefficients of a 0-chain."""
        if self.dimension != 0:
            raise PreconditionError("augmentation applies to 0-chains only")
        return sum(self.terms.values())

    def boundary_parts(self):
        """Split the boundary as (neg, pos): nonnegative chains with disjoint
        supports such that boundary = pos - neg."""
        d = self.boundary()
        neg = {b: -c for b, c in d.terms.items() if c < 0}
        pos = {b: c for b, c in d.terms.items() if c > 0}
        return (
            Chain(self.dimension - 1, self.ambient, neg),
            Chain(self.dimension - 1, self.ambient, pos),
        )

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and self.ambient == other.ambient
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            key = (self.dimension, self.ambient, frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", hash(key))
        return self._hash

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for b in self.support():
            c = self.terms[b]
            sign = "-" if c < 0 else "+"
            body = str(b)
            if abs(c) != 1:
                body = f"{abs(c)}*{body}"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"<Chain dim {self.dimension} in {self.ambient}: {self}>"

    def to_json(self):
        return [
            {"basis": list(b.vertices), "coef": self.terms[b]} for b in self.support()
        ]


def iterated_boundary_part(b, k, sign):
    """Apply the chosen boundary part k times to a basis element.

    sign is "-" or "+".  For a p-dimensional element the p-fold negative part
    is the first vertex and the p-fold positive part is the last.
    """
    if sign not in ("-", "+"):
        raise ValueError("sign must be '-' or '+'")
    if not 0 <= k <= b.dimension:
        raise PreconditionError(
            f"iteration count {k} out of range for dimension {b.dimension}"
        )
    chain = Chain.of(b)
    for _ in range(k):
        neg, pos = chain.boundary_parts()
        chain = neg if sign == "-" else pos
    return chain


class UnitalityReport:
    """Outcome of the unitality check; truthy iff every basis element passes."""

    def __init__(self, n, failures):
        self.n = n
        self.failures = failures

    def __bool__(self):
        return not self.failures

    def __repr__(self):
        state = "unital" if self else f"{len(self.failures)} failures"
        return f"<UnitalityReport n={self.n}: {state}>"


def check_unital(n):
    """Check that both fully iterated boundary parts of every basis element
    have augmentation 1; returns a truthy/falsy report listing failures."""
    failures = []
    for b in basis_elements(n):
        p = b.dimension
        eps_minus = iterated_boundary_part(b, p, "-").augmentation()
        eps_plus = iterated_boundary_part(b, p, "+").augmentation()
        if eps_minus != 1 or eps_plus != 1:
            failures.append((b, eps_minus, eps_plus))
    return UnitalityReport(n, failures)


def loopfree_less(a, b):
    """The recursive strict total order witnessing strong loop-freeness.

    a < b if a_0 < b_0; or a_0 = b_0 and a is a single vertex; or both tails
    are nonempty and the tail of a exceeds the tail of b.
    """
    if a.ambient != b.ambient:
        raise ArityError("comparison requires a common ambient complex")
    if a == b:
        raise PreconditionError("the order is strict; equal elements do not compare")
    return _lf_less(a.vertices, b.vertices)


def _lf_less(av, bv):
    if av[0] != bv[0]:
        return av[0] < bv[0]
    if len(av) == 1:
        return True
    if len(bv) == 1:
        return False
    return _lf_less(bv[1:], av[1:])


def check_strongly_loopfree(n):
    """Check that the recursive total order places every negative boundary
    term below its element and every positive term above it."""
    for b in basis_elements(n):
        if b.dimension == 0:
            continue
        for face, c in Chain.of(b).boundary().terms.items():
            if c < 0 and not loopfree_less(face, b):
                return False
            if c > 0 and not loopfree_less(b, face):
                return False
    return True


def apply_map(f, b):
    """Push a basis element through a monotone map: the image tuple if its
    entries are distinct, the zero chain otherwise."""
    if b.ambient != f.domain:
        raise ArityError(
            f"basis element {b} lives in {b.ambient}, map has domain {f.domain}"
        )
    image = tuple(f.values[v] for v in b.vertices)
    if all(u < v for u, v in zip(image, image[1:])):
        return Chain.of(BasisElt(image, f.codomain))
    return Chain.zero(b.dimension, f.codomain)


class ChainMapTable:
    """A chain map between the complexes on {0,...,m} and {0,...,n}, stored as
    the image of every basis element."""

    def __init__(self, m, n, images):
        self.m = m
        self.n = n
        self.images = dict(images)

    def image(self, b):
        return self.images[b]

    def apply(self, chain):
        """Extend the table linearly to an arbitrary chain."""
        out = Chain.zero(chain.dimension, self.n)
        for b, c in chain.terms.items():
            out = out + c * self.images[b]
        return out

    def validate(self):
        """Raise unless the table is a well-formed chain map.

        Checks the key set, image shapes, commutation with the boundary and
        constancy of the augmentation on vertex images (the induced integer
        multiplier on the augmentation module).
        """
        expected = set(basis_elements(self.m))
        if set(self.images) != expected:
            raise PreconditionError(
                f"table must cover exactly the basis of the complex on {self.m}"
            )
        for b, chain in self.images.items():
            if chain.dimension != b.dimension or chain.ambient != self.n:
                raise PreconditionError(f"image of {b} has the wrong shape")
        degrees = {
            self.images[b].augmentation()
            for b in expected
            if b.dimension == 0
        }
        if len(degrees) > 1:
            raise PreconditionError(
                "vertex images have inconsistent augmentation; not a chain map"
            )
        for b in expected:
            if b.dimension == 0:
                continue
            via_faces = self.apply(Chain.of(b).boundary())
            via_image = self.images[b].boundary()
            if via_faces != via_image:
                raise PreconditionError(f"table does not commute with the boundary at {b}")

    def compose(self, other):
        """The composite table self o other."""
        if other.n != self.m:
            raise ArityError(
                f"cannot compose tables: inner codomain {other.n} differs from "
                f"outer domain {self.m}"
            )
        images = {b: self.apply(chain) for b, chain in other.images.items()}
        return ChainMapTable(other.m, self.n, images)

    def __eq__(self, other):
        if not isinstance(other, ChainMapTable):
            return NotImplemented
        return self.m == other.m and self.n == other.n and self.images == other.images

    def __repr__(self):
        return f"<ChainMapTable {self.m}->{self.n}>"

    def to_json(self):
        return {
            "m": self.m,
            "n": self.n,
            "images": {
                str(b): self.images[b].to_json()
                for b in sorted(self.images, key=lambda e: (e.dimension, e.vertices))
            },
        }


def to_chain_map(x):
    """The chain map induced by an integer combination of monotone maps."""
    images = {}
    for b in basis_elements(x.domain):
        total = Chain.zero(b.dimension, x.codomain)
        for f, c in x.terms.items():
            total = total + c * apply_map(f, b)
        images[b] = total
    return ChainMapTable(x.domain, x.codomain, images)


def map_from_pair(a, b, m):
    """The monotone map associated to a basis pair (a, b): a lists the minimal
    preimages (starting at 0) and b lists the image values."""
    av, bv = a.vertices, b.vertices
    values = []
    i = 0
    for j in range(m + 1):
        if i + 1 < len(av) and j >= av[i + 1]:
            i += 1
        values.append(bv[i])
    return MonotoneMap(tuple(values), b.ambient)


def from_chain_map(table):
    """The unique combination of monotone maps inducing the given chain map.

    Monotone maps correspond to pairs (a, b) with a a basis element starting
    at vertex 0 and b a basis element of the same dimension in the codomain.
    The map for (a, b) sends a to b, kills every higher-dimensional element
    starting at 0, and kills those of the same dimension that precede a
    lexicographically.  Solving from the top dimension down, in lexicographic
    order within each dimension, therefore reads off one coefficient per pair
    without disturbing the rows already matched.
    """
    table.validate()
    m, n = table.m, table.n
    acc = ZMorphism.zero(m, n)
    for q in range(m, -1, -1):
        starters = [
            a
            for a in basis_elements(m, q)
            if a.vertices[0] == 0
        ]
        for a in sorted(starters, key=lambda e: e.vertices):
            have = Chain.zero(q, n)
            for f, c in acc.terms.items():
                have = have + c * apply_map(f, a)
            need = table.images[a] - have
            for b, c in need.terms.items():
                acc = acc + ZMorphism.generator(map_from_pair(a, b, m), c)
    if to_chain_map(acc) != table:
        raise AssertionError("chain-map inversion failed to reproduce the table")
    return acc
