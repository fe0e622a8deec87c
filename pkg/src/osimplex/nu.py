"""Cells of the oriented simplexes: double sequences of nonnegative chains.

A cell over the complex on {0,...,n} is a finite double sequence of chain
pairs, one pair per dimension, whose consecutive levels are tied together by
the boundary, whose chains are nonnegative, and whose bottom chains have
augmentation 1.  Together with the identity truncations and the termwise
composition these form a strict omega-category; this module also provides
the atoms, an exact enumerator at small n, the closure check that atoms
generate everything, and the action of oriental morphisms on cells.
"""

from __future__ import annotations

from itertools import product

from .chains import Chain, basis_elements, iterated_boundary_part, to_chain_map
from .errors import (
    ArityError,
    CellConditionError,
    EnumerationLimitError,
    NotComposableError,
    ParseError,
    PreconditionError,
)
from .oriental import check_membership


def violations(n, pairs):
    """The membership condition numbers violated by a raw double sequence.

    Conditions: (1) each component is a chain of the level's dimension,
    (2) finitely many nonzero levels (always true for list input),
    (3) the difference at each level is the boundary of both chains one
    level up, (4) all chains are nonnegative, (5) both bottom chains have
    augmentation 1.  An empty result means the sequence is a cell.
    """
    broken = set()
    pairs = list(pairs)
    for q, pair in enumerate(pairs):
        if len(pair) != 2 or not all(
            isinstance(c, Chain) and c.dimension == q and c.ambient == n for c in pair
        ):
            broken.add(1)
    if broken:
        return sorted(broken)
    while pairs and pairs[-1][0].is_zero() and pairs[-1][1].is_zero():
        pairs.pop()
    if not pairs:
        broken.add(5)
        return sorted(broken)
    top = len(pairs) - 1
    for q, (neg, pos) in enumerate(pairs):
        if not (neg.is_nonnegative() and pos.is_nonnegative()):
            broken.add(4)
        diff = pos - neg
        if q == top:
            if not diff.is_zero():
                broken.add(3)
        else:
            up_neg, up_pos = pairs[q + 1]
            if diff != up_neg.boundary() or diff != up_pos.boundary():
                broken.add(3)
    if pairs[0][0].augmentation() != 1 or pairs[0][1].augmentation() != 1:
        broken.add(5)
    return sorted(broken)


class Cell:
    """A validated double sequence in canonical (trailing-zero-free) form."""

    __slots__ = ("ambient", "pairs", "_hash")

    def __init__(self, ambient, pairs, _checked=False):
        pairs = [tuple(p) for p in pairs]
        if not _checked:
            bad = violations(ambient, pairs)
            if bad:
                raise CellConditionError(bad)
        while pairs and pairs[-1][0].is_zero() and pairs[-1][1].is_zero():
            pairs.pop()
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cell values are immutable")

    @classmethod
    def from_pairs(cls, ambient, pairs):
        """Validate a raw double sequence; raises with the violated condition
        numbers when it is not a cell."""
        return cls(ambient, pairs)

    @property
    def dimension(self):
        return len(self.pairs) - 1

    def pair(self, q):
        """The chain pair in dimension q, zero above the top level."""
        if q < len(self.pairs):
            return self.pairs[q]
        zero = Chain.zero(q, self.ambient)
        return (zero, zero)

    def source(self, p):
        """The left identity at level p: truncate and make level p diagonal."""
        return self._identity(p, 0)

    def target(self, p):
        """The right identity at level p: truncate and make level p diagonal."""
        return self._identity(p, 1)

    def _identity(self, p, side):
        if p < 0:
            raise PreconditionError("identity level must be nonnegative")
        if p >= len(self.pairs):
            return self
        glue = self.pairs[p][side]
        return Cell(self.ambient, self.pairs[:p] + ((glue, glue),), _checked=True)

    def compose(self, other, p):
        """The composite of self followed by other across level p.

        Defined when the level-p target of self equals the level-p source of
        other; the result is the termwise sum of both cells minus their
        shared identity.
        """
        if not isinstance(other, Cell) or other.ambient != self.ambient:
            raise ArityError("cells must live over the same complex to compose")
        shared = self.target(p)
        if shared != other.source(p):
            raise NotComposableError(
                f"cells do not meet across level {p}: the left target differs "
                f"from the right source"
            )
        height = max(len(self.pairs), len(other.pairs))
        pairs = []
        for q in range(height):
            xn, xp = self.pair(q)
            wn, wp = shared.pair(q)
            yn, yp = other.pair(q)
            pairs.append((xn - wn + yn, xp - wp + yp))
        result = Cell(self.ambient, pairs)
        return result

    def __eq__(self, other):
        if not isinstance(other, Cell):
            return NotImplemented
        return self.ambient == other.ambient and self.pairs == other.pairs

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.ambient, self.pairs)))
        return self._hash

    def __str__(self):
        levels = [f"{neg},{pos}" for neg, pos in self.pairs]
        return "(" + " | ".join(levels) + ")"

    def __repr__(self):
        return f"<Cell in {self.ambient}: {self}>"

    def to_json(self):
        return {
            "n": self.ambient,
            "pairs": [
                {"neg": neg.to_json(), "pos": pos.to_json()} for neg, pos in self.pairs
            ],
        }

    @classmethod
    def from_json(cls, data):
        try:
            n = int(data["n"])
            pairs = []
            for q, level in enumerate(data["pairs"]):
                pairs.append(
                    tuple(
                        Chain(
                            q,
                            n,
                            [(tuple(t["basis"]), int(t["coef"])) for t in level[side]],
                        )
                        for side in ("neg", "pos")
                    )
                )
        except (KeyError, TypeError, ValueError, ArityError) as exc:
            raise ParseError(f"bad cell object: {exc}") from exc
        return cls(n, pairs)


def atom(b):
    """The canonical cell of a basis element: the element on top of its
    iterated boundary parts."""
    p = b.dimension
    pairs = [
        (iterated_boundary_part(b, p - q, "-"), iterated_boundary_part(b, p - q, "+"))
        for q in range(p + 1)
    ]
    return Cell.from_pairs(b.ambient, pairs)


def _first_vertex_weight(chain):
    """Pair a chain with the first-vertex functional; on the boundary of any
    basis element this functional evaluates to a strictly positive integer,
    which bounds coefficient sums of nonnegative boundary preimages."""
    return sum(c * b.vertices[0] for b, c in chain.terms.items())


def _nonneg_preimages(delta, q):
    """All nonnegative q-chains whose boundary equals delta, by exhaustive
    search bounded through the first-vertex functional."""
    n = delta.ambient
    budget = _first_vertex_weight(delta)
    if budget < 0:
        return []
    basis = basis_elements(n, q)
    weights = [_first_vertex_weight(Chain.of(b).boundary()) for b in basis]
    out = []

    def descend(index, remaining, picked):
        if index == len(basis):
            chain = Chain(q, n, picked)
            if chain.boundary() == delta:
                out.append(chain)
            return
        w = weights[index]
        top = remaining // w
        for c in range(top + 1):
            descend(
                index + 1,
                remaining - c * w,
                picked + [(basis[index], c)] if c else picked,
            )

    descend(0, budget, [])
    return out


def enumerate_cells(n, bound=3, max_cells=None):
    """All cells over the complex on {0,...,n}, by exact level-by-level search.

    The bottom pair of a cell consists of two single vertices; each higher
    level ranges over the nonnegative boundary preimages of the previous
    level's difference, and a cell closes off exactly when that difference
    vanishes.  The search is exact: nonnegative chains with zero boundary are
    themselves zero, so no solutions are missed by the budget.

    Raises when n exceeds the configured bound (raise it explicitly for
    larger searches) or when more than max_cells cells appear.
    """
    if n > bound:
        raise EnumerationLimitError(
            f"enumeration of cells at n={n} exceeds the bound {bound}; "
            "pass a larger bound explicitly to proceed"
        )
    cells = set()

    def note(pairs):
        cells.add(Cell(n, pairs, _checked=True))
        if max_cells is not None and len(cells) > max_cells:
            raise EnumerationLimitError(
                f"enumeration produced more than {max_cells} cells"
            )

    def extend(pairs, q):
        neg, pos = pairs[-1]
        delta = pos - neg
        if delta.is_zero():
            note(pairs)
            return
        if q >= n:
            return
        for up_neg in _nonneg_preimages(delta, q + 1):
            for up_pos in _nonneg_preimages(delta, q + 1):
                extend(pairs + [(up_neg, up_pos)], q + 1)

    for s, t in product(range(n + 1), repeat=2):
        bottom = (
            Chain(0, n, [((s,), 1)]),
            Chain(0, n, [((t,), 1)]),
        )
        extend([bottom], 0)
    return cells


def check_atom_generation(n, bound=3):
    """Whether the closure of the atoms under identities and composition is
    the whole set of cells."""
    cells = enumerate_cells(n, bound=bound)
    generated = {atom(b) for b in basis_elements(n)}
    frontier = set(generated)
    while frontier:
        fresh = set()
        for x in frontier:
            for p in range(n + 1):
                for made in (x.source(p), x.target(p)):
                    if made not in generated:
                        fresh.add(made)
        for x, y in product(generated, repeat=2):
            for p in range(max(x.dimension, y.dimension) + 1):
                if x.target(p) == y.source(p):
                    made = x.compose(y, p)
                    if made not in generated:
                        fresh.add(made)
        generated |= fresh
        frontier = fresh
    return generated == cells


def from_set_pairs(n, set_pairs):
    """Build a cell from per-dimension pairs of sets of basis elements, taking
    indicator sums; validation reports the violated conditions."""
    pairs = []
    for q, (neg_set, pos_set) in enumerate(set_pairs):
        pairs.append(
            (
                Chain(q, n, [(b, 1) for b in neg_set]),
                Chain(q, n, [(b, 1) for b in pos_set]),
            )
        )
    return Cell.from_pairs(n, pairs)


def act(x, cell):
    """Apply an oriental morphism to a cell through its chain map.

    The morphism must pass the membership test; order preservation then
    guarantees the image sequence is again a cell.
    """
    if cell.ambient != x.domain:
        raise ArityError(
            f"cell lives over {cell.ambient}, morphism has domain {x.domain}"
        )
    result = check_membership(x)
    if not result.ok:
        raise PreconditionError(
            f"only oriental morphisms act on cells: {result.reason}"
        )
    table = to_chain_map(x)
    pairs = [(table.apply(neg), table.apply(pos)) for neg, pos in cell.pairs]
    return Cell.from_pairs(x.codomain, pairs)
