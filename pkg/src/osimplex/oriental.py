"""Morphisms between oriented simplexes, fillers, and factorization.

A combination x of monotone maps with codomain n and domain m is a morphism
of oriented simplexes exactly when its coefficients sum to 1 and, for every
injective monotone map f into m, the injective terms of x o f all carry
nonnegative coefficients.  This module decides that membership, implements
the filler and pasting operations under which the morphisms are closed, and
factorizes every such morphism into an expression tree over plain monotone
maps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    ArityError,
    InvalidExpressionError,
    NotComposableError,
    ParseError,
    PreconditionError,
)
from .simplex import MonotoneMap, enumerate_injective_into, face_generator
from .zdelta import ZMorphism


# ---------------------------------------------------------------------------
# membership


@dataclass(frozen=True)
class MembershipResult:
    """Verdict of the membership test, with a witness on failure.

    On a nonnegativity failure, `witness_map` is an injective map f into the
    domain and `witness_term` an injective term of x o f whose coefficient
    `witness_coefficient` is negative; a wrong coefficient sum carries only
    the reason text.
    """

    ok: bool
    reason: str = ""
    witness_map: MonotoneMap = None
    witness_term: MonotoneMap = None
    witness_coefficient: int = 0

    def __bool__(self):
        return self.ok


def check_membership(x):
    """Decide membership among oriental morphisms, returning a result object.

    Every injective map into the domain is tried; there is no pruning.
    """
    total = x.coefficient_sum()
    if total != 1:
        return MembershipResult(
            ok=False, reason=f"coefficient sum is {total}, not 1"
        )
    for f in enumerate_injective_into(x.domain):
        composite = x.compose(ZMorphism.generator(f))
        for g, c in composite.terms.items():
            if c < 0 and g.is_injective():
                return MembershipResult(
                    ok=False,
                    reason=(
                        f"injective term {g} has coefficient {c} in the "
                        f"composite with {f}"
                    ),
                    witness_map=f,
                    witness_term=g,
                    witness_coefficient=c,
                )
    return MembershipResult(ok=True)


def is_oriental_morphism(x):
    return check_membership(x).ok


def _require_member(x, who):
    result = check_membership(x)
    if not result.ok:
        raise PreconditionError(f"{who} requires an oriental morphism: {result.reason}")


# ---------------------------------------------------------------------------
# fillers and pastings


def _check_filler_pre(i, x, y):
    if not isinstance(x, ZMorphism) or not isinstance(y, ZMorphism):
        raise ArityError("filler and pasting act on combinations of monotone maps")
    x._check_shape(y)
    m = x.domain
    if not 0 <= i <= m - 1:
        raise NotComposableError(f"index {i} out of range for domain {m}")
    if x.face(i) != y.face(i + 1):
        raise NotComposableError(
            f"face mismatch: face {i} of the left operand differs from "
            f"face {i + 1} of the right operand"
        )


def filler(i, x, y):
    """The filler of x and y at i, one dimension up.

    Defined when face i of x equals face i+1 of y; morphisms of oriented
    simplexes are closed under it.
    """
    _check_filler_pre(i, x, y)
    return x.degeneracy(i + 1) - x.face(i).degeneracy(i).degeneracy(i) + y.degeneracy(i)


def pasting(i, x, y):
    """The pasting of x and y at i, in the same dimension; it equals face i+1
    of the corresponding filler."""
    _check_filler_pre(i, x, y)
    return x - x.face(i).degeneracy(i) + y


# ---------------------------------------------------------------------------
# structure of oriental morphisms


def first_last(x):
    """The least and greatest vertices of an oriental morphism.

    These are also the unique vertices reached by composing with the first
    and last vertex inclusions; a cheap single-term check rejects obvious
    non-members.
    """
    if x.is_zero():
        raise PreconditionError("the zero combination is not an oriental morphism")
    m = x.domain
    at_start = x.compose(ZMorphism.generator(MonotoneMap((0,), m)))
    at_end = x.compose(ZMorphism.generator(MonotoneMap((m,), m)))
    vertices = x.vertices()
    s, t = min(vertices), max(vertices)
    expected_s = ZMorphism.generator(MonotoneMap((s,), x.codomain))
    expected_t = ZMorphism.generator(MonotoneMap((t,), x.codomain))
    if at_start != expected_s or at_end != expected_t:
        raise PreconditionError(
            "composites with the end vertices are not single unit terms; "
            "not an oriental morphism"
        )
    return s, t


def tail_decompose(x):
    """Group the terms of x by final vertex: a list (x_0,...,x_n) one domain
    down, where appending i to the terms of x_i and summing recovers x."""
    m, n = x.domain, x.codomain
    if m <= 0:
        raise PreconditionError("tail decomposition needs domain at least 1")
    buckets = [{} for _ in range(n + 1)]
    for f, c in x.terms.items():
        head = MonotoneMap(f.values[:-1], n)
        buckets[f.values[-1]][head] = buckets[f.values[-1]].get(head, 0) + c
    return [ZMorphism(m - 1, n, bucket) for bucket in buckets]


def _append_vertex(x, t):
    """Extend every term of x by the final vertex t (termwise join)."""
    items = {}
    for f, c in x.terms.items():
        items[MonotoneMap(f.values + (t,), x.codomain)] = c
    return ZMorphism(x.domain + 1, x.codomain, items)


def _last_vertex_image(x):
    """The composite of x with the last vertex inclusion, as a dict v -> coef."""
    out = {}
    for f, c in x.terms.items():
        v = f.values[-1]
        out[v] = out.get(v, 0) + c
        if not out[v]:
            del out[v]
    return out


def _check_split_input(r, t, x, terms_ok, describe):
    m = x.domain
    if not 0 <= r <= m - 2:
        raise PreconditionError(f"split index {r} out of range for domain {m}")
    if _last_vertex_image(x) != {t: 1}:
        raise PreconditionError(
            f"the composite with the last vertex must be the single term ({t})"
        )
    for f in x.terms:
        if not terms_ok(f.values):
            raise PreconditionError(f"term {f} violates the split precondition: {describe}")


def _alpha_beta(x, r, t, pivot):
    """The linear start/finish splitting of x at position r against t.

    pivot selects the entry whose comparison with t drives the case split:
    the entry after r for the start split, the final entry for the finish
    split.  Returns (u, v) with x = pasting(r, u, v).
    """
    m, n = x.domain, x.codomain
    alpha = {}
    beta = {}
    for f, c in x.terms.items():
        a = f.values
        if a[pivot] < t:
            ua = a
            va = a[:r] + (a[r + 1], a[r + 1]) + a[r + 2:]
        else:
            ua = a[:r] + (a[r], a[r]) + a[r + 2:]
            va = a
        for target, key in ((alpha, ua), (beta, va)):
            g = MonotoneMap(key, n)
            target[g] = target.get(g, 0) + c
    u = ZMorphism(m, n, alpha)
    v = ZMorphism(m, n, beta)
    if pasting(r, u, v) != x:
        raise AssertionError("splitting failed to reassemble; input is not oriental")
    return u, v


def split_start(r, t, x):
    """Split off a filler on the right at position r, for x whose terms all
    satisfy a_r < t.  Returns (u, v) with x = pasting(r, u, v), where v is the
    filler of its own outer faces and every term of u has a_{r+1} < t."""
    _check_split_input(r, t, x, lambda a: a[r] < t, f"entry {r} must be below {t}")
    u, v = _alpha_beta(x, r, t, pivot=r + 1)
    if filler(r, v.face(r + 2), v.face(r)) != v:
        raise AssertionError("right factor is not the filler of its faces")
    return u, v


def split_middle(t, x):
    """Split at the top position, strictly lowering the final vertex of the
    left factor.  Returns (u, v) with x = pasting(m-1, u, v); every term of v
    has a_{m-1} = a_m or a_m = t."""
    m = x.domain
    if m <= 0:
        raise PreconditionError("the middle split needs domain at least 1")
    if _last_vertex_image(x) != {t: 1}:
        raise PreconditionError(
            f"the composite with the last vertex must be the single term ({t})"
        )
    for f in x.terms:
        if not f.values[m - 1] < t:
            raise PreconditionError(
                f"term {f} violates the split precondition: entry {m - 1} must be below {t}"
            )
    return _alpha_beta(x, m - 1, t, pivot=m)


def split_finish(r, t, x):
    """Split off a filler on the left at position r, for x whose terms all
    satisfy a_{r+1} = a_m or a_m = t.  Returns (u, v) with
    x = pasting(r, u, v), where u is the filler of its own outer faces and
    every term of v has a_r = a_m or a_m = t."""
    _check_split_input(
        r, t, x,
        lambda a: a[r + 1] == a[-1] or a[-1] == t,
        f"entry {r + 1} must equal the last entry unless that entry is {t}",
    )
    u, v = _alpha_beta(x, r, t, pivot=x.domain)
    if filler(r, u.face(r + 2), u.face(r)) != u:
        raise AssertionError("left factor is not the filler of its faces")
    return u, v


# ---------------------------------------------------------------------------
# expression trees


class Expr:
    """Base class of factorization expression trees."""

    def evaluate(self):
        return self._evaluate(())

    def to_json(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"<Expr {self}>"


class Leaf(Expr):
    """A plain monotone map."""

    def __init__(self, f):
        self.map = f

    def _key(self):
        return ("leaf", self.map)

    def _evaluate(self, path):
        return ZMorphism.generator(self.map)

    def __str__(self):
        return "(" + ",".join(str(v) for v in self.map.values) + ")"

    def to_json(self):
        return {"op": "map", "values": list(self.map.values)}


class _Node(Expr):
    tag = None
    symbol = None

    def __init__(self, index, left, right):
        self.index = index
        self.left = left
        self.right = right

    def _key(self):
        return (self.tag, self.index, self.left, self.right)

    def _evaluate(self, path):
        lv = self.left._evaluate(path + ("left",))
        rv = self.right._evaluate(path + ("right",))
        try:
            return self._combine(lv, rv)
        except (NotComposableError, ArityError) as exc:
            raise InvalidExpressionError(str(exc), path) from exc

    def __str__(self):
        return f"{self.symbol}_{self.index}({self.left},{self.right})"

    def to_json(self):
        return {
            "op": self.tag,
            "index": self.index,
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }


class Filler(_Node):
    tag = "filler"
    symbol = "F"

    def _combine(self, lv, rv):
        return filler(self.index, lv, rv)


class Pasting(_Node):
    tag = "pasting"
    symbol = "P"

    def _combine(self, lv, rv):
        return pasting(self.index, lv, rv)


class ComposeMap(Expr):
    """Composition of a subexpression with a plain monotone map on the right.

    Only produced by the pasting-elimination rewrite; plain factorization
    never emits it.
    """

    def __init__(self, inner, f):
        self.inner = inner
        self.map = f

    def _key(self):
        return ("compose", self.inner, self.map)

    def _evaluate(self, path):
        value = self.inner._evaluate(path + ("inner",))
        try:
            return value.compose(ZMorphism.generator(self.map))
        except ArityError as exc:
            raise InvalidExpressionError(str(exc), path) from exc

    def __str__(self):
        body = "(" + ",".join(str(v) for v in self.map.values) + ")"
        return f"C({self.inner},{body})"

    def to_json(self):
        return {"op": "compose", "inner": self.inner.to_json(), "values": list(self.map.values)}


def eval_expr(expr):
    """Evaluate an expression tree bottom-up, checking every node's
    face-matching precondition; failures carry the offending node path."""
    return expr.evaluate()


def expr_from_json(data, n):
    try:
        op = data["op"]
        if op == "map":
            return Leaf(MonotoneMap(tuple(data["values"]), n))
        if op in ("filler", "pasting"):
            cls = Filler if op == "filler" else Pasting
            return cls(
                int(data["index"]),
                expr_from_json(data["left"], n),
                expr_from_json(data["right"], n),
            )
        if op == "compose":
            return ComposeMap(
                expr_from_json(data["inner"], n),
                MonotoneMap(tuple(data["values"]), n),
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad expression object: {exc}") from exc
    raise ParseError(f"unknown expression op {op!r}")


def parse_expr(text, n):
    """Parse the rendering "F_i(L,R)" / "P_i(L,R)" / "C(L,(...))" / "(f0,...)"."""
    expr, pos = _parse_expr(text, 0, n)
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if pos != len(text):
        raise ParseError(f"trailing input {text[pos:]!r}", pos)
    return expr


def _skip_ws(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_expr(text, pos, n):
    pos = _skip_ws(text, pos)
    if pos >= len(text):
        raise ParseError("unexpected end of expression", pos)
    ch = text[pos]
    if ch in ("F", "P"):
        cls = Filler if ch == "F" else Pasting
        pos += 1
        if pos >= len(text) or text[pos] != "_":
            raise ParseError("expected '_' after node tag", pos)
        pos += 1
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise ParseError("expected a node index", pos)
        index = int(text[start:pos])
        pos = _expect(text, pos, "(")
        left, pos = _parse_expr(text, pos, n)
        pos = _expect(text, pos, ",")
        right, pos = _parse_expr(text, pos, n)
        pos = _expect(text, pos, ")")
        return cls(index, left, right), pos
    if ch == "C":
        pos = _expect(text, pos + 1, "(")
        inner, pos = _parse_expr(text, pos, n)
        pos = _expect(text, pos, ",")
        leaf, pos = _parse_leaf(text, pos, n)
        pos = _expect(text, pos, ")")
        return ComposeMap(inner, leaf.map), pos
    if ch == "(":
        leaf, pos = _parse_leaf(text, pos, n)
        return leaf, pos
    raise ParseError(f"unexpected character {ch!r}", pos)


def _expect(text, pos, token):
    pos = _skip_ws(text, pos)
    if pos >= len(text) or text[pos] != token:
        raise ParseError(f"expected {token!r}", pos)
    return pos + 1


def _parse_leaf(text, pos, n):
    pos = _expect(text, pos, "(")
    start = pos
    depth = 1
    while pos < len(text) and depth:
        if text[pos] == "(":
            depth += 1
        elif text[pos] == ")":
            depth -= 1
        pos += 1
    if depth:
        raise ParseError("unbalanced parentheses in leaf", start)
    body = text[start:pos - 1]
    try:
        values = tuple(int(v.strip()) for v in body.split(","))
        return Leaf(MonotoneMap(values, n)), pos
    except ValueError as exc:
        raise ParseError(f"bad leaf {body!r}: {exc}", start) from exc


# ---------------------------------------------------------------------------
# factorization


def simplify(expr):
    """Drop pasting nodes whose one operand is the degenerate unit of the
    other; the evaluation is unchanged."""
    if isinstance(expr, Leaf):
        return expr
    if isinstance(expr, ComposeMap):
        return ComposeMap(simplify(expr.inner), expr.map)
    left = simplify(expr.left)
    right = simplify(expr.right)
    node = type(expr)(expr.index, left, right)
    if isinstance(node, Pasting):
        i = node.index
        lv = left.evaluate()
        rv = right.evaluate()
        if lv == rv.face(i + 1).degeneracy(i):
            return right
        if rv == lv.face(i).degeneracy(i):
            return left
    return node


def eliminate_pastings(expr):
    """Rewrite every pasting node as a face of the corresponding filler, so
    the tree uses fillers and composition with monotone maps only."""
    if isinstance(expr, Leaf):
        return expr
    if isinstance(expr, ComposeMap):
        return ComposeMap(eliminate_pastings(expr.inner), expr.map)
    left = eliminate_pastings(expr.left)
    right = eliminate_pastings(expr.right)
    if isinstance(expr, Pasting):
        inner = Filler(expr.index, left, right)
        m = inner.evaluate().domain
        return ComposeMap(inner, face_generator(expr.index + 1, m))
    return type(expr)(expr.index, left, right)


def factorize(x, simplify_output=True):
    """Factorize an oriental morphism into an expression over monotone maps.

    Writing t for the greatest vertex of x, either x is the constant map at t
    (the leaf base case, covering domain 0 and t = 0), or x splits as a chain
    of pastings: fillers split off at positions 0,...,m-2, a middle split
    whose left factor has a smaller greatest vertex, fillers split off at
    positions m-2,...,0, and a residue all of whose terms end at t.  The
    residue is the termwise extension by t of a morphism one domain down,
    and its factorization is obtained by appending t to every leaf of that
    morphism's tree.  Each filler's two faces live one domain down, so the
    recursion terminates along (domain, greatest vertex).

    Every recursive input is re-verified for membership and every split is
    re-evaluated, so the returned tree always evaluates back to x.
    """
    _require_member(x, "factorize")
    expr = _factorize_member(x)
    if simplify_output:
        expr = simplify(expr)
    if expr.evaluate() != x:
        raise AssertionError("factorization failed to reproduce its input")
    return expr


def _factorize_member(x):
    _require_member(x, "factorize")
    m = x.domain
    _, t = first_last(x)
    constant = MonotoneMap((t,) * (m + 1), x.codomain)
    if x.coefficient(constant):
        if x != ZMorphism.generator(constant):
            raise AssertionError(
                "a member with a constant term at its greatest vertex must be "
                "that constant"
            )
        return Leaf(constant)

    # Fillers split off below the top position, collected outermost-last.
    start_fillers = []
    current = x
    for r in range(0, m - 1):
        current, v = split_start(r, t, current)
        node = Filler(r, _factorize_member(v.face(r + 2)), _factorize_member(v.face(r)))
        start_fillers.append((r, node))

    # The top-position split lowers the greatest vertex of the left factor.
    left, current = split_middle(t, current)
    _, t_left = first_last(left)
    if t_left >= t:
        raise AssertionError("middle split did not lower the greatest vertex")
    left_tree = _factorize_member(left)

    # Fillers split off on the left, top position downward.
    finish_fillers = []
    for r in range(m - 2, -1, -1):
        u, current = split_finish(r, t, current)
        node = Filler(r, _factorize_member(u.face(r + 2)), _factorize_member(u.face(r)))
        finish_fillers.append((r, node))

    # The residue ends at t everywhere; recurse one domain down and append t.
    if any(f.values[-1] != t for f in current.terms):
        raise AssertionError("residue has a term not ending at the greatest vertex")
    residue_tree = _append_to_leaves(_factorize_member(current.face(m)), t)
    if residue_tree.evaluate() != current:
        raise AssertionError("residue reconstruction failed")

    tree = residue_tree
    for r, node in reversed(finish_fillers):
        tree = Pasting(r, node, tree)
    tree = Pasting(m - 1, left_tree, tree)
    for r, node in reversed(start_fillers):
        tree = Pasting(r, tree, node)
    return tree


def _append_to_leaves(expr, t):
    """Append the vertex t to every leaf; this commutes with all node
    operations because their indices never touch the final position."""
    if isinstance(expr, Leaf):
        return Leaf(MonotoneMap(expr.map.values + (t,), expr.map.codomain))
    if isinstance(expr, ComposeMap):
        raise AssertionError("plain factorizations contain no composition nodes")
    return type(expr)(
        expr.index, _append_to_leaves(expr.left, t), _append_to_leaves(expr.right, t)
    )
