"""Shared generators for randomized tests.

Oriental morphisms are sampled by a random walk through operations the
membership set is closed under (faces, degeneracies, fillers, pastings of
matching faces, and composition with plain monotone maps), so every sample
is a member by construction.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from osimplex import filler, pasting
from osimplex.simplex import MonotoneMap
from osimplex.zdelta import ZMorphism


def random_map(rng, m, n):
    values = sorted(rng.randint(0, n) for _ in range(m + 1))
    return MonotoneMap(tuple(values), n)


def random_zmorphism(rng, m, n, max_terms=4, lo=-5, hi=5):
    items = []
    for _ in range(rng.randint(0, max_terms)):
        c = 0
        while c == 0:
            c = rng.randint(lo, hi)
        items.append((random_map(rng, m, n), c))
    return ZMorphism(m, n, items)


def random_path(rng, n):
    """A chain of edges between increasing vertices; a member over domain 1."""
    size = rng.randint(2, n + 1)
    verts = sorted(rng.sample(range(n + 1), size))
    items = []
    for k in range(len(verts) - 1):
        items.append((MonotoneMap((verts[k], verts[k + 1]), n), 1))
        if k < len(verts) - 2:
            items.append((MonotoneMap((verts[k + 1], verts[k + 1]), n), -1))
    return ZMorphism(1, n, items)


def random_oriental(rng, m, n, steps=8, max_domain=3):
    """A random member with domain m and codomain n."""
    if n >= 1 and rng.random() < 0.5:
        x = random_path(rng, n)
    else:
        x = ZMorphism.generator(random_map(rng, rng.randint(0, max_domain), n))
    for _ in range(steps):
        d = x.domain
        ops = ["compose"]
        if d < max_domain:
            ops += ["degeneracy", "degeneracy"]
        if d >= 1:
            ops.append("face")
        if d >= 2:
            ops += ["filler", "filler", "pasting"]
        op = rng.choice(ops)
        if op == "face":
            x = x.face(rng.randint(0, d))
        elif op == "degeneracy":
            x = x.degeneracy(rng.randint(0, d))
        elif op == "filler":
            i = rng.randint(0, d - 2)
            x = filler(i, x.face(i + 2), x.face(i))
        elif op == "pasting":
            i = rng.randint(0, d - 2)
            x = pasting(i, x.face(i + 2), x.face(i))
        elif op == "compose":
            k = rng.randint(0, max_domain)
            x = x.compose(ZMorphism.generator(random_map(rng, k, d)))
    while x.domain > m:
        x = x.face(rng.randint(0, x.domain))
    while x.domain < m:
        x = x.degeneracy(rng.randint(0, x.domain))
    return x


def all_domain_one_members(n):
    """Every member over domain 1: constants and edge chains."""
    out = [ZMorphism.generator(MonotoneMap((t, t), n)) for t in range(n + 1)]
    for q in range(1, n + 1):
        for verts in combinations(range(n + 1), q + 1):
            items = []
            for k in range(q):
                items.append((MonotoneMap((verts[k], verts[k + 1]), n), 1))
                if k < q - 1:
                    items.append((MonotoneMap((verts[k + 1], verts[k + 1]), n), -1))
            out.append(ZMorphism(1, n, items))
    return out


@pytest.fixture
def rng():
    return random.Random(0x5EED)
