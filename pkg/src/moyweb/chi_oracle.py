"""Brute-force count of set colourings, an oracle for the value at ``q = 1``.

A set colouring assigns to every ``i``-coloured edge or circle an
``i``-element subset of ``{1..N}`` such that at each vertex the two
same-direction edges carry disjoint subsets whose union is the subset of
the third edge. The number of set colourings equals the value of the MOY
polynomial at ``q = 1``::

    >>> from moyweb.drawing import Tangle
    >>> t = Tangle([2], n=3); t.split(0, 1, 1); t.merge(0)
    >>> count_set_colourings(t.close())
    6

Counting is a backtracking search over bitmasks. Edges are visited in
frontier order, so that an edge whose two neighbours at some vertex are
already fixed is forced rather than enumerated.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .moygraph import MoyGraph, connected_components
from .qpoly import eval_at_one

__all__ = [
    "SetColouring",
    "count_set_colourings",
    "iter_set_colourings",
    "colouring_errors",
    "verify_moves_at_one",
]


@dataclass(frozen=True)
class SetColouring:
    """Map from edge or circle id to a subset of ``{1..n}``."""

    n: int
    assignment: dict

    def __getitem__(self, key: str) -> frozenset:
        return self.assignment[key]

    def mask(self, key: str) -> int:
        return sum(1 << (k - 1) for k in self.assignment[key])


def _subset(mask: int) -> frozenset:
    return frozenset(k + 1 for k in range(mask.bit_length()) if mask >> k & 1)


def _masks(n: int, size: int) -> list[int]:
    return [sum(1 << k for k in c) for c in itertools.combinations(range(n), size)]


class _Search:
    """Backtracking over the edges of one graph (circles handled apart)."""

    def __init__(self, g: MoyGraph):
        self.n = g.n
        colour = {e.id: e.colour for e in g.edges}
        self.colour = colour
        # per vertex: (lone edge, sibling, sibling)
        self.triples = []
        self.at: dict[str, list[int]] = {e.id: [] for e in g.edges}
        for v in g.vertices:
            lone = v.lone_slot()
            a, b = (r[0] for r in v.rotated_from(lone)[1:])
            self.triples.append((lone[0], a, b))
            for eid in {lone[0], a, b}:
                self.at[eid].append(len(self.triples) - 1)
        self.order = self._frontier_order(list(colour))
        self.candidates = {c: _masks(self.n, c) for c in set(colour.values())}

    def _frontier_order(self, edges: list[str]) -> list[str]:
        done: set = set()
        order = []
        while len(order) < len(edges):
            best = None
            for e in edges:
                if e in done:
                    continue
                touching = sum(
                    sum(x in done for x in set(self.triples[t])) for t in self.at[e])
                forced = any(
                    sum(x in done for x in self.triples[t] if x != e) == 2 for t in self.at[e])
                key = (not forced, -touching, math.comb(self.n, self.colour[e]))
                if best is None or key < best[0]:
                    best = (key, e)
            done.add(best[1])
            order.append(best[1])
        return order

    def _consistent(self, t: int, m: dict) -> bool:
        lone, a, b = self.triples[t]
        L, A, B = m.get(lone), m.get(a), m.get(b)
        if A is not None and B is not None and A & B:
            return False
        if L is not None:
            if A is not None and A & ~L:
                return False
            if B is not None and B & ~L:
                return False
        return True

    def _forced(self, e: str, m: dict) -> int | None:
        for t in self.at[e]:
            lone, a, b = self.triples[t]
            if e == lone and a in m and b in m:
                return m[a] | m[b]
            if e == a and lone in m and b in m:
                return m[lone] & ~m[b]
            if e == b and lone in m and a in m:
                return m[lone] & ~m[a]
        return None

    def _options(self, e: str, m: dict):
        f = self._forced(e, m)
        if f is not None:
            if f.bit_count() != self.colour[e]:
                return ()
            return (f,)
        return self.candidates[self.colour[e]]

    def _ok(self, e: str, m: dict) -> bool:
        return all(self._consistent(t, m) for t in self.at[e])

    def count(self) -> int:
        m: dict = {}
        order = self.order

        def go(k: int) -> int:
            if k == len(order):
                return 1
            e = order[k]
            total = 0
            for x in self._options(e, m):
                m[e] = x
                if self._ok(e, m):
                    total += go(k + 1)
            m.pop(e, None)
            return total

        return go(0)

    def iterate(self) -> Iterator[dict]:
        m: dict = {}
        order = self.order

        def go(k: int):
            if k == len(order):
                yield dict(m)
                return
            e = order[k]
            for x in self._options(e, m):
                m[e] = x
                if self._ok(e, m):
                    yield from go(k + 1)
            m.pop(e, None)

        yield from go(0)


def count_set_colourings(g: MoyGraph) -> int:
    """Exact number of set colourings of a closed graph."""
    total = 1
    for c in g.circles:
        total *= math.comb(g.n, c.colour)
    for comp in connected_components(MoyGraph(g.n, g.edges, (), g.vertices)):
        if not comp.edges:
            continue
        total *= _Search(comp).count()
        if total == 0:
            return 0
    return total


def iter_set_colourings(g: MoyGraph) -> Iterator[SetColouring]:
    """Every set colouring of ``g`` (product over components and circles)."""
    factors = []
    for c in g.circles:
        factors.append([{c.id: m} for m in _masks(g.n, c.colour)])
    for comp in connected_components(MoyGraph(g.n, g.edges, (), g.vertices)):
        if comp.edges:
            factors.append(_Search(comp).iterate())
    # later factors are re-iterated, so materialize all but the first
    factors = factors[:1] + [list(f) for f in factors[1:]]
    for parts in itertools.product(*factors):
        merged = {}
        for p in parts:
            merged.update(p)
        yield SetColouring(g.n, {k: _subset(v) for k, v in merged.items()})


def colouring_errors(g: MoyGraph, c: SetColouring) -> list[str]:
    """Why ``c`` is not a set colouring of ``g``; empty if it is one."""
    errors = []
    universe = frozenset(range(1, g.n + 1))
    colour = g.colour
    for key, col in colour.items():
        if key not in c.assignment:
            errors.append(f"{key}: unassigned")
            continue
        s = c[key]
        if not s <= universe:
            errors.append(f"{key}: {sorted(s)} not inside 1..{g.n}")
        if len(s) != col:
            errors.append(f"{key}: subset size {len(s)} != colour {col}")
    if errors:
        return errors
    for v in g.vertices:
        lone = v.lone_slot()
        a, b = (r[0] for r in v.rotated_from(lone)[1:])
        if c[a] & c[b] or c[a] | c[b] != c[lone[0]]:
            errors.append(
                f"{v.id}: {sorted(c[a])} and {sorted(c[b])} do not partition {sorted(c[lone[0]])}")
    return errors


def verify_moves_at_one(move: int, params, n: int, mirror: bool = False):
    """Check a move relation on set-colouring counts; ``None`` if it holds."""
    from .moves import Mismatch, make_move_fixture

    f = make_move_fixture(move, params, n, mirror=mirror)
    lhs = count_set_colourings(f.lhs)
    rhs = sum(eval_at_one(coef) * count_set_colourings(g) for coef, g in f.rhs)
    if lhs == rhs:
        return None
    return Mismatch(f.name, lhs, rhs)

