"""Evaluation of the sl(N) MOY polynomial by local rewriting.

The evaluator reduces a closed web in the order used to show that the MOY
moves determine the polynomial:

1. factor over connected components and remove circles (``[N choose i]``);
2. while some colour ``m > 2`` remains, rewrite one ``m``-edge as a
   combination of two ladders with colours below ``m``;
3. for webs coloured in ``{1, 2}``, turn every 2-edge into a crossing,
   pick over/under so the diagram descends (hence is an unlink), expand the
   unlink's known value over all crossing resolutions and solve for the one
   resolution that is the original web.

Digons, bubbles and oriented squares may be collapsed on the way with the
corresponding moves; this only saves work.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .drawing import ccw_slots
from .moygraph import (
    HEAD,
    TAIL,
    Arc,
    Circle,
    Crossing,
    GraphBuilder,
    LinkDiagram,
    MoyGraph,
    TopColourPattern,
    Vertex,
    connected_components,
    find_top_colour_pattern,
    top_colour_patterns,
    validate_link,
)
from .qpoly import ONE, ZERO, LaurentPoly, RatQ, qbinom, qint

__all__ = [
    "NonIntegralResult",
    "GraphCombination",
    "Ladder",
    "Evaluator",
    "evaluate",
    "remove_circles",
    "reduce_top_colour",
    "choose_ladder",
    "evaluate_one_two",
    "projection",
    "choose_descending",
    "link_components",
    "resolve_crossing",
    "resolved_graph",
    "expand_link",
    "eval_link",
    "canonical_code",
    "simplify_digon",
    "simplify_bubble",
    "simplify_square",
    "SIMPLIFY_RULES",
]


class NonIntegralResult(ArithmeticError):
    """The rewrite produced a value that is not a Laurent polynomial."""


@dataclass(frozen=True)
class GraphCombination:
    """Formal sum of webs with rational-function coefficients."""

    terms: tuple  # of (RatQ, MoyGraph)

    def __post_init__(self):
        terms = tuple((c, g) for c, g in self.terms if not c.is_zero())
        if len({g.n for _, g in terms}) > 1:
            raise ValueError("all graphs in a combination must share n")
        object.__setattr__(self, "terms", terms)

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)


# ---------------------------------------------------------------------------
# circles and digons


def remove_circles(g: MoyGraph) -> tuple[LaurentPoly, MoyGraph]:
    factor = ONE
    for c in g.circles:
        factor = factor * qbinom(g.n, c.colour)
    return factor, MoyGraph(g.n, g.edges, (), g.vertices)


def simplify_digon(g: MoyGraph) -> list | None:
    """Collapse one digon: a split whose outputs remerge, factor ``[i choose j]``."""
    for v in g.vertices:
        if v.kind != "split":
            continue
        w = v.lone_slot()[0]
        _, (a, _), (b, _) = v.rotated_from((w, HEAD))
        q_id = g.vertex_of[(a, HEAD)]
        if q_id != g.vertex_of[(b, HEAD)]:
            continue
        qv = g.vertex_by_id[q_id]
        z = qv.lone_slot()[0]
        if qv.rotated_from((z, TAIL)) != ((z, TAIL), (b, HEAD), (a, HEAD)):
            continue
        bld = GraphBuilder.from_graph(g)
        bld.remove_vertex(v.id)
        bld.remove_vertex(q_id)
        bld.remove_edge(a)
        bld.remove_edge(b)
        bld.join(w, z)
        return [(qbinom(g.colour[w], g.colour[a]), bld.build(check=False))]
    return None


def simplify_bubble(g: MoyGraph) -> list | None:
    """Remove one bubble: a ``j`` loop off an ``i`` strand, factor ``[N-i choose j]``."""
    for v in g.vertices:
        if v.kind != "merge":
            continue
        f = v.lone_slot()[0]
        s_id = g.vertex_of[(f, HEAD)]
        sv = g.vertex_by_id[s_id]
        _, (x, _), (y, _) = v.rotated_from((f, TAIL))
        _, (u, _), (w, _) = sv.rotated_from((f, HEAD))
        if y == u:  # loop on the right
            loop, main_in, main_out = y, x, w
        elif x == w:  # loop on the left
            loop, main_in, main_out = x, y, u
        else:
            continue
        bld = GraphBuilder.from_graph(g)
        bld.remove_vertex(v.id)
        bld.remove_vertex(s_id)
        bld.remove_edge(f)
        bld.remove_edge(loop)
        bld.join(main_in, main_out)
        return [(qbinom(g.n - g.colour[main_in], g.colour[loop]), bld.build(check=False))]
    return None


def _find_square(g: MoyGraph):
    """An oriented square face with sides ``i+1, 1, i+1, i`` (in cycle order).

    Returns the four vertices, the four square edges, the external edges at
    each corner and whether the cycle runs counterclockwise around the face.
    """
    colour = g.colour
    for v1 in g.vertices:
        if v1.kind != "merge":
            continue
        e12 = v1.lone_slot()[0]
        v2 = g.head_vertex(e12)
        if v2.kind != "split" or v2.id == v1.id:
            continue
        for e23 in (r[0] for r in v2.slots if r[1] == TAIL):
            v3 = g.head_vertex(e23)
            if v3.kind != "merge" or colour[e23] != 1:
                continue
            e34 = v3.lone_slot()[0]
            v4 = g.head_vertex(e34)
            if v4.kind != "split":
                continue
            i = colour[e12] - 1
            if colour[e34] != i + 1 or i < 1:
                continue
            for e41 in (r[0] for r in v4.slots if r[1] == TAIL):
                if g.vertex_of[(e41, HEAD)] != v1.id or colour[e41] != i:
                    continue
                if len({v1.id, v2.id, v3.id, v4.id}) != 4:
                    continue
                corners = ((v1, e12, e41), (v2, e23, e12), (v3, e34, e23), (v4, e41, e34))
                exts = []
                for v, nxt, prv in corners:
                    exts.append(next(r for r in v.slots if r[0] not in (nxt, prv)))
                if any(r[0] in (e12, e23, e34, e41) for r in exts):
                    continue
                rots = [v.rotated_from((nxt, TAIL)) for v, nxt, _ in corners]
                ccw = all(r == ((nxt, TAIL), (prv, HEAD), x)
                          for r, (_, nxt, prv), x in zip(rots, corners, exts))
                cw = all(r == ((nxt, TAIL), x, (prv, HEAD))
                         for r, (_, nxt, prv), x in zip(rots, corners, exts))
                if ccw or cw:
                    return i, (v1, v2, v3, v4), (e12, e23, e34, e41), exts, ccw
    return None


def simplify_square(g: MoyGraph) -> list | None:
    """Remove one oriented square (sides ``1`` and ``i``, rungs ``i+1``).

    The square equals ``[N-i-1]`` times the web where the two corners on
    each rung are fused through an ``i-1`` edge, plus the web where the two
    strands pass straight by.
    """
    found = _find_square(g)
    if found is None:
        return None
    i, verts, square, exts, ccw = found
    (x1, _), (x2, _), (x3, _), (x4, _) = exts

    def stripped():
        bld = GraphBuilder.from_graph(g)
        for v in verts:
            bld.remove_vertex(v.id)
        for e in square:
            bld.remove_edge(e)
        return bld

    # strands pass by: 1 from corner 1 to corner 4, i from corner 3 to corner 2
    bld = stripped()
    alias: dict = {}
    for first, second in ((x1, x4), (x3, x2)):
        while first in alias:
            first = alias[first]
        bld.join(first, second)
        if first != second:
            alias[second] = first
    straight = bld.build(check=False)
    # corners fused: B takes (1 in, i out), T takes (i in, 1 out)
    bld = stripped()
    inner = bld.add_edge(i - 1)
    b_slots = [(x1, HEAD), (x2, TAIL), (inner, HEAD)]
    t_slots = [(x3, HEAD), (x4, TAIL), (inner, TAIL)]
    if not ccw:
        b_slots.reverse()
        t_slots.reverse()
    bld.add_vertex(b_slots)
    bld.add_vertex(t_slots)
    fused = bld.build(check=False)
    return [(qint(g.n - i - 1), fused), (ONE, straight)]


SIMPLIFY_RULES = {
    "digon": simplify_digon,
    "bubble": simplify_bubble,
    "square": simplify_square,
}


# ---------------------------------------------------------------------------
# ladder rewrite for the top colour


def _place(b: GraphBuilder, pos: dict, internal: Iterable, external: Iterable) -> None:
    """Add vertices at ``pos`` wired by ``internal`` edges.

    ``internal`` holds ``(colour, tail_name, head_name)``; ``external`` holds
    ``(name, ref, toward_point)`` for existing half-edges that attach to the
    new vertices. Rotations are read from the positions.
    """
    arms = {name: [] for name in pos}
    for colour, t, h in internal:
        e = b.add_edge(colour)
        arms[t].append(((e, TAIL), pos[h]))
        arms[h].append(((e, HEAD), pos[t]))
    for name, ref, point in external:
        arms[name].append((ref, point))
    for name, refs in arms.items():
        b.add_vertex(ccw_slots(pos[name], refs))


def _ladder_graph(g: MoyGraph, p: TopColourPattern, square: bool, mirror: bool) -> MoyGraph:
    # "thin" is the rail that drops to colour 1; it is the left rail unless
    # the picture is mirrored
    m = p.m
    if mirror:
        j, l = m - p.j, m - p.l
        thin_in, thick_in, thin_out, thick_out = p.right_in, p.left_in, p.right_out, p.left_out
    else:
        j, l = p.j, p.l
        thin_in, thick_in, thin_out, thick_out = p.left_in, p.right_in, p.left_out, p.right_out
    xt, xk = (1, 0) if mirror else (0, 1)
    b = GraphBuilder.from_graph(g)
    b.remove_vertex(p.merge_vertex)
    b.remove_vertex(p.split_vertex)
    b.remove_edge(p.edge)
    if square:
        # thin rail 1,2,1 and thick rail m-1,m-2,m-1 between the outer rungs
        pos = {"TB": (xt, 0), "KB": (xk, .5), "K2": (xk, 1), "T2": (xt, 1.5),
               "T3": (xt, 2), "K3": (xk, 2.5), "KT": (xk, 3), "TT": (xt, 3.5)}
        internal = [
            (j - 1, "TB", "KB"),
            (1, "TB", "T2"), (m - 1, "KB", "K2"),
            (1, "K2", "T2"),
            (2, "T2", "T3"), (m - 2, "K2", "K3"),
            (1, "T3", "K3"),
            (1, "T3", "TT"), (m - 1, "K3", "KT"),
            (l - 1, "KT", "TT"),
        ]
        top = 4
    else:
        pos = {"TB": (xt, 0), "KB": (xk, .5), "KT": (xk, 1), "TT": (xt, 1.5)}
        internal = [
            (j - 1, "TB", "KB"),
            (1, "TB", "TT"), (m - 1, "KB", "KT"),
            (l - 1, "KT", "TT"),
        ]
        top = 2
    external = [
        ("TB", (thin_in, HEAD), (xt, -1)),
        ("KB", (thick_in, HEAD), (xk, -1)),
        ("KT", (thick_out, TAIL), (xk, top)),
        ("TT", (thin_out, TAIL), (xt, top)),
    ]
    _place(b, pos, internal, external)
    return b.build()


def reduce_top_colour(g: MoyGraph, pattern: TopColourPattern,
                      mirror: bool = False) -> GraphCombination:
    """Rewrite one maximal-colour edge as ``(A - [m-2] B) / ([j][l])``.

    ``A`` is the four-rung ladder (left rail ``j,1,2,1,l``, right rail
    ``m-j,m-1,m-2,m-1,m-l``) and ``B`` the two-rung ladder (rails ``j,1,l``
    and ``m-j,m-1,m-l``). The coefficient of ``B`` is what the square move
    gives for the middle square with rails ``1,2,1`` and ``m-1,m-2,m-1``.

    With ``mirror=True`` the reflected identity is used: the right rail
    thins to 1 and ``j, l`` are replaced by ``m-j, m-l``.
    """
    m = pattern.m
    if m <= 2 or not (0 < pattern.j < m and 0 < pattern.l < m):
        raise ValueError(f"not a top-colour pattern: {pattern}")
    if g.colour.get(pattern.edge) != m:
        raise ValueError(f"edge {pattern.edge} does not have colour {m}")
    j, l = (m - pattern.j, m - pattern.l) if mirror else (pattern.j, pattern.l)
    den = qint(j) * qint(l)
    a = _ladder_graph(g, pattern, square=True, mirror=mirror)
    b = _ladder_graph(g, pattern, square=False, mirror=mirror)
    return GraphCombination((
        (RatQ(ONE, den), a),
        (RatQ(-qint(m - 2), den), b),
    ))


def choose_ladder(g: MoyGraph) -> tuple[TopColourPattern, bool] | None:
    """The top-colour pattern and side whose ladder has the lightest rungs."""
    best = None
    for p in top_colour_patterns(g):
        for mirror in (False, True):
            j, l = (p.m - p.j, p.m - p.l) if mirror else (p.j, p.l)
            if best is None or j + l < best[0]:
                best = (j + l, p, mirror)
    return None if best is None else best[1:]


# ---------------------------------------------------------------------------
# crossings and link diagrams


@dataclass(frozen=True)
class Ladder:
    """A two-rung MOY ladder replacing one crossing.

    Rails run upward from ``sw`` to ``nw`` (left) and ``se`` to ``ne``
    (right). ``bottom`` and ``top`` are rung colours; ``bottom_leftward`` /
    ``top_leftward`` say whether the rung flows right to left.
    """

    left_mid: int
    right_mid: int
    bottom: int
    bottom_leftward: bool
    top: int
    top_leftward: bool

    def colours(self):
        return (self.left_mid, self.right_mid, self.bottom, self.top)


def resolve_crossing(d: LinkDiagram, crossing_id: str) -> list[tuple[LaurentPoly, Ladder]]:
    """Expand a coloured crossing as a signed sum of ladders.

    With ``j`` the colour of the ``sw -> ne`` strand and ``i`` that of the
    ``se -> nw`` strand, a positive crossing is::

        i <= j:  sum_k (-1)^(k + (j+1) i) q^(i-k)  [mid j+k | i-k, rungs k <-, j+k-i ->]
        i >  j:  sum_k (-1)^(k + (i+1) j) q^(j-k)  [mid j-k | i+k, rungs k ->, i+k-j <-]

    and a negative crossing is the same with ``q`` inverted. Terms that
    would need a colour below 0 or above N are zero and left out.
    """
    c = d.crossing(crossing_id)
    if c.sign is None:
        raise ValueError(f"crossing {crossing_id} has no sign")
    j, i = d.colour[c.sw], d.colour[c.se]
    out = []
    for k in range(min(i, j) + 1):
        if i <= j:
            sign = (-1) ** (k + (j + 1) * i)
            power = i - k
            ladder = Ladder(j + k, i - k, k, True, j + k - i, False)
        else:
            sign = (-1) ** (k + (i + 1) * j)
            power = j - k
            ladder = Ladder(j - k, i + k, k, False, i + k - j, True)
        if any(x < 0 or x > d.n for x in ladder.colours()):
            continue
        out.append((LaurentPoly.monomial(c.sign * power, sign), ladder))
    return out


def resolved_graph(d: LinkDiagram, ladders: dict) -> MoyGraph:
    """The web obtained by replacing each crossing with its chosen ladder."""
    b = GraphBuilder(d.n)
    for a in d.arcs:
        b.add_edge(a.colour, a.id)
    for a in d.loops:
        b.add_circle(a.colour, a.id)
    for c in d.crossings:
        lad = ladders[c.id]
        low, high = -0.66, -0.33
        pos = {
            "LB": (0, high if lad.bottom_leftward else low),
            "RB": (2, low if lad.bottom_leftward else high),
            "LT": (0, -low if lad.top_leftward else -high),
            "RT": (2, -high if lad.top_leftward else -low),
        }
        bottom = ("RB", "LB") if lad.bottom_leftward else ("LB", "RB")
        top = ("RT", "LT") if lad.top_leftward else ("LT", "RT")
        internal = [
            (lad.left_mid, "LB", "LT"),
            (lad.right_mid, "RB", "RT"),
            (lad.bottom, *bottom),
            (lad.top, *top),
        ]
        external = [
            ("LB", (c.sw, HEAD), (0, -1)),
            ("RB", (c.se, HEAD), (2, -1)),
            ("RT", (c.ne, TAIL), (2, 1)),
            ("LT", (c.nw, TAIL), (0, 1)),
        ]
        _place(b, pos, internal, external)
    return b.build()


def expand_link(d: LinkDiagram) -> GraphCombination:
    """Resolve every crossing; the framed invariant is the evaluated sum."""
    validate_link(d)
    per = [[(coef, (c.id, lad)) for coef, lad in resolve_crossing(d, c.id)]
           for c in d.crossings]
    terms = []
    for combo in itertools.product(*per):
        coef = ONE
        for cf, _ in combo:
            coef = coef * cf
        terms.append((RatQ(coef), resolved_graph(d, dict(x for _, x in combo))))
    return GraphCombination(tuple(terms))


def projection(g: MoyGraph) -> LinkDiagram:
    """Replace each 2-edge of a {1, 2}-web by an unsigned crossing."""
    if g.max_colour() > 2:
        raise ValueError("projection needs a web coloured in {1, 2}")
    xings = []
    for e in g.edges:
        if e.colour != 2:
            continue
        _, (a, _), (b, _) = g.tail_vertex(e.id).rotated_from((e.id, TAIL))
        _, (c, _), (d, _) = g.head_vertex(e.id).rotated_from((e.id, HEAD))
        xings.append(Crossing(e.id, None, sw=a, se=b, ne=c, nw=d))
    arcs = tuple(Arc(e.id, 1) for e in g.edges if e.colour == 1)
    loops = tuple(Arc(c.id, c.colour) for c in g.circles)
    return LinkDiagram(g.n, arcs, tuple(xings), loops)


def _strand_walk(d: LinkDiagram):
    into = {}
    for c in d.crossings:
        into[c.sw] = (c, c.ne)
        into[c.se] = (c, c.nw)
    return into


def link_components(d: LinkDiagram) -> list[list[str]]:
    """Arc sequences of the components, each from its smallest arc id."""
    into = _strand_walk(d)
    seen = set()
    comps = []
    for a in sorted(x.id for x in d.arcs):
        if a in seen:
            continue
        comp = []
        cur = a
        while cur not in seen:
            seen.add(cur)
            comp.append(cur)
            cur = into[cur][1]
        comps.append(comp)
    comps.extend([x.id] for x in sorted(d.loops, key=lambda x: x.id))
    return comps


def choose_descending(d: LinkDiagram) -> LinkDiagram:
    """Sign each crossing so the diagram descends, hence is an unlink.

    Components are taken in order of their smallest arc id and walked from
    that arc; the strand that reaches a crossing first goes over.
    """
    into = _strand_walk(d)
    sign = {}
    for comp in link_components(d):
        for a in comp:
            if a not in into:
                continue
            c, _ = into[a]
            if c.id not in sign:
                sign[c.id] = 1 if a == c.sw else -1
    xings = tuple(Crossing(c.id, sign[c.id], c.sw, c.se, c.ne, c.nw) for c in d.crossings)
    return LinkDiagram(d.n, d.arcs, xings, d.loops)


# ---------------------------------------------------------------------------
# canonical form (memo key)


def _dart_classes(g: MoyGraph, nxt: dict) -> dict:
    colour = g.colour
    classes: dict = {}
    for d in nxt:
        a = nxt[d]
        b = nxt[a]
        key = (colour[d[0]], d[1], colour[a[0]], a[1], colour[b[0]], b[1])
        classes.setdefault(key, []).append(d)
    return classes


def canonical_code(g: MoyGraph) -> tuple:
    """Relabelling-invariant code of a connected circle-free web.

    Darts are numbered in breadth-first order from a starting dart, moving
    by "next counterclockwise at the vertex" and "other end of the edge";
    the smallest code over the starting darts of the rarest local type is
    canonical for the oriented planar map.
    """
    if not g.vertices:
        raise ValueError("canonical_code needs a web with at least one vertex")
    nxt = {}
    for v in g.vertices:
        s = v.slots
        nxt[s[0]], nxt[s[1]], nxt[s[2]] = s[1], s[2], s[0]
    colour = g.colour
    classes = _dart_classes(g, nxt)
    key, starts = min(classes.items(), key=lambda kv: (len(kv[1]), kv[0]))
    best = None
    for start in starts:
        label = {start: 0}
        order = [start]
        code = []
        for d in order:
            other = (d[0], HEAD if d[1] == TAIL else TAIL)
            for x in (nxt[d], other):
                if x not in label:
                    label[x] = len(order)
                    order.append(x)
            code.append((label[nxt[d]], label[other], colour[d[0]]))
        code = tuple(code)
        if best is None or code < best:
            best = code
    return (key, best)


def _parallel_resolution(g: MoyGraph, arms: dict, chosen) -> MoyGraph:
    """Replace each chosen 2-edge by two parallel 1-strands.

    ``arms[e] = (sw, se, ne, nw)`` are the 1-edges around the 2-edge ``e``;
    the left strand runs ``sw -> nw`` and the right one ``se -> ne``.
    """
    if not chosen:
        return g
    dropped = set()
    cont = {}
    for e in chosen:
        sw, se, ne, nw = arms[e]
        cont[sw] = nw
        cont[se] = ne
        dropped.add(g.vertex_of[(e, TAIL)])
        dropped.add(g.vertex_of[(e, HEAD)])
    continued = set(cont.values())
    root = {}
    edges = []
    circles = list(g.circles)
    for e in g.edges:
        if e.id in chosen or e.id in continued:
            continue
        root[e.id] = e.id
        x = e.id
        while x in cont:
            x = cont[x]
            root[x] = e.id
        edges.append(e)
    for e in g.edges:
        if e.id in continued and e.id not in root:
            # a closed strand: every edge on it continues another
            x = e.id
            while x not in root:
                root[x] = e.id
                x = cont[x]
            circles.append(Circle(e.id, e.colour))
    vertices = []
    for v in g.vertices:
        if v.id in dropped:
            continue
        vertices.append(Vertex(v.id, tuple(
            (root[r[0]], HEAD) if r[1] == HEAD else r for r in v.slots)))
    return MoyGraph(g.n, tuple(edges), tuple(circles), tuple(vertices))


# ---------------------------------------------------------------------------
# evaluator


class Evaluator:
    """Exact MOY evaluator with an optional memo keyed on canonical form.

    ``simplify`` selects which of the local rules in ``SIMPLIFY_RULES``
    (``"digon"``, ``"bubble"``, ``"square"``) are applied before the
    ladder rewrite: ``True`` for all, ``False`` for none, or a collection
    of names. With none, only circle removal, the ladder rewrite and the
    unlink expansion are used.

    ``pick_ladder`` lets the evaluator choose which maximal-colour edge to
    rewrite and on which side to thin the ladder (lightest rungs first);
    otherwise the first pattern is rewritten unmirrored.
    """

    def __init__(self, simplify=True, memo: bool = True, pick_ladder: bool = True):
        if simplify is True:
            simplify = SIMPLIFY_RULES
        elif simplify is False or simplify is None:
            simplify = ()
        unknown = set(simplify) - set(SIMPLIFY_RULES)
        if unknown:
            raise ValueError(f"unknown simplification rules {sorted(unknown)}")
        self.rules = tuple(r for r in SIMPLIFY_RULES if r in set(simplify))
        self.pick_ladder = pick_ladder
        self.cache: dict | None = {} if memo else None
        self.stats: Counter = Counter()

    def evaluate(self, g: MoyGraph) -> LaurentPoly:
        value = ONE
        for comp in connected_components(g):
            value = value * self._connected(comp)
            if value.is_zero():
                break
        return value

    def evaluate_combination(self, comb: GraphCombination) -> RatQ:
        total = RatQ(ZERO)
        for coef, g in comb:
            total = total + coef.scale(self.evaluate(g))
        return total

    def _connected(self, g: MoyGraph) -> LaurentPoly:
        if g.circles:
            factor, _ = remove_circles(g)
            return factor
        if self.cache is None:
            return self._reduce(g)
        key = (g.n, canonical_code(g))
        hit = self.cache.get(key)
        if hit is None:
            hit = self.cache[key] = self._reduce(g)
        else:
            self.stats["memo_hits"] += 1
        return hit

    def _reduce(self, g: MoyGraph) -> LaurentPoly:
        for rule in self.rules:
            step = SIMPLIFY_RULES[rule](g)
            if step is not None:
                self.stats[rule] += 1
                value = ZERO
                for factor, rest in step:
                    value = value + factor * self.evaluate(rest)
                return value
        choice = choose_ladder(g) if self.pick_ladder else (find_top_colour_pattern(g), False)
        if choice is not None and choice[0] is not None:
            pattern, mirror = choice
            self.stats["ladder"] += 1
            value = self.evaluate_combination(reduce_top_colour(g, pattern, mirror))
            if not value.is_integral:
                raise NonIntegralResult(f"ladder rewrite left {value} on\n{g}")
            return value.num
        return self.evaluate_one_two(g)

    def evaluate_one_two(self, g: MoyGraph) -> LaurentPoly:
        """Value of a web coloured in {1, 2} via a descending unlink diagram.

        The unlink ``U`` has value ``q^(N w) [N]^d`` (``w`` its writhe, ``d``
        its number of components). Expanding each crossing as
        ``q^(±1) parallel - wide`` writes that value as ``(-1)^n`` times the
        web plus webs with fewer 2-edges, which are evaluated recursively.
        """
        if g.max_colour() > 2:
            raise ValueError("evaluate_one_two needs colours in {1, 2}")
        factor, g = remove_circles(g)
        if not g.edges:
            return factor
        self.stats["unlink"] += 1
        d = choose_descending(projection(g))
        n_x = len(d.crossings)
        writhe = sum(c.sign for c in d.crossings)
        unlink = qint(g.n) ** len(link_components(d)) * LaurentPoly.monomial(g.n * writhe)
        arms = {c.id: (c.sw, c.se, c.ne, c.nw) for c in d.crossings}
        # positive crossing = q * parallel - wide, negative uses q^-1
        rest = ZERO
        for size in range(1, n_x + 1):
            for chosen in itertools.combinations(d.crossings, size):
                shift = sum(c.sign for c in chosen)
                sign = -1 if (n_x - size) % 2 else 1
                value = self.evaluate(_parallel_resolution(g, arms, {c.id for c in chosen}))
                rest = rest + value.shift(shift) * sign
        value = unlink - rest
        if n_x % 2:
            value = -value
        return factor * value


_DEFAULT = Evaluator()


def evaluate(g: MoyGraph, evaluator: Evaluator | None = None) -> LaurentPoly:
    """The MOY polynomial of a closed web."""
    return (evaluator or _DEFAULT).evaluate(g)


def evaluate_one_two(g: MoyGraph, evaluator: Evaluator | None = None) -> LaurentPoly:
    return (evaluator or _DEFAULT).evaluate_one_two(g)


def eval_link(d: LinkDiagram, evaluator: Evaluator | None = None) -> LaurentPoly:
    """Framed coloured invariant of a link diagram (no framing correction)."""
    value = (evaluator or _DEFAULT).evaluate_combination(expand_link(d))
    if not value.is_integral:
        raise NonIntegralResult(f"link expansion left {value}")
    return value.num
