"""Coloured oriented trivalent graphs ("webs") and coloured link diagrams.

A :class:`MoyGraph` stores its planar embedding as a rotation system: each
vertex lists its three half-edges counterclockwise. A half-edge is written
``(edge_id, "t")`` for the end an edge leaves from and ``(edge_id, "h")`` for
the end it arrives at. Every vertex is either a *merge* (two heads, one
tail) or a *split* (two tails, one head), with the colour of the lone slot
equal to the sum of the other two.

Seen with the lone edge pointing up (merge) or coming from below (split),
the counterclockwise orders are::

    merge:  (out.t, left_in.h,  right_in.h)
    split:  (in.h,  right_out.t, left_out.t)

Planarity is trusted, not checked by :func:`validate`; :func:`genus` is
available as a diagnostic.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "TAIL",
    "HEAD",
    "Edge",
    "Circle",
    "Vertex",
    "MoyGraph",
    "GraphBuilder",
    "TopColourPattern",
    "Arc",
    "Crossing",
    "LinkDiagram",
    "ParseError",
    "ValidationError",
    "parse_moy",
    "render_moy",
    "parse_lnk",
    "render_lnk",
    "validate",
    "validate_link",
    "connected_components",
    "disjoint_union",
    "find_top_colour_pattern",
    "top_colour_patterns",
    "smooth_unit_and_zero",
    "with_n",
    "genus",
    "link_genus",
]

TAIL = "t"
HEAD = "h"

Ref = tuple  # (edge_id, TAIL | HEAD)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(ValueError):
    pass


def _least_rotation(slots: Sequence) -> tuple:
    slots = tuple(slots)
    return min(slots[i:] + slots[:i] for i in range(len(slots)))


@dataclass(frozen=True)
class Edge:
    id: str
    colour: int


@dataclass(frozen=True)
class Circle:
    id: str
    colour: int


@dataclass(frozen=True)
class Vertex:
    id: str
    slots: tuple

    def __post_init__(self):
        object.__setattr__(self, "slots", _least_rotation(tuple(map(tuple, self.slots))))

    @property
    def kind(self) -> str:
        heads = sum(1 for _, end in self.slots if end == HEAD)
        return {2: "merge", 1: "split"}.get(heads, "invalid")

    def rotated_from(self, ref: Ref) -> tuple:
        """Slots in counterclockwise order starting at ``ref``."""
        i = self.slots.index(tuple(ref))
        return self.slots[i:] + self.slots[:i]

    def lone_slot(self) -> Ref:
        """The slot whose direction differs from the other two."""
        ends = [end for _, end in self.slots]
        for ref in self.slots:
            if ends.count(ref[1]) == 1:
                return ref
        raise ValidationError(f"vertex {self.id} has no lone slot")


@dataclass(frozen=True)
class MoyGraph:
    n: int
    edges: tuple = ()
    circles: tuple = ()
    vertices: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=lambda e: e.id)))
        object.__setattr__(self, "circles", tuple(sorted(self.circles, key=lambda c: c.id)))
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices, key=lambda v: v.id)))

    @cached_property
    def colour(self) -> dict:
        """Colour of every edge and circle, keyed by id."""
        out = {e.id: e.colour for e in self.edges}
        out.update((c.id, c.colour) for c in self.circles)
        return out

    @cached_property
    def vertex_of(self) -> dict:
        """Map a half-edge ``(edge_id, end)`` to the id of its vertex."""
        return {ref: v.id for v in self.vertices for ref in v.slots}

    @cached_property
    def vertex_by_id(self) -> dict:
        return {v.id: v for v in self.vertices}

    def tail_vertex(self, edge_id: str) -> Vertex:
        return self.vertex_by_id[self.vertex_of[(edge_id, TAIL)]]

    def head_vertex(self, edge_id: str) -> Vertex:
        return self.vertex_by_id[self.vertex_of[(edge_id, HEAD)]]

    def max_colour(self) -> int:
        return max(self.colour.values(), default=0)

    def count_colour(self, c: int) -> int:
        return sum(1 for v in self.colour.values() if v == c)

    def is_empty(self) -> bool:
        return not (self.edges or self.circles or self.vertices)

    def __str__(self) -> str:
        return render_moy(self)


@dataclass(frozen=True)
class TopColourPattern:
    """An edge of maximal colour ``m`` and its four neighbours.

    ``left_in``/``right_in`` carry colours ``j`` and ``m - j`` into the merge
    vertex; ``left_out``/``right_out`` carry ``l`` and ``m - l`` out of the
    split vertex. Left and right are read with the m-edge pointing up.
    """

    edge: str
    m: int
    j: int
    l: int
    left_in: str
    right_in: str
    left_out: str
    right_out: str
    merge_vertex: str
    split_vertex: str


# ---------------------------------------------------------------------------
# mutable construction


class GraphBuilder:
    """Mutable scratch space for building and rewriting graphs.

    Unlike :class:`MoyGraph` it tolerates colour-0 edges and two-valent
    vertices; :meth:`smooth` removes both.
    """

    def __init__(self, n: int):
        self.n = n
        self.edges: dict[str, int] = {}
        self.circles: dict[str, int] = {}
        self.vertices: dict[str, list] = {}
        self._counter = itertools.count()

    @classmethod
    def from_graph(cls, g: MoyGraph) -> "GraphBuilder":
        b = cls(g.n)
        b.edges = {e.id: e.colour for e in g.edges}
        b.circles = {c.id: c.colour for c in g.circles}
        b.vertices = {v.id: list(v.slots) for v in g.vertices}
        return b

    def _fresh(self, prefix: str, taken) -> str:
        while True:
            name = f"{prefix}{next(self._counter)}"
            if name not in taken:
                return name

    def add_edge(self, colour: int, id: str | None = None) -> str:
        if id is None:
            id = self._fresh("e", self._ids())
        elif id in self.edges or id in self.circles:
            raise ValidationError(f"duplicate edge id {id}")
        self.edges[id] = colour
        return id

    def add_circle(self, colour: int, id: str | None = None) -> str:
        if id is None:
            id = self._fresh("c", self._ids())
        elif id in self.edges or id in self.circles:
            raise ValidationError(f"duplicate circle id {id}")
        self.circles[id] = colour
        return id

    def add_vertex(self, slots: Iterable, id: str | None = None) -> str:
        if id is None:
            id = self._fresh("v", self.vertices)
        elif id in self.vertices:
            raise ValidationError(f"duplicate vertex id {id}")
        self.vertices[id] = [tuple(s) for s in slots]
        return id

    def _ids(self):
        return self.edges.keys() | self.circles.keys()

    def remove_vertex(self, vid: str) -> list:
        return self.vertices.pop(vid)

    def remove_edge(self, eid: str) -> None:
        del self.edges[eid]

    def join(self, first: str, second: str) -> None:
        """Fuse ``second`` onto the head of ``first``.

        The head of ``first`` must already be detached from any vertex and
        the tail of ``second`` likewise; ``first`` takes over the head of
        ``second``. If they are the same edge it closes into a circle.
        """
        if first == second:
            colour = self.edges.pop(first)
            self.circles[first] = colour
            return
        for slots in self.vertices.values():
            for i, ref in enumerate(slots):
                if ref == (second, HEAD):
                    slots[i] = (first, HEAD)
        del self.edges[second]

    def smooth(self) -> None:
        """Delete colour-0 edges and splice out two-valent vertices."""
        for cid in [c for c, col in self.circles.items() if col == 0]:
            del self.circles[cid]
        zero = {e for e, col in self.edges.items() if col == 0}
        for e in zero:
            del self.edges[e]
        if zero:
            for vid, slots in list(self.vertices.items()):
                kept = [r for r in slots if r[0] not in zero]
                if kept:
                    self.vertices[vid] = kept
                else:
                    del self.vertices[vid]
        where = {ref: vid for vid, slots in self.vertices.items() for ref in slots}
        todo = [vid for vid, slots in self.vertices.items() if len(slots) < 3]
        while todo:
            vid = todo.pop()
            slots = self.vertices.get(vid)
            if slots is None or len(slots) == 3:
                continue
            if len(slots) != 2:
                raise ValidationError(f"vertex {vid} left with {len(slots)} slot(s)")
            ends = {end: e for e, end in slots}
            if set(ends) != {TAIL, HEAD}:
                raise ValidationError(f"vertex {vid} cannot be spliced: {slots}")
            a, b = ends[HEAD], ends[TAIL]
            if self.edges.get(a) != self.edges.get(b):
                raise ValidationError(
                    f"splicing {a} and {b} at {vid} would change colour")
            del self.vertices[vid]
            if a == b:
                self.circles[a] = self.edges.pop(a)
                continue
            w = where.pop((b, HEAD), None)
            if w is not None:
                ws = self.vertices[w]
                ws[ws.index((b, HEAD))] = (a, HEAD)
                where[(a, HEAD)] = w
            del self.edges[b]

    def build(self, check: bool = True) -> MoyGraph:
        self.smooth()
        g = MoyGraph(
            self.n,
            tuple(Edge(e, c) for e, c in self.edges.items()),
            tuple(Circle(c, col) for c, col in self.circles.items()),
            tuple(Vertex(v, s) for v, s in self.vertices.items()),
        )
        if check:
            validate(g)
        return g


def smooth_unit_and_zero(g: MoyGraph) -> MoyGraph:
    """Remove colour-0 edges, splicing the vertices they touched."""
    return GraphBuilder.from_graph(g).build()


# ---------------------------------------------------------------------------
# validation


def validate(g: MoyGraph) -> None:
    """Raise :class:`ValidationError` naming the first broken invariant."""
    if g.n < 1:
        raise ValidationError(f"n must be positive, got {g.n}")
    seen: set = set()
    for item in itertools.chain(g.edges, g.circles):
        if item.id in seen:
            raise ValidationError(f"duplicate edge/circle id {item.id}")
        seen.add(item.id)
        if not 1 <= item.colour <= g.n:
            raise ValidationError(
                f"edge {item.id} has colour {item.colour} outside 1..{g.n}")
    vids: set = set()
    edge_ids = {e.id for e in g.edges}
    circle_ids = {c.id for c in g.circles}
    used: dict = {}
    for v in g.vertices:
        if v.id in vids:
            raise ValidationError(f"duplicate vertex id {v.id}")
        vids.add(v.id)
        if len(v.slots) != 3:
            raise ValidationError(f"vertex {v.id} has {len(v.slots)} slots, need 3")
        for ref in v.slots:
            eid, end = ref
            if end not in (TAIL, HEAD):
                raise ValidationError(f"vertex {v.id}: bad end {end!r} for edge {eid}")
            if eid in circle_ids:
                raise ValidationError(f"vertex {v.id} references circle {eid}")
            if eid not in edge_ids:
                raise ValidationError(f"vertex {v.id} references unknown edge {eid}")
            if ref in used:
                what = "head" if end == HEAD else "tail"
                raise ValidationError(
                    f"edge {eid} used twice as {what} (vertices {used[ref]} and {v.id})")
            used[ref] = v.id
    for e in g.edges:
        for end, what in ((TAIL, "tail"), (HEAD, "head")):
            if (e.id, end) not in used:
                raise ValidationError(f"edge {e.id} has a dangling {what}")
        if used[(e.id, TAIL)] == used[(e.id, HEAD)]:
            raise ValidationError(f"edge {e.id} is a loop at vertex {used[(e.id, TAIL)]}")
    colour = {e.id: e.colour for e in g.edges}
    for v in g.vertices:
        kind = v.kind
        if kind == "invalid":
            raise ValidationError(
                f"vertex {v.id} needs exactly two slots of one direction: {v.slots}")
        lone = v.lone_slot()
        pair = [r for r in v.slots if r != lone]
        total = colour[pair[0][0]] + colour[pair[1][0]]
        if total != colour[lone[0]]:
            raise ValidationError(
                f"flow not conserved at vertex {v.id}: "
                f"{colour[pair[0][0]]} + {colour[pair[1][0]]} != {colour[lone[0]]}")


def with_n(g: MoyGraph, n: int) -> MoyGraph:
    """Same graph read at a different N (validated)."""
    out = MoyGraph(n, g.edges, g.circles, g.vertices)
    validate(out)
    return out


# ---------------------------------------------------------------------------
# structure


def connected_components(g: MoyGraph) -> list[MoyGraph]:
    parent = {v.id: v.id for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in g.edges:
        a, b = find(g.vertex_of[(e.id, TAIL)]), find(g.vertex_of[(e.id, HEAD)])
        if a != b:
            parent[a] = b
    groups: dict = {}
    for v in g.vertices:
        groups.setdefault(find(v.id), []).append(v)
    parts = []
    for verts in groups.values():
        eids = {ref[0] for v in verts for ref in v.slots}
        edges = tuple(e for e in g.edges if e.id in eids)
        parts.append(MoyGraph(g.n, edges, (), tuple(verts)))
    parts.extend(MoyGraph(g.n, (), (c,), ()) for c in g.circles)
    parts.sort(key=lambda p: min(x.id for x in itertools.chain(p.edges, p.circles)))
    return parts


def _genus(n_vertices: int, n_edges: int, n_components: int, nxt: dict, other) -> int:
    seen = set()
    faces = 0
    for d in nxt:
        if d in seen:
            continue
        faces += 1
        while d not in seen:
            seen.add(d)
            d = nxt[other(d)]
    chi = n_vertices - n_edges + faces
    return (2 * n_components - chi) // 2


def genus(g: MoyGraph) -> int:
    """Total genus of the surface the rotation system embeds in (0 = planar)."""
    nxt = {}
    for v in g.vertices:
        for k in range(3):
            nxt[v.slots[k]] = v.slots[(k + 1) % 3]
    comps = sum(1 for c in connected_components(g) if c.vertices)
    flip = lambda d: (d[0], HEAD if d[1] == TAIL else TAIL)
    return _genus(len(g.vertices), len(g.edges), comps, nxt, flip)


def disjoint_union(*graphs: MoyGraph, n: int | None = None) -> MoyGraph:
    """Union of graphs, renaming ids with a per-graph prefix when needed."""
    if n is None:
        n = max((g.n for g in graphs), default=1)
    if not graphs:
        return MoyGraph(n)
    edges, circles, verts = [], [], []
    for k, g in enumerate(graphs):
        p = f"g{k}_"
        edges += [Edge(p + e.id, e.colour) for e in g.edges]
        circles += [Circle(p + c.id, c.colour) for c in g.circles]
        verts += [Vertex(p + v.id, tuple((p + e, end) for e, end in v.slots))
                  for v in g.vertices]
    out = MoyGraph(n, tuple(edges), tuple(circles), tuple(verts))
    validate(out)
    return out


def top_colour_patterns(g: MoyGraph) -> list[TopColourPattern]:
    """Patterns around every edge of maximal colour ``m > 2``, by edge id."""
    m = g.max_colour()
    if m <= 2:
        return []
    if any(c.colour == m for c in g.circles):
        raise ValueError("remove circles of maximal colour before pattern search")
    out = []
    for e in sorted(x.id for x in g.edges if x.colour == m):
        merge = g.tail_vertex(e)
        split = g.head_vertex(e)
        _, (x, _), (y, _) = merge.rotated_from((e, TAIL))
        _, (u, _), (v, _) = split.rotated_from((e, HEAD))
        out.append(TopColourPattern(
            edge=e, m=m, j=g.colour[x], l=g.colour[v],
            left_in=x, right_in=y, left_out=v, right_out=u,
            merge_vertex=merge.id, split_vertex=split.id,
        ))
    return out


def find_top_colour_pattern(g: MoyGraph) -> TopColourPattern | None:
    """Locate an edge of maximal colour ``m > 2`` with its neighbours.

    Returns ``None`` when every colour is at most 2. A circle of colour
    ``m`` violates the precondition (remove circles first).
    """
    found = top_colour_patterns(g)
    return found[0] if found else None


# ---------------------------------------------------------------------------
# .moy text format

_TOKEN = re.compile(r"^[^\s#]+$")


def _lines(text):
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].split()
        if body:
            yield lineno, body


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {tok!r}", lineno) from None


def _parse_ref(tok: str, lineno: int) -> Ref:
    eid, dot, end = tok.rpartition(".")
    if not dot or not eid or end not in (TAIL, HEAD):
        raise ParseError(f"bad half-edge reference {tok!r} (want <edge>.t or <edge>.h)", lineno)
    return (eid, end)


def parse_moy(text) -> MoyGraph:
    """Parse the ``.moy`` line format and validate the result."""
    n = None
    edges, circles, verts = [], [], []
    for lineno, words in _lines(text):
        key, args = words[0], words[1:]
        if n is None and key != "n":
            raise ParseError("first line must be 'n <int>'", lineno)
        if key == "n":
            if n is not None:
                raise ParseError("'n' given twice", lineno)
            if len(args) != 1:
                raise ParseError("'n' takes one argument", lineno)
            n = _int(args[0], lineno, "n")
        elif key in ("edge", "circle"):
            if len(args) != 2:
                raise ParseError(f"'{key}' takes an id and a colour", lineno)
            colour = _int(args[1], lineno, "colour")
            (edges if key == "edge" else circles).append(
                (Edge if key == "edge" else Circle)(args[0], colour))
        elif key == "vertex":
            if len(args) != 4:
                raise ParseError("'vertex' takes an id and three references", lineno)
            verts.append(Vertex(args[0], tuple(_parse_ref(t, lineno) for t in args[1:])))
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno)
    if n is None:
        raise ParseError("missing 'n' line")
    g = MoyGraph(n, tuple(edges), tuple(circles), tuple(verts))
    validate(g)
    return g


def render_moy(g: MoyGraph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"circle {c.id} {c.colour}" for c in g.circles]
    lines += [f"edge {e.id} {e.colour}" for e in g.edges]
    lines += ["vertex {} {}".format(v.id, " ".join(f"{e}.{end}" for e, end in v.slots))
              for v in g.vertices]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# link diagrams


@dataclass(frozen=True)
class Arc:
    id: str
    colour: int


@dataclass(frozen=True)
class Crossing:
    """A crossing drawn with both strands pointing up.

    ``sw -> ne`` and ``se -> nw`` are the two strands; the arms are listed
    counterclockwise as ``sw, se, ne, nw``. ``sign`` is ``+1`` when the
    ``sw -> ne`` strand is over, ``-1`` when ``se -> nw`` is over, and
    ``None`` for a bare projection.
    """

    id: str
    sign: int | None
    sw: str
    se: str
    ne: str
    nw: str

    @classmethod
    def from_over_under(cls, id, sign, over_in, under_in, over_out, under_out):
        if sign > 0:
            return cls(id, 1, over_in, under_in, over_out, under_out)
        return cls(id, -1, under_in, over_in, under_out, over_out)

    @property
    def over_in(self):
        return self.sw if self.sign > 0 else self.se

    @property
    def under_in(self):
        return self.se if self.sign > 0 else self.sw

    @property
    def over_out(self):
        return self.ne if self.sign > 0 else self.nw

    @property
    def under_out(self):
        return self.nw if self.sign > 0 else self.ne


@dataclass(frozen=True)
class LinkDiagram:
    n: int
    arcs: tuple = ()
    crossings: tuple = ()
    loops: tuple = ()

    @cached_property
    def colour(self) -> dict:
        out = {a.id: a.colour for a in self.arcs}
        out.update((a.id, a.colour) for a in self.loops)
        return out

    def crossing(self, cid: str) -> Crossing:
        for c in self.crossings:
            if c.id == cid:
                return c
        raise KeyError(f"no crossing {cid!r}")


def validate_link(d: LinkDiagram) -> None:
    seen = set()
    for a in itertools.chain(d.arcs, d.loops):
        if a.id in seen:
            raise ValidationError(f"duplicate arc id {a.id}")
        seen.add(a.id)
        if not 1 <= a.colour <= d.n:
            raise ValidationError(f"arc {a.id} has colour {a.colour} outside 1..{d.n}")
    arc_ids = {a.id for a in d.arcs}
    ins: dict = {}
    outs: dict = {}
    xids = set()
    for c in d.crossings:
        if c.id in xids:
            raise ValidationError(f"duplicate crossing id {c.id}")
        xids.add(c.id)
        for arm, table in ((c.sw, ins), (c.se, ins), (c.ne, outs), (c.nw, outs)):
            if arm not in arc_ids:
                raise ValidationError(f"crossing {c.id} references unknown arc {arm}")
            if arm in table:
                raise ValidationError(f"arc {arm} enters/leaves more than one crossing arm")
            table[arm] = c.id
        if d.colour[c.sw] != d.colour[c.ne] or d.colour[c.se] != d.colour[c.nw]:
            raise ValidationError(f"crossing {c.id}: strand colour changes through crossing")
    for a in d.arcs:
        if a.id not in ins or a.id not in outs:
            raise ValidationError(f"arc {a.id} is not closed up (needs one in and one out)")


def link_genus(d: LinkDiagram) -> int:
    """Genus of the diagram's 4-valent projection (0 = a plane diagram)."""
    nxt = {}
    parent = {c.id: c.id for c in d.crossings}
    where = {}
    for c in d.crossings:
        ring = [(c.sw, HEAD), (c.se, HEAD), (c.ne, TAIL), (c.nw, TAIL)]
        for k in range(4):
            nxt[ring[k]] = ring[(k + 1) % 4]
            where[ring[k]] = c.id

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a in d.arcs:
        x, y = find(where[(a.id, TAIL)]), find(where[(a.id, HEAD)])
        if x != y:
            parent[x] = y
    free = [a for a in d.arcs if (a.id, TAIL) not in where]
    comps = len({find(c.id) for c in d.crossings})
    flip = lambda r: (r[0], HEAD if r[1] == TAIL else TAIL)
    return _genus(len(d.crossings), len(d.arcs) - len(free), comps, nxt, flip)


def parse_lnk(text) -> LinkDiagram:
    n = None
    arcs, loops, xings = [], [], []
    for lineno, words in _lines(text):
        key, args = words[0], words[1:]
        if n is None and key != "n":
            raise ParseError("first line must be 'n <int>'", lineno)
        if key == "n":
            if n is not None:
                raise ParseError("'n' given twice", lineno)
            if len(args) != 1:
                raise ParseError("'n' takes one argument", lineno)
            n = _int(args[0], lineno, "n")
        elif key in ("arc", "loop"):
            if len(args) != 2:
                raise ParseError(f"'{key}' takes an id and a colour", lineno)
            (arcs if key == "arc" else loops).append(Arc(args[0], _int(args[1], lineno, "colour")))
        elif key == "xing":
            if len(args) != 6 or args[1] not in ("+", "-"):
                raise ParseError("'xing' takes: id +|- over-in under-in over-out under-out", lineno)
            sign = 1 if args[1] == "+" else -1
            xings.append(Crossing.from_over_under(args[0], sign, *args[2:]))
        else:
            raise ParseError(f"unknown keyword {key!r}", lineno)
    if n is None:
        raise ParseError("missing 'n' line")
    d = LinkDiagram(n, tuple(arcs), tuple(xings), tuple(loops))
    validate_link(d)
    return d


def render_lnk(d: LinkDiagram) -> str:
    lines = [f"n {d.n}"]
    lines += [f"loop {a.id} {a.colour}" for a in d.loops]
    lines += [f"arc {a.id} {a.colour}" for a in d.arcs]
    for c in d.crossings:
        if c.sign is None:
            raise ValueError(f"crossing {c.id} has no sign; cannot render a projection")
        s = "+" if c.sign > 0 else "-"
        lines.append(f"xing {c.id} {s} {c.over_in} {c.under_in} {c.over_out} {c.under_out}")
    return "\n".join(lines) + "\n"
