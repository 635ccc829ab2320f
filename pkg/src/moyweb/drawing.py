"""Build graphs from plane drawings so rotation systems come from geometry.

Edges are polylines between named points. The counterclockwise order at a
vertex is read off the direction of each edge's first segment, so a drawing
without crossings always yields a consistent planar rotation system.
Two-valent points (boundary markers, closure corners) are spliced away and
colour-0 edges are deleted when the graph is built.

:class:`Tangle` lays out upward-oriented webs layer by layer and closes them
with nested arcs on the right, the way a braid is closed.
"""

from __future__ import annotations

import math
from typing import Sequence

from .moygraph import HEAD, TAIL, GraphBuilder, MoyGraph

__all__ = ["PlanarDrawing", "Tangle", "ccw_slots"]


def ccw_slots(centre, arms) -> list:
    """Order ``(ref, point)`` pairs counterclockwise around ``centre``."""
    cx, cy = centre

    def angle(item):
        _, (x, y) = item
        if (x, y) == (cx, cy):
            raise ValueError(f"degenerate direction at {centre}")
        return math.atan2(y - cy, x - cx)

    ordered = sorted(arms, key=angle)
    angles = [round(angle(a), 12) for a in ordered]
    if len(set(angles)) != len(angles):
        raise ValueError(f"two edges leave {centre} in the same direction")
    return [ref for ref, _ in ordered]


class PlanarDrawing:
    def __init__(self, n: int):
        self.n = n
        self.points: dict[str, tuple[float, float]] = {}
        self.edges: list[tuple[str, int, str, str, tuple]] = []
        self.circles: list[tuple[str, int]] = []
        self._count = 0

    def point(self, name: str, x: float, y: float) -> str:
        if name in self.points:
            raise ValueError(f"duplicate point {name}")
        self.points[name] = (float(x), float(y))
        return name

    def edge(self, colour: int, tail: str, head: str, via: Sequence = (), id: str | None = None) -> str:
        if id is None:
            id = f"e{self._count}"
            self._count += 1
        self.edges.append((id, colour, tail, head, tuple(map(tuple, via))))
        return id

    def circle(self, colour: int, id: str | None = None) -> str:
        if id is None:
            id = f"c{self._count}"
            self._count += 1
        self.circles.append((id, colour))
        return id

    def mirrored(self) -> "PlanarDrawing":
        """Reflection in the vertical axis (reverses every rotation)."""
        d = PlanarDrawing(self.n)
        d.points = {k: (-x, y) for k, (x, y) in self.points.items()}
        d.edges = [(eid, c, t, h, tuple((-x, y) for x, y in via))
                   for eid, c, t, h, via in self.edges]
        d.circles = list(self.circles)
        d._count = self._count
        return d

    def polylines(self) -> dict:
        return {
            eid: [self.points[t], *via, self.points[h]]
            for eid, _, t, h, via in self.edges
        }

    def to_graph(self) -> MoyGraph:
        arms: dict[str, list] = {p: [] for p in self.points}
        for eid, _, t, h, via in self.edges:
            path = [self.points[t], *via, self.points[h]]
            arms[t].append(((eid, TAIL), path[1]))
            arms[h].append(((eid, HEAD), path[-2]))
        b = GraphBuilder(self.n)
        for eid, colour, *_ in self.edges:
            b.add_edge(colour, eid)
        for cid, colour in self.circles:
            b.add_circle(colour, cid)
        for name, refs in arms.items():
            if refs:
                b.add_vertex(ccw_slots(self.points[name], refs), name)
        return b.build()


class Tangle:
    """Upward web built by stacking splits and merges on a row of strands.

    >>> t = Tangle([2], n=3)
    >>> t.split(0, 1, 1); t.merge(0)
    >>> g = t.close()       # theta graph: a 2-edge and two 1-edges
    >>> sorted(e.colour for e in g.edges)
    [1, 1, 2]
    """

    def __init__(self, colours: Sequence[int], n: int):
        self.drawing = PlanarDrawing(n)
        self.bottom = list(colours)
        self.y = 1
        self.width = len(colours)
        # each open strand: [colour, tail point name, waypoints]
        self.strands = []
        for k, c in enumerate(colours):
            name = self.drawing.point(f"bot{k}", k, 0)
            self.strands.append([c, name, []])

    @property
    def colours(self) -> list[int]:
        return [s[0] for s in self.strands]

    def _layer(self):
        for k, s in enumerate(self.strands):
            s[2].append((k, self.y))

    def _finish(self, strand, head: str):
        colour, tail, via = strand
        self.drawing.edge(colour, tail, head, via)

    def split(self, pos: int, left: int, right: int) -> None:
        strand = self.strands[pos]
        if left + right != strand[0] or left < 0 or right < 0:
            raise ValueError(f"cannot split colour {strand[0]} into {left} + {right}")
        self._layer()
        v = self.drawing.point(f"s{len(self.drawing.points)}", pos, self.y + 0.5)
        self._finish(strand, v)
        self.strands[pos:pos + 1] = [[left, v, []], [right, v, []]]
        self.width = max(self.width, len(self.strands))
        self.y += 1

    def merge(self, pos: int) -> None:
        a, b = self.strands[pos], self.strands[pos + 1]
        if a[0] + b[0] > self.drawing.n:
            raise ValueError(f"merged colour {a[0] + b[0]} exceeds n={self.drawing.n}")
        self._layer()
        v = self.drawing.point(f"m{len(self.drawing.points)}", pos + 0.5, self.y + 0.5)
        self._finish(a, v)
        self._finish(b, v)
        self.strands[pos:pos + 2] = [[a[0] + b[0], v, []]]
        self.y += 1

    def close(self) -> MoyGraph:
        """Join top position ``k`` to bottom position ``k`` around the right."""
        if self.colours != self.bottom:
            raise ValueError(f"top colours {self.colours} differ from bottom {self.bottom}")
        d = self.drawing
        top = self.y
        p = len(self.strands)
        for k, s in enumerate(self.strands):
            name = d.point(f"top{k}", k, top)
            self._finish(s, name)
            off = p - k
            x_right = self.width + off
            via = [(k, top + off), (x_right, top + off), (x_right, -off), (k, -off)]
            d.edge(s[0], name, f"bot{k}", via)
        self.strands = []
        return d.to_graph()
