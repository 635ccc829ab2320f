"""Closed-graph fixtures for the six MOY moves, and a fixture corpus.

Each fixture closes the boundary strands of a move's left-hand pattern so
that both sides become closed webs which can be evaluated and compared::

    >>> f = make_move_fixture(1, (1, 1), n=3)
    >>> check_move(f) is None
    True
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace

from .drawing import PlanarDrawing, Tangle
from .moyeval import SIMPLIFY_RULES, Evaluator, evaluate
from .moygraph import MoyGraph, disjoint_union
from .qpoly import ONE, LaurentPoly, qbinom, qint

__all__ = [
    "MoveFixture",
    "Mismatch",
    "PARAM_NAMES",
    "make_move_fixture",
    "move_params",
    "all_fixtures",
    "check_move",
    "check_moves",
    "move_evaluator",
    "corrupt",
    "random_web",
    "web_corpus",
]

PARAM_NAMES = {0: "i", 1: "ij", 2: "ij", 3: "ijk", 4: "i", 5: "ijk"}


@dataclass(frozen=True)
class MoveFixture:
    move: int
    params: tuple
    n: int
    lhs: MoyGraph
    rhs: tuple  # of (LaurentPoly, MoyGraph)
    mirror: bool = False
    drawings: tuple = field(default=(), repr=False, compare=False)

    @property
    def name(self) -> str:
        ps = ",".join(f"{k}={v}" for k, v in zip(PARAM_NAMES[self.move], self.params))
        tag = "; mirror" if self.mirror else ""
        return f"move{self.move}({ps}; n={self.n}{tag})"


@dataclass(frozen=True)
class Mismatch:
    fixture: str
    lhs: object
    rhs: object

    def __str__(self):
        return f"MISMATCH {self.fixture}: lhs={self.lhs} rhs={self.rhs}"


def _in_range(move: int, p: tuple, n: int) -> bool:
    if any(x < 0 for x in p) or n < 1:
        return False
    if move == 0:
        (i,) = p
        return 1 <= i <= n
    if move == 1:
        i, j = p
        return i >= 1 and j >= 1 and i + j <= n
    if move == 2:
        i, j = p
        return 1 <= j <= i <= n
    if move == 3:
        i, j, k = p
        return min(i, j, k) >= 1 and i + j + k <= n
    if move == 4:
        (i,) = p
        return i >= 1 and i + 1 <= n
    if move == 5:
        i, j, k = p
        return i >= 1 and 1 <= k < j and i + j <= n
    raise ValueError(f"unknown move {move}")


def move_params(move: int, n: int) -> list[tuple]:
    """All in-range parameter tuples for ``move`` at this ``n``."""
    r = range(0, n + 1)
    width = len(PARAM_NAMES[move])
    out = []
    for p in _product(r, width):
        if _in_range(move, p, n):
            out.append(p)
    return out


def _product(r, width):
    if width == 0:
        yield ()
        return
    for x in r:
        for rest in _product(r, width - 1):
            yield (x, *rest)


def _circles(n: int, *colours: int) -> PlanarDrawing:
    d = PlanarDrawing(n)
    for c in colours:
        d.circle(c)
    return d


def _tangle(n: int, colours, ops) -> PlanarDrawing:
    t = Tangle(colours, n)
    for op, *args in ops:
        getattr(t, op)(*args)
    t.close()
    return t.drawing


def _move4_lhs(i: int, n: int) -> PlanarDrawing:
    d = PlanarDrawing(n)
    for name, x, y in (("P", 0, 0), ("Q", 2, 0), ("S", 2, 2), ("R", 0, 2)):
        d.point(name, x, y)
    d.edge(i + 1, "P", "Q")
    d.edge(1, "Q", "S")
    d.edge(i + 1, "S", "R")
    d.edge(i, "R", "P")
    d.edge(1, "R", "P", via=[(0, 3), (-1, 3), (-1, -1), (0, -1)])
    d.edge(i, "Q", "S", via=[(2, -1), (3, -1), (3, 3), (2, 3)])
    return d


def _move4_ladder(i: int, n: int) -> PlanarDrawing:
    d = PlanarDrawing(n)
    d.point("B", 1, 0)
    d.point("T", 1, 2)
    d.edge(i - 1, "T", "B")
    d.edge(1, "T", "B", via=[(0, 3), (-1, 3), (-1, -1), (0, -1)])
    d.edge(i, "B", "T", via=[(2, -1), (3, -1), (3, 3), (2, 3)])
    return d


def _drawings(move: int, p: tuple, n: int):
    """Left side and (coefficient, right side) drawings of a move."""
    if move == 0:
        (i,) = p
        return _circles(n, i), [(qbinom(n, i), _circles(n))]
    if move == 1:
        i, j = p
        lhs = _tangle(n, [i, j], [("merge", 0), ("split", 0, i, j)])
        return lhs, [(qbinom(n - i, j), _tangle(n, [i], []))]
    if move == 2:
        i, j = p
        lhs = _tangle(n, [i], [("split", 0, i - j, j), ("merge", 0)])
        return lhs, [(qbinom(i, j), _tangle(n, [i], []))]
    if move == 3:
        i, j, k = p
        cap = [("merge", 0), ("merge", 0)]
        lhs = _tangle(n, [i + j + k], [("split", 0, i + j, k), ("split", 0, i, j), *cap])
        rhs = _tangle(n, [i + j + k], [("split", 0, i, j + k), ("split", 1, j, k), *cap])
        return lhs, [(ONE, rhs)]
    if move == 4:
        (i,) = p
        return _move4_lhs(i, n), [(qint(n - i - 1), _move4_ladder(i, n)),
                                  (ONE, _circles(n, 1, i))]
    i, j, k = p
    bottom = [1, i + j - 1]
    # an (i-1) rung carries the top (i, j) back to the bottom (1, i+j-1)
    cap = [("split", 0, 1, i - 1), ("merge", 1)]
    lhs = _tangle(n, bottom, [("split", 1, i + k - 1, j - k), ("merge", 0),
                              ("split", 0, i, k), ("merge", 1), *cap])
    return lhs, [
        (qbinom(j - 1, k - 1), _tangle(n, bottom, [("merge", 0), ("split", 0, i, j), *cap])),
        (qbinom(j - 1, k), _tangle(n, bottom, [("split", 1, i - 1, j), ("merge", 0), *cap])),
    ]


def make_move_fixture(move: int, params, n: int, mirror: bool = False) -> MoveFixture:
    """Closed embedding of a move's two sides.

    Parameter ranges: Move 0 ``i <= n``; Move 1 ``i + j <= n``; Move 2
    ``j <= i <= n``; Move 3 ``i + j + k <= n``; Move 4 ``i + 1 <= n``;
    Move 5 ``1 <= k < j`` and ``i + j <= n``. ``mirror`` reflects both
    sides in a vertical line.
    """
    p = tuple(int(x) for x in params)
    if move not in PARAM_NAMES or len(p) != len(PARAM_NAMES[move]):
        raise ValueError(f"move {move} takes parameters {PARAM_NAMES.get(move)}")
    if not _in_range(move, p, n):
        raise ValueError(f"parameters {p} out of range for move {move} at n={n}")
    lhs, rhs = _drawings(move, p, n)
    if mirror:
        lhs = lhs.mirrored()
        rhs = [(c, d.mirrored()) for c, d in rhs]
    return MoveFixture(
        move, p, n, lhs.to_graph(), tuple((c, d.to_graph()) for c, d in rhs),
        mirror, (lhs, *(d for _, d in rhs)))


def all_fixtures(max_n: int = 5, moves=range(6), mirrors: bool = True) -> list[MoveFixture]:
    """Every in-range fixture with ``n <= max_n``, plain and (if asked) mirrored.

    Move 0 has no mirror variant since a circle is its own reflection.
    """
    out = []
    for move in moves:
        for n in range(1, max_n + 1):
            for p in move_params(move, n):
                out.append(make_move_fixture(move, p, n))
                if mirrors and move != 0:
                    out.append(make_move_fixture(move, p, n, mirror=True))
    return out


def check_move(f: MoveFixture, evaluator: Evaluator | None = None) -> Mismatch | None:
    """Compare both sides exactly; ``None`` means the move holds."""
    lhs = evaluate(f.lhs, evaluator)
    rhs = LaurentPoly()
    for coef, g in f.rhs:
        rhs = rhs + coef * evaluate(g, evaluator)
    if lhs == rhs:
        return None
    return Mismatch(f.name, lhs, rhs)


# the local rule that is itself an instance of each move
_OWN_RULE = {1: "bubble", 2: "digon", 4: "square"}


def move_evaluator(move: int, **kw) -> Evaluator:
    """Evaluator that does not use the shortcut equal to ``move`` itself."""
    own = _OWN_RULE.get(move)
    return Evaluator(simplify=[r for r in SIMPLIFY_RULES if r != own], **kw)


def check_moves(fixtures=None, max_n: int = 5) -> list[Mismatch]:
    """Check every fixture; each move is checked without its own shortcut."""
    if fixtures is None:
        fixtures = all_fixtures(max_n)
    evaluators: dict[int, Evaluator] = {}
    bad = []
    for f in fixtures:
        ev = evaluators.setdefault(f.move, move_evaluator(f.move))
        m = check_move(f, ev)
        if m is not None:
            bad.append(m)
    return bad


def corrupt(f: MoveFixture) -> MoveFixture:
    """Same fixture with the first nonzero right-hand coefficient multiplied by q."""
    rhs = list(f.rhs)
    k = next(k for k, (coef, _) in enumerate(rhs) if coef)
    rhs[k] = (rhs[k][0].shift(1), rhs[k][1])
    return replace(f, rhs=tuple(rhs))


# ---------------------------------------------------------------------------
# corpus


def random_web(rng: random.Random, n: int, top: int | None = None,
               steps: int = 6, max_width: int = 3) -> MoyGraph:
    """Random closed web: split and merge a strand, then close it up."""
    top = top or rng.randint(2, n)
    t = Tangle([top], n)
    for _ in range(steps):
        cols = t.colours
        can_split = [k for k, c in enumerate(cols) if c >= 2]
        can_merge = [k for k in range(len(cols) - 1)]
        if can_split and (len(cols) < max_width and rng.random() < 0.6 or not can_merge):
            k = rng.choice(can_split)
            a = rng.randint(1, cols[k] - 1)
            t.split(k, a, cols[k] - a)
        elif can_merge:
            t.merge(rng.choice(can_merge))
    while len(t.colours) > 1:
        t.merge(rng.randrange(len(t.colours) - 1))
    return t.close()


def web_corpus(seed: int = 0, n_random: int = 36) -> list[tuple[str, MoyGraph]]:
    """Named closed webs: hand-made fixtures, unions and random compositions.

    Graphs are built at ``n = 5``; each has a maximal colour that tells the
    smallest ``N`` it may be read at.
    """
    n = 5
    items = []
    for i in (1, 2, 3):
        items.append((f"circle{i}", _circles(n, i).to_graph()))
    picks = [
        (1, (1, 1)), (1, (1, 2)), (1, (2, 1)), (1, (2, 2)),
        (2, (2, 1)), (2, (3, 1)), (2, (3, 2)), (2, (4, 2)),
        (3, (1, 1, 1)), (3, (1, 2, 1)),
        (4, (1,)), (4, (2,)), (4, (3,)),
        (5, (1, 2, 1)), (5, (2, 2, 1)), (5, (1, 3, 1)), (5, (1, 3, 2)),
    ]
    for move, p in picks:
        f = make_move_fixture(move, p, n)
        items.append((f.name.replace("; n=5", "") + ".lhs", f.lhs))
        for k, (_, g) in enumerate(f.rhs):
            if g.edges:
                items.append((f.name.replace("; n=5", "") + f".rhs{k}", g))
    f1 = make_move_fixture(2, (2, 1), n)
    f2 = make_move_fixture(4, (1,), n)
    items.append(("theta+square", disjoint_union(f1.lhs, f2.lhs)))
    rng = random.Random(seed)
    for k in range(n_random):
        top = 2 + k % 3
        items.append((f"random{k}", random_web(rng, n, top=top, steps=4 + k % 4)))
    return items
