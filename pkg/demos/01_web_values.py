"""
Evaluating coloured webs
========================

Build a few closed webs, evaluate them and watch the local moves hold.
"""

from moyweb.drawing import Tangle
from moyweb.moves import make_move_fixture, check_move
from moyweb.moyeval import evaluate
from moyweb.moygraph import parse_moy, render_moy
from moyweb.qpoly import qbinom, qint

# %%
# A theta graph: split a 2-coloured strand into two 1-strands and merge back.
t = Tangle([2], n=3)
t.split(0, 1, 1)
t.merge(0)
theta = t.close()
print(render_moy(theta))
print("theta at N=3:", evaluate(theta))

# %%
# The text format round-trips, and the same graph can be read at other N.
from moyweb.moygraph import with_n

again = parse_moy(render_moy(theta))
for n in (2, 3, 4, 5):
    print(f"N={n}:", evaluate(with_n(again, n)))

# %%
# The digon rule predicts [2][N choose 2] for this graph.
for n in (2, 3, 4, 5):
    assert evaluate(with_n(theta, n)) == qint(2) * qbinom(n, 2)

# %%
# Every move fixture compares two closed webs exactly.
for move, params in [(1, (1, 2)), (3, (1, 1, 1)), (4, (2,)), (5, (1, 3, 1))]:
    f = make_move_fixture(move, params, n=4)
    print(f.name, "holds" if check_move(f) is None else "FAILS")
