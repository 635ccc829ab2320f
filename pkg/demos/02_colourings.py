"""
Counting set colourings
=======================

The value of a web at q = 1 is the number of ways to label its
i-coloured edges by i-element subsets of {1..N} compatibly at vertices.
"""

from moyweb.chi_oracle import count_set_colourings, iter_set_colourings
from moyweb.moves import web_corpus
from moyweb.moyeval import evaluate
from moyweb.moygraph import with_n
from moyweb.qpoly import eval_at_one

corpus = web_corpus()
name, square = next(item for item in corpus if item[0].startswith("move4(i=1)"))

# %%
# List the colourings of a small square web at N=3.
g = with_n(square, 3)
for c in iter_set_colourings(g):
    print({k: sorted(v) for k, v in sorted(c.assignment.items())})

# %%
# Two independent computations of the same integer.
print(f"{'graph':28s} {'N':>2s} {'poly(1)':>8s} {'count':>8s}")
for name, g in corpus[:20]:
    for n in range(max(2, g.max_colour()), 6):
        h = with_n(g, n)
        a, b = eval_at_one(evaluate(h)), count_set_colourings(h)
        print(f"{name:28s} {n:2d} {a:8d} {b:8d}")
        assert a == b
