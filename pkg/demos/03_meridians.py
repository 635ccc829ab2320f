"""
Meridian matrices
=================

A set colouring gives special unitary matrices, one per edge, that satisfy
the vertex relations. Conjugating by a random special unitary keeps the
relations and moves every eigenspace by the same rotation.
"""

import numpy as np

from moyweb.chi_oracle import iter_set_colourings
from moyweb.moves import make_move_fixture
from moyweb.repvar import (
    build_representation,
    check_product_lemma,
    conjugate_representation,
    phi_matrix,
    round_trip_residual,
    verify_representation,
)

np.set_printoptions(precision=3, suppress=True)

# %%
# The diagonal model for a 2-coloured edge at N=4.
print(phi_matrix(2, 4))

# %%
# Products of two meridians land in the right class exactly when the
# eigenspaces are orthogonal.
report = check_product_lemma(1, 2, 4, trials=9, seed=1)
print(report)

# %%
# A theta graph, one colouring, its matrices and a random conjugate.
g = make_move_fixture(2, (2, 1), 4).lhs
c = next(iter_set_colourings(g))
rep = build_representation(g, c)
print(verify_representation(rep))
rotated = conjugate_representation(rep, seed=7)
print(verify_representation(rotated, tol=1e-9))
print("eigenspace round trip:", round_trip_residual(rotated, c))
