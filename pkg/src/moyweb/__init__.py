"""Exact MOY polynomials of coloured planar webs, with independent checks.

The evaluator (:func:`evaluate`) is cross-checked against a set-colouring
count (:func:`count_set_colourings`) at ``q = 1``, against the six local
moves (:mod:`moyweb.moves`), and, at sample points, against SU(N)
representations built from colourings (:mod:`moyweb.repvar`).
"""

from .chi_oracle import SetColouring, count_set_colourings, iter_set_colourings, verify_moves_at_one
from .moyeval import Evaluator, NonIntegralResult, eval_link, evaluate, evaluate_one_two
from .moygraph import (
    LinkDiagram,
    MoyGraph,
    ParseError,
    ValidationError,
    parse_lnk,
    parse_moy,
    render_lnk,
    render_moy,
    with_n,
)
from .qpoly import LaurentPoly, eval_at_one, grassmann_poincare, qbinom, qint

__all__ = [
    "Evaluator",
    "LaurentPoly",
    "LinkDiagram",
    "MoyGraph",
    "NonIntegralResult",
    "ParseError",
    "SetColouring",
    "ValidationError",
    "count_set_colourings",
    "eval_at_one",
    "eval_link",
    "evaluate",
    "evaluate_one_two",
    "grassmann_poincare",
    "iter_set_colourings",
    "parse_lnk",
    "parse_moy",
    "qbinom",
    "qint",
    "render_lnk",
    "render_moy",
    "verify_moves_at_one",
    "with_n",
]

__version__ = "0.1.0"
