"""Acceptance criteria 1 to 8, each at its stated tolerance and time budget."""

import itertools
import math
import time

import numpy as np

from moyweb.chi_oracle import (
    SetColouring,
    colouring_errors,
    count_set_colourings,
    iter_set_colourings,
)
from moyweb.moves import Mismatch, all_fixtures, check_move, check_moves, corrupt, make_move_fixture
from moyweb.moyeval import eval_link, evaluate
from moyweb.moygraph import Circle, MoyGraph, parse_lnk, with_n
from moyweb.qpoly import (
    LaurentPoly,
    eval_at_one,
    grassmann_poincare,
    grassmann_recurrence,
    qint,
)
from moyweb.repvar import (
    build_representation,
    check_product_lemma,
    conjugate_representation,
    eigenspace,
    haar_su,
    matrix_from_subspace,
    projector,
    round_trip_residual,
    verify_representation,
)

P = LaurentPoly.parse


def readings(corpus, ns):
    """Every (name, N, graph) with the graph's colours fitting under N."""
    for name, g in corpus:
        for n in ns:
            if g.max_colour() <= n:
                yield name, n, with_n(g, n)


def test_criterion_1_moves(acceptance):
    t0 = time.perf_counter()
    fixtures = all_fixtures(5)
    bad = check_moves(fixtures)
    dt = time.perf_counter() - t0
    moves = {f.move for f in fixtures}
    ok = not bad and len(fixtures) >= 150 and moves == set(range(6)) and dt < 60
    acceptance(1, ok, f"{len(fixtures)} move fixtures, {len(bad)} mismatches, {dt:.1f}s")
    assert not bad, "\n".join(map(str, bad))
    assert len(fixtures) >= 150 and moves == set(range(6))
    assert dt < 60


def test_criterion_2_value_at_one_counts_colourings(acceptance, corpus):
    t0 = time.perf_counter()
    checked, bad = 0, []
    for name, n, g in readings(corpus, range(2, 6)):
        a, b = eval_at_one(evaluate(g)), count_set_colourings(g)
        checked += 1
        if a != b:
            bad.append(f"{name} N={n}: {a} != {b}")
    dt = time.perf_counter() - t0
    ok = not bad and len(corpus) >= 50 and dt < 300
    acceptance(2, ok, f"{len(corpus)} graphs, {checked} (graph, N) pairs, "
                      f"{len(bad)} disagreements, {dt:.1f}s")
    assert len(corpus) >= 50
    assert not bad, bad
    assert dt < 300


def test_criterion_3_closed_forms(acceptance):
    circle = evaluate(MoyGraph(4, circles=(Circle("c", 2),)))
    theta = evaluate(make_move_fixture(2, (2, 1), 3).lhs)
    bubble = evaluate(make_move_fixture(1, (1, 1), 3).lhs)
    got = [circle == P("q^4 + q^2 + 2 + q^-2 + q^-4"),
           theta == P("q^3 + 2*q + 2*q^-1 + q^-3"),
           bubble == qint(2) * qint(3)]
    acceptance(3, all(got), f"circle {circle}; theta {theta}; bubble {bubble}")
    assert all(got)


def test_criterion_4_grassmann(acceptance):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 9):
        for k in range(1, n + 1):
            lhs, rhs = grassmann_recurrence(k, n)
            if lhs != rhs or eval_at_one(grassmann_poincare(k, n)) != math.comb(n, k):
                bad.append((k, n))
    dt = time.perf_counter() - t0
    acceptance(4, not bad and dt < 1, f"36 (k, n) pairs, {len(bad)} failures, {dt:.3f}s")
    assert not bad
    assert dt < 1


def test_criterion_5_product_lemma(acceptance):
    t0 = time.perf_counter()
    grids, failures, kinds = 0, [], set()
    for n in range(2, 6):
        for i in range(1, n):
            for j in range(1, n - i + 1):
                rep = check_product_lemma(i, j, n, trials=100, tol=1e-9, seed=0)
                grids += 1
                failures += rep.failures()
                for line in rep.lines:
                    kind = line.ids.split("kind=")[1].split(",")[0]
                    kinds.add((kind, "in_class=True" in line.ids))
    dt = time.perf_counter() - t0
    engineered = {("orthogonal", True), ("overlapping", False)} <= kinds
    ok = not failures and engineered and dt < 60
    acceptance(5, ok, f"{grids} (i, j, N) triples x 100 trials, {len(failures)} failures, {dt:.1f}s")
    assert not failures, "\n".join(map(str, failures[:10]))
    assert engineered
    assert dt < 60


def test_criterion_6_representations(acceptance, corpus):
    t0 = time.perf_counter()
    count, bad = 0, []
    worst = [0.0, 0.0, 0.0]
    for k, (name, n, g) in enumerate(readings(corpus, range(2, 5))):
        for c in iter_set_colourings(g):
            count += 1
            r = build_representation(g, c)
            diag = verify_representation(r, 1e-12)
            conj = conjugate_representation(r, seed=count)
            rotated = verify_representation(conj, 1e-9)
            trip = max(round_trip_residual(r, c), round_trip_residual(conj, c))
            worst[0] = max([worst[0], *(line.residual for line in diag.lines)])
            worst[1] = max([worst[1], *(line.residual for line in rotated.lines)])
            worst[2] = max(worst[2], trip)
            if not (diag.ok and rotated.ok and trip <= 1e-10):
                bad.append(f"{name} N={n} {c.assignment}")
    # extraction also inverts the construction on random planes
    rng = np.random.default_rng(6)
    for n in range(2, 5):
        for i in range(1, n + 1):
            for _ in range(20):
                basis = haar_su(n, rng)[:, :i]
                back = eigenspace(matrix_from_subspace(basis, n), i)
                worst[2] = max(worst[2], float(np.max(np.abs(projector(back) - projector(basis)))))
    dt = time.perf_counter() - t0
    ok = not bad and count > 0 and worst[2] <= 1e-10
    acceptance(6, ok, f"{count} colourings, worst residuals {worst[0]:.1e} (diagonal), "
                      f"{worst[1]:.1e} (conjugated), {worst[2]:.1e} (round trip), {dt:.1f}s")
    assert not bad, bad[:5]
    assert worst[2] <= 1e-10


KINK = "n 2\narc a 1\narc b 1\nxing x + a b b a\n"
R2 = "n {n}\narc a {i}\narc b {j}\narc c {i}\narc d {j}\nxing x1 + a b c d\nxing x2 - c d a b\n"


def test_criterion_7_links(acceptance):
    kink = eval_link(parse_lnk(KINK))
    bad = []
    pairs = 0
    for n in range(2, 5):
        for i in (1, 2):
            for j in (1, 2):
                closure = MoyGraph(n, circles=(Circle("a", i), Circle("b", j)))
                pairs += 1
                if eval_link(parse_lnk(R2.format(n=n, i=i, j=j))) != evaluate(closure):
                    bad.append((i, j, n))
    ok = kink == P("q^3 + q") and not bad
    acceptance(7, ok, f"kink {kink}; {pairs} R2 pairs, {len(bad)} differ from their closures")
    assert kink == P("q^3 + q")
    assert not bad


def _spoil(g, c):
    """Give the first edge a different subset of the same size."""
    key = g.edges[0].id
    n, size = g.n, len(c[key])
    for other in map(frozenset, itertools.combinations(range(1, n + 1), size)):
        if other != c[key]:
            return SetColouring(n, dict(c.assignment, **{key: other}))
    return None


def test_criterion_8_negative_controls(acceptance, corpus):
    fixtures = all_fixtures(4)
    missed = [f.name for f in fixtures if not isinstance(check_move(corrupt(f)), Mismatch)]
    spoiled, undetected = 0, []
    for name, n, g in readings(corpus, (3, 4)):
        if not g.edges:
            continue
        c = next(iter_set_colourings(g), None)
        bad = _spoil(g, c) if c else None
        if bad is None:
            continue
        spoiled += 1
        report = verify_representation(build_representation(g, bad), 1e-9)
        if not colouring_errors(g, bad) or report.ok:
            undetected.append(f"{name} N={n}")
    ok = not missed and not undetected and spoiled > 50
    acceptance(8, ok, f"{len(fixtures)} corrupted fixtures, {len(missed)} undetected; "
                      f"{spoiled} invalid colourings, {len(undetected)} passed as valid")
    assert not missed, missed
    assert spoiled > 50
    assert not undetected, undetected
