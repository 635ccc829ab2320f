import numpy as np
import pytest

from moyweb.chi_oracle import SetColouring, iter_set_colourings
from moyweb.moves import make_move_fixture
from moyweb.repvar import (
    Representation,
    build_representation,
    check_product_lemma,
    conjugate_representation,
    eigenspace,
    haar_su,
    is_special_unitary,
    matrix_from_subspace,
    phi_matrix,
    product_trial,
    projector,
    random_conjugate,
    round_trip_residual,
    spectrum_residual,
    verify_representation,
    zeta,
)


def test_phi_examples():
    assert np.allclose(phi_matrix(1, 2), np.diag([-1j, 1j]))
    for n in range(1, 7):
        for j in range(1, n + 1):
            m = phi_matrix(j, n)
            assert is_special_unitary(m)
            assert abs(np.linalg.det(m) - 1) < 1e-12
            assert abs(np.trace(m) - zeta(n) ** j * (n - 2 * j)) < 1e-10
    with pytest.raises(ValueError):
        phi_matrix(3, 2)


def test_haar_su():
    u = haar_su(4, 3)
    assert is_special_unitary(u)
    assert np.array_equal(u, haar_su(4, 3))
    assert not np.allclose(u, haar_su(4, 4))


def test_random_conjugate():
    m = random_conjugate(2, 4, seed=5)
    assert np.array_equal(m, random_conjugate(2, 4, seed=5))
    ev = np.sort_complex(np.linalg.eigvals(m))
    target = np.sort_complex(np.array([-zeta(4) ** 2] * 2 + [zeta(4) ** 2] * 2))
    assert np.max(np.abs(ev - target)) < 1e-9
    assert spectrum_residual(m, 2) < 1e-9
    assert np.allclose(random_conjugate(1, 2, u=np.eye(2)), np.diag([-1j, 1j]))


def test_matrix_from_subspace_examples():
    assert np.array_equal(matrix_from_subspace({1}, 2), phi_matrix(1, 2))
    assert np.allclose(matrix_from_subspace({2}, 2), np.diag([1j, -1j]))
    with pytest.raises(ValueError):
        matrix_from_subspace({3}, 2)
    with pytest.raises(ValueError):
        matrix_from_subspace(np.array([[1.0], [1.0]]), 2)


def test_extraction_inverts_construction():
    rng = np.random.default_rng(0)
    for n in range(2, 6):
        for i in range(1, n + 1):
            basis = haar_su(n, rng)[:, :i]
            m = matrix_from_subspace(basis, n)
            back = eigenspace(m, i)
            assert np.max(np.abs(projector(back) - projector(basis))) < 1e-10
            assert np.max(np.abs(matrix_from_subspace(back, n) - m)) < 1e-10
    with pytest.raises(ValueError):
        eigenspace(phi_matrix(1, 3), 2)


def test_product_hand_cases():
    s = np.diag([-1j, 1j])
    t = np.diag([1j, -1j])
    r = product_trial(s, t, 1, 1, 1e-9)
    assert r.orthogonal and r.product_in_class
    assert np.allclose(s @ t, phi_matrix(2, 2)) and np.allclose(phi_matrix(2, 2), np.eye(2))
    r = product_trial(s, s, 1, 1, 1e-9)
    assert not r.orthogonal and not r.product_in_class
    assert np.allclose(s @ s, -np.eye(2))


def test_product_lemma_grid():
    for n in range(2, 5):
        for i in range(1, n):
            for j in range(1, n - i + 1):
                rep = check_product_lemma(i, j, n, trials=30, seed=1)
                assert rep.ok, str(rep)
                kinds = {(line.ids.split("kind=")[1].split(",")[0], "in_class=True" in line.ids)
                         for line in rep.lines}
                assert ("orthogonal", True) in kinds and ("overlapping", False) in kinds


def test_product_lemma_report_format():
    rep = check_product_lemma(1, 2, 4, trials=3, seed=0)
    assert str(rep.lines[0]).startswith("PASS product_lemma i=1,j=2,n=4,trial=0")
    assert "residual=" in str(rep)
    with pytest.raises(ValueError):
        check_product_lemma(2, 3, 4)


def theta_colouring():
    g = make_move_fixture(2, (2, 1), 3).lhs
    two = next(e.id for e in g.edges if e.colour == 2)
    for c in iter_set_colourings(g):
        if c[two] == {1, 2}:
            return g, c
    raise AssertionError


def test_theta_representation():
    g, c = theta_colouring()
    r = build_representation(g, c)
    rep = verify_representation(r, 1e-12)
    assert rep.ok, str(rep)
    two = next(e.id for e in g.edges if e.colour == 2)
    a, b = (e.id for e in g.edges if e.colour == 1)
    assert np.allclose(r.matrices[a] @ r.matrices[b], r.matrices[two], atol=1e-15)


def test_conjugated_representation():
    g, c = theta_colouring()
    r = conjugate_representation(build_representation(g, c), seed=2)
    assert verify_representation(r, 1e-9).ok
    assert round_trip_residual(r, c) < 1e-10
    assert not np.allclose(r.matrices[g.edges[0].id], np.diag(np.diag(r.matrices[g.edges[0].id])))


def test_circle_representation():
    g = make_move_fixture(0, (2,), 4).lhs
    c = next(iter_set_colourings(g))
    rep = verify_representation(build_representation(g, c), 1e-12)
    assert rep.ok and [line.check for line in rep.lines] == ["spectrum"]


def test_identity_matrix_fails_spectrum():
    g, c = theta_colouring()
    r = build_representation(g, c)
    key = g.edges[0].id
    broken = Representation(g, dict(r.matrices, **{key: np.eye(3)}))
    rep = verify_representation(broken, 1e-9)
    assert not rep.ok
    assert any(line.check == "spectrum" and line.ids == key for line in rep.failures())


def test_invalid_colouring_fails_relation():
    g, c = theta_colouring()
    a, b = (e.id for e in g.edges if e.colour == 1)
    bad = SetColouring(3, dict(c.assignment, **{b: c[a]}))
    rep = verify_representation(build_representation(g, bad), 1e-9)
    failed = rep.failures()
    assert failed and all(line.check == "relation" for line in failed)
    assert max(line.residual for line in failed) > 0.5
