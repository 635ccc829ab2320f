"""Numerical checks of SU(N) representations attached to coloured graphs.

An ``i``-coloured edge is sent to a matrix conjugate to

    Phi_i = zeta^i * diag(-1, ..., -1, 1, ..., 1)     (i entries -1),

with ``zeta = exp(i*pi/N)``. The ``-zeta^i`` eigenspace of such a matrix
is an ``i``-plane in ``C^N``, and conversely every ``i``-plane ``A``
determines the matrix ``S_A = zeta^i (I - 2 P_A)``. The product of
``S ~ Phi_i`` and ``T ~ Phi_j`` is conjugate to ``Phi_{i+j}`` exactly when
their distinguished eigenspaces are orthogonal; :func:`check_product_lemma`
tests that equivalence on random and engineered pairs.

Everything here is double-precision with explicit tolerances. Reports are
lists of :class:`CheckLine` printed as ``PASS|FAIL <check> <ids> residual=<r>``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import subspace_angles
from scipy.optimize import linear_sum_assignment

from .chi_oracle import SetColouring
from .moygraph import MoyGraph

__all__ = [
    "zeta",
    "phi_matrix",
    "haar_su",
    "random_conjugate",
    "matrix_from_subspace",
    "eigenspace",
    "projector",
    "spectrum_residual",
    "is_special_unitary",
    "CheckLine",
    "Report",
    "check_product_lemma",
    "Representation",
    "build_representation",
    "conjugate_representation",
    "verify_representation",
    "round_trip_residual",
]


def zeta(n: int) -> complex:
    return np.exp(1j * np.pi / n)


def _check_colour(j: int, n: int) -> None:
    if not 0 <= j <= n or n < 1:
        raise ValueError(f"colour {j} outside 0..{n}")


def phi_matrix(j: int, n: int) -> np.ndarray:
    """``zeta^j`` times the diagonal sign matrix with ``j`` leading ``-1``s."""
    _check_colour(j, n)
    d = np.ones(n, dtype=complex)
    d[:j] = -1
    return zeta(n) ** j * np.diag(d)


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def haar_su(n: int, seed=None) -> np.ndarray:
    """Haar-random special unitary matrix (QR of a complex Gaussian)."""
    rng = _rng(seed)
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    q = q * (d / np.abs(d))
    return q / np.linalg.det(q) ** (1 / n)


def random_conjugate(j: int, n: int, seed=None, u: np.ndarray | None = None) -> np.ndarray:
    """``U Phi_j U*`` with ``U`` Haar-random unless given."""
    _check_colour(j, n)
    if u is None:
        u = haar_su(n, seed)
    return u @ phi_matrix(j, n) @ u.conj().T


def projector(basis: np.ndarray) -> np.ndarray:
    return basis @ basis.conj().T


def matrix_from_subspace(a, n: int) -> np.ndarray:
    """``S_A = -zeta^i P + zeta^i (I - P)`` for an ``i``-plane ``A``.

    ``a`` is either an ``n x i`` array with orthonormal columns or a set of
    coordinates in ``1..n`` (giving an exactly diagonal matrix).
    """
    if isinstance(a, np.ndarray):
        basis = np.asarray(a, dtype=complex)
        if basis.ndim != 2 or basis.shape[0] != n:
            raise ValueError(f"basis must have shape ({n}, i), got {basis.shape}")
        i = basis.shape[1]
        gram = basis.conj().T @ basis
        dev = np.max(np.abs(gram - np.eye(i))) if i else 0.0
        if dev > 1e-10:
            raise ValueError(f"basis is not orthonormal (Gram deviation {dev:.3g})")
        p = projector(basis)
    else:
        subset = sorted(a)
        if any(not 1 <= k <= n for k in subset) or len(set(subset)) != len(subset):
            raise ValueError(f"{subset} is not a subset of 1..{n}")
        i = len(subset)
        d = np.ones(n, dtype=complex)
        d[[k - 1 for k in subset]] = -1
        return zeta(n) ** i * np.diag(d)
    return zeta(n) ** i * (np.eye(n) - 2 * p)


def eigenspace(m: np.ndarray, i: int, tol: float = 1e-8) -> np.ndarray:
    """Orthonormal basis of the ``-zeta^i`` eigenspace of ``m ~ Phi_i``.

    ``zeta^-i m`` is then the reflection ``I - 2P``; its Hermitian part is
    diagonalized and the eigenvalues near ``-1`` are taken.
    """
    n = m.shape[0]
    r = zeta(n) ** (-i) * m
    h = (r + r.conj().T) / 2
    w, v = np.linalg.eigh(h)
    neg = w < 0
    if neg.sum() != i or np.max(np.abs(np.abs(w) - 1)) > tol:
        raise ValueError(f"matrix is not conjugate to Phi_{i} (eigenvalues {np.round(w, 10)})")
    return v[:, neg]


def _phi_spectrum(j: int, n: int) -> np.ndarray:
    return np.diagonal(phi_matrix(j, n))


def spectrum_residual(m: np.ndarray, j: int) -> float:
    """Largest eigenvalue distance to ``Phi_j`` after optimal matching."""
    n = m.shape[0]
    ev = np.linalg.eigvals(m)
    target = _phi_spectrum(j, n)
    cost = np.abs(ev[:, None] - target[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())


def is_special_unitary(m: np.ndarray, tol: float = 1e-10) -> bool:
    n = m.shape[0]
    return (np.max(np.abs(m @ m.conj().T - np.eye(n))) <= tol
            and abs(np.linalg.det(m) - 1) <= max(tol, 1e-8))


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckLine:
    ok: bool
    check: str
    ids: str
    residual: float

    def __str__(self):
        return f"{'PASS' if self.ok else 'FAIL'} {self.check} {self.ids} residual={self.residual:.3e}"


@dataclass
class Report:
    lines: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(line.ok for line in self.lines)

    def failures(self) -> list:
        return [line for line in self.lines if not line.ok]

    def add(self, ok: bool, check: str, ids: str, residual: float) -> None:
        self.lines.append(CheckLine(bool(ok), check, ids, float(residual)))

    def extend(self, other: "Report") -> None:
        self.lines.extend(other.lines)

    def __str__(self):
        return "\n".join(map(str, self.lines))


# ---------------------------------------------------------------------------
# product of two meridians


@dataclass(frozen=True)
class ProductTrial:
    kind: str
    orthogonal: bool
    product_in_class: bool
    min_angle: float
    residual: float


def _pair(kind: str, i: int, j: int, n: int, rng) -> tuple[np.ndarray, np.ndarray]:
    w = haar_su(n, rng)
    if kind == "random":
        return random_conjugate(i, n, u=haar_su(n, rng)), random_conjugate(j, n, u=haar_su(n, rng))
    if kind == "orthogonal":
        return matrix_from_subspace(w[:, :i], n), matrix_from_subspace(w[:, i:i + j], n)
    # overlapping: B tilts a vector of A by an angle well below pi/2
    theta = rng.uniform(0.05, 1.4)
    first = np.cos(theta) * w[:, 0] + np.sin(theta) * w[:, i]
    b = np.column_stack([first, w[:, i + 1:i + j]])
    return matrix_from_subspace(w[:, :i], n), matrix_from_subspace(b, n)


def product_trial(s: np.ndarray, t: np.ndarray, i: int, j: int, tol: float,
                  kind: str = "given") -> ProductTrial:
    """Test orthogonality of eigenspaces and the class of ``S T``."""
    a = eigenspace(s, i)
    b = eigenspace(t, j)
    angle = float(np.min(subspace_angles(a, b)))
    res = spectrum_residual(s @ t, i + j)
    return ProductTrial(kind, angle > np.pi / 2 - tol, res <= tol, angle, res)


def check_product_lemma(i: int, j: int, n: int, trials: int = 100,
                        tol: float = 1e-9, seed=0) -> Report:
    """Orthogonal eigenspaces iff ``S T ~ Phi_{i+j}``, on seeded trials.

    Trials cycle through independent random conjugates, engineered
    orthogonal pairs and engineered overlapping pairs.
    """
    if not (1 <= i and 1 <= j and i + j <= n) or tol <= 0:
        raise ValueError(f"need 1 <= i, j and i + j <= n, tol > 0 (got {i}, {j}, {n}, {tol})")
    rng = _rng(seed)
    report = Report()
    kinds = ("random", "orthogonal", "overlapping")
    for k in range(trials):
        kind = kinds[k % 3]
        s, t = _pair(kind, i, j, n, rng)
        r = product_trial(s, t, i, j, tol, kind)
        report.add(r.orthogonal == r.product_in_class, "product_lemma",
                   f"i={i},j={j},n={n},trial={k},kind={kind},"
                   f"orthogonal={r.orthogonal},in_class={r.product_in_class}",
                   r.residual)
    return report


# ---------------------------------------------------------------------------
# representations of a graph


@dataclass
class Representation:
    graph: MoyGraph
    matrices: dict
    # global conjugator applied to the coordinate construction, if any
    u: np.ndarray | None = None


def build_representation(g: MoyGraph, c: SetColouring) -> Representation:
    """Send each edge and circle to ``S_A`` of its coordinate subset."""
    return Representation(g, {key: matrix_from_subspace(c[key], g.n) for key in g.colour})


def conjugate_representation(r: Representation, seed=None, u=None) -> Representation:
    """All matrices conjugated by one Haar-random special unitary."""
    if u is None:
        u = haar_su(r.graph.n, seed)
    uh = u.conj().T
    total = u if r.u is None else u @ r.u
    return Representation(r.graph, {k: u @ m @ uh for k, m in r.matrices.items()}, total)


def _relation(v, rho) -> tuple[np.ndarray, np.ndarray]:
    # counterclockwise from the lone slot: (z, x, y)
    z, x, y = (ref[0] for ref in v.rotated_from(v.lone_slot()))
    if v.kind == "merge":
        return rho[x] @ rho[y], rho[z]
    return rho[y] @ rho[x], rho[z]


def verify_representation(r: Representation, tol: float = 1e-12) -> Report:
    """Spectra of all matrices and the relation at every vertex.

    A merge with slots ``(z, x, y)`` counterclockwise needs ``x y = z``;
    a split needs ``y x = z``.
    """
    g, rho = r.graph, r.matrices
    report = Report()
    for key, colour in g.colour.items():
        res = spectrum_residual(rho[key], colour)
        report.add(res <= tol, "spectrum", key, res)
    for v in g.vertices:
        lhs, rhs = _relation(v, rho)
        res = float(np.max(np.abs(lhs - rhs)))
        report.add(res <= tol, "relation", v.id, res)
    return report


def round_trip_residual(r: Representation, c: SetColouring) -> float:
    """How far each extracted eigenspace is from the colouring's subspace.

    The subspace of an edge is its coordinate plane, moved by ``r.u`` when
    the representation was conjugated.
    """
    n = r.graph.n
    u = np.eye(n) if r.u is None else r.u
    worst = 0.0
    for key, colour in r.graph.colour.items():
        p = projector(eigenspace(r.matrices[key], colour))
        q = projector(u[:, [k - 1 for k in sorted(c[key])]])
        worst = max(worst, float(np.max(np.abs(p - q))))
    return worst
