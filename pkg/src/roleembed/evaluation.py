"""Downstream evaluation of embeddings: centrality targets, linear
regression with normalised MSE, and 2-D PCA coordinates."""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy import sparse

from .embed import EmbeddingMatrix
from .graph import Graph


@dataclass(frozen=True, eq=False)
class CentralityVector:
    values: np.ndarray
    measure: str
    converged: bool = True
    degenerate: bool = False
    iterations: int = 0


@dataclass(frozen=True, eq=False)
class RegressionResult:
    nmse: float
    mse: float
    train: np.ndarray
    test: np.ndarray
    seed: int
    coef: np.ndarray
    ridge: bool = False


@dataclass(frozen=True, eq=False)
class PCACoordinates:
    coords: np.ndarray
    variances: np.ndarray
    components: np.ndarray
    degenerate: bool = False


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    adj = g.adjacency
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                stack.append(v)
    return all(seen)


def adjacency_matrix(g: Graph) -> sparse.csr_array:
    data = np.ones(len(g.indices))
    return sparse.csr_array((data, g.indices, g.indptr), shape=(g.n, g.n))


def eigenvector_centrality(g: Graph, tol: float = 1e-12, max_iter: int = 100_000) -> CentralityVector:
    """Dominant eigenvector of the adjacency matrix by power iteration.

    Starts from the all-ones vector and iterates with ``A + I``, which has
    the same eigenvectors as ``A`` but keeps bipartite graphs from
    oscillating. Stops when two successive unit-norm iterates differ by
    less than ``tol`` in max norm.

    Disconnected graphs are marked ``degenerate``: the dominant eigenspace
    need not be one-dimensional there, and the vector returned is only one
    member of it.
    """
    if g.n == 0:
        raise ValueError("eigenvector centrality of an empty graph")
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = adjacency_matrix(g)
    x = np.full(g.n, 1.0 / np.sqrt(g.n))
    converged = False
    it = 0
    for it in range(1, max_iter + 1):
        y = a @ x + x
        y /= np.linalg.norm(y)
        diff = np.max(np.abs(y - x))
        x = y
        if diff < tol:
            converged = True
            break
    degenerate = not is_connected(g)
    if not converged:
        warnings.warn(f"eigenvector centrality did not converge in {max_iter} iterations", RuntimeWarning)
    return CentralityVector(np.abs(x), "eigenvector", converged, degenerate, it)


def betweenness_centrality(g: Graph, normalized: bool = True, exact: bool = False) -> CentralityVector:
    """Brandes' algorithm on the unweighted graph.

    Raw scores count each unordered pair once. With ``normalized`` and
    ``n >= 3`` they are scaled by ``2 / ((n - 1)(n - 2))``. With ``exact``
    the dependency sums run over :class:`fractions.Fraction` and the values
    array has object dtype.
    """
    n = g.n
    adj = [[v for v in nbrs if v != u] for u, nbrs in enumerate(g.adjacency)]
    zero = Fraction(0) if exact else 0.0
    score = [zero] * n
    for s in range(n):
        order = []
        preds: list[list[int]] = [[] for _ in range(n)]
        sigma = [0] * n
        dist = [-1] * n
        sigma[s] = 1
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
                    preds[w].append(v)
        delta = [zero] * n
        for w in reversed(order):
            coeff = (1 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                score[w] += delta[w]
    if exact:
        values = np.array([x / 2 for x in score], dtype=object)
        if normalized and n >= 3:
            values = values * Fraction(2, (n - 1) * (n - 2))
    else:
        values = np.asarray(score) / 2.0
        if normalized and n >= 3:
            values *= 2.0 / ((n - 1) * (n - 2))
    return CentralityVector(values, "betweenness")


def _as_matrix(e) -> np.ndarray:
    if isinstance(e, EmbeddingMatrix):
        e = e.values
    return np.asarray(e, dtype=float)


def _as_target(t) -> np.ndarray:
    if isinstance(t, CentralityVector):
        t = t.values
    return np.asarray(t, dtype=float)


def train_test_split(n: int, test_fraction: float, seed: int) -> tuple[np.ndarray, np.ndarray]:
    if not 0 < test_fraction < 1:
        raise ValueError(f"test_fraction must lie in (0, 1), got {test_fraction}")
    n_test = int(round(test_fraction * n))
    if n_test == 0 or n_test == n:
        raise ValueError(f"split of {n} rows with test_fraction={test_fraction} leaves an empty side")
    perm = np.random.default_rng(seed).permutation(n)
    return np.sort(perm[n_test:]), np.sort(perm[:n_test])


def least_squares(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, bool]:
    """Solve the normal equations, adding a ``1e-8 * trace`` ridge when the
    Gram matrix is rank deficient. Returns ``(coef, ridge_used)``."""
    gram = x.T @ x
    rhs = x.T @ y
    ridge = np.linalg.matrix_rank(gram) < gram.shape[0]
    if ridge:
        lam = 1e-8 * np.trace(gram)
        if lam == 0:
            lam = 1e-8
        gram = gram + lam * np.eye(gram.shape[0])
    return np.linalg.solve(gram, rhs), ridge


def fit_regression(
    embedding,
    target,
    test_fraction: float = 0.2,
    seed: int = 0,
    normalize: str = "test",
) -> RegressionResult:
    """Ordinary least squares with intercept on a seeded random split.

    ``nmse`` is the test MSE divided by the mean true target, taken over the
    test rows (``normalize="test"``) or over all rows (``"global"``).
    """
    x = _as_matrix(embedding)
    y = _as_target(target)
    if x.shape[0] != y.shape[0]:
        raise ValueError(f"{x.shape[0]} embedding rows but {y.shape[0]} targets")
    if normalize not in ("test", "global"):
        raise ValueError(f"normalize must be 'test' or 'global', got {normalize!r}")
    train, test = train_test_split(len(y), test_fraction, seed)
    design = np.column_stack([np.ones(len(y)), x])
    coef, ridge = least_squares(design[train], y[train])
    residual = design[test] @ coef - y[test]
    mse = float(np.mean(residual ** 2))
    scale = np.mean(y[test]) if normalize == "test" else np.mean(y)
    return RegressionResult(float(mse / scale), mse, train, test, seed, coef, ridge)


def repeated_regression(embedding, target, repeats: int = 50, test_fraction: float = 0.2,
                        seed: int = 0, normalize: str = "test") -> list[RegressionResult]:
    """Run :func:`fit_regression` with seeds ``seed, seed + 1, ...``."""
    return [fit_regression(embedding, target, test_fraction, seed + r, normalize) for r in range(repeats)]


def _top_eigvec(c: np.ndarray, previous: list[np.ndarray], tol: float, max_iter: int) -> np.ndarray:
    rng = np.random.default_rng(0)
    v = rng.standard_normal(c.shape[0])
    for _ in range(max_iter):
        for u in previous:
            v -= (u @ v) * u
        norm = np.linalg.norm(v)
        if norm == 0:
            return v
        v /= norm
        nv = c @ v
        for u in previous:
            nv -= (u @ nv) * u
        norm = np.linalg.norm(nv)
        if norm == 0:
            return v
        nv /= norm
        if np.max(np.abs(nv - v)) < tol:
            return nv
        v = nv
    return v


def pca_2d(embedding, tol: float = 1e-14, max_iter: int = 100_000) -> PCACoordinates:
    """Project rows onto their two leading principal directions.

    Directions come from power iteration with deflation on the covariance
    matrix. Each direction is signed so that its largest-magnitude entry is
    positive. ``degenerate`` is set when the data has fewer than two
    directions of nonzero variance; the missing coordinates are 0.
    """
    x = _as_matrix(embedding)
    n, d = x.shape
    if n < 2 or d < 1:
        raise ValueError(f"pca_2d needs at least 2 rows and 1 column, got {x.shape}")
    centered = x - x.mean(axis=0)
    cov = centered.T @ centered / (n - 1)
    scale = max(np.trace(cov), np.finfo(float).tiny)

    components: list[np.ndarray] = []
    variances = []
    deflated = cov.copy()
    for _ in range(min(2, d)):
        v = _top_eigvec(deflated, components, tol, max_iter)
        lam = float(v @ cov @ v)
        if lam <= 1e-12 * scale:
            break
        components.append(v)
        variances.append(lam)
        deflated = deflated - lam * np.outer(v, v)

    # project distinct rows once so equal rows get bit-identical points
    distinct, inverse = np.unique(centered, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    coords = np.zeros((n, 2))
    for k, v in enumerate(components):
        if v[np.argmax(np.abs(v))] < 0:
            v = components[k] = -v
        coords[:, k] = (distinct @ v)[inverse]
    comp = np.zeros((2, d))
    for k, v in enumerate(components):
        comp[k] = v
    var = np.zeros(2)
    var[: len(variances)] = variances
    return PCACoordinates(coords, var, comp, degenerate=len(components) < 2)
