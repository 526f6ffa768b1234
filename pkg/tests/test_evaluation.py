import math

import networkx as nx
import numpy as np
import pytest

from roleembed import betweenness_centrality, eigenvector_centrality, fit_regression, from_edges, pca_2d, repeated_regression
from roleembed.evaluation import adjacency_matrix, is_connected, least_squares, train_test_split
from roleembed.generators import cycle_graph, gnp_random_graph, path_graph, random_connected_graph, star_graph
from roleembed.oracle import betweenness_bruteforce


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v in g.edges() if u != v)
    return h


# eigenvector centrality

def test_cycle_is_uniform():
    c = eigenvector_centrality(cycle_graph(8))
    assert c.converged and not c.degenerate
    assert np.allclose(c.values, 1 / math.sqrt(8), atol=1e-10)


def test_star_ratio():
    # A x = lambda x with x = (h, l, l, l): 3l = lambda h and h = lambda l,
    # so lambda = sqrt(3) and h / l = sqrt(3)
    c = eigenvector_centrality(star_graph(3))
    v = c.values
    assert np.allclose(v[1:], v[1])
    assert v[0] / v[1] == pytest.approx(math.sqrt(3), abs=1e-9)
    assert np.linalg.norm(v) == pytest.approx(1.0)


def test_eigen_equation_holds():
    for seed in range(5):
        g = random_connected_graph(30, 0.15, seed)
        x = eigenvector_centrality(g).values
        a = adjacency_matrix(g)
        lam = x @ (a @ x)
        assert np.max(np.abs(a @ x - lam * x)) < 1e-6
        assert np.all(x > 0)


def test_against_networkx():
    g = random_connected_graph(25, 0.2, 3)
    ours = eigenvector_centrality(g).values
    ref = nx.eigenvector_centrality_numpy(to_nx(g))
    ref = np.array([ref[v] for v in range(g.n)])
    assert np.allclose(ours, ref / np.linalg.norm(ref), atol=1e-8)


def test_disconnected_flagged():
    g = from_edges([(0, 1), (2, 3)])
    assert not is_connected(g)
    assert eigenvector_centrality(g).degenerate


def test_nonconvergence_warns():
    g = random_connected_graph(20, 0.2, 1)
    with pytest.warns(RuntimeWarning):
        c = eigenvector_centrality(g, max_iter=2)
    assert not c.converged


def test_eigen_rejects_bad_args():
    with pytest.raises(ValueError):
        eigenvector_centrality(from_edges([]))
    with pytest.raises(ValueError):
        eigenvector_centrality(path_graph(3), tol=0)


# betweenness

def test_betweenness_path_and_star():
    assert betweenness_centrality(path_graph(3), normalized=False).values.tolist() == [0, 1, 0]
    star = betweenness_centrality(star_graph(5), normalized=False).values
    assert star[0] == 10 and not star[1:].any()
    assert betweenness_centrality(star_graph(5)).values[0] == pytest.approx(1.0)


def test_betweenness_small_graphs():
    assert betweenness_centrality(from_edges([(0, 1)])).values.tolist() == [0, 0]
    assert betweenness_centrality(from_edges([], nodes=[0])).values.tolist() == [0]


def test_betweenness_matches_bruteforce_and_networkx():
    for seed in range(20):
        g = gnp_random_graph(10, 0.3, seed)
        ours = betweenness_centrality(g, normalized=False).values
        brute = np.array([float(x) for x in betweenness_bruteforce(g)])
        assert np.allclose(ours, brute, rtol=0, atol=1e-12)
        ref = nx.betweenness_centrality(to_nx(g), normalized=True)
        normed = betweenness_centrality(g).values
        assert np.allclose(normed, [ref[v] for v in range(g.n)], atol=1e-12)


def test_betweenness_ignores_self_loops():
    g = from_edges([(0, 0), (0, 1), (1, 2)])
    assert betweenness_centrality(g, normalized=False).values.tolist() == [0, 1, 0]


# regression

def test_split_shape_and_determinism():
    train, test = train_test_split(10, 0.2, 4)
    assert len(test) == 2 and len(train) == 8
    assert sorted(np.concatenate([train, test]).tolist()) == list(range(10))
    again = train_test_split(10, 0.2, 4)
    assert np.array_equal(again[1], test)


@pytest.mark.parametrize("n, frac", [(2, 0.2), (10, 0.0), (10, 1.0), (3, 0.9)])
def test_degenerate_split_raises(n, frac):
    with pytest.raises(ValueError):
        train_test_split(n, frac, 0)


def test_exact_linear_target():
    rng = np.random.default_rng(7)
    x = rng.integers(0, 5, size=(40, 3)).astype(float)
    y = 2.0 + x @ np.array([1.0, -0.5, 3.0])
    y -= y.min() - 1
    r = fit_regression(x, y, seed=3)
    assert r.nmse < 1e-10
    assert not r.ridge


def test_constant_target():
    x = np.random.default_rng(0).normal(size=(10, 2))
    r = fit_regression(x, np.full(10, 5.0))
    assert r.nmse == pytest.approx(0.0, abs=1e-12)


def test_rank_deficient_uses_ridge():
    x = np.ones((10, 2))
    coef, ridge = least_squares(np.column_stack([np.ones(10), x]), np.arange(10.0))
    assert ridge
    assert np.all(np.isfinite(coef))


def test_nmse_definition_by_hand():
    rng = np.random.default_rng(1)
    x = rng.normal(size=(30, 2))
    y = rng.uniform(1, 2, size=30)
    r = fit_regression(x, y, seed=5)
    design = np.column_stack([np.ones(30), x])
    coef, *_ = np.linalg.lstsq(design[r.train], y[r.train], rcond=None)
    mse = np.mean((design[r.test] @ coef - y[r.test]) ** 2)
    assert r.mse == pytest.approx(mse, rel=1e-9)
    assert r.nmse == pytest.approx(mse / y[r.test].mean(), rel=1e-9)
    g = fit_regression(x, y, seed=5, normalize="global")
    assert g.nmse == pytest.approx(mse / y.mean(), rel=1e-9)


def test_column_permutation_invariance():
    rng = np.random.default_rng(2)
    x = rng.integers(0, 4, size=(25, 4)).astype(float)
    y = rng.uniform(0.5, 1.5, size=25)
    a = fit_regression(x, y, seed=9).nmse
    b = fit_regression(x[:, [2, 0, 3, 1]], y, seed=9).nmse
    assert a == pytest.approx(b, rel=1e-9)


def test_repeated_regression_seeds():
    x = np.arange(40, dtype=float).reshape(20, 2)
    y = np.linspace(1, 2, 20)
    results = repeated_regression(x, y, repeats=5, seed=10)
    assert [r.seed for r in results] == [10, 11, 12, 13, 14]


def test_regression_errors():
    with pytest.raises(ValueError):
        fit_regression(np.zeros((5, 1)), np.zeros(4))
    with pytest.raises(ValueError):
        fit_regression(np.zeros((5, 1)), np.ones(5), normalize="train")


# PCA

def aligned(a, b):
    return min(np.max(np.abs(a - b)), np.max(np.abs(a + b)))


def test_pca_matches_eigh():
    rng = np.random.default_rng(11)
    x = rng.normal(size=(5, 3))
    res = pca_2d(x)
    c = x - x.mean(axis=0)
    w, v = np.linalg.eigh(c.T @ c / 4)
    for k in range(2):
        ref = c @ v[:, -1 - k]
        assert aligned(res.coords[:, k], ref) < 1e-8
        assert res.variances[k] == pytest.approx(w[-1 - k], rel=1e-8)
    assert not res.degenerate


def test_pca_sign_convention():
    rng = np.random.default_rng(12)
    res = pca_2d(rng.normal(size=(12, 4)))
    for k in range(2):
        v = res.components[k]
        assert v[np.argmax(np.abs(v))] > 0


def test_pca_rank_one():
    t = np.arange(6, dtype=float)
    res = pca_2d(np.column_stack([t, 2 * t]))
    assert res.degenerate
    assert np.allclose(res.coords[:, 1], 0)
    assert np.allclose(np.abs(res.coords[:, 0]), np.abs(t - t.mean()) * math.sqrt(5))


def test_pca_single_column():
    res = pca_2d(np.array([[1.0], [2.0], [4.0]]))
    assert res.degenerate
    assert not res.coords[:, 1].any()


def test_pca_equal_rows_equal_points():
    rng = np.random.default_rng(13)
    base = rng.integers(0, 5, size=(6, 4)).astype(float)
    x = base[[0, 1, 2, 0, 3, 4, 5, 2, 0]]
    res = pca_2d(x)
    assert np.array_equal(res.coords[0], res.coords[3])
    assert np.array_equal(res.coords[0], res.coords[8])
    assert np.array_equal(res.coords[2], res.coords[7])


def test_pca_rejects_single_row():
    with pytest.raises(ValueError):
        pca_2d(np.zeros((1, 3)))


def test_betweenness_exact_mode():
    from fractions import Fraction

    vals = betweenness_centrality(star_graph(4), exact=True).values
    assert vals.dtype == object
    assert vals.tolist() == [Fraction(1)] + [Fraction(0)] * 4
    square = from_edges([(0, 1), (1, 2), (2, 3), (3, 0)])
    assert betweenness_centrality(square, normalized=False, exact=True).values.tolist() == [Fraction(1, 2)] * 4
