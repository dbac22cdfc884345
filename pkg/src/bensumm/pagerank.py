"""Damped PageRank power iteration over a weighted adjacency matrix."""

import numpy as np


def pagerank(weights, damping=0.85, tol=1e-6, max_iter=100):
    """Stationary scores of a random walk with teleportation.

    ``weights[i, j]`` is the weight of the edge i -> j (pass a symmetric
    matrix for undirected graphs).  Rows without outgoing weight spread
    their mass uniformly.  Scores sum to 1.
    """
    w = np.asarray(weights, dtype=float)
    n = w.shape[0]
    if n == 0:
        return np.zeros(0)
    out = w.sum(axis=1)
    dangling = out == 0
    transition = np.zeros_like(w)
    nonzero = ~dangling
    transition[nonzero] = w[nonzero] / out[nonzero, None]

    scores = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        spread = transition.T @ scores + scores[dangling].sum() / n
        updated = (1.0 - damping) / n + damping * spread
        if np.abs(updated - scores).sum() < tol:
            scores = updated
            break
        scores = updated
    return scores
