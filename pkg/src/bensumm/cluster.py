"""Sentence clustering: Ward agglomeration over cosine distances with
silhouette-based selection of the cluster count.

The merge tree is built with the Lance-Williams recurrence using Ward
coefficients on a precomputed distance matrix (distance = 1 - cosine).
The number of clusters is chosen by maximizing the mean silhouette score
over k in [2, n-1]; documents with fewer than four sentences use fixed
degenerate rules.
"""

from dataclasses import dataclass

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin

from .embed import SentenceVector, cosine_similarity
from .exceptions import DimensionMismatch, InvalidK


@dataclass(frozen=True)
class MergeStep:
    """One agglomeration event: ``left`` and ``right`` fuse into ``new_id``."""

    left: int
    right: int
    cost: float
    new_id: int


@dataclass
class MergeTree:
    """The full merge sequence; singletons are ids 0..n-1, merges get n, n+1, ..."""

    n: int
    merges: list[MergeStep]


@dataclass
class Clustering:
    """Cluster labels in [0, k), numbered by ascending minimum member index."""

    k: int
    labels: list[int]

    def members(self) -> list[list[int]]:
        groups = [[] for _ in range(self.k)]
        for i, label in enumerate(self.labels):
            groups[label].append(i)
        return groups


@dataclass
class SilhouetteReport:
    """Per-sample silhouette components and their mean.

    ``intra`` is the mean distance to co-cluster members, ``nearest`` the
    mean distance to the closest other cluster; samples in singleton
    clusters score 0 by convention.
    """

    intra: np.ndarray
    nearest: np.ndarray
    scores: np.ndarray
    mean_score: float


def pairwise_distances(vectors: list[SentenceVector]) -> np.ndarray:
    """Symmetric cosine-distance matrix (1 - cosine), clamped to [0, 2]."""
    n = len(vectors)
    d = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            dist = 1.0 - cosine_similarity(vectors[i], vectors[j])
            dist = min(max(dist, 0.0), 2.0)
            d[i, j] = d[j, i] = dist
    return d


def _check_distance_matrix(m):
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"distance matrix must be square, got {m.shape}")
    return m


def ward_agglomerate(m) -> MergeTree:
    """Build the Ward merge tree from a distance matrix.

    At every step the active pair with the smallest inter-cluster distance
    merges (ties broken by the smallest (left, right) id pair), and the
    distances to the merged cluster are updated with the Lance-Williams
    recurrence using Ward coefficients:

        d(k, i+j)^2 = ((n_i + n_k) d(k,i)^2 + (n_j + n_k) d(k,j)^2
                       - n_k d(i,j)^2) / (n_i + n_j + n_k)
    """
    m = _check_distance_matrix(m)
    n = m.shape[0]
    if n < 2:
        return MergeTree(n, [])

    # Distances between active clusters, keyed by frozenset-free ordered pair.
    dist = {(i, j): m[i, j] for i in range(n) for j in range(i + 1, n)}
    sizes = {i: 1 for i in range(n)}
    active = list(range(n))
    merges = []

    for step in range(n - 1):
        best = None
        for a_idx in range(len(active)):
            for b_idx in range(a_idx + 1, len(active)):
                pair = (active[a_idx], active[b_idx])
                cost = dist[pair]
                if best is None or cost < best[0]:
                    best = (cost, pair)
        cost, (left, right) = best
        new_id = n + step
        merges.append(MergeStep(left, right, cost, new_id))

        active.remove(left)
        active.remove(right)
        n_i, n_j = sizes.pop(left), sizes.pop(right)
        d_ij_sq = dist.pop((left, right)) ** 2
        for other in active:
            n_k = sizes[other]
            d_ki_sq = dist.pop((min(left, other), max(left, other))) ** 2
            d_kj_sq = dist.pop((min(right, other), max(right, other))) ** 2
            radicand = (
                (n_i + n_k) * d_ki_sq
                + (n_j + n_k) * d_kj_sq
                - n_k * d_ij_sq
            ) / (n_i + n_j + n_k)
            # Guard against tiny negative radicands from floating error.
            dist[(other, new_id)] = np.sqrt(max(radicand, 0.0))
        sizes[new_id] = n_i + n_j
        active.append(new_id)

    return MergeTree(n, merges)


def cut_tree(tree: MergeTree, k: int) -> Clustering:
    """Clustering obtained by undoing the last k-1 merges of the tree."""
    n = tree.n
    if not 1 <= k <= n:
        raise InvalidK(f"k={k} out of range [1, {n}]")
    members = {i: [i] for i in range(n)}
    for step in tree.merges[: n - k]:
        merged = members.pop(step.left) + members.pop(step.right)
        members[step.new_id] = merged
    groups = sorted(members.values(), key=min)
    labels = [0] * n
    for label, group in enumerate(groups):
        for i in group:
            labels[i] = label
    return Clustering(len(groups), labels)


def silhouette(clustering: Clustering, m) -> SilhouetteReport:
    """Per-sample silhouette scores (nearest - intra) / max(nearest, intra).

    Samples in singleton clusters score 0, as do samples whose intra and
    nearest distances are both 0.
    """
    m = _check_distance_matrix(m)
    n = m.shape[0]
    k = clustering.k
    if n < 3 or not 2 <= k <= n - 1:
        raise InvalidK(f"silhouette needs 2 <= k <= n-1 with n >= 3, got k={k}, n={n}")

    groups = clustering.members()
    intra = np.zeros(n)
    nearest = np.zeros(n)
    scores = np.zeros(n)
    for i in range(n):
        own = groups[clustering.labels[i]]
        if len(own) == 1:
            continue  # singleton: score stays 0 by convention
        intra[i] = sum(m[i, j] for j in own if j != i) / (len(own) - 1)
        nearest[i] = min(
            sum(m[i, j] for j in group) / len(group)
            for label, group in enumerate(groups)
            if label != clustering.labels[i]
        )
        denom = max(intra[i], nearest[i])
        if denom > 0:
            scores[i] = (nearest[i] - intra[i]) / denom
    return SilhouetteReport(intra, nearest, scores, float(np.mean(scores)))


def _select_from_matrix(m) -> Clustering:
    n = m.shape[0]
    if n <= 2:
        return Clustering(n, list(range(n)))
    tree = ward_agglomerate(m)
    if n == 3:
        return cut_tree(tree, 2)
    best = None
    for k in range(2, n):
        clustering = cut_tree(tree, k)
        report = silhouette(clustering, m)
        if best is None or report.mean_score > best[0]:
            best = (report.mean_score, clustering)
    return best[1]


def select_clustering(vectors: list[SentenceVector]) -> Clustering:
    """Cluster sentence vectors, choosing k by maximal mean silhouette.

    For n >= 4 every k in [2, n-1] is tried (ties go to the smaller k);
    n <= 2 gives singletons and n == 3 forces k = 2.
    """
    return _select_from_matrix(pairwise_distances(vectors))


class WardSilhouetteClustering(BaseEstimator, ClusterMixin):
    """Agglomerative sentence clustering with automatic cluster count.

    Scikit-learn style estimator over the module's functional core: ``fit``
    accepts either a (n_samples, dim) array of sentence vectors
    (``metric="cosine"``) or a precomputed distance matrix
    (``metric="precomputed"``), and exposes ``labels_``, ``n_clusters_``
    and the selected clustering's mean silhouette.

    >>> X = [[1.0, 0.0], [0.9, 0.1], [0.0, 1.0], [0.1, 0.9]]
    >>> WardSilhouetteClustering().fit_predict(X)
    array([0, 0, 1, 1])
    """

    def __init__(self, metric="cosine"):
        self.metric = metric

    def fit(self, X, y=None):
        if self.metric not in ("cosine", "precomputed"):
            raise ValueError(f"unknown metric {self.metric!r}")
        X = np.asarray(X, dtype=float)
        if X.ndim != 2:
            raise ValueError("expected a 2d array")
        if self.metric == "precomputed":
            m = _check_distance_matrix(X)
        else:
            m = pairwise_distances([SentenceVector(row) for row in X])
        clustering = _select_from_matrix(m)
        self.labels_ = np.array(clustering.labels)
        self.n_clusters_ = clustering.k
        self.distances_ = m
        if 3 <= len(clustering.labels) and 2 <= clustering.k <= len(clustering.labels) - 1:
            self.silhouette_score_ = silhouette(clustering, m).mean_score
        else:
            self.silhouette_score_ = 0.0
        return self
