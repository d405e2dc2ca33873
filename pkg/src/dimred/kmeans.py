"""K-means clustering (Lloyd iterations, multi-restart) and the silhouette index.

The silhouette index is the consistency metric used everywhere in this
package: per sample, s = (b - a) / max(a, b) where a is the mean distance to
the other members of the sample's own cluster and b is the smallest mean
distance to any other cluster. Distances are Euclidean throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.spatial.distance import cdist

from .errors import MetricUndefinedError, ParameterError


@dataclass(frozen=True, eq=False)
class ClusteringResult:
    """Outcome of one k-means fit, including per-sample silhouettes."""

    labels: np.ndarray
    centroids: np.ndarray
    inertia: float
    sample_silhouettes: np.ndarray
    mean_silhouette: float
    k: int
    seed: int


def silhouette(data, labels) -> tuple[np.ndarray, float]:
    """Per-sample silhouette values and their arithmetic mean.

    ``labels`` must contain integer cluster indices in [0, k) with every
    cluster nonempty and at least 2 clusters present. A sample alone in its
    cluster gets s = 0.
    """
    data = np.asarray(data, dtype=np.float64)
    labels = np.asarray(labels)
    if labels.shape != (data.shape[0],):
        raise ParameterError("labels must have one entry per sample")
    if labels.size and not np.issubdtype(labels.dtype, np.integer):
        raise ParameterError("cluster indices must be integers")
    if labels.size and labels.min() < 0:
        raise ParameterError("cluster indices must be nonnegative")
    k = int(labels.max()) + 1 if labels.size else 0
    counts = np.bincount(labels, minlength=k)
    if np.any(counts == 0):
        empty = np.flatnonzero(counts == 0)
        raise ParameterError(f"empty cluster index {empty[0]} (labels must cover [0, k))")
    if k < 2:
        raise MetricUndefinedError("silhouette needs at least 2 clusters")

    n = data.shape[0]
    dist = cdist(data, data)
    # cluster_sums[i, c] = sum of distances from sample i to members of cluster c
    membership = np.zeros((n, k))
    membership[np.arange(n), labels] = 1.0
    cluster_sums = dist @ membership

    own = counts[labels]
    idx = np.arange(n)
    means = cluster_sums / counts
    means[idx, labels] = np.inf  # exclude the own cluster from the b(i) minimum
    b = means.min(axis=1)
    a = np.zeros(n)
    multi = own > 1
    a[multi] = cluster_sums[idx, labels][multi] / (own[multi] - 1)
    denom = np.maximum(a, b)
    s = np.zeros(n)
    defined = multi & (denom > 0.0)  # singletons (and all-coincident points) get 0
    s[defined] = (b[defined] - a[defined]) / denom[defined]
    return s, float(np.mean(s))


def _pp_init(data, k, rng) -> np.ndarray:
    """Distance-weighted (k-means++-style) centroid seeding."""
    n = data.shape[0]
    centroids = np.empty((k, data.shape[1]))
    centroids[0] = data[rng.integers(n)]
    closest = cdist(data, centroids[:1], "sqeuclidean")[:, 0]
    for j in range(1, k):
        total = closest.sum()
        if total > 0.0:
            idx = rng.choice(n, p=closest / total)
        else:
            idx = rng.integers(n)
        centroids[j] = data[idx]
        d = cdist(data, centroids[j : j + 1], "sqeuclidean")[:, 0]
        np.minimum(closest, d, out=closest)
    return centroids


def _assign(data, centroids) -> tuple[np.ndarray, np.ndarray]:
    d2 = cdist(data, centroids, "sqeuclidean")
    labels = d2.argmin(axis=1)
    return labels, d2[np.arange(data.shape[0]), labels]


def _fix_empty(data, labels, own_d2, k) -> np.ndarray:
    """Give every empty cluster the point currently farthest from its centroid.

    Points are only stolen from clusters with more than one member, so the
    fix never creates a new empty cluster.
    """
    counts = np.bincount(labels, minlength=k)
    if not np.any(counts == 0):
        return labels
    labels = labels.copy()
    own_d2 = own_d2.copy()
    for c in np.flatnonzero(counts == 0):
        candidates = np.where(counts[labels] > 1, own_d2, -np.inf)
        idx = int(candidates.argmax())
        counts[labels[idx]] -= 1
        labels[idx] = c
        counts[c] = 1
        own_d2[idx] = 0.0
    return labels


def _lloyd(data, k, rng, max_iter, tol):
    centroids = _pp_init(data, k, rng)
    for _ in range(max_iter):
        labels, own_d2 = _assign(data, centroids)
        labels = _fix_empty(data, labels, own_d2, k)
        new_centroids = np.empty_like(centroids)
        for c in range(k):
            new_centroids[c] = data[labels == c].mean(axis=0)
        shift = np.sqrt(((new_centroids - centroids) ** 2).sum(axis=1)).max()
        centroids = new_centroids
        if shift < tol:
            break
    labels, own_d2 = _assign(data, centroids)
    labels = _fix_empty(data, labels, own_d2, k)
    inertia = float(((data - centroids[labels]) ** 2).sum())
    return labels, centroids, inertia


def kmeans_fit(data, k: int, seed: int, restarts: int = 10,
               max_iter: int = 300, tol: float = 1e-4) -> ClusteringResult:
    """Best-of-``restarts`` Lloyd k-means, deterministic for fixed arguments.

    Each restart r draws its own generator from (seed, r), seeds centroids
    with distance-weighted sampling, and iterates until the largest centroid
    displacement falls below ``tol`` or ``max_iter`` is reached. The restart
    with the lowest inertia wins; silhouettes are computed once on its final
    assignment. The returned result never contains an empty cluster.
    """
    data = np.asarray(data, dtype=np.float64)
    if data.ndim != 2 or data.shape[0] == 0:
        raise ParameterError("data must be a nonempty 2-D matrix")
    if not np.isfinite(data).all():
        raise ParameterError("data contains non-finite entries")
    if k < 2:
        raise ParameterError("k must be at least 2")
    if k > data.shape[0]:
        raise ParameterError(f"k={k} exceeds {data.shape[0]} samples")
    if restarts < 1:
        raise ParameterError("restarts must be at least 1")
    if np.unique(data, axis=0).shape[0] < k:
        raise ParameterError(f"fewer than k={k} distinct points")

    best = None
    for r in range(restarts):
        rng = np.random.default_rng(np.random.SeedSequence([seed % (2**63), r]))
        labels, centroids, inertia = _lloyd(data, k, rng, max_iter, tol)
        if best is None or inertia < best[0]:
            best = (inertia, labels, centroids)

    inertia, labels, centroids = best
    sample_s, mean_s = silhouette(data, labels)
    return ClusteringResult(
        labels=labels,
        centroids=centroids,
        inertia=inertia,
        sample_silhouettes=sample_s,
        mean_silhouette=mean_s,
        k=k,
        seed=seed,
    )
