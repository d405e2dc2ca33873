"""Independent oracles and data generators used across the test suite.

Everything here is deliberately written the slow, obvious way (plain loops,
closed-form roots, exhaustive enumeration) so it shares no code path with
the implementations it checks.
"""

from __future__ import annotations

import math
from itertools import product

import numpy as np

from dimred import Dataset


def brute_silhouette(data, labels):
    """Per-sample silhouettes by direct evaluation of the defining formulas."""
    data = [list(map(float, row)) for row in np.asarray(data)]
    labels = list(np.asarray(labels))
    n = len(data)
    out = []
    for i in range(n):
        mine = labels[i]
        same = [math.dist(data[i], data[j]) for j in range(n)
                if labels[j] == mine and j != i]
        if not same:
            out.append(0.0)
            continue
        a = sum(same) / len(same)
        b = math.inf
        for other in sorted(set(labels)):
            if other == mine:
                continue
            dists = [math.dist(data[i], data[j]) for j in range(n) if labels[j] == other]
            b = min(b, sum(dists) / len(dists))
        denom = max(a, b)
        out.append((b - a) / denom if denom > 0 else 0.0)
    return out


def exhaustive_best_inertia(data, k):
    """Globally optimal k-means inertia by enumerating every assignment."""
    data = np.asarray(data, dtype=float)
    n = data.shape[0]
    best = math.inf
    for assignment in product(range(k), repeat=n):
        if len(set(assignment)) != k:
            continue
        labels = np.array(assignment)
        inertia = 0.0
        for c in range(k):
            members = data[labels == c]
            center = members.mean(axis=0)
            inertia += ((members - center) ** 2).sum()
        best = min(best, inertia)
    return best


def charpoly_eigvals_2x2(m):
    """Descending eigenvalues of a symmetric 2x2 from the quadratic formula."""
    a, b = float(m[0][0]), float(m[0][1])
    d = float(m[1][1])
    disc = math.sqrt((a - d) ** 2 + 4.0 * b * b)
    return [(a + d + disc) / 2.0, (a + d - disc) / 2.0]


def charpoly_eigvals_3x3(m):
    """Descending eigenvalues of a symmetric 3x3 via the trigonometric solution
    of the characteristic cubic."""
    m = [[float(x) for x in row] for row in m]
    p1 = m[0][1] ** 2 + m[0][2] ** 2 + m[1][2] ** 2
    if p1 == 0.0:
        return sorted((m[0][0], m[1][1], m[2][2]), reverse=True)
    q = (m[0][0] + m[1][1] + m[2][2]) / 3.0
    p2 = (m[0][0] - q) ** 2 + (m[1][1] - q) ** 2 + (m[2][2] - q) ** 2 + 2.0 * p1
    p = math.sqrt(p2 / 6.0)
    b = [[(m[i][j] - (q if i == j else 0.0)) / p for j in range(3)] for i in range(3)]
    det_b = (
        b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
        - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
        + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0])
    )
    r = min(1.0, max(-1.0, det_b / 2.0))
    phi = math.acos(r) / 3.0
    eig1 = q + 2.0 * p * math.cos(phi)
    eig3 = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    eig2 = 3.0 * q - eig1 - eig3
    return sorted((eig1, eig2, eig3), reverse=True)


def hadamard_design(sigmas):
    """4-sample data whose sample covariance is diag(sigmas**2) up to rounding.

    Columns are mutually orthogonal, zero-mean Hadamard columns scaled so
    that column j has sample variance sigmas[j]**2.
    """
    h = np.array([
        [1.0, 1.0, 1.0],
        [1.0, -1.0, -1.0],
        [-1.0, 1.0, -1.0],
        [-1.0, -1.0, 1.0],
    ])
    return h * (np.asarray(sigmas) * np.sqrt(3.0) / 2.0)


SYMMETRIC_FIXTURES_2X2 = [
    [[4.0, 0.0], [0.0, 1.0]],
    [[2.0, 1.0], [1.0, 2.0]],
    [[1.0, -3.0], [-3.0, 5.0]],
    [[0.0, 1e-3], [1e-3, 0.0]],
]

SYMMETRIC_FIXTURES_3X3 = [
    [[4.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 0.25]],
    [[2.0, 1.0, 0.0], [1.0, 3.0, 1.0], [0.0, 1.0, 2.0]],
    [[5.0, -2.0, 0.5], [-2.0, 1.0, 0.3], [0.5, 0.3, 4.0]],
    [[1.0, 1.0, 1.0], [1.0, 1.0, 1.0], [1.0, 1.0, 1.0]],
]


def powerset_subsets(n):
    """All index subsets of size >= 2, enumerated by bitmask."""
    out = set()
    for mask in range(1, 2**n):
        subset = tuple(i for i in range(n) if mask & (1 << i))
        if len(subset) >= 2:
            out.add(subset)
    return out


def make_blobs_with_noise(seed, n_samples=60, n_noise=2, spread=0.35):
    """Three well-separated blobs in 3 informative columns plus uniform noise.

    Constructed so that (a) informative features should outrank noise
    features in any sane importance ranking and (b) clustering only the
    informative columns is more consistent than clustering everything.
    """
    rng = np.random.default_rng(seed)
    centers = np.array([[0.0, 0.0, 0.0], [8.0, 8.0, 0.0], [0.0, 8.0, 8.0]])
    per = n_samples // 3
    informative = np.vstack([
        center + rng.normal(scale=spread, size=(per, 3)) for center in centers
    ])
    noise = rng.uniform(0.0, 8.0, size=(informative.shape[0], n_noise))
    values = np.hstack([informative, noise])
    names = [f"inf{i + 1}" for i in range(3)] + [f"noise{i + 1}" for i in range(n_noise)]
    ids = [f"s{i:03d}" for i in range(values.shape[0])]
    return Dataset(ids=ids, feature_names=names, values=values)


def make_dataset(values, names=None):
    values = np.asarray(values, dtype=float)
    if names is None:
        names = [f"f{i + 1}" for i in range(values.shape[1])]
    ids = [f"r{i}" for i in range(values.shape[0])]
    return Dataset(ids=ids, feature_names=names, values=values)


def write_dataset_csv(ds, path):
    lines = ["id," + ",".join(ds.feature_names)]
    for row_id, row in zip(ds.ids, ds.values):
        lines.append(row_id + "," + ",".join(repr(float(v)) for v in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
