"""Loop-heavy kernels with a numba fast path and a pure-numpy fallback.

The vectorized geometry in this package is plain numpy; the kernels here
are the quadratic-cost loops (point deduplication, single-linkage
clustering, nearest-reference assignment) that do not vectorize well.
Set ``CONVEXPROJ_NO_NUMBA=1`` to force the numpy fallback; see
``benchmarks/bench_kernels.py`` for a timing comparison of both paths.
"""

import os

import numpy as np

_DISABLE = os.environ.get("CONVEXPROJ_NO_NUMBA", "").strip().lower() in (
    "1",
    "true",
    "yes",
)

try:
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    _HAVE_NUMBA = False

USE_NUMBA = _HAVE_NUMBA and not _DISABLE


def _dedup_keep_core(points, tol):
    n = points.shape[0]
    keep = np.empty(n, dtype=np.int64)
    n_keep = 0
    tol2 = tol * tol
    for i in range(n):
        is_new = True
        for j in range(n_keep):
            k = keep[j]
            d2 = 0.0
            for c in range(points.shape[1]):
                diff = points[i, c] - points[k, c]
                d2 += diff * diff
            if d2 <= tol2:
                is_new = False
                break
        if is_new:
            keep[n_keep] = i
            n_keep += 1
    return keep[:n_keep]


def _single_linkage_core(points, radius):
    n = points.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    r2 = radius * radius
    current = 0
    stack = np.empty(n, dtype=np.int64)
    for i in range(n):
        if labels[i] >= 0:
            continue
        labels[i] = current
        top = 0
        stack[top] = i
        top += 1
        while top > 0:
            top -= 1
            a = stack[top]
            for b in range(n):
                if labels[b] >= 0:
                    continue
                d2 = 0.0
                for c in range(points.shape[1]):
                    diff = points[a, c] - points[b, c]
                    d2 += diff * diff
                if d2 <= r2:
                    labels[b] = current
                    stack[top] = b
                    top += 1
        current += 1
    return labels


def _assign_nearest_core(points, refs):
    n = points.shape[0]
    idx = np.empty(n, dtype=np.int64)
    dist = np.empty(n, dtype=np.float64)
    for i in range(n):
        best = -1
        best_d2 = np.inf
        for j in range(refs.shape[0]):
            d2 = 0.0
            for c in range(points.shape[1]):
                diff = points[i, c] - refs[j, c]
                d2 += diff * diff
            if d2 < best_d2:
                best_d2 = d2
                best = j
        idx[i] = best
        dist[i] = np.sqrt(best_d2)
    return idx, dist


def _dedup_keep_numpy(points, tol):
    kept = []
    for i in range(points.shape[0]):
        if not kept:
            kept.append(i)
            continue
        d = np.linalg.norm(points[kept] - points[i], axis=1)
        if np.min(d) > tol:
            kept.append(i)
    return np.asarray(kept, dtype=np.int64)


def _single_linkage_numpy(points, radius):
    n = points.shape[0]
    labels = np.full(n, -1, dtype=np.int64)
    current = 0
    for i in range(n):
        if labels[i] >= 0:
            continue
        labels[i] = current
        frontier = [i]
        while frontier:
            a = frontier.pop()
            d = np.linalg.norm(points - points[a], axis=1)
            near = np.flatnonzero((d <= radius) & (labels < 0))
            labels[near] = current
            frontier.extend(near.tolist())
        current += 1
    return labels


def _assign_nearest_numpy(points, refs):
    d = np.linalg.norm(points[:, None, :] - refs[None, :, :], axis=2)
    idx = np.argmin(d, axis=1)
    return idx.astype(np.int64), d[np.arange(points.shape[0]), idx]


if USE_NUMBA:
    _dedup_keep_fast = njit(cache=True)(_dedup_keep_core)
    _single_linkage_fast = njit(cache=True)(_single_linkage_core)
    _assign_nearest_fast = njit(cache=True)(_assign_nearest_core)


def dedup_keep_indices(points: np.ndarray, tol: float) -> np.ndarray:
    """Indices of the first occurrence of each point at tolerance ``tol``."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    if points.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    if USE_NUMBA:
        return _dedup_keep_fast(points, float(tol))
    return _dedup_keep_numpy(points, float(tol))


def single_linkage_labels(points: np.ndarray, radius: float) -> np.ndarray:
    """Single-linkage cluster labels with merge radius ``radius``."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    if points.shape[0] == 0:
        return np.empty(0, dtype=np.int64)
    if USE_NUMBA:
        return _single_linkage_fast(points, float(radius))
    return _single_linkage_numpy(points, float(radius))


def assign_nearest(points: np.ndarray, refs: np.ndarray):
    """Nearest reference index and distance for each point."""
    points = np.ascontiguousarray(points, dtype=np.float64)
    refs = np.ascontiguousarray(refs, dtype=np.float64)
    if points.shape[0] == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.float64)
    if USE_NUMBA:
        return _assign_nearest_fast(points, refs)
    return _assign_nearest_numpy(points, refs)
