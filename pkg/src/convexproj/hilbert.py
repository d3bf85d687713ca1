"""Hilbert metric, metric balls, and translation length."""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .domains import ConvexDomain, _rng, _unit_rows, ray_hits, sphere_directions
from .errors import DomainNotPreservedError, InvalidInputError, NotInteriorError
from .projective import ProjMap, ProjPoint, apply_affine_batch


@dataclass(frozen=True)
class HilbertPointPair:
    """Interior pair with its chord endpoints, ordered s1, p1, p2, s2.

    Either endpoint may be None, marking a chord that exits through a
    recession direction; the matching distance factor degenerates to 1.
    """

    p1: np.ndarray
    p2: np.ndarray
    s1: Optional[np.ndarray]
    s2: Optional[np.ndarray]


def _lex_greater(P: np.ndarray, Q: np.ndarray) -> np.ndarray:
    """Rowwise lexicographic P > Q (used to order pairs canonically)."""
    out = np.zeros(P.shape[0], dtype=bool)
    decided = np.zeros(P.shape[0], dtype=bool)
    for c in range(P.shape[1]):
        gt = ~decided & (P[:, c] > Q[:, c])
        lt = ~decided & (P[:, c] < Q[:, c])
        out |= gt
        decided |= gt | lt
    return out


def chord(domain: ConvexDomain, p1, p2) -> HilbertPointPair:
    p1 = np.asarray(p1, dtype=float).ravel()
    p2 = np.asarray(p2, dtype=float).ravel()
    m = np.linalg.norm(p2 - p1)
    if m < 1e-14 * (1.0 + np.linalg.norm(p1)):
        return HilbertPointPair(p1=p1, p2=p2, s1=None, s2=None)
    u = (p2 - p1) / m
    t_f = float(ray_hits(domain, p1, u[None, :])[0])
    t_b = float(ray_hits(domain, p1, -u[None, :])[0])
    s1 = None if not np.isfinite(t_b) else p1 - t_b * u
    s2 = None if not np.isfinite(t_f) else p1 + t_f * u
    return HilbertPointPair(p1=p1, p2=p2, s1=s1, s2=s2)


def hilbert_distance_batch(domain: ConvexDomain, P, Q) -> np.ndarray:
    """Hilbert distances for row pairs of P and Q (interior points).

    The two chord factors are the cross-ratio pieces in signed affine
    parameters; a factor with its endpoint in a recession direction takes
    its limit value 1. Arguments are canonically ordered first so the
    result is bitwise symmetric.
    """
    P = np.atleast_2d(np.asarray(P, dtype=float))
    Q = np.atleast_2d(np.asarray(Q, dtype=float))
    if P.shape != Q.shape:
        raise InvalidInputError("point arrays must have matching shapes")
    swap = _lex_greater(P, Q)
    Ps = np.where(swap[:, None], Q, P)
    Qs = np.where(swap[:, None], P, Q)
    if not np.all(domain.contains(Ps)) or not np.all(domain.contains(Qs)):
        raise NotInteriorError("Hilbert distance needs interior points")
    D = Qs - Ps
    m = np.linalg.norm(D, axis=1)
    out = np.zeros(P.shape[0])
    far = m > 1e-14 * (1.0 + np.linalg.norm(Ps, axis=1))
    if far.any():
        U = D[far] / m[far, None]
        t_f = ray_hits(domain, Ps[far], U)
        t_b = ray_hits(domain, Ps[far], -U)
        mm = m[far]
        fwd = np.where(np.isinf(t_f), 1.0, t_f / np.maximum(t_f - mm, 1e-300))
        bwd = np.where(np.isinf(t_b), 1.0, (t_b + mm) / t_b)
        out[far] = np.log(fwd * bwd)
    return out


def hilbert_distance(domain: ConvexDomain, p1, p2) -> float:
    """Hilbert distance between two interior points."""
    p1 = np.asarray(p1, dtype=float).ravel()
    p2 = np.asarray(p2, dtype=float).ravel()
    return float(hilbert_distance_batch(domain, p1[None, :], p2[None, :])[0])


def sample_hilbert_ball(
    domain: ConvexDomain, radius: float, count: int, seed=0
) -> np.ndarray:
    """Samples of the Hilbert ball around the basepoint.

    A direction is drawn, then a point at a uniform Hilbert radius is
    placed on its chord by inverting the chord cross-ratio.
    """
    rng = _rng(seed)
    U = sphere_directions(domain.dim, count, rng)
    r = rng.uniform(0.0, radius, size=count)
    t_f = ray_hits(domain, domain.basepoint, U)
    t_b = ray_hits(domain, domain.basepoint, -U)
    e = np.exp(r)
    tf = np.where(np.isinf(t_f), 1e18, t_f)
    tb = np.where(np.isinf(t_b), 1e18, t_b)
    s = tb * tf * (e - 1.0) / (tf + e * tb)
    return domain.basepoint + s[:, None] * U


def check_preserves(domain: ConvexDomain, g: ProjMap, count: int = 200, seed=0):
    """Sampled verification that g maps the domain into itself (both ways)."""
    from .domains import sample_interior

    X = sample_interior(domain, count, seed=seed)
    for M in (g, g.inverse()):
        Y, in_chart = apply_affine_batch(M, X)
        if not np.all(in_chart) or not np.all(domain.contains(Y)):
            raise DomainNotPreservedError(
                f"map does not preserve the domain on {count} samples"
            )


def translation_length_spectral(g: ProjMap) -> float:
    """log of the ratio of extreme eigenvalue moduli."""
    if not g.is_invertible:
        raise InvalidInputError("translation length needs an invertible map")
    ev = np.linalg.eigvals(g.matrix)
    mod = np.abs(ev)
    return float(np.log(mod.max() / mod.min()))


def translation_length_empirical(
    domain: ConvexDomain,
    g: ProjMap,
    sample_budget: int = 20000,
    seed=0,
    radius_schedule=(1, 2, 4, 8, 16, 32),
) -> float:
    """Sampled infimum of x -> d(x, g x) over Hilbert balls of growing radius."""
    check_preserves(domain, g, seed=seed)
    rng = _rng(seed)
    per = max(1, sample_budget // len(radius_schedule))
    best = np.inf
    for radius in radius_schedule:
        X = sample_hilbert_ball(domain, radius, per, seed=rng)
        Y, in_chart = apply_affine_batch(g, X)
        ok = in_chart & domain.contains(Y)
        if not ok.any():
            continue
        d = hilbert_distance_batch(domain, X[ok], Y[ok])
        best = min(best, float(np.min(d)))
    return best
