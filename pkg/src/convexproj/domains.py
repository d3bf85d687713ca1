"""Convex domains as vectorized membership oracles.

A domain is an open convex subset of R^n given by a predicate that
accepts arrays of shape (..., n). Boundary probing is done with rays
from interior points (doubling plus bisection); rays that survive past
ESCAPE_T are treated as recession directions. Faces, supporting
hyperplanes, conic-face certificates and convex sums are all built on
that single primitive.
"""

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from .errors import (
    InvalidInputError,
    NotInteriorError,
    NotOnBoundaryError,
    OverlappingSupportsError,
    UncertifiedError,
)
from .projective import Hyperplane, ProjMap, ProjPoint

ESCAPE_T = 1e9        # ray parameter declared a recession direction
RAY_REL_TOL = 1e-12   # bisection stops at |dt| < RAY_REL_TOL * (1 + t)
BOUNDARY_TOL = 1e-9   # membership flip distance that counts as "on the boundary"

# Face probing: candidate directions come from local boundary samples;
# a candidate is accepted when a short segment through p stays within
# FACE_PROX_TOL of the boundary. FACE_PROX_TOL is well above the ray
# localization error (~1e-11) and well below the sagitta of a curvature
# O(1) arc at FACE_SEG_LEN offset (~5e-9), which is what separates flats
# from strictly convex boundary at desk scale.
FACE_SEG_LEN = 1e-4
FACE_PROX_TOL = 1e-10
FACE_RANK_TOL = 1e-6


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def _unit_rows(V: np.ndarray) -> np.ndarray:
    n = np.linalg.norm(V, axis=-1, keepdims=True)
    return V / np.where(n == 0, 1.0, n)


def sphere_directions(n: int, count: int, seed=0) -> np.ndarray:
    """Deterministic quasi-uniform unit directions in R^n."""
    if n == 1:
        reps = (count + 1) // 2
        return np.tile(np.array([[1.0], [-1.0]]), (reps, 1))[:count]
    rng = _rng(seed)
    V = rng.standard_normal((count, n))
    return _unit_rows(V)


@dataclass
class ConvexDomain:
    """Open convex domain with a vectorized membership oracle.

    membership maps arrays of shape (..., dim) to booleans of shape
    (...). boundary_gradient, when present, returns outward normals at
    boundary points. bounded_chart is an optional projective map sending
    the domain onto a bounded one (used for limit sets and chart
    distances). Instances are immutable by convention; membership must be
    re-entrant.
    """

    dim: int
    basepoint: np.ndarray
    membership: Callable[[np.ndarray], np.ndarray]
    boundary_gradient: Optional[Callable[[np.ndarray], np.ndarray]] = None
    tag: str = ""
    bounded_chart: Optional[ProjMap] = None

    def __post_init__(self):
        self.basepoint = np.asarray(self.basepoint, dtype=float).ravel()
        if self.basepoint.size != self.dim:
            raise InvalidInputError("basepoint dimension mismatch")
        if not bool(self.contains(self.basepoint)):
            raise InvalidInputError("basepoint must satisfy membership")

    def contains(self, X) -> np.ndarray:
        return self.membership(np.asarray(X, dtype=float))

    def transform(self, h: ProjMap) -> "ConvexDomain":
        """Image domain under an invertible projective map.

        Membership of the image is tested by pulling points back through
        h^{-1}; points pulled to the hyperplane at infinity are outside.
        The transformed basepoint must stay in the affine chart.
        """
        if not h.is_invertible:
            raise InvalidInputError("transform requires an invertible map")
        Minv = np.linalg.inv(h.matrix)
        base = self.membership
        n = self.dim

        def member(X):
            X = np.asarray(X, dtype=float)
            Xh = np.concatenate([X, np.ones(X.shape[:-1] + (1,))], axis=-1)
            Z = Xh @ Minv.T
            w = Z[..., -1]
            scale = np.linalg.norm(Z, axis=-1)
            finite = np.abs(w) > 1e-13 * np.maximum(scale, 1e-300)
            safe = np.where(finite, w, 1.0)
            Y = Z[..., :-1] / safe[..., None]
            return finite & base(Y)

        bh = np.append(self.basepoint, 1.0) @ h.matrix.T
        if abs(bh[-1]) <= 1e-13 * np.linalg.norm(bh):
            raise InvalidInputError("basepoint maps to infinity under transform")
        chart = None
        if self.bounded_chart is not None:
            chart = ProjMap(self.bounded_chart.matrix @ Minv)
        return ConvexDomain(
            dim=n,
            basepoint=bh[:-1] / bh[-1],
            membership=member,
            tag=f"{self.tag}|transformed" if self.tag else "transformed",
            bounded_chart=chart,
        )

    def to_bounded(self) -> "ConvexDomain":
        if self.bounded_chart is None:
            raise InvalidInputError("domain has no bounded chart")
        return self.transform(self.bounded_chart)

    def chart_point(self, X) -> np.ndarray:
        """Coordinates of affine points in the bounded chart."""
        if self.bounded_chart is None:
            raise InvalidInputError("domain has no bounded chart")
        X = np.asarray(X, dtype=float)
        Xh = np.concatenate([X, np.ones(X.shape[:-1] + (1,))], axis=-1)
        Y = Xh @ self.bounded_chart.matrix.T
        return Y[..., :-1] / Y[..., -1:]


@dataclass(frozen=True)
class BoundaryHit:
    """Result of shooting a ray at the boundary."""

    t: float
    point: Optional[np.ndarray]

    @property
    def infinite(self) -> bool:
        return not np.isfinite(self.t)


@dataclass(frozen=True)
class FaceDescriptor:
    """Face through a boundary point: projective span and dimension."""

    representative: ProjPoint
    span_basis: tuple
    dim: int
    directions: np.ndarray = field(default_factory=lambda: np.zeros((0, 0)))


def ray_hits(
    domain: ConvexDomain,
    x: np.ndarray,
    U: np.ndarray,
    escape: float = ESCAPE_T,
    rel_tol: float = RAY_REL_TOL,
    check_interior: bool = True,
) -> np.ndarray:
    """Boundary parameters t* for rays x + t u, vectorized over rows of U.

    Returns +inf for directions that survive past ``escape``. ``x`` may be
    a single point or one row per direction.
    """
    U = np.atleast_2d(np.asarray(U, dtype=float))
    U = _unit_rows(U)
    x = np.asarray(x, dtype=float)
    if x.ndim == 1:
        X = np.broadcast_to(x, U.shape)
    else:
        X = x
    if check_interior and not np.all(domain.contains(X)):
        raise NotInteriorError("ray origin is not interior")
    m = U.shape[0]
    lo = np.zeros(m)
    hi = np.ones(m)
    inf_mask = np.zeros(m, dtype=bool)
    for _ in range(64):
        active = ~inf_mask
        if not active.any():
            break
        inside = np.zeros(m, dtype=bool)
        inside[active] = domain.contains(X[active] + hi[active, None] * U[active])
        if not inside.any():
            break
        lo = np.where(inside, hi, lo)
        hi = np.where(inside, hi * 2.0, hi)
        inf_mask |= inside & (hi > escape)
    fin = ~inf_mask
    for _ in range(200):
        gap = hi - lo
        todo = fin & (gap > rel_tol * (1.0 + hi))
        if not todo.any():
            break
        mid = 0.5 * (lo + hi)
        inside = np.zeros(m, dtype=bool)
        inside[todo] = domain.contains(X[todo] + mid[todo, None] * U[todo])
        lo = np.where(todo & inside, mid, lo)
        hi = np.where(todo & ~inside, mid, hi)
    return np.where(inf_mask, np.inf, 0.5 * (lo + hi))


def boundary_ray(domain: ConvexDomain, x, u) -> BoundaryHit:
    """First boundary point on the ray x + t u, or a recession marker."""
    x = np.asarray(x, dtype=float).ravel()
    u = np.asarray(u, dtype=float).ravel()
    nu = np.linalg.norm(u)
    if nu == 0:
        raise InvalidInputError("zero direction")
    t = float(ray_hits(domain, x, u[None, :] / nu)[0])
    if not np.isfinite(t):
        return BoundaryHit(t=np.inf, point=None)
    return BoundaryHit(t=t, point=x + t * u / nu)


def distance_to_boundary(domain: ConvexDomain, Q: np.ndarray) -> np.ndarray:
    """Distance from each point to the boundary along its basepoint ray."""
    Q = np.atleast_2d(np.asarray(Q, dtype=float))
    D = Q - domain.basepoint
    r = np.linalg.norm(D, axis=1)
    out = np.full(Q.shape[0], np.inf)
    ok = r > 1e-300
    if ok.any():
        t = ray_hits(domain, domain.basepoint, D[ok] / r[ok, None])
        out[ok] = np.abs(t - r[ok])
    bad = ~ok
    if bad.any():
        u0 = np.zeros(domain.dim)
        u0[0] = 1.0
        t0 = float(ray_hits(domain, domain.basepoint, u0[None, :])[0])
        out[bad] = t0
    return out


def on_boundary(domain: ConvexDomain, Q, tol: float = BOUNDARY_TOL) -> np.ndarray:
    d = distance_to_boundary(domain, Q)
    return d < tol


def in_closure(domain: ConvexDomain, Q, tol: float = BOUNDARY_TOL) -> np.ndarray:
    Q = np.atleast_2d(np.asarray(Q, dtype=float))
    return domain.contains(Q) | on_boundary(domain, Q, tol)


def sample_interior(
    domain: ConvexDomain, count: int, seed=0, radius_cap: float = 50.0
) -> np.ndarray:
    """Interior samples: random fractions of boundary rays from the basepoint.

    Star-shaped sampling with respect to the basepoint covers a convex
    domain exactly; recession directions are capped at ``radius_cap``.
    """
    rng = _rng(seed)
    U = sphere_directions(domain.dim, count, rng)
    t = ray_hits(domain, domain.basepoint, U)
    t = np.minimum(t, radius_cap * (1.0 + np.linalg.norm(domain.basepoint)))
    s = rng.uniform(0.02, 0.98, size=count)
    return domain.basepoint + (s * t)[:, None] * U


def sample_boundary(domain: ConvexDomain, count: int, seed=0):
    """Finite boundary samples from a fan of basepoint rays.

    Returns (points, fraction_escaped); directions that never exit are
    skipped and only counted in the fraction.
    """
    rng = _rng(seed)
    U = sphere_directions(domain.dim, count, rng)
    t = ray_hits(domain, domain.basepoint, U)
    fin = np.isfinite(t)
    pts = domain.basepoint + t[fin, None] * U[fin]
    return pts, float(np.mean(~fin))


def is_properly_convex(domain: ConvexDomain, direction_budget: int = 64, seed=0) -> bool:
    """Sampled test that no complete line through the basepoint lies inside."""
    U = sphere_directions(domain.dim, direction_budget, _rng(seed))
    t_fwd = ray_hits(domain, domain.basepoint, U)
    t_bwd = ray_hits(domain, domain.basepoint, -U)
    return not bool(np.any(np.isinf(t_fwd) & np.isinf(t_bwd)))


def _local_boundary_candidates(domain, p, count, seed, delta=1e-3):
    """Unit directions from p to nearby boundary samples."""
    rng = _rng(seed)
    x0 = domain.basepoint
    d0 = p - x0
    r0 = np.linalg.norm(d0)
    if r0 < 1e-12:
        raise InvalidInputError("boundary point coincides with basepoint")
    d0 = d0 / r0
    W = rng.standard_normal((count, domain.dim))
    W = W - np.outer(W @ d0, d0)
    W = _unit_rows(W)
    dirs = _unit_rows(d0 + delta * W)
    t = ray_hits(domain, x0, dirs)
    fin = np.isfinite(t)
    B = x0 + t[fin, None] * dirs[fin]
    V = B - p
    nv = np.linalg.norm(V, axis=1)
    good = nv > 1e-9 * (1.0 + r0)
    return _unit_rows(V[good]), B[good]


def face_of(domain: ConvexDomain, p, seed=0) -> FaceDescriptor:
    """Face through a boundary point, estimated by segment probing.

    Candidate directions come from boundary samples near p; a direction
    is kept when the short open segment through p along it stays within
    FACE_PROX_TOL of the boundary on both sides. The face span is the
    affine hull of the kept directions. Heuristic: the probing parameters
    separate flats from curvature O(1) but are not exact for general
    oracles.
    """
    p = np.asarray(p, dtype=float).ravel()
    if not bool(on_boundary(domain, p)):
        raise NotOnBoundaryError("point is not on the boundary within tolerance")
    n = domain.dim
    count = max(2 * n * n, 8)
    cands, _ = _local_boundary_candidates(domain, p, count, seed)
    accepted = []
    if cands.shape[0]:
        eps = FACE_SEG_LEN * (1.0 + np.linalg.norm(p))
        offsets = np.array([eps, -eps, eps / 2, -eps / 2])
        probes = p[None, None, :] + offsets[None, :, None] * cands[:, None, :]
        d = distance_to_boundary(domain, probes.reshape(-1, n)).reshape(
            cands.shape[0], offsets.size
        )
        ok = np.all(d < FACE_PROX_TOL * (1.0 + np.linalg.norm(p)), axis=1)
        accepted = cands[ok]
    if len(accepted) == 0:
        dirs = np.zeros((0, n))
        k = 0
    else:
        A = np.asarray(accepted)
        _, s, Vt = np.linalg.svd(A)
        k = int(np.sum(s > FACE_RANK_TOL * s[0]))
        dirs = Vt[:k]
    rep = ProjPoint.from_affine(p)
    basis = [rep]
    for dvec in dirs:
        basis.append(ProjPoint(np.append(dvec, 0.0)))
    return FaceDescriptor(
        representative=rep, span_basis=tuple(basis), dim=k, directions=dirs
    )


def is_extreme(domain: ConvexDomain, p, seed=0) -> bool:
    """True when the face through p is zero dimensional."""
    return face_of(domain, p, seed=seed).dim == 0


def supporting_hyperplane(
    domain: ConvexDomain, p, n_check: int = 1000, seed=0
) -> Hyperplane:
    """Hyperplane through p with the sampled domain strictly on the
    positive side of the returned covector.

    Uses the closed-form outward normal when available, otherwise a
    max-margin separation fit against interior samples.
    """
    p = np.asarray(p, dtype=float).ravel()
    if not bool(on_boundary(domain, p)):
        raise NotOnBoundaryError("supporting hyperplane needs a boundary point")
    n = domain.dim
    if domain.boundary_gradient is not None:
        g = np.asarray(domain.boundary_gradient(p), dtype=float).ravel()
        g = g / np.linalg.norm(g)
    else:
        X = sample_interior(domain, max(200, n_check // 2), seed=seed)
        A = np.hstack([X - p, np.ones((X.shape[0], 1))])  # g.(x-p) + m <= 0
        c = np.zeros(n + 1)
        c[-1] = -1.0
        bounds = [(-1.0, 1.0)] * n + [(0.0, None)]
        res = linprog(c, A_ub=A, b_ub=np.zeros(X.shape[0]), bounds=bounds)
        if not res.success or res.x[-1] <= 1e-12:
            raise UncertifiedError("separation fit failed to certify")
        g = -res.x[:n]
        g = g / np.linalg.norm(g)
        g = -g  # outward
    cov = np.append(-g, g @ p)  # positive on the interior side
    h = Hyperplane(cov, canonicalize=False)
    samples = sample_interior(domain, n_check, seed=seed)
    vals = h.eval_affine(samples)
    if np.any(vals <= 0):
        raise UncertifiedError("fitted hyperplane does not support the samples")
    return h


@dataclass(frozen=True)
class ConicCertificate:
    """Outcome of the conic-face search."""

    is_conic: bool
    hyperplanes: tuple
    reason: str = ""

    def __bool__(self) -> bool:
        return self.is_conic


def is_conic_face(
    domain: ConvexDomain, face: FaceDescriptor, budget: int = 10000, seed=0
) -> ConicCertificate:
    """Search for n-k supporting hyperplanes whose intersections descend
    strictly to the face support; candidates are supporting hyperplanes at
    boundary samples near the face.
    """
    n = domain.dim
    k = face.dim
    need = n - k
    span = np.stack([b.coords for b in face.span_basis])
    p = face.representative.affine()
    rng = _rng(seed)
    chain: list[Hyperplane] = []
    stack_rows: list[np.ndarray] = []
    tried = 0
    scales = [1e-6, 1e-4, 1e-2, 0.1]
    batch = 64
    while tried < budget and len(chain) < need:
        scale = scales[min(len(scales) - 1, (tried // batch) % len(scales))]
        pts = p[None, :] + scale * rng.standard_normal((batch, n))
        if face.dim > 0:
            pts = pts + rng.uniform(-1, 1, (batch, 1)) * face.directions[0][None, :]
        D = pts - domain.basepoint
        r = np.linalg.norm(D, axis=1)
        t = ray_hits(domain, domain.basepoint, _unit_rows(D))
        fin = np.isfinite(t)
        B = domain.basepoint + t[fin, None] * _unit_rows(D[fin])
        for b in B:
            tried += 1
            if tried > budget or len(chain) >= need:
                break
            try:
                h = supporting_hyperplane(domain, b, n_check=200, seed=rng)
            except (UncertifiedError, NotOnBoundaryError):
                continue
            c = h.covector
            if np.max(np.abs(span @ c)) > 1e-7:
                continue  # does not contain the face support
            rows = stack_rows + [c]
            R = np.stack(rows)
            s = np.linalg.svd(R, compute_uv=False)
            if s[-1] <= 1e-7 * s[0]:
                continue  # no strict descent
            stack_rows = rows
            chain.append(h)
    if len(chain) == need:
        return ConicCertificate(True, tuple(chain))
    return ConicCertificate(
        False,
        tuple(chain),
        reason=f"found {len(chain)}/{need} independent supporting hyperplanes "
        f"within budget {budget}",
    )


@dataclass(frozen=True)
class Summand:
    """Convex-sum summand embedded in ambient homogeneous coordinates.

    ``support`` has shape (N+1, m): its columns span the projective
    support. For a domain summand the first m-1 columns are chart
    directions (last homogeneous entry 0) and the final column is the
    chart origin (last entry 1). A point at infinity is a single
    direction column with last entry 0.
    """

    support: np.ndarray
    domain: Optional[ConvexDomain]

    @property
    def ambient_dim(self) -> int:
        return self.support.shape[0] - 1


def embedded_summand(
    domain: ConvexDomain, origin, basis
) -> Summand:
    origin = np.asarray(origin, dtype=float).ravel()
    basis = np.atleast_2d(np.asarray(basis, dtype=float))
    if basis.shape[0] != domain.dim:
        raise InvalidInputError("basis rows must match the summand dimension")
    cols = [np.append(b, 0.0) for b in basis]
    cols.append(np.append(origin, 1.0))
    return Summand(support=np.stack(cols, axis=1), domain=domain)


def point_summand(point, ambient_dim: Optional[int] = None) -> Summand:
    point = np.asarray(point, dtype=float).ravel()
    return Summand(support=np.append(point, 1.0)[:, None], domain=None)


def infinite_point_summand(direction) -> Summand:
    direction = np.asarray(direction, dtype=float).ravel()
    return Summand(support=np.append(direction, 0.0)[:, None], domain=None)


def convex_sum(s1: Summand, s2: Summand, tag: str = "") -> ConvexDomain:
    """Union of open segments joining two summands with disjoint supports.

    Membership decomposes [x; 1] in the joint support; both coefficients
    on the homogenizing columns must be positive and each domain summand
    must contain its dehomogenized component.
    """
    if s1.ambient_dim != s2.ambient_dim:
        raise InvalidInputError("summands live in different ambient spaces")
    S = np.hstack([s1.support, s2.support])
    m1 = s1.support.shape[1]
    m = S.shape[1]
    sv = np.linalg.svd(S, compute_uv=False)
    if sv[-1] <= 1e-10 * sv[0]:
        raise OverlappingSupportsError("projective supports are not disjoint")
    P = np.linalg.pinv(S)
    N = s1.ambient_dim

    def part_ok(summand: Summand, G: np.ndarray) -> np.ndarray:
        if summand.domain is None:
            return G[..., 0] > 1e-12
        h = G[..., -1]
        ok = h > 1e-12
        safe = np.where(ok, h, 1.0)
        local = G[..., :-1] / safe[..., None]
        return ok & summand.domain.membership(local)

    def member(X):
        X = np.asarray(X, dtype=float)
        Xh = np.concatenate([X, np.ones(X.shape[:-1] + (1,))], axis=-1)
        G = Xh @ P.T
        resid = np.linalg.norm(G @ S.T - Xh, axis=-1)
        in_span = resid <= 1e-9 * np.linalg.norm(Xh, axis=-1)
        return in_span & part_ok(s1, G[..., :m1]) & part_ok(s2, G[..., m1:])

    def rep(summand: Summand) -> np.ndarray:
        if summand.domain is None:
            return summand.support[:, 0]
        local = np.append(summand.domain.basepoint, 1.0)
        return summand.support @ local

    a = rep(s1)
    b = rep(s2)
    xh = a / max(a[-1], 1e-300) if a[-1] > 1e-12 else a
    if a[-1] > 1e-12 and b[-1] > 1e-12:
        xh = 0.5 * a / a[-1] + 0.5 * b / b[-1]
    elif a[-1] > 1e-12:
        xh = a / a[-1] + b
    else:
        xh = b / b[-1] + a
    basepoint = xh[:-1] / xh[-1]
    return ConvexDomain(
        dim=N,
        basepoint=basepoint,
        membership=member,
        tag=tag or "convex-sum",
    )


def from_predicate(
    dim: int,
    membership: Callable[[np.ndarray], np.ndarray],
    basepoint,
    boundary_gradient=None,
    tag: str = "",
    bounded_chart: Optional[ProjMap] = None,
) -> ConvexDomain:
    return ConvexDomain(
        dim=dim,
        basepoint=basepoint,
        membership=membership,
        boundary_gradient=boundary_gradient,
        tag=tag,
        bounded_chart=bounded_chart,
    )


def ball(dim: int, radius: float = 1.0, center=None) -> ConvexDomain:
    c = np.zeros(dim) if center is None else np.asarray(center, dtype=float)

    def member(X):
        X = np.asarray(X, dtype=float)
        return np.linalg.norm(X - c, axis=-1) < radius

    return ConvexDomain(
        dim=dim,
        basepoint=c,
        membership=member,
        boundary_gradient=lambda p: (np.asarray(p) - c),
        tag=f"ball{dim}d",
        bounded_chart=ProjMap(np.eye(dim + 1)),
    )


def polytope(inequalities: Sequence, basepoint=None, tag: str = "polytope") -> ConvexDomain:
    """Open polyhedron {x : c . [x; 1] > 0 for each covector c}."""
    C = np.atleast_2d(np.asarray(inequalities, dtype=float))
    n = C.shape[1] - 1

    def member(X):
        X = np.asarray(X, dtype=float)
        vals = X @ C[:, :-1].T + C[:, -1]
        return np.all(vals > 0, axis=-1)

    def gradient(p):
        vals = np.asarray(p) @ C[:, :-1].T + C[:, -1]
        i = int(np.argmin(vals))
        return -C[i, :-1]

    if basepoint is None:
        # analytic-center style LP: maximize the smallest slack
        A = np.hstack([-C[:, :-1], np.ones((C.shape[0], 1))])
        cvec = np.zeros(n + 1)
        cvec[-1] = -1.0
        res = linprog(
            cvec, A_ub=A, b_ub=C[:, -1], bounds=[(-1e6, 1e6)] * n + [(0, None)]
        )
        if not res.success or res.x[-1] <= 0:
            raise InvalidInputError("polytope has empty interior")
        basepoint = res.x[:n]
    return ConvexDomain(
        dim=n,
        basepoint=basepoint,
        membership=member,
        boundary_gradient=gradient,
        tag=tag,
    )


def quadrant(dim: int = 2) -> ConvexDomain:
    C = np.hstack([np.eye(dim), np.zeros((dim, 1))])
    d = polytope(C, basepoint=np.ones(dim), tag=f"orthant{dim}d")
    rows = np.eye(dim + 1)
    rows[-1, :] = 1.0
    d.bounded_chart = ProjMap(rows)
    return d


def simplex(dim: int = 2) -> ConvexDomain:
    """Open standard simplex {x_i > 0, sum x_i < 1}: a bounded chart of
    the orthant (the projective n-simplex)."""
    C = np.vstack(
        [
            np.hstack([np.eye(dim), np.zeros((dim, 1))]),
            np.append(-np.ones(dim), 1.0),
        ]
    )
    d = polytope(C, basepoint=np.full(dim, 1.0 / (dim + 1)), tag=f"simplex{dim}d")
    d.bounded_chart = ProjMap(np.eye(dim + 1))
    return d


def slab() -> ConvexDomain:
    """Non properly convex control domain {0 < y < 1} in R^2."""
    return polytope([[0, 1, 0], [0, -1, 1]], basepoint=[0.0, 0.5], tag="slab")
