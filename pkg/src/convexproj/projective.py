"""Homogeneous coordinates, projective maps, and singular limits.

Points and hyperplanes of RP^n are stored as canonical unit vectors in
R^{n+1} (first coordinate above a small threshold made positive).
Projective maps are (n+1)x(n+1) matrices of unit Frobenius norm with the
same sign convention, so possibly singular limits of map sequences live
in the projectivized matrix semigroup; rank, kernel and range come from
an SVD at a scale-free tolerance.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError, KernelHitError, NoLimitError

RANK_REL_TOL = 1e-9      # singular value counts as zero below this times sigma_max
SIGN_TOL = 1e-12         # leading-entry threshold for sign canonicalization
SEQ_TAIL_TOL = 1e-6      # pairwise tail distance bound for sequence limits
COLLINEAR_REL_TOL = 1e-8


def canonical_vector(v: np.ndarray) -> np.ndarray:
    """Unit norm, first entry with magnitude above SIGN_TOL made positive."""
    v = np.asarray(v, dtype=float).ravel()
    nrm = np.linalg.norm(v)
    if nrm == 0.0 or not np.all(np.isfinite(v)):
        raise InvalidInputError("zero or non-finite vector")
    v = v / nrm
    big = np.flatnonzero(np.abs(v) > SIGN_TOL)
    if big.size and v[big[0]] < 0:
        v = -v
    return v


def proj_distance(a: np.ndarray, b: np.ndarray) -> float:
    """Distance between projective classes: min over the sign ambiguity."""
    a = np.asarray(a, dtype=float) / np.linalg.norm(a)
    b = np.asarray(b, dtype=float) / np.linalg.norm(b)
    return min(np.linalg.norm(a - b), np.linalg.norm(a + b))


@dataclass(frozen=True)
class ProjPoint:
    """Point of RP^n as a canonical homogeneous vector of length n+1."""

    coords: np.ndarray

    def __init__(self, coords):
        object.__setattr__(self, "coords", canonical_vector(coords))

    @property
    def dim(self) -> int:
        return self.coords.size - 1

    @classmethod
    def from_affine(cls, x) -> "ProjPoint":
        x = np.asarray(x, dtype=float).ravel()
        return cls(np.append(x, 1.0))

    @property
    def is_infinite(self) -> bool:
        return abs(self.coords[-1]) <= SIGN_TOL

    def affine(self) -> np.ndarray:
        """Dehomogenized coordinates; raises for points at infinity."""
        w = self.coords[-1]
        if abs(w) <= SIGN_TOL:
            raise InvalidInputError("point at infinity has no affine chart image")
        return self.coords[:-1] / w

    def close_to(self, other: "ProjPoint", tol: float = 1e-9) -> bool:
        return proj_distance(self.coords, other.coords) < tol


@dataclass(frozen=True)
class Hyperplane:
    """Hyperplane of RP^n as a covector of length n+1, unit norm.

    ``canonicalize=False`` keeps the caller's orientation (used when the
    positive side is meaningful, e.g. supporting hyperplanes evaluated on
    the domain side).
    """

    covector: np.ndarray

    def __init__(self, covector, canonicalize: bool = True):
        c = np.asarray(covector, dtype=float).ravel()
        nrm = np.linalg.norm(c)
        if nrm == 0.0 or not np.all(np.isfinite(c)):
            raise InvalidInputError("zero or non-finite covector")
        c = c / nrm
        if canonicalize:
            c = canonical_vector(c)
        object.__setattr__(self, "covector", c)

    @property
    def dim(self) -> int:
        return self.covector.size - 1

    def eval_affine(self, X: np.ndarray) -> np.ndarray:
        """Evaluate c . [x; 1] on affine points, vectorized."""
        X = np.asarray(X, dtype=float)
        return X @ self.covector[:-1] + self.covector[-1]

    def contains_point(self, p: ProjPoint, tol: float = 1e-9) -> bool:
        return abs(float(self.covector @ p.coords)) < tol


@dataclass(frozen=True)
class ProjMap:
    """Element of PM(n+1, R): matrix up to scale, possibly singular."""

    matrix: np.ndarray
    rank: int = field(init=False)
    kernel_basis: tuple = field(init=False)
    range_basis: tuple = field(init=False)
    _kernel_arr: np.ndarray = field(init=False, repr=False)
    _range_arr: np.ndarray = field(init=False, repr=False)

    def __init__(self, matrix):
        M = np.asarray(matrix, dtype=float)
        if M.ndim != 2 or M.shape[0] != M.shape[1]:
            raise InvalidInputError("projective map needs a square matrix")
        nrm = np.linalg.norm(M)
        if nrm == 0.0 or not np.all(np.isfinite(M)):
            raise InvalidInputError("zero or non-finite matrix")
        M = M / nrm
        flat = M.ravel()
        big = np.flatnonzero(np.abs(flat) > SIGN_TOL)
        if big.size and flat[big[0]] < 0:
            M = -M
        U, s, Vt = np.linalg.svd(M)
        r = int(np.sum(s > RANK_REL_TOL * s[0]))
        object.__setattr__(self, "matrix", M)
        object.__setattr__(self, "rank", r)
        kernel = Vt[r:]
        rng = U[:, :r].T
        object.__setattr__(self, "_kernel_arr", kernel)
        object.__setattr__(self, "_range_arr", rng)
        object.__setattr__(
            self, "kernel_basis", tuple(ProjPoint(row) for row in kernel)
        )
        object.__setattr__(self, "range_basis", tuple(ProjPoint(row) for row in rng))

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def dim(self) -> int:
        return self.size - 1

    @property
    def is_invertible(self) -> bool:
        return self.rank == self.size

    def inverse(self) -> "ProjMap":
        if not self.is_invertible:
            raise InvalidInputError("singular map has no inverse")
        return ProjMap(np.linalg.inv(self.matrix))

    def compose(self, other: "ProjMap") -> "ProjMap":
        return ProjMap(self.matrix @ other.matrix)

    def kernel_distance(self, v: np.ndarray) -> float:
        """Distance from the projective class of v to K(g)."""
        v = np.asarray(v, dtype=float) / np.linalg.norm(v)
        if self._kernel_arr.shape[0] == 0:
            return 1.0
        proj = self._kernel_arr.T @ (self._kernel_arr @ v)
        return float(np.linalg.norm(v - proj))

    def close_to(self, other: "ProjMap", tol: float = 1e-9) -> bool:
        return proj_distance(self.matrix.ravel(), other.matrix.ravel()) < tol


@dataclass(frozen=True)
class AffineMap:
    """Invertible affine map x -> linear @ x + translation."""

    linear: np.ndarray
    translation: np.ndarray

    def __init__(self, linear, translation=None):
        L = np.asarray(linear, dtype=float)
        if L.ndim != 2 or L.shape[0] != L.shape[1]:
            raise InvalidInputError("linear part must be square")
        n = L.shape[0]
        t = np.zeros(n) if translation is None else np.asarray(translation, dtype=float).ravel()
        if t.size != n:
            raise InvalidInputError("translation length does not match linear part")
        s = np.linalg.svd(L, compute_uv=False)
        if s[-1] <= 1e-12 * s[0]:
            raise InvalidInputError("linear part is not invertible")
        object.__setattr__(self, "linear", L)
        object.__setattr__(self, "translation", t)

    @property
    def dim(self) -> int:
        return self.linear.shape[0]

    def __call__(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        return X @ self.linear.T + self.translation

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other: x -> self(other(x))."""
        return AffineMap(
            self.linear @ other.linear,
            self.linear @ other.translation + self.translation,
        )

    def inverse(self) -> "AffineMap":
        Linv = np.linalg.inv(self.linear)
        return AffineMap(Linv, -Linv @ self.translation)


def normalize(matrix) -> ProjMap:
    """Canonical representative in PM(n+1, R) with rank/kernel/range data."""
    return ProjMap(matrix)


def apply(g: ProjMap, p, kernel_tol: float = 1e-9) -> ProjPoint:
    """Image g . p; raises KernelHitError when p lies in K(g)."""
    if not isinstance(p, ProjPoint):
        p = ProjPoint(p)
    if g.kernel_distance(p.coords) <= kernel_tol:
        raise KernelHitError("point lies in the kernel of the map")
    return ProjPoint(g.matrix @ p.coords)


def apply_affine_batch(g: ProjMap, X: np.ndarray, chart_tol: float = 1e-12):
    """Apply g to affine points (..., n); returns (images, in_chart mask).

    Rows mapped into the hyperplane at infinity get ``in_chart=False`` and
    unusable image coordinates.
    """
    X = np.asarray(X, dtype=float)
    Xh = np.concatenate([X, np.ones(X.shape[:-1] + (1,))], axis=-1)
    Y = Xh @ g.matrix.T
    w = Y[..., -1]
    scale = np.linalg.norm(Y, axis=-1)
    in_chart = np.abs(w) > chart_tol * np.maximum(scale, 1e-300)
    safe_w = np.where(in_chart, w, 1.0)
    return Y[..., :-1] / safe_w[..., None], in_chart


def limit_of_sequence(seq, tail_tol: float = SEQ_TAIL_TOL):
    """Limit in PM(n+1, R) of a map sequence with a convergent tail.

    The last quarter of the sequence must be pairwise within ``tail_tol``
    in canonical-representative distance. Returns ``(limit, certificate)``
    where the certificate is the maximal tail deviation.
    """
    maps = [m if isinstance(m, ProjMap) else ProjMap(m) for m in seq]
    if not maps:
        raise InvalidInputError("empty sequence")
    k = max(2, int(np.ceil(len(maps) / 4)))
    tail = maps[-k:] if len(maps) >= 2 else maps
    worst = 0.0
    for i in range(len(tail)):
        for j in range(i + 1, len(tail)):
            worst = max(
                worst,
                proj_distance(tail[i].matrix.ravel(), tail[j].matrix.ravel()),
            )
    if len(maps) > 1 and worst >= tail_tol:
        raise NoLimitError(
            f"tail is not Cauchy: max deviation {worst:.3e} >= {tail_tol:.1e}"
        )
    return maps[-1], worst


def embed_affine(a) -> ProjMap:
    """Affine map (L, t) as the projective block matrix [[L, t], [0, 1]]."""
    L = np.asarray(a.linear, dtype=float)
    t = np.asarray(a.translation, dtype=float).ravel()
    n = L.shape[0]
    M = np.zeros((n + 1, n + 1))
    M[:n, :n] = L
    M[:n, n] = t
    M[n, n] = 1.0
    return ProjMap(M)


def is_affine(g: ProjMap, infinity: Hyperplane, tol: float = 1e-9) -> bool:
    """True when g preserves the given hyperplane (transpose eigenvector)."""
    c = infinity.covector
    w = g.matrix.T @ c
    nw = np.linalg.norm(w)
    if nw <= tol:
        return False
    return proj_distance(w, c) < tol


def cross_ratio(s1, p1, p2, s2) -> float:
    """Cross ratio of four collinear points, as the chord-length quotient
    d(s1,p2) d(p1,s2) / (d(s1,p1) d(p2,s2)) in signed affine parameters.
    """
    pts = []
    for q in (s1, p1, p2, s2):
        if not isinstance(q, ProjPoint):
            q = ProjPoint(q)
        pts.append(q.coords)
    P = np.stack(pts)
    U, s, Vt = np.linalg.svd(P)
    if s.size > 2 and s[2] > COLLINEAR_REL_TOL * s[0]:
        raise InvalidInputError("points are not collinear within tolerance")
    basis = Vt[:2]
    ab = P @ basis.T  # (4, 2) line coordinates

    def det(i, j):
        return ab[i, 0] * ab[j, 1] - ab[j, 0] * ab[i, 1]

    if proj_distance(pts[1], pts[2]) < 1e-12:
        return 1.0
    d_s1p1 = det(0, 1)
    d_p2s2 = det(2, 3)
    if abs(d_s1p1) < 1e-12 or abs(d_p2s2) < 1e-12:
        raise InvalidInputError("coincident endpoint pair (s1=p1 or p2=s2)")
    return float(det(0, 2) * det(1, 3) / (d_s1p1 * d_p2s2))
