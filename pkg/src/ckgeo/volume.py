"""Monte-Carlo native volume of geodesic simplices.

The native volume of a figure equals the vertex count times the ordinary
linear volume of the cone joining the figure to the origin of the ambient
space.  The estimator samples an axis-aligned box around that cone, counts
membership, and scales the hit rate by the box volume and the vertex count.

Membership in the cone: the sample's coefficients in the vertex basis must
all be nonnegative, and the point must lie inside the unit shell.  Where the
squared norm is not positive (possible in degenerate and indefinite
signatures) the radial cut falls back to the coefficient sum, which plays
the role of the ray parameter.

The box must contain every cone point.  For signatures whose first
characteristic is zero the cone is exactly the convex hull of the origin and
the vertices, so the hull box is used.  Otherwise the coefficient sum of any
cone point is at most 1/sqrt(g*) where g* is the minimum of the vertex Gram
form over the probability simplex; each coordinate is then bounded by the
largest vertex coordinate divided by sqrt(g*).  When g* is not positive the
cone touches the null cone and the region is unbounded.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from .entity import Imaginary, ProjPoint, Space
from .errors import DimensionMismatch, DomainError, SingularBasis

_CHUNK = 1 << 17
_EPS_NORM = 1e-12


@dataclass(frozen=True)
class GeodesicSimplex:
    """Simplex spanned by unit points with pairwise real separations.

    The cone construction uses the vertex representatives exactly as given;
    flipping a representative's sign selects the opposite cone.
    """

    space: Space
    vertices: Tuple[ProjPoint, ...]

    def __init__(self, space: Space, vertices: Sequence[ProjPoint], tol: float = 1e-9):
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "vertices", tuple(vertices))
        self._validate(tol)

    def _validate(self, tol: float) -> None:
        n = self.space.n
        if not 2 <= len(self.vertices) <= n + 1:
            raise DimensionMismatch(
                "need between 2 and %d vertices, got %d" % (n + 1, len(self.vertices))
            )
        for v in self.vertices:
            if v.n != n:
                raise DimensionMismatch("vertex dimension %d does not match space" % v.n)
            q = self.space.dot_points(v, v)
            if abs(q - 1.0) > tol * max(1.0, abs(q)):
                raise DomainError("vertex is not a unit point (self dot %r)" % (q,))
        mat = self.matrix()
        svals = np.linalg.svd(mat, compute_uv=False)
        if svals[-1] <= _EPS_NORM * max(1.0, svals[0]):
            raise SingularBasis("simplex vertices are numerically dependent")
        for i in range(len(self.vertices)):
            for j in range(i + 1, len(self.vertices)):
                s = self.space.cross_points(self.vertices[i], self.vertices[j])
                if isinstance(s, Imaginary):
                    raise DomainError(
                        "separation of vertices %d,%d is imaginary" % (i, j)
                    )

    def matrix(self) -> np.ndarray:
        """Vertex coordinates as columns, shape (n+1, vertex count)."""
        return np.column_stack([v.coords for v in self.vertices])


@dataclass(frozen=True)
class VolumeEstimate:
    value: float
    stderr: float
    hits: int
    samples: int
    seed: int

    def to_dict(self) -> dict:
        return {
            "volume": self.value,
            "stderr": self.stderr,
            "hits": self.hits,
            "samples": self.samples,
        }


def cone_contains(space: Space, simplex: GeodesicSimplex, p, tol: float = 1e-9) -> bool:
    """True when p = lambda*q for some q in the simplex and 0 <= lambda <= 1."""
    mat = simplex.matrix()
    vec = np.asarray(p, dtype=float)
    if vec.shape != (space.n + 1,):
        raise DimensionMismatch("ambient point needs %d coordinates" % (space.n + 1,))
    mu, residual, rank, _ = np.linalg.lstsq(mat, vec, rcond=None)
    if rank < mat.shape[1]:
        raise SingularBasis("simplex vertices are numerically dependent")
    gap = float(np.linalg.norm(mat @ mu - vec))
    if gap > tol * max(1.0, float(np.linalg.norm(vec))):
        return False
    if (mu < -tol).any():
        return False
    q = float(vec @ (space._Karr * vec))
    if q > _EPS_NORM:
        return q <= 1.0 + tol
    return float(mu.sum()) <= 1.0 + tol


def _min_gram_on_simplex(G: np.ndarray) -> float:
    """Exact minimum of mu^T G mu over the probability simplex.

    The minimizer lies in the relative interior of some face, where the
    restriction to the face's affine hull is stationary, so enumerating the
    stationary value of every face (singletons are their own faces) covers
    the true minimum.
    """
    size = G.shape[0]
    best = min(float(G[i, i]) for i in range(size))
    for r in range(2, size + 1):
        for subset in itertools.combinations(range(size), r):
            value = _face_stationary_value(G[np.ix_(subset, subset)])
            if value is not None:
                best = min(best, value)
    return best


def _face_stationary_value(sub: np.ndarray) -> Optional[float]:
    """Stationary value of the form on a face's sum-one affine hull.

    Returns None when the restriction has no stationary point (the minimum
    then sits on the boundary, which the sub-faces cover) or when the
    stationary set provably misses the nonnegative weights.  Reducing onto
    the hull keeps singular Gram blocks honest: the form is constant along
    null directions of the reduced Hessian, so the stationary value is
    unique whenever it exists.
    """
    r = sub.shape[0]
    Z = np.zeros((r, r - 1))
    Z[0, :] = 1.0
    Z[np.arange(1, r), np.arange(r - 1)] = -1.0
    e1 = np.zeros(r)
    e1[0] = 1.0
    H = Z.T @ sub @ Z
    rhs = -Z.T @ (sub @ e1)
    t = np.linalg.lstsq(H, rhs, rcond=None)[0]
    scale = max(1.0, float(np.abs(H).max()), float(np.abs(rhs).max()))
    if float(np.linalg.norm(H @ t - rhs)) > 1e-9 * scale:
        return None
    mu = e1 + Z @ t
    value = float(mu @ sub @ mu)
    if (mu >= -1e-12).all():
        return value
    eigvals, eigvecs = np.linalg.eigh(H)
    null_cols = np.abs(eigvals) <= 1e-10 * max(1.0, float(np.abs(eigvals).max()))
    null_dirs = [Z @ eigvecs[:, i] for i in np.flatnonzero(null_cols)]
    if not null_dirs:
        return None  # unique stationary point, outside the face
    if len(null_dirs) > 1:
        return value  # conservative: a smaller candidate only widens the box
    d = null_dirs[0]
    lo, hi = -math.inf, math.inf
    for mi, di in zip(mu, d):
        if abs(di) <= 1e-14:
            if mi < -1e-12:
                return None
        elif di > 0.0:
            lo = max(lo, -mi / di)
        else:
            hi = min(hi, -mi / di)
    return value if lo <= hi else None


def _span_frame(mat: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Orthonormal span basis Q and span coordinates R (vertices as columns)."""
    rows, cols = mat.shape
    if rows == cols:
        return np.eye(rows), mat.copy()
    Q, R = np.linalg.qr(mat)
    signs = np.sign(np.diag(R))
    signs[signs == 0.0] = 1.0
    return Q * signs, signs[:, None] * R


def _sampling_box(
    space: Space, mat: np.ndarray, R: np.ndarray
) -> Tuple[np.ndarray, np.ndarray, float]:
    """Axis-aligned box in span coordinates covering the whole cone.

    mat holds the ambient vertex columns (for the Gram form), R the same
    vertices in span coordinates (for the per-coordinate extents).
    """
    dim = R.shape[0]
    lo = np.empty(dim)
    hi = np.empty(dim)
    if space.sig[0] == 0:
        # All cumulative weights past the first vanish, the shell condition
        # degenerates to coefficient sum <= 1, and the cone is the plain
        # convex hull of the origin and the vertices.
        for d in range(dim):
            lo[d] = min(0.0, R[d].min())
            hi[d] = max(0.0, R[d].max())
    else:
        gram = mat.T @ (space._Karr[:, None] * mat)
        gstar = _min_gram_on_simplex(gram)
        if gstar <= _EPS_NORM:
            raise DomainError("cone is unbounded: the simplex reaches the null cone")
        reach = 1.0 / math.sqrt(gstar)
        spherical = all(k == 1 for k in space.sig)
        for d in range(dim):
            radius = float(np.abs(R[d]).max()) * reach
            if spherical:
                # Here the form is the ordinary dot product, so the whole
                # shell interior already fits in the unit cube.
                radius = min(radius, 1.0)
            lo[d] = 0.0 if (R[d] >= 0.0).all() else -radius
            hi[d] = 0.0 if (R[d] <= 0.0).all() else radius
    widths = hi - lo
    volume = float(np.prod(widths))
    if volume <= 0.0:
        raise SingularBasis("sampling box collapsed")
    return lo, hi, volume


def mc_volume(
    space: Space,
    simplex: GeodesicSimplex,
    samples: int,
    seed: int,
    tol: float = 1e-9,
) -> VolumeEstimate:
    """Hit-or-miss estimate of the native volume of the simplex.

    Deterministic for a given (samples, seed) pair: one pseudo-random stream
    consumed in fixed-size chunks, so the count of chunks never changes the
    draw sequence.
    """
    if samples < 1000:
        raise DomainError("need at least 1000 samples, got %d" % (samples,))
    mat = simplex.matrix()
    count = mat.shape[1]
    Q, R = _span_frame(mat)
    lo, hi, box_volume = _sampling_box(space, mat, R)
    scale = float(count) * box_volume

    rng = np.random.default_rng(seed)
    hits = 0
    done = 0
    dim = R.shape[0]
    karr = space._Karr
    while done < samples:
        take = min(_CHUNK, samples - done)
        w = lo + rng.random((take, dim)) * (hi - lo)
        mu = np.linalg.solve(R, w.T)
        ok = (mu >= -tol).all(axis=0)
        p = w @ Q.T
        qvals = (p * p) @ karr
        lam = mu.sum(axis=0)
        inside = np.where(qvals > _EPS_NORM, qvals <= 1.0 + tol, lam <= 1.0 + tol)
        hits += int(np.count_nonzero(ok & inside))
        done += take

    rate = hits / samples
    value = scale * rate
    stderr = scale * math.sqrt(rate * (1.0 - rate) / samples)
    return VolumeEstimate(value, stderr, hits, samples, seed)
