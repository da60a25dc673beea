"""Points on the unit shell and m-planes, with their weighted products.

A point is a vector x with x (.) x = sum K_i x_i^2 = 1.  An m-plane is the
column span of the first m+1 columns of a generalized orthogonal matrix,
represented by the (n+1) x (m+1) column matrix itself; products of planes are
computed from their maximal minors with the exact coefficient tables from
kernel.  Cross products whose radicand comes out negative are returned as an
Imaginary value carrying the magnitude, never as an error.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from . import kernel
from .errors import DegenerateTriangle, DimensionMismatch, NegativeNorm, OnAbsolute

__all__ = [
    "Imaginary",
    "ProjPoint",
    "MPlane",
    "Space",
    "CrossValue",
]


@dataclass(frozen=True)
class Imaginary:
    """Magnitude of the square root of a negative radicand."""

    magnitude: float


CrossValue = Union[float, Imaginary]


def _as_vector(x) -> np.ndarray:
    if isinstance(x, ProjPoint):
        return x.coords
    return np.asarray(x, dtype=float)


class ProjPoint:
    """A representative vector of a point; construction does not normalize."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        arr = np.array(coords, dtype=float)
        if arr.ndim != 1:
            raise DimensionMismatch("point coordinates must be a flat vector")
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "ProjPoint(%s)" % (list(self.coords),)


class MPlane:
    """An m-plane given by m+1 columns of a generalized orthogonal matrix."""

    __slots__ = ("space", "cols", "_minors")

    def __init__(self, space: "Space", cols, validate: bool = True, tol: float = 1e-8):
        arr = np.array(cols, dtype=float)
        if arr.ndim != 2 or arr.shape[0] != space.n + 1:
            raise DimensionMismatch(
                "plane columns must form an (n+1) x (m+1) matrix for this space"
            )
        m = arr.shape[1] - 1
        if not 0 < m < space.n:
            raise DimensionMismatch("plane dimension must satisfy 0 < m < n")
        arr.setflags(write=False)
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "cols", arr)
        object.__setattr__(self, "_minors", None)
        if validate:
            space._check_plane_columns(self, tol)

    def __setattr__(self, name, value):
        raise AttributeError("MPlane is immutable")

    @property
    def m(self) -> int:
        return self.cols.shape[1] - 1

    def minor_vector(self) -> np.ndarray:
        """Maximal minors in lexicographic row-tuple order (cached)."""
        if self._minors is None:
            tuples, _, _ = kernel.plane_tables(self.space.sig, self.m)
            vals = np.array([_det(self.cols[list(t), :]) for t in tuples])
            vals.setflags(write=False)
            object.__setattr__(self, "_minors", vals)
        return self._minors

    def __repr__(self):
        return "MPlane(m=%d, space=%s)" % (self.m, kernel.format_signature(self.space.sig))


def _det(sub: np.ndarray) -> float:
    d = sub.shape[0]
    if d == 1:
        return float(sub[0, 0])
    if d == 2:
        return float(sub[0, 0] * sub[1, 1] - sub[0, 1] * sub[1, 0])
    if d == 3:
        return float(
            sub[0, 0] * (sub[1, 1] * sub[2, 2] - sub[1, 2] * sub[2, 1])
            - sub[0, 1] * (sub[1, 0] * sub[2, 2] - sub[1, 2] * sub[2, 0])
            + sub[0, 2] * (sub[1, 0] * sub[2, 1] - sub[1, 1] * sub[2, 0])
        )
    return float(np.linalg.det(sub))


class Space:
    """A Cayley-Klein space fixed by its signature of characteristics."""

    __slots__ = ("sig", "K", "_Karr")

    def __init__(self, sig):
        if isinstance(sig, str):
            chars = kernel.parse_signature(sig)
        else:
            chars = kernel.check_signature(sig)
        object.__setattr__(self, "sig", chars)
        object.__setattr__(self, "K", kernel.cumulative_products(chars))
        karr = np.array(self.K, dtype=float)
        karr.setflags(write=False)
        object.__setattr__(self, "_Karr", karr)

    def __setattr__(self, name, value):
        raise AttributeError("Space is immutable")

    @property
    def n(self) -> int:
        return len(self.sig)

    def __repr__(self):
        return "Space(%r)" % (kernel.format_signature(self.sig),)

    # -- points ---------------------------------------------------------

    def _vec(self, x) -> np.ndarray:
        arr = _as_vector(x)
        if arr.shape != (self.n + 1,):
            raise DimensionMismatch(
                "expected %d coordinates, got shape %s" % (self.n + 1, arr.shape)
            )
        return arr

    def dot_points(self, x, y) -> float:
        """Weighted dot product sum K_i x_i y_i."""
        xv, yv = self._vec(x), self._vec(y)
        return float(np.dot(self._Karr * xv, yv))

    def point_cross_radicand(self, x, y) -> float:
        """Signed sum of weighted squared minors under the point cross root."""
        xv, yv = self._vec(x), self._vec(y)
        table = kernel.point_cross_table(self.sig)
        outer = np.outer(xv, yv)
        total = 0.0
        for (i, j), coeff in table.items():
            if coeff == 0:
                continue
            minor = outer[i, j] - outer[j, i]
            total += coeff * minor * minor
        return total

    def cross_points(self, x, y) -> CrossValue:
        """Point cross product magnitude, Imaginary-tagged if the radicand < 0.

        Radicands within roundoff of zero (relative to the accumulated term
        sizes) are snapped to zero rather than misclassified as imaginary.
        """
        rad = self.point_cross_radicand(x, y)
        return self._root(rad, self._point_term_scale(x, y))

    def _point_term_scale(self, x, y) -> float:
        xv, yv = self._vec(x), self._vec(y)
        table = kernel.point_cross_table(self.sig)
        outer = np.outer(xv, yv)
        total = 0.0
        for (i, j), coeff in table.items():
            if coeff == 0:
                continue
            minor = outer[i, j] - outer[j, i]
            total += abs(minor * minor)
        return total

    @staticmethod
    def _root(rad: float, term_scale: float) -> CrossValue:
        snap = 1e-12 * max(1.0, term_scale)
        if rad >= 0.0:
            return math.sqrt(rad)
        if rad >= -snap:
            return 0.0
        return Imaginary(math.sqrt(-rad))

    def normalize(self, raw, tol: float = 1e-12) -> ProjPoint:
        """Scale a raw vector onto the unit shell with a canonical sign.

        Raises OnAbsolute when the self-product vanishes (within tol, relative
        to the absolute term sizes) and NegativeNorm when it is negative.  The
        representative is fixed so its first significant coordinate is > 0.
        """
        arr = self._vec(raw)
        q = float(np.dot(self._Karr * arr, arr))
        scale = float(np.dot(np.abs(self._Karr), arr * arr))
        limit = tol * max(1.0, scale)
        if abs(q) <= limit:
            raise OnAbsolute("vector lies on the absolute (self-product %r)" % (q,))
        if q < 0.0:
            raise NegativeNorm(
                "vector has negative self-product %r, no real unit scaling" % (q,),
                value=q,
            )
        v = arr / math.sqrt(q)
        v = _canonical_sign(v)
        return ProjPoint(v)

    # -- planes ---------------------------------------------------------

    def plane(self, cols, validate: bool = True, tol: float = 1e-8) -> MPlane:
        return MPlane(self, cols, validate=validate, tol=tol)

    def _check_plane_columns(self, plane: MPlane, tol: float) -> None:
        """Necessary validity checks for plane columns.

        Verifies the pairwise column products c_i (.) c_j = K_i delta_ij and
        the unit normalization of the plane itself (which pins the column
        scale that the degenerate pairwise products cannot see).
        """
        cols = plane.cols
        for i in range(plane.m + 1):
            for j in range(i, plane.m + 1):
                want = self.K[i] if i == j else 0.0
                got = self.dot_points(cols[:, i], cols[:, j])
                mag = float(np.abs(cols[:, i]).max() * np.abs(cols[:, j]).max())
                if abs(got - want) > tol * max(1.0, mag * mag):
                    raise DimensionMismatch(
                        "columns %d,%d have product %r, expected %r" % (i, j, got, want)
                    )
        unit = self.dot_planes(plane, plane)
        if abs(unit - 1.0) > tol * max(1.0, abs(unit)):
            raise DimensionMismatch(
                "plane self-product is %r, expected 1 (bad column scale?)" % (unit,)
            )

    def dot_planes(self, X: MPlane, Y: MPlane) -> float:
        """Weighted dot product of two m-planes via their minors."""
        self._check_pair(X, Y)
        tuples, dot, _ = kernel.plane_tables(self.sig, X.m)
        mx, my = X.minor_vector(), Y.minor_vector()
        coeff = np.array([dot[t] for t in tuples], dtype=float)
        return float(np.dot(coeff * mx, my))

    def plane_cross_radicand(self, X: MPlane, Y: MPlane) -> float:
        self._check_pair(X, Y)
        tuples, _, cross = kernel.plane_tables(self.sig, X.m)
        mx, my = X.minor_vector(), Y.minor_vector()
        index = {t: p for p, t in enumerate(tuples)}
        total = 0.0
        for (a, b), coeff in cross.items():
            if coeff == 0:
                continue
            pa, pb = index[a], index[b]
            minor = mx[pa] * my[pb] - mx[pb] * my[pa]
            total += coeff * minor * minor
        return total

    def cross_planes(self, X: MPlane, Y: MPlane) -> CrossValue:
        """Plane cross product magnitude, Imaginary-tagged on negative radicand."""
        rad = self.plane_cross_radicand(X, Y)
        tuples, _, cross = kernel.plane_tables(self.sig, X.m)
        mx, my = X.minor_vector(), Y.minor_vector()
        index = {t: p for p, t in enumerate(tuples)}
        scale = 0.0
        for (a, b), coeff in cross.items():
            if coeff == 0:
                continue
            pa, pb = index[a], index[b]
            minor = mx[pa] * my[pb] - mx[pb] * my[pa]
            scale += abs(minor * minor)
        return self._root(rad, scale)

    def _check_pair(self, X: MPlane, Y: MPlane) -> None:
        if X.space.sig != self.sig or Y.space.sig != self.sig:
            raise DimensionMismatch("plane belongs to a different space")
        if X.m != Y.m:
            raise DimensionMismatch("planes of different dimension")

    # -- constructions ----------------------------------------------------

    def line_through(self, x: ProjPoint, y: ProjPoint) -> MPlane:
        """The line joining two unit points with real, nonzero separation.

        The second column is the direction of y seen from x, scaled by the
        point cross product; that scaling makes the line itself unit, which
        is the normalization plane columns need in every signature.
        """
        u = self.direction(x, y)
        return MPlane(self, np.column_stack([self._vec(x), u]))

    def direction(self, x: ProjPoint, y: ProjPoint) -> np.ndarray:
        """Unit direction vector at x pointing toward y."""
        c = self.dot_points(x, y)
        s = self.cross_points(x, y)
        if isinstance(s, Imaginary) or s == 0.0:
            raise DegenerateTriangle(
                "no real unit direction between the given points (cross %r)" % (s,)
            )
        return (self._vec(y) - c * self._vec(x)) / s


def _canonical_sign(v: np.ndarray) -> np.ndarray:
    peak = np.abs(v).max()
    if peak == 0.0:
        return v
    for comp in v:
        if abs(comp) > 1e-12 * peak:
            return -v if comp < 0 else v
    return v
