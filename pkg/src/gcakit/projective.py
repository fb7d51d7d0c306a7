"""Projective points, lines and planes of P^3, and the bracket that ties them.

Coordinate conventions used throughout the package:

* A point is a homogeneous 4-vector (x, y, z, w).  Finite points have
  w != 0 and normalize to w = 1; points with w = 0 are directions (points
  on the plane at infinity).
* A line is a Pluecker pair (direction u, moment v).  For the join of a
  normalized finite point a with a direction s this gives (s, a x s); for
  two directions g, h it gives (0, g x h) -- a line at infinity.  Every
  line built by ``join`` satisfies the decomposability quadric u . v = 0.
* A plane is stored dually by 4 coefficients (n, d) such that a point x
  lies on the plane iff n . x_xyz + d * x_w = 0.  ``plane_from_points``
  scales the coefficients so that n = (b - a) x (c - a) for normalized
  generators, which keeps downstream cross products of plane normals
  representative-exact.

The bracket of four points is the 4x4 determinant of their coordinates.
Brackets are not normalized anywhere: values are scale-covariant, and all
degeneracy decisions go through a relative gauge ``rel_zero`` with the
module default tolerance ``DEFAULT_TOL``.
"""
from __future__ import annotations

import numpy as np

from .errors import CoincidentPlanes, DegenerateLine, DegeneratePlane

DEFAULT_TOL = 1e-9


def rel_zero(value, scale, tol=None):
    """True when |value| vanishes relative to the magnitude of its inputs."""
    if tol is None:
        tol = DEFAULT_TOL
    return abs(value) <= tol * scale


def _as_vec(x, n, name):
    a = np.asarray(x, dtype=float)
    if a.shape != (n,):
        raise ValueError(f"{name} must have shape ({n},), got {a.shape}")
    return a


class HomogeneousPoint:
    """A point of P^3 held as an immutable homogeneous 4-vector."""

    __slots__ = ("_coords",)

    def __init__(self, coords):
        c = _as_vec(coords, 4, "coords").copy()
        if not np.any(c != 0.0):
            raise ValueError("homogeneous point must have a nonzero coordinate")
        c.flags.writeable = False
        self._coords = c

    @classmethod
    def from_position(cls, xyz):
        """Finite point at cartesian position xyz (w = 1)."""
        p = _as_vec(xyz, 3, "position")
        return cls(np.append(p, 1.0))

    @classmethod
    def at_infinity(cls, direction):
        """Ideal point in the given direction (w = 0)."""
        d = _as_vec(direction, 3, "direction")
        return cls(np.append(d, 0.0))

    @property
    def coords(self):
        return self._coords

    @property
    def is_finite(self):
        return self._coords[3] != 0.0

    def position(self):
        """Cartesian coordinates of a finite point."""
        w = self._coords[3]
        if w == 0.0:
            raise ValueError("point at infinity has no cartesian position")
        return self._coords[:3] / w

    def normalized(self):
        """Same projective point with w = 1 (finite points only)."""
        if not self.is_finite:
            return self
        return HomogeneousPoint(self._coords / self._coords[3])

    def scale(self):
        return float(np.linalg.norm(self._coords))

    def __repr__(self):
        x, y, z, w = self._coords
        return f"HomogeneousPoint([{x:g}, {y:g}, {z:g}, {w:g}])"


class PlueckerLine:
    """A line as a (direction, moment) Pluecker pair."""

    __slots__ = ("_direction", "_moment")

    def __init__(self, direction, moment):
        u = _as_vec(direction, 3, "direction").copy()
        v = _as_vec(moment, 3, "moment").copy()
        u.flags.writeable = False
        v.flags.writeable = False
        self._direction = u
        self._moment = v

    @property
    def direction(self):
        return self._direction

    @property
    def moment(self):
        return self._moment

    @property
    def is_infinite(self):
        """Line on the plane at infinity (zero direction part)."""
        return not np.any(self._direction != 0.0)

    def coords(self):
        """The six Pluecker coordinates (direction; moment)."""
        return np.concatenate([self._direction, self._moment])

    def scale(self):
        return float(np.linalg.norm(self.coords()))

    def __repr__(self):
        u, v = self._direction, self._moment
        return f"PlueckerLine(({u[0]:g}, {u[1]:g}, {u[2]:g}; {v[0]:g}, {v[1]:g}, {v[2]:g}))"


class ProjectivePlane:
    """A plane held dually by 4 coefficients (normal; offset)."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients):
        c = _as_vec(coefficients, 4, "coefficients").copy()
        if not np.any(c != 0.0):
            raise ValueError("plane must have a nonzero coefficient")
        c.flags.writeable = False
        self._coefficients = c

    @property
    def coefficients(self):
        return self._coefficients

    @property
    def normal(self):
        return self._coefficients[:3]

    @property
    def offset(self):
        return float(self._coefficients[3])

    def evaluate(self, point):
        """Incidence form; zero iff the point lies on the plane."""
        return float(np.dot(self._coefficients, point.coords))

    def scale(self):
        return float(np.linalg.norm(self._coefficients))

    def __repr__(self):
        n, d = self.normal, self.offset
        return f"ProjectivePlane(({n[0]:g}, {n[1]:g}, {n[2]:g}; {d:g}))"


def bracket4(p1, p2, p3, p4):
    """Bracket of four points: det of the 4x4 matrix of their coordinates.

    The arguments are sorted internally (tracking permutation parity)
    before the determinant is taken, so antisymmetry under argument
    transpositions and annihilation on repeated arguments hold to the bit,
    not merely to round-off.
    """
    pts = [p1.coords, p2.coords, p3.coords, p4.coords]
    keys = [tuple(c) for c in pts]
    order = [0, 1, 2, 3]
    parity = 1.0
    for i in range(3):  # selection sort, counting swaps
        k = min(range(i, 4), key=lambda j: keys[order[j]])
        if k != i:
            order[i], order[k] = order[k], order[i]
            parity = -parity
    for i in range(3):
        if keys[order[i]] == keys[order[i + 1]]:
            return 0.0
    m = np.column_stack([pts[j] for j in order])
    return parity * float(np.linalg.det(m))


def bracket_scale(p1, p2, p3, p4):
    """Hadamard-style magnitude gauge for a bracket of these four points."""
    return p1.scale() * p2.scale() * p3.scale() * p4.scale()


def join(a, b, tol=None):
    """Line through two projectively distinct points.

    Returns the Pluecker pair (u, v) with u = a_w * b_xyz - b_w * a_xyz and
    v = a_xyz x b_xyz.  Joining a normalized finite point r with a
    direction s yields exactly (s, r x s); joining two directions g, h
    yields the infinite line (0, g x h).
    """
    ca, cb = a.coords, b.coords
    u = ca[3] * cb[:3] - cb[3] * ca[:3]
    v = np.cross(ca[:3], cb[:3])
    gauge = a.scale() * b.scale()
    if rel_zero(np.linalg.norm(u), gauge, tol) and rel_zero(np.linalg.norm(v), gauge, tol):
        raise DegenerateLine(f"points coincide projectively: {a}, {b}")
    return PlueckerLine(u, v)


def plane_from_points(a, b, c, tol=None):
    """Plane through three non-collinear points.

    The coefficients pi satisfy pi . x = bracket4(x, a, b, c), so for
    normalized finite generators the normal equals (b - a) x (c - a).
    """
    m = np.column_stack([a.coords, b.coords, c.coords])  # 4x3
    co = np.empty(4)
    for i in range(4):
        rows = [r for r in range(4) if r != i]
        co[i] = (-1.0) ** i * np.linalg.det(m[rows, :])
    gauge = a.scale() * b.scale() * c.scale()
    if rel_zero(np.linalg.norm(co), gauge, tol):
        raise DegeneratePlane(f"points are collinear: {a}, {b}, {c}")
    return ProjectivePlane(co)


def meet_planes(p1, p2, tol=None):
    """Line of intersection of two projectively distinct planes.

    Direction is the cross product of the two plane normals, in the order
    given; parallel-but-distinct planes meet in a line at infinity.  The
    orientation convention (normal of ``p1`` crossed with normal of ``p2``)
    is fixed here once and relied on by the manipulator conditions.
    """
    n1, d1 = p1.normal, p1.offset
    n2, d2 = p2.normal, p2.offset
    u = np.cross(n1, n2)
    v = d1 * n2 - d2 * n1
    gauge = p1.scale() * p2.scale()
    if rel_zero(np.linalg.norm(u), gauge, tol) and rel_zero(np.linalg.norm(v), gauge, tol):
        raise CoincidentPlanes(f"planes coincide projectively: {p1}, {p2}")
    return PlueckerLine(u, v)


def mutual_bracket(l1, l2):
    """Reciprocal pairing u1 . v2 + u2 . v1 of two lines.

    Zero exactly when the lines are coplanar (they intersect or are
    parallel).  Equal to minus the bracket of four spanning points taken
    in (l1 first, l1 second, l2 first, l2 second) order.
    """
    return float(np.dot(l1.direction, l2.moment) + np.dot(l2.direction, l1.moment))


def points_on_line(line):
    """Two distinct spanning points of a line, chosen deterministically.

    Finite line: the point closest to the origin, then that point pushed
    one direction-unit along the line.  Infinite line (0, v): two
    directions u, w with u x w = v, via the same axis-selection rule used
    for constraint-moment spans.
    """
    u, v = line.direction, line.moment
    uu = float(np.dot(u, u))
    if uu > 0.0 and not line.is_infinite:
        base = np.cross(u, v) / uu
        return (HomogeneousPoint.from_position(base),
                HomogeneousPoint.from_position(base + u))
    first, second = infinite_line_span(v)
    return (HomogeneousPoint.at_infinity(first),
            HomogeneousPoint.at_infinity(second))


def infinite_line_span(moment):
    """Directions (u, w) with u x w = moment, for a line at infinity.

    u is the unit vector along moment x e, where e is the coordinate axis
    least aligned with the moment; w = moment x u then satisfies
    u x w = moment up to round-off.
    """
    n = np.asarray(moment, dtype=float)
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(n)))] = 1.0
    u = np.cross(n, axis)
    u = u / np.linalg.norm(u)
    w = np.cross(n, u)
    return u, w
