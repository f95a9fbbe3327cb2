"""Exact plane geometry over Q(sqrt 3): points, isometries, triangles, convex polygons."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactfield import ONE, QS3, ZERO, Scalar, qs3_sqrt


@dataclass(frozen=True, slots=True)
class Point:
    x: QS3
    y: QS3

    @classmethod
    def of(cls, x: Scalar, y: Scalar) -> Point:
        return cls(QS3.coerce(x), QS3.coerce(y))

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def scale(self, k: Scalar) -> Point:
        return Point(self.x * k, self.y * k)

    def __truediv__(self, k: Scalar) -> Point:
        return Point(self.x / k, self.y / k)

    def dot(self, other: Point) -> QS3:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> QS3:
        return self.x * other.y - self.y * other.x

    def norm2(self) -> QS3:
        return self.x * self.x + self.y * self.y

    def perp(self) -> Point:
        """Counterclockwise quarter turn."""
        return Point(-self.y, self.x)

    def key(self) -> tuple:
        return (self.x, self.y)

    def __lt__(self, other: Point) -> bool:
        # lexicographic: x first, then y
        s = (self.x - other.x).sign()
        if s:
            return s < 0
        return (self.y - other.y).sign() < 0

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


ORIGIN = Point(ZERO, ZERO)


def dist2(p: Point, q: Point) -> QS3:
    return (q - p).norm2()


def length(v: Point) -> QS3:
    """Exact Euclidean length; raises when it is not in Q(sqrt 3)."""
    r = qs3_sqrt(v.norm2())
    if r is None:
        raise ValueError(f"length of {v} is not in Q(sqrt 3)")
    return r


def unit(v: Point, length_: Scalar | None = None) -> Point:
    return v / (length(v) if length_ is None else length_)


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p)."""
    return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).sign()


def same_direction(u: Point, v: Point) -> bool:
    return u.cross(v).sign() == 0 and u.dot(v).sign() > 0


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True when p lies on the closed segment ab."""
    if orientation(a, b, p) != 0:
        return False
    return (p - a).dot(b - a).sign() >= 0 and (p - b).dot(a - b).sign() >= 0


@dataclass(frozen=True, slots=True)
class Isometry:
    """``x -> M x + t`` with M exactly orthogonal."""

    m00: QS3
    m01: QS3
    m10: QS3
    m11: QS3
    tx: QS3
    ty: QS3

    def __post_init__(self) -> None:
        if not self.is_orthogonal():
            raise ValueError("linear part is not orthogonal")

    @classmethod
    def identity(cls) -> Isometry:
        return cls(ONE, ZERO, ZERO, ONE, ZERO, ZERO)

    @classmethod
    def rotation(cls, cos: Scalar, sin: Scalar, about: Point = ORIGIN) -> Isometry:
        c, s = QS3.coerce(cos), QS3.coerce(sin)
        rot = cls(c, -s, s, c, ZERO, ZERO)
        if about == ORIGIN:
            return rot
        return cls.translation(about).compose(rot).compose(cls.translation(-about))

    @classmethod
    def translation(cls, v: Point) -> Isometry:
        return cls(ONE, ZERO, ZERO, ONE, v.x, v.y)

    @classmethod
    def frame(cls, origin: Point, u: Point, mirrored: bool = False) -> Isometry:
        """Isometry sending (1,0) to the unit vector u and the origin to ``origin``.

        ``mirrored`` sends (0,1) to the clockwise normal of u instead of the
        counterclockwise one.
        """
        if mirrored:
            return cls(u.x, u.y, u.y, -u.x, origin.x, origin.y)
        return cls(u.x, -u.y, u.y, u.x, origin.x, origin.y)

    @classmethod
    def unchecked(cls, m00: QS3, m01: QS3, m10: QS3, m11: QS3, tx: QS3, ty: QS3) -> Isometry:
        # used on hot paths where orthogonality holds by construction
        obj = object.__new__(cls)
        for name, val in zip(("m00", "m01", "m10", "m11", "tx", "ty"), (m00, m01, m10, m11, tx, ty)):
            object.__setattr__(obj, name, val)
        return obj

    def is_orthogonal(self) -> bool:
        a, b, c, d = self.m00, self.m01, self.m10, self.m11
        return a * a + c * c == ONE and b * b + d * d == ONE and a * b + c * d == ZERO

    def det(self) -> int:
        return (self.m00 * self.m11 - self.m01 * self.m10).sign()

    def apply(self, p: Point) -> Point:
        return Point(self.m00 * p.x + self.m01 * p.y + self.tx, self.m10 * p.x + self.m11 * p.y + self.ty)

    def linear(self, v: Point) -> Point:
        return Point(self.m00 * v.x + self.m01 * v.y, self.m10 * v.x + self.m11 * v.y)

    def compose(self, other: Isometry) -> Isometry:
        """``self ∘ other`` (apply ``other`` first)."""
        a, b, c, d = self.m00, self.m01, self.m10, self.m11
        return Isometry.unchecked(
            a * other.m00 + b * other.m10,
            a * other.m01 + b * other.m11,
            c * other.m00 + d * other.m10,
            c * other.m01 + d * other.m11,
            a * other.tx + b * other.ty + self.tx,
            c * other.tx + d * other.ty + self.ty,
        )

    def entries(self) -> tuple[QS3, ...]:
        return (self.m00, self.m01, self.m10, self.m11, self.tx, self.ty)


def apply_isometry(iso: Isometry, p: Point) -> Point:
    return iso.apply(p)


@dataclass(frozen=True, slots=True)
class Triangle:
    v0: Point
    v1: Point
    v2: Point

    def __post_init__(self) -> None:
        if orientation(self.v0, self.v1, self.v2) == 0:
            raise ValueError("degenerate triangle")

    @classmethod
    def ccw(cls, p: Point, q: Point, r: Point) -> Triangle:
        """Triangle through p, q, r wound counterclockwise."""
        if orientation(p, q, r) < 0:
            return cls(p, r, q)
        return cls(p, q, r)

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.v0, self.v1, self.v2)

    def orientation(self) -> int:
        return orientation(self.v0, self.v1, self.v2)

    def signed_area(self) -> QS3:
        return (self.v1 - self.v0).cross(self.v2 - self.v0) * Fraction(1, 2)

    def side_lengths2(self) -> list[QS3]:
        v = self.vertices
        return [dist2(v[i], v[(i + 1) % 3]) for i in range(3)]

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[0], v[1]), (v[1], v[2]), (v[2], v[0])]


@dataclass(frozen=True)
class ConvexPolygon:
    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        n = len(vs)
        if n < 3:
            raise ValueError("polygon needs at least 3 vertices")
        if len(set(vs)) != n:
            raise ValueError("repeated vertex")
        strict = 0
        for i in range(n):
            o = orientation(vs[i], vs[(i + 1) % n], vs[(i + 2) % n])
            if o < 0:
                raise ValueError("polygon is not convex and counterclockwise")
            strict += o > 0
        if strict < 3:
            raise ValueError("polygon is degenerate")
        # all-left turns still admit star windings; every vertex must sit left of every edge
        for i in range(n):
            a, b = vs[i], vs[(i + 1) % n]
            if any(orientation(a, b, v) < 0 for v in vs):
                raise ValueError("polygon is not simple")

    @classmethod
    def from_points(cls, points: Iterable[Point]) -> ConvexPolygon:
        """Build from points given in either winding."""
        pts = list(points)
        area = sum((pts[i].cross(pts[(i + 1) % len(pts)]) for i in range(len(pts))), ZERO)
        if area.sign() < 0:
            pts.reverse()
        return cls(tuple(pts))

    def edges(self) -> list[tuple[Point, Point]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def transformed(self, iso: Isometry) -> ConvexPolygon:
        return ConvexPolygon.from_points(iso.apply(v) for v in self.vertices)

    def contains(self, p: Point) -> bool:
        """Closed containment."""
        return all(orientation(a, b, p) >= 0 for a, b in self.edges())


def signed_area(poly: ConvexPolygon | Sequence[Point]) -> QS3:
    vs = poly.vertices if isinstance(poly, ConvexPolygon) else tuple(poly)
    total = ZERO
    n = len(vs)
    for i in range(n):
        total = total + vs[i].cross(vs[(i + 1) % n])
    return total * Fraction(1, 2)


def triangles_interior_disjoint(t1: Triangle, t2: Triangle) -> bool:
    """Separating-axis test over the six edge lines, touching allowed."""
    return _separated(t1, t2) or _separated(t2, t1)


def _separated(t: Triangle, other: Triangle) -> bool:
    sign = t.orientation()
    for p, q in t.edges():
        if all(orientation(p, q, v) * sign <= 0 for v in other.vertices):
            return True
    return False


def triangle_in_polygon(t: Triangle, poly: ConvexPolygon) -> bool:
    return all(poly.contains(v) for v in t.vertices)
