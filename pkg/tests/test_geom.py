from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tritile.exactfield import QS3, ZERO
from tritile.geom import (
    ConvexPolygon, Isometry, Point, Triangle, apply_isometry, length, orientation,
    signed_area, triangle_in_polygon, triangles_interior_disjoint,
)
from tritile.tiles import canonical_triangle

from oracle import intersection_area

H = Fraction(1, 2)
P = Point.of


def test_orientation_examples():
    assert orientation(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orientation(P(0, 0), P(1, 0), P(2, 0)) == 0
    assert orientation(P(0, 0), P(1, 0), Point(QS3(H), QS3(0, -H))) == -1


def test_signed_area_examples(s357):
    assert signed_area(ConvexPolygon((P(0, 0), P(1, 0), P(0, 1)))) == QS3(H)
    eq = ConvexPolygon((P(0, 0), P(15, 0), Point(QS3(Fraction(15, 2)), QS3(0, Fraction(15, 2)))))
    assert signed_area(eq) == QS3(0, Fraction(225, 4))
    assert canonical_triangle(s357).signed_area() == QS3(0, Fraction(15, 4))


def test_apply_isometry_examples():
    assert apply_isometry(Isometry.identity(), P(5, 7)) == P(5, 7)
    assert apply_isometry(Isometry.rotation(-1, 0), P(1, 0)) == P(-1, 0)
    rot = Isometry.rotation(QS3(H), QS3(0, H))
    assert apply_isometry(rot, P(1, 0)) == Point(QS3(H), QS3(0, H))


def test_isometry_rejects_non_orthogonal():
    with pytest.raises(ValueError):
        Isometry(QS3(2), ZERO, ZERO, QS3(2), ZERO, ZERO)


def test_rotation_about_point_fixes_it():
    c = P(3, 4)
    rot = Isometry.rotation(QS3(H), QS3(0, H), about=c)
    assert rot.apply(c) == c


def test_frame_and_det():
    u = Point(QS3(H), QS3(0, H))
    f = Isometry.frame(P(1, 1), u)
    assert f.apply(P(1, 0)) == P(1, 1) + u and f.det() == 1
    g = Isometry.frame(P(0, 0), u, mirrored=True)
    assert g.det() == -1 and g.apply(P(0, 1)) == -u.perp()


def test_length():
    assert length(P(3, 4)) == QS3(5)
    assert length(Point(QS3(H), QS3(0, H))) == QS3(1)
    with pytest.raises(ValueError):
        length(P(1, 1))


def test_disjoint_examples():
    t = Triangle(P(0, 0), P(1, 0), P(0, 1))
    assert not triangles_interior_disjoint(t, t)
    u = Triangle(P(1, 0), P(1, 1), P(0, 1))
    assert triangles_interior_disjoint(t, u)
    eps = Fraction(1, 10 ** 6)
    v = Triangle(P(eps, 0), P(1 + eps, 0), P(eps, 1))
    assert not triangles_interior_disjoint(t, v)
    # vertex touching only
    w = Triangle(P(1, 0), P(2, 0), P(1, 1))
    assert triangles_interior_disjoint(t, w)


def test_in_polygon_examples(s357):
    tri = canonical_triangle(s357)
    big = ConvexPolygon.from_points(v.scale(100) for v in tri.vertices)
    assert triangle_in_polygon(tri, big)
    assert triangle_in_polygon(tri, ConvexPolygon(tri.vertices))
    off = Triangle(P(0, 0), P(200, 0), P(0, 1))
    assert not triangle_in_polygon(off, big)


def test_polygon_validation():
    with pytest.raises(ValueError):
        ConvexPolygon((P(0, 0), P(1, 0)))
    with pytest.raises(ValueError):
        ConvexPolygon((P(0, 0), P(0, 1), P(1, 0)))  # clockwise
    with pytest.raises(ValueError):
        ConvexPolygon((P(0, 0), P(2, 0), P(1, 1), P(1, -1)))
    with pytest.raises(ValueError):
        Triangle(P(0, 0), P(1, 1), P(2, 2))
    poly = ConvexPolygon.from_points([P(0, 0), P(0, 1), P(1, 1), P(1, 0)])
    assert signed_area(poly) == QS3(1)
    assert poly.contains(P(H, 1)) and not poly.contains(P(2, 0))


small = st.integers(min_value=-6, max_value=6)
pts = st.builds(lambda a, b, c, d: Point(QS3(a, b), QS3(c, d)), small, small, small, small)


@settings(max_examples=150, deadline=None)
@given(pts, pts, pts, pts, pts, pts)
def test_disjointness_agrees_with_clipping(a, b, c, d, e, f):
    if orientation(a, b, c) == 0 or orientation(d, e, f) == 0:
        return
    t1, t2 = Triangle.ccw(a, b, c), Triangle.ccw(d, e, f)
    area = intersection_area(t1.vertices, t2.vertices)
    assert triangles_interior_disjoint(t1, t2) == (area.sign() == 0)
