import math
from fractions import Fraction

import pytest

from tritile.exactfield import QS3
from tritile.geom import Isometry, Point
from tritile.tiles import (
    CoprimalityViolation, DegenerateTile, LawOfCosinesViolation, Placement, TileError, Variant,
    angle_data, canonical_triangle, footprint, make_tile, placement_side_lengths2,
)


def test_make_tile_examples():
    assert make_tile(3, 5, 7).variant is Variant.OBTUSE120
    assert make_tile(5, 8, 7, "acute").variant is Variant.ACUTE60
    with pytest.raises(CoprimalityViolation):
        make_tile(2, 4, 6)
    with pytest.raises(LawOfCosinesViolation):
        make_tile(3, 5, 8)
    with pytest.raises(LawOfCosinesViolation):
        make_tile(5, 8, 7)
    with pytest.raises(DegenerateTile):
        make_tile(1, 1, 1, "acute")
    with pytest.raises(TileError):
        make_tile(0, 1, 1)


def test_canonical_triangle_examples(s357, s587):
    v2 = canonical_triangle(s357).v2
    assert v2 == Point(QS3(Fraction(65, 14)), QS3(0, Fraction(15, 14)))
    assert canonical_triangle(s587).v2 == Point(QS3(Fraction(88, 14)), QS3(0, Fraction(40, 14)))
    for s in (s357, s587):
        tri = canonical_triangle(s)
        assert tri.signed_area() == s.area
        assert sorted(tri.side_lengths2(), key=float) == [QS3(v) for v in s.side_lengths2()]


def test_angle_data_examples(s357, s587):
    ad = angle_data(s357)
    assert ad.cos_alpha == Fraction(13, 14) and ad.sin_alpha_coeff == Fraction(3, 14)
    assert ad.cos_gamma == Fraction(-1, 2) and ad.sin_gamma_coeff == Fraction(1, 2)
    assert angle_data(s587).cos_gamma == Fraction(1, 2)


@pytest.mark.parametrize("abc", [(3, 5, 7, "obtuse"), (5, 3, 7, "obtuse"), (5, 8, 7, "acute"), (7, 8, 13, "obtuse"), (3, 8, 7, "acute")])
def test_angles_sum_to_pi(abc):
    s = make_tile(*abc)
    ad = angle_data(s)
    ca, sa = ad.cos_sin("alpha")
    cb, sb = ad.cos_sin("beta")
    cg, sg = ad.cos_sin("gamma")
    for c, si in ((ca, sa), (cb, sb), (cg, sg)):
        assert c * c + si * si == 1
    # cos(a+b) = -cos g and sin(a+b) = sin g
    assert ca * cb - sa * sb == -cg
    assert sa * cb + ca * sb == sg


def test_alpha_is_not_a_small_rational_angle(s357):
    cos_a = float(angle_data(s357).cos_alpha)
    for n in range(1, 25):
        for k in range(0, 2 * n + 1):
            assert not math.isclose(cos_a, math.cos(k * math.pi / n), abs_tol=1e-12)


def test_footprint_is_ccw_for_reflections(s357):
    mirror = Isometry.frame(Point.of(0, 0), Point.of(1, 0), mirrored=True)
    tri = footprint(s357, Placement(mirror))
    assert tri.orientation() == 1
    assert placement_side_lengths2(s357, Placement(mirror)) == [QS3(9), QS3(25), QS3(49)]


def test_area_equal_for_both_variants(s357, s587):
    assert s357.area == QS3(0, Fraction(15, 4))
    assert s587.area == QS3(0, 10)
    assert s357.trapezoid_base == 34 and s587.trapezoid_base == 49
