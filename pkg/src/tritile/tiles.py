"""The tile triangle (a, b, c), its exact trigonometry, placements and tilings."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactfield import QS3, ZERO
from .geom import ConvexPolygon, Isometry, Point, Triangle, dist2, signed_area


class Variant(enum.Enum):
    OBTUSE120 = "obtuse"
    ACUTE60 = "acute"


class TileError(ValueError):
    pass


class CoprimalityViolation(TileError):
    pass


class LawOfCosinesViolation(TileError):
    pass


class DegenerateTile(TileError):
    pass


@dataclass(frozen=True)
class TileShape:
    a: int
    b: int
    c: int
    variant: Variant = Variant.OBTUSE120

    def __str__(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    @property
    def ab(self) -> int:
        return self.a * self.b

    @property
    def area(self) -> QS3:
        """ab*sqrt(3)/4 for both variants (sin of the special angle is sqrt(3)/2)."""
        return QS3(0, Fraction(self.ab, 4))

    @property
    def trapezoid_base(self) -> int:
        """Short side of the basic ideal trapezoid."""
        if self.variant is Variant.OBTUSE120:
            return self.a ** 2 + self.b ** 2
        return self.c ** 2

    @property
    def diameter(self) -> int:
        return max(self.a, self.b, self.c)

    def side_lengths2(self) -> list[int]:
        return sorted([self.a ** 2, self.b ** 2, self.c ** 2])


def make_tile(a: int, b: int, c: int, variant: Variant | str = Variant.OBTUSE120) -> TileShape:
    variant = Variant(variant) if not isinstance(variant, Variant) else variant
    if min(a, b, c) < 1:
        raise TileError("side lengths must be positive integers")
    if math.gcd(a, b) != 1 or math.gcd(b, c) != 1 or math.gcd(a, c) != 1:
        raise CoprimalityViolation(f"sides {a},{b},{c} are not pairwise coprime")
    if a == b:
        raise DegenerateTile("a = b gives an equilateral tile with commensurable angles")
    cross = a * b if variant is Variant.OBTUSE120 else -a * b
    if c * c != a * a + b * b + cross:
        sign = "+" if variant is Variant.OBTUSE120 else "-"
        raise LawOfCosinesViolation(f"c^2 = a^2 + b^2 {sign} ab fails for {a},{b},{c}")
    return TileShape(a, b, c, variant)


@dataclass(frozen=True)
class AngleData:
    """cos and sin/sqrt(3) of each tile angle."""

    cos_alpha: Fraction
    sin_alpha_coeff: Fraction
    cos_beta: Fraction
    sin_beta_coeff: Fraction
    cos_gamma: Fraction
    sin_gamma_coeff: Fraction

    def cos_sin(self, which: str) -> tuple[QS3, QS3]:
        cos = getattr(self, f"cos_{which}")
        sin = getattr(self, f"sin_{which}_coeff")
        return QS3(cos), QS3(0, sin)


def angle_data(shape: TileShape) -> AngleData:
    a, b, c = shape.a, shape.b, shape.c
    return AngleData(
        cos_alpha=Fraction(b * b + c * c - a * a, 2 * b * c),
        sin_alpha_coeff=Fraction(a, 2 * c),
        cos_beta=Fraction(a * a + c * c - b * b, 2 * a * c),
        sin_beta_coeff=Fraction(b, 2 * c),
        cos_gamma=Fraction(-1, 2) if shape.variant is Variant.OBTUSE120 else Fraction(1, 2),
        sin_gamma_coeff=Fraction(1, 2),
    )


@lru_cache(maxsize=None)
def canonical_triangle(shape: TileShape) -> Triangle:
    """v0 = (0,0) carries alpha, v1 = (c,0) carries beta, v2 (above) carries gamma."""
    a, b, c = shape.a, shape.b, shape.c
    v2 = Point(QS3(Fraction(b * b + c * c - a * a, 2 * c)), QS3(0, Fraction(a * b, 2 * c)))
    return Triangle(Point(ZERO, ZERO), Point(QS3(c), ZERO), v2)


@dataclass(frozen=True)
class Placement:
    iso: Isometry


@lru_cache(maxsize=1 << 18)
def footprint(shape: TileShape, placement: Placement) -> Triangle:
    """Image of the canonical triangle, wound counterclockwise."""
    iso = placement.iso
    v0, v1, v2 = canonical_triangle(shape).vertices
    # v0 is the origin and v1 lies on the x-axis, so the images are cheap
    p0 = Point(iso.tx, iso.ty)
    p1 = Point(iso.m00 * v1.x + iso.tx, iso.m10 * v1.x + iso.ty)
    p2 = iso.apply(v2)
    if iso.det() < 0:
        return Triangle(p0, p2, p1)
    return Triangle(p0, p1, p2)


@dataclass(frozen=True)
class Tiling:
    shape: TileShape
    target: ConvexPolygon
    placements: tuple[Placement, ...]
    claimed_count: int
    label: str = ""
    params: dict = field(default_factory=dict, compare=False, hash=False)

    @classmethod
    def of(cls, shape: TileShape, target: ConvexPolygon, placements, label: str = "", params: dict | None = None) -> Tiling:
        placements = tuple(placements)
        return cls(shape, target, placements, len(placements), label, dict(params or {}))

    @property
    def count(self) -> int:
        return len(self.placements)

    def footprints(self) -> list[Triangle]:
        return [footprint(self.shape, p) for p in self.placements]

    def transformed(self, iso: Isometry) -> Tiling:
        return Tiling(
            self.shape,
            self.target.transformed(iso),
            tuple(Placement(iso.compose(p.iso)) for p in self.placements),
            self.claimed_count,
            self.label,
            dict(self.params),
        )

    def area_ratio(self) -> Fraction:
        """signed_area(target) / tile area; an integer for any genuine tiling."""
        ratio = signed_area(self.target) / self.shape.area
        if not ratio.is_rational():
            raise ValueError("target area is not a rational multiple of the tile area")
        return ratio.p


def placement_side_lengths2(shape: TileShape, placement: Placement) -> list[QS3]:
    t = footprint(shape, placement)
    return sorted((dist2(p, q) for p, q in t.edges()), key=lambda v: (v.p, v.q))

