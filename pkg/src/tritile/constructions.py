"""Explicit tilings built from ideal trapezoids, parallelograms and similar copies.

Every builder computes the exact corner points of its macro pieces and fills
each piece with placements.  Sub-triangles similar to the tile are filled by
:func:`similar_copy`, which reads the vertex correspondence off the squared
side lengths, so builders only have to get the geometry right; the verifier
checks the rest.

Composite builders take a ``frame`` isometry that maps their local
coordinates into the plane.  Local conventions:

* ideal trapezoid: long side from (0,0) along +x, laterals at 60 and 120 degrees
* equilateral triangle: (0,0), (L,0), apex above
* (2alpha, 2beta, pi/3) triangle: the pi/3 corner at (0,0), one side along +x
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .exactfield import QS3, ZERO
from .geom import ConvexPolygon, Isometry, Point, dist2, orientation
from .tiles import Placement, TileShape, Tiling, Variant, canonical_triangle

IDENTITY = Isometry.identity()
HALF = Fraction(1, 2)


class NotConstructible(ValueError):
    pass


class NotRepresentable(NotConstructible):
    pass


def direction(k: int) -> Point:
    """Unit vector at k * 60 degrees."""
    table = [
        (QS3(1), ZERO),
        (QS3(HALF), QS3(0, HALF)),
        (QS3(-HALF), QS3(0, HALF)),
        (QS3(-1), ZERO),
        (QS3(-HALF), QS3(0, -HALF)),
        (QS3(HALF), QS3(0, -HALF)),
    ]
    x, y = table[k % 6]
    return Point(x, y)


def rotation60(k: int, about: Point | None = None) -> Isometry:
    d = direction(k)
    rot = Isometry.rotation(d.x, d.y)
    if about is None:
        return rot
    return Isometry.translation(about).compose(rot)


def _pt(x, y=0) -> Point:
    return Point(QS3.coerce(x), QS3.coerce(y))


def _lerp(p: Point, q: Point, t) -> Point:
    """p + t (q - p)."""
    return p + (q - p).scale(t)


# ---------------------------------------------------------------------------
# Frobenius representations


@dataclass(frozen=True)
class FrobeniusWitness:
    k: int
    k1: int


def frobenius_decompose(target: int, a: int, b: int) -> FrobeniusWitness | None:
    """``target = k*a + k1*b`` with k maximal, or None when impossible."""
    if math.gcd(a, b) != 1:
        raise ValueError("a and b must be coprime")
    if target < 0:
        return None
    for k in range(target // a, -1, -1):
        rest = target - k * a
        if rest % b == 0:
            return FrobeniusWitness(k, rest // b)
    return None


# ---------------------------------------------------------------------------
# Similar copies


def reptile_placements(shape: TileShape, k: int, pose: Isometry) -> list[Placement]:
    """The k^2 row subdivision of pose(k * canonical triangle)."""
    if k < 1:
        raise ValueError("k must be positive")
    _, v1, v2 = canonical_triangle(shape).vertices
    m1 = pose.linear(v1)
    m2 = pose.linear(v2)
    a00, a01, a10, a11 = pose.m00, pose.m01, pose.m10, pose.m11
    n00, n01, n10, n11 = -a00, -a01, -a10, -a11
    out = []
    for i in range(k):
        bx = pose.tx + m1.x * i
        by = pose.ty + m1.y * i
        for j in range(k - i):
            out.append(Placement(Isometry.unchecked(a00, a01, a10, a11, bx + m2.x * j, by + m2.y * j)))
        # point reflections fill the gaps between upright rows
        cx = bx + m1.x + m2.x
        cy = by + m1.y + m2.y
        for j in range(k - i - 1):
            out.append(Placement(Isometry.unchecked(n00, n01, n10, n11, cx + m2.x * j, cy + m2.y * j)))
    return out


def reptile_subdivision(shape: TileShape, k: int, pose: Isometry = IDENTITY) -> Tiling:
    tri = canonical_triangle(shape)
    target = ConvexPolygon.from_points(pose.apply(v.scale(k)) for v in tri.vertices)
    return Tiling.of(shape, target, reptile_placements(shape, k, pose), "reptile", {"k": k})


def similar_copy(shape: TileShape, p: Point, q: Point, r: Point) -> list[Placement]:
    """Fill triangle pqr, which must be an integer-scaled copy of the tile."""
    pts = (p, q, r)
    opp = [dist2(pts[(i + 1) % 3], pts[(i + 2) % 3]) for i in range(3)]
    base = shape.a ** 2 + shape.b ** 2 + shape.c ** 2
    k2 = (opp[0] + opp[1] + opp[2]) / base
    if not k2.is_rational() or k2.p.denominator != 1 or math.isqrt(k2.p.numerator) ** 2 != k2.p.numerator:
        raise NotConstructible("internal: piece is not an integer-scaled tile")
    k = math.isqrt(k2.p.numerator)
    roles = {}
    for i, side in enumerate((shape.a, shape.b, shape.c)):
        want = QS3((k * side) ** 2)
        for j in range(3):
            if j not in roles.values() and opp[j] == want:
                roles[i] = j
                break
        else:
            raise NotConstructible("internal: piece is not similar to the tile")
    pa, pb, pc = pts[roles[0]], pts[roles[1]], pts[roles[2]]
    u = (pb - pa) / (k * shape.c)
    pose = Isometry.frame(pa, u, mirrored=orientation(pa, pb, pc) < 0)
    return reptile_placements(shape, k, pose)


# ---------------------------------------------------------------------------
# Parallelograms


def _unit_parallelogram(shape: TileShape, o: Point, e1: Point, e2: Point) -> list[Placement]:
    # e1, e2 span a 60 degree corner at o with lengths {a, b}
    if shape.variant is Variant.OBTUSE120:
        far = o + e1 + e2
        return similar_copy(shape, o, o + e1, far) + similar_copy(shape, o, far, o + e2)
    return similar_copy(shape, o, o + e1, o + e2) + similar_copy(shape, o + e1, o + e1 + e2, o + e2)


def _grid(shape: TileShape, o: Point, u1: Point, u2: Point, p: int, q: int, s1: int, s2: int) -> list[Placement]:
    """p x q unit parallelograms with edges s1*u1 and s2*u2."""
    e1, e2 = u1.scale(s1), u2.scale(s2)
    out: list[Placement] = []
    for i in range(p):
        for j in range(q):
            out += _unit_parallelogram(shape, o + e1.scale(i) + e2.scale(j), e1, e2)
    return out


def parallelogram_region(horiz, slant, frame: Isometry = IDENTITY) -> ConvexPolygon:
    """Parallelogram with a horizontal side and a slant side at 60 degrees."""
    d = direction(1).scale(slant)
    pts = [_pt(0), _pt(horiz), _pt(horiz) + d, d]
    return ConvexPolygon.from_points(frame.apply(v) for v in pts)


def tile_unit_parallelogram(shape: TileShape, pose: Isometry = IDENTITY) -> Tiling:
    """Two tiles glued along side c; the second is the first turned half a turn."""
    tri = canonical_triangle(shape)
    v0, v1, v2 = tri.vertices
    half_turn = Isometry.rotation(-1, 0, about=Point(v1.x * HALF, ZERO))
    placements = [Placement(pose), Placement(pose.compose(half_turn))]
    target = ConvexPolygon.from_points(pose.apply(v) for v in (v0, v1 - v2, v1, v2))
    return Tiling.of(shape, target, placements, "unit-parallelogram")


def _frobenius_columns(shape: TileShape, horiz: int, frame: Isometry) -> list[Placement]:
    if horiz == 0:
        return []
    a, b = shape.a, shape.b
    w = frobenius_decompose(horiz, a, b)
    if w is None:
        raise NotRepresentable(f"horizontal side {horiz} is not a nonnegative combination of {a} and {b}")
    u1 = frame.linear(direction(0))
    u2 = frame.linear(direction(1))
    origin = frame.apply(_pt(0))
    out: list[Placement] = []
    x = 0
    for _ in range(w.k):
        out += _grid(shape, origin + u1.scale(x), u1, u2, 1, a, a, b)
        x += a
    for _ in range(w.k1):
        out += _grid(shape, origin + u1.scale(x), u1, u2, 1, b, b, a)
        x += b
    return out


def tile_parallelogram(shape: TileShape, horiz: int, pose: Isometry = IDENTITY) -> Tiling:
    """Parallelogram with horizontal side ``horiz`` and slant side ab at 60 degrees."""
    placements = _frobenius_columns(shape, horiz, pose)
    return Tiling.of(shape, parallelogram_region(horiz, shape.ab, pose), placements, "parallelogram", {"horiz": horiz})


def tile_grid_parallelogram(shape: TileShape, p: int, q: int, pose: Isometry = IDENTITY) -> Tiling:
    """Parallelogram with sides p*a (horizontal) and q*b (at 60 degrees)."""
    u1 = pose.linear(direction(0))
    u2 = pose.linear(direction(1))
    placements = _grid(shape, pose.apply(_pt(0)), u1, u2, p, q, shape.a, shape.b)
    target = parallelogram_region(p * shape.a, q * shape.b, pose)
    return Tiling.of(shape, target, placements, "grid-parallelogram", {"p": p, "q": q})


# ---------------------------------------------------------------------------
# Ideal trapezoids


@dataclass(frozen=True)
class IdealTrapezoid:
    """Short side x, lateral sides ell, long side x + ell, base angles pi/3."""

    x: int
    ell: int
    pose: Isometry = IDENTITY

    def local_vertices(self) -> list[Point]:
        long = self.x + self.ell
        return [_pt(0), _pt(long), _pt(long) + direction(2).scale(self.ell), direction(1).scale(self.ell)]

    def polygon(self) -> ConvexPolygon:
        return ConvexPolygon.from_points(self.pose.apply(v) for v in self.local_vertices())


def _basic_trapezoid(shape: TileShape, frame: Isometry) -> list[Placement]:
    a, b, c = shape.a, shape.b, shape.c
    ab = a * b
    f = frame.apply
    if shape.variant is Variant.OBTUSE120:
        A, B = _pt(0), _pt(c * c)
        D = direction(1).scale(ab)
        C = B + direction(2).scale(ab)
        E = D + _pt(a * a)
        A, B, C, D, E = map(f, (A, B, C, D, E))
        return similar_copy(shape, A, D, E) + similar_copy(shape, A, E, B) + similar_copy(shape, B, E, C)
    A, B = _pt(0), _pt(a * a + b * b)
    D = direction(1).scale(ab)
    C = B + direction(2).scale(ab)
    E = _pt(a * a)
    A, B, C, D, E = map(f, (A, B, C, D, E))
    return similar_copy(shape, D, A, E) + similar_copy(shape, D, C, E) + similar_copy(shape, C, E, B)


def tile_basic_trapezoid(shape: TileShape, pose: Isometry = IDENTITY) -> Tiling:
    trap = IdealTrapezoid(shape.trapezoid_base, shape.ab, pose)
    return Tiling.of(shape, trap.polygon(), _basic_trapezoid(shape, pose), "basic-trapezoid")


def _trapezoid_failure(shape: TileShape, x: int, ell: int) -> str | None:
    if x < 1 or ell < 1:
        return "x and ell must be positive"
    if ell % shape.ab:
        return f"(ab) must divide ell: {shape.ab} does not divide {ell}"
    rest = x - shape.trapezoid_base
    if rest < 0 or frobenius_decompose(rest, shape.a, shape.b) is None:
        return (
            f"x - {shape.trapezoid_base} must be a nonnegative combination of {shape.a} and {shape.b}; "
            f"got x = {x}"
        )
    return None


def trapezoid_constructible(shape: TileShape, x: int, ell: int) -> bool:
    return _trapezoid_failure(shape, x, ell) is None


def _ideal_trapezoid(shape: TileShape, x: int, ell: int, frame: Isometry) -> list[Placement]:
    why = _trapezoid_failure(shape, x, ell)
    if why:
        raise NotConstructible(why)
    ab = shape.ab
    layers = ell // ab
    base = shape.trapezoid_base
    out: list[Placement] = []
    for j in range(layers):
        short = x + (layers - 1 - j) * ab
        corner = direction(1).scale(j * ab)
        layer = frame.compose(Isometry.translation(corner))
        out += _frobenius_columns(shape, short - base, layer)
        out += _basic_trapezoid(shape, layer.compose(Isometry.translation(_pt(short - base))))
    return out


def tile_ideal_trapezoid(shape: TileShape, x: int, ell: int, pose: Isometry = IDENTITY) -> Tiling:
    placements = _ideal_trapezoid(shape, x, ell, pose)
    target = IdealTrapezoid(x, ell, pose).polygon()
    return Tiling.of(shape, target, placements, "trapezoid", {"x": x, "ell": ell})


# ---------------------------------------------------------------------------
# Equilateral triangles


def equiconstruct_threshold(shape: TileShape) -> int:
    """M = 3 r0 with r0 the least r such that r*ab exceeds the Frobenius-type bound."""
    a, b, c = shape.a, shape.b, shape.c
    bound = c * c - a - b if shape.variant is Variant.OBTUSE120 else a * a + b * b - a - b
    r0 = bound // (a * b) + 1
    return 3 * max(r0, 1)


def min_trapezoid_multiple(shape: TileShape) -> int:
    """Least r with an (r*ab, ab) ideal trapezoid constructible."""
    r = 1
    while not trapezoid_constructible(shape, r * shape.ab, shape.ab):
        r += 1
    return r


def choose_rst(shape: TileShape, m: int) -> tuple[int, int, int]:
    """A balanced split m = r + s + t whose three pinwheel trapezoids are constructible."""
    r_min = min_trapezoid_multiple(shape)
    q, rem = divmod(m, 3)
    if q < r_min:
        raise NotConstructible(
            f"m*ab is not equiconstructible by the pinwheel: need m >= {3 * r_min}, got m = {m}"
        )
    parts = [q + (1 if i < rem else 0) for i in range(3)]
    return parts[0], parts[1], parts[2]


def _equilateral(shape: TileShape, r: int, s: int, t: int, frame: Isometry) -> list[Placement]:
    ab = shape.ab
    for x, ell, name in ((r, s, "(r, s)"), (s, t, "(s, t)"), (t, r, "(t, r)")):
        why = _trapezoid_failure(shape, x * ab, ell * ab)
        if why:
            raise NotConstructible(f"trapezoid {name} = ({x}ab, {ell}ab) fails: {why}")
    side = (r + s + t) * ab
    corners = [_pt(0), _pt(side), direction(1).scale(side)]
    out: list[Placement] = []
    for turn, (x, ell) in enumerate(((r, s), (s, t), (t, r))):
        local = rotation60(2 * turn, about=corners[turn])
        out += _ideal_trapezoid(shape, x * ab, ell * ab, frame.compose(local))
    return out


def equilateral_region(side, frame: Isometry = IDENTITY) -> ConvexPolygon:
    return ConvexPolygon.from_points(frame.apply(v) for v in (_pt(0), _pt(side), direction(1).scale(side)))


def tile_equilateral(shape: TileShape, r: int, s: int, t: int, pose: Isometry = IDENTITY) -> Tiling:
    """Pinwheel of three ideal trapezoids filling an equilateral triangle of side (r+s+t)ab."""
    placements = _equilateral(shape, r, s, t, pose)
    target = equilateral_region((r + s + t) * shape.ab, pose)
    return Tiling.of(shape, target, placements, "equilateral", {"r": r, "s": s, "t": t})


def _equilateral_on(shape: TileShape, m: int, p: Point, q: Point) -> list[Placement]:
    """Equilateral triangle of side m*ab on segment pq, apex to the left of p -> q."""
    r, s, t = choose_rst(shape, m)
    frame = Isometry.frame(p, (q - p) / (m * shape.ab))
    return _equilateral(shape, r, s, t, frame)


# ---------------------------------------------------------------------------
# Triangles built around an equilateral core


def _require_obtuse(shape: TileShape, what: str) -> None:
    if shape.variant is not Variant.OBTUSE120:
        raise NotConstructible(f"{what} needs a tile with a 2pi/3 angle")


def _triangle_tiling(shape, pts, placements, label, params) -> Tiling:
    return Tiling.of(shape, ConvexPolygon.from_points(pts), placements, label, params)


def tile_isosceles(shape: TileShape, m: int, swap: bool = False) -> Tiling:
    """(mac, mac, ma(b+2a)); with swap the roles of a and b are exchanged."""
    _require_obtuse(shape, "isosceles construction")
    p, o = (shape.b, shape.a) if swap else (shape.a, shape.b)
    ab = shape.ab
    base = m * p * (o + 2 * p)
    P0, P3 = _pt(0), _pt(base)
    P, Q = _pt(m * p * p), _pt(m * p * p + m * ab)
    V = P + direction(1).scale(m * ab)
    placements = similar_copy(shape, P0, P, V) + _equilateral_on(shape, m, P, Q) + similar_copy(shape, Q, P3, V)
    return _triangle_tiling(shape, (P0, P3, V), placements, "isosceles", {"m": m, "swap": swap})


def _arith2_points(shape: TileShape, m: int, swap: bool):
    p = shape.a if swap else shape.b
    ab = shape.ab
    B = _pt(0)
    D = _pt(m * p * p)
    C = _pt(m * p * p + m * ab)
    A = D + direction(1).scale(m * ab)
    return A, B, C, D


def tile_arith2(shape: TileShape, m: int, swap: bool = False) -> Tiling:
    """(mab, mbc, mb(a+b)) from an equilateral core plus one similar copy."""
    _require_obtuse(shape, "arith2 construction")
    A, B, C, D = _arith2_points(shape, m, swap)
    placements = _equilateral_on(shape, m, D, C) + similar_copy(shape, A, B, D)
    return _triangle_tiling(shape, (A, B, C), placements, "arith2", {"m": m, "swap": swap})


def tile_odd(shape: TileShape, m: int, swap: bool = False) -> Tiling:
    """(mac, (b+2a)mb, (a+b)cm): an arith2 piece plus an m(a+b)-scaled copy."""
    _require_obtuse(shape, "odd construction")
    # the arith2 far corner becomes D; its equilateral foot is E
    A, B, D, E = _arith2_points(shape, m, not swap)
    inner = _equilateral_on(shape, m, E, D) + similar_copy(shape, A, B, E)
    p = shape.b if swap else shape.a
    C = D + (D - A).scale(Fraction(shape.a + shape.b, p))
    placements = inner + similar_copy(shape, B, C, D)
    return _triangle_tiling(shape, (A, B, C), placements, "odd", {"m": m, "swap": swap})


# ---------------------------------------------------------------------------
# The (2alpha, 2beta, alpha+beta) triangle


@dataclass(frozen=True)
class _View:
    """Side labels with lo < hi; the decompositions are written for that order."""

    lo: int
    hi: int
    c: int

    def apex(self, k: int, pa: Point, pb: Point, toward: Point) -> Point:
        # gamma corner of the k-scaled tile with the lo-angle at pa and the hi-angle at pb
        lo, hi, c = self.lo, self.hi, self.c
        u = (pb - pa) / (k * c)
        n = u.perp() if orientation(pa, pb, toward) > 0 else -u.perp()
        vx = Fraction(hi * hi + c * c - lo * lo, 2 * c)
        vy = QS3(0, Fraction(lo * hi, 2 * c))
        return pa + u.scale(k * vx) + n.scale(vy * k)


def _view(shape: TileShape) -> _View:
    return _View(min(shape.a, shape.b), max(shape.a, shape.b), shape.c)


def arithmetic_corners(shape: TileShape, s: int) -> dict[str, Point]:
    """Local corners of the scale-s triangle: the pi/3 corner 'w' at the origin."""
    v = _view(shape)
    lo, hi = v.lo, v.hi
    W = _pt(0)
    V = _pt(s * lo * (lo + 2 * hi))
    U = direction(1).scale(s * hi * (hi + 2 * lo))
    # U faces the lo-side, so it carries twice the angle opposite lo
    if shape.a < shape.b:
        return {"w": W, "2alpha": U, "2beta": V}
    return {"w": W, "2alpha": V, "2beta": U}


def _arith_by_hi(shape: TileShape, s: int, frame: Isometry) -> list[Placement]:
    v = _view(shape)
    lo, hi, c = v.lo, v.hi, v.c
    f = frame.apply
    W = _pt(0)
    V = _pt(s * lo * (lo + 2 * hi))
    U = direction(1).scale(s * hi * (hi + 2 * lo))
    E = v.apex(s * c, U, V, W)
    Dp = _lerp(U, W, Fraction(c * c, hi * (hi + 2 * lo)))
    t3 = Fraction(s * lo * (hi - lo), hi)
    F = _lerp(V, W, t3 * lo / (s * lo * (lo + 2 * hi)))
    Cp = _lerp(V, E, t3 * c / (s * c * lo))
    ell = s * hi * (hi + 2 * lo) - s * c * c
    long = s * lo * (lo + 2 * hi) - t3 * lo
    out = similar_copy(shape, f(U), f(V), f(E))
    out += similar_copy(shape, f(U), f(E), f(Dp))
    out += similar_copy(shape, f(V), f(Cp), f(F))
    out += similar_copy(shape, f(E), f(Dp), f(Cp))
    out += _trapezoid_between(shape, W, F, Dp, long, ell, frame)
    return out


def _arith_by_c(shape: TileShape, s: int, frame: Isometry) -> list[Placement]:
    v = _view(shape)
    lo, hi, c = v.lo, v.hi, v.c
    f = frame.apply
    W = _pt(0)
    V = _pt(s * lo * (lo + 2 * hi))
    U = direction(1).scale(s * hi * (hi + 2 * lo))
    E = v.apex(s * c, U, V, W)
    tA = Fraction(s * lo * (lo + 2 * hi), c)
    Z = _lerp(V, E, tA / (s * c))
    ell = s * c * lo - tA * lo
    tD = ell / hi
    F = _lerp(W, Z, tD * lo / (tA * hi))
    Cp = _lerp(W, U, tD * c / (s * hi * (hi + 2 * lo)))
    long = tA * hi - tD * lo
    out = similar_copy(shape, f(U), f(V), f(E))
    out += similar_copy(shape, f(V), f(W), f(Z))
    out += similar_copy(shape, f(W), f(F), f(Cp))
    out += similar_copy(shape, f(U), f(Cp), f(E))
    out += _trapezoid_between(shape, Z, F, E, long, ell, frame)
    return out


def _trapezoid_between(shape, origin: Point, base_end: Point, lateral_end: Point, long, ell, frame) -> list[Placement]:
    long, ell = Fraction(long), Fraction(ell)
    if long.denominator != 1 or ell.denominator != 1:
        raise NotConstructible("internal: trapezoid sides are not integers")
    u = (base_end - origin) / long
    mirrored = orientation(origin, base_end, lateral_end) < 0
    local = Isometry.frame(origin, u, mirrored)
    return _ideal_trapezoid(shape, int(long - ell), int(ell), frame.compose(local))


def _arithmetic(shape: TileShape, s1: int, s2: int, frame: Isometry) -> list[Placement]:
    """Scale s1 + s2 triangle; the s1 part must be a multiple of max(a,b), s2 of c."""
    v = _view(shape)
    lo, hi, c = v.lo, v.hi, v.c
    if s1 % hi or s2 % c:
        raise NotConstructible(f"scale split ({s1}, {s2}) must be a multiple of ({hi}, {c})")
    if s2 == 0:
        return _arith_by_hi(shape, s1, frame)
    if s1 == 0:
        return _arith_by_c(shape, s2, frame)
    s = s1 + s2
    W = _pt(0)
    V = _pt(s * lo * (lo + 2 * hi))
    U = direction(1).scale(s * hi * (hi + 2 * lo))
    Z1 = _lerp(U, W, Fraction(s1, s))
    Z2 = _lerp(V, W, Fraction(s2, s))
    out = _arith_by_hi(shape, s1, frame.compose(Isometry.translation(Z1)))
    out += _arith_by_c(shape, s2, frame.compose(Isometry.translation(Z2)))
    u1 = frame.linear(direction(0))
    u2 = frame.linear(direction(1))
    out += _grid(shape, frame.apply(W), u1, u2, s1 * (lo + 2 * hi), s2 * (hi + 2 * lo), lo, hi)
    return out


def arithmetic_split(shape: TileShape, s: int) -> tuple[int, int]:
    """Write the scale s as s1 + s2 with s1 in max(a,b)*N0 and s2 in c*N0."""
    v = _view(shape)
    w = frobenius_decompose(s, v.hi, v.c)
    if w is None:
        raise NotConstructible(f"scale {s} is not in {v.hi}N0 + {v.c}N0")
    return w.k * v.hi, w.k1 * v.c


def _arith_target(shape: TileShape, s: int, frame: Isometry) -> list[Point]:
    return [frame.apply(p) for p in arithmetic_corners(shape, s).values()]


def tile_arithmetic(shape: TileShape, m: int, option: int) -> Tiling:
    """Option 1: sides ((a+2b)mac, (b+2a)mbc, c^3 m); option 2: ((a+2b)mab, (b+2a)mb^2, bc^2 m)."""
    _require_obtuse(shape, "arithmetic construction")
    if m < 1:
        raise NotConstructible("m must be positive")
    if option == 1:
        s1, s2 = 0, shape.c * m
    elif option == 2:
        s1, s2 = arithmetic_split(shape, shape.b * m)
    else:
        raise ValueError("option must be 1 or 2")
    s = s1 + s2
    placements = _arithmetic(shape, s1, s2, IDENTITY)
    return _triangle_tiling(shape, _arith_target(shape, s, IDENTITY), placements, "arithmetic", {"m": m, "option": option})


def _frob_scales(shape: TileShape, k: int, k1: int) -> tuple[int, int]:
    if k < 0 or k1 < 0 or k + k1 < 1:
        raise NotConstructible("need k, k1 >= 0 and k + k1 >= 1")
    s1, s2 = shape.b * k, shape.c * k1
    if s1 % max(shape.a, shape.b):
        # with a > b the b*k part has to be rewritten over (a, c)
        t1, t2 = arithmetic_split(shape, s1)
        s1, s2 = t1, t2 + s2
    return s1, s2


def tile_arithmetic_frobenius(shape: TileShape, k: int, k1: int) -> Tiling:
    """Scale bk + ck1: an option-2 piece, an option-1 piece and a parallelogram between them."""
    _require_obtuse(shape, "arithmetic construction")
    s1, s2 = _frob_scales(shape, k, k1)
    placements = _arithmetic(shape, s1, s2, IDENTITY)
    target = _arith_target(shape, s1 + s2, IDENTITY)
    return _triangle_tiling(shape, target, placements, "arith-frob", {"k": k, "k1": k1})


def tile_triple_angle(shape: TileShape, k: int, k1: int, swap: bool = False) -> Tiling:
    """(c^2 m, (a+2b)mc, 3(a+b)mb) with m = bk + ck1; swap exchanges the roles of a and b."""
    _require_obtuse(shape, "triple-angle construction")
    a, b = shape.a, shape.b
    s1, s2 = _frob_scales(shape, k, k1)
    m = s1 + s2
    corners = arithmetic_corners(shape, m)
    D = corners["w"]
    if swap:
        B, A = corners["2beta"], corners["2alpha"]
        ratio = Fraction(b + 2 * a, a + 2 * b)
    else:
        B, A = corners["2alpha"], corners["2beta"]
        ratio = Fraction(a + 2 * b, b + 2 * a)
    C = D + (D - B).scale(ratio)
    placements = _arithmetic(shape, s1, s2, IDENTITY) + similar_copy(shape, A, D, C)
    return _triangle_tiling(shape, (A, B, C), placements, "triple", {"k": k, "k1": k1, "m": m, "swap": swap})


def concat(tilings: Iterable[Tiling]) -> list[Placement]:
    out: list[Placement] = []
    for t in tilings:
        out += t.placements
    return out
