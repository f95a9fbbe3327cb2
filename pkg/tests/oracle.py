"""Independent exact oracle: convex clipping and union-area bookkeeping.

Shares nothing with the verifier beyond the number field and the point type.
"""
from fractions import Fraction

from tritile.exactfield import ZERO, QS3
from tritile.geom import Point
from tritile.tiles import Tiling, canonical_triangle


def _cross(o, a, b):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _area(poly):
    if len(poly) < 3:
        return ZERO
    total = ZERO
    for i in range(len(poly)):
        p, q = poly[i], poly[(i + 1) % len(poly)]
        total = total + (p.x * q.y - p.y * q.x)
    return total * Fraction(1, 2)


def _ccw(poly):
    return poly if _area(poly).sign() >= 0 else poly[::-1]


def clip(subject, clipper):
    """Sutherland-Hodgman: subject polygon cut by convex counterclockwise clipper."""
    out = list(subject)
    n = len(clipper)
    for i in range(n):
        a, b = clipper[i], clipper[(i + 1) % n]
        inp, out = out, []
        if not inp:
            break
        for j in range(len(inp)):
            p, q = inp[j], inp[(j + 1) % len(inp)]
            sp, sq = _cross(a, b, p), _cross(a, b, q)
            if sp.sign() >= 0:
                out.append(p)
            if sp.sign() * sq.sign() < 0:
                t = sp / (sp - sq)
                out.append(Point(p.x + (q.x - p.x) * t, p.y + (q.y - p.y) * t))
    return out


def intersection_area(p1, p2) -> QS3:
    return _area(clip(_ccw(list(p1)), _ccw(list(p2))))


def _box(poly):
    xs = [float(v.x) for v in poly]
    ys = [float(v.y) for v in poly]
    return min(xs) - 1e-6, max(xs) + 1e-6, min(ys) - 1e-6, max(ys) + 1e-6


def oracle_accepts(t: Tiling) -> bool:
    """Partition test by areas: pieces congruent, inside, pairwise area-disjoint, total matches."""
    if t.claimed_count != len(t.placements):
        return False
    base = canonical_triangle(t.shape).vertices
    want = sorted([QS3(t.shape.a ** 2), QS3(t.shape.b ** 2), QS3(t.shape.c ** 2)], key=float)
    tile_area = QS3(0, Fraction(t.shape.a * t.shape.b, 4))
    pieces = []
    for pl in t.placements:
        m = pl.iso
        if m.m00 * m.m00 + m.m10 * m.m10 != 1 or m.m01 * m.m01 + m.m11 * m.m11 != 1 or m.m00 * m.m01 + m.m10 * m.m11 != 0:
            return False
        tri = [m.apply(v) for v in base]
        sides = sorted(((tri[i].x - tri[i - 1].x) ** 2 + (tri[i].y - tri[i - 1].y) ** 2 for i in range(3)), key=float)
        if sides != want:
            return False
        pieces.append(_ccw(tri))
    target = list(t.target.vertices)
    total = ZERO
    for p in pieces:
        if intersection_area(p, target) != tile_area:
            return False
        total = total + tile_area
    if total != _area(target):
        return False
    boxes = [_box(p) for p in pieces]
    for i in range(len(pieces)):
        bi = boxes[i]
        for j in range(i + 1, len(pieces)):
            bj = boxes[j]
            if bi[0] > bj[1] or bj[0] > bi[1] or bi[2] > bj[3] or bj[2] > bi[3]:
                continue
            if intersection_area(pieces[i], pieces[j]).sign() != 0:
                return False
    return True
