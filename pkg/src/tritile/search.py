"""Bounded exhaustive search for tilings of small convex regions.

The search always fills the lexicographically least point of the uncovered
set.  That point is a vertex of some piece or of the region, and its
uncovered gap is narrower than a half turn, so every tiling must place a
tile with a corner exactly there, flush against the gap's clockwise edge.
Trying every such tile (three angles, two chiralities each) therefore
enumerates all tilings.  Gaps are pruned unless a multiset of tile angles
sums to them exactly.
"""
from __future__ import annotations

import enum
import math
import time
from dataclasses import dataclass, field
from functools import cmp_to_key

from .constructions import similar_copy
from .exactfield import QS3, qs3_sqrt
from .geom import ConvexPolygon, Point, Triangle, on_segment, signed_area, triangles_interior_disjoint
from .tiles import Placement, TileShape, Tiling, angle_data
from .verify import verify_tiling


class SearchStatus(enum.Enum):
    FOUND = "Found"
    EXHAUSTED_NONE = "ExhaustedNone"
    BUDGET_EXCEEDED = "BudgetExceeded"


@dataclass(frozen=True)
class SearchBudget:
    max_tiles: int = 20
    max_nodes: int = 10 ** 6
    time_limit: float = 60.0

    def __post_init__(self) -> None:
        if self.max_tiles < 1 or self.max_nodes < 1 or self.time_limit <= 0:
            raise ValueError("budget values must be positive")


@dataclass
class SearchOutcome:
    status: SearchStatus
    tiling: Tiling | None = None
    nodes_explored: int = 0
    reason: str = ""


class _OutOfBudget(Exception):
    pass


# -- exact angular helpers ---------------------------------------------------


def _half(ref: Point, d: Point) -> int:
    # 0 when d is in [0, pi) counterclockwise from ref, else 1
    cr = ref.cross(d).sign()
    if cr > 0 or (cr == 0 and ref.dot(d).sign() > 0):
        return 0
    return 1


def _angle_cmp(ref: Point):
    def cmp(d1: Point, d2: Point) -> int:
        h1, h2 = _half(ref, d1), _half(ref, d2)
        if h1 != h2:
            return h1 - h2
        return -d1.cross(d2).sign()

    return cmp


def _same_ray(u: Point, v: Point) -> bool:
    return u.cross(v).sign() == 0 and u.dot(v).sign() > 0


def _strictly_inside(d: Point, start: Point, end: Point) -> bool:
    """d strictly inside the counterclockwise sector from start to end."""
    if _same_ray(d, start) or _same_ray(d, end):
        return False
    cmp = _angle_cmp(start)
    return cmp(d, end) < 0


def _between(d1: Point, d2: Point) -> Point:
    """A direction strictly inside the counterclockwise sector d1 -> d2."""
    if d1.cross(d2).sign() > 0:
        return d1 + d2
    return d1.perp()


def _rot(cs: tuple[QS3, QS3], v: Point) -> Point:
    c, s = cs
    return Point(c * v.x - s * v.y, s * v.x + c * v.y)


def _unit_along(p: Point, q: Point) -> Point:
    d = q - p
    n = qs3_sqrt(d.norm2())
    if n is None:
        raise ValueError("edge length is not exact")
    return d / n


# -- the search ----------------------------------------------------------------


@dataclass
class _Piece:
    tri: Triangle
    box: tuple[float, float, float, float]
    units: tuple[Point, Point, Point] = field(default=None)  # unit vector of each edge v_i -> v_{i+1}


def _box(pts) -> tuple[float, float, float, float]:
    xs = [float(p.x) for p in pts]
    ys = [float(p.y) for p in pts]
    e = 1e-9 * (1 + max(map(abs, xs + ys)))
    return min(xs) - e, max(xs) + e, min(ys) - e, max(ys) + e


def _boxes_meet(b1, b2) -> bool:
    return b1[0] <= b2[1] and b2[0] <= b1[1] and b1[2] <= b2[3] and b2[2] <= b1[3]


class _Searcher:
    def __init__(self, region: ConvexPolygon, shape: TileShape, budget: SearchBudget, tiles_needed: int):
        self.region = region
        self.shape = shape
        self.budget = budget
        self.needed = tiles_needed
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit
        self.region_units = [_unit_along(p, q) for p, q in region.edges()]
        ad = angle_data(shape)
        self.angles = {
            "alpha": (ad.cos_sin("alpha"), (shape.c, shape.b)),
            "beta": (ad.cos_sin("beta"), (shape.a, shape.c)),
            "gamma": (ad.cos_sin("gamma"), (shape.b, shape.a)),
        }
        self.float_angle = {}
        for name, ((c, s), _) in self.angles.items():
            self.float_angle[name] = math.atan2(float(s), float(c))
        self.pieces: list[_Piece] = []
        self.sealed: set[Point] = set()

    # sectors at a point -----------------------------------------------------

    def _region_sector(self, v: Point):
        """(start, end) of the region's interior sector at v, 'full', or None."""
        vs = self.region.vertices
        n = len(vs)
        for i in range(n):
            if vs[i] == v:
                return self.region_units[i], -self.region_units[i - 1]
        for i, (p, q) in enumerate(self.region.edges()):
            if on_segment(v, p, q):
                u = self.region_units[i]
                return u, -u
        return "full" if self.region.contains(v) else None

    def _piece_sectors(self, v: Point):
        out = []
        fx, fy = float(v.x), float(v.y)
        for pc in self.pieces:
            b = pc.box
            if not (b[0] <= fx <= b[1] and b[2] <= fy <= b[3]):
                continue
            t = pc.tri.vertices
            for i in range(3):
                if t[i] == v:
                    out.append((pc.units[i], -pc.units[i - 1]))
                    break
            else:
                for i in range(3):
                    p, q = t[i], t[(i + 1) % 3]
                    if on_segment(v, p, q):
                        u = pc.units[i]
                        out.append((u, -u))
                        break
        return out

    def _gaps(self, v: Point):
        reg = self._region_sector(v)
        if reg is None:
            return []
        covered = self._piece_sectors(v)
        rays = []
        if reg != "full":
            rays += [reg[0], reg[1]]
        for s, e in covered:
            rays += [s, e]
        if not rays:
            return []
        ref = Point.of(0, -1)
        uniq: list[Point] = []
        for r in sorted(rays, key=cmp_to_key(_angle_cmp(ref))):
            if not uniq or not _same_ray(uniq[-1], r):
                uniq.append(r)
        if len(uniq) > 1 and _same_ray(uniq[0], uniq[-1]):
            uniq.pop()

        def free(d: Point) -> bool:
            # d never lies on a ray, so strict membership decides
            if reg != "full" and not _strictly_inside(d, reg[0], reg[1]):
                return False
            return not any(_strictly_inside(d, s, e) for s, e in covered)

        n = len(uniq)
        if n == 1:
            return [(uniq[0], uniq[0])] if free(-uniq[0]) else []
        elementary = [(uniq[i], uniq[(i + 1) % n]) for i in range(n)]
        flags = [free(_between(s, e)) for s, e in elementary]
        if all(flags):
            # only possible when nothing covers v at all
            return [(uniq[0], uniq[0])]
        # merge runs of free elementary sectors, starting after a covered one
        k = flags.index(False)
        gaps = []
        run = None
        for step in range(1, n + 1):
            i = (k + step) % n
            if flags[i]:
                run = (elementary[i][0] if run is None else run[0], elementary[i][1])
            elif run is not None:
                gaps.append(run)
                run = None
        if run is not None:
            gaps.append(run)
        gaps.sort(key=cmp_to_key(lambda g1, g2: _angle_cmp(ref)(g1[0], g2[0])))
        return gaps

    def _corner(self):
        pts = list(self.region.vertices)
        for pc in self.pieces:
            pts += pc.tri.vertices
        seen = set()
        uniq = []
        for p in pts:
            if p not in seen:
                seen.add(p)
                uniq.append(p)
        uniq.sort(key=cmp_to_key(lambda p, q: -1 if p < q else (1 if q < p else 0)))
        newly = []
        for v in uniq:
            if v in self.sealed:
                continue
            gaps = self._gaps(v)
            if gaps:
                return (v, gaps[0]), newly
            # covered points stay covered while tiles are only added
            self.sealed.add(v)
            newly.append(v)
        return None, newly

    # angle bookkeeping --------------------------------------------------------

    def _allowed_angles(self, start: Point, end: Point) -> list[str]:
        gap = math.atan2(float(start.cross(end)), float(start.dot(end)))
        if gap <= 0:
            gap += 2 * math.pi
        fa = self.float_angle
        allowed: set[str] = set()
        names = ("alpha", "beta", "gamma")
        limit = gap + 1e-6
        i = 0
        while i * fa["alpha"] <= limit:
            j = 0
            while i * fa["alpha"] + j * fa["beta"] <= limit:
                k = 0
                while i * fa["alpha"] + j * fa["beta"] + k * fa["gamma"] <= limit:
                    counts = (i, j, k)
                    if sum(counts) and self._exact_sum(counts, start, end):
                        allowed.update(n for n, c in zip(names, counts) if c)
                    k += 1
                j += 1
            i += 1
        return [n for n in names if n in allowed]

    def _exact_sum(self, counts, start: Point, end: Point) -> bool:
        d = start
        for name, c in zip(("alpha", "beta", "gamma"), counts):
            for _ in range(c):
                d = _rot(self.angles[name][0], d)
        # the float filter already keeps the total below a full turn
        return _same_ray(d, end)

    # recursion ------------------------------------------------------------------

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _OutOfBudget("node budget")
        if self.nodes % 1000 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget("time limit")

    def _fits(self, pts, box) -> bool:
        if not all(self.region.contains(p) for p in pts):
            return False
        tri = Triangle.ccw(*pts)
        for pc in self.pieces:
            if _boxes_meet(box, pc.box) and not triangles_interior_disjoint(tri, pc.tri):
                return False
        return True

    def _push(self, pts) -> None:
        tri = Triangle.ccw(*pts)
        units = tuple(_unit_along(tri.vertices[i], tri.vertices[(i + 1) % 3]) for i in range(3))
        self.pieces.append(_Piece(tri, _box(tri.vertices), units))

    def run(self) -> bool:
        self._tick()
        if len(self.pieces) == self.needed:
            return True
        corner, newly = self._corner()
        try:
            return corner is not None and self._branch(*corner)
        finally:
            self.sealed.difference_update(newly)

    def _branch(self, v: Point, gap: tuple[Point, Point]) -> bool:
        start, end = gap
        for name in self._allowed_angles(start, end):
            cs, lengths = self.angles[name]
            turned = _rot(cs, start)
            for l1, l2 in (lengths, lengths[::-1]):
                pts = (v, v + start.scale(l1), v + turned.scale(l2))
                box = _box(pts)
                if not self._fits(pts, box):
                    continue
                self._push(pts)
                if self.run():
                    return True
                self.pieces.pop()
        return False


def _edge_obstruction(region: ConvexPolygon, shape: TileShape) -> str | None:
    """Every region edge is a union of tile edges, so its length is an N0-combination of a, b, c."""
    sides = (shape.a, shape.b, shape.c)
    for p, q in region.edges():
        n = qs3_sqrt((q - p).norm2())
        if n is None or not n.is_rational() or n.p.denominator != 1:
            return "a region edge length is not an integer"
        length = int(n.p)
        reach = [True] + [False] * length
        for x in range(1, length + 1):
            reach[x] = any(x >= s and reach[x - s] for s in sides)
        if not reach[length]:
            return f"edge length {length} is not a sum of tile sides"
    return None


def exhaustive_search(region: ConvexPolygon, shape: TileShape, budget: SearchBudget) -> SearchOutcome:
    ratio = signed_area(region) / shape.area
    if not ratio.is_rational() or ratio.p.denominator != 1 or ratio.p < 1:
        return SearchOutcome(SearchStatus.EXHAUSTED_NONE, None, 0, "area is not an integer multiple of the tile")
    k = int(ratio.p)
    if k > budget.max_tiles:
        return SearchOutcome(SearchStatus.EXHAUSTED_NONE, None, 0, f"needs {k} tiles, above max_tiles")
    why = _edge_obstruction(region, shape)
    if why:
        return SearchOutcome(SearchStatus.EXHAUSTED_NONE, None, 0, why)
    s = _Searcher(region, shape, budget, k)
    try:
        found = s.run()
    except _OutOfBudget as exc:
        return SearchOutcome(SearchStatus.BUDGET_EXCEEDED, None, s.nodes, str(exc))
    if not found:
        return SearchOutcome(SearchStatus.EXHAUSTED_NONE, None, s.nodes, "search space exhausted")
    placements: list[Placement] = []
    for pc in s.pieces:
        placements += similar_copy(shape, *pc.tri.vertices)
    tiling = Tiling.of(shape, region, placements, "search")
    report = verify_tiling(tiling)
    if not report.passed:
        raise AssertionError(f"search produced an invalid tiling: {report.summary()}")
    return SearchOutcome(SearchStatus.FOUND, tiling, s.nodes, "")
