"""Exact certification that a tiling partitions its convex target.

For a convex target, containment of every piece, pairwise interior
disjointness and an exact area balance together imply a partition, so no
union is ever built.  Floats appear only to enumerate candidate pairs on a
bounding-box grid; every decision is made with exact predicates.
"""
from __future__ import annotations

import enum
import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .exactfield import ZERO, QS3
from .geom import Triangle, signed_area, triangle_in_polygon, triangles_interior_disjoint
from .tiles import Placement, TileShape, Tiling, footprint


class FailureKind(enum.Enum):
    BAD_CONGRUENCE = "BadCongruence"
    OUTSIDE_TARGET = "OutsideTarget"
    OVERLAP = "Overlap"
    AREA_MISMATCH = "AreaMismatch"
    COUNT_MISMATCH = "CountMismatch"


@dataclass(frozen=True)
class Failure:
    kind: FailureKind
    indices: tuple[int, ...] = ()
    detail: str = field(default="", compare=False)

    def __str__(self) -> str:
        idx = ",".join(map(str, self.indices))
        return f"{self.kind.value}[{idx}]" + (f": {self.detail}" if self.detail else "")


@dataclass
class VerifyReport:
    passed: bool
    tile_count: int
    failures: list[Failure] = field(default_factory=list)

    def kinds(self) -> list[str]:
        return sorted(f.kind.value for f in self.failures)

    def summary(self) -> str:
        if self.passed:
            return f"passed: {self.tile_count} tiles"
        counts: dict[str, int] = defaultdict(int)
        for f in self.failures:
            counts[f.kind.value] += 1
        parts = ", ".join(f"{k} x{v}" for k, v in sorted(counts.items()))
        return f"failed: {self.tile_count} tiles; {parts}"


def check_congruence(pl: Placement, shape: TileShape) -> bool:
    iso = pl.iso
    if not iso.is_orthogonal():
        return False
    try:
        tri = footprint(shape, pl)
    except ValueError:
        return False
    want = [QS3(v) for v in shape.side_lengths2()]
    return sorted(tri.side_lengths2(), key=lambda v: (v.p, v.q)) == want


class _Stop(Exception):
    pass


def verify_tiling(t: Tiling, fail_fast: bool = False) -> VerifyReport:
    """Check congruence, containment, disjointness, area and count exactly.

    With ``fail_fast`` the report holds only the first failure found.
    """
    failures: list[Failure] = []

    def fail(kind: FailureKind, indices: tuple[int, ...], detail: str = "") -> None:
        failures.append(Failure(kind, indices, detail))
        if fail_fast:
            raise _Stop

    try:
        _run_checks(t, fail)
    except _Stop:
        pass
    failures.sort(key=lambda f: (f.kind.value, f.indices))
    return VerifyReport(not failures, t.count, failures)


def _run_checks(t: Tiling, fail) -> None:
    shape = t.shape
    n = t.count
    if t.claimed_count != n:
        fail(FailureKind.COUNT_MISMATCH, (), f"claimed {t.claimed_count}, found {n}")

    tris: list[Triangle | None] = []
    for i, pl in enumerate(t.placements):
        if _congruent(shape, pl):
            tris.append(footprint(shape, pl))
        else:
            tris.append(None)
            fail(FailureKind.BAD_CONGRUENCE, (i,))

    total = ZERO
    for i, pl in enumerate(t.placements):
        tri = tris[i]
        if tri is not None:
            total = total + shape.area
        else:
            total = total + _raw_area(shape, pl)
    target_area = signed_area(t.target)
    if total != target_area:
        fail(FailureKind.AREA_MISMATCH, (), f"pieces {total} vs target {target_area}")

    for i, tri in enumerate(tris):
        if tri is not None and not _inside(tri, t.target):
            fail(FailureKind.OUTSIDE_TARGET, (i,))

    good = [i for i, tri in enumerate(tris) if tri is not None]
    for i, j in candidate_pairs([tris[i] for i in good], shape.diameter):
        gi, gj = good[i], good[j]
        if not _disjoint(tris[gi], tris[gj]):
            fail(FailureKind.OVERLAP, (gi, gj))


# Memoized exact predicates: re-verifying a slightly changed tiling only
# recomputes what involves the changed pieces.
@lru_cache(maxsize=1 << 18)
def _congruent(shape: TileShape, pl: Placement) -> bool:
    return check_congruence(pl, shape)


@lru_cache(maxsize=1 << 18)
def _inside(tri: Triangle, target) -> bool:
    return triangle_in_polygon(tri, target)


@lru_cache(maxsize=1 << 21)
def _disjoint(t1: Triangle, t2: Triangle) -> bool:
    return triangles_interior_disjoint(t1, t2)


def _raw_area(shape: TileShape, pl: Placement) -> QS3:
    # a non-isometric placement still carries some area; count it so the sum stays honest
    try:
        tri = footprint(shape, pl)
    except ValueError:
        return ZERO
    area = tri.signed_area()
    return area if area.sign() >= 0 else -area


@lru_cache(maxsize=1 << 18)
def _bbox(tri: Triangle) -> tuple[float, float, float, float]:
    xs = [float(v.x) for v in tri.vertices]
    ys = [float(v.y) for v in tri.vertices]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    # widen outward so rounding can only add candidates, never drop one
    ex = 1e-9 * (1.0 + max(abs(lo_x), abs(hi_x)))
    ey = 1e-9 * (1.0 + max(abs(lo_y), abs(hi_y)))
    return lo_x - ex, hi_x + ex, lo_y - ey, hi_y + ey


def candidate_pairs(tris: list[Triangle], cell: float) -> list[tuple[int, int]]:
    """Index pairs whose widened bounding boxes meet, found through a uniform grid."""
    boxes = [_bbox(t) for t in tris]
    grid: dict[tuple[int, int], list[int]] = defaultdict(list)
    cell = float(cell)
    for i, (x0, x1, y0, y1) in enumerate(boxes):
        for gx in range(math.floor(x0 / cell), math.floor(x1 / cell) + 1):
            for gy in range(math.floor(y0 / cell), math.floor(y1 / cell) + 1):
                grid[gx, gy].append(i)
    pairs = set()
    for members in grid.values():
        for a in range(len(members)):
            i = members[a]
            bi = boxes[i]
            for b in range(a + 1, len(members)):
                j = members[b]
                bj = boxes[j]
                if bi[0] <= bj[1] and bj[0] <= bi[1] and bi[2] <= bj[3] and bj[2] <= bi[3]:
                    pairs.add((i, j) if i < j else (j, i))
    return sorted(pairs)
