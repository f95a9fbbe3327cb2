import random
from collections import Counter
from fractions import Fraction

import pytest

from tritile import constructions as C
from tritile.exactfield import QS3, ZERO
from tritile.geom import Isometry, Point
from tritile.tiles import Placement, Tiling
from tritile.verify import FailureKind, candidate_pairs, check_congruence, verify_tiling

from mutations import mutate, translate
from oracle import oracle_accepts


def test_check_congruence_examples(s357):
    assert check_congruence(Placement(Isometry.identity()), s357)
    two = QS3(2)
    assert not check_congruence(Placement(Isometry.unchecked(two, ZERO, ZERO, two, ZERO, ZERO)), s357)
    mirror = Isometry.frame(Point.of(1, 2), Point.of(0, -1), mirrored=True)
    assert check_congruence(Placement(mirror), s357)
    zero = Isometry.unchecked(ZERO, ZERO, ZERO, ZERO, ZERO, ZERO)
    assert not check_congruence(Placement(zero), s357)


def test_unit_parallelogram_passes(s357):
    r = verify_tiling(C.tile_unit_parallelogram(s357))
    assert r.passed and r.tile_count == 2 and r.failures == []


def test_duplicate_reports_overlap_and_area(s357):
    t = C.tile_unit_parallelogram(s357)
    dup = Tiling.of(t.shape, t.target, t.placements + t.placements[:1])
    kinds = set(verify_tiling(dup).kinds())
    assert {"Overlap", "AreaMismatch"} <= kinds


def test_count_mismatch(s357):
    t = C.tile_unit_parallelogram(s357)
    bad = Tiling(t.shape, t.target, t.placements, 3)
    assert verify_tiling(bad).kinds() == ["CountMismatch"]


def test_outside_target(s357):
    t = C.tile_basic_trapezoid(s357)
    moved = translate(t, 0, Point.of(-1, 0))
    r = verify_tiling(moved)
    assert "OutsideTarget" in r.kinds() and not r.passed


def test_bad_congruence_does_not_crash(s357):
    t = C.tile_unit_parallelogram(s357)
    two = QS3(2)
    pl = list(t.placements)
    pl[0] = Placement(Isometry.unchecked(two, ZERO, ZERO, two, ZERO, ZERO))
    r = verify_tiling(Tiling.of(t.shape, t.target, pl))
    assert "BadCongruence" in r.kinds() and "AreaMismatch" in r.kinds()


def test_fail_fast_stops_at_first(s357):
    t = C.tile_basic_trapezoid(s357)
    r = verify_tiling(Tiling.of(t.shape, t.target, t.placements[:-2]), fail_fast=True)
    assert not r.passed and len(r.failures) == 1


@pytest.mark.parametrize("q", [10 ** 3, 10 ** 6])
def test_every_single_translation_is_caught(s357, q):
    t = C.tile_basic_trapezoid(s357)
    for i in range(t.count):
        for v in (Point.of(Fraction(1, q), 0), Point.of(Fraction(-1, q), 0)):
            assert not verify_tiling(translate(t, i, v), fail_fast=True).passed


def test_order_independence(s357):
    rng = random.Random(7)
    t = C.tile_ideal_trapezoid(s357, 42, 15)
    for _ in range(10):
        _, bad = mutate(t, rng)
        for base in (t, bad):
            pl = list(base.placements)
            rng.shuffle(pl)
            shuffled = Tiling(base.shape, base.target, tuple(pl), base.claimed_count)
            r1, r2 = verify_tiling(base), verify_tiling(shuffled)
            assert r1.passed == r2.passed
            assert Counter(r1.kinds()) == Counter(r2.kinds())


def small_corpus(s357, s587):
    return [
        C.tile_unit_parallelogram(s357),
        C.tile_unit_parallelogram(s587),
        C.tile_grid_parallelogram(s357, 2, 3),
        C.tile_parallelogram(s357, 8),
        C.tile_parallelogram(s587, 13),
        C.reptile_subdivision(s357, 7),
        C.tile_basic_trapezoid(s357),
        C.tile_basic_trapezoid(s587),
        C.tile_ideal_trapezoid(s357, 37, 15),
    ]


def test_agrees_with_clipping_oracle(s357, s587):
    rng = random.Random(11)
    checked = 0
    for t in small_corpus(s357, s587):
        assert t.count <= 200
        assert verify_tiling(t).passed and oracle_accepts(t)
        for kind in ("translate", "rotate", "delete", "duplicate"):
            _, bad = mutate(t, rng, kind)
            assert verify_tiling(bad).passed == oracle_accepts(bad) == False  # noqa: E712
            checked += 1
    assert checked == 36


def test_candidate_pairs_cover_all_touching_pairs(s357):
    t = C.reptile_subdivision(s357, 5)
    tris = t.footprints()
    pairs = set(candidate_pairs(tris, s357.diameter))
    for i in range(len(tris)):
        for j in range(i + 1, len(tris)):
            shared = set(tris[i].vertices) & set(tris[j].vertices)
            if shared:
                assert (i, j) in pairs


def test_equilateral_1215_passes(s357):
    r = verify_tiling(C.tile_equilateral(s357, 3, 3, 3))
    assert r.passed and r.tile_count == 1215
