import pytest

from tritile import constructions as C
from tritile.geom import ConvexPolygon, Point
from tritile.search import SearchBudget, SearchStatus, exhaustive_search
from tritile.tiles import canonical_triangle
from tritile.verify import verify_tiling

BIG = SearchBudget(max_tiles=20, max_nodes=10 ** 7, time_limit=600)


def test_single_tile(s357):
    region = ConvexPolygon.from_points(canonical_triangle(s357).vertices)
    out = exhaustive_search(region, s357, BIG)
    assert out.status is SearchStatus.FOUND and out.tiling.count == 1


def test_parallelogram(s357, s587):
    for s in (s357, s587):
        out = exhaustive_search(C.parallelogram_region(s.a, s.b), s, BIG)
        assert out.status is SearchStatus.FOUND and out.tiling.count == 2
        assert verify_tiling(out.tiling).passed


@pytest.mark.parametrize("make", [
    lambda s: C.reptile_subdivision(s, 2),
    lambda s: C.reptile_subdivision(s, 3),
    lambda s: C.tile_grid_parallelogram(s, 2, 2),
    lambda s: C.tile_grid_parallelogram(s, 1, 3),
    lambda s: C.tile_parallelogram(s, 3),
    lambda s: C.tile_parallelogram(s, 5),
])
def test_completeness_on_small_constructions(s357, make):
    t = make(s357)
    assert t.count <= 12
    out = exhaustive_search(t.target, s357, BIG)
    assert out.status is SearchStatus.FOUND and out.tiling.count == t.count


def test_equilateral_15_has_no_tiling(s357):
    out = exhaustive_search(C.equilateral_region(15), s357, SearchBudget(15, 10 ** 7, 600))
    assert out.status is SearchStatus.EXHAUSTED_NONE
    assert 0 < out.nodes_explored <= 10 ** 7


def test_deterministic(s357):
    region = C.tile_grid_parallelogram(s357, 2, 2).target
    a = exhaustive_search(region, s357, BIG)
    b = exhaustive_search(region, s357, BIG)
    assert a.nodes_explored == b.nodes_explored
    assert a.tiling.placements == b.tiling.placements


def test_area_obstruction(s357):
    out = exhaustive_search(C.equilateral_region(10), s357, BIG)
    assert out.status is SearchStatus.EXHAUSTED_NONE and out.nodes_explored == 0
    out = exhaustive_search(C.equilateral_region(105), s357, SearchBudget(700, 10, 10))
    assert out.status is SearchStatus.EXHAUSTED_NONE and "max_tiles" in out.reason


def test_budget_exceeded(s357):
    out = exhaustive_search(C.equilateral_region(105), s357, SearchBudget(800, 200, 60))
    assert out.status is SearchStatus.BUDGET_EXCEEDED and out.tiling is None
    assert out.nodes_explored == 201


def test_budget_validation():
    with pytest.raises(ValueError):
        SearchBudget(0, 1, 1)
