"""Families of tile counts N = coefficient * m^2 reachable by the constructions.

Each family is a data record: a coefficient, an admissible set of m and the
builder that realizes it.  The smallest-N table is a fold over the records.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import constructions as C
from .tiles import TileShape, Tiling, Variant


def _semigroup_member(m: int, b: int, c: int) -> bool:
    return m >= 1 and C.frobenius_decompose(m, b, c) is not None


def _pinwheel_m(shape: TileShape, m: int) -> bool:
    return m >= C.equiconstruct_threshold(shape)


def _arith_m(shape: TileShape, m: int) -> bool:
    return _semigroup_member(m, shape.b, shape.c)


def _arith_m_theorem(shape: TileShape, m: int) -> bool:
    # the coarser bound from the Frobenius number of (b, c)
    return m > shape.b * shape.c - shape.b - shape.c


def _frob_builder(fn: Callable, **kw) -> Callable[[TileShape, int], Tiling]:
    def build(shape: TileShape, m: int) -> Tiling:
        w = C.frobenius_decompose(m, shape.b, shape.c)
        if w is None:
            raise C.NotConstructible(f"m = {m} is not in {shape.b}N0 + {shape.c}N0")
        return fn(shape, w.k, w.k1, **kw)

    return build


def _equilateral_builder(shape: TileShape, m: int) -> Tiling:
    return C.tile_equilateral(shape, *C.choose_rst(shape, m))


@dataclass(frozen=True)
class FamilyKind:
    tag: str
    angles: str
    formula: str
    coefficient: Callable[[TileShape], int]
    admissible: Callable[[TileShape, int], bool]
    admissible_text: Callable[[TileShape], str]
    build: Callable[[TileShape, int], Tiling]
    variant: Variant = Variant.OBTUSE120

    def applies_to(self, shape: TileShape) -> bool:
        return shape.variant is self.variant

    def admissible_m(self, shape: TileShape) -> Callable[[int], bool]:
        return lambda m: self.admissible(shape, m)

    def n_for(self, shape: TileShape, m: int) -> int:
        return self.coefficient(shape) * m * m


def _threshold_text(shape: TileShape) -> str:
    return f"m >= {C.equiconstruct_threshold(shape)}"


def _semigroup_text(shape: TileShape) -> str:
    return f"m in {shape.b}N0 + {shape.c}N0"


FAMILIES: tuple[FamilyKind, ...] = (
    FamilyKind("Equilateral", "(a+b, a+b, a+b)", "m^2 ab",
               lambda s: s.a * s.b, _pinwheel_m, _threshold_text, _equilateral_builder),
    FamilyKind("IsoscelesBeta", "(b, b, pi-2b)", "m^2 a(b+2a)",
               lambda s: s.a * (s.b + 2 * s.a), _pinwheel_m, _threshold_text,
               lambda s, m: C.tile_isosceles(s, m, False)),
    FamilyKind("IsoscelesAlpha", "(a, a, pi-2a)", "m^2 b(a+2b)",
               lambda s: s.b * (s.a + 2 * s.b), _pinwheel_m, _threshold_text,
               lambda s, m: C.tile_isosceles(s, m, True)),
    FamilyKind("Arith2Alpha", "(a, a+b, a+2b)", "m^2 b(a+b)",
               lambda s: s.b * (s.a + s.b), _pinwheel_m, _threshold_text,
               lambda s, m: C.tile_arith2(s, m, False)),
    FamilyKind("Arith2Beta", "(b, a+b, 2a+b)", "m^2 a(a+b)",
               lambda s: s.a * (s.a + s.b), _pinwheel_m, _threshold_text,
               lambda s, m: C.tile_arith2(s, m, True)),
    FamilyKind("OddAlpha", "(a, 2b, 2a+b)", "m^2 (b+2a)(a+b)",
               lambda s: (s.b + 2 * s.a) * (s.a + s.b), _pinwheel_m, _threshold_text,
               lambda s, m: C.tile_odd(s, m, False)),
    FamilyKind("OddBeta", "(b, 2a, a+2b)", "m^2 (a+2b)(a+b)",
               lambda s: (s.a + 2 * s.b) * (s.a + s.b), _pinwheel_m, _threshold_text,
               lambda s, m: C.tile_odd(s, m, True)),
    FamilyKind("Arithmetic", "(2b, 2a, a+b)", "m^2 (a+2b)(b+2a)",
               lambda s: (s.a + 2 * s.b) * (s.b + 2 * s.a), _arith_m, _semigroup_text,
               _frob_builder(C.tile_arithmetic_frobenius)),
    FamilyKind("TripleAlpha", "(a, 2a, pi-3a)", "3m^2 (a+2b)(a+b)",
               lambda s: 3 * (s.a + 2 * s.b) * (s.a + s.b), _arith_m, _semigroup_text,
               _frob_builder(C.tile_triple_angle, swap=False)),
    FamilyKind("TripleBeta", "(b, 2b, pi-3b)", "3m^2 (2a+b)(a+b)",
               lambda s: 3 * (2 * s.a + s.b) * (s.a + s.b), _arith_m, _semigroup_text,
               _frob_builder(C.tile_triple_angle, swap=True)),
    FamilyKind("EquilateralAcute", "(a+b, a+b, a+b)", "m^2 ab",
               lambda s: s.a * s.b, _pinwheel_m, _threshold_text, _equilateral_builder,
               Variant.ACUTE60),
)

FAMILY_BY_TAG = {f.tag: f for f in FAMILIES}


def family(tag: str) -> FamilyKind:
    try:
        return FAMILY_BY_TAG[tag]
    except KeyError:
        raise ValueError(f"unknown family {tag!r}; choose from {', '.join(FAMILY_BY_TAG)}") from None


def family_N_values(shape: TileShape, fam: FamilyKind | str, limit: int, theorem_bound: bool = False) -> list[int]:
    """All coefficient*m^2 <= limit with m admissible, ascending.

    ``theorem_bound`` swaps the semigroup m-set of the Arithmetic/Triple rows
    for the coarser m > bc - b - c.
    """
    fam = family(fam) if isinstance(fam, str) else fam
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if not fam.applies_to(shape):
        return []
    coef = fam.coefficient(shape)
    ok = fam.admissible
    if theorem_bound and ok is _arith_m:
        ok = _arith_m_theorem
    out = []
    m = 1
    while coef * m * m <= limit:
        if ok(shape, m):
            out.append(coef * m * m)
        m += 1
    return out


def smallest_m(shape: TileShape, fam: FamilyKind) -> int:
    m = 1
    while not fam.admissible(shape, m):
        m += 1
    return m


def smallest_N_table(shape: TileShape) -> list[tuple[FamilyKind, int]]:
    return [(f, f.n_for(shape, smallest_m(shape, f))) for f in FAMILIES if f.applies_to(shape)]


def _squarefree(n: int) -> bool:
    return all(n % (p * p) for p in range(2, math.isqrt(n) + 1))


def equiconstructible_X_necessary(shape: TileShape, X: int) -> bool:
    """Necessary condition ab | X for an equilateral triangle of side X (a, b squarefree)."""
    if not (_squarefree(shape.a) and _squarefree(shape.b)):
        return True
    return X % shape.ab == 0


def arithmetic_N_necessary(shape: TileShape, N: int) -> bool:
    """When a and b differ mod 3, N must be (a+2b)(b+2a) times a square."""
    if (shape.a - shape.b) % 3 == 0:
        return True
    coef = (shape.a + 2 * shape.b) * (shape.b + 2 * shape.a)
    if N < 1 or N % coef:
        return False
    r = math.isqrt(N // coef)
    return r * r == N // coef
