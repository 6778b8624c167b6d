"""Coxeter frieze patterns and their generation from polygon triangulations."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .core import (
    DomainError,
    KnitBlocked,
    Rational,
    PatternGrid,
    Strip,
    TheoremViolation,
    as_rational,
    div,
)
from .yfrieze import check_glide_symmetry, diamond_violations

ONE = 1
ZERO = 0

MAX_WIDTH = 10


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class Frieze:
    """A closed frieze pattern of width ``n``: rows 0 and ``n + 1`` are all 1.

    The row of zeros below row ``n + 1`` is implied.
    """

    grid: PatternGrid

    def __post_init__(self):
        g = self.grid
        if g.kind != "frieze":
            raise DomainError(f"expected a frieze grid, got kind {g.kind!r}")
        if any(v != 1 for v in g.rows[0]) or any(v != 1 for v in g.rows[-1]):
            raise DomainError("a closed frieze needs rows 0 and n+1 identically 1")

    @property
    def width(self) -> int:
        return self.grid.width

    def get(self, i: int, j: int) -> Rational:
        return self.grid.get(i, j)

    def at(self, r: int, k: int) -> Rational:
        return self.grid.at(r, k)

    @property
    def quiddity(self) -> tuple[Rational, ...]:
        return self.grid.row(1)

    @property
    def second_row(self) -> tuple[Rational, ...]:
        """``(a[i, i+3])`` for ``i = 0 .. n+2``."""
        return self.grid.row(2)

    def is_arithmetic(self) -> bool:
        return all(v.denominator == 1 and v > 0 for v in self.grid.entries())


def frieze_diamond_check(N, W, E, S) -> bool:
    N, W, E, S = (as_rational(v) for v in (N, W, E, S))
    return W * E == 1 + N * S


def _fast_rule(N, W, E, S):
    return W * E == 1 + N * S


def frieze_violations(g: PatternGrid) -> list[tuple[int, int]]:
    return diamond_violations(g, _fast_rule)


def verify_frieze(g) -> bool:
    g = getattr(g, "grid", g)
    n = g.width
    ones = all(v == 1 for v in g.rows[0]) and all(v == 1 for v in g.rows[n + 1])
    return ones and not frieze_violations(g)


def frieze_knit_vertical(quiddity: Sequence, period: int | None = None, max_rows: int = 100):
    """Knit ``S = (W*E - 1) / N`` downward from a row of 1s over ``quiddity``.

    Returns a :class:`Frieze` at the first row of 1s (the zero row below it is
    implied), or the open :class:`Strip` after ``max_rows`` rows.
    """
    values = [as_rational(v) for v in quiddity]
    if not values:
        raise DomainError("quiddity is empty")
    p = len(values) if period is None else period
    if p < 1 or p % len(values):
        raise DomainError(f"period {p} is not a multiple of the {len(values)} given values")
    if any(v == 0 for v in values):
        raise DomainError("quiddity entries must be nonzero")
    row1 = tuple(values[k % len(values)] for k in range(p))
    if all(v == 1 for v in row1):
        raise DomainError("quiddity is identically 1: width-0 patterns are not supported")
    rows = [(ONE,) * p, row1]
    while len(rows) <= max_rows:
        r = len(rows) - 1
        above, cur = rows[r - 1], rows[r]
        new = []
        for k in range(p):
            N = above[(k + 1) % p]
            if N == 0:
                raise KnitBlocked(f"row {r - 1} has 0 at column {(k + 1) % p}", r - 1, (k + 1) % p)
            new.append(div(cur[k] * cur[(k + 1) % p] - 1, N))
        rows.append(tuple(new))
        if all(v == 1 for v in new):
            return _close(rows, p)
    return Strip("frieze", p, tuple(rows))


def _close(rows, p: int) -> Frieze:
    n = len(rows) - 2
    L = n + 3
    grid = PatternGrid(n, tuple(tuple(row[k % p] for k in range(L)) for row in rows), 0, "frieze")
    if frieze_violations(grid) or not check_glide_symmetry(grid):
        raise TheoremViolation(f"period-{p} frieze closed at width {n} but is not {L}-periodic")
    return Frieze(grid)


@dataclass(frozen=True)
class Triangulation:
    """Non-crossing diagonals ``(a, b)``, ``a < b``, of the polygon on vertices ``0..m-1``."""

    m: int
    diagonals: frozenset

    def __post_init__(self):
        if self.m < 3:
            raise DomainError("a polygon needs at least 3 vertices")
        diags = frozenset(tuple(sorted(d)) for d in self.diagonals)
        object.__setattr__(self, "diagonals", diags)

    def is_valid(self) -> bool:
        m = self.m
        if len(self.diagonals) != m - 3:
            return False
        for a, b in self.diagonals:
            if not (0 <= a < b < m) or b - a == 1 or (a == 0 and b == m - 1):
                return False
        ds = sorted(self.diagonals)
        for x, (a, b) in enumerate(ds):
            for c, d in ds[x + 1:]:
                if a < c < b < d or c < a < d < b:
                    return False
        return True


def _triangulate(poly: tuple[int, ...]):
    # triangles on the base edge (poly[-1], poly[0]); apex poly[k]
    if len(poly) < 3:
        yield ()
        return
    for k in range(1, len(poly) - 1):
        for left in _triangulate(poly[: k + 1]):
            for right in _triangulate(poly[k:]):
                yield ((poly[0], poly[k]), (poly[k], poly[-1])) + left + right


def enumerate_triangulations(m: int) -> list[Triangulation]:
    """All ``C(m-2)`` triangulations of the labelled ``m``-gon, in a fixed order.

    The triangle on the side ``(0, 1)`` is chosen first, then the two
    polygons it leaves are triangulated recursively.
    """
    if m < 3:
        raise DomainError("a polygon needs at least 3 vertices")
    poly = tuple(range(1, m)) + (0,)
    out = []
    for chords in _triangulate(poly):
        diags = {tuple(sorted(c)) for c in chords}
        diags = {(a, b) for a, b in diags if b - a != 1 and not (a == 0 and b == m - 1)}
        out.append(Triangulation(m, frozenset(diags)))
    return out


def quiddity(t: Triangulation) -> tuple[int, ...]:
    """Number of triangles at each vertex: one more than its diagonal count."""
    counts = [1] * t.m
    for a, b in t.diagonals:
        counts[a] += 1
        counts[b] += 1
    return tuple(counts)


def frieze_from_triangulation(t: Triangulation) -> Frieze:
    f = frieze_knit_vertical(quiddity(t))
    if not isinstance(f, Frieze) or f.width != t.m - 3:
        raise TheoremViolation(f"quiddity of a {t.m}-gon did not close at width {t.m - 3}")
    return f


def enumerate_friezes(n: int, max_width: int = MAX_WIDTH) -> list[Frieze]:
    """All arithmetic friezes of width ``n``, one per triangulation of the ``(n+3)``-gon."""
    if not 1 <= n <= max_width:
        raise DomainError(f"width must be in 1..{max_width}, got {n}")
    return [frieze_from_triangulation(t) for t in enumerate_triangulations(n + 3)]
