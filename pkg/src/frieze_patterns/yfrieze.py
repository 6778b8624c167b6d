"""Y-frieze patterns: knitting, verification and glide symmetry.

The Y-diamond rule ``W*E = (1 + N)*(1 + S)`` can be solved for ``S``
(vertical knitting, needs ``N != -1``) or for ``E`` / ``W`` (horizontal
knitting, needs positive entries).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .core import (
    DomainError,
    KnitBlocked,
    Rational,
    PatternGrid,
    Strip,
    TheoremViolation,
    ZigZag,
    as_rational,
    div,
)

ZERO = 0
ONE = 1
MINUS_ONE = -1


@dataclass(frozen=True)
class YFrieze:
    """A closed Y-frieze pattern of width ``n``.

    Rows 0 and ``n + 1`` are zero; the row of ``-1`` below is implied.  Use the
    constructors in this module; wrapping an arbitrary grid only checks the
    boundary rows, :func:`verify_yfrieze` checks the rest.
    """

    grid: PatternGrid

    def __post_init__(self):
        g = self.grid
        if g.kind != "yfrieze":
            raise DomainError(f"expected a yfrieze grid, got kind {g.kind!r}")
        if any(v != 0 for v in g.rows[0]) or any(v != 0 for v in g.rows[-1]):
            raise DomainError("a closed Y-frieze needs rows 0 and n+1 identically 0")

    @property
    def width(self) -> int:
        return self.grid.width

    def get(self, i: int, j: int) -> Rational:
        return self.grid.get(i, j)

    def at(self, r: int, k: int) -> Rational:
        return self.grid.at(r, k)

    def diagonal(self, start: int = 0) -> tuple[Rational, ...]:
        """Values on the north-west to south-east diagonal through ``b[start, start+2]``."""
        return tuple(self.grid.at(r, start) for r in range(1, self.width + 1))

    def is_arithmetic(self) -> bool:
        return all(
            v.denominator == 1 and v > 0
            for r in range(1, self.width + 1)
            for v in self.grid.rows[r]
        )


def y_diamond_check(N, W, E, S) -> bool:
    N, W, E, S = (as_rational(v) for v in (N, W, E, S))
    return W * E == (1 + N) * (1 + S)


def y_knit_vertical_step(N, W, E) -> Rational:
    """``S = (W*E - N - 1) / (1 + N)``."""
    N, W, E = as_rational(N), as_rational(W), as_rational(E)
    if N == -1:
        raise KnitBlocked("cannot knit below a -1")
    return div(W * E - N - 1, 1 + N)


def y_knit_east_step(N, S, W) -> Rational:
    """``E = (1 + N)*(1 + S) / W``."""
    N, S, W = as_rational(N), as_rational(S), as_rational(W)
    if W == 0:
        raise KnitBlocked("cannot knit east of a 0")
    return div((1 + N) * (1 + S), W)


def y_knit_west_step(N, S, E) -> Rational:
    """``W = (1 + N)*(1 + S) / E``."""
    return y_knit_east_step(N, S, E)


def _tile(row: Sequence[Rational], length: int) -> tuple[Rational, ...]:
    return tuple(row[k % len(row)] for k in range(length))


def y_knit_vertical(first_row: Sequence, period: int | None = None, max_rows: int = 100):
    """Knit downward from ``first_row`` under a row of zeros.

    ``first_row`` is one period of a cyclic sequence (a shorter sequence is
    repeated to fill ``period`` entries).  Returns a closed :class:`YFrieze`
    as soon as a row of zeros appears, otherwise the :class:`Strip` of rows
    ``0..max_rows``.  Raises :class:`KnitBlocked` when a ``-1`` sits where a
    division needs it, and :class:`DomainError` if the first row is already
    zero (width 0).
    """
    values = [as_rational(v) for v in first_row]
    if not values:
        raise DomainError("first row is empty")
    p = len(values) if period is None else period
    if p < 1 or p % len(values):
        raise DomainError(f"period {p} is not a multiple of the {len(values)} given values")
    if max_rows < 1:
        raise DomainError("max_rows must be at least 1")
    rows = [(ZERO,) * p, _tile(values, p)]
    if all(v == 0 for v in rows[1]):
        raise DomainError("first row is identically 0: width-0 patterns are not supported")

    while len(rows) <= max_rows:
        r = len(rows) - 1
        above, cur = rows[r - 1], rows[r]
        new = []
        for k in range(p):
            N = above[(k + 1) % p]
            if N == -1:
                raise KnitBlocked(f"row {r - 1} has -1 at column {(k + 1) % p}", r - 1, (k + 1) % p)
            new.append(div(cur[k] * cur[(k + 1) % p] - N - 1, 1 + N))
        rows.append(tuple(new))
        if all(v == 0 for v in new):
            return _close_vertical(rows, p)
    return Strip("yfrieze", p, tuple(rows))


def _close_vertical(rows, p: int) -> YFrieze:
    n = len(rows) - 2
    last, zero = rows[n], rows[n + 1]
    for k in range(p):
        N = last[(k + 1) % p]
        # N = -1 leaves S free; -1 is the consistent choice there.
        if N != -1 and y_knit_vertical_step(N, zero[k], zero[(k + 1) % p]) != -1:
            raise TheoremViolation(f"row of zeros at {n + 1} not followed by a row of -1")
    grid = PatternGrid(n, tuple(_tile(row, n + 3) for row in rows), 0, "yfrieze")
    f = YFrieze(grid)
    report = verify_yfrieze(grid)
    if not report.valid or not check_glide_symmetry(f):
        raise TheoremViolation(
            f"period-{p} strip closed at width {n} but is not {n + 3}-periodic with glide symmetry"
        )
    return f


def _new_column(cur: dict[int, Rational], directions, n: int) -> dict[int, Rational]:
    """Entries immediately east of the zig-zag whose values are ``cur``.

    Row ``r`` needs the new row ``r-1`` entry when the step into ``r`` is SE,
    and the new row ``r+1`` entry when the step out of ``r`` is SW.
    """
    new: dict[int, Rational] = {0: ZERO, n + 1: ZERO}
    pending = list(range(1, n + 1))
    while pending:
        progressed = False
        for r in list(pending):
            north = new.get(r - 1) if (r == 1 or directions[r - 2] == "SE") else cur[r - 1]
            south = cur[r + 1] if (r == n or directions[r - 1] == "SE") else new.get(r + 1)
            if north is None or south is None:
                continue
            new[r] = div((1 + north) * (1 + south), cur[r])
            pending.remove(r)
            progressed = True
        if not progressed:
            raise TheoremViolation("zig-zag dependency cycle")
    return new


def y_knit_horizontal(z: ZigZag) -> YFrieze:
    """The unique positive closed Y-frieze through the zig-zag ``z``.

    Knits east one column at a time for a full period ``n + 3``; the column
    after that must reproduce the zig-zag, which is checked.
    """
    n = z.width
    if any(v <= 0 for v in z.values):
        raise DomainError("horizontal knitting needs strictly positive zig-zag values")
    L = n + 3
    cols = z.columns()
    rows = [[None] * L for _ in range(n + 2)]
    rows[0] = [ZERO] * L
    rows[n + 1] = [ZERO] * L
    cur = {0: ZERO, n + 1: ZERO}
    cur.update({r: z.values[r - 1] for r in range(1, n + 1)})
    for shift in range(L):
        for r in range(1, n + 1):
            rows[r][(cols[r - 1] + shift) % L] = cur[r]
        cur = _new_column(cur, z.directions, n)
    for r in range(1, n + 1):
        if cur[r] != z.values[r - 1]:
            raise TheoremViolation(f"horizontal knitting is not {L}-periodic at row {r}")
    return YFrieze(PatternGrid(n, tuple(tuple(row) for row in rows), 0, "yfrieze"))


def read_zigzag(f: YFrieze, directions: Sequence[str] = None, start_column: int = 0) -> ZigZag:
    """Values of ``f`` along the zig-zag with the given shape and start."""
    n = f.width
    if directions is None:
        directions = ("SE",) * (n - 1)
    shape = ZigZag(n, (ONE,) * n, tuple(directions), start_column)
    values = tuple(f.at(r, c) for r, c in zip(range(1, n + 1), shape.columns()))
    return ZigZag(n, values, shape.directions, start_column)


@dataclass
class VerifyReport:
    width: int | None
    boundary_ok: bool
    minus_one_row_ok: bool
    violations: list[tuple[int, int]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.boundary_ok and self.minus_one_row_ok and not self.violations

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "width": self.width,
            "boundary_ok": self.boundary_ok,
            "minus_one_row_ok": self.minus_one_row_ok,
            "violations": [{"row": r, "column": k} for r, k in self.violations],
        }


def diamond_violations(g: PatternGrid, rule) -> list[tuple[int, int]]:
    """Every ``(r, k)`` whose diamond ``W=(r,k), E=(r,k+1)`` breaks ``rule(N, W, E, S)``.

    Covers rows ``1..n`` and every column of one period, i.e. all diamonds
    with both horizontal corners inside the pattern.
    """
    bad = []
    for r in range(1, g.width + 1):
        for k in range(g.period):
            if not rule(g.at(r - 1, k + 1), g.at(r, k), g.at(r, k + 1), g.at(r + 1, k)):
                bad.append((r, k))
    return bad


def _fast_y_rule(N, W, E, S):
    return W * E == (1 + N) * (1 + S)


def verify_yfrieze(g) -> VerifyReport:
    """Check every diamond, the boundary rows and the implied row of -1s.

    Never divides, so patterns containing ``-1`` are fine.
    """
    g = getattr(g, "grid", g)
    n = g.width
    boundary_ok = all(v == 0 for v in g.rows[0]) and all(v == 0 for v in g.rows[n + 1])
    width = None
    for r in range(1, n + 2):
        if all(v == 0 for v in g.rows[r]):
            width = r - 1
            break
    if width == 0:
        width = None
    # below a zero row the diamond reads 0 = (1+N)(1+S); S = -1 works for all N
    minus_one_ok = all(
        _fast_y_rule(g.at(n, k + 1), ZERO, ZERO, MINUS_ONE) for k in range(g.period)
    ) and boundary_ok
    return VerifyReport(width, boundary_ok, minus_one_ok, diamond_violations(g, _fast_y_rule))


def check_glide_symmetry(f) -> bool:
    """True iff ``b[i, j] == b[j, i + n + 3]`` throughout.

    In skew coordinates this is ``(r, k) -> (n + 1 - r, k + r + 1)``.
    Translation by ``n + 3`` is built into the cyclic storage.
    """
    g = getattr(f, "grid", f)
    n = g.width
    return all(
        g.at(r, k) == g.at(n + 1 - r, k + r + 1)
        for r in range(n + 2)
        for k in range(g.period)
    )


def yfrieze_from_grid(g: PatternGrid) -> YFrieze:
    """Wrap ``g`` after a full check; raises :class:`DomainError` if invalid."""
    report = verify_yfrieze(g)
    if not report.valid:
        raise DomainError(f"not a closed Y-frieze: {len(report.violations)} diamond violations")
    return YFrieze(g)
