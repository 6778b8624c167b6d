"""Bounded exhaustive search for arithmetic Y-frieze patterns.

A positive Y-frieze of width ``n`` is determined by its north-west to
south-east diagonal ``(d_1, ..., d_n)``, and those values are pattern
entries, so bounding every entry by ``B`` bounds the search to
``{1..B}^n``.  The search extends the diagonal one value at a time and
knits east whatever the prefix already determines, in integers:

* the first new entry ``E = (1 + N)(1 + d_{t+1}) / d_t`` is integral exactly
  when ``1 + d_{t+1}`` is a multiple of ``d_t / gcd(d_t, 1 + N)``, so
  candidates for ``d_{t+1}`` are generated on that progression;
* every other newly determined entry must divide evenly and stay ``<= B``.

Results are complete only relative to ``B``.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd

from .core import DomainError, PatternGrid, TheoremViolation, ZigZag
from .yfrieze import YFrieze, check_glide_symmetry, verify_yfrieze, y_knit_horizontal

BOUND_ENV = "FRIEZE_BOUND"


def default_bound(n: int) -> int:
    env = os.environ.get(BOUND_ENV)
    if env:
        return int(env)
    return 1000 if n <= 4 else 200


@dataclass(frozen=True)
class SearchConfig:
    width: int
    bound: int
    jobs: int = 1

    def __post_init__(self):
        if self.width < 1:
            raise DomainError("width must be at least 1")
        if self.bound < self.width:
            raise DomainError(f"bound {self.bound} < width {self.width} excludes the unitary pattern")
        if self.jobs < 1:
            raise DomainError("jobs must be at least 1")


def knit_int_columns(diag, bound: int):
    """Columns ``0..n+2`` of the pattern on ``diag``, in integers, or None.

    None means some entry is fractional or exceeds ``bound``.  Raises
    :class:`TheoremViolation` if column ``n + 3`` fails to repeat column 0.
    """
    n = len(diag)
    col = list(diag)
    cols = [tuple(col)]
    for c in range(1, n + 4):
        new = []
        north = 0
        for r in range(n):
            south = col[r + 1] if r + 1 < n else 0
            num = (1 + north) * (1 + south)
            q, rem = divmod(num, col[r])
            if rem or q > bound:
                return None
            new.append(q)
            north = q
        col = new
        if c < n + 3:
            cols.append(tuple(col))
    if tuple(col) != cols[0]:
        raise TheoremViolation(f"integer knitting of {tuple(diag)} is not {n + 3}-periodic")
    return cols


def _extend(n: int, bound: int, diag: list[int], tri: list[list[int]], out: list):
    """Depth-first over diagonal prefixes.

    ``tri[c]`` (c >= 1) holds the determined entries of column ``c``, rows
    ``1..len(diag) - c``.
    """
    t = len(diag)
    if t == n:
        if knit_int_columns(diag, bound) is not None:
            out.append(tuple(diag))
        return
    d_t = diag[-1]
    north = tri[1][-1] if t >= 2 else 0
    a = 1 + north
    step = d_t // gcd(d_t, a)
    # E = a * (1 + d) / d_t <= bound  =>  1 + d <= bound * d_t / a
    hi = min(bound, bound * d_t // a - 1)
    for d in range(step - 1 or step, hi + 1, step):
        new_entries = []
        ok = True
        # new anti-diagonal: column c, row t + 1 - c  (1-based rows)
        below = d
        for c in range(1, t + 1):
            r = t + 1 - c  # 1-based row of the new entry in column c
            w = diag[r - 1] if c == 1 else tri[c - 1][r - 1]
            nrt = tri[c][r - 2] if r >= 2 else 0
            num = (1 + nrt) * (1 + below)
            q, rem = divmod(num, w)
            if rem or q > bound:
                ok = False
                break
            new_entries.append(q)
            below = q
        if not ok:
            continue
        diag.append(d)
        if len(tri) <= t:
            tri.append([])
        for c, q in enumerate(new_entries, start=1):
            tri[c].append(q)
        _extend(n, bound, diag, tri, out)
        for c in range(1, t + 1):
            tri[c].pop()
        diag.pop()


def _search_branch(args) -> list[tuple[int, ...]]:
    n, bound, d1 = args
    out: list[tuple[int, ...]] = []
    if n == 1:
        # only the closing condition: (1 + 0)(1 + 0) / d1 integral
        if 1 % d1 == 0 and knit_int_columns([d1], bound) is not None:
            out.append((d1,))
        return out
    _extend(n, bound, [d1], [[]], out)
    return out


def search_diagonals(cfg: SearchConfig) -> list[tuple[int, ...]]:
    """Sorted diagonals of all arithmetic Y-friezes of width ``n`` with entries ``<= B``."""
    n, B = cfg.width, cfg.bound
    tasks = [(n, B, d1) for d1 in range(1, B + 1)]
    if cfg.jobs == 1:
        parts = map(_search_branch, tasks)
        found = [d for part in parts for d in part]
    else:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            found = [d for part in pool.map(_search_branch, tasks, chunksize=8) for d in part]
    return sorted(found)


def enumerate_arithmetic_yfriezes(cfg: SearchConfig) -> list[YFrieze]:
    """Every arithmetic Y-frieze of width ``cfg.width`` with all entries ``<= cfg.bound``.

    Sorted by diagonal.  Each result is re-knitted in exact rationals and
    fully verified before being returned.
    """
    out = []
    for diag in search_diagonals(cfg):
        f = y_knit_horizontal(ZigZag.diagonal(diag))
        if not (f.is_arithmetic() and verify_yfrieze(f).valid and check_glide_symmetry(f)):
            raise TheoremViolation(f"search returned a bad pattern for diagonal {diag}")
        if max(f.grid.entries()) > cfg.bound:
            raise TheoremViolation(f"search returned {diag} with an entry above {cfg.bound}")
        out.append(f)
    return out


def unitary_pattern(n: int) -> YFrieze:
    """The pattern on the diagonal ``(1, 2, ..., n)``; arithmetic for every ``n``."""
    if n < 1:
        raise DomainError("width must be at least 1")
    f = y_knit_horizontal(ZigZag.diagonal(range(1, n + 1)))
    if not f.is_arithmetic():
        raise TheoremViolation(f"unitary pattern of width {n} is not arithmetic")
    return f


def is_within_bound(f, bound: int) -> bool:
    g: PatternGrid = getattr(f, "grid", f)
    return max(g.entries()) <= bound
