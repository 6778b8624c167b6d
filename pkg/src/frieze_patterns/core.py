"""Exact scalars, the staggered cyclic grid and its JSON form.

Coordinates
-----------
An entry ``b[i, j]`` of a pattern lives in row ``r = j - i - 1``.  Inside a
row entries are indexed by the skew column ``k = i``, so that for the entry
``W = (r, k)`` the diamond it spans to the east is::

            N = (r-1, k+1)
    W = (r, k)          E = (r, k+1)
            S = (r+1, k)

On the page (see :mod:`frieze_patterns.render`) the entry ``(r, k)`` is drawn
at horizontal position ``x = 2k + r``: even rows on even positions, odd rows
on odd positions.  In those page coordinates the diamond centred on ``(r, x)``
has ``N = (r-1, x)``, ``S = (r+1, x)``, ``W = (r, x-1)`` and ``E = (r, x+1)``.

A closed pattern of width ``n`` is periodic with period ``n + 3`` in ``k``,
so each row is stored as ``n + 3`` entries.
"""
from __future__ import annotations

import json
import operator
from math import gcd
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# Scalars are normalized: an ``int`` when integral, a reduced ``Fraction``
# otherwise.  Both are exact and compare/hash consistently.
Rational = int | Fraction

KINDS = ("yfrieze", "frieze")


class DomainError(ValueError):
    """An argument lies outside the domain of an exact operation."""


class KnitBlocked(DomainError):
    """Knitting needed to divide by zero.

    ``row`` and ``column`` locate the offending entry (the ``-1`` of a
    Y-frieze, the ``0`` of a frieze) in skew coordinates.
    """

    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        super().__init__(message)
        self.row = row
        self.column = column


class ParseError(ValueError):
    """Malformed serialized input; ``position`` says where."""

    def __init__(self, message: str, position=None):
        where = f" (at {position})" if position is not None else ""
        super().__init__(f"{message}{where}")
        self.position = position


class TheoremViolation(RuntimeError):
    """A proven property failed to hold, which means a bug in this package."""


_OPS = {
    "+": operator.add,
    "-": operator.sub,
    "−": operator.sub,
    "*": operator.mul,
    "×": operator.mul,
    "/": operator.truediv,
    "÷": operator.truediv,
}


def as_rational(value) -> Rational:
    """Normalize ``value`` to an exact scalar (``int`` or non-integral ``Fraction``)."""
    if type(value) is int:
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or 'p/q' string")
    q = value if isinstance(value, Fraction) else Fraction(value)
    return q.numerator if q.denominator == 1 else q


def div(a, b) -> Rational:
    """Exact quotient ``a / b``; never produces a float."""
    if b == 0:
        raise DomainError("division by zero")
    if type(a) is int and type(b) is int:
        q, rem = divmod(a, b)
        if rem == 0:
            return q
        return Fraction(a, b)
    return as_rational(Fraction(a) / b)


def rational_arith(a, b, op: str) -> Rational:
    """Apply ``op`` (one of ``+ - * /``) exactly to two rationals."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise DomainError(f"unknown operator {op!r}") from None
    a, b = as_rational(a), as_rational(b)
    if fn is operator.truediv:
        return div(a, b)
    return as_rational(fn(a, b))


def format_rational(q) -> str:
    """``p/q`` in lowest terms, or ``p`` when the denominator is 1."""
    q = as_rational(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str, position=None) -> Rational:
    """Parse ``"p"`` or ``"p/q"``; the result is always reduced."""
    if not isinstance(text, str):
        raise ParseError(f"expected a 'p/q' string, got {text!r}", position)
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ParseError(f"not a rational: {text!r}", position) from None
    if q == 0:
        raise ParseError(f"zero denominator in {text!r}", position)
    return as_rational(Fraction(p, q))


def parse_rational_list(text: str) -> list[Rational]:
    """Comma separated rationals, e.g. ``"1,2,7/2"``."""
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty list", 0)
    return [parse_rational(p, position=idx) for idx, p in enumerate(parts)]


@dataclass(frozen=True, eq=False)
class PatternGrid:
    """Fundamental domain of a closed pattern of width ``n``.

    ``rows[r][k]`` holds ``b[origin + k, origin + k + r + 1]`` for
    ``r = 0 .. n+1`` and ``k = 0 .. n+2``; columns are read modulo ``n + 3``.
    Two grids compare equal when they describe the same function of ``(i, j)``,
    whatever their ``origin``.  Translated patterns are different patterns.
    """

    width: int
    rows: tuple[tuple[Rational, ...], ...]
    origin: int = 0
    kind: str = "yfrieze"

    def __post_init__(self):
        n = self.width
        if not isinstance(n, int) or n < 1:
            raise DomainError(f"width must be a positive integer, got {n!r}")
        if self.kind not in KINDS:
            raise DomainError(f"unknown pattern kind {self.kind!r}")
        rows = tuple(tuple(as_rational(v) for v in row) for row in self.rows)
        if len(rows) != n + 2:
            raise DomainError(f"width {n} needs {n + 2} rows, got {len(rows)}")
        for r, row in enumerate(rows):
            if len(row) != n + 3:
                raise DomainError(f"row {r} has {len(row)} entries, expected {n + 3}")
        object.__setattr__(self, "rows", rows)

    @property
    def period(self) -> int:
        return self.width + 3

    def at(self, r: int, k: int) -> Rational:
        """Entry in row ``r`` at skew column ``k`` (any integer)."""
        if not 0 <= r <= self.width + 1:
            raise IndexError(f"row {r} outside 0..{self.width + 1}")
        return self.rows[r][(k - self.origin) % self.period]

    def get(self, i: int, j: int) -> Rational:
        """Entry ``b[i, j]`` in the indexing of the displayed arrays."""
        return self.at(j - i - 1, i)

    def row(self, r: int) -> tuple[Rational, ...]:
        """Row ``r`` read from skew column 0."""
        return tuple(self.at(r, k) for k in range(self.period))

    def normalized(self) -> "PatternGrid":
        if self.origin == 0:
            return self
        return PatternGrid(self.width, tuple(self.row(r) for r in range(self.width + 2)), 0, self.kind)

    def with_entry(self, r: int, k: int, value) -> "PatternGrid":
        """Copy with one entry replaced (column taken modulo the period)."""
        g = self.normalized()
        rows = [list(row) for row in g.rows]
        rows[r][k % self.period] = as_rational(value)
        return PatternGrid(self.width, tuple(tuple(row) for row in rows), 0, self.kind)

    def entries(self) -> Iterable[Rational]:
        for row in self.rows:
            yield from row

    def _key(self):
        return (self.kind, self.width, tuple(self.row(r) for r in range(self.width + 2)))

    def __eq__(self, other):
        if not isinstance(other, PatternGrid):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        body = ", ".join("(" + ",".join(format_rational(v) for v in row) + ")" for row in self.rows)
        return f"PatternGrid(kind={self.kind!r}, width={self.width}, origin={self.origin}, rows=[{body}])"


def grid_get(g, i: int, j: int) -> Rational:
    """``b[i, j]`` of a grid, a tagged pattern or an open strip."""
    return g.get(i, j)


def rows_to_grid(width: int, rows: Sequence[Sequence], kind: str, origin: int = 0) -> PatternGrid:
    return PatternGrid(width, tuple(tuple(r) for r in rows), origin, kind)


@dataclass(frozen=True)
class ZigZag:
    """``n`` values on a vertical zig-zag.

    The row-1 value sits at skew column ``start``; ``directions[r-1]`` says
    whether the row ``r + 1`` value lies to the south-west (``"SW"``, column
    decreases by one) or south-east (``"SE"``, same column) of the row ``r``
    value.
    """

    width: int
    values: tuple[Rational, ...]
    directions: tuple[str, ...]
    start: int = 0

    def __post_init__(self):
        vals = tuple(as_rational(v) for v in self.values)
        dirs = tuple(d.upper() for d in self.directions)
        if self.width < 1:
            raise DomainError("zig-zag width must be at least 1")
        if len(vals) != self.width:
            raise DomainError(f"{self.width} values expected, got {len(vals)}")
        if len(dirs) != self.width - 1:
            raise DomainError(f"{self.width - 1} directions expected, got {len(dirs)}")
        bad = [d for d in dirs if d not in ("SE", "SW")]
        if bad:
            raise DomainError(f"directions must be SE or SW, got {bad[0]!r}")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "directions", dirs)

    @classmethod
    def diagonal(cls, values: Sequence, start: int = 0) -> "ZigZag":
        """The all-SE (north-west to south-east) diagonal."""
        return cls(len(values), tuple(values), ("SE",) * (len(values) - 1), start)

    def columns(self) -> list[int]:
        """Skew column of the value in each of rows ``1..n``."""
        cols = [self.start]
        for d in self.directions:
            cols.append(cols[-1] if d == "SE" else cols[-1] - 1)
        return cols


@dataclass(frozen=True)
class Strip:
    """A finite open strip: rows ``0..len(rows)-1`` of a periodic pattern.

    Produced by vertical knitting when no closing row turns up.
    """

    kind: str
    period: int
    rows: tuple[tuple[Rational, ...], ...]

    def at(self, r: int, k: int) -> Rational:
        if not 0 <= r < len(self.rows):
            raise IndexError(f"row {r} outside 0..{len(self.rows) - 1}")
        return self.rows[r][k % self.period]

    def get(self, i: int, j: int) -> Rational:
        return self.at(j - i - 1, i)


# --- JSON ----------------------------------------------------------------


def to_dict(g: PatternGrid) -> dict:
    return {
        "kind": g.kind,
        "width": g.width,
        "origin": g.origin,
        "rows": [[format_rational(v) for v in row] for row in g.rows],
    }


def serialize(g, kind: str | None = None) -> str:
    """JSON text for a grid or a tagged pattern (anything with ``.grid``)."""
    grid = getattr(g, "grid", g)
    if kind is not None and kind != grid.kind:
        grid = PatternGrid(grid.width, grid.rows, grid.origin, kind)
    return json.dumps(to_dict(grid))


def from_dict(data) -> PatternGrid:
    if not isinstance(data, dict):
        raise ParseError("top level must be an object", "$")
    for key in ("kind", "width", "origin", "rows"):
        if key not in data:
            raise ParseError(f"missing key {key!r}", "$")
    kind, n, origin, rows = data["kind"], data["width"], data["origin"], data["rows"]
    if kind not in KINDS:
        raise ParseError(f"unknown kind {kind!r}", "$.kind")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"width must be a positive integer, got {n!r}", "$.width")
    if not isinstance(origin, int) or isinstance(origin, bool):
        raise ParseError(f"origin must be an integer, got {origin!r}", "$.origin")
    if not isinstance(rows, list) or len(rows) != n + 2:
        raise ParseError(f"rows must be a list of {n + 2} rows", "$.rows")
    parsed = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n + 3:
            raise ParseError(f"row must be a list of {n + 3} scalars", f"$.rows[{r}]")
        parsed.append(tuple(parse_rational(v, f"$.rows[{r}][{k}]") for k, v in enumerate(row)))
    return PatternGrid(n, tuple(parsed), origin, kind)


def deserialize(text: str) -> PatternGrid:
    """Inverse of :func:`serialize`.  Raises :class:`ParseError`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.pos) from None
    return from_dict(data)


def is_reduced(q) -> bool:
    if type(q) is int:
        return True
    return q.denominator != 1 and q.denominator > 0 and gcd(abs(q.numerator), q.denominator) == 1
