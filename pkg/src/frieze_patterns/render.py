"""Plain-text rendering in the usual staggered frieze layout."""
from __future__ import annotations

from .core import PatternGrid, Strip, format_rational


def _layout(rows: list[list[tuple[int, str]]]) -> str:
    # rows: list of (x, text) cells; one blank column between positions
    cells = [text for row in rows for _, text in row]
    w = max((len(c) for c in cells), default=1)
    lines = []
    for row in rows:
        if not row:
            lines.append("")
            continue
        width = max(x for x, _ in row) + 1
        slots = [" " * w] * width
        for x, text in row:
            slots[x] = text.rjust(w)
        lines.append(" ".join(slots).rstrip())
    return "\n".join(lines) + "\n"


def render(g, columns: int | None = None) -> str:
    """Staggered text picture of a grid, a tagged pattern or an open strip.

    Entry ``(r, k)`` goes to position ``2k + r``, so each row is shifted half
    a cell right of the one above.  Closed patterns show one period
    (``n + 3`` entries per row) unless ``columns`` says otherwise.
    """
    g = getattr(g, "grid", g)
    if isinstance(g, PatternGrid):
        n_rows = g.width + 2
        cols = g.period if columns is None else columns
        at = g.at
    elif isinstance(g, Strip):
        n_rows = len(g.rows)
        if columns is None:
            cols = g.period * -(-4 // g.period) if g.period < 4 else g.period
        else:
            cols = columns
        at = g.at
    else:
        raise TypeError(f"cannot render {type(g).__name__}")
    rows = [
        [(2 * k + r, format_rational(at(r, k))) for k in range(cols)]
        for r in range(n_rows)
    ]
    return _layout(rows)
