"""From friezes to Y-friezes: the p-map, Y-equivalence and surjectivity runs."""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import DomainError, KnitBlocked, Rational, TheoremViolation, format_rational
from .enumeration import SearchConfig, search_diagonals
from .frieze import Frieze, enumerate_friezes
from .yfrieze import YFrieze, check_glide_symmetry, verify_yfrieze, y_knit_vertical


def p_map(f: Frieze) -> YFrieze:
    """Knit the Y-frieze whose first row is the second row ``(a[i, i+3])`` of ``f``."""
    n = f.width
    try:
        y = y_knit_vertical(f.second_row, n + 3, max_rows=n + 1)
    except KnitBlocked as exc:
        raise TheoremViolation(f"p-map blocked on a width-{n} frieze: {exc}") from exc
    if not isinstance(y, YFrieze) or y.width != n:
        got = y.width if isinstance(y, YFrieze) else "no closure"
        raise TheoremViolation(f"p-map of a width-{n} frieze closed at width {got}")
    if not y.is_arithmetic():
        raise TheoremViolation(f"p-map of a width-{n} frieze is not arithmetic")
    return y


@dataclass
class EquivalenceClass:
    second_row: tuple[Rational, ...]
    members: list[Frieze] = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.members)


def group_by_second_row(friezes: list[Frieze]) -> list[EquivalenceClass]:
    """Partition by second row, compared position by position (no rotation).

    Classes come out in order of first appearance.  Raises
    :class:`TheoremViolation` if a class is larger than 1 (even width) or
    2 (odd width).
    """
    widths = {f.width for f in friezes}
    if len(widths) > 1:
        raise DomainError(f"friezes of several widths: {sorted(widths)}")
    classes: dict[tuple, EquivalenceClass] = {}
    for f in friezes:
        key = f.second_row
        classes.setdefault(key, EquivalenceClass(key)).members.append(f)
    if widths:
        n = widths.pop()
        limit = 1 if n % 2 == 0 else 2
        for c in classes.values():
            if c.size > limit:
                raise TheoremViolation(f"class of size {c.size} at width {n}")
    return list(classes.values())


def _diag_str(diag) -> list[str]:
    return [format_rational(v) for v in diag]


@dataclass
class SurjectivityReport:
    width: int
    bound: int
    image: list[tuple]
    enumerated: list[tuple]
    missing: list[tuple]
    bound_escapes: list[tuple]
    class_sizes: dict[int, int]

    @property
    def image_size(self) -> int:
        return len(self.image)

    @property
    def enumerated_size(self) -> int:
        return len(self.enumerated)

    @property
    def consistent(self) -> bool:
        """No counterexample to surjectivity within the bound."""
        return not self.missing

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "bound": self.bound,
            "complete_up_to_bound": self.bound,
            "image_size": self.image_size,
            "enumerated_size": self.enumerated_size,
            "missing": [_diag_str(d) for d in self.missing],
            "bound_escapes": [_diag_str(d) for d in self.bound_escapes],
            "classes": {f"size{k}": v for k, v in sorted(self.class_sizes.items())},
        }


def surjectivity_report(n: int, bound: int, jobs: int = 1) -> SurjectivityReport:
    """Compare the image of the p-map with a bounded search at width ``n``.

    ``missing`` lists searched patterns outside the image (would refute
    surjectivity); ``bound_escapes`` lists image patterns the bound cannot
    see.  An image pattern inside the bound but absent from the search is a
    bug and raises :class:`TheoremViolation`.
    """
    if n < 1:
        raise DomainError("width must be at least 1")
    friezes = enumerate_friezes(n, max_width=max(n, 10))
    classes = group_by_second_row(friezes)
    image = {}
    for c in classes:
        y = p_map(c.members[0])
        if any(p_map(g) != y for g in c.members[1:]):
            raise TheoremViolation("p-map does not factor through the second row")
        image[y.diagonal()] = y
    if len(image) != len(classes):
        raise TheoremViolation(f"{len(classes)} classes but {len(image)} image patterns")

    enumerated = search_diagonals(SearchConfig(n, bound, jobs))
    found = set(enumerated)
    escapes = sorted(d for d, y in image.items() if max(y.grid.entries()) > bound)
    lost = sorted(d for d in image if d not in found and d not in escapes)
    if lost:
        raise TheoremViolation(f"search missed image patterns within the bound: {lost[:3]}")
    missing = sorted(d for d in enumerated if d not in image)

    sizes: dict[int, int] = {1: 0, 2: 0}
    for c in classes:
        sizes[c.size] = sizes.get(c.size, 0) + 1
    return SurjectivityReport(n, bound, sorted(image), enumerated, missing, escapes, sizes)


def image_of_p(n: int) -> list[YFrieze]:
    """Distinct p-map images at width ``n``, sorted by diagonal."""
    seen = {}
    for f in enumerate_friezes(n, max_width=max(n, 10)):
        y = p_map(f)
        seen.setdefault(y.diagonal(), y)
    return [seen[d] for d in sorted(seen)]


def verify_image(n: int) -> bool:
    """Every p-map image at width ``n`` is a valid, glide-symmetric arithmetic pattern."""
    return all(
        verify_yfrieze(y).valid and check_glide_symmetry(y) and y.is_arithmetic() and y.width == n
        for y in image_of_p(n)
    )
