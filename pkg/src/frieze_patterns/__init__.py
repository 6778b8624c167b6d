"""Exact construction, verification and enumeration of frieze and Y-frieze patterns."""
from .core import (
    DomainError,
    KnitBlocked,
    ParseError,
    PatternGrid,
    Rational,
    Strip,
    TheoremViolation,
    ZigZag,
    deserialize,
    grid_get,
    rational_arith,
    serialize,
)
from .ensemble import EquivalenceClass, group_by_second_row, p_map, surjectivity_report
from .enumeration import SearchConfig, enumerate_arithmetic_yfriezes, search_diagonals, unitary_pattern
from .frieze import (
    Frieze,
    Triangulation,
    catalan,
    enumerate_friezes,
    enumerate_triangulations,
    frieze_diamond_check,
    frieze_knit_vertical,
    quiddity,
)
from .render import render
from .yfrieze import (
    YFrieze,
    check_glide_symmetry,
    read_zigzag,
    verify_yfrieze,
    y_diamond_check,
    y_knit_horizontal,
    y_knit_vertical,
    y_knit_vertical_step,
)

__version__ = "0.1.0"
