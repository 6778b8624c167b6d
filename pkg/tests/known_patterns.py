"""Reference patterns entered by hand.

Rows are read from skew column 0: row ``r`` lists ``b[k, k + r + 1]`` for
``k = 0, 1, ...``.  In the staggered layout row ``r`` starts ``r`` half-cells
in from the left, so the first entry shown in each row is column 0.
"""
from frieze_patterns.core import PatternGrid

# every row (n+1)^2 - 1, first rows only
CONSTANT_STRIP_ROWS = [0, 3, 8, 15, 24]

# zeroth row of 0s over 1,2,5 repeated; closes at width 3
ROWS_125 = [
    (1, 2, 5),
    (1, 9, 4),
    (2, 5, 1),
]

# width 4, period 7, contains -1s
MINUS_ONE_ROWS = [
    (0, 0, 0, 0, 0, 0, 0),
    (1, 1, 3, -3, 0, 1, -5),
    (0, 2, -10, -1, -1, -6, -6),
    (-1, -6, -6, 0, 2, -10, -1),
    (1, -5, 1, 1, 3, -3, 0),
    (0, 0, 0, 0, 0, 0, 0),
]

# width 5; its diagonal is (1, 2, 3, 4, 5)
DIAG5_ROWS = [
    (0, 0, 0, 0, 0, 0, 0, 0),
    (1, 3, 3, 3, 3, 1, 5, 5),
    (2, 8, 8, 8, 2, 4, 24, 4),
    (3, 15, 15, 3, 3, 15, 15, 3),
    (4, 24, 4, 2, 8, 8, 8, 2),
    (5, 5, 1, 3, 3, 3, 3, 1),
    (0, 0, 0, 0, 0, 0, 0, 0),
]

# drawn zig-zag of the horizontal knitting picture (width 5)
ZIGZAG5_VALUES = (2, 3, 8, 3, 4)
ZIGZAG5_DIRS = ("SW", "SE", "SE", "SW")
# knitted values at (row, column): the 9, 1, 5, 5, 4, 4 of the picture
ZIGZAG5_KNITTED = {
    (2, 0): 9,
    (5, -1): 1,
    (1, 1): 5,
    (3, 0): 5,
    (2, 1): 4,
    (4, 0): 4,
}

# width 3, the 1s sit on the north-west to south-east diagonal; entries
# by (row, column)
HALVES_ENTRIES = {
    (1, 0): 1, (1, 1): 2, (1, 2): "7/2", (1, 3): 2, (1, 4): 1,
    (2, 0): 1, (2, 1): 6, (2, 2): 6, (2, 3): 1,
    (3, 0): 1, (3, 1): 7, (3, 2): 1,
}

# the width-4 frieze and its p_4 image, first five columns
P4_FRIEZE_ROWS = [
    (1, 1, 1, 1, 1),
    (2, 1, 4, 1, 3),
    (1, 3, 3, 2, 2),
    (2, 2, 5, 1, 3),
    (1, 3, 2, 1, 4),
    (1, 1, 1, 1, 1),
]
# full period, completed with the two quiddity entries the picture cuts off
# (the diamond rule forces 1 then 3 so the quiddity sums to 3 * 5)
P4_QUIDDITY = (2, 1, 4, 1, 3, 1, 3)
P4_YFRIEZE_ROWS = [
    (0, 0, 0, 0, 0),
    (1, 3, 3, 2, 2),
    (2, 8, 5, 3, 3),
    (3, 9, 4, 2, 8),
    (2, 5, 1, 3, 3),
    (0, 0, 0, 0, 0),
]

YFRIEZE_TABLE = {
    1: {(1,)},
    2: {(1, 1), (1, 2), (2, 1), (2, 3), (3, 2)},
    3: {
        (1, 1, 2), (1, 2, 3), (1, 4, 5), (2, 1, 1), (2, 3, 2),
        (2, 9, 5), (3, 2, 1), (3, 8, 3), (5, 4, 1), (5, 9, 2),
    },
}

CATALAN = {1: 2, 2: 5, 3: 14, 4: 42, 5: 132, 6: 429, 7: 1430, 8: 4862}


def minus_one_grid() -> PatternGrid:
    return PatternGrid(4, MINUS_ONE_ROWS)


def diag5_grid() -> PatternGrid:
    return PatternGrid(5, DIAG5_ROWS)


def width1_grid() -> PatternGrid:
    return PatternGrid(1, [(0,) * 4, (1,) * 4, (0,) * 4])
