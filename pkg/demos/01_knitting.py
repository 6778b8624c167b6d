"""Knit Y-friezes two ways and watch them close up.

Downward knitting starts from a first row and keeps applying the diamond
rule until a row of zeros appears.  Sideways knitting starts from one value
in each row along a zig-zag path.
"""
from frieze_patterns import ZigZag, render, y_knit_horizontal, y_knit_vertical

print("First row 1, 2, 5 repeating, knitted downward:")
f = y_knit_vertical([1, 2, 5])
print(render(f))
print(f"closed at width {f.width}; period {f.grid.period}\n")

print("A single 3 never closes.  The strip keeps going 3, 8, 15, 24, ...")
strip = y_knit_vertical([3], 1, max_rows=6)
print([row[0] for row in strip.rows[1:]], "\n")

print("Knitting sideways from a zig-zag of width 5:")
z = ZigZag(5, (2, 3, 8, 3, 4), ("SW", "SE", "SE", "SW"))
print(render(y_knit_horizontal(z)))

print("A diagonal of ones is fine as input, but the result is not integral:")
g = y_knit_horizontal(ZigZag.diagonal([1, 1, 1]))
print(render(g))
print("arithmetic?", g.is_arithmetic())
