"""Turn friezes into Y-friezes by reading off their second row.

Two friezes land on the same Y-frieze exactly when their second rows agree.
For even widths that never happens; for odd widths friezes can pair up.
"""
from frieze_patterns import enumerate_friezes, group_by_second_row, p_map, render

f = enumerate_friezes(4)[7]
print("frieze:")
print(render(f))
print("its Y-frieze:")
print(render(p_map(f)))

for n in range(1, 7):
    classes = group_by_second_row(enumerate_friezes(n))
    pairs = sum(c.size == 2 for c in classes)
    print(f"width {n}: {len(classes)} distinct images, {pairs} of them hit twice")
