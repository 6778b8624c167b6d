"""Check a pattern, break it, and see which diamonds complain."""
from frieze_patterns import check_glide_symmetry, deserialize, serialize, verify_yfrieze, y_knit_vertical

f = y_knit_vertical([1, 2, 5])
report = verify_yfrieze(f)
print("valid:", report.valid, " glide symmetric:", check_glide_symmetry(f))

text = serialize(f)
print("JSON form:", text[:70], "...")
assert deserialize(text) == f.grid

broken = f.grid.with_entry(2, 1, 99)
report = verify_yfrieze(broken)
print("after changing one entry to 99:")
for r, k in report.violations:
    print(f"  diamond centred at row {r}, column {k} fails")
