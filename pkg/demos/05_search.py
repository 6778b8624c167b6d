"""Search for every integral Y-frieze up to a bound, then compare with the p-map.

The search only ever finds patterns whose entries are at most the bound, so
"nothing missing" means nothing missing up to that bound.
"""
import time

from frieze_patterns import SearchConfig, search_diagonals, surjectivity_report, unitary_pattern

for n, bound in [(1, 100), (2, 100), (3, 1000)]:
    print(f"width {n}, bound {bound}:", search_diagonals(SearchConfig(n, bound)))

print("\nthe diagonal 1..n always works, e.g.", unitary_pattern(6).diagonal())

print()
for n in range(1, 6):
    t0 = time.perf_counter()
    r = surjectivity_report(n, 200)
    print(f"width {n}: image {r.image_size}, search {r.enumerated_size}, "
          f"missing {len(r.missing)}  ({time.perf_counter() - t0:.2f}s)")
