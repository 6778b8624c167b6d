"""Arithmetic friezes come from triangulated polygons.

Each triangulation of a polygon with n+3 vertices gives a quiddity row
(how many triangles meet at each vertex).  Knitting down from it produces
an integral frieze, and the counts follow the Catalan numbers.
"""
from frieze_patterns import catalan, enumerate_friezes, enumerate_triangulations, quiddity, render

for t in enumerate_triangulations(5):
    print(sorted(t.diagonals), "->", quiddity(t))

print()
f = enumerate_friezes(2)[0]
print(render(f))

print("width  friezes  catalan")
for n in range(1, 8):
    print(f"{n:5}  {len(enumerate_friezes(n)):7}  {catalan(n + 1):7}")
