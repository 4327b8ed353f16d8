"""Closed friezes and triangulated polygons.

Run with ``python demos/closed_friezes.py``.
"""

from frieze import (
    PolygonTriangulation,
    classify,
    det_int,
    enumerate_triangulations,
    frieze_matrix,
    generate,
    matchings,
    quiddity_of,
    triangulation_from_quiddity,
)
from frieze.cli import render_grid

# The fan of diagonals at vertex 1 of a hexagon.
fan = PolygonTriangulation(6, [(1, 3), (1, 4), (1, 5)])
q = quiddity_of(fan)
print("triangles per vertex:", q)

# Row 1 determines everything below it.
grid = generate(q, 10)
print(render_grid(grid), end="")
print("classification:", classify(q))

# Entries count matchings of vertices with triangles.
m = matchings(fan, 6, 3)
print(f"a(6,3) = {grid.value(6, 9)}; matchings between 6 and 3:")
for assignment in m.matchings:
    print("   ", dict(zip(m.vertices, assignment)))

# The quiddity sequence alone recovers the triangulation.
assert triangulation_from_quiddity(q) == fan

# The frieze matrix has the same determinant for every triangulation.
for n in range(3, 9):
    dets = {det_int(frieze_matrix(t)) for t in enumerate_triangulations(n)}
    print(f"n={n}: {len(enumerate_triangulations(n)):4d} triangulations, det in {dets}")
