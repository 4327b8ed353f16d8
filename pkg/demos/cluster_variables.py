"""Diagonals as Laurent polynomials in an initial triangulation.

Run with ``python demos/cluster_variables.py``.
"""

from frieze import (
    PolygonTriangulation,
    cluster_frieze,
    det_symbolic,
    specialize_to_one,
    symbolic_matrix,
)

t = PolygonTriangulation(5, [(1, 3), (1, 4)])
cf = cluster_frieze(t)
for pair, x in sorted(cf.variables.items()):
    print(f"x{pair[0]}{pair[1]} = {x}")

# Every generator set to 1 gives back the integer frieze.
print("rows at x = 1:", specialize_to_one(cf).rows)

# The determinant only sees the boundary edges.
hexagon = PolygonTriangulation(6, [(1, 3), (3, 5), (1, 5)])
print("det =", det_symbolic(symbolic_matrix(cluster_frieze(hexagon))))
