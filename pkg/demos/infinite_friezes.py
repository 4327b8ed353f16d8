"""Infinite friezes: punctured disks, annuli and growth.

Run with ``python demos/infinite_friezes.py``.
"""

from frieze import (
    PuncturedDiskTriangulation,
    annulus_from_quiddity,
    classify,
    generate,
    growth_rate,
    growth_sequence,
    inner_quiddity,
    quiddity_of_disk,
    star_triangulation,
    thicken,
)

# Every arc to the puncture: all entries 2, rows grow by one.
star = quiddity_of_disk(star_triangulation(4))
print("star:", star, [generate(star, 5).row(r)[0] for r in range(1, 6)])

fan = PuncturedDiskTriangulation(5, [(1, 3), (1, "p"), (3, "p"), (4, "p"), (5, "p")])
q = quiddity_of_disk(fan)
print("disk with one boundary arc:", q, classify(q))

# Any infinite quiddity sequence comes from an annulus.
q = (3, 4, 2, 4)
ann, trace = annulus_from_quiddity(q)
inner = inner_quiddity(ann)
print(f"{q}: {ann.n_inner} inner points, inner boundary {inner}")

g_out, g_in = growth_sequence(q, 4), growth_sequence(inner, 4)
print("outer s_k:", g_out.s_values)
print("inner s_k:", g_in.s_values)
print("growth rate:", growth_rate(g_out.s, 20))

# Adding to an entry keeps the frieze infinite.
print("thickened:", thicken(q, 3, 2), classify(thicken(q, 3, 2)))
