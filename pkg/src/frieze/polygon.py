"""Triangulated polygons and their closed friezes.

Vertices are labelled 1..n clockwise.  A diagonal is a sorted pair ``(i, j)``
that is neither a boundary edge ``(i, i+1)`` nor the closing edge ``(1, n)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .core import (
    Closed,
    FriezeGrid,
    QuidditySequence,
    as_quiddity,
    classify,
    cut,
    generate,
    glue,
)
from .errors import (
    AdjacentVertices,
    CrossingDiagonals,
    InvalidTriangulation,
    NotClosed,
    TooLarge,
    WrongCount,
)
from .linalg import bareiss_det, cofactor_det

__all__ = [
    "PolygonTriangulation",
    "MatchingSet",
    "FriezeMatrix",
    "validate",
    "enumerate_triangulations",
    "quiddity_of",
    "triangulation_from_quiddity",
    "glue",
    "cut",
    "matchings",
    "frieze_matrix",
    "det_int",
    "crosses",
    "closed_frieze",
    "is_boundary",
]

MAX_ENUMERATE = 12


def crosses(d1, d2) -> bool:
    """Chords of a convex polygon cross iff their endpoints interleave."""
    (a, b), (c, d) = sorted(d1), sorted(d2)
    return a < c < b < d or c < a < d < b


def is_boundary(n: int, pair) -> bool:
    i, j = sorted(pair)
    return j == i + 1 or (i, j) == (1, n)


@dataclass(frozen=True)
class PolygonTriangulation:
    n: int
    diagonals: frozenset[tuple[int, int]]

    def __init__(self, n: int, diagonals=()):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "diagonals", frozenset(tuple(sorted(d)) for d in diagonals))

    def sorted_diagonals(self) -> list[tuple[int, int]]:
        return sorted(self.diagonals)

    def edges(self) -> set[tuple[int, int]]:
        """Diagonals together with the n boundary edges, as sorted pairs."""
        n = self.n
        out = set(self.diagonals)
        out.update((i, i + 1) for i in range(1, n))
        out.add((1, n))
        return out

    def triangles(self) -> list[tuple[int, int, int]]:
        validate(self)
        return _triangles(self)

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [list(d) for d in self.sorted_diagonals()]}

    @classmethod
    def from_json(cls, data) -> "PolygonTriangulation":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), [tuple(d) for d in data["diagonals"]])


def _triangles(t: PolygonTriangulation) -> list[tuple[int, int, int]]:
    # In a maximal outerplanar graph every 3-cycle bounds a face.
    edges = t.edges()
    adj: dict[int, set[int]] = {v: set() for v in range(1, t.n + 1)}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    tris = []
    for a in range(1, t.n + 1):
        for b in adj[a]:
            if b <= a:
                continue
            for c in adj[a] & adj[b]:
                if c > b:
                    tris.append((a, b, c))
    return sorted(tris)


def validate(t: PolygonTriangulation) -> list[tuple[int, int, int]]:
    """Check the triangulation and return its n - 2 triangles."""
    n = t.n
    if n < 3:
        raise InvalidTriangulation(f"a polygon needs at least 3 vertices, got {n}")
    for i, j in t.diagonals:
        if not (1 <= i < j <= n):
            raise InvalidTriangulation(f"diagonal {(i, j)} out of range for n={n}")
        if is_boundary(n, (i, j)):
            raise InvalidTriangulation(f"{(i, j)} is a boundary edge, not a diagonal")
    for d1, d2 in combinations(sorted(t.diagonals), 2):
        if crosses(d1, d2):
            raise CrossingDiagonals(d1, d2)
    if len(t.diagonals) != n - 3:
        raise WrongCount(len(t.diagonals), n - 3)
    tris = _triangles(t)
    assert len(tris) == n - 2, tris
    return tris


def enumerate_triangulations(n: int) -> list[PolygonTriangulation]:
    """All triangulations of the n-gon in lexicographic order of diagonal lists."""
    if n < 3:
        raise InvalidTriangulation(f"a polygon needs at least 3 vertices, got {n}")
    if n > MAX_ENUMERATE:
        raise TooLarge(f"refusing to enumerate triangulations for n={n} > {MAX_ENUMERATE}")
    out = [PolygonTriangulation(n, ds) for ds in _sub_triangulations(1, n)]
    out.sort(key=PolygonTriangulation.sorted_diagonals)
    return out


@lru_cache(maxsize=None)
def _sub_triangulations(lo: int, hi: int) -> tuple[frozenset, ...]:
    """Diagonal sets triangulating the sub-polygon lo, lo+1, ..., hi."""
    if hi - lo < 2:
        return (frozenset(),)
    result = []
    # the edge (lo, hi) belongs to exactly one triangle (lo, k, hi)
    for k in range(lo + 1, hi):
        own = set()
        if k - lo >= 2:
            own.add((lo, k))
        if hi - k >= 2:
            own.add((k, hi))
        for left in _sub_triangulations(lo, k):
            for right in _sub_triangulations(k, hi):
                result.append(frozenset(own) | left | right)
    return tuple(result)


def quiddity_of(t: PolygonTriangulation) -> QuidditySequence:
    """Number of triangles at each vertex, in label order."""
    counts = [0] * t.n
    for tri in validate(t):
        for v in tri:
            counts[v - 1] += 1
    return QuidditySequence(tuple(counts))


def triangulation_from_quiddity(q) -> PolygonTriangulation:
    """Inverse of :func:`quiddity_of`: cut ears at the smallest-index 1, re-glue."""
    q = as_quiddity(q)
    n = len(q)
    cls = classify(q)
    if cls != Closed(n):
        raise NotClosed(f"{q} is not the quiddity of a closed frieze of order {n} (got {cls})")
    return PolygonTriangulation(n, _from_quiddity(q.entries))


def _from_quiddity(seq: tuple[int, ...]) -> set[tuple[int, int]]:
    n = len(seq)
    if n == 3:
        return set()
    i = seq.index(1) + 1
    smaller = _from_quiddity(cut(seq, i).entries)

    def lift(v):
        return v if v < i else v + 1

    diags = {tuple(sorted((lift(a), lift(b)))) for a, b in smaller}
    left, right = (i - 2) % n + 1, i % n + 1
    diags.add(tuple(sorted((left, right))))
    return diags


# -- matchings ---------------------------------------------------------------


@dataclass(frozen=True)
class MatchingSet:
    i: int
    j: int
    vertices: tuple[int, ...]
    matchings: tuple[tuple[tuple[int, int, int], ...], ...]

    def __len__(self):
        return len(self.matchings)


def matchings(t: PolygonTriangulation, i: int, j: int) -> MatchingSet:
    """All injective assignments of triangles to the vertices strictly between
    ``i`` and ``j`` (clockwise), each vertex getting a triangle containing it.

    ``matchings[k][m]`` is the triangle assigned to ``vertices[m]``.
    """
    n = t.n
    tris = validate(t)
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"vertices must lie in 1..{n}")
    if (j - i) % n in (0, 1, n - 1):
        raise AdjacentVertices(f"vertices {i} and {j} are equal or adjacent")
    verts = []
    v = i % n + 1
    while v != j:
        verts.append(v)
        v = v % n + 1
    at = {v: [tri for tri in tris if v in tri] for v in verts}
    found = []
    chosen: list = []
    used: set = set()

    def extend(k):
        if k == len(verts):
            found.append(tuple(chosen))
            return
        for tri in at[verts[k]]:
            if tri not in used:
                used.add(tri)
                chosen.append(tri)
                extend(k + 1)
                chosen.pop()
                used.discard(tri)

    extend(0)
    return MatchingSet(i, j, tuple(verts), tuple(found))


# -- the frieze matrix -------------------------------------------------------


@dataclass(frozen=True)
class FriezeMatrix:
    n: int
    entries: tuple[tuple[int, ...], ...]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def closed_frieze(t: PolygonTriangulation) -> FriezeGrid:
    grid = generate(quiddity_of(t), t.n)
    assert grid.classification == Closed(t.n), grid.classification
    return grid


def frieze_matrix(t: PolygonTriangulation) -> FriezeMatrix:
    """Symmetric matrix ``M[i][j] = a(i, j)``: zero diagonal, 1 next to it and
    in the corners, frieze entries elsewhere (0-based indices for vertices 1..n)."""
    n = t.n
    grid = closed_frieze(t)
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            i, j = min(a, b), max(a, b)
            row.append(grid.value(i, j))
        rows.append(tuple(row))
    return FriezeMatrix(n, tuple(rows))


def det_int(m: FriezeMatrix) -> int:
    det = bareiss_det(m.entries)
    if m.n <= 5:
        assert det == cofactor_det(m.entries), "Bareiss and cofactor determinants disagree"
    return det
