"""Infinite friezes from triangulated surfaces.

Two surfaces are handled combinatorially:

* the once-punctured disk ``S_n`` with boundary points 1..n, triangulated by
  n arcs without self-folded triangles, and
* the annulus, built explicitly from any infinite quiddity sequence.

On either surface the quiddity entry at a boundary point is the number of
triangle corners there, which equals the number of arc ends at the point
plus one (the arcs split a half-disc neighbourhood into that many sectors).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .core import Infinite, QuidditySequence, _cut, as_quiddity, classify
from .errors import (
    CrossingDiagonals,
    InvalidTriangulation,
    NotInfinite,
    SpiralHasNoInnerQuiddity,
    WrongCount,
)
from .polygon import PolygonTriangulation, _triangles, enumerate_triangulations

__all__ = [
    "PUNCTURE",
    "PuncturedDiskTriangulation",
    "star_triangulation",
    "quiddity_of_disk",
    "disk_triangulations",
    "AnnulusTriangulation",
    "GlueStep",
    "annulus_from_quiddity",
    "inner_quiddity",
    "thicken",
]

PUNCTURE = "p"


# -- punctured disk ----------------------------------------------------------


def _open_interval(n: int, i: int, j: int) -> list[int]:
    """Boundary points strictly between i and j going clockwise."""
    out = []
    v = i % n + 1
    while v != j:
        out.append(v)
        v = v % n + 1
    return out


@dataclass(frozen=True)
class PuncturedDiskTriangulation:
    """Arcs are ``(v, "p")`` to the puncture or ``(i, j)`` between boundary
    points; the latter cuts off the clockwise run ``i, i+1, ..., j`` (the side
    away from the puncture)."""

    n: int
    arcs: frozenset

    def __init__(self, n: int, arcs):
        norm = set()
        for a, b in arcs:
            if a == PUNCTURE:
                a, b = b, a
            norm.add((int(a), PUNCTURE) if b == PUNCTURE else (int(a), int(b)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", frozenset(norm))

    @property
    def puncture_arcs(self) -> list[int]:
        return sorted(a for a, b in self.arcs if b == PUNCTURE)

    @property
    def boundary_arcs(self) -> list[tuple[int, int]]:
        return sorted((a, b) for a, b in self.arcs if b != PUNCTURE)

    def triangles(self) -> list[tuple]:
        return _disk_triangles(self)

    def to_json(self) -> dict:
        arcs = [[str(a), str(b)] for a, b in self.boundary_arcs]
        arcs += [[str(v), PUNCTURE] for v in self.puncture_arcs]
        return {"n": self.n, "arcs": arcs}

    @classmethod
    def from_json(cls, data) -> "PuncturedDiskTriangulation":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["n"]), [tuple(a) for a in data["arcs"]])


def _visible(t: PuncturedDiskTriangulation) -> list[int]:
    hidden = set()
    for i, j in t.boundary_arcs:
        hidden.update(_open_interval(t.n, i, j))
    return [v for v in range(1, t.n + 1) if v not in hidden]


def _disk_crosses(n, a1, a2) -> bool:
    (a, b), (c, d) = a1, a2
    inside = set(_open_interval(n, a, b))
    closed = inside | {a, b}
    for x, y in ((c, d), (d, c)):
        if x in inside and y not in closed:
            return True
    return False


def _validate_disk(t: PuncturedDiskTriangulation) -> list[int]:
    n = t.n
    if n < 2:
        raise InvalidTriangulation("punctured disks need n >= 2 without self-folded triangles")
    for a, b in t.arcs:
        if not 1 <= a <= n or (b != PUNCTURE and not 1 <= b <= n):
            raise InvalidTriangulation(f"arc {(a, b)} has an endpoint outside 1..{n}")
        if b != PUNCTURE and not 2 <= (b - a) % n <= n - 1:
            raise InvalidTriangulation(
                f"arc {(a, b)} is a boundary segment or a loop (self-folded configurations are not supported)"
            )
    if len(t.arcs) != n:
        raise WrongCount(len(t.arcs), n)
    for a1, a2 in combinations(t.boundary_arcs, 2):
        if _disk_crosses(n, a1, a2) or _disk_crosses(n, a2, a1):
            raise CrossingDiagonals(a1, a2)
    visible = _visible(t)
    for v in t.puncture_arcs:
        if v not in visible:
            owner = next(arc for arc in t.boundary_arcs if v in _open_interval(n, *arc))
            raise CrossingDiagonals((v, PUNCTURE), owner)
    if len(visible) < 2 or t.puncture_arcs != visible:
        raise InvalidTriangulation("every boundary point facing the puncture needs an arc to it")
    return visible


def _disk_triangles(t: PuncturedDiskTriangulation) -> list[tuple]:
    visible = _validate_disk(t)
    n = t.n
    tris: list[tuple] = []
    m = len(visible)
    for k in range(m):
        tris.append((visible[k], visible[(k + 1) % m], PUNCTURE))

    def closed(arc):
        return set(_open_interval(n, *arc)) | set(arc)

    # polygons hanging off the punctured region, one per outermost arc
    outer = [
        arc
        for arc in t.boundary_arcs
        if not any(other != arc and closed(arc) <= closed(other) for other in t.boundary_arcs)
    ]
    for i, j in outer:
        run = [i] + _open_interval(n, i, j) + [j]
        pos = {v: k + 1 for k, v in enumerate(run)}
        inner = [
            tuple(sorted((pos[a], pos[b])))
            for a, b in t.boundary_arcs
            if (a, b) != (i, j) and a in pos and b in pos
        ]
        for tri in _triangles(PolygonTriangulation(len(run), inner)):
            tris.append(tuple(run[v - 1] for v in tri))
    if len(tris) != n:
        raise InvalidTriangulation(f"expected {n} triangles, found {len(tris)}")
    return tris


def star_triangulation(n: int) -> PuncturedDiskTriangulation:
    t = PuncturedDiskTriangulation(n, [(v, PUNCTURE) for v in range(1, n + 1)])
    _validate_disk(t)
    return t


def quiddity_of_disk(t: PuncturedDiskTriangulation) -> QuidditySequence:
    """Triangle corners at each boundary point, counted from the triangle list."""
    counts = [0] * t.n
    for tri in _disk_triangles(t):
        for v in tri:
            if v != PUNCTURE:
                counts[v - 1] += 1
    return QuidditySequence(tuple(counts))


def disk_triangulations(n: int) -> list[PuncturedDiskTriangulation]:
    """Every triangulation of S_n without self-folded triangles.

    Choose the set of points joined to the puncture (at least two); each gap
    between consecutive chosen points of length >= 2 is closed off by an arc
    and the polygon behind it is triangulated arbitrarily.
    """
    if n < 2:
        raise InvalidTriangulation("n must be >= 2")
    out = []
    for m in range(2, n + 1):
        for visible in combinations(range(1, n + 1), m):
            pieces = [[[(v, PUNCTURE) for v in visible]]]
            for k in range(m):
                i, j = visible[k], visible[(k + 1) % m]
                run = [i] + _open_interval(n, i, j) + [j]
                if len(run) == 2:
                    continue
                options = []
                for pt in enumerate_triangulations(len(run)):
                    arcs = [(i, j)] + [(run[a - 1], run[b - 1]) for a, b in pt.sorted_diagonals()]
                    options.append(arcs)
                pieces.append(options)
            combos = [[]]
            for options in pieces:
                combos = [c + o for c in combos for o in options]
            out.extend(PuncturedDiskTriangulation(n, c) for c in combos)
    return out


# -- annulus -----------------------------------------------------------------


@dataclass(frozen=True)
class GlueStep:
    """An ear removed in the reduction: outer point ``removed`` sat between
    ``left`` and ``right`` (original labels)."""

    removed: int
    left: int
    right: int


@dataclass(frozen=True)
class AnnulusTriangulation:
    """Outer points ``O1..On``, inner points ``I1..Im``; arcs are label pairs.

    In the spiral case the spiralling arcs (one from every point listed in
    ``spiral_roots``) are implicit and ``arcs`` holds only ear arcs between
    outer points.
    """

    n_outer: int
    n_inner: int
    arcs: tuple[tuple[str, str], ...]
    spiral: bool = False
    spiral_roots: tuple[int, ...] = field(default=())

    def __post_init__(self):
        for arc in self.arcs:
            for label in arc:
                kind, idx = label[0], int(label[1:])
                limit = self.n_outer if kind == "O" else self.n_inner if kind == "I" else 0
                if not 1 <= idx <= limit:
                    raise InvalidTriangulation(f"unknown marked point {label}")
        if self.spiral:
            if self.n_inner:
                raise InvalidTriangulation("a spiral annulus has no inner marked points")
        else:
            if len(self.arcs) != self.n_outer + self.n_inner:
                raise WrongCount(len(self.arcs), self.n_outer + self.n_inner)
            degree = self._degrees("I", self.n_inner)
            if any(d == 0 for d in degree):
                raise InvalidTriangulation("every inner point must carry an arc")

    def _degrees(self, kind: str, count: int) -> list[int]:
        deg = [0] * count
        for arc in self.arcs:
            for label in arc:
                if label[0] == kind:
                    deg[int(label[1:]) - 1] += 1
        return deg

    def outer_quiddity(self) -> QuidditySequence:
        deg = self._degrees("O", self.n_outer)
        for v in self.spiral_roots:
            deg[v - 1] += 1
        return QuidditySequence(tuple(d + 1 for d in deg))

    def to_json(self) -> dict:
        out = {
            "outer": self.n_outer,
            "inner": self.n_inner,
            "spiral": self.spiral,
            "arcs": [list(a) for a in self.arcs],
        }
        if self.spiral:
            out["spiral_roots"] = list(self.spiral_roots)
        return out

    @classmethod
    def from_json(cls, data) -> "AnnulusTriangulation":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            int(data["outer"]),
            int(data["inner"]),
            tuple(tuple(a) for a in data["arcs"]),
            bool(data["spiral"]),
            tuple(data.get("spiral_roots", ())),
        )


def _bridging_targets(entries: list[int]) -> list[list[int]]:
    """Inner endpoints of the arcs at each outer point, all entries >= 2 and
    the last one >= 3."""
    n = len(entries)
    targets = []
    created = 0
    for idx, a in enumerate(entries):
        ends = []
        for t in range(a - 1):
            if idx == n - 1 and t == a - 2:
                ends.append(1)
            elif t == 0 and idx > 0:
                ends.append(created)
            else:
                created += 1
                ends.append(created)
        targets.append(ends)
    return targets


def annulus_from_quiddity(q) -> tuple[AnnulusTriangulation, tuple[GlueStep, ...]]:
    """Triangulated annulus whose outer boundary realises ``q``.

    Ears are cut at the smallest-index 1 until every entry is >= 2.  An all-2
    core becomes the spiral triangulation; otherwise the core is rotated
    (smallest shift) so that its last entry exceeds 2 and point ``i`` sends
    ``a_i - 1`` arcs across, using ``a_1 - 1``, then ``a_i - 2``, then
    ``a_n - 3`` new inner points.  The cut ears are finally re-attached as arcs
    between outer points.
    """
    q = as_quiddity(q)
    if not isinstance(classify(q), Infinite):
        raise NotInfinite(f"{q} is not the quiddity of an infinite frieze")
    seq = q.entries
    labels = list(range(1, len(q) + 1))
    trace = []
    while min(seq) == 1:
        i = seq.index(1)
        k = len(seq)
        trace.append(GlueStep(labels[i], labels[(i - 1) % k], labels[(i + 1) % k]))
        seq = _cut(seq, i + 1)
        del labels[i]

    ears = tuple((f"O{s.left}", f"O{s.right}") for s in reversed(trace))
    if all(a == 2 for a in seq):
        ann = AnnulusTriangulation(len(q), 0, ears, spiral=True, spiral_roots=tuple(labels))
        return ann, tuple(trace)

    k = len(seq)
    shift = next(r for r in range(k) if seq[(r - 1) % k] > 2)
    seq = seq[shift:] + seq[:shift]
    labels = labels[shift:] + labels[:shift]
    targets = _bridging_targets(list(seq))
    m = sum(seq) - 2 * k
    arcs = [(f"O{label}", f"I{t}") for label, ends in zip(labels, targets) for t in ends]
    assert max(max(e) for e in targets) == m
    ann = AnnulusTriangulation(len(q), m, tuple(arcs) + ears)
    return ann, tuple(trace)


def inner_quiddity(a: AnnulusTriangulation) -> QuidditySequence:
    """Corner counts at the inner points, read along the inner boundary.

    The inner boundary is oriented opposite to the outer one (the surface
    stays on the same side), so the reading order is ``I1, Im, ..., I2``.
    """
    if a.spiral:
        raise SpiralHasNoInnerQuiddity("the spiral annulus has no inner marked points")
    counts = [d + 1 for d in a._degrees("I", a.n_inner)]
    return QuidditySequence(tuple(counts[:1] + counts[:0:-1]))


def thicken(q, i: int, b: int) -> QuidditySequence:
    """Add ``b > 0`` to entry ``i`` (1-based) of an infinite quiddity sequence."""
    q = as_quiddity(q)
    if b < 1:
        raise ValueError("b must be positive")
    if not 1 <= i <= len(q):
        raise IndexError(f"position {i} out of range 1..{len(q)}")
    if not isinstance(classify(q), Infinite):
        raise NotInfinite(f"{q} is not the quiddity of an infinite frieze")
    entries = list(q.entries)
    entries[i - 1] += b
    return QuidditySequence(tuple(entries))
