"""Cluster variables of polygon diagonals and the symbolic frieze determinant.

Every edge and diagonal ``(i, j)`` of the n-gon carries a variable ``x_ij``.
The boundary edges are frozen; the diagonals of the chosen triangulation are
the initial variables.  All other diagonals are reached through the Ptolemy
exchange in a quadrilateral ``i, k, j, l`` (cyclic order)::

    x_ij * x_kl = x_ik * x_jl + x_il * x_jk
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Closed, FriezeGrid, QuidditySequence
from .errors import TooLarge
from .laurent import Generator, LaurentElement
from .linalg import bareiss_det, cofactor_det
from .polygon import PolygonTriangulation, is_boundary, validate

__all__ = [
    "ClusterFrieze",
    "cluster_variable",
    "cluster_frieze",
    "symbolic_matrix",
    "det_symbolic",
    "expected_det_symbolic",
    "specialize_to_one",
    "frozen_generators",
]

MAX_SYMBOLIC_DET = 8


def _pair(a: int, b: int) -> Generator:
    return (a, b) if a < b else (b, a)


def _strictly_between(v: int, i: int, j: int) -> bool:
    return i < v < j


def _crossing_arcs(t: PolygonTriangulation, d: Generator) -> list[Generator]:
    i, j = d
    return [
        (k, l)
        for k, l in t.diagonals
        if k not in d and l not in d and _strictly_between(k, i, j) != _strictly_between(l, i, j)
    ]


def frozen_generators(n: int) -> list[Generator]:
    return [(i, i + 1) for i in range(1, n)] + [(1, n)]


def cluster_variable(
    t: PolygonTriangulation, d, *, from_end: bool = False, _memo: dict | None = None
) -> LaurentElement:
    """Laurent expansion of ``x_d`` in the initial cluster of ``t``.

    The exchange uses the arc of ``t`` that ``d`` crosses first when walking
    from its smaller endpoint (or from the other end with ``from_end``).  That
    arc spans a triangle of ``t`` with the starting endpoint, so two of the
    four sides of the quadrilateral are edges of ``t`` and the other two cross
    strictly fewer arcs, which bounds the recursion.
    """
    d = _pair(*d)
    memo = {} if _memo is None else _memo
    if d in memo:
        return memo[d]
    if d in t.diagonals or is_boundary(t.n, d):
        value = LaurentElement.generator(d)
    else:
        edges = t.edges()
        start, end = (d[1], d[0]) if from_end else d
        for k, l in _crossing_arcs(t, d):
            if _pair(start, k) in edges and _pair(start, l) in edges:
                break
        else:  # pragma: no cover - impossible for a valid triangulation
            raise AssertionError(f"no triangle of {t} at {start} meets {d}")
        # (start, k) and (start, l) are generators; recurse towards ``end``.
        i, j = d
        x = lambda a, b: cluster_variable(t, (a, b), from_end=from_end, _memo=memo)  # noqa: E731
        value = (x(i, k) * x(l, j) + x(i, l) * x(k, j)).div_by_generator((k, l))
    memo[d] = value
    return value


@dataclass(frozen=True)
class ClusterFrieze:
    t: PolygonTriangulation
    variables: dict

    @property
    def n(self) -> int:
        return self.t.n

    def __getitem__(self, pair) -> LaurentElement:
        a, b = pair
        return self.variables[_pair(a, b)]


def cluster_frieze(t: PolygonTriangulation) -> ClusterFrieze:
    validate(t)
    memo: dict = {}
    n = t.n
    variables = {
        (i, j): cluster_variable(t, (i, j), _memo=memo)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    }
    return ClusterFrieze(t, variables)


def symbolic_matrix(cf: ClusterFrieze) -> list[list[LaurentElement]]:
    n = cf.n
    zero = LaurentElement.constant(0)
    return [[zero if a == b else cf[a, b] for b in range(1, n + 1)] for a in range(1, n + 1)]


def det_symbolic(m: list[list[LaurentElement]]) -> LaurentElement:
    """Cofactor expansion up to n = 5, fraction-free elimination up to n = 8."""
    n = len(m)
    if n > MAX_SYMBOLIC_DET:
        raise TooLarge(f"symbolic determinant limited to n <= {MAX_SYMBOLIC_DET}, got {n}")
    zero = LaurentElement.constant(0)
    if n <= 5:
        return cofactor_det(m, zero)
    return bareiss_det(m, exact_div=LaurentElement.exact_div, one=LaurentElement.constant(1))


def expected_det_symbolic(n: int) -> LaurentElement:
    """``-(-2)^(n-2) * x_12 x_23 ... x_{n-1,n} x_{1n}``."""
    out = LaurentElement.constant(-((-2) ** (n - 2)))
    for g in frozen_generators(n):
        out = out * LaurentElement.generator(g)
    return out


def specialize_to_one(cf: ClusterFrieze) -> FriezeGrid:
    """Set every generator to 1 and read the result as a closed integral frieze."""
    n = cf.n
    value = {pair: x.specialize_to_one() for pair, x in cf.variables.items()}

    def a(i, j):
        i, j = (i - 1) % n + 1, (j - 1) % n + 1
        return 0 if i == j else value[_pair(i, j)]

    rows = tuple(tuple(a(i, i + r + 1) for i in range(n)) for r in range(1, n))
    return FriezeGrid(QuidditySequence(rows[0]), rows, Closed(n))
