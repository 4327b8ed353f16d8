"""Integral frieze patterns over exact integers.

Coordinates
-----------
A frieze with quiddity ``q = (q[0], ..., q[n-1])`` is stored one period at a
time.  ``rows[r][i]`` is the entry ``a(i, i+r+1)`` for ``i`` in Z/n, so row 1
is the quiddity itself and entry ``q[i]`` sits at ``a(i, i+2)``.  Rows 0, -1
and -2 are the virtual rows of 1s, 0s and -1s above the pattern; they are
never stored.  With this convention the diamond rule reads::

    rows[r][i] * rows[r][i+1] - rows[r-1][i+1] * rows[r+1][i] == 1

Vertex ``v`` of a triangulated polygon (labels 1..n) corresponds to position
``v % n``, so ``q[v-1]`` counts the triangles at vertex ``v``.

Any period of row 1 propagates to every row through the diamond rule, so the
minimal period of the frieze is the minimal cyclic period of its quiddity.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from decimal import Decimal, localcontext
from math import comb
from typing import Iterable, Sequence, Union

from .errors import (
    CutAtNonOne,
    DomainError,
    InexactDivision,
    InvalidQuiddity,
    NonPositive,
    NotConstant,
    NotInfinite,
)

__all__ = [
    "QuidditySequence",
    "as_quiddity",
    "Closed",
    "Infinite",
    "Invalid",
    "FriezeGrid",
    "GrowthSequence",
    "next_row",
    "generate",
    "classify",
    "check_tame",
    "minimal_period",
    "growth_sequence",
    "growth_closed_form",
    "growth_rate",
    "glue",
    "cut",
]


@dataclass(frozen=True)
class QuidditySequence:
    """Cyclic tuple of positive integers: the first non-trivial row."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(operator.index(a) for a in self.entries)
        if not entries:
            raise InvalidQuiddity("a quiddity sequence needs at least one entry")
        bad = [a for a in entries if a < 1]
        if bad:
            raise InvalidQuiddity(f"quiddity entries must be >= 1, got {bad[0]}")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def rotate(self, k: int) -> "QuidditySequence":
        k %= len(self.entries)
        return QuidditySequence(self.entries[k:] + self.entries[:k])

    def __str__(self):
        return "(" + ",".join(map(str, self.entries)) + ")"


def as_quiddity(q: QuidditySequence | Iterable[int]) -> QuidditySequence:
    if isinstance(q, QuidditySequence):
        return q
    return QuidditySequence(tuple(q))


# -- classification tags -----------------------------------------------------


@dataclass(frozen=True)
class Closed:
    order: int


@dataclass(frozen=True)
class Infinite:
    # ``None`` means certified by the cutting procedure; an integer means only
    # that many rows were simulated without termination.
    depth: int | None = None


@dataclass(frozen=True)
class Invalid:
    # ``index`` is a 1-based position; ``reduced`` is the cut-down sequence
    # it refers to when the witness comes from cutting.
    reason: str
    row: int | None = None
    index: int | None = None
    reduced: tuple[int, ...] | None = None


Classification = Union[Closed, Infinite, Invalid]


# -- the grid ----------------------------------------------------------------


@dataclass(frozen=True)
class FriezeGrid:
    quiddity: QuidditySequence
    rows: tuple[tuple[int, ...], ...]
    classification: Classification

    @property
    def n(self) -> int:
        return len(self.quiddity)

    @property
    def last_row(self) -> int:
        """Index of the deepest row available through :meth:`row`."""
        if isinstance(self.classification, Closed):
            return self.classification.order
        return len(self.rows)

    def row(self, r: int) -> tuple[int, ...]:
        n = self.n
        if r in (0, -1, -2):
            return (1 - (r == -1) - 2 * (r == -2),) * n
        if 1 <= r <= len(self.rows):
            return self.rows[r - 1]
        if isinstance(self.classification, Closed) and r == self.classification.order:
            return (-1,) * n
        raise IndexError(f"row {r} is not available (rows -2..{self.last_row})")

    def value(self, i: int, j: int) -> int:
        """The entry a(i, j), with ``i`` taken mod n."""
        return self.row(j - i - 1)[i % self.n]


@dataclass(frozen=True)
class GrowthSequence:
    n0: int
    s_values: tuple[int, ...]

    @property
    def s(self) -> int:
        return self.s_values[1]


# -- diamond rule ------------------------------------------------------------


def next_row(prev: Sequence[int], cur: Sequence[int], *, require_positive=False) -> list[int]:
    """Solve the diamond rule for the row below ``cur``.

    ``out[i] = (cur[i]*cur[i+1] - 1) / prev[i+1]`` with cyclic indices.  Raises
    :class:`InexactDivision` on the first position whose quotient is not an
    integer.  Signs are left to the caller unless ``require_positive`` is set,
    in which case :class:`NonPositive` carries the complete row.
    """
    n = len(cur)
    if len(prev) != n:
        raise ValueError("rows must have equal length")
    out = []
    for i in range(n):
        j = (i + 1) % n
        d = prev[j]
        if d == 0:
            raise InexactDivision(i, "zero divisor")
        v, rem = divmod(cur[i] * cur[j] - 1, d)
        if rem:
            raise InexactDivision(i)
        out.append(v)
    if require_positive:
        for i, v in enumerate(out):
            if v <= 0:
                raise NonPositive(i, out)
    return out


def _step(prev, cur):
    """Row below ``cur`` plus the first problem found in row-major order."""
    n = len(cur)
    out = []
    for i in range(n):
        j = (i + 1) % n
        v, rem = divmod(cur[i] * cur[j] - 1, prev[j])
        if rem:
            return out, ("inexact division", i)
        out.append(v)
    return out, None


def generate(q, max_rows: int) -> FriezeGrid:
    """Fill rows 1, 2, ... by the diamond rule.

    Stops at the first row of zeros (closed frieze; the zero row is always
    appended, even one past ``max_rows``), at the first inexact division or
    non-positive entry (``Invalid`` with row and position), or after
    ``max_rows`` positive rows, which gives ``Infinite(depth=max_rows)``.
    """
    q = as_quiddity(q)
    if max_rows < 1:
        raise ValueError("max_rows must be >= 1")
    n = len(q)
    rows = [q.entries]
    prev, cur = (1,) * n, q.entries
    while True:
        if all(v == 1 for v in cur):
            rows.append((0,) * n)
            return FriezeGrid(q, tuple(rows), Closed(len(rows) + 1))
        if len(rows) >= max_rows:
            return FriezeGrid(q, tuple(rows), Infinite(depth=max_rows))
        out, problem = _step(prev, cur)
        r = len(rows) + 1
        bad = next((i for i, v in enumerate(out) if v <= 0), None)
        if problem is not None and bad is None:
            return FriezeGrid(q, tuple(rows), Invalid(problem[0], r, problem[1] + 1))
        if bad is not None:
            # A full row of zeros cannot occur here: it would require the row
            # above to be all 1s, which closes the frieze one step earlier.
            if problem is None:
                rows.append(tuple(out))
            return FriezeGrid(q, tuple(rows), Invalid("non-positive entry", r, bad + 1))
        rows.append(tuple(out))
        prev, cur = cur, rows[-1]


# -- cutting and gluing ------------------------------------------------------


def _glue(seq: tuple[int, ...], i: int) -> tuple[int, ...]:
    # 1-based i: new entry 1 goes between positions i and i+1.
    n = len(seq)
    a = list(seq)
    if n == 1:
        return (a[0] + 2, 1)
    a[i - 1] += 1
    a[i % n] += 1
    return tuple(a[:i] + [1] + a[i:])


def _cut(seq: tuple[int, ...], i: int) -> tuple[int, ...]:
    n = len(seq)
    if n < 2:
        raise CutAtNonOne("cannot cut a sequence of length 1")
    a = list(seq)
    a[(i - 2) % n] -= 1
    a[i % n] -= 1
    del a[i - 1]
    return tuple(a)


def glue(q, i: int) -> QuidditySequence:
    """Attach an ear between positions ``i`` and ``i+1`` (1-based, cyclic).

    ``(..., a_i, a_{i+1}, ...)`` becomes ``(..., a_i + 1, 1, a_{i+1} + 1, ...)``.
    """
    q = as_quiddity(q)
    if not 1 <= i <= len(q):
        raise IndexError(f"glue position {i} out of range 1..{len(q)}")
    return QuidditySequence(_glue(q.entries, i))


def cut(q, i: int) -> QuidditySequence:
    """Remove the entry 1 at position ``i`` (1-based), decrementing its neighbours."""
    q = as_quiddity(q)
    if not 1 <= i <= len(q):
        raise IndexError(f"cut position {i} out of range 1..{len(q)}")
    if q[i - 1] != 1:
        raise CutAtNonOne(f"entry at position {i} is {q[i - 1]}, not 1")
    out = _cut(q.entries, i)
    if any(a < 1 for a in out):
        raise InvalidQuiddity(f"cutting at {i} leaves a non-positive entry: {out}")
    return QuidditySequence(out)


# -- classification ----------------------------------------------------------


def minimal_period(q) -> int:
    entries = as_quiddity(q).entries
    n = len(entries)
    for d in range(1, n + 1):
        if n % d == 0 and all(entries[i] == entries[(i + d) % n] for i in range(n)):
            return d
    return n  # pragma: no cover


def _closes_at_own_length(seq: tuple[int, ...]) -> bool:
    """True iff ``seq`` is the quiddity of a closed frieze of order len(seq)."""
    while len(seq) > 3:
        if min(seq) < 1:
            return False
        try:
            i = seq.index(1)
        except ValueError:
            return False
        seq = _cut(seq, i + 1)
    return seq == (1, 1, 1)


def _reduce_unbounded(seq: tuple[int, ...]) -> Classification:
    """Cut at smallest-index 1s until every entry is >= 2 (infinite) or not."""
    while True:
        n = len(seq)
        for i, a in enumerate(seq):
            if a < 1:
                return Invalid("non-positive entry after cutting", index=i + 1, reduced=seq)
        if min(seq) >= 2:
            return Infinite()
        i = seq.index(1)
        if n == 1:
            return Invalid("reduced to (1)", index=1, reduced=seq)
        if n > 3 and seq[(i + 1) % n] == 1:
            return Invalid("adjacent entries 1", index=i + 1, reduced=seq)
        seq = _cut(seq, i + 1)


def classify(q, check_depth: int | None = None) -> Classification:
    """Decide whether ``q`` heads a closed, an infinite, or no integral frieze.

    The decision is made by cutting at entries 1.  A closed frieze of order N
    is N-periodic, so N is a multiple of the minimal period d of ``q``; the
    monodromy of one period then has finite order 2, 4 or 6 in SL(2, Z),
    which leaves only N in {d, 2d, 3d}.  Each candidate is tested by cutting
    down to (1, 1, 1).  Otherwise cutting either reaches a sequence with all
    entries >= 2 (infinite) or produces an invalid configuration.

    With ``check_depth`` set, the answer is compared against a diamond-rule
    simulation of that many rows and a disagreement raises ``AssertionError``.
    """
    q = as_quiddity(q)
    d = minimal_period(q)
    block = q.entries[:d]
    result: Classification | None = None
    for m in (1, 2, 3):
        if _closes_at_own_length(block * m):
            result = Closed(m * d)
            break
    if result is None:
        result = _reduce_unbounded(q.entries)
    if check_depth is not None:
        sim = generate(q, check_depth).classification
        if not _agrees(result, sim, check_depth):
            raise AssertionError(f"classify({q}) = {result} but simulation gives {sim}")
    return result


def _agrees(cert: Classification, sim: Classification, depth: int) -> bool:
    if isinstance(cert, Closed):
        if cert.order - 2 > depth:
            return isinstance(sim, Infinite)
        return sim == cert
    if isinstance(cert, Infinite):
        return isinstance(sim, Infinite)
    # an invalid sequence may survive past the simulated depth
    return isinstance(sim, (Invalid, Infinite))


# -- tameness ----------------------------------------------------------------


def _det3(m) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def check_tame(f: FriezeGrid) -> bool:
    """True iff every 3x3 diamond of the available rows has determinant 0.

    The diamond centred on ``a(i+1, j+1)`` with ``j = i + r + 1`` spans rows
    r-2 .. r+2, so the virtual rows -2..0 take part.
    """
    top = f.last_row
    if top < 2:
        raise ValueError("need at least rows 1 and 2 to test tameness")
    n = f.n
    rows = {r: f.row(r) for r in range(-2, top + 1)}
    for rc in range(0, top - 1):
        for i in range(n):
            m = [[rows[rc + y - x][(i + x) % n] for y in range(3)] for x in range(3)]
            if _det3(m):
                return False
    return True


# -- growth ------------------------------------------------------------------


def growth_sequence(q, K: int) -> GrowthSequence:
    """Constant differences ``s_k = a(i, i+k*n0+1) - a(i+1, i+k*n0)`` for k <= K.

    For a closed frieze of order n only ``k * n0 <= n`` is available (the row
    below the final zeros is the row of -1s), so ``s_{n/n0} = -2``.
    """
    q = as_quiddity(q)
    if K < 1:
        raise ValueError("K must be >= 1")
    n0 = minimal_period(q)
    cls = classify(q)
    if isinstance(cls, Invalid):
        raise NotInfinite(f"{q} is not the quiddity of an integral frieze")
    if isinstance(cls, Closed) and K * n0 > cls.order:
        raise DomainError(
            f"closed frieze of order {cls.order}: need K * n0 <= {cls.order}, got K={K}, n0={n0}"
        )
    grid = generate(q, max(K * n0, 1))
    n = len(q)
    s = []
    for k in range(K + 1):
        top, low = grid.row(k * n0), grid.row(k * n0 - 2)
        diffs = [top[i] - low[(i + 1) % n] for i in range(n)]
        for i in range(1, n):
            if diffs[i] != diffs[0]:
                raise NotConstant(k, 0, i)
        s.append(diffs[0])
    return GrowthSequence(n0, tuple(s))


def growth_closed_form(s: int, k: int) -> int:
    """``s_k = s^k + k * sum_{l=1}^{k//2} (-1)^l C(k-l, l) s^(k-2l) / (k-l)``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return 2
    total = s**k
    for l in range(1, k // 2 + 1):
        c, rem = divmod(k * comb(k - l, l), k - l)
        assert rem == 0, (k, l)
        total += (-1) ** l * c * s ** (k - 2 * l)
    return total


def growth_rate(s: int, digits: int = 50) -> Decimal:
    """Dominant root of ``x^2 - s x + 1``, i.e. ``(s + sqrt(s^2 - 4)) / 2``.

    This is the limit of ``s_{k+1} / s_k`` for the recurrence
    ``s_{k+2} = s s_{k+1} - s_k``.
    """
    s = operator.index(s)
    if s <= 2:
        raise DomainError(f"growth is not exponential for s = {s}")
    with localcontext() as ctx:
        ctx.prec = digits + 5
        root = (Decimal(s) + Decimal(s * s - 4).sqrt()) / 2
        ctx.prec = digits
        return +root

