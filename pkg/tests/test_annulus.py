import json

import pytest

from frieze.annulus import (
    PUNCTURE,
    AnnulusTriangulation,
    PuncturedDiskTriangulation,
    annulus_from_quiddity,
    disk_triangulations,
    inner_quiddity,
    quiddity_of_disk,
    star_triangulation,
    thicken,
)
from frieze.core import Infinite, classify, cut, generate, growth_sequence, minimal_period
from frieze.errors import (
    CrossingDiagonals,
    InvalidTriangulation,
    NotInfinite,
    SpiralHasNoInnerQuiddity,
    WrongCount,
)

from oracles import corpus

INFINITE_SMALL = [q for q in corpus(1, 4, 4) if isinstance(classify(q), Infinite)]


def arc_end_counts(arcs, kind, count):
    """Corner-count oracle: corners at a boundary point = arc ends there + 1."""
    ends = [0] * count
    for arc in arcs:
        for label in arc:
            if label[0] == kind:
                ends[int(label[1:]) - 1] += 1
    return [e + 1 for e in ends]


# -- punctured disk ----------------------------------------------------------


def test_star_quiddity():
    assert quiddity_of_disk(star_triangulation(4)).entries == (2, 2, 2, 2)
    assert quiddity_of_disk(star_triangulation(2)).entries == (2, 2)


def test_star_needs_two_points():
    with pytest.raises(InvalidTriangulation):
        star_triangulation(1)


def test_fan_disk_example():
    t = PuncturedDiskTriangulation(5, [(1, 3), (1, PUNCTURE), (3, PUNCTURE), (4, PUNCTURE), (5, PUNCTURE)])
    assert quiddity_of_disk(t).entries == (3, 1, 3, 2, 2)
    tris = {frozenset(tri) for tri in t.triangles()}
    expected = [(1, 2, 3), (1, 3, "p"), (3, 4, "p"), (4, 5, "p"), (5, 1, "p")]
    assert tris == {frozenset(tri) for tri in expected}


def test_disk_validation():
    with pytest.raises(WrongCount):
        quiddity_of_disk(PuncturedDiskTriangulation(4, [(1, PUNCTURE), (3, PUNCTURE), (1, 3)]))
    with pytest.raises(InvalidTriangulation):
        quiddity_of_disk(PuncturedDiskTriangulation(4, [(1, 3), (2, 4), (1, 2), (3, 4)]))
    with pytest.raises((CrossingDiagonals, InvalidTriangulation)):
        quiddity_of_disk(PuncturedDiskTriangulation(
            5, [(1, 3), (2, 4), (1, PUNCTURE), (3, PUNCTURE), (5, PUNCTURE)]))


@pytest.mark.parametrize("n,count", [(2, 1), (3, 4), (4, 15), (5, 56), (6, 210)])
def test_disk_family_counts(n, count):
    ts = disk_triangulations(n)
    assert len(ts) == count
    assert len({t.arcs for t in ts}) == count


def test_disk_corner_oracle_and_classification():
    for n in range(2, 7):
        for t in disk_triangulations(n):
            q = quiddity_of_disk(t)
            ends = [1] * n
            for a, b in t.arcs:
                for v in (a, b):
                    if v != PUNCTURE:
                        ends[v - 1] += 1
            assert list(q) == ends
            assert len(t.triangles()) == n
            assert classify(q) == Infinite()


def test_disk_arithmetic_progressions():
    for n in range(2, 7):
        for t in disk_triangulations(n):
            q = quiddity_of_disk(t)
            g = generate(q, 30)
            for i in range(n):
                diag = [g.row(r)[i] for r in range(1, 31)]
                for start in range(n):
                    part = diag[start::n]
                    steps = {b - a for a, b in zip(part, part[1:])}
                    assert len(steps) == 1


def test_star_diagonal_step_one():
    g = generate((2,) * 5, 30)
    for i in range(5):
        diag = [g.row(r)[i] for r in range(1, 31)]
        assert diag == list(range(2, 32))


def test_disk_growth_is_two():
    for n in range(2, 6):
        for t in disk_triangulations(n):
            q = quiddity_of_disk(t)
            assert growth_sequence(q, 5).s_values == (2,) * 6


def test_disk_json():
    t = star_triangulation(3)
    data = t.to_json()
    assert data == {"n": 3, "arcs": [["1", "p"], ["2", "p"], ["3", "p"]]}
    assert PuncturedDiskTriangulation.from_json(json.dumps(data)) == t


# -- annulus -----------------------------------------------------------------


def test_example_annulus():
    ann, trace = annulus_from_quiddity((3, 4, 2, 4))
    assert not ann.spiral and trace == ()
    assert ann.n_outer == 4 and ann.n_inner == 5
    inner = inner_quiddity(ann).entries
    rotations = {inner[k:] + inner[:k] for k in range(5)}
    assert (3, 2, 4, 2, 3) in rotations
    assert inner == (3, 2, 4, 2, 3)


def test_spiral():
    ann, _ = annulus_from_quiddity((2, 2, 2, 2))
    assert ann.spiral and ann.n_inner == 0 and ann.arcs == ()
    with pytest.raises(SpiralHasNoInnerQuiddity):
        inner_quiddity(ann)


def test_reduction_with_ear():
    q = (1, 4, 3, 4)
    assert cut(q, 1).entries == (3, 3, 3)
    ann, trace = annulus_from_quiddity(q)
    assert len(trace) == 1 and (trace[0].removed, trace[0].left, trace[0].right) == (1, 4, 2)
    assert ("O4", "O2") in ann.arcs
    assert ann.n_inner == 3
    assert ann.outer_quiddity().entries == q


def test_inner_of_333():
    ann, _ = annulus_from_quiddity((3, 3, 3))
    inner = inner_quiddity(ann)
    assert len(inner) == 3 and min(inner) >= 2


def test_not_infinite():
    for q in [(1, 1, 1), (4, 1, 2, 2, 2, 1), (1, 1, 2, 2)]:
        with pytest.raises(NotInfinite):
            annulus_from_quiddity(q)


def bridging_order_ok(ann):
    """Bridging arcs, read around the outer boundary, must meet the inner
    boundary monotonically and wind exactly once (non-crossing on the annulus)."""
    seq = [int(b[1:]) for a, b in ann.arcs if a[0] == "O" and b[0] == "I"]
    m = ann.n_inner
    if m == 1:
        return set(seq) == {1}
    steps = [(b - a) % m for a, b in zip(seq, seq[1:] + seq[:1])]
    return all(s in (0, 1) for s in steps) and sum(steps) == m


def test_outer_consistency_and_structure():
    for q in INFINITE_SMALL:
        ann, trace = annulus_from_quiddity(q)
        assert arc_end_counts(ann.arcs, "O", len(q)) == list(ann.outer_quiddity()) or ann.spiral
        assert ann.outer_quiddity().entries == tuple(q)
        if ann.spiral:
            continue
        assert bridging_order_ok(ann)
        inner = inner_quiddity(ann)
        assert sorted(arc_end_counts(ann.arcs, "I", ann.n_inner)) == sorted(inner)
        # Euler count: n + m triangles with three corners each
        assert sum(q) + sum(inner) == 3 * (len(q) + ann.n_inner)


def loop_growth(q):
    """Growth coefficient over one full turn of the annulus (k = n / n0)."""
    n0 = minimal_period(q)
    return growth_sequence(q, len(q) // n0).s_values[-1]


def test_growth_equality_without_ears():
    checked = 0
    for q in corpus(2, 4, 4):
        if max(q) == 2:
            continue
        inner = inner_quiddity(annulus_from_quiddity(q)[0])
        assert growth_sequence(q, 1).s == growth_sequence(inner, 1).s
        checked += 1
    assert checked == 116


def test_growth_equality_with_ears():
    # Cutting ears can change the minimal period (1,4,3,4 -> 3,3,3), so the
    # two boundaries are compared over one full turn; s_1 agrees whenever
    # both boundaries have the same number of fundamental domains per turn.
    for q in INFINITE_SMALL:
        ann, _ = annulus_from_quiddity(q)
        if ann.spiral:
            continue
        inner = inner_quiddity(ann)
        assert classify(inner) == Infinite()
        assert loop_growth(q) == loop_growth(inner)
        if len(q) // minimal_period(q) == len(inner) // minimal_period(inner):
            assert growth_sequence(q, 1).s == growth_sequence(inner, 1).s


def test_ear_changes_period():
    inner = inner_quiddity(annulus_from_quiddity((1, 4, 3, 4))[0])
    assert inner.entries == (3, 3, 3)
    assert growth_sequence((1, 4, 3, 4), 1).s == 18
    assert growth_sequence(inner, 1).s == 3 and growth_sequence(inner, 3).s_values[3] == 18


def test_annulus_json():
    ann, _ = annulus_from_quiddity((3, 4, 2, 4))
    data = ann.to_json()
    assert data["outer"] == 4 and data["inner"] == 5 and data["spiral"] is False
    assert data["arcs"][0] == ["O1", "I1"]
    assert AnnulusTriangulation.from_json(json.dumps(data)) == ann
    sp, _ = annulus_from_quiddity((1, 4, 1, 4))
    assert AnnulusTriangulation.from_json(sp.to_json()) == sp


def test_annulus_validation():
    with pytest.raises(WrongCount):
        AnnulusTriangulation(2, 1, (("O1", "I1"),))
    with pytest.raises(InvalidTriangulation):
        AnnulusTriangulation(1, 1, (("O1", "I2"), ("O1", "I1")))


# -- thickening --------------------------------------------------------------


def test_thicken_examples():
    assert thicken((2, 2, 2, 2), 1, 1).entries == (3, 2, 2, 2)
    assert thicken((2, 2, 2, 2), 1, 56).entries == (58, 2, 2, 2)
    with pytest.raises(NotInfinite):
        thicken((1, 1, 1), 1, 1)


def test_thickening_preserves_infiniteness():
    for q in INFINITE_SMALL:
        for i in range(1, len(q) + 1):
            for b in (1, 2, 3):
                assert classify(thicken(q, i, b)) == Infinite()
