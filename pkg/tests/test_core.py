from decimal import Decimal, localcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frieze.core import (
    Closed,
    Infinite,
    Invalid,
    QuidditySequence,
    check_tame,
    classify,
    cut,
    generate,
    glue,
    growth_closed_form,
    growth_rate,
    growth_sequence,
    minimal_period,
    next_row,
)
from frieze.errors import CutAtNonOne, DomainError, InexactDivision, InvalidQuiddity, NonPositive

from oracles import corpus, frieze_entry, simulate

FAN6_Q = (4, 1, 2, 2, 2, 1)
Q58 = (3, 4, 2, 4)


def rotations(row):
    return {tuple(row[k:] + row[:k]) for k in range(len(row))}


# -- quiddity sequences ------------------------------------------------------


def test_quiddity_rejects_non_positive_and_empty():
    with pytest.raises(InvalidQuiddity):
        QuidditySequence((2, 0, 2))
    with pytest.raises(InvalidQuiddity):
        QuidditySequence(())


def test_quiddity_is_a_sequence():
    q = QuidditySequence(FAN6_Q)
    assert len(q) == 6 and q[0] == 4 and list(q) == list(FAN6_Q)
    assert str(q) == "(4,1,2,2,2,1)"


# -- next_row ----------------------------------------------------------------


def test_next_row_fan_hexagon():
    out = next_row((1,) * 6, FAN6_Q)
    assert tuple(out) == (3, 1, 3, 3, 1, 3)
    assert tuple(out) in rotations([3, 1, 3, 3, 1, 3])


def test_next_row_closes_triangle():
    assert next_row((1, 1), (1, 1)) == [0, 0]


def test_next_row_grid_3424():
    assert next_row((3, 4, 2, 4), (11, 7, 7, 11)) == [19, 24, 19, 40]


def test_next_row_inexact():
    with pytest.raises(InexactDivision) as info:
        next_row((2, 2, 2), (2, 3, 2))
    assert info.value.index == 0


def test_next_row_positive_check():
    with pytest.raises(NonPositive) as info:
        next_row((1,) * 4, (1, 1, 2, 2), require_positive=True)
    assert info.value.index == 0 and info.value.row == [0, 1, 3, 1]


# -- generate ----------------------------------------------------------------


def test_generate_fan_hexagon():
    g = generate(FAN6_Q, 10)
    assert g.classification == Closed(6)
    assert g.rows == (
        (4, 1, 2, 2, 2, 1),
        (3, 1, 3, 3, 1, 3),
        (2, 1, 4, 1, 2, 2),
        (1, 1, 1, 1, 1, 1),
        (0, 0, 0, 0, 0, 0),
    )


def test_generate_star():
    g = generate((2, 2, 2, 2), 4)
    assert g.rows == ((2,) * 4, (3,) * 4, (4,) * 4, (5,) * 4)
    assert g.classification == Infinite(depth=4)


def test_generate_grid_3424():
    g = generate(Q58, 5)
    assert g.rows == (
        (3, 4, 2, 4),
        (11, 7, 7, 11),
        (19, 24, 19, 40),
        (65, 65, 69, 69),
        (176, 236, 119, 236),
    )


def test_generate_invalid():
    g = generate((1, 1, 2, 2), 5)
    assert isinstance(g.classification, Invalid)
    assert g.classification.row == 2 and g.classification.index == 1
    assert g.rows[-1] == (0, 1, 3, 1)


def test_generate_never_divides_inexactly():
    # entries are continuants, so division only fails once a row has stopped
    # being positive; generate reports that first
    for q in corpus(1, 5, 4):
        cls = generate(q, 30).classification
        assert getattr(cls, "reason", None) != "inexact division"


def test_virtual_rows():
    g = generate(FAN6_Q, 10)
    assert g.row(0) == (1,) * 6 and g.row(-1) == (0,) * 6 and g.row(-2) == (-1,) * 6
    assert g.row(6) == (-1,) * 6
    assert g.value(5, 7) == 1 and g.value(3, 3) == 0
    with pytest.raises(IndexError):
        g.row(7)


@pytest.mark.parametrize("q", [FAN6_Q, Q58, (2, 2, 2, 2), (1, 2, 2, 1, 3), (5, 1, 2, 3, 1, 2, 4)])
def test_generate_matches_continuant(q):
    g = generate(q, 12)
    for r, row in enumerate(g.rows, start=1):
        assert list(row) == [frieze_entry(q, i, r) for i in range(len(q))]


def test_diamond_identity_and_closed_structure():
    for q in corpus(1, 4, 6):
        g = generate(q, 20)
        n = len(q)
        top = len(g.rows)
        for r in range(0, top):
            a, b = g.row(r), g.row(r + 1)
            c = g.row(r - 1)
            for i in range(n):
                assert a[i] * a[(i + 1) % n] - c[(i + 1) % n] * b[i] == 1
        if isinstance(g.classification, Closed):
            order = g.classification.order
            assert order % minimal_period(q) == 0
            assert g.row(order - 2) == (1,) * n and g.row(order - 1) == (0,) * n
            assert all(v > 0 for r in range(1, order - 2) for v in g.row(r))


def test_glide_reflection():
    from frieze.polygon import enumerate_triangulations, quiddity_of

    for n in range(3, 9):
        for t in enumerate_triangulations(n):
            g = generate(quiddity_of(t), n)
            for r in range(0, n - 1):
                for i in range(n):
                    assert g.row(r)[i] == g.row(n - 2 - r)[(i + r + 1) % n]


# -- classify ----------------------------------------------------------------


def test_classify_examples():
    assert classify(FAN6_Q) == Closed(6)
    assert classify((2, 2, 2, 2)) == Infinite()
    assert isinstance(classify((1, 1, 2, 2)), Invalid)
    assert classify((1, 1, 1)) == Closed(3)
    assert classify((1, 1)) == Closed(3) or isinstance(classify((1, 1)), Invalid)


def test_classify_small_cases():
    assert classify((3,)) == Infinite()
    assert classify((2,)) == Infinite()
    assert classify((1,)) == Closed(3)
    assert classify((1, 4)) == Infinite()
    assert classify((1, 3)) == Closed(6)


def test_classify_invalid_witness():
    result = classify((1, 1, 2, 2))
    assert result.index == 1 and result.reduced == (1, 1, 2, 2)


def test_classify_agrees_with_continuant_simulation():
    for q in corpus(1, 4, 6):
        cls = classify(q)
        sim = simulate(q, 40)
        kind = {Closed: "closed", Infinite: "infinite", Invalid: "invalid"}[type(cls)]
        assert kind == sim, q


def test_classify_check_depth_cross_check():
    assert classify(Q58, check_depth=40) == Infinite()
    assert classify(FAN6_Q, check_depth=40) == Closed(6)


def test_classify_periodic_closed():
    # order 6 frieze whose quiddity has period 2
    assert classify((1, 3)) == Closed(6)
    assert classify((1, 3, 1, 3, 1, 3)) == Closed(6)


# -- tameness ----------------------------------------------------------------


def test_tame_examples():
    assert check_tame(generate(FAN6_Q, 10))
    assert check_tame(generate((2, 2, 2, 2), 8))


def test_tame_detects_perturbation():
    g = generate(FAN6_Q, 10)
    rows = list(g.rows)
    rows[1] = (4,) + rows[1][1:]
    broken = type(g)(g.quiddity, tuple(rows), g.classification)
    assert not check_tame(broken)


# -- minimal period ----------------------------------------------------------


@pytest.mark.parametrize(
    "q,d", [((1, 2, 1, 2), 2), ((1, 3, 1, 3, 1, 3), 2), ((1, 2, 2, 1, 3), 5), ((2, 2, 2, 2), 1)]
)
def test_minimal_period(q, d):
    assert minimal_period(q) == d


# -- cut and glue ------------------------------------------------------------


def test_glue_cut_examples():
    assert glue((1, 1, 1), 1).entries == (2, 1, 2, 1)
    assert cut((2, 1, 2, 1), 2).entries == (1, 1, 1)
    assert glue((2, 1, 2, 1), 3).entries == (2, 1, 3, 1, 2)
    assert classify((2, 1, 3, 1, 2)) == Closed(5)


def test_cut_at_non_one():
    with pytest.raises(CutAtNonOne):
        cut((2, 1, 2, 1), 1)


@given(st.lists(st.integers(1, 6), min_size=1, max_size=9), st.data())
def test_cut_inverts_glue(entries, data):
    i = data.draw(st.integers(1, len(entries)))
    g = glue(entries, i)
    assert len(g) == len(entries) + 1
    assert cut(g, i + 1).entries == tuple(entries)


@given(st.lists(st.integers(1, 6), min_size=3, max_size=9), st.data())
def test_glue_preserves_classification(entries, data):
    i = data.draw(st.integers(1, len(entries)))
    before, after = classify(entries), classify(glue(entries, i))
    if isinstance(before, Closed) and before.order == len(entries):
        assert after == Closed(len(entries) + 1)
    if isinstance(before, Infinite):
        assert after == Infinite()


# -- growth ------------------------------------------------------------------


def test_growth_example():
    g = growth_sequence(Q58, 1)
    assert g.n0 == 4 and g.s_values == (2, 58)
    rows = generate(Q58, 4).rows
    assert [rows[3][i] - rows[1][(i + 1) % 4] for i in range(4)] == [58] * 4


def test_growth_star():
    assert growth_sequence((2, 2, 2, 2), 3).s_values == (2, 2, 2, 2)


def test_growth_closed_frieze():
    assert growth_sequence(FAN6_Q, 1).s_values == (2, -2)
    assert growth_sequence((1, 3, 1, 3, 1, 3), 3).s_values[0] == 2
    assert growth_sequence((1, 3, 1, 3, 1, 3), 3).s_values[3] == -2
    with pytest.raises(DomainError):
        growth_sequence(FAN6_Q, 2)


def test_growth_closed_form_examples():
    assert growth_closed_form(58, 2) == 3362
    assert growth_closed_form(2, 5) == 2
    assert growth_closed_form(7, 0) == 2 and growth_closed_form(7, 1) == 7


@given(st.integers(-50, 200), st.integers(0, 25))
def test_closed_form_satisfies_recurrence(s, k):
    assert growth_closed_form(s, k + 2) == s * growth_closed_form(s, k + 1) - growth_closed_form(s, k)


infinite_quiddities = st.lists(st.integers(2, 6), min_size=1, max_size=6).filter(lambda q: max(q) > 2)


@settings(max_examples=60, deadline=None)
@given(infinite_quiddities, st.integers(1, 4))
def test_growth_matches_closed_form(q, K):
    g = growth_sequence(q, K)
    assert g.s_values[0] == 2
    assert list(g.s_values) == [growth_closed_form(g.s, k) for k in range(K + 1)]


def test_growth_rate_examples():
    lam = growth_rate(58)
    assert abs(lam - Decimal("57.98275349237887714743732831")) < Decimal("1e-25")
    assert abs(growth_rate(3) - Decimal("2.618033988749894848204586834")) < Decimal("1e-25")
    with pytest.raises(DomainError):
        growth_rate(2)


def test_growth_rate_is_root_and_ratio_limit():
    # Newton iteration on x^2 - 58x + 1 in exact rationals
    x = Fraction(58)
    for _ in range(8):
        x -= (x * x - 58 * x + 1) / (2 * x - 58)
    lam = growth_rate(58, digits=60)
    with localcontext() as ctx:
        ctx.prec = 80
        assert abs(Decimal(x.numerator) / Decimal(x.denominator) - lam) < Decimal("1e-50")
    s10, s11 = growth_closed_form(58, 10), growth_closed_form(58, 11)
    assert abs(Decimal(s11) / Decimal(s10) - lam) < Decimal("1e-6")


def test_classify_check_depth_exhaustive():
    # the built-in cross-check against generate() raises on any disagreement
    for q in corpus(1, 4, 5):
        classify(q, check_depth=40)
