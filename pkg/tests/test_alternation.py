import itertools

import pytest
from hypothesis import given, strategies as st

from brunnian.alternation import (AlternationTable, alternation_table, check_prop4, check_prop5,
                                  check_theorem2, check_theorem3, check_theorem7,
                                  column_vectors, necessary_violations, pair_count, run_left,
                                  run_up)
from brunnian.core import IntMatrix, MultiBlockForm, SignDiagonal
from brunnian.errors import IndexOutOfRange, NotSquare


def table(*vals):
    return AlternationTable.from_tuple(vals)


def test_alternation_table_entry():
    t = alternation_table(IntMatrix.from_rows([[7, 1], [0, 9]]))
    assert t[1, 2] == 1 and t[2, 1] == -1 and t[1, 1] == 0


def test_alternation_table_needs_square():
    with pytest.raises(NotSquare):
        alternation_table(IntMatrix.from_rows([[1, 2]]))


def test_column_major_order():
    h = IntMatrix.from_rows([[0, 1, 2], [0, 0, 3], [0, 0, 0]])
    assert alternation_table(h).values == (1, 2, 3)
    assert table(1, 0, 1).render() == "1 0\n  1"


def test_reverse_order_flag():
    h = IntMatrix.from_rows([[0, 0], [1, 0]])
    assert alternation_table(h).values == (-1,)
    assert alternation_table(h, reverse=True).values == (1,)


def test_from_tuple_and_mapping():
    assert table(1, 0, 1).size == 3
    assert AlternationTable.from_mapping(3, {(2, 3): 1}).values == (0, 0, 1)
    with pytest.raises(ValueError):
        table(1, 0)
    with pytest.raises(IndexOutOfRange):
        table(1)[1, 3]


def test_runs():
    zero3 = table(0, 0, 0)
    assert run_left(zero3, 1, 3) == 2
    assert run_up(zero3, 2, 3) == 2
    assert run_left(table(1, 0, 0), 1, 3) == 1
    assert run_left(table(0, 1, 0), 1, 3) == 0
    with pytest.raises(IndexOutOfRange):
        run_left(zero3, 2, 2)
    with pytest.raises(IndexOutOfRange):
        run_up(zero3, 1, 4)


def test_theorem2_examples():
    assert check_theorem2(table(1, 1, 1)) == []
    v = check_theorem2(table(-1))
    assert [(x.clause, x.i, x.j) for x in v] == [("(1)", 1, 2)]
    # h12 = 1, run 0 at (1,2) so h13 must be in {0, 1}
    assert any(x.clause == "(2)" for x in check_theorem2(table(1, -1, 1)))
    # h12 = 0 gives an odd run reaching the diagonal: h13 in {0, -1}
    assert any(x.clause == "(3)" for x in check_theorem2(table(0, 1, 0)))
    assert any("must be -1, 0 or 1" in x.message for x in check_theorem2(table(0, 2, 0)))


def test_theorem3_and_prop4():
    assert check_theorem3(table(0, 0, 0)) == []
    assert check_prop4(table(1, -1, 1)) != []
    assert check_prop4(table(0, 0, 0)) == []


def brute_parity(t: AlternationTable, i: int, j: int) -> bool:
    col = [k for k in range(1, t.size + 1) if i <= k <= j - 1 and t[k, j] != 0]
    row = [k for k in range(1, t.size + 1) if i + 1 <= k <= j and t[i, k] != 0]
    return len(col) % 2 == len(row) % 2


def test_prop5_example():
    v = check_prop5(table(0, -1, 1))
    assert [(x.i, x.j) for x in v] == [(1, 3)]


@given(st.integers(2, 5).flatmap(
    lambda k: st.lists(st.sampled_from((-1, 0, 1)), min_size=pair_count(k), max_size=pair_count(k))))
def test_prop5_matches_brute_force(vals):
    t = AlternationTable.from_tuple(vals)
    flagged = {(x.i, x.j) for x in check_prop5(t)}
    expected = {(i, j) for i, j in t.pairs() if t[i, j] != 0 and not brute_parity(t, i, j)}
    assert flagged == expected


def test_necessary_conditions_accept_example2():
    for vals in [(0, 0, 0), (0, 0, 1), (0, -1, 0), (1, 0, 0), (1, 1, 1), (1, 0, 1)]:
        assert necessary_violations(table(*vals)) == []
    assert len([v for v in itertools.product((-1, 0, 1), repeat=3)
                if not necessary_violations(table(*v))]) == 6


def test_literal_vertical_variant_rejects_a_realizable_tuple():
    # (0,0,0,0,-1,0) is realizable, yet the vertical-run rule read literally rejects it
    t = table(0, 0, 0, 0, -1, 0)
    assert necessary_violations(t) == []
    assert necessary_violations(t, include_theorem3=True) != []


def test_theorem7():
    h = IntMatrix.from_rows([[0, 2, 0], [0, 0, 0], [0, 0, 0]])
    f = MultiBlockForm((4, 2), (SignDiagonal.alternating(4), SignDiagonal.alternating(2)),
                       (h, IntMatrix.zeros(1)))
    v = check_theorem7(f)
    assert len(v) == 1 and v[0].i == 1 and v[0].j == 2
    f2 = MultiBlockForm((2, 2), (SignDiagonal.alternating(2),) * 2, (IntMatrix.zeros(1),) * 2,
                        {(1, 2): IntMatrix.from_rows([[2]]), (2, 1): IntMatrix.from_rows([[0]])})
    assert [x.clause for x in check_theorem7(f2)] == ["(II) P1,2"]


def test_column_vectors():
    assert column_vectors(table(1, 0, 1)) == [(1,), (0, 1)]


def test_violation_json():
    v = check_theorem2(table(-1))[0]
    assert v.to_json() == {"check": "theorem2", "clause": "(1)", "i": 1, "j": 2,
                           "message": v.message}
