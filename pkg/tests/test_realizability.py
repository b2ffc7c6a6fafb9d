import dataclasses
import itertools
import json

import pytest

from brunnian.alternation import AlternationTable, necessary_violations, pair_count
from brunnian.core import IntMatrix, SeifertBlock2, SignDiagonal, compose_block2
from brunnian.errors import InadmissibleChain, InconsistentPlan, NotBlockForm, NotRealizable, RangeError
from brunnian.realizability import (ChordArrangement, adjacency_classes, check_block,
                                    check_matrix, construction_plan, enumerate_chord_engine,
                                    enumerate_constraint_engine, enumerate_sequence_engine,
                                    plan_to_matrix, witness_search)
from brunnian.realizability.adjacency import EndpointLabel
from brunnian.realizability.engines import all_tables
from brunnian.sequences import parse_seq

EXAMPLE2 = {(0, 0, 0), (0, 0, 1), (0, -1, 0), (1, 0, 0), (1, 1, 1), (1, 0, 1)}


def block(signs, h):
    return SeifertBlock2(len(signs), SignDiagonal(tuple(signs)), IntMatrix.from_rows(h, len(signs) - 1))


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_generative_engines_agree(k):
    assert enumerate_sequence_engine(k) == enumerate_chord_engine(k)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_constraint_engine_over_approximates(k):
    assert enumerate_sequence_engine(k) <= enumerate_constraint_engine(k)


def test_engine_sizes():
    assert [len(enumerate_sequence_engine(k)) for k in (2, 3, 4, 5)] == [2, 6, 24, 120]
    assert enumerate_constraint_engine(3) == EXAMPLE2
    assert len(enumerate_constraint_engine(4)) == 28


def test_constraint_engine_matches_direct_filter():
    direct = {v for v in itertools.product((-1, 0, 1), repeat=6)
              if not necessary_violations(AlternationTable(4, v))}
    assert direct == enumerate_constraint_engine(4)


def test_k_bounds():
    for fn in (enumerate_sequence_engine, enumerate_chord_engine, enumerate_constraint_engine):
        with pytest.raises(RangeError):
            fn(1)
        with pytest.raises(RangeError):
            fn(7)


def test_all_tables_count():
    assert sum(1 for _ in all_tables(3)) == 27


# --- chords -----------------------------------------------------------------------

def test_chord_initial_and_extensions():
    a = ChordArrangement.initial()
    assert str(a) == "I1@c1 T1@c2"
    exts = list(a.extensions())
    assert sorted(e.table().values for e in exts) == [(0,), (1,)]
    for e in exts:
        assert e.arcs == 2 and len(e.boundary) == 4


def test_chord_intersection_is_antisymmetric():
    for arr in ChordArrangement.initial().extensions():
        for arr3 in arr.extensions():
            for a, b in itertools.permutations(range(1, 4), 2):
                assert arr3.intersection(a, b) == -arr3.intersection(b, a)


# --- witness search -----------------------------------------------------------------

def test_witness_examples():
    v = witness_search(AlternationTable(3, (1, 1, 1)))
    assert v.realizable and v.witness[0] == parse_seq("(1)_2")
    assert not witness_search(AlternationTable(3, (0, -1, 1))).realizable
    empty = witness_search(AlternationTable(1, ()))
    assert empty.realizable and empty.witness == ()


def test_witness_rejects_out_of_range_immediately():
    v = witness_search(AlternationTable(2, (2,)))
    assert not v.realizable and v.violations[0].clause == "(1)"


def test_failed_column_is_reported():
    v = witness_search(AlternationTable(3, (0, 1, 0)))
    assert not v.realizable and v.failed_column == 3


def test_verdict_json_roundtrips_witness():
    v = witness_search(AlternationTable(4, (1, 0, 1, -1, 0, 1)))
    doc = json.loads(json.dumps(v.to_json()))
    assert [parse_seq(s) for s in doc["witness"]] == list(v.witness)


# --- check_matrix ---------------------------------------------------------------------

@pytest.mark.parametrize("h", range(-10, 11))
def test_m1_family_realizable(h):
    assert check_matrix(IntMatrix.from_rows([[1, 0, 1], [0, 1, 1], [0, 0, h]])).realizable


def test_m2_flags_zero_h():
    v = check_matrix(IntMatrix.from_rows([[1, 0, 1], [0, -1, 1], [0, 0, 0]]))
    assert v.realizable and v.notes
    assert not check_matrix(IntMatrix.from_rows([[1, 0, 1], [0, -1, 1], [0, 0, 2]])).notes


def test_unrealizable_triple_in_7x7():
    # alternations (h12, h13, h23) = (0, 1, 0)
    b = block([1, -1, 1, -1], [[0, 0, 1], [0, 0, 0], [0, 0, 0]])
    assert not check_block(b).realizable
    assert not check_matrix(compose_block2(b)).realizable


def test_check_matrix_propagates_not_block_form():
    with pytest.raises(NotBlockForm):
        check_matrix(IntMatrix.from_rows([[1, 1, 1], [0, 1, 1], [0, 0, 0]]))


def test_reverse_order_check():
    # superdiagonal alternation -1 in the reversed loop order
    b = block([1, 1, 1], [[0, 0], [1, 0]])
    assert not check_block(b).realizable
    assert check_block(b, reverse=True).realizable


# --- construction plans ------------------------------------------------------------------

def test_plan_examples():
    p = construction_plan(block([1, 1], [[0]]))
    assert p.lines()[1].startswith("step 2: twist 6")
    p = construction_plan(block([1, -1, 1], [[2, 0], [0, 3]]))
    assert [s.twists for s in p.steps] == [8, 9]
    assert p.steps[1].intertwines == ((1, 0),)
    assert plan_to_matrix(p) == block([1, -1, 1], [[2, 0], [0, 3]])


def test_plan_inverse_from_bare_twist():
    p = construction_plan(block([1, 1], [[5]]))
    p = dataclasses.replace(p, steps=(dataclasses.replace(p.steps[0], twists=6),))
    assert plan_to_matrix(p).H.tolist() == [[0]]


def test_tampered_plan_shifts_diagonal():
    b = block([1, -1, 1], [[2, 0], [0, 3]])
    p = construction_plan(b)
    bad = dataclasses.replace(p, steps=(p.steps[0], dataclasses.replace(p.steps[1], twists=10)))
    out = plan_to_matrix(bad)
    assert out != b and out.H[1, 1] == 4


def test_plan_rejects_unrealizable():
    with pytest.raises(NotRealizable) as exc:
        construction_plan(block([1, 1, 1], [[0, 0], [1, 0]]))
    assert exc.value.verdict.violations


def test_inconsistent_plans():
    p = construction_plan(block([1, -1, 1], [[2, 0], [0, 3]]))
    with pytest.raises(InconsistentPlan):
        plan_to_matrix(dataclasses.replace(p, steps=p.steps[:1]))
    with pytest.raises(InconsistentPlan):
        plan_to_matrix(dataclasses.replace(p, witness=(parse_seq("(0)_3"),)))
    with pytest.raises(InconsistentPlan):
        plan_to_matrix(dataclasses.replace(p, signs=(1, 2, 1)))


def test_plan_json_and_sign_cases():
    p = construction_plan(block([1, -1, -1, 1], [[0, 1, 0], [0, 0, 1], [0, 0, 0]]))
    doc = p.to_json()
    assert doc["E"] == [1, -1, -1, 1]
    assert [s["case"] for s in doc["steps"]] == ["bottom-left", "top-right", "bottom-right"]


# --- adjacency ------------------------------------------------------------------------

def test_adjacency_for_modulus_3():
    r = adjacency_classes([parse_seq("(0)_2")])
    assert r.modulus == 3
    # (2)_3 ~ (0, 2)_3: e_3(2, v1, r) and e_3(2, v2, l)
    assert r.adjacent(EndpointLabel("T", 2), EndpointLabel("I", 2))
    assert not r.adjacent(EndpointLabel("T", 2), EndpointLabel("I", 1))
    assert len(r.pairs) == 3


def test_adjacency_is_symmetric_and_respects_equivalence():
    r = adjacency_classes([parse_seq("(1)_2"), parse_seq("(1, 2)_3")])
    for p in r.pairs:
        assert r.adjacent(p.second, p.first)
        a, b = p.elements
        assert a.seq != b.seq or a.label != b.label
    with pytest.raises(InadmissibleChain):
        adjacency_classes([parse_seq("(1)_2"), parse_seq("(0, 1)_3")])


def test_witness_soundness_k5_sample():
    realizable = enumerate_sequence_engine(5)
    for vals in sorted(realizable)[::7]:
        v = witness_search(AlternationTable(5, vals))
        assert v.realizable
    assert pair_count(5) == 10
