import pytest
from hypothesis import given, strategies as st

from brunnian.errors import (InadmissibleChain, InvalidHistory, ModulusMismatch, NotInBase,
                             ParseError, ValueOutOfRange)
from brunnian.sequences import (Seq, XHistory, base_set2, canonical, class_representatives,
                                delta, equivalent, extend_listing, extend_set, extend_set3,
                                format_seq, g2, g_full, g_step, parity_class, parse_chain,
                                parse_seq, quotient, route_elements)


def S(text):
    return parse_seq(text)


def test_parse_and_format():
    s = S("(0, 1)_3")
    assert s == Seq(3, (0, 1))
    assert format_seq(s) == "(0, 1)_3"
    assert S("(1,2,0)_{3}") == Seq(3, (1, 2, 0))
    assert parse_chain("(1)_2 (1, 2)_3; (0)_4") == [Seq(2, (1,)), Seq(3, (1, 2)), Seq(4, (0,))]


@pytest.mark.parametrize("text", ["(5)_2", "()_3", "0,1", "(a)_3", "(1)_1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_seq(text)


def test_seq_validation():
    with pytest.raises(ValueOutOfRange):
        Seq(2, (2,))
    with pytest.raises(ValueOutOfRange):
        Seq(3, ())


def test_delta():
    assert delta(S("(1)_2"), 1) == 2
    assert delta(S("(0)_2"), 1) == 0
    assert delta(S("(1, 2, 1)_3"), 1) == 0
    assert delta(S("(1, 2, 1)_3"), 2) == 3
    with pytest.raises(ValueOutOfRange):
        delta(S("(1)_2"), 2)


def test_parity_classes():
    assert equivalent(S("(0, 1)_3"), S("(0, 0, 1)_3"))
    assert equivalent(S("(0)_3"), S("(0, 0, 0)_3"))
    assert not equivalent(S("(2)_3"), S("(1, 2)_3"))


@given(st.integers(2, 6).flatmap(lambda m: st.lists(st.integers(0, m - 1), min_size=1, max_size=8)
                                 .map(lambda e: Seq(m, tuple(e)))))
def test_parity_class_is_invariant_under_permutation_and_zero_padding(s):
    t = Seq(s.modulus, tuple(reversed(s.entries)) + (0, 0))
    assert parity_class(s) == parity_class(t)
    if s.modulus > 2:
        u = Seq(s.modulus, s.entries + (1, 1))
        assert equivalent(s, u)


def test_base_set():
    assert set(base_set2()) == {Seq(2, (0,)), Seq(2, (1,))}
    assert len(quotient(base_set2())) == 2


def test_extend_set3_and_generator_agree():
    for s2 in base_set2():
        assert extend_set([s2]) == extend_set3(s2)
        assert len(extend_set3(s2)) == 6
    with pytest.raises(NotInBase):
        extend_set3(Seq(3, (0,)))


def test_route_order_listing():
    assert [str(s) for s in extend_listing([S("(0)_2")])] == [
        "(0)_3", "(2)_3", "(0, 2)_3", "(0, 1)_3", "(0, 0, 1)_3", "(0, 0, 0)_3"]
    assert [str(s) for s in extend_listing([S("(1)_2")])] == [
        "(0)_3", "(2)_3", "(1, 2)_3", "(1, 1)_3", "(1, 2, 1)_3", "(1, 2, 0)_3"]


def test_quotient_representatives():
    reps = [str(r) for r, _ in quotient(extend_set([S("(0)_2")]))]
    assert reps == ["(0)_3", "(2)_3", "(0, 1)_3"]
    reps = [str(r) for r, _ in quotient(extend_set([S("(1)_2")]))]
    assert reps == ["(0)_3", "(2)_3", "(1, 2)_3"]


def test_route_labels_for_modulus_3():
    labels = [e.label for e in route_elements([S("(0)_2")], 3)]
    assert labels == ["e_3(2, v1, l)", "e_3(2, v1, r)", "e_3(2, v2, l)", "e_3(1, v2, r)",
                      "e_3(1, v1, l)", "e_3(0, v1, r)"]


@pytest.mark.parametrize("chain", [["(0)_2", "(0)_3"], ["(1)_2", "(1, 2)_3"],
                                   ["(1)_2", "(1, 2)_3", "(3)_4"]])
def test_generated_sets_have_2m_route_elements(chain):
    history = [S(x) for x in chain]
    m = len(history) + 2
    elems = route_elements(history, m)
    assert len(elems) == 2 * m
    assert all(e.seq.modulus == m for e in elems)
    assert all(s.modulus == m for s in extend_set(history))


def test_extend_set_rejects_bad_history():
    with pytest.raises(InvalidHistory):
        extend_set([S("(1)_2"), S("(0, 1)_3")])
    with pytest.raises(InvalidHistory):
        extend_set([S("(1)_3")])
    with pytest.raises(InvalidHistory):
        extend_set([S("(1)_2")], m=5)


def test_class_level_membership():
    # (1, 1)_3 is not listed over (1)_2 but is equivalent to (0)_3, which is
    history = [S("(1)_2"), S("(1, 1)_3")]
    assert len(extend_set(history)) == 8


def test_canonical_order():
    assert canonical([S("(0, 1)_3"), S("(2)_3"), S("(0)_3"), S("(2)_3")]) == (
        S("(0)_3"), S("(2)_3"), S("(0, 1)_3"))
    assert class_representatives([S("(0, 0, 1)_3"), S("(0, 1)_3")]) == (S("(0, 1)_3"),)


def test_g2():
    assert g2(S("(0)_2")) == (0,)
    assert g2(S("(1)_2")) == (1,)
    assert g2(parity_class(S("(1)_2"))) == (1,)
    with pytest.raises(ModulusMismatch):
        g2(S("(0)_3"))


def test_g_step_examples():
    h1 = XHistory(((1,),))
    assert g_step(h1, S("(1, 2)_3")) == (1, 1)
    assert g_step(h1, S("(0)_3")) == (0, 0)
    assert g_step(XHistory(((0,),)), S("(2)_3")) == (0, 1)
    # zero run of length 1 reaching the row start: -1 times the virtual base
    assert g_step(XHistory(((0,),)), S("(0, 1)_3")) == (-1, 0)
    with pytest.raises(ModulusMismatch):
        g_step(h1, S("(0)_4"))


def test_g_full():
    assert g_full([S("(0)_2")]).columns == ((0,),)
    assert g_full([S("(1)_2"), S("(1, 1)_3")]).columns == ((1,), (0, 0))
    assert g_full([S("(0)_2"), S("(0, 1)_3")]).columns == ((0,), (-1, 0))
    assert g_full([]).columns == ()
    with pytest.raises(InadmissibleChain):
        g_full([S("(1)_2"), S("(0, 1)_3")])


def test_g_is_well_defined_on_classes():
    for s2 in base_set2():
        for s in extend_set([s2]):
            rep = next(r for r, ms in quotient(extend_set([s2])) if s in ms)
            assert g_full([s2, s]).columns == g_full([s2, rep]).columns


def test_xhistory_validation():
    with pytest.raises(ValueError):
        XHistory(((0,), (0,)))
    with pytest.raises(ValueError):
        XHistory(((-1,),))
    h = XHistory(((1,), (0, 1)))
    assert h.last == 3 and h.x(2, 3) == 1 and h.flat() == (1, 0, 1)
