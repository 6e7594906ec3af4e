import pytest
from hypothesis import given, settings, strategies as st

from qwalk.enumeration import count_totals
from qwalk.guess import (InsufficientTerms, Recurrence, ansatz_bounds, guess_p_recurrence,
                         holonomy_evidence_survey, required_terms, survey_csv)
from qwalk.stepset import CANONICAL


def test_motzkin_recurrence_text():
    seq = count_totals(CANONICAL[7], 39)
    rep = guess_p_recurrence(seq, 2, 1, 10)
    assert rep.found
    assert rep.recurrence.text() == "(n+4)*a(n+2) - (2*n+5)*a(n+1) - 3*(n+1)*a(n) = 0"
    assert (rep.recurrence.order, rep.recurrence.degree) == (2, 1)


def test_constant_sequence():
    rep = guess_p_recurrence([1] * 12, 1, 0, 5)
    assert rep.recurrence.text() == "a(n+1) - a(n) = 0"


def test_search_order():
    pairs = ansatz_bounds(2, 2)
    assert pairs[:3] == [(1, 0), (1, 1), (2, 0)]


def test_insufficient_terms():
    with pytest.raises(InsufficientTerms):
        guess_p_recurrence([1, 2, 3], 2, 2, 5)
    assert required_terms(8, 8, 20) == 109


def test_class5_recurrence_regenerates_60_terms():
    seq = count_totals(CANONICAL[5], 59)
    rep = guess_p_recurrence(seq[:150] if len(seq) >= 150 else count_totals(CANONICAL[5], 149))
    rec = rep.recurrence
    assert rec is not None
    assert rec.generate(seq[:rec.order], 60, fallback=seq) == seq


def test_class10_not_found_is_bound_stamped():
    seq = count_totals(CANONICAL[10], 149)
    rep = guess_p_recurrence(seq, 8, 8, 20)
    assert not rep.found
    d = rep.to_dict()
    assert d["outcome"] == "NotFound"
    assert d["bounds"] == {"order": 8, "degree": 8}
    assert "holonomic" not in d["note"]


@st.composite
def recurrences(draw):
    r = draw(st.integers(1, 2))
    d = draw(st.integers(0, 1))
    coeffs = [[draw(st.integers(-3, 3)) for _ in range(d + 1)] for _ in range(r)]
    lead = [draw(st.integers(1, 3))] + [draw(st.integers(0, 2)) for _ in range(d)]
    init = [draw(st.integers(-5, 5)) for _ in range(r)]
    return Recurrence.normalised(coeffs + [lead]), init


@given(recurrences())
@settings(max_examples=25)
def test_round_trip(case):
    rec, init = case
    seq = rec.generate(init, 40)
    if not any(seq):
        return
    rep = guess_p_recurrence(seq, 2, 1, 8)
    assert rep.found
    found = rep.recurrence
    assert found.generate(seq[:found.order], 40, fallback=seq) == seq


@given(recurrences())
@settings(max_examples=15)
def test_monotone_in_bounds(case):
    rec, init = case
    seq = rec.generate(init, 50)
    if not any(seq):
        return
    small = guess_p_recurrence(seq, 2, 1, 8)
    large = guess_p_recurrence(seq, 3, 2, 8)
    assert small.found and large.found


def test_survey():
    entries = holonomy_evidence_survey()
    assert [e.report.found for e in entries] == [True] * 9 + [False] * 2
    assert all(e.consistent for e in entries)
    text = survey_csv(entries)
    assert text.splitlines()[0].startswith("class,steps,singular,group")
    assert len(text.splitlines()) == 12
