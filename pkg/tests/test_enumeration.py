from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from qwalk.enumeration import (complete_series, count_totals, count_walks, fundamental_equation_mismatch,
                               kernel_form_mismatch, sequence_csv, slice)
from qwalk.stepset import CANONICAL, Direction, StepSet, all_triples, rev


def brute_force(s: StepSet, n: int) -> dict:
    """Endpoint counts of length-``n`` walks by listing every word."""
    out: dict = {}
    for word in product(s.vectors, repeat=n):
        x = y = 0
        ok = True
        for i, j in word:
            x, y = x + i, y + j
            if x < 0 or y < 0:
                ok = False
                break
        if ok:
            out[(x, y)] = out.get((x, y), 0) + 1
    return out


@pytest.mark.parametrize("k", range(1, 12))
def test_layers_match_brute_force(k):
    s = CANONICAL[k]
    w = count_walks(s, 6)
    for n in range(7):
        assert dict(w[n]) == brute_force(s, n)


# Frozen sequences, each checked against brute_force above or a known closed form.
FROZEN_TOTALS = {
    1: [1, 3, 9, 27, 81, 243, 729],
    5: [1, 1, 3, 7, 17, 47, 125],
    6: [1, 2, 4, 10, 26, 66, 178],
    7: [1, 1, 2, 4, 9, 21, 51],
    10: [1, 1, 3, 7, 21, 55, 165, 457],
}


@pytest.mark.parametrize("k,seq", FROZEN_TOTALS.items())
def test_frozen_totals(k, seq):
    assert count_totals(CANONICAL[k], len(seq) - 1) == seq


def test_kreweras_origin_returns():
    w = count_walks(CANONICAL[5], 9)
    assert slice(w, "origin").scalars(10) == [1, 0, 0, 2, 0, 0, 16, 0, 0, 192]


def test_zero_length():
    assert count_totals(CANONICAL[5], 0) == [1]


@pytest.mark.parametrize("k", range(1, 12))
def test_fundamental_equation(k):
    s = CANONICAL[k]
    assert fundamental_equation_mismatch(s, count_walks(s, 12)) is None


def test_class10_kernel_form():
    assert kernel_form_mismatch(count_walks(CANONICAL[10], 12)) is None


@pytest.mark.parametrize("k", range(1, 12))
def test_loop_reversal(k):
    s = CANONICAL[k]
    a = slice(count_walks(s, 14), "origin")
    b = slice(count_walks(rev(s), 14), "origin")
    assert a.agrees(b)


@given(st.sampled_from(all_triples()))
@settings(max_examples=25)
def test_totals_bounds(s):
    seq = count_totals(s, 10)
    for n, a in enumerate(seq):
        assert 0 <= a <= len(s) ** n
    if any(i >= 0 and j >= 0 for i, j in s.vectors):
        assert all(b >= a for a, b in zip(seq, seq[1:]))


def test_slices_are_consistent():
    w = count_walks(CANONICAL[9], 8)
    q = complete_series(w)
    assert slice(w, "xaxis").agrees(q.at_y0())
    assert slice(w, "yaxis").agrees(q.at_x0())
    assert slice(w, "totals").agrees(q.at_1())
    assert slice(w, "origin").agrees(q.at_x0().at_y0())


def test_unknown_slice():
    with pytest.raises(ValueError):
        slice(count_walks(CANONICAL[1], 2), "corner")


def test_jsonl_and_csv_output():
    w = count_walks(StepSet.of("N", "E"), 1)
    lines = w.to_jsonl().splitlines()
    assert lines[0] == '{"n": 0, "i": 0, "j": 0, "count": 1}'
    assert len(lines) == 3
    assert sequence_csv([1, 2]).splitlines()[0] == "n,count"
