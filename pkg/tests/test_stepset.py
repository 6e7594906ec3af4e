from hypothesis import given, strategies as st

from qwalk.stepset import (CANONICAL, ClassId, Direction, StepSet, StepSetError, all_subsets,
                           all_triples, classify, enumerate_all_classes, flip_x, flip_y,
                           format_stepset, has_valid_walk, is_singular, parse_stepset, reflect,
                           resolve_steps, rev, symmetry_report)
import pytest

stepsets = st.sets(st.sampled_from(list(Direction))).map(lambda m: StepSet(frozenset(m)))


def test_parse_and_format_round_trip():
    s = parse_stepset("sw, N ,E")
    assert s == StepSet.of("N", "E", "SW")
    assert parse_stepset(format_stepset(s)) == s


def test_parse_rejects_unknown_direction():
    with pytest.raises(StepSetError):
        parse_stepset("N,UP")


@given(stepsets)
def test_symmetries_are_involutions(s):
    assert reflect(reflect(s)) == s
    assert rev(rev(s)) == s
    assert flip_x(flip_x(s)) == s
    assert flip_y(flip_y(s)) == s


@given(stepsets)
def test_symmetries_preserve_size(s):
    for f in (reflect, rev, flip_x, flip_y):
        assert len(f(s)) == len(s)


def test_counts_of_subsets_and_triples():
    assert len(all_subsets()) == 256
    assert len(all_triples()) == 56


def test_taxonomy_summary():
    summary = enumerate_all_classes().summary()
    assert summary == {
        "triples": 56, "empty": 10, "singular": 35, "nonsingular": 11,
        "reflect_invariant_nonempty": 4, "reflect_classes": 25,
        "singular_reflect_classes": 18, "nonsingular_reflect_classes": 7, "final_classes": 11,
    }


@pytest.mark.parametrize("steps,expected", [
    ("NE,S,W", ClassId("nonsingular", 5)),
    ("SE,S,SW", ClassId("empty")),
    ("N,NW,SE", ClassId("nonsingular", 11)),
    ("N,E,SW", ClassId("nonsingular", 6)),
    ("N,SE,W", ClassId("nonsingular", 7)),
    ("N,NE,E", ClassId("singular", 1)),
])
def test_classify_examples(steps, expected):
    assert classify(parse_stepset(steps)) == expected


def test_canonical_representatives_classify_to_their_index():
    for k, s in CANONICAL.items():
        assert classify(s).index == k


def test_reflection_preserves_class():
    for s in all_triples():
        assert classify(reflect(s)) == classify(s)


def test_classify_requires_three_steps():
    with pytest.raises(StepSetError):
        classify(StepSet.of("N", "E"))


def test_resolve_steps_aliases():
    assert resolve_steps("5") == StepSet.of("NE", "S", "W")
    with pytest.raises(StepSetError):
        resolve_steps("12")


def test_empty_sets_have_no_walk_and_singular_sets_are_fans():
    for s in all_triples():
        cid = classify(s)
        assert (cid.kind == "empty") == (not has_valid_walk(s))
        if cid.kind == "singular":
            assert is_singular(s)


def test_symmetry_report_of_tandem_and_axis_symmetric():
    assert symmetry_report(CANONICAL[8]).y_axis_symmetric
    assert symmetry_report(CANONICAL[9]).x_axis_symmetric
    assert not symmetry_report(CANONICAL[5]).rev_invariant
    assert symmetry_report(CANONICAL[5]).reflect_invariant
