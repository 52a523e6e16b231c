"""The v_m(N) sequence and the graded invariant-dimension models."""

import itertools

import pytest

from branchlab import catalog
from branchlab.hilbert import (
    check_generator_degrees,
    claimed_degrees,
    distinguishing_multisets,
    graded_invariant_dim,
    v_sequence,
    v_sequence_naive,
)


def test_v_sequence_examples():
    assert v_sequence((1, 2), 4) == 3
    assert v_sequence((2, 2, 2), 4) == 6
    for m in [(1,), (2, 3), (1, 1, 5), (2, 2)]:
        assert v_sequence(m, 0) == 1


def test_v_sequence_matches_naive():
    pools = [
        m
        for parts in range(1, 5)
        for m in itertools.combinations_with_replacement(range(1, 6), parts)
    ]
    for m in pools:
        for N in range(21):
            assert v_sequence(m, N) == v_sequence_naive(m, N), (m, N)


def test_v_sequence_input_validation():
    with pytest.raises(ValueError):
        v_sequence((1, 0), 3)
    with pytest.raises(ValueError):
        v_sequence((2,), -1)


@pytest.fixture(scope="module")
def records():
    return {(r.id.tag, r.id.n): r for r in catalog.build_records(3)}


def test_graded_invariant_dim_examples(records):
    assert graded_invariant_dim(records[("i", 1)], 4) == 3
    assert graded_invariant_dim(records[("star", None)], 2) == 3
    # case (iv) n=1 model at N=2 includes the trace direction: the traceless
    # interlaced count is 2 and the full model gives 4 = v_{(1,1,2)}(2)
    assert graded_invariant_dim(records[("iv", 1)], 2) == 4
    assert v_sequence((1, 1, 2), 2) == 4


def test_model_absent_for_case_ii(records):
    with pytest.raises(ValueError):
        graded_invariant_dim(records[("ii_odd", 3)], 2)
    assert records[("ii_odd", 3)].hilbert_model is None
    assert records[("xiv", None)].hilbert_model is None


def test_check_generator_degrees_minimum_cases(records):
    minimum = [
        ("i", 1),
        ("i", 2),
        ("iii", 1),
        ("iii", 2),
        ("iv", 1),
        ("iv", 2),
        ("v", 1),
        ("v_prime", 1),
        ("vi", None),
        ("vii", None),
        ("viii", None),
        ("ix", None),
        ("x", None),
        ("xi", None),
        ("star", None),
    ]
    for key in minimum:
        assert check_generator_degrees(records[key], 12), key


def test_check_generator_degrees_case_iv_degree_list(records):
    # degrees 1,1,2,2,...,n,n,n+1
    r = records[("iv", 2)]
    assert claimed_degrees(r) == (1, 1, 2, 2, 3)
    assert check_generator_degrees(r, 12)


def test_nmax_must_cover_degrees(records):
    with pytest.raises(ValueError):
        check_generator_degrees(records[("vi", None)], 1)


def test_v_sequence_distinguishes_stored_multisets(records):
    seen = set()
    for r in records.values():
        if r.hilbert_model is None:
            continue
        degrees = claimed_degrees(r)
        if degrees in seen or len(degrees) > 7 or max(degrees) > 6:
            continue
        seen.add(degrees)
        assert distinguishing_multisets(degrees, 12, 6, 7) == [], degrees
