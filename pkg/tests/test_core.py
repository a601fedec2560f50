import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convnum.core import (
    AutocorrProfile,
    BinarySequence,
    autocorrelation,
    binom_conv,
    d_to_sigma,
    format_sequence,
    incidences,
    parse_sequence,
)

from conftest import all_sequences, brute_sigma

sequences = st.lists(st.integers(0, 1), min_size=1, max_size=40).map(lambda b: BinarySequence(tuple(b)))


def test_autocorrelation_small_example():
    prof = autocorrelation(BinarySequence((1, 1, 0, 0, 1, 0, 0)))
    assert prof.sigma == (1, 0, 2)
    # the three pairs {0,1}, {0,4}, {1,4} sit at distances 1, 3, 3
    assert prof.d == (1, 0, 2)


def test_autocorrelation_n19_example(f1_infeasible):
    assert autocorrelation(f1_infeasible).sigma == (0, 3, 3, 1, 4, 3, 1, 4, 2)


def test_all_ones():
    assert autocorrelation(BinarySequence((1,) * 5)).sigma == (5, 5)


def test_even_n_normalization():
    prof = autocorrelation(BinarySequence((1, 0, 1, 0)))
    assert prof.sigma == (0, 2)
    assert prof.d == (0, 1)
    assert d_to_sigma(4, prof.d) == prof.sigma


def test_profile_json():
    prof = autocorrelation(parse_sequence("1100100"))
    assert prof.to_json() == {"n": 7, "k": 3, "sigma": [1, 0, 2], "d": [1, 0, 2]}


def test_odd_antipodal_rejected():
    with pytest.raises(ValueError):
        AutocorrProfile(4, 2, (0, 1))


@pytest.mark.parametrize(
    "t, r, expected",
    [(5, 2, 10), (-3, -3, 1), (3, 5, 0), (4, -1, 0), (-1, 0, 0), (-2, 1, 0), (0, 0, 1), (7, 7, 1)],
)
def test_binom_conv(t, r, expected):
    assert binom_conv(t, r) == expected


def test_binom_conv_pascal():
    for t in range(1, 65):
        for r in range(1, t):
            assert binom_conv(t, r) == binom_conv(t - 1, r - 1) + binom_conv(t - 1, r)
        assert binom_conv(t, 0) == binom_conv(t, t) == 1


@pytest.mark.parametrize("text", ["0,1,0,0,1,1,0", "0100110", "0 1 0 0 1 1 0", " 0, 1,0 ,0,1,1,0 "])
def test_parse(text):
    f = parse_sequence(text)
    assert f.bits == (0, 1, 0, 0, 1, 1, 0)
    assert (f.n, f.k) == (7, 3)


def test_parse_equivalence():
    assert parse_sequence("1100100") == BinarySequence((1, 1, 0, 0, 1, 0, 0))


@pytest.mark.parametrize("text", ["012", "", " , ", "1a0"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_sequence(text)


@given(sequences)
def test_roundtrip(f):
    assert parse_sequence(format_sequence(f)) == f


@given(sequences)
def test_symmetry_and_zero_distance(f):
    n = f.n
    assert incidences(f, 0) == f.k
    for i in range(1, n):
        assert incidences(f, i) == incidences(f, n - i)


@given(sequences, st.integers(-50, 50))
def test_rotation_invariance(f, j):
    assert autocorrelation(f.rotate(j)) == autocorrelation(f)


@given(sequences)
def test_bounds_and_parity(f):
    prof = autocorrelation(f)
    assert all(0 <= s <= f.k for s in prof.sigma)
    if f.n % 2 == 0:
        assert prof.sigma[-1] % 2 == 0


def test_conservation_exhaustive():
    for n in range(1, 13):
        for f in all_sequences(n):
            prof = autocorrelation(f)
            assert sum(prof.d) == math.comb(f.k, 2)
            assert prof.sigma == tuple(brute_sigma(f.bits, i) for i in range(1, n // 2 + 1))


def test_mask_roundtrip():
    f = parse_sequence("1100100")
    assert BinarySequence.from_mask(7, f.to_mask()) == f
    assert BinarySequence.from_support(7, f.support()) == f
