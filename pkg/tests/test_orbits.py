import math

import pytest

from convnum.core import BinarySequence, autocorrelation, parse_sequence
from convnum.orbits import (
    count_ascents,
    count_descents,
    is_path,
    orbit_count,
    path_representative,
    path_rotations,
    run_decomposition,
)

from conftest import all_sequences


def test_path_example():
    form = path_representative(parse_sequence("0100110"))
    assert form.sequence == parse_sequence("1100100")
    assert form.is_unique
    assert form.sequence == parse_sequence("0100110").rotate(form.shift)


def test_single_one_leads():
    assert path_representative(parse_sequence("001")).sequence == parse_sequence("100")


def test_path_maps_to_itself():
    for text in ("1100100", "101100", "1010", "10"):
        form = path_representative(parse_sequence(text))
        assert form.sequence == parse_sequence(text)
        assert form.shift == 0


def test_non_coprime_tie_break_is_smallest_shift():
    f = parse_sequence("011001")  # n=6, k=3
    shifts = path_rotations(f)
    assert len(shifts) > 1
    assert path_representative(f).shift == min(shifts)
    assert not path_representative(f).is_unique


@pytest.mark.parametrize("text, expected", [("1100100", True), ("0100110", False), ("10", True), ("01", False)])
def test_is_path(text, expected):
    assert is_path(parse_sequence(text)) is expected


@pytest.mark.parametrize("text", ["0000", "111"])
def test_constant_rejected(text):
    with pytest.raises(ValueError):
        path_representative(parse_sequence(text))
    with pytest.raises(ValueError):
        run_decomposition(parse_sequence(text))


def test_descents():
    assert count_descents(parse_sequence("0100110")) == 2
    for t in range(1, 8):
        assert count_descents(parse_sequence("10" * t)) == t


def test_runs():
    rd = run_decomposition(parse_sequence("1100100"))
    assert rd.runs == ((2, 2), (1, 2))
    assert rd.r == 2
    rd = run_decomposition(parse_sequence("0100110"))
    assert rd.runs == ((1, 2), (2, 2))


@pytest.mark.parametrize("n, k, expected", [(15, 7, 429), (7, 3, 5), (21, 10, 16796)])
def test_orbit_count(n, k, expected):
    assert orbit_count(n, k) == expected
    assert orbit_count(n, k) * n == math.comb(n, k)


def test_orbit_count_rejects_non_coprime():
    with pytest.raises(ValueError):
        orbit_count(15, 6)


def test_path_rotations_exhaustive():
    for n in range(2, 13):
        for f in all_sequences(n):
            if f.k in (0, n):
                continue
            form = path_representative(f)
            assert is_path(form.sequence)
            assert f.rotate(form.shift) == form.sequence
            n_paths = sum(is_path(f.rotate(j)) for j in range(n))
            assert n_paths >= 1
            assert sorted(path_rotations(f)) == [j for j in range(n) if is_path(f.rotate(j))]
            if math.gcd(n, f.k) == 1:
                assert n_paths == 1 and form.is_unique
            rd = run_decomposition(f)
            assert count_descents(f) == count_ascents(f) == rd.r
            assert sum(a for a, _ in rd.runs) == f.k
            assert sum(b for _, b in rd.runs) == n - f.k
            assert all(a >= 1 and b >= 1 for a, b in rd.runs)
            # distance-1 incidences: x = k - r
            assert autocorrelation(f).sigma[0] == f.k - rd.r
