import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from convnum.core import BinarySequence, autocorrelation, parse_sequence
from convnum.hadamard import (
    GsQuadruple,
    build_goethals_seidel,
    circulant,
    decode_coded_triple,
    deficit,
    encode_triple,
    fixture_quadruple,
    fixture_triple,
    format_sign_matrix,
    gs_condition,
    is_prime,
    load_fixture,
    paf,
    parse_sign_matrix,
    quadratic_residue_sequence,
    verify_hadamard,
)

from conftest import all_sequences

sequences = st.lists(st.integers(0, 1), min_size=1, max_size=40).map(lambda b: BinarySequence(tuple(b)))


def test_qr19():
    qr = quadratic_residue_sequence(19)
    assert qr.k == 9
    assert autocorrelation(qr).sigma == (4,) * 9


def test_qr_small():
    qr7 = quadratic_residue_sequence(7)
    assert qr7.support() == [1, 2, 4]
    assert autocorrelation(qr7).sigma == (1, 1, 1)
    qr11 = quadratic_residue_sequence(11)
    assert qr11.k == 5 and set(autocorrelation(qr11).sigma) == {2}


def test_qr_constant_for_3_mod_4():
    for p in range(3, 200):
        if is_prime(p) and p % 4 == 3:
            qr = quadratic_residue_sequence(p)
            assert qr.k == (p - 1) // 2
            assert set(autocorrelation(qr).sigma) == {(p - 3) // 4}


@pytest.mark.parametrize("p", [1, 2, 9, 15])
def test_qr_rejects(p):
    with pytest.raises(ValueError):
        quadratic_residue_sequence(p)


def test_gs19():
    q = fixture_quadruple(load_fixture("gs19"))
    assert q.weights == (9, 9, 7, 6)
    assert q.constant == 12
    ok, residual = gs_condition(q)
    assert ok and residual == (0,) * 9
    h = build_goethals_seidel(q)
    assert h.shape == (76, 76)
    assert verify_hadamard(h)


def test_gs_bit_flip_breaks():
    q = fixture_quadruple(load_fixture("gs19"))
    seqs = list(q.sequences)
    bits = list(seqs[3].bits)
    bits[5] ^= 1
    seqs[3] = BinarySequence(tuple(bits))
    broken = GsQuadruple(tuple(seqs))
    assert not gs_condition(broken)[0]
    with pytest.raises(ValueError):
        build_goethals_seidel(broken)


def test_length_mismatch():
    with pytest.raises(ValueError):
        GsQuadruple((parse_sequence("101"),) * 3 + (parse_sequence("10"),))
    with pytest.raises(ValueError):
        deficit(3, [parse_sequence("101"), parse_sequence("1001")])


def test_deficit_zero():
    qr = quadratic_residue_sequence(7)
    assert deficit(2, [qr, qr]) == (0, 0, 0)


def test_fixture79():
    fx = load_fixture("gs79")
    triple = fixture_triple(fx)
    assert tuple(f.k for f in triple.sequences) == (34, 34, 42)
    a = deficit(74, triple.sequences)
    assert a == tuple(fx["expected_deficit"])
    v = parse_sequence(fx["completion"])
    assert v.k == 43 and autocorrelation(v).sigma == a
    q = fixture_quadruple(fx)
    assert q.constant == 74 and gs_condition(q)[0]
    h = build_goethals_seidel(q)
    assert h.shape == (316, 316) and verify_hadamard(h)


def test_fixture167_deficit():
    fx = load_fixture("gs167")
    triple = fixture_triple(fx)
    assert tuple(f.k for f in triple.sequences) == (76, 76, 77)
    b = deficit(142, triple.sequences)
    assert b == tuple(fx["expected_deficit"])
    assert b[:3] == (41, 37, 40) and b[-1] == 40
    with pytest.raises(ValueError):
        fixture_quadruple(fx)


def test_decode_rules():
    t = decode_coded_triple(3, [4, 0, 7])
    assert [f.bits for f in t.sequences] == [(1, 0, 1), (0, 0, 1), (0, 0, 1)]
    assert decode_coded_triple(1, [1]).sequences[2].bits == (1,)
    with pytest.raises(ValueError):
        decode_coded_triple(2, [8, 0])
    with pytest.raises(ValueError):
        decode_coded_triple(3, [4, 0, 7], expected_weights=(1, 1, 1))


@pytest.mark.parametrize("name", ["gs79", "gs167"])
def test_encode_roundtrip(name):
    fx = load_fixture(name)
    assert list(encode_triple(fixture_triple(fx).sequences)) == fx["digits"]


def test_paf_examples(f1_infeasible):
    assert paf(f1_infeasible)[0] == -9
    assert paf(BinarySequence((0,) * 11)) == (11,) * 5


@given(sequences)
def test_paf_bridge(f):
    assert paf(f) == tuple(f.n - 4 * f.k + 4 * s for s in autocorrelation(f).sigma)


def test_paf_sum_zero_for_gs19():
    q = fixture_quadruple(load_fixture("gs19"))
    assert [sum(col) for col in zip(*(paf(f) for f in q.sequences))] == [0] * 9


def test_gs_equivalence_and_soundness_small_n():
    # Both predicates and the built matrix's Hadamard property depend only on
    # each sequence's (weight, profile) class, so one representative per class
    # covers every quadruple of sequences.
    for n in range(1, 10):
        reps = {}
        for f in all_sequences(n):
            reps.setdefault((f.k, autocorrelation(f).sigma), f)
        classes = list(reps.values())
        for quad in itertools.combinations_with_replacement(classes, 4):
            q = GsQuadruple(quad)
            ok = gs_condition(q)[0]
            paf_zero = all(sum(col) == 0 for col in zip(*(paf(f) for f in quad)))
            assert ok == paf_zero
            if ok:
                h = build_goethals_seidel(q)
                assert h.shape == (4 * n, 4 * n)
                assert verify_hadamard(h), quad


def test_verify_small():
    assert verify_hadamard([[1, 1], [1, -1]])
    assert not verify_hadamard(np.ones((3, 3), dtype=int))
    with pytest.raises(ValueError):
        verify_hadamard([[1, 0], [1, -1]])
    with pytest.raises(ValueError):
        verify_hadamard([[1, 1, 1], [1, -1, 1]])


def test_circulant_orientation():
    c = circulant(parse_sequence("110"))
    assert c.tolist() == [[1, 1, -1], [-1, 1, 1], [1, -1, 1]]


def test_sign_matrix_text_roundtrip():
    h = build_goethals_seidel(fixture_quadruple(load_fixture("gs19")))
    assert np.array_equal(parse_sign_matrix(format_sign_matrix(h)), h)
    with pytest.raises(ValueError):
        parse_sign_matrix("+-\n+x\n")
