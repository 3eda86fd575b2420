"""Stabilizer classification against the independent state-vector oracle."""

import itertools

import numpy as np
import pytest

from graphlhv.graphs import Graph, UnsupportedSizeError, chain, grid, ring, star
from graphlhv.oracle import (
    Verdict,
    classify,
    enumerate_stabilizer_measurements,
    statevector_verdict,
)
from graphlhv.pauli import Measurement

_MATS = {
    "I": np.eye(2),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def _kron_state(g):
    """Third opinion: graph state built from explicit Kronecker products."""
    plus = np.array([1, 1], dtype=complex) / np.sqrt(2)
    psi = plus
    for _ in range(g.n - 1):
        psi = np.kron(psi, plus)
    # amplitude index uses bit j-1 for site j, so site 1 is the fastest bit
    cz = np.ones(psi.shape[0])
    for u, v in g.edges:
        for b in range(psi.shape[0]):
            if (b >> (u - 1)) & 1 and (b >> (v - 1)) & 1:
                cz[b] = -cz[b]
    return psi * cz


def _kron_expectation(g, m):
    psi = _kron_state(g)
    op = np.eye(1)
    for ch in m.letters:  # site 1 = lowest bit = rightmost kron factor
        op = np.kron(_MATS[ch], op)
    return (psi.conj() @ (op @ psi)).real


def test_verdict_validation():
    with pytest.raises(ValueError):
        Verdict("deterministic")
    with pytest.raises(ValueError):
        Verdict("uniform", 1)
    with pytest.raises(ValueError):
        Verdict("maybe")
    assert Verdict.deterministic(-1).to_json_dict() == {"kind": "deterministic", "value": -1}


def test_classify_ring_examples():
    g = ring(12)
    assert classify(g, Measurement("IXIXIXIXIXIX")) == Verdict.deterministic(1)
    letters = "".join(
        "Y" if j % 2 == 1 else ("X" if j in {2, 6, 10} else "I") for j in range(1, 13)
    )
    assert classify(g, Measurement(letters)) == Verdict.deterministic(-1)


def test_classify_single_site_uniform():
    for g in (ring(4), chain(3), star(4)):
        for letter in "XYZ":
            m = Measurement(letter + "I" * (g.n - 1))
            assert classify(g, m) == Verdict.uniform()


def test_classify_grid_certain_sub():
    assert classify(grid(2, 3), Measurement("YYYIYI")) == Verdict.deterministic(-1)


def test_statevector_examples():
    assert statevector_verdict(Graph(2, ((1, 2),)), Measurement("YY")) == Verdict.deterministic(1)
    assert statevector_verdict(chain(3), Measurement("YXY")) == Verdict.deterministic(-1)
    for g in (chain(3), ring(4)):
        assert statevector_verdict(g, Measurement("I" * g.n)) == Verdict.deterministic(1)


def test_statevector_guard():
    with pytest.raises(UnsupportedSizeError):
        statevector_verdict(ring(15), Measurement("I" * 15))


def test_statevector_matches_kron_oracle():
    # cross-check the vectorized state-vector path against explicit kron math
    for g in (chain(3), ring(4), star(4), grid(2, 2)):
        for letters in itertools.product("IXYZ", repeat=g.n):
            m = Measurement("".join(letters))
            e = _kron_expectation(g, m)
            v = statevector_verdict(g, m)
            if abs(e - 1) < 1e-9:
                assert v == Verdict.deterministic(1)
            elif abs(e + 1) < 1e-9:
                assert v == Verdict.deterministic(-1)
            else:
                assert abs(e) < 1e-9
                assert v == Verdict.uniform()


def test_oracles_agree_small_suite():
    for g in (ring(3), chain(2), star(3), grid(2, 2)):
        for letters in itertools.product("IXYZ", repeat=g.n):
            m = Measurement("".join(letters))
            assert classify(g, m) == statevector_verdict(g, m)


def test_enumeration_chain2():
    entries = [(str(m), s) for m, s in enumerate_stabilizer_measurements(chain(2))]
    assert entries == [("II", 1), ("XZ", 1), ("ZX", 1), ("YY", 1)]


def test_enumeration_counts_and_distinct():
    for g in (chain(3), ring(5), grid(2, 2)):
        entries = list(enumerate_stabilizer_measurements(g))
        assert len(entries) == 2 ** g.n
        assert len({str(m) for m, _ in entries}) == 2 ** g.n
        assert (str(entries[0][0]), entries[0][1]) == ("I" * g.n, 1)


def test_enumeration_ten_qubit_sign():
    g = chain(10)
    target = {1, 2, 3, 5, 6, 9}
    amask = sum(1 << (j - 1) for j in target)
    entries = list(enumerate_stabilizer_measurements(g))
    m, s = entries[amask]
    assert str(m) == "YXYIYYZZXZ"
    assert s == -1


def test_enumeration_guard():
    with pytest.raises(UnsupportedSizeError):
        next(enumerate_stabilizer_measurements(ring(21)))


def test_deterministic_count_is_stabilizer_size():
    for g in (chain(3), ring(4), star(4)):
        det = sum(
            1
            for letters in itertools.product("IXYZ", repeat=g.n)
            if classify(g, Measurement("".join(letters))).is_deterministic
        )
        assert det == 2 ** g.n


def test_letters_determine_generator_vector():
    # X/Y support of an enumerated word reads the bit-vector back
    g = grid(2, 2)
    for amask, (m, _) in enumerate(enumerate_stabilizer_measurements(g)):
        xy = sum(1 << (j - 1) for j in m.support() if m.letter(j) in "XY")
        assert xy == amask


def test_measurement_length_checked():
    with pytest.raises(ValueError):
        classify(chain(3), Measurement("XX"))
    with pytest.raises(ValueError):
        statevector_verdict(chain(3), Measurement("XX"))
