from collections import Counter
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bits_xor, parity_strings
from vernamsim import (
    Basis,
    ClassicalEnsemble,
    correlated_pair_ensemble,
    dephase,
    ensemble_flip,
    ensemble_product,
    even_parity_ensemble,
    make_bell_pair,
    vernam_decrypt,
    vernam_encrypt,
)
from vernamsim.classical import sample_ensemble

FOUR_BITS = ["".join(b) for b in product("01", repeat=4)]


def test_correlated_pair():
    ens = correlated_pair_ensemble()
    assert dict(ens.entries) == {"00": 0.5, "11": 0.5}
    assert ens.basis is Basis.COMPUTATIONAL
    assert ens.isclose(dephase(make_bell_pair(), Basis.COMPUTATIONAL))
    for pos in (0, 1):
        assert dict(ens.marginal([pos]).entries) == {"0": 0.5, "1": 0.5}


def test_even_parity_examples():
    two = even_parity_ensemble(2)
    assert dict(two.entries) == {"00": 0.5, "11": 0.5}
    assert two.basis is Basis.HADAMARD
    assert dict(even_parity_ensemble(1).entries) == {"0": 1.0}
    three = even_parity_ensemble(3)
    assert sorted(three.entries) == parity_strings(3, 0)
    assert set(three.entries.values()) == {0.25}


def test_even_parity_rejects_zero():
    with pytest.raises(ValueError):
        even_parity_ensemble(0)


def test_ensemble_validation():
    with pytest.raises(ValueError):
        ClassicalEnsemble(2, Basis.COMPUTATIONAL, {"00": 0.5})
    with pytest.raises(ValueError):
        ClassicalEnsemble(2, Basis.COMPUTATIONAL, {"0": 1.0})
    with pytest.raises(ValueError):
        ClassicalEnsemble(1, Basis.COMPUTATIONAL, {"2": 1.0})
    ens = ClassicalEnsemble(1, Basis.COMPUTATIONAL, {"0": 1.0, "1": 0.0})
    assert dict(ens.entries) == {"0": 1.0}


def test_flip_examples():
    pair = correlated_pair_ensemble()
    assert dict(ensemble_flip(pair, 0).entries) == {"10": 0.5, "01": 0.5}
    assert ensemble_flip(ensemble_flip(pair, 0), 0) == pair
    flipped = ensemble_flip(even_parity_ensemble(3), 1)
    assert sorted(flipped.entries) == parity_strings(3, 1)
    assert flipped.basis is Basis.HADAMARD


def test_flip_rejects_bad_position():
    with pytest.raises(IndexError):
        ensemble_flip(correlated_pair_ensemble(), 2)


def test_product_concatenates():
    joint = ensemble_product(correlated_pair_ensemble(), correlated_pair_ensemble())
    assert dict(joint.entries) == {k: 0.25 for k in ("0000", "0011", "1100", "1111")}
    with pytest.raises(ValueError):
        ensemble_product(correlated_pair_ensemble(), even_parity_ensemble(2))


def test_sample_ensemble_respects_support(rng):
    ens = even_parity_ensemble(4)
    counts = Counter(sample_ensemble(ens, rng) for _ in range(4000))
    assert set(counts) == set(parity_strings(4, 0))


@given(st.integers(1, 5), st.lists(st.integers(0, 4), max_size=12))
def test_flips_keep_normalization_and_toggle_parity(m, positions):
    ens = even_parity_ensemble(m)
    flips = 0
    for pos in positions:
        if pos < m:
            ens = ensemble_flip(ens, pos)
            flips += 1
    assert sum(ens.entries.values()) == pytest.approx(1.0, abs=1e-12)
    assert sorted(ens.entries) == parity_strings(m, flips % 2)


@pytest.mark.parametrize(
    "message, key, cipher",
    [("1011", "0000", "1011"), ("1011", "1011", "0000"), ("1100", "1010", "0110")],
)
def test_encrypt_examples(message, key, cipher):
    assert vernam_encrypt(message, key) == cipher


def test_decrypt_examples():
    assert vernam_decrypt("0110", "1010") == "1100"
    for c in FOUR_BITS:
        assert vernam_decrypt(c, "0000") == c


def test_length_mismatch():
    with pytest.raises(ValueError):
        vernam_encrypt("101", "10")
    with pytest.raises(ValueError):
        vernam_decrypt("1", "10")


def test_roundtrip_exhaustive():
    pairs = 0
    for m, k in product(FOUR_BITS, FOUR_BITS):
        assert vernam_decrypt(vernam_encrypt(m, k), k) == m
        pairs += 1
    assert pairs == 256


def test_perfect_secrecy_exhaustive():
    for m in FOUR_BITS:
        counts = Counter(vernam_encrypt(m, k) for k in FOUR_BITS)
        assert set(counts) == set(FOUR_BITS)
        assert set(counts.values()) == {1}


def test_key_composition_exhaustive():
    for m, k1, k2 in product(FOUR_BITS, repeat=3):
        assert vernam_encrypt(vernam_encrypt(m, k1), k2) == vernam_encrypt(m, bits_xor(k1, k2))
