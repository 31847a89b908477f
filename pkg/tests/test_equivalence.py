from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import bits_xor, parity_strings, two_party_law_from_formula
from vernamsim import (
    Basis,
    CertificateError,
    ClassicalEnsemble,
    EnumerationBoundError,
    MultipartyConfig,
    MultipartyDescription,
    OutcomeDistribution,
    TwoPartyConfig,
    backend_equivalence,
    classicality_certificate,
    dephase,
    describe_multiparty,
    even_parity_ensemble,
    hadamard_rewrite,
    make_ghz,
    multiparty_sweep,
    total_variation,
    two_party_sweep,
    vernam_correspondence,
)


def bits(n):
    return ["".join(b) for b in product("01", repeat=n)]


def test_total_variation_examples():
    d = OutcomeDistribution("bits:1", {"0": 0.3, "1": 0.7})
    assert total_variation(d, d) == 0
    assert total_variation(OutcomeDistribution("bits:1", {"0": 1}), OutcomeDistribution("bits:1", {"1": 1})) == 1
    half = OutcomeDistribution("bits:1", {"0": 0.5, "1": 0.5})
    skew = OutcomeDistribution("bits:1", {"0": 0.75, "1": 0.25})
    assert total_variation(half, skew) == 0.25


def test_total_variation_rejects_mismatched_spaces():
    with pytest.raises(ValueError):
        total_variation(OutcomeDistribution("bits:1", {"0": 1}), OutcomeDistribution("bits:2", {"00": 1}))


def test_outcome_distribution_validation():
    with pytest.raises(ValueError):
        OutcomeDistribution("x", {"0": 0.5})
    with pytest.raises(ValueError):
        OutcomeDistribution("x", {"0": 1.5, "1": -0.5})


@st.composite
def distributions(draw, size=4):
    w = np.array(draw(st.lists(st.floats(0, 1, allow_nan=False), min_size=size, max_size=size)))
    if w.sum() < 1e-6:
        w = np.ones(size)
    w = w / w.sum()
    return OutcomeDistribution("bits:2", {k: float(v) for k, v in zip(bits(2), w) if v > 0})


@given(distributions(), distributions(), distributions())
def test_metric_laws(a, b, c):
    assert total_variation(a, b) == pytest.approx(total_variation(b, a), abs=1e-15)
    assert total_variation(a, c) <= total_variation(a, b) + total_variation(b, c) + 1e-12
    assert total_variation(a, a) == 0
    assert 0 <= total_variation(a, b) <= 1


def test_two_party_equivalence_example():
    v = backend_equivalence(TwoPartyConfig("10", "01"))
    assert v.passed and v.distance <= 1e-12


def test_multiparty_equivalence_example():
    v = backend_equivalence(MultipartyConfig("101"))
    assert v.passed and v.distance <= 1e-12


def corrupted_law(p, r, pair_entries):
    """Digest law of the classical protocol run on an arbitrary pair ensemble."""
    n = len(p)
    law = {}
    for picks in product(pair_entries, repeat=n):
        s = u = ""
        for (a, b), pi, ri in zip(picks, p, r):
            a = str(int(a) ^ (pi != ri))
            b = str(int(b) ^ (pi == "1"))
            s, u = s + a, u + b
        digest = s + u + ("1" if bits_xor(s, u) == r else "0")
        law[digest] = law.get(digest, 0) + 2.0 ** -n
    return law


def tv(a, b):
    return 0.5 * sum(abs(a.get(k, 0) - b.get(k, 0)) for k in set(a) | set(b))


def test_corrupted_backend_is_detected():
    corrupted = ClassicalEnsemble(2, Basis.COMPUTATIONAL, {"01": 0.5, "11": 0.5})
    for p, r in product(bits(2), bits(2)):
        honest = corrupted_law(p, r, ["00", "11"])
        oracle = tv(honest, corrupted_law(p, r, ["01", "11"]))
        # overlap per round is 1/2, so 1 - (1/2)^2
        assert oracle == 0.75
        v = backend_equivalence(TwoPartyConfig(p, r), resource=corrupted)
        assert not v.passed
        assert v.distance == pytest.approx(oracle, abs=1e-12)


def test_equivalence_bounds():
    with pytest.raises(EnumerationBoundError):
        backend_equivalence(TwoPartyConfig("0000", "0000"))
    with pytest.raises(EnumerationBoundError):
        backend_equivalence(MultipartyConfig("00000"))


def test_exhaustive_sweeps():
    for n in (1, 2, 3):
        checks = two_party_sweep(n)
        assert len(checks) == 4 ** n
        assert all(c.passed and c.distance <= 1e-12 for c in checks)
    for m in (1, 2, 3, 4):
        checks = multiparty_sweep(m)
        assert len(checks) == 2 ** m
        assert all(c.passed for c in checks)


def test_rewrite_single_flip():
    report = hadamard_rewrite(describe_multiparty(MultipartyConfig("010")))
    assert report.gate_map == (("Z@party1", "X̂@party1"),)
    assert report.passed


def test_rewrite_no_gates():
    report = hadamard_rewrite(describe_multiparty(MultipartyConfig("00")))
    assert report.gate_map == ()
    assert report.passed and report.max_deviation <= 1e-12


def test_rewrite_four_flips():
    report = hadamard_rewrite(describe_multiparty(MultipartyConfig("1111")))
    assert [b for _, b in report.gate_map] == [f"X̂@party{i}" for i in range(4)]
    assert report.passed and report.max_deviation <= 1e-12
    assert report.rewritten["resource"] == "even_parity_hat_superposition"


def test_rewrite_soundness_all_configs():
    for m in range(1, 5):
        for p in bits(m):
            report = hadamard_rewrite(describe_multiparty(MultipartyConfig(p)))
            assert report.passed, p
            assert report.resource_deviation <= 1e-12


def test_rewrite_rejects_other_shapes():
    with pytest.raises(ValueError):
        hadamard_rewrite(MultipartyDescription(2, gates=(("X", 0),)))
    with pytest.raises(ValueError):
        hadamard_rewrite(MultipartyDescription(2, measurement=Basis.COMPUTATIONAL))
    with pytest.raises(ValueError):
        hadamard_rewrite(MultipartyDescription(2, resource="bell"))
    with pytest.raises(ValueError):
        hadamard_rewrite(MultipartyDescription(2, gates=(("Z", 2),)))


def test_certificate_examples():
    two = classicality_certificate(MultipartyDescription(2))
    assert dict(two.entries) == pytest.approx({"00": 0.5, "11": 0.5}, abs=1e-12)
    assert two.basis is Basis.HADAMARD
    four = classicality_certificate(MultipartyDescription(4, gates=(("Z", 1), ("Z", 3))))
    assert sorted(four.entries) == parity_strings(4, 0)
    assert dict(classicality_certificate(MultipartyDescription(1)).entries) == pytest.approx({"0": 1.0})


@pytest.mark.parametrize("m", range(1, 6))
def test_certificate_consistency(m):
    cert = classicality_certificate(MultipartyDescription(m))
    assert cert.isclose(dephase(make_ghz(m), Basis.HADAMARD))
    assert cert.isclose(even_parity_ensemble(m))


def test_certificate_error_type():
    assert issubclass(CertificateError, AssertionError)


def test_vernam_correspondence():
    for n in (1, 2, 3):
        for p, r in product(bits(n), bits(n)):
            assert vernam_correspondence(TwoPartyConfig(p, r))
            for s, u in two_party_law_from_formula(p, r):
                assert u == bits_xor(r, s)
