"""Classical shared randomness: correlated ensembles and the one-time pad."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

import numpy as np

from .bits import Basis, all_bitstrings, check_bits, flip_bit, parity, xor
from .distributions import NORM_TOL, OutcomeDistribution


@dataclass(frozen=True)
class ClassicalEnsemble:
    """A probability distribution over basis-tagged bitstrings.

    Only the support is stored. The basis tag is metadata saying which
    product basis the bit labels refer to; it does not change how bits are
    flipped or sampled.
    """

    num_bits: int
    basis: Basis
    entries: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        basis = Basis(self.basis)
        entries = {}
        for bits, p in self.entries.items():
            check_bits(bits)
            if len(bits) != self.num_bits:
                raise ValueError(f"entry {bits!r} has length {len(bits)}, expected {self.num_bits}")
            p = float(p)
            if p < 0:
                raise ValueError(f"negative probability for {bits!r}")
            if p > 0:
                entries[bits] = p
        total = sum(entries.values())
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "entries", MappingProxyType(dict(sorted(entries.items()))))

    def prob(self, bits: str) -> float:
        return self.entries.get(bits, 0.0)

    def max_deviation(self, other: "ClassicalEnsemble") -> float:
        if self.num_bits != other.num_bits or self.basis != other.basis:
            return float("inf")
        keys = set(self.entries) | set(other.entries)
        return max((abs(self.prob(k) - other.prob(k)) for k in keys), default=0.0)

    def isclose(self, other: "ClassicalEnsemble", tol: float = NORM_TOL) -> bool:
        return self.max_deviation(other) <= tol

    def marginal(self, positions) -> "ClassicalEnsemble":
        positions = list(positions)
        out: dict[str, float] = {}
        for bits, p in self.entries.items():
            key = "".join(bits[i] for i in positions)
            out[key] = out.get(key, 0.0) + p
        return ClassicalEnsemble(len(positions), self.basis, out)

    def to_distribution(self) -> OutcomeDistribution:
        return OutcomeDistribution(f"bits:{self.num_bits}", self.entries)


def correlated_pair_ensemble() -> ClassicalEnsemble:
    """Two perfectly correlated uniform bits, {00: 1/2, 11: 1/2}."""
    return ClassicalEnsemble(2, Basis.COMPUTATIONAL, {"00": 0.5, "11": 0.5})


def even_parity_ensemble(m: int) -> ClassicalEnsemble:
    """Uniform mixture of the even-parity m-bit strings, hadamard-tagged."""
    if m < 1:
        raise ValueError(f"need at least one bit, got m={m}")
    weight = 1.0 / 2 ** (m - 1)
    return ClassicalEnsemble(
        m, Basis.HADAMARD, {y: weight for y in all_bitstrings(m) if parity(y) == 0}
    )


def ensemble_flip(ensemble: ClassicalEnsemble, position: int) -> ClassicalEnsemble:
    """Complement the bit at ``position`` in every entry."""
    if not 0 <= position < ensemble.num_bits:
        raise IndexError(f"position {position} out of range for {ensemble.num_bits} bits")
    return ClassicalEnsemble(
        ensemble.num_bits,
        ensemble.basis,
        {flip_bit(bits, position): p for bits, p in ensemble.entries.items()},
    )


def ensemble_product(*ensembles: ClassicalEnsemble) -> ClassicalEnsemble:
    """Independent joint ensemble; entry keys are concatenated left to right."""
    if not ensembles:
        raise ValueError("need at least one ensemble")
    basis = ensembles[0].basis
    if any(e.basis != basis for e in ensembles):
        raise ValueError("cannot combine ensembles tagged with different bases")
    joint = {"": 1.0}
    for e in ensembles:
        joint = {a + b: pa * pb for a, pa in joint.items() for b, pb in e.entries.items()}
    return ClassicalEnsemble(sum(e.num_bits for e in ensembles), basis, joint)


def sample_ensemble(ensemble: ClassicalEnsemble, rng: np.random.Generator) -> str:
    """Draw one entry. Consumes exactly one uniform variate from ``rng``."""
    keys = list(ensemble.entries)
    cdf = np.cumsum([ensemble.entries[k] for k in keys])
    i = int(np.searchsorted(cdf, rng.random() * cdf[-1], side="right"))
    return keys[min(i, len(keys) - 1)]


def vernam_encrypt(message: str, key: str) -> str:
    """One-time-pad encryption: bitwise XOR of message and key."""
    check_bits(message, "message")
    check_bits(key, "key")
    if len(message) != len(key):
        raise ValueError(f"message has {len(message)} bits but key has {len(key)}")
    return xor(message, key)


def vernam_decrypt(ciphertext: str, key: str) -> str:
    check_bits(ciphertext, "ciphertext")
    check_bits(key, "key")
    if len(ciphertext) != len(key):
        raise ValueError(f"ciphertext has {len(ciphertext)} bits but key has {len(key)}")
    return xor(ciphertext, key)
