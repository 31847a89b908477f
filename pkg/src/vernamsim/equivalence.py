"""Exact checks that the entangled and classical backends cannot be told apart.

``backend_equivalence`` compares the full transcript distributions of both
backends. ``hadamard_rewrite`` re-expresses the multiparty protocol on
Hadamard-basis labels, where the GHZ resource becomes a uniform
superposition of even-parity labels and every phase flip becomes a NOT.
``classicality_certificate`` then exhibits the classical mixture that
reproduces the protocol's statistics.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .bits import Basis, all_bitstrings, parity, to_index
from .classical import ClassicalEnsemble, even_parity_ensemble, vernam_encrypt
from .distributions import OutcomeDistribution, total_variation
from .protocols import (
    Backend,
    EnumerationBoundError,
    MultipartyConfig,
    TwoPartyConfig,
    enumerate_multiparty,
    enumerate_two_party,
    multiparty_transcripts,
    two_party_transcripts,
)
from .qstate import GATES, H, StateVector, apply_gate, conjugate_by_hadamard, dephase, enumerate_outcomes, make_ghz

EQUIV_TOL = 1e-12
TWO_PARTY_BOUND = 3
MULTIPARTY_BOUND = 4

__all__ = [
    "EQUIV_TOL",
    "EquivalenceVerdict",
    "MultipartyDescription",
    "RewriteReport",
    "CertificateError",
    "backend_equivalence",
    "two_party_sweep",
    "multiparty_sweep",
    "describe_multiparty",
    "hadamard_rewrite",
    "classicality_certificate",
    "vernam_correspondence",
    "total_variation",
]


class CertificateError(AssertionError):
    """The dephased resource is not the expected classical mixture."""


@dataclass(frozen=True)
class EquivalenceVerdict:
    protocol: str
    password: str
    challenge: str | None
    distance: float
    passed: bool

    def to_dict(self) -> dict:
        d = {"protocol": self.protocol, "p": self.password, "distance_tv": self.distance, "passed": self.passed}
        if self.challenge is not None:
            d["r"] = self.challenge
        return d


def _transcript_law(config, backend, resource=None) -> OutcomeDistribution:
    if isinstance(config, TwoPartyConfig):
        return two_party_transcripts(config.with_backend(backend), resource)
    return multiparty_transcripts(config.with_backend(backend))


def backend_equivalence(config, resource: ClassicalEnsemble | None = None) -> EquivalenceVerdict:
    """Total-variation distance between quantum and classical transcript laws.

    The backend field of ``config`` is ignored; both are evaluated.
    ``resource`` overrides the classical per-round pair (two-party only).
    """
    if isinstance(config, TwoPartyConfig):
        if config.n > TWO_PARTY_BOUND:
            raise EnumerationBoundError(f"n={config.n} exceeds the equivalence bound {TWO_PARTY_BOUND}")
        protocol, challenge = "two_party", config.challenge
    elif isinstance(config, MultipartyConfig):
        if config.m > MULTIPARTY_BOUND:
            raise EnumerationBoundError(f"m={config.m} exceeds the equivalence bound {MULTIPARTY_BOUND}")
        if resource is not None:
            raise ValueError("resource override applies to the two-party protocol only")
        protocol, challenge = "multiparty", None
    else:
        raise TypeError(f"unsupported config {config!r}")
    dist = total_variation(
        _transcript_law(config, Backend.QUANTUM),
        _transcript_law(config, Backend.CLASSICAL, resource),
    )
    return EquivalenceVerdict(protocol, config.password, challenge, dist, dist <= EQUIV_TOL)


def two_party_sweep(n: int) -> list[EquivalenceVerdict]:
    """Every (p, r) pair at size n, ordered by p then r."""
    return [
        backend_equivalence(TwoPartyConfig(p, r))
        for p in all_bitstrings(n)
        for r in all_bitstrings(n)
    ]


def multiparty_sweep(m: int) -> list[EquivalenceVerdict]:
    return [backend_equivalence(MultipartyConfig(p)) for p in all_bitstrings(m)]


@dataclass(frozen=True)
class MultipartyDescription:
    """Declarative form of the multiparty protocol.

    ``gates`` lists ``(label, party)`` operations in application order.
    """

    m: int
    resource: str = "ghz"
    gates: tuple[tuple[str, int], ...] = ()
    measurement: Basis = Basis.HADAMARD

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "resource": self.resource,
            "gates": [f"{label}@party{q}" for label, q in self.gates],
            "measurement": Basis(self.measurement).value,
        }


def describe_multiparty(config: MultipartyConfig) -> MultipartyDescription:
    return MultipartyDescription(
        m=config.m, gates=tuple(("Z", i) for i, b in enumerate(config.password) if b == "1")
    )


def _check_shape(desc: MultipartyDescription):
    if desc.resource != "ghz":
        raise ValueError(f"unsupported resource {desc.resource!r}")
    if Basis(desc.measurement) is not Basis.HADAMARD:
        raise ValueError("only Hadamard-basis readout can be rewritten")
    for label, q in desc.gates:
        if label != "Z":
            raise ValueError(f"unsupported gate {label!r}; only Z is rewritten")
        if not 0 <= q < desc.m:
            raise ValueError(f"party {q} out of range for m={desc.m}")


@dataclass(frozen=True)
class RewriteReport:
    original: dict
    rewritten: dict
    gate_map: tuple[tuple[str, str], ...]
    resource_deviation: float
    max_deviation: float
    passed: bool = field(default=False)

    def to_dict(self) -> dict:
        return {
            "original": self.original,
            "rewritten": self.rewritten,
            "gate_map": [{"from": a, "to": b} for a, b in self.gate_map],
            "resource_deviation": self.resource_deviation,
            "max_deviation": self.max_deviation,
            "passed": self.passed,
        }


def _even_parity_labels(m: int) -> StateVector:
    # hat-basis coefficient vector: 2^{-(m-1)/2} on every even-parity label
    amps = np.zeros(2 ** m, dtype=complex)
    for y in all_bitstrings(m):
        if parity(y) == 0:
            amps[to_index(y)] = 2 ** (-(m - 1) / 2)
    return StateVector(m, amps)


def hadamard_rewrite(desc: MultipartyDescription) -> RewriteReport:
    """Relabel the protocol in the Hadamard basis and check nothing changed.

    The original protocol is simulated as stated (GHZ state, Z flips,
    Hadamard readout). The rewritten one acts directly on hat labels: the
    even-parity coefficient vector, the conjugated gates, and a plain
    readout of the labels.
    """
    _check_shape(desc)
    m = desc.m

    state = make_ghz(m)
    for label, q in desc.gates:
        state = apply_gate(state, GATES[label], q)
    original = enumerate_outcomes(state, Basis.HADAMARD)

    labels = _even_parity_labels(m)
    # the GHZ state must equal sum_y c_y |y^>, i.e. H^m applied to the labels
    embedded = labels
    for q in range(m):
        embedded = apply_gate(embedded, H, q)
    resource_dev = float(np.max(np.abs(embedded.amplitudes - make_ghz(m).amplitudes)))

    gate_map = []
    for label, q in desc.gates:
        hat = conjugate_by_hadamard(GATES[label])
        labels = apply_gate(labels, hat, q)
        gate_map.append((f"{label}@party{q}", f"{hat.label}̂@party{q}"))
    rewritten = enumerate_outcomes(labels, Basis.COMPUTATIONAL)

    keys = set(original) | set(rewritten)
    max_dev = max(abs(original.prob(k) - rewritten.prob(k)) for k in keys)
    return RewriteReport(
        original=desc.to_dict(),
        rewritten={
            "m": m,
            "resource": "even_parity_hat_superposition",
            "gates": [b for _, b in gate_map],
            "measurement": "hat_label_readout",
        },
        gate_map=tuple(gate_map),
        resource_deviation=resource_dev,
        max_deviation=max_dev,
        passed=max(max_dev, resource_dev) <= EQUIV_TOL,
    )


def classicality_certificate(desc: MultipartyDescription) -> ClassicalEnsemble:
    """The classical mixture that replaces the GHZ resource.

    Raises CertificateError if dephasing the resource in the Hadamard basis
    does not give the uniform even-parity ensemble.
    """
    _check_shape(desc)
    cert = dephase(make_ghz(desc.m), Basis.HADAMARD)
    expected = even_parity_ensemble(desc.m)
    if not cert.isclose(expected, EQUIV_TOL):
        raise CertificateError(f"deviation {cert.max_deviation(expected)!r} for m={desc.m}")
    # run through the classical backend, the certificate reproduces the protocol
    flips = [0] * desc.m
    for _, q in desc.gates:
        flips[q] ^= 1
    password = "".join(map(str, flips))
    if desc.m <= MULTIPARTY_BOUND:
        cfg = MultipartyConfig(password)
        d = total_variation(
            enumerate_multiparty(cfg.with_backend(Backend.QUANTUM)),
            enumerate_multiparty(cfg.with_backend(Backend.CLASSICAL)),
        )
        if d > EQUIV_TOL:
            raise CertificateError(f"classical backend differs by {d!r}")
    return cert


def vernam_correspondence(config: TwoPartyConfig) -> bool:
    """Check u = vernam_encrypt(r, s) on every outcome of the joint law.

    The public message is then the one-time-pad encryption of the challenge
    under the system's uniformly random bits.
    """
    joint = enumerate_two_party(config)
    s_law = joint.marginal(lambda su: su[0], f"bits:{config.n}")
    uniform_s = all(abs(p - 2.0 ** -config.n) <= EQUIV_TOL for p in s_law.values()) and len(s_law) == 2 ** config.n
    return uniform_s and all(u == vernam_encrypt(config.challenge, s) for s, u in joint)
