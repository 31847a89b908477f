"""Password protocols run over an entangled or a classically correlated backend.

Two-party scheme, per round i with password bit p_i and challenge bit r_i:

====== ======================================================
role   action
====== ======================================================
system holds share 0 of the round's pair; applies NOT iff r_i != p_i
user   holds share 1; applies NOT iff p_i = 1 (the "sender" is the user)
user   measures u_i and announces it on the public channel
system measures s_i and accepts iff s_i XOR u_i = r_i for every round
====== ======================================================

The two NOTs act on different shares and commute, so they are applied in a
fixed order (system first) for replayable transcripts.

Multiparty scheme. The message flow here is a reconstruction from the
ingredient list (GHZ resource, phase flip Z, Hadamard readout); it is not
attributed to any published protocol. Party i holds qubit i of a GHZ state
and applies Z iff its password bit is 1. Every party then measures in the
Hadamard basis, and a verifier accepts iff the XOR of the outcomes equals
the XOR of the password bits.

On the classical backend both schemes run the same steps with classical
ensembles in place of the quantum resource and a bit flip in place of X
(or Z, which acts as a NOT on Hadamard-basis labels).

Randomness is drawn from one generator per session in a fixed order. Quantum
backend: one measurement variate per round (or one for the whole GHZ state).
Classical backend: one resource variate per round (or one for the whole
ensemble); the measurement is then a deterministic readout. An impersonator
then draws its n guessed bits.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .bits import Basis, all_bitstrings, check_bits, flip_bit, parity, xor
from .classical import (
    ClassicalEnsemble,
    correlated_pair_ensemble,
    ensemble_flip,
    ensemble_product,
    even_parity_ensemble,
    sample_ensemble,
)
from .distributions import OutcomeDistribution, as_fraction, uniform
from .qstate import H, X, Z, StateVector, apply_gate, enumerate_outcomes, make_bell_pair, make_ghz, sample_outcome

MAX_ENUM = 10

SYSTEM, USER = 0, 1


class Backend(str, enum.Enum):
    QUANTUM = "quantum"
    CLASSICAL = "classical"


class EnumerationBoundError(ValueError):
    """Requested instance is too large for exhaustive enumeration."""


def _as_rng(rng) -> tuple[np.random.Generator, int | None]:
    if isinstance(rng, np.random.Generator):
        return rng, None
    seed = int(rng)
    return np.random.default_rng(seed), seed


@dataclass(frozen=True)
class TwoPartyConfig:
    password: str
    challenge: str
    backend: Backend = Backend.QUANTUM

    def __post_init__(self):
        check_bits(self.password, "password")
        check_bits(self.challenge, "challenge")
        if not self.password:
            raise ValueError("password must have at least one bit")
        if len(self.password) != len(self.challenge):
            raise ValueError(
                f"password has {len(self.password)} bits but challenge has {len(self.challenge)}"
            )
        object.__setattr__(self, "backend", Backend(self.backend))

    @property
    def n(self) -> int:
        return len(self.password)

    def with_backend(self, backend) -> "TwoPartyConfig":
        return TwoPartyConfig(self.password, self.challenge, Backend(backend))


@dataclass(frozen=True)
class MultipartyConfig:
    password: str
    backend: Backend = Backend.QUANTUM

    def __post_init__(self):
        check_bits(self.password, "password")
        if not self.password:
            raise ValueError("need at least one party")
        object.__setattr__(self, "backend", Backend(self.backend))

    @property
    def m(self) -> int:
        return len(self.password)

    def with_backend(self, backend) -> "MultipartyConfig":
        return MultipartyConfig(self.password, Backend(backend))


@dataclass(frozen=True)
class Transcript:
    """Record of one session.

    ``accepted`` is the verdict stored at run time; construction fails if
    it disagrees with the verdict recomputed from the recorded bits.
    """

    protocol: str
    backend: Backend
    password: str
    challenge: str | None = None
    system_bits: str | None = None
    user_bits: str | None = None
    outcomes: str | None = None
    accepted: bool = False
    seed: int | None = None
    messages: tuple[str, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "backend", Backend(self.backend))
        if self.protocol not in ("two_party", "multiparty"):
            raise ValueError(f"unknown protocol {self.protocol!r}")
        if self.recompute_verdict() != self.accepted:
            raise ValueError("stored verdict disagrees with the recorded bits")

    def recompute_verdict(self) -> bool:
        if self.protocol == "two_party":
            return xor(self.system_bits, self.user_bits) == self.challenge
        return parity(self.outcomes) == parity(self.password)

    def digest(self) -> str:
        """Recorded bits then the verdict flag: s+u+flag or y+flag."""
        flag = "1" if self.accepted else "0"
        if self.protocol == "two_party":
            return self.system_bits + self.user_bits + flag
        return self.outcomes + flag

    def to_dict(self) -> dict:
        d = {
            "protocol": self.protocol,
            "backend": self.backend.value,
            "p": self.password,
            "messages": list(self.messages),
            "verdict": "accept" if self.accepted else "reject",
            "seed": self.seed,
        }
        if self.protocol == "two_party":
            d.update(n=len(self.password), r=self.challenge, s=self.system_bits, u=self.user_bits)
        else:
            d.update(m=len(self.password), y=self.outcomes)
        return d


def _two_party_transcript(config, s, u, seed=None) -> Transcript:
    return Transcript(
        protocol="two_party",
        backend=config.backend,
        password=config.password,
        challenge=config.challenge,
        system_bits=s,
        user_bits=u,
        accepted=xor(s, u) == config.challenge,
        seed=seed,
        messages=(u,),
    )


def _multiparty_transcript(config, y, seed=None) -> Transcript:
    return Transcript(
        protocol="multiparty",
        backend=config.backend,
        password=config.password,
        outcomes=y,
        accepted=parity(y) == parity(config.password),
        seed=seed,
        messages=(y,),
    )


def round_operations(p_i: str, r_i: str) -> list[int]:
    """Shares that receive a NOT in one round, in application order."""
    ops = []
    if r_i != p_i:
        ops.append(SYSTEM)
    if p_i == "1":
        ops.append(USER)
    return ops


def prepared_pair(p_i: str, r_i: str) -> StateVector:
    state = make_bell_pair()
    for share in round_operations(p_i, r_i):
        state = apply_gate(state, X, share)
    return state


def prepared_pair_ensemble(p_i: str, r_i: str, resource: ClassicalEnsemble | None = None) -> ClassicalEnsemble:
    ens = correlated_pair_ensemble() if resource is None else resource
    for share in round_operations(p_i, r_i):
        ens = ensemble_flip(ens, share)
    return ens


def run_two_party(config: TwoPartyConfig, rng, user: str = "honest") -> Transcript:
    """Execute one session.

    ``user`` is ``"honest"`` (holds the password and its shares) or
    ``"impersonator"`` (holds nothing and announces uniformly random bits).
    ``rng`` is a numpy Generator or an integer seed, which is then recorded.
    """
    if user not in ("honest", "impersonator"):
        raise ValueError(f"unknown user strategy {user!r}")
    gen, seed = _as_rng(rng)
    rounds = list(zip(config.password, config.challenge))
    if config.backend is Backend.CLASSICAL:
        shared = [sample_ensemble(correlated_pair_ensemble(), gen) for _ in rounds]
        pairs = []
        for bits, (p_i, r_i) in zip(shared, rounds):
            for share in round_operations(p_i, r_i):
                bits = flip_bit(bits, share)
            pairs.append(bits)
    else:
        pairs = [sample_outcome(prepared_pair(p_i, r_i), Basis.COMPUTATIONAL, gen) for p_i, r_i in rounds]
    s = "".join(b[SYSTEM] for b in pairs)
    u = "".join(b[USER] for b in pairs)
    if user == "impersonator":
        u = "".join(str(b) for b in gen.integers(0, 2, size=config.n))
    return _two_party_transcript(config, s, u, seed)


def _check_bound(size: int, bound: int = MAX_ENUM, what: str = "n"):
    if size > bound:
        raise EnumerationBoundError(f"{what}={size} exceeds the enumeration bound {bound}")


def _joint_state(config: TwoPartyConfig) -> StateVector:
    # qubit 2i is the system share of round i, qubit 2i+1 the user share
    amps = make_bell_pair().amplitudes
    for _ in range(config.n - 1):
        amps = np.kron(amps, make_bell_pair().amplitudes)
    state = StateVector(2 * config.n, amps)
    for i, (p_i, r_i) in enumerate(zip(config.password, config.challenge)):
        for share in round_operations(p_i, r_i):
            state = apply_gate(state, X, 2 * i + share)
    return state


def _joint_ensemble(config: TwoPartyConfig, resource: ClassicalEnsemble | None) -> ClassicalEnsemble:
    pair = correlated_pair_ensemble() if resource is None else resource
    ens = ensemble_product(*[pair] * config.n)
    for i, (p_i, r_i) in enumerate(zip(config.password, config.challenge)):
        for share in round_operations(p_i, r_i):
            ens = ensemble_flip(ens, 2 * i + share)
    return ens


def enumerate_two_party(config: TwoPartyConfig, resource: ClassicalEnsemble | None = None) -> OutcomeDistribution:
    """Exact joint law of (s, u), keyed by the tuple ``(s, u)``.

    ``resource`` replaces the classical per-round pair ensemble; it exists
    so that tests can feed a corrupted resource to the equivalence checker.
    """
    _check_bound(config.n)
    if config.backend is Backend.QUANTUM:
        joint = enumerate_outcomes(_joint_state(config), Basis.COMPUTATIONAL).entries
    else:
        joint = _joint_ensemble(config, resource).entries
    return OutcomeDistribution(
        f"two_party:{config.n}", {(b[0::2], b[1::2]): p for b, p in joint.items()}
    )


def two_party_transcripts(config: TwoPartyConfig, resource: ClassicalEnsemble | None = None) -> OutcomeDistribution:
    """Exact distribution over honest-session transcript digests."""
    joint = enumerate_two_party(config, resource)
    return joint.marginal(
        lambda su: _two_party_transcript(config, *su).digest(),
        f"transcript:two_party:{config.n}",
    )


def impersonation_attack(config: TwoPartyConfig) -> Fraction:
    """Exact acceptance probability of a user announcing uniform random bits.

    The attacker holds no share and does not know p; it succeeds when its
    guess u happens to satisfy s XOR u = r.
    """
    s_law = enumerate_two_party(config).marginal(lambda su: su[0], f"bits:{config.n}")
    guess = Fraction(1, 2 ** config.n)
    return sum(
        as_fraction(p_s) * guess
        for s, p_s in s_law.items()
        for u in all_bitstrings(config.n)
        if xor(s, u) == config.challenge
    ) or Fraction(0)


def eavesdropper_view(config: TwoPartyConfig) -> OutcomeDistribution:
    """Exact law of the public message u."""
    return enumerate_two_party(config).marginal(lambda su: su[1], f"bits:{config.n}")


def multiparty_state(config: MultipartyConfig) -> StateVector:
    """GHZ resource after each password holder's phase flip."""
    state = make_ghz(config.m)
    for i, bit in enumerate(config.password):
        if bit == "1":
            state = apply_gate(state, Z, i)
    return state


def multiparty_ensemble(config: MultipartyConfig) -> ClassicalEnsemble:
    ens = even_parity_ensemble(config.m)
    for i, bit in enumerate(config.password):
        if bit == "1":
            ens = ensemble_flip(ens, i)
    return ens


def run_multiparty(config: MultipartyConfig, rng) -> Transcript:
    gen, seed = _as_rng(rng)
    if config.backend is Backend.CLASSICAL:
        y = sample_ensemble(multiparty_ensemble(config), gen)
    else:
        state = multiparty_state(config)
        for i in range(config.m):
            state = apply_gate(state, H, i)
        y = sample_outcome(state, Basis.COMPUTATIONAL, gen)
    return _multiparty_transcript(config, y, seed)


def enumerate_multiparty(config: MultipartyConfig) -> OutcomeDistribution:
    """Exact law of the Hadamard-basis outcomes y."""
    _check_bound(config.m, what="m")
    if config.backend is Backend.QUANTUM:
        return enumerate_outcomes(multiparty_state(config), Basis.HADAMARD)
    return multiparty_ensemble(config).to_distribution()


def multiparty_transcripts(config: MultipartyConfig) -> OutcomeDistribution:
    return enumerate_multiparty(config).marginal(
        lambda y: _multiparty_transcript(config, y).digest(), f"transcript:multiparty:{config.m}"
    )


def acceptance_probability(dist: OutcomeDistribution) -> float:
    """Mass on accepted digests of a transcript distribution."""
    return sum(p for d, p in dist.items() if d.endswith("1"))


def uniform_bits(n: int) -> OutcomeDistribution:
    return uniform(f"bits:{n}", all_bitstrings(n))

