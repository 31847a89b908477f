"""Exact outcome distributions and the total-variation metric."""

from __future__ import annotations

from collections.abc import Hashable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

NORM_TOL = 1e-12


@dataclass(frozen=True)
class OutcomeDistribution(Mapping):
    """Probability map over protocol outcomes.

    ``space`` names the outcome space (for instance ``"bits:3"`` or
    ``"two_party:2"``). Distributions over different spaces are not
    comparable. Keys are bitstrings, tuples of bitstrings, or transcript
    digests.
    """

    space: str
    entries: Mapping[Hashable, float] = field(default_factory=dict)

    def __post_init__(self):
        entries = {k: float(v) for k, v in self.entries.items()}
        if any(v < 0 for v in entries.values()):
            raise ValueError("negative probability")
        total = sum(entries.values())
        if abs(total - 1.0) > NORM_TOL:
            raise ValueError(f"probabilities sum to {total!r}, not 1")
        object.__setattr__(self, "entries", MappingProxyType(entries))

    def __getitem__(self, key):
        return self.entries[key]

    def __iter__(self) -> Iterator:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def prob(self, key) -> float:
        return self.entries.get(key, 0.0)

    def support(self) -> list:
        return sorted(self.entries)

    def marginal(self, fn, space: str) -> "OutcomeDistribution":
        """Push the distribution forward through ``fn``."""
        out: dict = {}
        for k, p in self.entries.items():
            key = fn(k)
            out[key] = out.get(key, 0.0) + p
        return OutcomeDistribution(space, out)


def as_fraction(p: float, max_denominator: int = 1 << 32) -> Fraction:
    """Snap a floating probability to the nearby small-denominator rational.

    Every probability the protocols produce is dyadic with a small
    denominator, so this recovers it exactly from its rounded float.
    """
    return Fraction(p).limit_denominator(max_denominator)


def uniform(space: str, outcomes) -> OutcomeDistribution:
    outcomes = list(outcomes)
    return OutcomeDistribution(space, {o: 1.0 / len(outcomes) for o in outcomes})


def total_variation(d1: OutcomeDistribution, d2: OutcomeDistribution) -> float:
    """Half the L1 distance between two distributions over the same space."""
    if d1.space != d2.space:
        raise ValueError(f"outcome spaces differ: {d1.space!r} vs {d2.space!r}")
    keys = set(d1.entries) | set(d2.entries)
    # sorted for a summation order independent of dict insertion
    dist = 0.5 * sum(abs(d1.prob(k) - d2.prob(k)) for k in sorted(keys, key=repr))
    return min(max(dist, 0.0), 1.0)
