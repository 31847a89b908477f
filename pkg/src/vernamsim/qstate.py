"""Dense state-vector engine for the X/Z/H gate set.

Amplitude index ``k`` of an n-qubit state corresponds to the ket whose
label is ``format(k, f"0{n}b")``: qubit 0 is the leftmost character and the
most significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .bits import Basis, check_bits, from_index, to_index
from .classical import ClassicalEnsemble
from .distributions import OutcomeDistribution

NORM_TOL = 1e-9
GATE_TOL = 1e-12
PRUNE = 1e-15

_SQRT1_2 = 1 / sqrt(2)


@dataclass(frozen=True, eq=False)
class StateVector:
    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if self.num_qubits < 1:
            raise ValueError(f"num_qubits must be positive, got {self.num_qubits}")
        if amps.size != 2 ** self.num_qubits:
            raise ValueError(f"expected {2 ** self.num_qubits} amplitudes, got {amps.size}")
        norm = np.vdot(amps, amps).real
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"state is not normalized (|a|^2 = {norm!r})")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.amplitudes, self.amplitudes).real))

    def allclose(self, other: "StateVector", atol: float = GATE_TOL) -> bool:
        return self.num_qubits == other.num_qubits and np.allclose(
            self.amplitudes, other.amplitudes, rtol=0, atol=atol
        )


@dataclass(frozen=True, eq=False)
class Gate:
    label: str
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.array(self.matrix, dtype=complex)
        if mat.shape != (2, 2):
            raise ValueError("gates act on one qubit")
        if not np.allclose(mat.conj().T @ mat, np.eye(2), rtol=0, atol=GATE_TOL):
            raise ValueError(f"gate {self.label!r} is not unitary")
        mat.flags.writeable = False
        object.__setattr__(self, "matrix", mat)

    def __repr__(self):
        return f"Gate({self.label!r})"


X = Gate("X", [[0, 1], [1, 0]])
Z = Gate("Z", [[1, 0], [0, -1]])
H = Gate("H", np.array([[1, 1], [1, -1]]) * _SQRT1_2)
GATES = {"X": X, "Z": Z, "H": H}


def basis_state(bits: str, basis: Basis = Basis.COMPUTATIONAL) -> StateVector:
    """|bits> in the computational basis, or the hat-basis ket H^n|bits>."""
    check_bits(bits)
    if not bits:
        raise ValueError("empty bitstring")
    amps = np.zeros(2 ** len(bits), dtype=complex)
    amps[to_index(bits)] = 1.0
    state = StateVector(len(bits), amps)
    if Basis(basis) is Basis.HADAMARD:
        for q in range(len(bits)):
            state = apply_gate(state, H, q)
    return state


def make_bell_pair() -> StateVector:
    return make_ghz(2)


def make_ghz(m: int) -> StateVector:
    """(|0...0> + |1...1>)/sqrt(2) on m qubits."""
    if m < 1:
        raise ValueError(f"GHZ state needs at least one qubit, got m={m}")
    amps = np.zeros(2 ** m, dtype=complex)
    amps[0] = amps[-1] = _SQRT1_2
    return StateVector(m, amps)


def apply_gate(state: StateVector, gate: Gate, qubit: int) -> StateVector:
    n = state.num_qubits
    if not 0 <= qubit < n:
        raise IndexError(f"qubit {qubit} out of range for {n} qubits")
    psi = state.amplitudes.reshape([2] * n)
    psi = np.tensordot(gate.matrix, psi, axes=([1], [qubit]))
    psi = np.moveaxis(psi, 0, qubit)
    return StateVector(n, psi.reshape(-1))


def _hadamard_amplitudes(amps: np.ndarray, n: int) -> np.ndarray:
    # <y^|psi> = 2^{-n/2} sum_x (-1)^{x.y} psi_x, done as a butterfly per axis
    out = amps.reshape([2] * n).copy()
    for axis in range(n):
        a0 = np.take(out, 0, axis=axis)
        a1 = np.take(out, 1, axis=axis)
        out = np.stack([a0 + a1, a0 - a1], axis=axis)
    return out.reshape(-1) / 2 ** (n / 2)


def outcome_probabilities(state: StateVector, basis: Basis = Basis.COMPUTATIONAL) -> np.ndarray:
    """Dense Born-rule probability vector indexed like the amplitudes."""
    amps = state.amplitudes
    if Basis(basis) is Basis.HADAMARD:
        amps = _hadamard_amplitudes(amps, state.num_qubits)
    return np.abs(amps) ** 2


def enumerate_outcomes(state: StateVector, basis: Basis = Basis.COMPUTATIONAL) -> OutcomeDistribution:
    """Exact distribution of a full measurement of every qubit in ``basis``."""
    probs = outcome_probabilities(state, basis)
    (support,) = np.nonzero(probs >= PRUNE)
    entries = {from_index(int(k), state.num_qubits): float(probs[k]) for k in support}
    # renormalize away the pruned dust
    total = sum(entries.values())
    return OutcomeDistribution(
        f"bits:{state.num_qubits}", {k: p / total for k, p in entries.items()}
    )


def sample_outcome(state: StateVector, basis: Basis, rng: np.random.Generator) -> str:
    """Draw one measurement outcome. Consumes one uniform variate from ``rng``."""
    dist = enumerate_outcomes(state, basis)
    keys = dist.support()
    cdf = np.cumsum([dist[k] for k in keys])
    i = int(np.searchsorted(cdf, rng.random() * cdf[-1], side="right"))
    return keys[min(i, len(keys) - 1)]


def dephase(state: StateVector, basis: Basis = Basis.COMPUTATIONAL) -> ClassicalEnsemble:
    """Drop all coherences in the product ``basis``, keeping the diagonal."""
    dist = enumerate_outcomes(state, basis)
    return ClassicalEnsemble(state.num_qubits, Basis(basis), dict(dist.entries))


def conjugate_by_hadamard(gate: Gate) -> Gate:
    """Return H^dagger G H, labelled as X, Z or H."""
    mat = H.matrix.conj().T @ gate.matrix @ H.matrix
    for known in GATES.values():
        if np.allclose(mat, known.matrix, rtol=0, atol=GATE_TOL):
            return known
    raise ValueError(f"H^dagger {gate.label} H is outside the gate set")
