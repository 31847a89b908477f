"""Bitstring helpers and the measurement-basis tag.

Bitstrings are plain ``str`` objects over the alphabet ``{'0', '1'}``. The
leftmost character is index 0, which is also qubit 0 and the most
significant bit of a state-vector index.
"""

from __future__ import annotations

import enum
from itertools import product
from typing import Iterator


class Basis(str, enum.Enum):
    """Measurement basis applied uniformly to every qubit."""

    COMPUTATIONAL = "computational"
    HADAMARD = "hadamard"


def check_bits(bits: str, name: str = "bitstring") -> str:
    if not isinstance(bits, str) or any(c not in "01" for c in bits):
        raise ValueError(f"{name} must be a string of '0'/'1' characters, got {bits!r}")
    return bits


def xor(a: str, b: str) -> str:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    return "".join("1" if x != y else "0" for x, y in zip(a, b))


def parity(bits: str) -> int:
    return bits.count("1") % 2


def flip_bit(bits: str, position: int) -> str:
    if not 0 <= position < len(bits):
        raise IndexError(f"position {position} out of range for {len(bits)} bits")
    flipped = "1" if bits[position] == "0" else "0"
    return bits[:position] + flipped + bits[position + 1:]


def all_bitstrings(n: int) -> Iterator[str]:
    """Every n-bit string in lexicographic (= index) order."""
    for t in product("01", repeat=n):
        yield "".join(t)


def to_index(bits: str) -> int:
    return int(bits, 2) if bits else 0


def from_index(index: int, n: int) -> str:
    return format(index, f"0{n}b") if n else ""
