"""One-time pad, impersonation and eavesdropping.

Run with ``python demos/04_vernam_and_attacks.py``.
"""

from collections import Counter
from itertools import product

from vernamsim import (
    TwoPartyConfig,
    eavesdropper_view,
    impersonation_attack,
    vernam_correspondence,
    vernam_decrypt,
    vernam_encrypt,
)

four = ["".join(b) for b in product("01", repeat=4)]

# Every 4-bit message encrypts to every ciphertext under exactly one key.
for m in ("0000", "1011"):
    counts = Counter(vernam_encrypt(m, k) for k in four)
    print(m, "-> ciphertexts:", len(counts), "each seen", set(counts.values()), "time(s)")
print("roundtrip ok:", all(vernam_decrypt(vernam_encrypt(m, k), k) == m for m in four for k in four))

# The announced bits u are r encrypted under the system's random bits s.
print("u = s xor r on every outcome:", vernam_correspondence(TwoPartyConfig("101", "011")))

# Guessing u without a share succeeds with probability 2^-n.
for n in (1, 2, 3):
    print(f"n={n}: impersonation", impersonation_attack(TwoPartyConfig("1" * n, "0" * n)))

# What an eavesdropper sees does not depend on p.
for p in ("00", "11"):
    print(f"p={p}: u law", dict(sorted(eavesdropper_view(TwoPartyConfig(p, "01")).items())))
