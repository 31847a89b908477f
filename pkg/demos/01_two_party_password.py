"""Two-party password check on Bell pairs.

Run with ``python demos/01_two_party_password.py``.
"""

import numpy as np

from vernamsim import Backend, TwoPartyConfig, enumerate_two_party, run_two_party

# The user knows p; the system picks a fresh challenge r.
p = "1011"
r = "0110"
config = TwoPartyConfig(p, r, Backend.QUANTUM)

# One session. The seed is recorded in the transcript so it can be replayed.
t = run_two_party(config, 2024)
print("system bits s :", t.system_bits)
print("user bits   u :", t.user_bits, "(announced publicly)")
print("s xor u       :", "".join(str(int(a) ^ int(b)) for a, b in zip(t.system_bits, t.user_bits)))
print("challenge r   :", r)
print("verdict       :", "accept" if t.accepted else "reject")

# The exact joint law: 2^n equally likely (s, u) pairs, all with s xor u = r.
law = enumerate_two_party(config)
for (s, u), prob in sorted(law.items()):
    print(f"  s={s} u={u}  P={prob:.4f}")

# Many sessions, one generator: every honest session is accepted.
gen = np.random.default_rng(0)
print("accepted:", sum(run_two_party(config, gen).accepted for _ in range(1000)), "/ 1000")

# A challenge of all zeros works just as well.
zero = TwoPartyConfig(p, "0000")
print("with r = 0000:", all(run_two_party(zero, gen).accepted for _ in range(1000)))
