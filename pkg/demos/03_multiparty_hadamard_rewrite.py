"""Multiparty parity scheme, read in the Hadamard basis.

Run with ``python demos/03_multiparty_hadamard_rewrite.py``.
"""

import numpy as np

from vernamsim import (
    Basis,
    H,
    MultipartyConfig,
    X,
    Z,
    classicality_certificate,
    describe_multiparty,
    enumerate_multiparty,
    enumerate_outcomes,
    hadamard_rewrite,
    make_ghz,
    multiparty_sweep,
)

# Z acts as a NOT on Hadamard-basis labels.
print("H^dagger Z H == X:", np.allclose(H.matrix.conj().T @ Z.matrix @ H.matrix, X.matrix))

# Read in the hat basis, the GHZ state is uniform over even-parity strings.
def rounded(dist):
    return {k: round(v, 12) for k, v in sorted(dist.items())}


print("GHZ_4 hat outcomes:", rounded(enumerate_outcomes(make_ghz(4), Basis.HADAMARD)))

# Each Z flips the parity of the outcome string.
cfg = MultipartyConfig("0101")
print("p=0101 outcome law:", rounded(enumerate_multiparty(cfg)))

# The rewrite: GHZ -> even-parity labels, Z -> X-hat, readout of labels.
report = hadamard_rewrite(describe_multiparty(MultipartyConfig("1101")))
for before, after in report.gate_map:
    print(f"  {before} -> {after}")
print("rewrite passed:", report.passed, "max deviation:", report.max_deviation)

# The classical mixture that replaces the GHZ state.
cert = classicality_certificate(describe_multiparty(cfg))
print("certificate:", rounded(cert.entries), cert.basis.value)

print("backends agree for all 16 passwords at m=4:", all(c.passed for c in multiparty_sweep(4)))
