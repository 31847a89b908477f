"""Swapping Bell pairs for classically correlated bits changes nothing.

Run with ``python demos/02_classical_substitution.py``.
"""

from vernamsim import (
    Basis,
    ClassicalEnsemble,
    TwoPartyConfig,
    backend_equivalence,
    correlated_pair_ensemble,
    dephase,
    make_bell_pair,
    two_party_sweep,
)

# Dephasing the Bell pair in the computational basis gives {00: 1/2, 11: 1/2}.
print("dephased Bell pair :", dict(dephase(make_bell_pair(), Basis.COMPUTATIONAL).entries))
print("correlated bits    :", dict(correlated_pair_ensemble().entries))

# The protocol only uses NOT and computational readout, so the transcript
# law is identical on both backends.
v = backend_equivalence(TwoPartyConfig("10", "01"))
print(f"p=10 r=01: distance {v.distance:.1e}, passed={v.passed}")

checks = two_party_sweep(3)
print(f"all {len(checks)} (p, r) pairs at n=3 pass:", all(c.passed for c in checks))

# Sanity check of the checker: a resource with a wrong entry is caught.
broken = ClassicalEnsemble(2, Basis.COMPUTATIONAL, {"01": 0.5, "11": 0.5})
v = backend_equivalence(TwoPartyConfig("10", "01"), resource=broken)
print(f"corrupted resource: distance {v.distance}, passed={v.passed}")
