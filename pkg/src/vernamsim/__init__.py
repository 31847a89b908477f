"""Password protocols on entangled and classically correlated resources."""

from .bits import Basis
from .classical import (
    ClassicalEnsemble,
    correlated_pair_ensemble,
    ensemble_flip,
    ensemble_product,
    even_parity_ensemble,
    vernam_decrypt,
    vernam_encrypt,
)
from .distributions import OutcomeDistribution, total_variation
from .equivalence import (
    CertificateError,
    EquivalenceVerdict,
    MultipartyDescription,
    RewriteReport,
    backend_equivalence,
    classicality_certificate,
    describe_multiparty,
    hadamard_rewrite,
    multiparty_sweep,
    two_party_sweep,
    vernam_correspondence,
)
from .protocols import (
    Backend,
    EnumerationBoundError,
    MultipartyConfig,
    Transcript,
    TwoPartyConfig,
    eavesdropper_view,
    enumerate_multiparty,
    enumerate_two_party,
    impersonation_attack,
    run_multiparty,
    run_two_party,
)
from .qstate import (
    GATES,
    Gate,
    H,
    StateVector,
    X,
    Z,
    apply_gate,
    basis_state,
    conjugate_by_hadamard,
    dephase,
    enumerate_outcomes,
    make_bell_pair,
    make_ghz,
    sample_outcome,
)

__version__ = "0.1.0"
