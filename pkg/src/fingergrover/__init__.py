"""Hybrid random-quantum substring search with fingerprint compression.

A desk-scale, exactly-simulated implementation: classical sliding-window
vocabularies, prime-modulus fingerprints drawn from a strongly universal
hash family, and amplitude amplification over the index register, together
with a Monte Carlo harness that checks the error, query, and qubit bounds.
"""

from .core import (
    BitString,
    Vocabulary,
    bin_word,
    build_vocabulary,
    find_occurrences_classical,
    numeric_value,
)
from .fingerprint import (
    ConstantFamily,
    FingerprintWord,
    FreivaldsFamily,
    HashFamily,
    IdentityFamily,
    PrimeFamily,
    bad_prime_census,
    first_primes,
    freivalds_family,
    hashed_vocabulary,
    mod_fingerprint,
    verify_strong_universality,
)
from .grover import (
    AmplitudeState,
    OracleSpec,
    closed_form_amplitudes,
    diffusion,
    gate_level_oracle_check,
    init_uniform,
    iteration_count,
    oracle_phase_flip,
    recurrence_step,
    run_grover,
)
from .harness import (
    ErrorStats,
    complexity_report,
    estimate_error_rate,
    exact_error_mixture,
    plant_unique_instance,
    sweep,
)
from .search import (
    SearchConfig,
    SearchOutcome,
    algorithm_A,
    algorithm_A2,
    procedure_A1,
)

__version__ = "0.1.0"
