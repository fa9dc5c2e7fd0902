"""Fibonacci and Gopala-Hemachandra residue sequences modulo m.

Period computation and the two-class structure over odd primes, the derived
+1/-1 binary sequences, autocorrelation-based randomness measurement, and
deterministic key material.
"""

from .arith import (
    FibPair,
    GHParams,
    binet_fib_mod,
    fib_mod,
    gh_term,
    is_prime,
    mod_sqrt,
    nth_prime,
    sieve_primes,
)
from .binseq import (
    BinarySequence,
    SequenceKind,
    general_moduli_sequence,
    prime_indexed_sequence,
    to_bit_string,
    to_lines,
)
from .keystream import (
    KeyMaterial,
    KeyOrigin,
    gh_residue_stream,
    keygen_from_primes,
    pack_bits,
    regenerate,
)
from .periods import (
    BoundCheck,
    ClassificationError,
    PeriodRecord,
    PrimeClass,
    expected_equality_moduli,
    gh_period,
    pisano_period_bruteforce,
    pisano_period_prime,
    pisano_periods_range,
    verify_period_bound,
)
from .stats import (
    AutocorrProfile,
    Convention,
    autocorrelation,
    profile_csv,
    randomness_measure,
)

__version__ = "0.1.0"

__all__ = [
    "AutocorrProfile",
    "BinarySequence",
    "BoundCheck",
    "ClassificationError",
    "Convention",
    "FibPair",
    "GHParams",
    "KeyMaterial",
    "KeyOrigin",
    "PeriodRecord",
    "PrimeClass",
    "SequenceKind",
    "autocorrelation",
    "binet_fib_mod",
    "expected_equality_moduli",
    "fib_mod",
    "general_moduli_sequence",
    "gh_period",
    "gh_residue_stream",
    "gh_term",
    "is_prime",
    "keygen_from_primes",
    "mod_sqrt",
    "nth_prime",
    "pack_bits",
    "pisano_period_bruteforce",
    "pisano_period_prime",
    "pisano_periods_range",
    "prime_indexed_sequence",
    "profile_csv",
    "randomness_measure",
    "regenerate",
    "sieve_primes",
    "to_bit_string",
    "to_lines",
    "verify_period_bound",
]
