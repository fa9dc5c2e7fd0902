"""Periods of Fibonacci and Gopala-Hemachandra sequences modulo m.

The period is defined on the state pair (two consecutive residues), not on a
single residue: the Fibonacci step matrix is invertible mod every m (its
determinant is -1), so the orbit of the pair (0, 1) is purely periodic and
the pair recurs exactly at multiples of the period.

For odd primes the period splits into two classes: it divides p-1 when p
ends in 1 or 9, and divides 2p+2 when p ends in 3 or 7; p = 5 is special
with period 20.  For general m the period is at most 6m, with equality
exactly at m = 2 * 5^n.
"""

from dataclasses import dataclass
from enum import Enum
from math import isqrt
from typing import NamedTuple, Optional

import numpy as np

from .arith import GHParams, fib_mod, is_prime

__all__ = [
    "BRUTE_FORCE_MODULUS_CAP",
    "PrimeClass",
    "PeriodRecord",
    "BoundCheck",
    "ClassificationError",
    "pisano_period_bruteforce",
    "pisano_periods_range",
    "pisano_period_prime",
    "gh_period",
    "verify_period_bound",
    "expected_equality_moduli",
]

# Brute-force iteration is O(period) = O(6m); keep it desk-scale.
BRUTE_FORCE_MODULUS_CAP = 10**6


class PrimeClass(Enum):
    """Which divisor family the period of an odd prime falls into."""

    DIVISOR_OF_P_MINUS_1 = "p-1"
    DIVISOR_OF_2P_PLUS_2 = "2p+2"
    SPECIAL_FIVE = "5(p-1)"


class ClassificationError(ArithmeticError):
    """No divisor of the class bound is a period: a counterexample to the
    two-class structure.  Never observed; raised instead of guessing."""


@dataclass(frozen=True)
class PeriodRecord:
    """A modulus with its period, class, human-readable label and sign.

    ``klass`` is None for composite moduli, which have no class.
    ``ratio_label`` renders the period as an exact expression in p, e.g.
    "p-1", "2p+2", "(p-1)/2", "(2p+2)/3", or "5(p-1)" for p = 5.
    """

    modulus: int
    period: int
    klass: Optional[PrimeClass]
    ratio_label: str

    @property
    def bit(self) -> int:
        """+1 for the p-1 family (including p = 5), -1 for the 2p+2 family."""
        if self.klass is None:
            raise ValueError(f"modulus {self.modulus} carries no class")
        if self.klass is PrimeClass.DIVISOR_OF_2P_PLUS_2:
            return -1
        return 1


class BoundCheck(NamedTuple):
    modulus: int
    period: int
    bound_met: bool  # period <= 6m
    equality: bool  # period == 6m


def _check_brute_modulus(m: int) -> None:
    if not 2 <= m <= BRUTE_FORCE_MODULUS_CAP:
        raise ValueError(
            f"modulus must be in [2, {BRUTE_FORCE_MODULUS_CAP}], got {m}"
        )


def pisano_period_bruteforce(m: int) -> int:
    """Smallest N >= 1 with F(N) = 0 and F(N+1) = 1 (mod m), by iteration.

    This is the definitional oracle: it walks the residue recurrence until
    the state pair (0, 1) recurs.
    """
    _check_brute_modulus(m)
    a, b = 0, 1
    for k in range(1, 6 * m + 1):
        a, b = b, (a + b) % m
        if a == 0 and b == 1:
            return k
    raise AssertionError(f"period of {m} exceeds 6m")  # impossible


def pisano_periods_range(m_max: int, m_min: int = 2) -> np.ndarray:
    """Periods for every modulus in [m_min, m_max], batched.

    Same pair iteration as the scalar brute force, advanced for all moduli
    at once; finished moduli are compacted away as they recur.  Returns an
    int64 array aligned with range(m_min, m_max + 1).
    """
    _check_brute_modulus(m_min)
    _check_brute_modulus(m_max)
    if m_max < m_min:
        raise ValueError(f"empty modulus range [{m_min}, {m_max}]")
    mods = np.arange(m_min, m_max + 1, dtype=np.int64)
    periods = np.zeros(mods.size, dtype=np.int64)
    pos = np.arange(mods.size)
    a = np.zeros(mods.size, dtype=np.int64)
    b = np.ones(mods.size, dtype=np.int64)
    k = 0
    while pos.size:
        k += 1
        a, b = b, (a + b) % mods
        done = (a == 0) & (b == 1)
        if done.any():
            periods[pos[done]] = k
            live = ~done
            pos, mods, a, b = pos[live], mods[live], a[live], b[live]
        if k > 6 * m_max:
            raise AssertionError("period exceeds 6m")  # impossible
    return periods


def _divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def pisano_period_prime(p: int) -> PeriodRecord:
    """Period of an odd prime without full iteration.

    The period divides p-1 (last digit 1 or 9) or 2p+2 (last digit 3 or 7),
    so it is the smallest divisor d of that bound with F(d), F(d+1) = 0, 1.
    Divisors are tried ascending, which yields minimality for free: any pair
    recurrence index is a multiple of the true period.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        raise ValueError("2 is outside the two-class period structure")
    if p == 5:
        return PeriodRecord(5, 20, PrimeClass.SPECIAL_FIVE, "5(p-1)")
    if p % 10 in (1, 9):
        klass, bound, base = PrimeClass.DIVISOR_OF_P_MINUS_1, p - 1, "p-1"
    else:
        klass, bound, base = PrimeClass.DIVISOR_OF_2P_PLUS_2, 2 * p + 2, "2p+2"
    for d in _divisors(bound):
        if fib_mod(d, p) == (0, 1):
            ratio = bound // d
            label = base if ratio == 1 else f"({base})/{ratio}"
            return PeriodRecord(p, d, klass, label)
    raise ClassificationError(
        f"period of {p} divides neither p-1 nor 2p+2"
    )


def gh_period(params: GHParams, m: int) -> int:
    """Period of the (a, b) Gopala-Hemachandra sequence mod m.

    Iterates the state pair until the initial pair recurs.  Always divides
    the Fibonacci period of m (the step matrix to that power is the
    identity), but can be a proper divisor of it, e.g. seed (2, 1) mod 5 has
    period 4 while the Fibonacci period is 20.
    """
    _check_brute_modulus(m)
    a0, b0 = params[0] % m, params[1] % m
    if a0 == 0 and b0 == 0:
        raise ValueError("zero seed pair generates the degenerate zero sequence")
    a, b = a0, b0
    for k in range(1, 6 * m + 1):
        a, b = b, (a + b) % m
        if a == a0 and b == b0:
            return k
    raise AssertionError(f"GH period of {m} exceeds 6m")  # impossible


def verify_period_bound(m_max: int) -> list[BoundCheck]:
    """Check period <= 6m for every 2 <= m <= m_max.

    Returns one BoundCheck per modulus; ``equality`` marks period == 6m,
    which should hold exactly on expected_equality_moduli(m_max).
    """
    periods = pisano_periods_range(m_max)
    return [
        BoundCheck(m, int(n), int(n) <= 6 * m, int(n) == 6 * m)
        for m, n in zip(range(2, m_max + 1), periods)
    ]


def expected_equality_moduli(m_max: int) -> list[int]:
    """The moduli 2 * 5^n (n >= 1) up to m_max: where period == 6m holds."""
    out, v = [], 10
    while v <= m_max:
        out.append(v)
        v *= 5
    return out
