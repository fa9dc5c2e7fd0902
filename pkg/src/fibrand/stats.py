"""Autocorrelation and the derived randomness measure for +1/-1 sequences.

C(k) = (1/n) * sum_j B(j) B(j+k), with the out-of-range index handled by one
of two conventions:

* CIRCULAR: indices wrap mod n; the sum always has n terms.
* LINEAR_UNBIASED: the sum stops at j = n-1-k and is divided by n-k.

The lag-k sums are accumulated in exact integer arithmetic (the values are
+1/-1) and divided once, so each C(k) is within one ulp of the true
rational value.

R(x) = 1 - mean(|C(k)|, k = 1..n-1): 0 for a constant sequence, approaching
1 for an ideal random one.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

__all__ = [
    "Convention",
    "AutocorrProfile",
    "autocorrelation",
    "randomness_measure",
    "profile_csv",
]


class Convention(Enum):
    CIRCULAR = "circular"
    LINEAR_UNBIASED = "linear-unbiased"


@dataclass(frozen=True)
class AutocorrProfile:
    """C(k) for k = 0..n-1 under a named boundary convention."""

    values: np.ndarray
    convention: Convention
    n: int


def _as_pm1_array(seq) -> np.ndarray:
    vals = np.asarray(getattr(seq, "values", seq), dtype=np.int64)
    if vals.ndim != 1 or vals.size < 2:
        raise ValueError("need a one-dimensional sequence of length >= 2")
    if not np.all(np.abs(vals) == 1):
        raise ValueError("sequence values must be +1 or -1")
    return vals


def autocorrelation(seq, convention: Convention = Convention.CIRCULAR) -> AutocorrProfile:
    """Normalized autocorrelation of a +1/-1 sequence at every lag.

    Accepts a BinarySequence or any sequence of +1/-1 values.
    """
    vals = _as_pm1_array(seq)
    n = vals.size
    sums = np.empty(n, dtype=np.int64)
    if convention is Convention.CIRCULAR:
        doubled = np.concatenate([vals, vals])
        for k in range(n):
            sums[k] = vals @ doubled[k : k + n]
        c = sums / n
    elif convention is Convention.LINEAR_UNBIASED:
        for k in range(n):
            sums[k] = vals[: n - k] @ vals[k:]
        c = sums / (n - np.arange(n))
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return AutocorrProfile(c, convention, n)


def randomness_measure(profile: AutocorrProfile) -> float:
    """1 minus the mean absolute off-peak autocorrelation, in [0, 1]."""
    n = profile.n
    return float(1.0 - np.abs(profile.values[1:]).sum() / (n - 1))


def profile_csv(profile: AutocorrProfile) -> str:
    """CSV rows "k,C(k)" with values at 17 significant digits."""
    lines = ["k,C(k)"]
    lines.extend(f"{k},{v:.17g}" for k, v in enumerate(profile.values))
    return "\n".join(lines)
