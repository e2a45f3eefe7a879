"""Spectral model: decaying weights, coefficient covariance, grid structure.

Conventions fixed for the whole package:

* indexing is 0-based; feature j in {0, ..., D-1} carries the weight
  t_j = (j+1)^(-1), so t_0 = 1 and t_{D-1} = 1/D;
* the decay exponent r enters only through even powers t_j^(2r);
* c_r = 1 / sum_j t_j^(2r) normalises the coefficient covariance
  K = c_r * diag(t^(2r)) to unit trace.

All types here are frozen and their arrays are marked read-only, so values can
be shared freely across threads.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, RegimeError

# Above this ambient dimension the per-residue aliased sums switch to Kahan
# compensation; below it plain vectorised summation is accurate enough.
COMPENSATED_SUM_MIN_D = 1 << 16


class Regime(enum.Enum):
    UNDER = "under"
    OVER_ALIGNED = "over_aligned"
    OVER_GENERAL = "over_general"


@dataclass(frozen=True)
class Spectrum:
    """Decay sequence t_j = (j+1)^(-1) with its covariance normaliser c_r."""

    D: int
    decay_r: float
    t: np.ndarray = field(repr=False)
    c_r: float

    def t_pow(self, u: float) -> np.ndarray:
        """Entrywise power t_j^u (returns a fresh writable array)."""
        if u == 0.0:
            return np.ones(self.D)
        return self.t ** u

    def tail_sum(self, u: float, start: int = 0, stop: int | None = None) -> float:
        """Exactly rounded sum of t_j^u over j in [start, stop)."""
        stop = self.D if stop is None else stop
        if not 0 <= start <= stop <= self.D:
            raise ConfigurationError(f"index window [{start}, {stop}) outside [0, {self.D})")
        return math.fsum(self.t_pow(u)[start:stop])


def build_spectrum(D: int, r: float) -> Spectrum:
    """Construct the D-term decay sequence and its normaliser for exponent r."""
    if D < 1:
        raise ConfigurationError(f"feature count D must be >= 1, got {D}")
    if r < 0:
        raise ConfigurationError(f"decay exponent r must be >= 0, got {r}")
    t = 1.0 / np.arange(1, D + 1, dtype=float)
    # Direct summation, smallest terms first; fsum compensates exactly.
    c_r = 1.0 / math.fsum((t ** (2.0 * r))[::-1])
    t.setflags(write=False)
    return Spectrum(D=D, decay_r=float(r), t=t, c_r=c_r)


def cr_bounds(D: int, r: float) -> tuple[float, float]:
    """Closed-form sandwich for c_r, valid for r > 1/2."""
    if D < 1:
        raise ConfigurationError(f"feature count D must be >= 1, got {D}")
    if r <= 0.5:
        raise RegimeError(f"c_r bounds require r > 1/2, got r={r}")
    lower = (2.0 * r - 1.0) / (2.0 * r - float(D) ** (-2.0 * r + 1.0))
    upper = (2.0 * r - 1.0) / (1.0 - float(D + 1) ** (-2.0 * r + 1.0))
    return lower, upper


@dataclass(frozen=True)
class GridConfig:
    """A (D, n, p) triple with its divisibility structure and regime tag.

    tau is present iff n divides D, l iff n divides p.  The boundary p = n is
    tagged OVER_ALIGNED (l = 1); operations that need p <= n validate against
    n and p directly, so both closed forms stay callable at the boundary.
    """

    D: int
    n: int
    p: int
    tau: int | None
    l: int | None
    regime: Regime


def classify_grid(D: int, n: int, p: int) -> GridConfig:
    """Tag a (D, n, p) configuration; deterministic in its inputs."""
    if not 1 <= n <= D:
        raise ConfigurationError(f"sample count n={n} outside [1, D={D}]")
    if not 1 <= p <= D:
        raise ConfigurationError(f"truncation p={p} outside [1, D={D}]")
    tau = D // n if D % n == 0 else None
    l = p // n if p % n == 0 else None
    if p < n:
        regime = Regime.UNDER
    elif l is not None:
        regime = Regime.OVER_ALIGNED
    else:
        regime = Regime.OVER_GENERAL
    return GridConfig(D=D, n=n, p=p, tau=tau, l=l, regime=regime)


@dataclass(frozen=True)
class CoefficientCovariance:
    """Diagonal coefficient covariance K = c_r * diag(t^(2r)), unit trace.

    q_weight records the weighting exponent used for estimation; it is
    deliberately distinct from the decay exponent of the spectrum.
    """

    spectrum: Spectrum
    q_weight: float = 0.0

    def __post_init__(self) -> None:
        if self.q_weight < 0:
            raise ConfigurationError(f"weighting exponent must be >= 0, got {self.q_weight}")

    def diagonal(self) -> np.ndarray:
        s = self.spectrum
        return s.c_r * s.t_pow(2.0 * s.decay_r)

    def trace(self) -> float:
        return self.spectrum.c_r * self.spectrum.tail_sum(2.0 * self.spectrum.decay_r)


def folded_sums(values: np.ndarray, n: int, compensated: bool = False) -> np.ndarray:
    """Per-residue sums s_m = sum of values[k] over k = m (mod n), m in [0, n).

    Accumulation runs in ascending block order; with ``compensated`` a Kahan
    loop replaces the vectorised sum (engaged for very large D).
    """
    if n < 1:
        raise ConfigurationError(f"fold length must be >= 1, got {n}")
    values = np.asarray(values)
    pad = (-len(values)) % n
    if pad:
        values = np.concatenate([values, np.zeros(pad, dtype=values.dtype)])
    block = values.reshape(-1, n)
    if not compensated:
        return block.sum(axis=0)
    total = np.zeros(n, dtype=block.dtype)
    carry = np.zeros(n, dtype=block.dtype)
    for row in block:
        y = row - carry
        t = total + y
        carry = (t - total) - y
        total = t
    return total
