"""Channel parameterization, unit conversion, and regime classification.

A two-user Gaussian interference channel is fully described by four
dimensionless power ratios: the direct-link signal-to-noise ratios SNR1,
SNR2 and the cross-link interference-to-noise ratios INR1 (seen at
receiver 1) and INR2 (seen at receiver 2).  All ratios are linear, all
rates downstream are base-2 logs (bits per complex symbol, no 1/2 factor).

Classification conventions:

* weak      : INR1 < SNR2 and INR2 < SNR1        (both strict)
* strong    : INR1 >= SNR2 and INR2 >= SNR1
* mixed     : exactly one cross link is strong; ties go to the >= side.
* very strong (symmetric channels only): INR >= SNR^2 + SNR.

For symmetric channels the interference level alpha = log INR / log SNR
splits the parameter space into five qualitative regimes.  Boundary
values of alpha are assigned to the larger regime index, except that the
regime-4/5 boundary uses the exact very-strong condition above (the
alpha >= 2 form is only its high-SNR approximation).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, InvalidParameterError

__all__ = [
    "ChannelParams",
    "InterferenceClass",
    "InterferenceTag",
    "SymmetricRegime",
    "alpha",
    "classify",
    "db_to_linear",
    "from_physical",
    "linear_to_db",
    "symmetric_regime",
]


def db_to_linear(db: float) -> float:
    """Convert a dB value to a linear power ratio: 10**(db/10)."""
    return 10.0 ** (db / 10.0)


def linear_to_db(x: float) -> float:
    """Convert a linear power ratio to dB: 10*log10(x)."""
    if x <= 0.0:
        raise DomainError(f"cannot express nonpositive ratio {x} in dB")
    return 10.0 * math.log10(x)


@dataclass(frozen=True)
class ChannelParams:
    """The four linear power ratios defining a channel instance."""

    snr1: float
    snr2: float
    inr1: float
    inr2: float

    def __post_init__(self) -> None:
        for name in ("snr1", "snr2", "inr1", "inr2"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise InvalidParameterError(
                    f"{name} must be finite and nonnegative, got {v!r}"
                )

    @property
    def is_symmetric(self) -> bool:
        return self.snr1 == self.snr2 and self.inr1 == self.inr2

    def swapped(self) -> "ChannelParams":
        """The same channel with the user indices exchanged."""
        return ChannelParams(self.snr2, self.snr1, self.inr2, self.inr1)


def from_physical(
    g11: float,
    g12: float,
    g21: float,
    g22: float,
    p1: float,
    p2: float,
    n0: float,
) -> ChannelParams:
    """Build :class:`ChannelParams` from power gains, powers, and noise.

    ``gij`` is the power gain from transmitter i to receiver j, ``pi`` the
    transmit power of user i, and ``n0`` the per-receiver noise power.
    """
    vals = dict(g11=g11, g12=g12, g21=g21, g22=g22, p1=p1, p2=p2, n0=n0)
    for name, v in vals.items():
        if not math.isfinite(v):
            raise InvalidParameterError(f"{name} must be finite, got {v!r}")
    if n0 <= 0.0:
        raise InvalidParameterError(f"noise power must be positive, got {n0!r}")
    for name in ("g11", "g12", "g21", "g22", "p1", "p2"):
        if vals[name] < 0.0:
            raise InvalidParameterError(f"{name} must be nonnegative, got {vals[name]!r}")
    return ChannelParams(
        snr1=g11 * p1 / n0,
        snr2=g22 * p2 / n0,
        inr1=g21 * p2 / n0,
        inr2=g12 * p1 / n0,
    )


class InterferenceTag(str, Enum):
    WEAK = "weak"
    MIXED_STRONG_AT_1 = "mixed_strong_at_1"
    MIXED_STRONG_AT_2 = "mixed_strong_at_2"
    STRONG = "strong"


@dataclass(frozen=True)
class InterferenceClass:
    """Interference class tag plus the very-strong flag.

    ``very_strong`` is only defined for symmetric channels; asymmetric
    channels report ``None`` (not applicable).
    """

    tag: InterferenceTag
    very_strong: bool | None


def classify(params: ChannelParams) -> InterferenceClass:
    """Classify a channel as weak / mixed / strong.

    Weak requires both strict inequalities INR1 < SNR2 and INR2 < SNR1;
    equality on either cross link goes to the mixed or strong tag.
    """
    strong_at_1 = params.inr1 >= params.snr2
    strong_at_2 = params.inr2 >= params.snr1
    if strong_at_1 and strong_at_2:
        tag = InterferenceTag.STRONG
    elif strong_at_1:
        tag = InterferenceTag.MIXED_STRONG_AT_1
    elif strong_at_2:
        tag = InterferenceTag.MIXED_STRONG_AT_2
    else:
        tag = InterferenceTag.WEAK
    very_strong: bool | None = None
    if params.is_symmetric:
        snr, inr = params.snr1, params.inr1
        very_strong = inr >= snr * snr + snr
    return InterferenceClass(tag=tag, very_strong=very_strong)


def alpha(snr: float, inr: float) -> float:
    """Interference level: log INR / log SNR (base-independent)."""
    if not (snr > 1.0):
        raise DomainError(f"alpha needs snr > 1, got snr={snr!r}")
    if not (inr > 0.0):
        raise DomainError(f"alpha needs inr > 0, got inr={inr!r}")
    return math.log(inr) / math.log(snr)


@dataclass(frozen=True)
class SymmetricRegime:
    """Symmetric-channel regime index (1..5) and active common-rate set.

    ``bset`` is "B1" or "B2" when INR >= 1 and ``None`` otherwise (the
    B-set partition is only defined for interference at or above the
    noise floor).
    """

    regime: int
    bset: str | None


def symmetric_regime(snr: float, inr: float) -> SymmetricRegime:
    """Locate a symmetric channel among the five capacity regimes.

    The regime thresholds compare log INR against (1/2, 2/3, 1) * log SNR;
    the comparisons are done in the linear domain (inr^2 vs snr, inr^3 vs
    snr^2, inr vs snr) so threshold cases are decided by exact arithmetic
    rather than rounded logarithms.  Regime 5 uses the exact very-strong
    condition INR >= SNR^2 + SNR.
    """
    if not (snr > 1.0):
        raise DomainError(f"symmetric_regime needs snr > 1, got snr={snr!r}")
    if inr < 0.0 or not math.isfinite(inr) or not math.isfinite(snr):
        raise DomainError(f"symmetric_regime needs finite inr >= 0, got inr={inr!r}")

    if inr >= snr * snr + snr:
        regime = 5
    elif inr >= snr:
        regime = 4
    elif inr ** 3 >= snr * snr:
        regime = 3
    elif inr * inr >= snr:
        regime = 2
    else:
        regime = 1

    bset: str | None = None
    if inr >= 1.0:
        # B1 uses strict <, B2 the weak reverse inequality.
        bset = "B1" if snr * (snr + inr) < inr * inr * (inr + 1.0) else "B2"
    return SymmetricRegime(regime=regime, bset=bset)
