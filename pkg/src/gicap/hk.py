"""Han-Kobayashi achievable regions for fixed Gaussian power splits.

Each transmitter superposes a private codeword (decoded only by its own
receiver, treated as noise by the other) and a common codeword (decoded
by both receivers).  A scheme is parameterized by the interference level
its private codeword creates at the non-intended receiver:

    inr_p2 : private interference of user 1 at receiver 2,
    inr_p1 : private interference of user 2 at receiver 1,

with 0 <= inr_p2 <= INR2 and 0 <= inr_p1 <= INR1.  No time sharing and
Gaussian codebooks throughout.

The seven-constraint region is evaluated by one uniform rule: every
mutual-information term becomes log2(1 + decoded_power / noise_floor)
where the noise floor at each receiver is 1 plus the other user's private
interference.  Writing

    S1p = SNR1 * inr_p2 / INR2   (private SNR of user 1; SNR1 if INR2 = 0)
    S2p = SNR2 * inr_p1 / INR1   (private SNR of user 2; SNR2 if INR1 = 0)
    n1  = 1 + inr_p1,  n2 = 1 + inr_p2,

the region is

    R1        <= log(1 + SNR1/n1)
    R2        <= log(1 + SNR2/n2)
    R1 + R2   <= log((1+SNR2+INR2)/n2) + log(1 + S1p/n1)
    R1 + R2   <= log((1+SNR1+INR1)/n1) + log(1 + S2p/n2)
    R1 + R2   <= log(1 + (S1p+INR1-inr_p1)/n1) + log(1 + (S2p+INR2-inr_p2)/n2)
    2R1 + R2  <= log((1+SNR1+INR1)/n1) + log(1 + S1p/n1)
                                       + log(1 + (S2p+INR2-inr_p2)/n2)
    R1 + 2R2  <= log((1+SNR2+INR2)/n2) + log(1 + S2p/n2)
                                       + log(1 + (S1p+INR1-inr_p1)/n1)

The constraint order above is part of the contract: gap audits pair the
three sum constraints (and the two weighted constraints) with the outer
bound families positionally.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .channel import ChannelParams, InterferenceTag, classify
from .errors import DomainError, InvalidSplitError
from .region import RateConstraint, RateRegion, Vertex

__all__ = [
    "DifferentialRatePair",
    "PowerSplit",
    "costa_point",
    "differential_rates",
    "hk_region",
    "recommended_split",
    "regime1_gap",
    "regime1_rate",
    "regime2_rate",
    "regime2_window",
    "symmetric_hk_rate",
    "treat_as_noise_region",
]

_LOG2 = math.log2


@dataclass(frozen=True)
class PowerSplit:
    """Private-message interference levels (inr_p2, inr_p1), linear."""

    inr_p2: float
    inr_p1: float

    def __post_init__(self) -> None:
        for name in ("inr_p2", "inr_p1"):
            v = getattr(self, name)
            if not math.isfinite(v) or v < 0.0:
                raise InvalidSplitError(f"{name} must be finite and >= 0, got {v!r}")


class DifferentialRatePair(NamedTuple):
    """Marginal rate densities (pure ratios, no log base) at one power level."""

    r1: float
    r2: float


def _validate_split(params: ChannelParams, split: PowerSplit) -> None:
    if split.inr_p2 > params.inr2:
        raise InvalidSplitError(
            f"inr_p2={split.inr_p2} exceeds inr2={params.inr2}"
        )
    if split.inr_p1 > params.inr1:
        raise InvalidSplitError(
            f"inr_p1={split.inr_p1} exceeds inr1={params.inr1}"
        )


def hk_region(params: ChannelParams, split: PowerSplit) -> RateRegion:
    """Seven-constraint achievable region for a fixed power split.

    When a cross link is absent (INR_i = 0) the corresponding split value
    must be 0 and that user's message is all-private at full power: the
    split is unobservable at the other receiver.
    """
    _validate_split(params, split)
    s1, s2 = params.snr1, params.snr2
    i1, i2 = params.inr1, params.inr2
    p2, p1 = split.inr_p2, split.inr_p1  # user-1 and user-2 private levels

    s1p = s1 if i2 == 0.0 else s1 * p2 / i2
    s2p = s2 if i1 == 0.0 else s2 * p1 / i1
    n1 = 1.0 + p1
    n2 = 1.0 + p2

    r1_only = _LOG2(1.0 + s1 / n1)
    r2_only = _LOG2(1.0 + s2 / n2)
    sum_a = _LOG2((1.0 + s2 + i2) / n2) + _LOG2(1.0 + s1p / n1)
    sum_b = _LOG2((1.0 + s1 + i1) / n1) + _LOG2(1.0 + s2p / n2)
    sum_c = _LOG2(1.0 + (s1p + i1 - p1) / n1) + _LOG2(1.0 + (s2p + i2 - p2) / n2)
    two_r1 = (
        _LOG2((1.0 + s1 + i1) / n1)
        + _LOG2(1.0 + s1p / n1)
        + _LOG2(1.0 + (s2p + i2 - p2) / n2)
    )
    two_r2 = (
        _LOG2((1.0 + s2 + i2) / n2)
        + _LOG2(1.0 + s2p / n2)
        + _LOG2(1.0 + (s1p + i1 - p1) / n1)
    )
    return RateRegion(
        [
            RateConstraint(1.0, 0.0, r1_only),
            RateConstraint(0.0, 1.0, r2_only),
            RateConstraint(1.0, 1.0, sum_a),
            RateConstraint(1.0, 1.0, sum_b),
            RateConstraint(1.0, 1.0, sum_c),
            RateConstraint(2.0, 1.0, two_r1),
            RateConstraint(1.0, 2.0, two_r2),
        ]
    )


def recommended_split(params: ChannelParams) -> PowerSplit:
    """The private level that lands within one bit of capacity per class.

    Weak channels put each private codeword at the other receiver's noise
    floor (capped by the cross ratio itself); mixed channels make the
    strongly-received user all common; strong channels make everything
    common.
    """
    tag = classify(params).tag
    if tag is InterferenceTag.WEAK:
        return PowerSplit(min(1.0, params.inr2), min(1.0, params.inr1))
    if tag is InterferenceTag.MIXED_STRONG_AT_1:
        return PowerSplit(min(1.0, params.inr2), 0.0)
    if tag is InterferenceTag.MIXED_STRONG_AT_2:
        return PowerSplit(0.0, min(1.0, params.inr1))
    return PowerSplit(0.0, 0.0)


def symmetric_hk_rate(snr: float, inr: float) -> float:
    """Symmetric rate of the noise-level split on a symmetric channel.

    For INR >= 1 this is

        min{ 1/2 log(1+SNR+INR) + 1/2 log(2+SNR/INR) - 1,
             log(1+INR+SNR/INR) - 1 },

    the first term active on B1 and the second on B2.  For INR < 1 the
    private level is capped at INR and everything is treated as noise:
    log(1 + SNR/(1+INR)).
    """
    if not (snr > 0.0) or inr < 0.0:
        raise DomainError(f"symmetric_hk_rate needs snr > 0, inr >= 0, got {snr!r}, {inr!r}")
    if inr < 1.0:
        return _LOG2(1.0 + snr / (1.0 + inr))
    first = 0.5 * _LOG2(1.0 + snr + inr) + 0.5 * _LOG2(2.0 + snr / inr) - 1.0
    second = _LOG2(1.0 + inr + snr / inr) - 1.0
    return min(first, second)


def treat_as_noise_region(params: ChannelParams) -> RateRegion:
    """Box achieved by decoding nothing of the interference."""
    return RateRegion(
        [
            RateConstraint(1.0, 0.0, _LOG2(1.0 + params.snr1 / (1.0 + params.inr1))),
            RateConstraint(0.0, 1.0, _LOG2(1.0 + params.snr2 / (1.0 + params.inr2))),
        ]
    )


def costa_point(params: ChannelParams) -> Vertex:
    """Corner point where receiver 2 decodes user 1's (all-common) message first.

    Achieved by making user 1 all common and user 2 all private, i.e. the
    split (inr_p2, inr_p1) = (0, INR1), whenever the cross link at
    receiver 2 is the bottleneck for the common rate.
    """
    return Vertex(
        _LOG2(1.0 + params.inr2 / (1.0 + params.snr2)),
        _LOG2(1.0 + params.snr2),
    )


def regime1_rate(snr: float, inr: float) -> float:
    """Symmetric rate of pure treat-as-noise (all private, full power)."""
    if not (snr > 0.0) or inr < 0.0:
        raise DomainError(f"regime1_rate needs snr > 0, inr >= 0, got {snr!r}, {inr!r}")
    return _LOG2(1.0 + snr / (1.0 + inr))


def regime1_gap(snr: float, inr: float) -> float:
    """Exact gap between the interference-limited sum bound and regime1_rate.

    Equals log2(1 + INR(1+INR)/(1+INR+SNR)); vanishes as SNR grows with
    INR below sqrt(SNR), certifying that treating interference as noise
    is asymptotically optimal for very weak interference.
    """
    if not (snr > 0.0) or inr < 0.0:
        raise DomainError(f"regime1_gap needs snr > 0, inr >= 0, got {snr!r}, {inr!r}")
    return _LOG2(1.0 + inr * (1.0 + inr) / (1.0 + inr + snr))


def regime2_window(alpha_value: float) -> tuple[float, float]:
    """Admissible (open) window for the regime-2 power-split exponent gamma."""
    if not (0.5 < alpha_value < 2.0 / 3.0):
        raise DomainError(
            f"regime-2 window needs 1/2 < alpha < 2/3, got alpha={alpha_value!r}"
        )
    return ((2.0 * alpha_value - 1.0) / (1.0 - alpha_value), 1.0)


def regime2_rate(snr: float, inr: float, gamma: float) -> float:
    """Symmetric rate of the vanishing-private-level scheme in regime 2.

    Uses INR_p = (INR/SNR)**(1-gamma), which drives the received private
    interference to zero as SNR grows.  Requires 1/2 < alpha < 2/3 and
    gamma strictly inside the window (2a-1)/(1-a) < gamma < 1.
    """
    if not (snr > 1.0) or not (inr > 0.0):
        raise DomainError(f"regime2_rate needs snr > 1, inr > 0, got {snr!r}, {inr!r}")
    a = math.log(inr) / math.log(snr)
    lo, hi = regime2_window(a)
    if not (lo < gamma < hi):
        raise DomainError(
            f"gamma={gamma!r} outside the admissible window ({lo}, {hi}) at alpha={a}"
        )
    inr_p = (inr / snr) ** (1.0 - gamma)
    private = _LOG2(1.0 + snr * inr_p / (inr * (1.0 + inr_p)))
    denom = inr + (snr + inr) * inr_p
    common = min(
        0.5 * _LOG2(1.0 + (snr + inr) * (inr - inr_p) / denom),
        _LOG2(1.0 + inr * (inr - inr_p) / denom),
    )
    return private + common


def differential_rates(z: float, snr1: float, inr2: float) -> DifferentialRatePair:
    """Marginal rate densities of a sub-message at normalized power level z.

    r1(z) = SNR1/(1+SNR1*z) is the density on the direct link, r2(z) =
    INR2/(1+INR2*z) on the cross link.  Returned as raw ratios; scale by
    1/ln 2 for bit densities.
    """
    if z < 0.0:
        raise DomainError(f"power level z must be >= 0, got {z!r}")
    return DifferentialRatePair(
        r1=snr1 / (1.0 + snr1 * z),
        r2=inr2 / (1.0 + inr2 * z),
    )
