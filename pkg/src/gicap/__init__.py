"""Two-user Gaussian interference channel toolbox.

Computes achievable rate regions (rate-splitting schemes with fixed
Gaussian power splits), capacity outer bounds, geometric gap certificates
(one bit, factor two), and generalized-degrees-of-freedom
characterizations, and mechanically verifies the gap guarantees over
randomized parameter sweeps.
"""

from .bounds import (
    SymmetricBoundSet,
    kramer_bound,
    mixed_outer,
    new_sum_bound,
    one_sided_sum_capacity,
    pt2pt_outer,
    strong_capacity,
    symmetric_bounds,
    symmetric_capacity_strong,
    weak_outer,
)
from .channel import (
    ChannelParams,
    InterferenceClass,
    InterferenceTag,
    SymmetricRegime,
    alpha,
    classify,
    db_to_linear,
    from_physical,
    linear_to_db,
    symmetric_regime,
)
from .errors import (
    ClassMismatchError,
    ContainmentError,
    DomainError,
    GicapError,
    InvalidParameterError,
    InvalidSplitError,
    NotCoveredError,
    UnboundedRegionError,
)
from .gap import (
    GapReport,
    SweepRecord,
    SweepResult,
    asymptotic_tightness_check,
    audit_regions,
    delta_audit,
    kramer_gap,
    one_bit_sweep,
    sweep_summary,
    within_half_sweep,
    write_sweep_csv,
)
from .gdof import (
    BaselineScheme,
    FiniteSnrSandwich,
    GdofParams,
    GdofRegion,
    baseline_gdof,
    d_sym,
    finite_snr_convergence,
    first_order_expansion,
    mixed_gdof_region,
    one_sided_gdof_region,
    strong_gdof_region,
    symmetric_gdof_region,
    weak_gdof_region,
)
from .hk import (
    DifferentialRatePair,
    PowerSplit,
    costa_point,
    differential_rates,
    hk_region,
    recommended_split,
    regime1_gap,
    regime1_rate,
    regime2_rate,
    regime2_window,
    symmetric_hk_rate,
    treat_as_noise_region,
)
from .region import (
    RateConstraint,
    RateRegion,
    Vertex,
    contains,
    intersect,
    normalize,
    one_bit_certificate,
    region_to_jsonable,
    symmetric_rate,
    vertices,
    within_half_certificate,
)

__version__ = "0.1.0"
