"""Degree bounds and minimal generators for homogeneous dimension-2 toric ideals.

The ideal is the kernel of z_j -> s*t^(a_j) for integers a_1 < ... < a_n.
Minimal generators live only in bidegrees (q, c) where the simplicial
complex spanned by the supports of size-q, sum-c multisets over the a_j is
disconnected, and never above degree r + s (the two largest gaps, after
dividing out their gcd).
"""

from .complex import (
    ComponentStructure,
    PiFamily,
    components,
    enumerate_pi,
    feasible_c_range,
    is_connected,
    sweep_component_counts,
)
from .errors import InvariantViolation, ToricError, ValidationError
from .ideal import (
    Binomial,
    GeneratorEntry,
    GeneratorReport,
    RankResult,
    VerificationSummary,
    degree_bound,
    generator_bidegrees,
    integer_rank,
    rank_oracle,
    render_binomial,
    verify_main_theorem,
)
from .multisets import Bidegree, Multiset, add, bidegree, intersects, m, m_tilde, subtract, support
from .values import GapProfile, ValueSet, gap_profile, new_value_set, next_above, next_below, normalize, reflect
from .walks import (
    ExpansionTrace,
    MeetingWalk,
    WalkCertificate,
    connect,
    criss_cross,
    expansion_step,
    multiple_expansion,
    split_for_size_lemma,
    verify_certificate,
)

__version__ = "0.1.0"
