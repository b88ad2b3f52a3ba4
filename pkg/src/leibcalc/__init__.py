"""Exact-arithmetic invariants of finite-dimensional Leibniz algebras.

Everything is computed over the rationals with exact arithmetic: brackets,
centers and centralizers relative to the Liezation functor, lower/upper
central and derived series, second Lie-relative homology via the Hopf
formula on truncated free nilpotent presentations, five- and six-term exact
sequences of extensions, the precise Lie-center with capability and
unicentrality verdicts, and homological nilpotency criteria.
"""

from .linalg import Echelon, Subspace, canonicalize, kernel, rat, vec
from .algebra import (
    AlgebraError,
    Hom,
    Ideal,
    LeibnizAlgebra,
    ann_ideal,
    hom,
    ideal,
    ideal_closure,
    identity_hom,
    is_lie,
    is_lie_perfect,
    liezation,
    quotient,
    validate,
)
from .invariants import (
    SeriesReport,
    absolute_derived_series,
    absolute_lower_central_series,
    center,
    is_lie_nilpotent,
    is_lie_solvable,
    is_nilpotent,
    is_solvable,
    lie_center,
    lie_centralizer,
    lie_commutator,
    lie_derived_series,
    lie_lower_central_series,
    lie_upper_central_series,
    relative_lower_central_series,
    right_center,
)
from .freeleib import (
    DegreeTooSmallError,
    DoesNotGenerateError,
    FreeNilpotentLeibniz,
    Presentation,
    free_nilpotent,
    present,
)
from .extensions import (
    ClassificationReport,
    Extension,
    classify,
    direct_sum,
    extension,
    pullback,
    subalgebra,
)
from .homology import (
    DEFAULT_MAX_DEGREE,
    CosetSpace,
    ExtensionHomology,
    HopfHomology,
    InstabilityError,
    SequenceReport,
    extension_homology,
    five_term,
    hopf_hl2,
    hopf_hl2_at_degree,
    induced_hl2_map,
    is_lie_stem_cover,
    six_term,
    stem_quotient_extension,
    theta_star,
)
from .centers import (
    PreciseCenterReport,
    is_unicentral,
    precise_center,
    smallest_capable_quotient,
)
from .nilcheck import (
    CriterionReport,
    check_theorem_6_2,
    vanishing_series_criterion,
)

__version__ = "1.0.0"

__all__ = [
    "AlgebraError",
    "ClassificationReport",
    "CosetSpace",
    "CriterionReport",
    "DEFAULT_MAX_DEGREE",
    "DegreeTooSmallError",
    "DoesNotGenerateError",
    "Echelon",
    "Extension",
    "ExtensionHomology",
    "FreeNilpotentLeibniz",
    "Hom",
    "HopfHomology",
    "Ideal",
    "InstabilityError",
    "LeibnizAlgebra",
    "PreciseCenterReport",
    "Presentation",
    "SequenceReport",
    "SeriesReport",
    "Subspace",
    "ann_ideal",
    "canonicalize",
    "absolute_derived_series",
    "absolute_lower_central_series",
    "center",
    "check_theorem_6_2",
    "classify",
    "direct_sum",
    "extension",
    "extension_homology",
    "five_term",
    "free_nilpotent",
    "hom",
    "hopf_hl2",
    "hopf_hl2_at_degree",
    "ideal",
    "ideal_closure",
    "identity_hom",
    "induced_hl2_map",
    "is_lie",
    "is_lie_nilpotent",
    "is_lie_perfect",
    "is_lie_solvable",
    "is_lie_stem_cover",
    "is_nilpotent",
    "is_solvable",
    "is_unicentral",
    "kernel",
    "lie_center",
    "lie_centralizer",
    "lie_commutator",
    "lie_derived_series",
    "lie_lower_central_series",
    "lie_upper_central_series",
    "liezation",
    "precise_center",
    "present",
    "pullback",
    "quotient",
    "rat",
    "relative_lower_central_series",
    "right_center",
    "six_term",
    "smallest_capable_quotient",
    "stem_quotient_extension",
    "subalgebra",
    "theta_star",
    "validate",
    "vanishing_series_criterion",
    "vec",
]
