"""Finite AG-groupoids, exact-rational fuzzy subsets and their (alpha, beta)-fuzzy ideals."""

from .groupoid import (
    IDEAL_KINDS,
    LAWS,
    Groupoid,
    GroupoidError,
    build_groupoid,
    check_law,
    crisp_profile,
    enumerate_crisp,
    find_left_identity,
    from_flat,
    is_intra_regular,
    is_regular,
    is_weakly_regular,
    regularity_profile,
    subset_product,
)
from .fuzzy import (
    FuzzyError,
    FuzzyPoint,
    FuzzySubset,
    KParam,
    characteristic,
    constant,
    conv_product,
    fuzzy,
    join,
    join_k,
    level_intervals,
    level_set,
    meet,
    meet_k,
    point_relation,
    product_k,
    support,
    truncate_k,
)
from .ideals import (
    KINDS,
    Verdict,
    check_classic,
    check_quantifier,
    check_threshold_k,
    cross_validate,
)
from .catalog import (
    canonical_form,
    catalog,
    classify_structure,
    enumerate_ag_groupoids,
    load_catalog,
    save_catalog,
)
from .theorems import (
    COARSE_GRID,
    DEFAULT_GRID,
    BudgetExceeded,
    CounterexampleReport,
    GradeGrid,
    HypothesisNotMet,
    THEOREM_IDS,
    enumerate_fuzzy,
    hypothesis_filter,
    sample_fuzzy,
    search_counterexample,
    verify_theorem,
)

__version__ = "0.1.0"
