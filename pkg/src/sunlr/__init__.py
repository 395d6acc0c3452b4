"""Exact generalized Littlewood-Richardson multiplicities.

Four independent evaluation routes for the cyclic chain multiplicity (LR
chain sums, glued hive counting, quiver weight-space dimensions, and exact
LP positivity), plus the Horn-type cone machinery: inequality generation,
membership, saturation and factorization checks, and the golden facet data
for the n = 2, m = 6 cone.
"""

from .errors import (
    BudgetExceededError,
    InvalidInputError,
    OracleDisagreementError,
    SunlrError,
    UnsupportedShapeError,
    WallPreconditionError,
)
from .generalized import (
    ChainProblem,
    LevelOneSpec,
    f1,
    f2,
    f_sun,
    level1_f,
    level1_lambdas,
    stretched_table,
)
from .hive import (
    LinearSystem,
    SunHive,
    TriangularHive,
    build_linear_system,
    count_sun_hives,
    lp_feasible,
    positivity,
    validate_sun_hive,
)
from .horn import (
    HornInequality,
    SubsetTuple,
    facets_2_6_golden,
    factorization_check,
    generate_T,
    in_cone,
    saturation_report,
    underline_lambda,
    verify_facets_2_6,
)
from .lr import LrTriple, lr_coefficient, lr_hive_count, rectangular_lr
from .partitions import conjugate, contains, lambda_of_set, stretch
from .quiver import (
    SunQuiver,
    beta_from_subsets,
    build_sun_quiver,
    dim_si_sun,
    euler_form,
    is_fundamental_schur,
    jump_sets,
    sigma_apply,
    sigma_from_subsets,
    weight_sigma1,
)

__version__ = "0.1.0"
