"""Exact Chern-character calculus on principally polarized abelian varieties."""

from .chern import (
    ChernCharacter,
    TotalChernClass,
    character_to_chern,
    chern_to_character,
    euler_characteristic,
    exp_theta,
    is_divided_power_profile,
    line_bundle_character,
)
from .cohring import CohClass, PpavContext, cup, integrate, linear_combine, poincare_dual
from .criteria import (
    PicardCase,
    check_jacobian_criterion,
    check_picard_necessary,
    classify_picard_case,
    matsusaka_ran_number,
    minimal_class,
    transform_exact_sequence,
)
from .errors import (
    ContextMismatchError,
    DegreeError,
    InputError,
    InvariantViolationError,
    ThetaCalcError,
    UndeclaredWITError,
)
from .fourier_mukai import (
    SheafInvariant,
    Side,
    check_wit_rules,
    double_transform_check,
    mukai_transform,
)
from .grr import CurveLineBundleSpec, abel_pushforward, curve_chi, serre_dual_degree
from .report import CriterionReport
from .verification import verify_paper

__version__ = "0.1.0"
