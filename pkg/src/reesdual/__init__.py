"""Exact computation of Rees-algebra defining ideals over hypersurface
rings, by modified Jacobian dual iterations, with an independent
Groebner saturation oracle."""

from .fields import QQ, PrimeField, RationalField, field_from_name
from .groebner import (
    GroebnerBasis,
    GroebnerLimits,
    IdealGens,
    ResourceLimitExceeded,
    buchberger_criterion_holds,
    colon,
    colon_ideal,
    dimension,
    eliminate,
    groebner,
    height,
    ideal_equal,
    intersect,
    normal_form,
    saturate,
)
from .instances import (
    InstanceIdeal,
    InstanceModule,
    ideal_instance_from_strings,
    make_varset,
    module_instance_from_strings,
)
from .matrix import PolyMatrix
from .orders import TermOrder
from .parser import ParseError, parse_poly
from .poly import BiDegree, Poly, VarSet, ZERO_BIDEGREE
from .rees import (
    DefiningIdealResult,
    HypothesisViolation,
    IterationState,
    cramer_check,
    defining_ideal,
    diffop_iterations,
    jacobian_dual,
    matrix_iterations,
    minimality_holds,
    mjd_iterations,
    modified_jacobian_dual,
    partial_column,
    saturation_index_bound,
    special_fiber,
    subminor_ideal,
    sym_linear_forms,
)
from .hypotheses import (
    HypothesisReport,
    RetryBudgetExceeded,
    check_ideal_instance,
    check_module_instance,
    random_instance,
    random_module_instance,
)
from .bourbaki import (
    BourbakiReduction,
    CrossCheckError,
    bourbaki_reduce,
    module_defining_ideal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
