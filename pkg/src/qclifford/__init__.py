"""Exact computer algebra for q-deformed Clifford analysis.

Everything is computed over the field Q(q) of rational functions in the
deformation parameter q, so all operator identities hold exactly and the
classical case is recovered by evaluating at q = 1.
"""

from .ck import ck_extend, extended_dirac, restrict_x0
from .clifford import Multivector, blade_product, conjugate, geometric_product, scalar_part
from .cpoly import (
    CliffordPoly,
    evaluate_poly,
    homogeneous_part,
    norm_squared,
    q_shift,
    vector_variable,
)
from .errors import (
    AlgebraMismatch,
    DivisionByZero,
    InvalidArgument,
    InvalidParameter,
    InvalidVariable,
    NotHomogeneous,
    ParseError,
    PoleAtEvaluationPoint,
    QCliffordError,
    SingularSystem,
    UsesExtendedAlgebra,
)
from .fischer import (
    FischerSplit,
    FischerTower,
    fischer_adjoint_check,
    fischer_full,
    fischer_inner,
    fischer_inner_operator,
    fischer_step,
    monogenic_dimension,
)
from .jackson import (
    UniPoly,
    jackson_derivative,
    q_exp,
    q_integral,
    q_integral_series_oracle,
)
from .parser import parse, lower, parse_poly, parse_unipoly
from .qfield import ONE, Q, ZERO, QPoly, QScalar, q_binomial, q_bracket, q_factorial
from .qops import (
    RELATION_NAMES,
    check_relation,
    is_monogenic,
    q_dirac,
    q_euler,
    q_gamma,
    q_laplace,
    q_partial,
)

__version__ = "0.1.0"
