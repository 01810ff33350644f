"""Exact arithmetic for factorial supersymmetric Schur polynomials.

Computes the polynomials by independent routes (tableau sums, convolutions,
determinants, alternating-sum ratios) over exact rationals and verifies the
identities relating them.  See the cli module for the command-line front
end and backend for the compiled/pure kernel selection.
"""

from .algebra import (
    Poly,
    TruncatedSeries,
    det_poly,
    exact_divide,
    laurent_expand_inverse_linear,
    poly_from_json_obj,
    poly_to_json_obj,
    poly_to_text,
    vandermonde,
    variable,
)
from .backend import BACKEND_NAME
from .combinatorics import (
    SkewShape,
    conjugate,
    contains,
    derived_shapes,
    enumerate_ssyt,
    enumerate_super,
    hook_partitions_up_to,
    hook_product,
    in_hook,
    normalize_partition,
    skew,
    xi_eta,
)
from .errors import (
    DegreeBoundExceeded,
    DivisionByZero,
    DuplicateVariable,
    InternalMismatch,
    NonSquare,
    NotDivisible,
    NotInHook,
    NotSupersymmetric,
    PreconditionViolated,
    SequenceNotMultiplicityFree,
    SuperschurError,
    WindowExceeded,
)
from .factorial import (
    e_factorial,
    factorial_schur_ratio,
    factorial_schur_tableau,
    genseries_check_classical,
    h_factorial,
    vanishing_classical,
)
from .sequences import ParamSequence, eval_point, falling_product, parse_sequence
from .shifted import (
    ShiftedContext,
    e_star,
    h_star,
    shifted_conv,
    shifted_schur,
    shifted_super_schur,
    vanishing_star,
)
from .supersym import (
    BasisExpansion,
    SuperContext,
    cancellation_check,
    classical_super_schur,
    dual_cauchy_check,
    dual_jacobi_trudi,
    e_super,
    expand_in_basis,
    factorization,
    genseries_check_super,
    h_super,
    highest_component,
    jacobi_trudi,
    sergeev_pragacz,
    specialize_y,
    super_schur_conv,
    super_schur_tableau,
    vanishing_eval,
)

__version__ = "0.1.0"
