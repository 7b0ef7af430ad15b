"""Exact decision procedures for differential-algebraic and Novikov dependence."""

from .core import (
    AlgebraSignature,
    DerivOp,
    DiffPoly,
    DiffVar,
    apply_theta,
    degrees,
    poly_arith,
    rho_components,
    substitute,
)
from .depsolve import (
    DependenceVerdict,
    diff_alg_dependent,
    left_dependent,
    prolongation_oracle,
    prolongation_rank,
    verify_certificate,
)
from .errors import (
    DegreeError,
    DiffDepError,
    InvariantError,
    ParseError,
    ResourceLimitError,
    SignatureError,
)
from .fox import fox_gradient, jacobian
from .novikov import (
    NovikovElement,
    embed,
    is_in_N0,
    nov_basis,
    nov_product,
    novikov_dependent,
    witness_transform,
)
from .ore import OrePoly, ore_apply, ore_common_multiple, ore_mul
from .parsing import parse_expr
from .ratfunc import RatFunc, ratfunc_arith, ratfunc_derive

__version__ = "0.1.0"

__all__ = [
    "AlgebraSignature",
    "DegreeError",
    "DependenceVerdict",
    "DerivOp",
    "DiffDepError",
    "DiffPoly",
    "DiffVar",
    "InvariantError",
    "NovikovElement",
    "OrePoly",
    "ParseError",
    "RatFunc",
    "ResourceLimitError",
    "SignatureError",
    "apply_theta",
    "degrees",
    "diff_alg_dependent",
    "embed",
    "fox_gradient",
    "is_in_N0",
    "jacobian",
    "left_dependent",
    "nov_basis",
    "nov_product",
    "novikov_dependent",
    "ore_apply",
    "ore_common_multiple",
    "ore_mul",
    "parse_expr",
    "poly_arith",
    "prolongation_oracle",
    "prolongation_rank",
    "ratfunc_arith",
    "ratfunc_derive",
    "rho_components",
    "substitute",
    "verify_certificate",
    "witness_transform",
]
