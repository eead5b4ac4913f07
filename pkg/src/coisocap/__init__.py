"""Exact capacity minimizers, action-spectrum algebra, and certified
bound intervals for products of spheres, frame manifolds, and closed
symplectic factors."""

from .bounds import (
    BoundInterval,
    Citation,
    LagrangianComparison,
    capacity_bounds,
    citation,
    citation_ids,
    energy_bounds,
    lagrangian_comparison,
    squeeze_bounds,
    width_energy_bound,
)
from .errors import (
    CapExceededError,
    CoisocapError,
    ExprParseError,
    IntervalConflictError,
    OutOfRangeError,
)
from .expr import format_product, parse_area, parse_product
from .kfun import (
    Decomposition,
    ExtNat,
    NAT_INF,
    Pair,
    WitnessedValue,
    big_k,
    big_k_table,
    four_square,
    keq,
    keq_naive,
    kk,
    kk_naive,
    sqrt_bound_witness,
)
from .spectra import (
    Closed,
    CoisotropicAtom,
    ExtRat,
    ProductObject,
    RAT_INF,
    RatPi,
    Spectrum,
    Sphere,
    Stiefel,
    format_pi,
    minimal_action,
    product_spectrum,
    spectrum_of_atom,
    spectrum_sum,
    split_min_action,
)
from .verify import CheckResult, VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BoundInterval",
    "CapExceededError",
    "CheckResult",
    "Citation",
    "Closed",
    "CoisocapError",
    "CoisotropicAtom",
    "Decomposition",
    "ExprParseError",
    "ExtNat",
    "ExtRat",
    "IntervalConflictError",
    "LagrangianComparison",
    "NAT_INF",
    "OutOfRangeError",
    "Pair",
    "ProductObject",
    "RAT_INF",
    "RatPi",
    "Spectrum",
    "Sphere",
    "Stiefel",
    "VerifyReport",
    "WitnessedValue",
    "big_k",
    "big_k_table",
    "capacity_bounds",
    "citation",
    "citation_ids",
    "energy_bounds",
    "format_pi",
    "format_product",
    "four_square",
    "keq",
    "keq_naive",
    "kk",
    "kk_naive",
    "lagrangian_comparison",
    "minimal_action",
    "parse_area",
    "parse_product",
    "product_spectrum",
    "run_suite",
    "spectrum_of_atom",
    "spectrum_sum",
    "split_min_action",
    "sqrt_bound_witness",
    "squeeze_bounds",
    "width_energy_bound",
]
