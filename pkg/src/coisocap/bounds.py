"""Provenance-tagged bound intervals built from a fixed inequality registry.

Every emitted endpoint is backed by citations into ``CITATIONS``, a frozen
registry of the certified inequalities this engine is allowed to combine.
The engine never invents a bound: when the hypotheses of the registered
sharpness arguments fail, the corresponding endpoint degrades to the
trivial bound (lower 0 / upper infinity) rather than to a guess.

Intervals are sanity-checked on construction; a crossed interval means two
registered inequalities were combined inconsistently and raises
``IntervalConflictError`` naming both provenance chains.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import IntervalConflictError, OutOfRangeError
from .kfun import keq, kk, Rational, _require_int, _require_rational
from .spectra import (
    Closed,
    ExtRat,
    ProductObject,
    RAT_INF,
    Sphere,
    Stiefel,
    minimal_action,
    split_min_action,
)


@dataclass(frozen=True)
class Citation:
    """A stable registry key plus the inequality it stands for."""

    id: str
    statement: str


_REGISTRY: dict[str, str] = {
    "cor:e-A-Cross": "the displacement energy of a subset of a bounded ambient"
    " manifold is at least its split minimal coisotropic action",
    "eq:A-min": "for a product of spheres and closed factors, the split minimal"
    " action is at least the least of the sphere areas and closed minimal"
    " actions",
    "rem:e-M-M'": "displacement energy does not increase under stabilization by"
    " a closed factor: e(X x M', M x M') <= e(X, M)",
    "rem:e-Z-2n-a": "a cylinder of area a displaces in R^(2n) with energy at"
    " most a",
    "eq:A-coiso-d-B": "the dimension-d regular coisotropic capacity of the unit"
    " ball is at least pi divided by the exact decomposition cost at (n, d)",
    "eq:A-coiso-d-Z": "the dimension-d regular coisotropic capacity of the unit"
    " cylinder is at most pi",
    "mono:B-in-Z": "capacity monotonicity applied to the inclusion of the unit"
    " ball in the unit cylinder",
    "thm:emb-d-B": "the dimension-d squeezing constant of the unit ball is at"
    " least pi divided by the relaxed decomposition cost at (n, d)",
    "def:emb-d-B": "the dimension-d squeezing constant of the unit ball is at"
    " most pi, directly from its definition",
    "cor:e-w": "the displacement energy of a stabilized open set is at least"
    " its Gromov width",
    "eq:c-L": "the Lagrangian capacity of the unit ball equals pi / n",
}


def citation(cid: str) -> Citation:
    """Look up a registry entry; unknown ids are a programming error."""
    return Citation(cid, _REGISTRY[cid])


def citation_ids() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


_ZERO = ExtRat.fin(0)


@dataclass(frozen=True)
class BoundInterval:
    """Certified enclosure [lower, upper] with per-side provenance."""

    lower: ExtRat
    upper: ExtRat
    lower_prov: tuple[Citation, ...] = ()
    upper_prov: tuple[Citation, ...] = ()

    def __post_init__(self) -> None:
        if self.upper < self.lower:
            lo = ", ".join(c.id for c in self.lower_prov) or "<none>"
            hi = ", ".join(c.id for c in self.upper_prov) or "<none>"
            raise IntervalConflictError(
                f"crossed interval [{self.lower}, {self.upper}]:"
                f" lower backed by [{lo}], upper backed by [{hi}]"
            )
        if self.lower != _ZERO and not self.lower_prov:
            raise ValueError("nontrivial lower bound requires provenance")
        if self.upper.is_finite and not self.upper_prov:
            raise ValueError("nontrivial upper bound requires provenance")


def energy_bounds(obj: ProductObject) -> BoundInterval:
    """Displacement-energy interval for a product of atoms in the standard
    ambient space R^(2n) x (closed factors).

    Lower endpoint: the finest-splitting minimal action.  Upper endpoint:
    the least sphere area, provided the registered sharpness argument
    applies (at least one sphere factor, the least sphere area does not
    exceed any closed factor's minimal action, and no frame-manifold
    factor with k >= 2 is present); otherwise infinity.  A frame manifold
    with k == 1 is the sphere S^(2n-1) of the same area and is treated as
    a sphere factor.
    """
    lower = split_min_action(obj)
    lower_prov = (citation("cor:e-A-Cross"), citation("eq:A-min"))
    sphere_areas = [
        a.area
        for a in obj.atoms
        if isinstance(a, Sphere) or (isinstance(a, Stiefel) and a.k == 1)
    ]
    wide_frames = any(isinstance(a, Stiefel) and a.k >= 2 for a in obj.atoms)
    upper, upper_prov = RAT_INF, ()
    if sphere_areas and not wide_frames:
        a_min = ExtRat.fin(min(sphere_areas))
        closed_ok = all(
            a_min <= minimal_action(a.spectrum)
            for a in obj.atoms
            if isinstance(a, Closed)
        )
        if closed_ok:
            upper = a_min
            upper_prov = (citation("rem:e-M-M'"), citation("rem:e-Z-2n-a"))
    return BoundInterval(lower, upper, lower_prov, upper_prov)


def capacity_bounds(n: int, d: int) -> BoundInterval:
    """Interval for the dimension-d regular coisotropic capacity of the unit
    ball B^(2n), valid on the capacity window n <= d <= 2n - 1."""
    _require_int(n, "n")
    _require_int(d, "d")
    if n < 1:
        raise OutOfRangeError("n must be >= 1")
    if not n <= d <= 2 * n - 1:
        raise OutOfRangeError(f"d must satisfy n <= d <= 2n - 1, got (n, d)=({n}, {d})")
    cost = keq(n, d).value
    assert cost.is_finite  # guaranteed on the window
    lower = ExtRat.fin(Fraction(1, cost.value))
    upper = ExtRat.fin(1)
    return BoundInterval(
        lower,
        upper,
        (citation("eq:A-coiso-d-B"),),
        (citation("eq:A-coiso-d-Z"), citation("mono:B-in-Z")),
    )


def squeeze_bounds(n: int, d: Rational) -> BoundInterval:
    """Interval for the dimension-d squeezing constant of the unit ball,
    for n >= 2 and d >= n."""
    _require_int(n, "n")
    _require_rational(d, "d")
    if n < 2:
        raise OutOfRangeError("n must be >= 2")
    if d < n:
        raise OutOfRangeError(f"d must be >= n, got (n, d)=({n}, {d})")
    cost = kk(n, d).value
    assert cost.is_finite  # floor(d) >= n guarantees feasibility
    lower = ExtRat.fin(Fraction(1, cost.value))
    upper = ExtRat.fin(1)
    return BoundInterval(
        lower,
        upper,
        (citation("thm:emb-d-B"),),
        (citation("def:emb-d-B"),),
    )


@dataclass(frozen=True)
class LagrangianComparison:
    """Lagrangian capacity of the unit ball against the capacity lower
    bound at (n, d); ``strict`` records whether the lower bound already
    exceeds the Lagrangian value."""

    lagrangian_value: Fraction
    capacity_lower: Fraction
    strict: bool


def lagrangian_comparison(n: int, d: int) -> LagrangianComparison:
    """Compare pi/n with pi / keq(n, d) on the window n <= d <= 2n - 1.

    The comparison is strict exactly when n exceeds the exact decomposition
    cost; for d > n this always holds, for d = n it first holds at n = 4.
    """
    _require_int(n, "n")
    _require_int(d, "d")
    if n < 1:
        raise OutOfRangeError("n must be >= 1")
    if not n <= d <= 2 * n - 1:
        raise OutOfRangeError(f"d must satisfy n <= d <= 2n - 1, got (n, d)=({n}, {d})")
    cost = keq(n, d).value
    assert cost.is_finite
    return LagrangianComparison(
        lagrangian_value=Fraction(1, n),
        capacity_lower=Fraction(1, cost.value),
        strict=n > cost.value,
    )


def width_energy_bound(ball_area, has_closed_aspherical_factor: bool) -> BoundInterval:
    """Displacement-energy interval for a ball of the given area, optionally
    stabilized by a closed aspherical factor.

    The lower endpoint is the Gromov width of the ball (its area).  The
    input is itself a ball, which is exactly the case where the sharpness
    construction applies, so the upper endpoint equals the area as well;
    the stabilization remark enters the upper provenance only when a
    closed factor is present.
    """
    if isinstance(ball_area, float):
        raise TypeError("ball_area must be exact (int or Fraction), not float")
    area = Fraction(ball_area)
    if area <= 0:
        raise OutOfRangeError(f"ball_area must be positive, got {area}")
    value = ExtRat.fin(area)
    if has_closed_aspherical_factor:
        upper_prov = (citation("rem:e-M-M'"), citation("rem:e-Z-2n-a"))
    else:
        upper_prov = (citation("rem:e-Z-2n-a"),)
    return BoundInterval(value, value, (citation("cor:e-w"),), upper_prov)
