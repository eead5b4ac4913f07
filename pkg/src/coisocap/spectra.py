"""Action-spectrum lattice algebra for products of symbolic factors.

Factors are odd spheres ``S(m; a)`` (the sphere S^(2m-1) of area a inside
R^(2m)), frame manifolds ``V(k, n; a)`` (complex k x n matrices T with
T T* = (a/pi) * identity), and user-declared closed factors.  Areas and
actions are exact rationals measured in units of pi.

Every spectrum arising from these factors is either the trivial group {0}
or a lattice g*Z with g > 0 rational; the ``Spectrum`` type is restricted
to exactly these two shapes and group sums are computed by rational gcd.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Iterable, Union

RatPi = Fraction  # rational multiple of pi


def format_pi(q: Fraction) -> str:
    """Render a rational multiple of pi ("0", "pi", "2pi/3", ...)."""
    if q < 0:
        raise ValueError("negative multiples of pi are not used here")
    if q == 0:
        return "0"
    head = "pi" if q.numerator == 1 else f"{q.numerator}pi"
    return head if q.denominator == 1 else f"{head}/{q.denominator}"


def _as_area(value, what: str) -> Fraction:
    if isinstance(value, float):
        raise TypeError(f"{what} must be exact (int or Fraction), not float")
    area = Fraction(value)
    if area <= 0:
        raise ValueError(f"{what} must be positive, got {area}")
    return area


def _fraction_gcd(a: Fraction, b: Fraction) -> Fraction:
    num = gcd(a.numerator * b.denominator, b.numerator * a.denominator)
    return Fraction(num, a.denominator * b.denominator)


@dataclass(frozen=True)
class Spectrum:
    """The trivial group {0} (``gen is None``) or the lattice gen * Z."""

    gen: Fraction | None

    def __post_init__(self) -> None:
        if self.gen is not None:
            if isinstance(self.gen, float):
                raise TypeError("lattice generator must be exact, not float")
            g = Fraction(self.gen)
            if g <= 0:
                raise ValueError(f"lattice generator must be positive, got {g}")
            object.__setattr__(self, "gen", g)

    @classmethod
    def zero(cls) -> "Spectrum":
        return cls(None)

    @classmethod
    def lattice(cls, gen) -> "Spectrum":
        return cls(Fraction(gen))

    @classmethod
    def from_generators(cls, gens: Iterable) -> "Spectrum":
        """Normal form of the group generated by the given multiples of pi:
        gcd-lattice of the positive generators, {0} if there are none."""
        positive = []
        for g in gens:
            if isinstance(g, float):
                raise TypeError("generators must be exact, not float")
            q = Fraction(g)
            if q < 0:
                raise ValueError(f"generators must be nonnegative, got {q}")
            if q > 0:
                positive.append(q)
        if not positive:
            return cls.zero()
        acc = positive[0]
        for q in positive[1:]:
            acc = _fraction_gcd(acc, q)
        return cls(acc)

    @property
    def is_zero(self) -> bool:
        return self.gen is None

    def scaled(self, factor) -> "Spectrum":
        if self.gen is None:
            return self
        return Spectrum.lattice(self.gen * _as_area(factor, "scale factor"))

    def __add__(self, other: "Spectrum") -> "Spectrum":
        return spectrum_sum(self, other)

    def __str__(self) -> str:
        return "{0}" if self.gen is None else f"{format_pi(self.gen)}*Z"


@total_ordering
@dataclass(frozen=True)
class ExtRat:
    """A nonnegative rational (in units of pi) extended with infinity."""

    value: Fraction | None

    def __post_init__(self) -> None:
        if self.value is not None:
            if isinstance(self.value, float):
                raise TypeError("finite ExtRat must be exact, not float")
            v = Fraction(self.value)
            if v < 0:
                raise ValueError("finite ExtRat must be nonnegative")
            object.__setattr__(self, "value", v)

    @classmethod
    def fin(cls, value) -> "ExtRat":
        return cls(Fraction(value))

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def __lt__(self, other: "ExtRat") -> bool:
        if not isinstance(other, ExtRat):
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def scaled(self, factor) -> "ExtRat":
        if self.value is None:
            return self
        return ExtRat.fin(self.value * _as_area(factor, "scale factor"))

    def __str__(self) -> str:
        return "inf" if self.value is None else format_pi(self.value)


RAT_INF = ExtRat(None)


# ---------------------------------------------------------------------------
# Atoms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sphere:
    """The sphere S^(2m-1) of area ``area`` inside R^(2m)."""

    m: int
    area: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.m, int) or isinstance(self.m, bool) or self.m < 1:
            raise ValueError(f"sphere needs integer m >= 1, got {self.m!r}")
        object.__setattr__(self, "area", _as_area(self.area, "sphere area"))

    @property
    def coiso_dim(self) -> int:
        return 2 * self.m - 1

    @property
    def ambient_half_dim(self) -> int:
        return self.m

    def scaled(self, factor) -> "Sphere":
        return Sphere(self.m, self.area * _as_area(factor, "scale factor"))

    def __str__(self) -> str:
        return f"S({self.m};{format_pi(self.area)})"


@dataclass(frozen=True)
class Stiefel:
    """The frame manifold V(k, n; area) inside C^(k x n), 1 <= k <= n."""

    k: int
    n: int
    area: Fraction

    def __post_init__(self) -> None:
        for name in ("k", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"frame manifold needs integer {name} >= 1, got {v!r}")
        if self.k > self.n:
            raise ValueError(f"frame manifold needs k <= n, got ({self.k}, {self.n})")
        object.__setattr__(self, "area", _as_area(self.area, "frame manifold area"))

    @property
    def coiso_dim(self) -> int:
        return self.k * (2 * self.n - self.k)

    @property
    def ambient_half_dim(self) -> int:
        return self.k * self.n

    def scaled(self, factor) -> "Stiefel":
        return Stiefel(self.k, self.n, self.area * _as_area(factor, "scale factor"))

    def __str__(self) -> str:
        return f"V({self.k},{self.n};{format_pi(self.area)})"


@dataclass(frozen=True)
class Closed:
    """A closed symplectic factor with a user-declared spectrum.

    The spectrum is taken on trust; an aspherical factor must declare the
    trivial spectrum.  Nothing geometric is verified here.
    """

    label: str
    half_dim: int
    spectrum: Spectrum
    aspherical: bool = False

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("closed factor needs a nonempty label")
        if (
            not isinstance(self.half_dim, int)
            or isinstance(self.half_dim, bool)
            or self.half_dim < 1
        ):
            raise ValueError(f"closed factor needs integer half_dim >= 1, got {self.half_dim!r}")
        if not isinstance(self.spectrum, Spectrum):
            raise TypeError("closed factor spectrum must be a Spectrum")
        if self.aspherical and not self.spectrum.is_zero:
            raise ValueError("an aspherical closed factor must have spectrum {0}")

    @property
    def coiso_dim(self) -> int:
        return 2 * self.half_dim

    @property
    def ambient_half_dim(self) -> int:
        return self.half_dim

    def scaled(self, factor) -> "Closed":
        return Closed(self.label, self.half_dim, self.spectrum.scaled(factor), self.aspherical)

    def __str__(self) -> str:
        gen = "0" if self.spectrum.is_zero else format_pi(self.spectrum.gen)
        tail = ";asph" if self.aspherical else ""
        return f"C({self.label},{self.half_dim};{gen}{tail})"


CoisotropicAtom = Union[Sphere, Stiefel, Closed]


@dataclass(frozen=True)
class ProductObject:
    """A nonempty ordered product of atoms."""

    atoms: tuple[CoisotropicAtom, ...]

    def __post_init__(self) -> None:
        atoms = tuple(self.atoms)
        if not atoms:
            raise ValueError("product object must contain at least one atom")
        for atom in atoms:
            if not isinstance(atom, (Sphere, Stiefel, Closed)):
                raise TypeError(f"not a coisotropic atom: {atom!r}")
        object.__setattr__(self, "atoms", atoms)

    @property
    def coiso_dim(self) -> int:
        return sum(a.coiso_dim for a in self.atoms)

    @property
    def ambient_half_dim(self) -> int:
        return sum(a.ambient_half_dim for a in self.atoms)

    def scaled(self, factor) -> "ProductObject":
        return ProductObject(tuple(a.scaled(factor) for a in self.atoms))

    def __str__(self) -> str:
        return " x ".join(str(a) for a in self.atoms)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def spectrum_of_atom(atom: CoisotropicAtom) -> Spectrum:
    """Spectrum of a single factor: the area lattice for spheres and frame
    manifolds (general areas by linear rescaling of the unit-area case),
    the declared spectrum for closed factors."""
    if isinstance(atom, (Sphere, Stiefel)):
        return Spectrum.lattice(atom.area)
    if isinstance(atom, Closed):
        return atom.spectrum
    raise TypeError(f"not a coisotropic atom: {atom!r}")


def spectrum_sum(s1: Spectrum, s2: Spectrum) -> Spectrum:
    """Group sum; {0} is the identity and lattices combine by rational gcd."""
    if s1.is_zero:
        return s2
    if s2.is_zero:
        return s1
    return Spectrum(_fraction_gcd(s1.gen, s2.gen))


def minimal_action(s: Spectrum) -> ExtRat:
    """Infimum of the positive part of the spectrum (infinity for {0})."""
    if s.is_zero:
        return RAT_INF
    return ExtRat.fin(s.gen)


def product_spectrum(obj: ProductObject) -> Spectrum:
    """Spectrum of the product: the sum of the factor spectra."""
    acc = Spectrum.zero()
    for atom in obj.atoms:
        acc = spectrum_sum(acc, spectrum_of_atom(atom))
    return acc


def split_min_action(obj: ProductObject) -> ExtRat:
    """Finest-splitting value: the minimum of the factor minimal actions.

    This is a certified lower bound for the split minimal action of the
    product, hence for its displacement energy.
    """
    return min(minimal_action(spectrum_of_atom(a)) for a in obj.atoms)


def assumption_notes(obj: ProductObject) -> list[str]:
    """Trust assumptions behind spectra of the given object, for reporting."""
    notes = []
    if any(isinstance(a, Stiefel) and a.area != 1 for a in obj.atoms):
        notes.append(
            "stiefel-rescaling: spectra of frame manifolds with area != pi are"
            " obtained from the unit-area case by linear rescaling"
        )
    if any(isinstance(a, Stiefel) and a.k >= 2 for a in obj.atoms):
        notes.append(
            "stiefel-lattice-assumption: for k >= 2 only the minimal action of"
            " V(k,n;a) is certified; the full lattice a*Z is an assumption"
        )
    if any(isinstance(a, Closed) for a in obj.atoms):
        notes.append(
            "closed-factor-declared: spectra of closed factors are taken on"
            " trust as declared"
        )
    return notes
