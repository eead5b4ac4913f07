"""Bulk verification sweeps over the library invariants.

Each check walks a deterministic grid of inputs and counts passes and
failures; the first failing input is kept for diagnosis.  Suites:

* ``kfun-props``: the minimizer relations (monotonicity, domination,
  collapse, the two root bounds, linear and divisor bounds,
  subadditivity), feasibility windows, witness audits, and the
  exhaustive square-decomposition cross-check.
* ``oracle``: branch-and-bound results against the naive enumeration
  oracles (clamped to the oracle cap and to d <= 2n, the range on which
  the equivalence is stated).
* ``bounds-props``: interval sanity, normalization, conformality and
  collapse rules of the bound engine, plus the spectrum algebra laws.
* ``all``: everything above.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import bounds, kfun, spectra

SUITES = ("kfun-props", "oracle", "bounds-props", "all")


@dataclass(frozen=True)
class CheckResult:
    name: str
    range_desc: str
    pass_count: int
    fail_count: int
    first_failure: tuple | None = None


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]
    wall_time_ms: int

    @property
    def fail_count(self) -> int:
        return sum(c.fail_count for c in self.checks)

    @property
    def ok(self) -> bool:
        return self.fail_count == 0


def _sweep(name: str, range_desc: str, cells, predicate) -> CheckResult:
    npass = nfail = 0
    first = None
    for cell in cells:
        if predicate(*cell):
            npass += 1
        else:
            nfail += 1
            if first is None:
                first = cell
    return CheckResult(name, range_desc, npass, nfail, first)


# ---------------------------------------------------------------------------
# kfun checks
# ---------------------------------------------------------------------------

def _kfun_checks(nmax: int, dmax: int) -> list[CheckResult]:
    table = kfun.big_k_table(max(nmax, 1))
    checks = []

    checks.append(_sweep(
        "kfun-collapse-at-diagonal",
        f"1<=n<={nmax}",
        ((n,) for n in range(1, nmax + 1)),
        lambda n: kfun.keq(n, n).value.value
        == kfun.kk(n, n).value.value
        == table[n],
    ))

    checks.append(_sweep(
        "kfun-keq-dominates-kk",
        f"1<=n<={nmax}, 0<=d<={dmax}",
        itertools.product(range(1, nmax + 1), range(dmax + 1)),
        lambda n, d: kfun.keq(n, d).value >= kfun.kk(n, d).value,
    ))

    checks.append(_sweep(
        "kfun-kk-monotone-in-d",
        f"1<=n<={nmax}, 0<=d<=d'<={dmax}",
        (
            (n, d, d2)
            for n in range(1, nmax + 1)
            for d in range(dmax + 1)
            for d2 in range(d, dmax + 1)
        ),
        lambda n, d, d2: kfun.kk(n, d).value >= kfun.kk(n, d2).value,
    ))

    checks.append(_sweep(
        "kfun-square-root-bound",
        f"1<=n<={nmax}",
        ((n,) for n in range(1, nmax + 1)),
        lambda n: kfun.root_bound_holds(n, table[n]),
    ))

    checks.append(_sweep(
        "kfun-keq-linear-bound",
        f"1<=n<={nmax}, n<=d<=2n-1",
        ((n, d) for n in range(1, nmax + 1) for d in range(n, 2 * n)),
        lambda n, d: kfun.keq(n, d).value <= kfun.ExtNat(2 * n - d),
    ))

    def window_cells():
        for n in range(9, nmax + 1):
            for d in range(n, 2 * n + 1):
                if (d - n + 9) ** 2 >= 36 * n:
                    yield (n, d)

    def window_ok(n, d):
        cost = kfun.kk(n, d).value
        if not cost.is_finite or not kfun.lt_sqrt_plus(cost.value, 2 * n - d, 3):
            return False
        wit = kfun.sqrt_bound_witness(n, d)
        return kfun.is_valid_relaxed_witness(wit, n, d) and kfun.lt_sqrt_plus(
            wit.cost, 2 * n - d, 3
        )

    checks.append(_sweep(
        "kfun-kk-window-root-bound",
        f"9<=n<={nmax}, window d<=2n",
        window_cells(),
        window_ok,
    ))

    checks.append(_sweep(
        "kfun-kk-subadditive",
        f"1<=n,n'<={nmax}, 0<=d,d'<={dmax}",
        itertools.product(
            range(1, nmax + 1), range(1, nmax + 1), range(dmax + 1), range(dmax + 1)
        ),
        lambda n, n2, d, d2: kfun.kk(n + n2, d + d2).value
        <= kfun.kk(n, d).value + kfun.kk(n2, d2).value,
    ))

    checks.append(_sweep(
        "kfun-keq-divisor-bound",
        f"1<=n<={nmax}, k|n, k^2<=n",
        (
            (n, k)
            for n in range(1, nmax + 1)
            for k in range(1, n + 1)
            if n % k == 0 and k * k <= n
        ),
        lambda n, k: kfun.keq(n, 2 * n - k * k).value <= kfun.ExtNat(k),
    ))

    checks.append(_sweep(
        "kfun-keq-feasibility-window",
        f"1<=n<={nmax}, 0<=d<={dmax}",
        itertools.product(range(1, nmax + 1), range(dmax + 1)),
        lambda n, d: kfun.keq(n, d).value.is_finite == (n <= d <= 2 * n - 1),
    ))

    checks.append(_sweep(
        "kfun-kk-feasibility-window",
        f"1<=n<={nmax}, 0<=d<={dmax}",
        itertools.product(range(1, nmax + 1), range(dmax + 1)),
        lambda n, d: kfun.kk(n, d).value.is_finite == (d >= n),
    ))

    def witnesses_ok(n, d):
        exact = kfun.keq(n, d)
        if exact.value.is_finite:
            if not kfun.is_valid_exact_witness(exact.witness, n, d):
                return False
            if exact.witness.cost != exact.value.value:
                return False
        relaxed = kfun.kk(n, d)
        if relaxed.value.is_finite:
            if not kfun.is_valid_relaxed_witness(relaxed.witness, n, d):
                return False
            if relaxed.witness.cost != relaxed.value.value:
                return False
        square = kfun.big_k(n)
        return (
            kfun.is_valid_square_witness(square.witness, n)
            and square.witness.cost == square.value.value
        )

    checks.append(_sweep(
        "kfun-witness-validity",
        f"1<=n<={nmax}, 0<=d<={dmax}",
        itertools.product(range(1, nmax + 1), range(dmax + 1)),
        witnesses_ok,
    ))

    exhaustive_top = min(nmax, 200)
    checks.append(_sweep(
        "kfun-square-cost-exhaustive",
        f"1<=n<={exhaustive_top}",
        ((n,) for n in range(1, exhaustive_top + 1)),
        lambda n: table[n] == kfun.square_cost_naive(n),
    ))

    four_square_top = max(nmax, dmax)
    wide_table = kfun.big_k_table(max(four_square_top, 1))

    def four_square_ok(n):
        a, b, c, d = kfun.four_square(n)
        if a * a + b * b + c * c + d * d != n or not a >= b >= c >= d >= 0:
            return False
        return n == 0 or wide_table[n] <= a + b + c + d

    checks.append(_sweep(
        "kfun-four-square-identity",
        f"0<=n<={four_square_top}",
        ((n,) for n in range(0, four_square_top + 1)),
        four_square_ok,
    ))

    return checks


# ---------------------------------------------------------------------------
# oracle checks
# ---------------------------------------------------------------------------

def _oracle_checks(nmax: int, dmax: int) -> list[CheckResult]:
    cap = kfun.oracle_cap()
    top = min(nmax, cap)

    def cells():
        for n in range(1, top + 1):
            for d in range(min(dmax, 2 * n) + 1):
                yield (n, d)

    def agree(fast, naive):
        def pred(n, d):
            a, b = fast(n, d), naive(n, d)
            if a.value != b.value:
                return False
            if a.value.is_finite and a.witness.key() != b.witness.key():
                return False
            return True

        return pred

    desc = f"1<=n<={top}, 0<=d<=min({dmax},2n)"
    return [
        _sweep("oracle-keq-agrees", desc, cells(), agree(kfun.keq, kfun.keq_naive)),
        _sweep("oracle-kk-agrees", desc, cells(), agree(kfun.kk, kfun.kk_naive)),
    ]


# ---------------------------------------------------------------------------
# bounds and spectra checks
# ---------------------------------------------------------------------------

_FRACTIONS = tuple(
    sorted({Fraction(p, q) for p in range(0, 4) for q in range(1, 4)})
)
_POSITIVE = tuple(f for f in _FRACTIONS if f > 0)


def _sample_objects() -> tuple[spectra.ProductObject, ...]:
    torus = spectra.Closed("T2", 1, spectra.Spectrum.zero(), aspherical=True)
    round_sphere = spectra.Closed("S2", 1, spectra.Spectrum.lattice(1))
    small_sphere = spectra.Closed("S2w", 1, spectra.Spectrum.lattice(Fraction(1, 3)))
    return (
        spectra.ProductObject((spectra.Sphere(2, Fraction(1)),)),
        spectra.ProductObject((spectra.Sphere(2, Fraction(1)), spectra.Sphere(2, Fraction(1)))),
        spectra.ProductObject((spectra.Sphere(2, Fraction(2)), spectra.Sphere(3, Fraction(1)))),
        spectra.ProductObject((spectra.Sphere(1, Fraction(1, 2)), spectra.Sphere(1, Fraction(1, 3)))),
        spectra.ProductObject((spectra.Sphere(1, Fraction(1)), torus)),
        spectra.ProductObject((spectra.Sphere(1, Fraction(1)), round_sphere)),
        spectra.ProductObject((spectra.Sphere(2, Fraction(1)), small_sphere)),
        spectra.ProductObject((spectra.Stiefel(2, 3, Fraction(1)), spectra.Sphere(2, Fraction(1, 2)))),
        spectra.ProductObject((spectra.Stiefel(1, 4, Fraction(3, 2)),)),
        spectra.ProductObject((torus,)),
    )


def _bounds_checks(nmax: int, dmax: int) -> list[CheckResult]:
    checks = []

    checks.append(_sweep(
        "bounds-capacity-normalized",
        f"1<=n<={nmax}",
        ((n,) for n in range(1, nmax + 1)),
        lambda n: bounds.capacity_bounds(n, 2 * n - 1).lower
        == bounds.capacity_bounds(n, 2 * n - 1).upper
        == spectra.ExtRat.fin(1),
    ))

    def capacity_sane(n, d):
        interval = bounds.capacity_bounds(n, d)
        return spectra.ExtRat.fin(0) < interval.lower <= interval.upper

    checks.append(_sweep(
        "bounds-capacity-interval-sane",
        f"1<=n<={nmax}, n<=d<=2n-1",
        ((n, d) for n in range(1, nmax + 1) for d in range(n, 2 * n)),
        capacity_sane,
    ))

    checks.append(_sweep(
        "bounds-squeeze-monotone-lower",
        f"2<=n<={nmax}, n<=d<=d'<={dmax}",
        (
            (n, d, d2)
            for n in range(2, nmax + 1)
            for d in range(n, dmax + 1)
            for d2 in range(d, dmax + 1)
        ),
        lambda n, d, d2: bounds.squeeze_bounds(n, d).lower
        <= bounds.squeeze_bounds(n, d2).lower,
    ))

    def collapse_ok(n, d):
        interval = bounds.squeeze_bounds(n, d)
        collapsed = interval.lower == interval.upper == spectra.ExtRat.fin(1)
        want = kfun.kk(n, d).value == kfun.ExtNat(1)
        if collapsed != want:
            return False
        return collapsed if d >= 2 * n - 1 else True

    checks.append(_sweep(
        "bounds-squeeze-collapse",
        f"2<=n<={nmax}, n<=d<={dmax}",
        ((n, d) for n in range(2, nmax + 1) for d in range(n, dmax + 1)),
        collapse_ok,
    ))

    def energy_example(expr_atoms, lo, hi):
        interval = bounds.energy_bounds(spectra.ProductObject(expr_atoms))
        return interval.lower == lo and interval.upper == hi

    one = spectra.ExtRat.fin(1)
    examples = (
        ((spectra.Sphere(2, Fraction(1)), spectra.Sphere(2, Fraction(1))), one, one),
        (
            (
                spectra.Sphere(1, Fraction(1)),
                spectra.Sphere(1, Fraction(1)),
                spectra.Closed("S2", 1, spectra.Spectrum.lattice(1)),
            ),
            one,
            one,
        ),
        ((spectra.Sphere(2, Fraction(2)), spectra.Sphere(3, Fraction(1))), one, one),
    )
    checks.append(_sweep(
        "bounds-energy-examples",
        "3 fixed products",
        examples,
        energy_example,
    ))

    def conformal(obj, c):
        base = bounds.energy_bounds(obj)
        scaled = bounds.energy_bounds(obj.scaled(c))
        return scaled.lower == base.lower.scaled(c) and scaled.upper == base.upper.scaled(c)

    checks.append(_sweep(
        "bounds-energy-conformality",
        "sample objects x positive rational scales",
        itertools.product(_sample_objects(), _POSITIVE),
        conformal,
    ))

    def width_ok(a, flag):
        interval = bounds.width_energy_bound(a, flag)
        return interval.lower == interval.upper == spectra.ExtRat.fin(a)

    checks.append(_sweep(
        "bounds-width-interval",
        "positive rational areas x {with,without} closed factor",
        itertools.product(_POSITIVE, (False, True)),
        width_ok,
    ))

    return checks


def _spectra_checks() -> list[CheckResult]:
    checks = []
    lattices = tuple(spectra.Spectrum.lattice(f) for f in _POSITIVE) + (
        spectra.Spectrum.zero(),
    )

    def algebra(s1, s2, s3):
        if spectra.spectrum_sum(s1, s2) != spectra.spectrum_sum(s2, s1):
            return False
        left = spectra.spectrum_sum(spectra.spectrum_sum(s1, s2), s3)
        right = spectra.spectrum_sum(s1, spectra.spectrum_sum(s2, s3))
        if left != right:
            return False
        if spectra.spectrum_sum(s1, s1) != s1:
            return False
        return spectra.spectrum_sum(spectra.Spectrum.zero(), s1) == s1

    checks.append(_sweep(
        "spectra-sum-algebra",
        "lattice/zero triples over a fraction grid",
        itertools.product(lattices, lattices, lattices),
        algebra,
    ))

    def rescale(obj, c):
        split = spectra.split_min_action(obj)
        prod = spectra.minimal_action(spectra.product_spectrum(obj))
        scaled = obj.scaled(c)
        return (
            spectra.split_min_action(scaled) == split.scaled(c)
            and spectra.minimal_action(spectra.product_spectrum(scaled)) == prod.scaled(c)
        )

    checks.append(_sweep(
        "spectra-rescaling",
        "sample objects x positive rational scales",
        itertools.product(_sample_objects(), _POSITIVE),
        rescale,
    ))

    checks.append(_sweep(
        "spectra-sphere-m-independent",
        "1<=m,m'<=4 x positive areas",
        itertools.product(range(1, 5), range(1, 5), _POSITIVE),
        lambda m, m2, a: spectra.spectrum_of_atom(spectra.Sphere(m, a))
        == spectra.spectrum_of_atom(spectra.Sphere(m2, a)),
    ))

    def normal_form(gens):
        base = spectra.Spectrum.from_generators(gens)
        for perm in itertools.permutations(gens):
            if spectra.Spectrum.from_generators(perm) != base:
                return False
        regenerated = (base.gen,) if not base.is_zero else ()
        return spectra.Spectrum.from_generators(regenerated) == base

    checks.append(_sweep(
        "spectra-normal-form",
        "generator triples over a fraction grid",
        ((gens,) for gens in itertools.combinations_with_replacement(_FRACTIONS, 3)),
        normal_form,
    ))

    checks.append(_sweep(
        "spectra-product-min-vs-split",
        "sample objects",
        ((obj,) for obj in _sample_objects()),
        lambda obj: spectra.minimal_action(spectra.product_spectrum(obj))
        <= spectra.split_min_action(obj),
    ))

    return checks


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def run_suite(suite: str, nmax: int, dmax: int | None = None) -> VerifyReport:
    """Run one suite over n <= nmax, d <= dmax (default 2*nmax)."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}, expected one of {SUITES}")
    if not isinstance(nmax, int) or nmax < 1:
        raise ValueError("nmax must be an integer >= 1")
    if dmax is None:
        dmax = 2 * nmax
    if not isinstance(dmax, int) or dmax < 0:
        raise ValueError("dmax must be an integer >= 0")

    start = time.monotonic()
    checks: list[CheckResult] = []
    if suite in ("kfun-props", "all"):
        checks.extend(_kfun_checks(nmax, dmax))
    if suite in ("oracle", "all"):
        checks.extend(_oracle_checks(nmax, dmax))
    if suite in ("bounds-props", "all"):
        checks.extend(_bounds_checks(nmax, dmax))
        checks.extend(_spectra_checks())
    elapsed_ms = int((time.monotonic() - start) * 1000)
    ordered = tuple(sorted(checks, key=lambda c: c.name))
    return VerifyReport(ordered, elapsed_ms)
