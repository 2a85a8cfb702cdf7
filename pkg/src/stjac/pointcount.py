"""Point counts for the trinomial curves y^2 = x^d + c and y^2 = x^d + c*x.

Counts are normalized as (number of affine F_p-solutions) + 1.  For even d
the smooth projective model carries two points at infinity, so this differs
from the smooth count by one there; the closed formula and the brute-force
oracle both use the affine + 1 convention.

The closed formula is

    #C(F_p) = p + 1 + sum_a  chi_a(-c) * phi(c) * J(chi_a, phi)

where phi is the quadratic character and chi_a runs over the contributing
column characters of the family: exponents a = m(p-1)/d for the additive
family, a = t(p-1)/(2(d-1)) with t odd for the linear-twist family, always
restricted to integral a in [1, p-2].  The cyclotomic sum always collapses
to a rational integer, which is asserted.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import _accel
from .charsums import jacobi_sum_compact
from .cyclo import CycloElt, conductor_join
from .errors import BadReductionError, NonIntegerResultError
from .ffield import PrimeField, make_field
from .primes import prime_range

ADDITIVE = "additive"  # y^2 = x^d + c
LINEAR = "linear"  # y^2 = x^d + c*x, d odd
FAMILIES = (ADDITIVE, LINEAR)


@dataclass(frozen=True)
class CurveSpec:
    """One curve from the two trinomial families."""

    family: str
    d: int
    c: Fraction = Fraction(1)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {FAMILIES}, got {self.family!r}")
        # d = 1, 2 only arise as genus-0 leaves of the splitting recursion
        # (g+1 a power of two); the count formula covers them regardless.
        if self.d < 1:
            raise ValueError("d must be at least 1")
        if self.family == LINEAR and (self.d % 2 == 0 or self.d < 3):
            raise ValueError("d must be odd and >= 3 for the linear-twist family")
        object.__setattr__(self, "c", Fraction(self.c))
        if self.c == 0:
            raise ValueError("c must be nonzero")

    @property
    def genus(self) -> int:
        return (self.d - 1) // 2

    def equation(self) -> str:
        head = "x" if self.d == 1 else f"x^{self.d}"
        tail = "c*x" if self.family == LINEAR else "c"
        return f"y^2 = {head} + {tail}"

    def label(self) -> str:
        head = "x" if self.d == 1 else f"x^{self.d}"
        c = self.c
        if self.family == LINEAR:
            tail = "x" if c == 1 else f"{c}*x"
        else:
            tail = f"{c}"
        return f"y^2 = {head} + {tail}".replace("+ -", "- ")


def curve(family: str, d: int, c=1) -> CurveSpec:
    return CurveSpec(family=family, d=d, c=Fraction(c))


@dataclass(frozen=True)
class Contribution:
    """One contributing column: source index (m, or odd t) and exponent a."""

    index: int
    exponent: int


@dataclass(frozen=True)
class ContributionSet:
    family: str
    p: int
    d: int
    entries: tuple[Contribution, ...]

    @property
    def exponents(self) -> list[int]:
        return [e.exponent for e in self.entries]

    def __len__(self):
        return len(self.entries)


def contributing_ms(p: int, d: int, family: str) -> ContributionSet:
    """Exact index set of characters entering the point-count formula.

    Additive family: all m with a = m(p-1)/d integral and in [1, p-2],
    i.e. a runs over the multiples of (p-1)/gcd(d, p-1).  Linear twist:
    odd t in [1, 2(d-1)-1] with 2(d-1) | t(p-1).  The [1, p-2] window is
    what keeps small primes correct without any special-casing.
    """
    n = p - 1
    entries = []
    if family == ADDITIVE:
        e = math.gcd(d, n)
        step = n // e
        for j in range(1, e):
            a = j * step
            entries.append(Contribution(index=j * d // e, exponent=a))
    elif family == LINEAR:
        mod = 2 * (d - 1)
        for t in range(1, mod, 2):
            if (t * n) % mod == 0:
                entries.append(Contribution(index=t, exponent=t * n // mod))
    else:
        raise ValueError(f"unknown family {family!r}")
    entries.sort(key=lambda x: x.exponent)
    return ContributionSet(family=family, p=p, d=d, entries=tuple(entries))


def good_reduction(p: int, spec: CurveSpec) -> bool:
    """True when the reduced affine curve is smooth and c is a unit mod p.

    Additive family: x^d + c has repeated roots exactly when p | 2*d*c.
    Linear twist: x^d + c*x factors as x*(x^(d-1) + c), which is separable
    unless p | 2*(d-1)*c; p | d is harmless there.
    """
    degree = spec.d if spec.family == ADDITIVE else spec.d - 1
    return (2 * degree * spec.c.numerator * spec.c.denominator) % p != 0


def count_formula(fld: PrimeField, spec: CurveSpec) -> int:
    """Closed-form point count via Jacobi sums (affine solutions + 1)."""
    p, n = fld.p, fld.n
    if not good_reduction(p, spec):
        raise BadReductionError(f"{p} divides 2*d*c for {spec.label()}")
    cp = fld.reduce(spec.c)
    contrib = contributing_ms(p, spec.d, spec.family)
    if not contrib.entries:
        return p + 1
    dlog_mc = fld.dlog_of(-cp)
    dlog_c = fld.dlog_of(cp)
    half = n // 2
    terms = []
    for col in contrib.entries:
        a = col.exponent
        j = jacobi_sum_compact(fld, a, half)
        g = math.gcd(a, half)
        # T^a(-c) * phi(c) is zeta_n^shift with shift a multiple of g
        shift = (a * dlog_mc + half * dlog_c) % n
        terms.append(CycloElt.zeta_pow(j.n, (shift // g) % j.n) * j)
    conductor = conductor_join([t.n for t in terms])
    total = CycloElt.zero(conductor)
    for t in terms:
        total = total + t.lift(conductor)
    if not total.is_rational():
        raise NonIntegerResultError(
            f"character sum for {spec.label()} at p={p} did not reduce to Q"
        )
    value = total.rational_value()
    if value.denominator != 1:
        raise NonIntegerResultError(
            f"character sum for {spec.label()} at p={p} is not an integer"
        )
    return p + 1 + int(value)


def count_bruteforce(fld: PrimeField, spec: CurveSpec) -> int:
    """Oracle: direct enumeration of affine solutions, plus 1."""
    cp = fld.reduce(spec.c)
    affine = _accel.affine_count(fld.p, spec.d, cp, spec.family == LINEAR)
    return affine + 1


@dataclass(frozen=True)
class TraceSample:
    p: int
    count: int
    t_p: int
    x_p: float


def congruence_modulus(spec: CurveSpec) -> int:
    """Modulus that controls the contributing set (splitting behaviour of p)."""
    if spec.family == ADDITIVE:
        return math.lcm(2, spec.d)
    return 2 * (spec.d - 1)


def _sample(fld: PrimeField, spec: CurveSpec) -> TraceSample:
    # Note: with the affine+1 normalization, even-d curves can exceed the
    # smooth-model Weil bound by at most 1 at extremal split primes (the two
    # points at infinity are not counted), e.g. y^2=x^6+1 at p=103.
    cnt = count_formula(fld, spec)
    t = fld.p + 1 - cnt
    return TraceSample(p=fld.p, count=cnt, t_p=t, x_p=t / math.sqrt(fld.p))


def _sweep_worker(args) -> TraceSample:
    family, d, c_str, p = args
    spec = CurveSpec(family=family, d=d, c=Fraction(c_str))
    return _sample(make_field(p), spec)


@dataclass(frozen=True)
class SweepResult:
    spec: CurveSpec
    samples: tuple[TraceSample, ...]
    moments: dict
    class_counts: dict


def trace_sweep(
    spec: CurveSpec, p_min: int, p_max: int, workers: int = 1
) -> SweepResult:
    """Trace-of-Frobenius samples over all good odd primes in [p_min, p_max].

    Each prime is independent; with workers > 1 the sweep fans out over a
    process pool and the results are merged back in prime order.
    """
    if p_min > p_max:
        raise ValueError("p_min must not exceed p_max")
    primes = [p for p in prime_range(max(3, p_min), p_max) if good_reduction(p, spec)]
    if workers > 1 and len(primes) > 1:
        tasks = [(spec.family, spec.d, str(spec.c), p) for p in primes]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            samples = list(pool.map(_sweep_worker, tasks, chunksize=8))
    else:
        samples = [_sample(make_field(p), spec) for p in primes]
    xs = [s.x_p for s in samples]
    count = len(xs)
    moments = {
        "n_samples": count,
        "mean": sum(xs) / count if count else 0.0,
        "m2": sum(x**2 for x in xs) / count if count else 0.0,
        "m4": sum(x**4 for x in xs) / count if count else 0.0,
        "m6": sum(x**6 for x in xs) / count if count else 0.0,
    }
    mod = congruence_modulus(spec)
    class_counts: dict[int, int] = {}
    for s in samples:
        cls = s.p % mod
        class_counts[cls] = class_counts.get(cls, 0) + 1
    return SweepResult(
        spec=spec,
        samples=tuple(samples),
        moments=moments,
        class_counts=class_counts,
    )
