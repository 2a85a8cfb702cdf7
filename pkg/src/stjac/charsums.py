"""Gauss sums (floating-point diagnostics) and exact Jacobi sums.

Gauss sums live in Q(zeta_{p(p-1)}) and are only ever needed here as
numerical cross-checks, so they stay complex doubles.  Jacobi sums lie in
Z[zeta_{p-1}] and are computed exactly from the defining character sum
J(A, B) = sum_x A(x) B(1-x), never from Gauss-sum quotients.

``jacobi_sum_compact`` returns the value in the smallest cyclotomic field
containing it (conductor (p-1)/gcd(a, b, p-1)), which is what keeps the
point-count and relation-check pipelines cheap; ``jacobi_sum`` lifts the
same value to the full conductor p-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _accel
from .cyclo import CycloElt, embed
from .errors import DegenerateCharactersError
from .ffield import CharExponent, PrimeField


@dataclass(frozen=True)
class GaussDiagnostic:
    """Floating-point Gauss sum sum_x T^a(x) e^(2 pi i x / p)."""

    p: int
    a: int
    value: complex


def gauss_sum(fld: PrimeField, a: CharExponent) -> GaussDiagnostic:
    p, n = fld.p, fld.n
    x = np.arange(1, p)
    angles = (a % n) * fld.dlog[x] % n / n + x / p
    value = complex(np.exp(2j * np.pi * angles).sum())
    return GaussDiagnostic(p=p, a=a % n, value=value)


def jacobi_sum_compact(fld: PrimeField, a: CharExponent, b: CharExponent) -> CycloElt:
    """J(T^a, T^b) in its minimal cyclotomic field."""
    n = fld.n
    a %= n
    b %= n
    g = math.gcd(a, b, n)
    hist = _accel.char_pair_histogram(fld.dlog, a, b, n)
    compact = hist[::g] if g > 1 else hist
    return CycloElt.from_int_coeffs(n // g, compact.tolist())


def jacobi_sum(fld: PrimeField, a: CharExponent, b: CharExponent) -> CycloElt:
    """Exact J(T^a, T^b) as an element of Q(zeta_{p-1})."""
    return jacobi_sum_compact(fld, a, b).lift(fld.n)


def gauss_jacobi_check(
    fld: PrimeField, a: CharExponent, b: CharExponent, tol: float = 1e-6
) -> bool:
    """Numeric check of J(A, B) = g(A) g(B) / g(AB) at the identity embedding."""
    n = fld.n
    a %= n
    b %= n
    if a == 0 or b == 0 or (a + b) % n == 0:
        raise DegenerateCharactersError(
            "the identity needs A, B and AB all nontrivial"
        )
    lhs = embed(jacobi_sum(fld, a, b), 1)
    rhs = gauss_sum(fld, a).value * gauss_sum(fld, b).value / gauss_sum(fld, a + b).value
    return abs(lhs - rhs) <= tol
