"""Arithmetic in F_p with a fixed generator of the character group.

The generator is always the smallest primitive root of p, so every table,
matrix and kernel built downstream is deterministic.  Characters are the
maps T^a : x -> zeta_{p-1}^(a * dlog x), extended by zero at x = 0 for
every a including a = 0; that convention is what makes the Gauss sum of
the trivial character equal -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _accel
from .cyclo import CycloElt
from .errors import EvenOrTooSmallError, NotPrimeError
from .primes import factorize, is_prime

# A character exponent is a plain integer a modulo p-1: a = 0 is the
# trivial character, a = (p-1)/2 the quadratic character.
CharExponent = int


@dataclass(frozen=True, eq=False)
class PrimeField:
    """Odd prime p with its smallest primitive root and dense dlog table."""

    p: int
    generator: int
    dlog: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        """Order p - 1 of the character group."""
        return self.p - 1

    def dlog_of(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("discrete log of 0")
        return int(self.dlog[x])

    def reduce(self, c) -> int:
        """Image of a rational in F_p (inverts the denominator mod p)."""
        c = Fraction(c)
        if c.denominator % self.p == 0:
            raise ZeroDivisionError(f"denominator of {c} vanishes mod {self.p}")
        return c.numerator * pow(c.denominator, -1, self.p) % self.p

    def __repr__(self):
        return f"PrimeField(p={self.p}, generator={self.generator})"


def smallest_primitive_root(p: int) -> int:
    cofactors = [(p - 1) // q for q in factorize(p - 1)]
    g = 2
    while True:
        if all(pow(g, e, p) != 1 for e in cofactors):
            return g
        g += 1


def make_field(p: int) -> PrimeField:
    """Build the field data for an odd prime p (dense table, desk scale)."""
    if p < 3 or p % 2 == 0:
        raise EvenOrTooSmallError(f"p must be an odd prime >= 3, got {p}")
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    g = smallest_primitive_root(p)
    table = _accel.dlog_table(p, g)
    table.flags.writeable = False
    return PrimeField(p=p, generator=g, dlog=table)


def char_eval(fld: PrimeField, a: CharExponent, x: int) -> CycloElt:
    """Value of the character T^a at x, as an exact element of Q(zeta_{p-1}).

    Every character (the trivial one included) takes the value 0 at x = 0.
    """
    x %= fld.p
    if x == 0:
        return CycloElt.zero(fld.n)
    return CycloElt.zeta_pow(fld.n, (a * fld.dlog_of(x)) % fld.n)


def legendre(fld: PrimeField, x: int) -> int:
    """Quadratic-character value in {-1, 0, 1} read off the dlog parity."""
    x %= fld.p
    if x == 0:
        return 0
    return -1 if fld.dlog_of(x) % 2 else 1
