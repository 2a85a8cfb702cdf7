"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored by its coordinates in the power basis
1, z, ..., z^(phi(n)-1) reduced modulo the n-th cyclotomic polynomial,
with Fraction coefficients.  The representation is canonical, so equality
is coefficient-wise equality.  Conversion between conductors goes through
``lift`` (n must divide the target conductor).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .errors import NotCoprimeError
from .primes import divisors, euler_phi, factorize


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_divmod_int(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Exact polynomial division over Z (den monic up to sign of lead 1)."""
    num = list(num)
    q = [0] * max(1, len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c == 0:
            continue
        assert c % lead == 0
        f = c // lead
        q[k] = f
        for i, d in enumerate(den):
            num[k + i] -= f * d
    return _poly_trim(q), _poly_trim(num)


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, ascending degree, computed as
    (x^n - 1) / prod(Phi_d for proper divisors d of n)."""
    if n < 1:
        raise ValueError("conductor must be >= 1")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in divisors(n)[:-1]:
        num, rem = _poly_divmod_int(num, list(cyclotomic_poly(d)))
        assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Integer rows giving x^k mod Phi_n for k = 0 .. max(n-1, 2*phi-2)."""
    phi_poly = cyclotomic_poly(n)
    deg = len(phi_poly) - 1
    top = max(n - 1, 2 * deg - 2)
    rows = []
    row = [0] * deg
    row[0] = 1
    for _ in range(top + 1):
        rows.append(tuple(row))
        carry = row[deg - 1]
        row = [0] + row[: deg - 1]
        if carry:
            for i in range(deg):
                row[i] -= carry * phi_poly[i]
    return tuple(rows)


def _reduce_mod_phi(coeffs: list, n: int) -> list:
    """Reduce an arbitrary-degree coefficient list into the power basis."""
    rows = _reduction_rows(n)
    deg = len(cyclotomic_poly(n)) - 1
    out = list(coeffs[:deg]) + [0] * max(0, deg - len(coeffs))
    for k in range(deg, len(coeffs)):
        c = coeffs[k]
        if c:
            row = rows[k]
            for i in range(deg):
                if row[i]:
                    out[i] = out[i] + c * row[i]
    return out


@dataclass(frozen=True)
class CycloElt:
    """Element of Q(zeta_n) in the canonical power basis mod Phi_n."""

    n: int
    coeffs: tuple[Fraction, ...]

    @staticmethod
    def _make(n: int, coeffs) -> "CycloElt":
        deg = len(cyclotomic_poly(n)) - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) < deg:
            cs += [Fraction(0)] * (deg - len(cs))
        assert len(cs) == deg
        return CycloElt(n, tuple(cs))

    @staticmethod
    def from_int_coeffs(n: int, coeffs) -> "CycloElt":
        """Build from an integer coefficient list of any degree (reduced here)."""
        return CycloElt._make(n, _reduce_mod_phi([int(c) for c in coeffs], n))

    @staticmethod
    def zero(n: int) -> "CycloElt":
        return CycloElt._make(n, [])

    @staticmethod
    def one(n: int) -> "CycloElt":
        return CycloElt._make(n, [Fraction(1)])

    @staticmethod
    def from_rational(n: int, q) -> "CycloElt":
        return CycloElt._make(n, [Fraction(q)])

    @staticmethod
    def zeta_pow(n: int, k: int) -> "CycloElt":
        """zeta_n^k as an exact element."""
        return CycloElt._make(n, _reduction_rows(n)[k % n])

    @staticmethod
    def zeta(n: int) -> "CycloElt":
        return CycloElt.zeta_pow(n, 1)

    # -- ring structure -------------------------------------------------

    def _check(self, other: "CycloElt") -> None:
        if self.n != other.n:
            raise ValueError(f"conductor mismatch: {self.n} vs {other.n}")

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CycloElt(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        self._check(other)
        return CycloElt(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CycloElt(self.n, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycloElt(self.n, tuple(a * q for a in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        prod = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycloElt._make(self.n, _reduce_mod_phi(prod, self.n))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / q)
        return self * other.inv()

    def __pow__(self, k: int) -> "CycloElt":
        if k < 0:
            return self.inv() ** (-k)
        result = CycloElt.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self) -> "CycloElt":
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        phi_poly = [Fraction(c) for c in cyclotomic_poly(self.n)]
        r0, r1 = phi_poly, _poly_trim(list(self.coeffs))
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _poly_divmod_frac(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant since Phi_n is irreducible over Q
        c = r1[0]
        return CycloElt._make(self.n, _reduce_mod_phi([x / c for x in s1], self.n))

    def galois(self, u: int) -> "CycloElt":
        """Image under zeta_n -> zeta_n^u, for u coprime to n."""
        if math.gcd(u, self.n) != 1:
            raise NotCoprimeError(f"galois index {u} not coprime to {self.n}")
        scattered = [Fraction(0)] * self.n
        for i, c in enumerate(self.coeffs):
            if c:
                scattered[(i * u) % self.n] += c
        return CycloElt._make(self.n, _reduce_mod_phi(scattered, self.n))

    def conj(self) -> "CycloElt":
        """Complex conjugation zeta -> zeta^(-1)."""
        if self.n <= 2:
            return self
        return self.galois(self.n - 1)

    def lift(self, m: int) -> "CycloElt":
        """The same value viewed in Q(zeta_m); requires n | m."""
        if m % self.n:
            raise ValueError(f"cannot lift conductor {self.n} into {m}")
        if m == self.n:
            return self
        step = m // self.n
        scattered = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for i, c in enumerate(self.coeffs):
            if c:
                scattered[i * step] = c
        return CycloElt._make(m, _reduce_mod_phi(scattered, m))

    # -- predicates and conversions -------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElt.from_rational(self.n, other)
        return other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloElt.from_rational(self.n, other)
        if not isinstance(other, CycloElt):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    def __repr__(self):
        return f"CycloElt(n={self.n}, coeffs={[str(c) for c in self.coeffs]})"


def _poly_mul(a: list, b: list) -> list:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out) or [Fraction(0)]


def _poly_sub(a: list, b: list) -> list:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _poly_trim(out) or [Fraction(0)]


def _poly_divmod_frac(num: list, den: list) -> tuple[list, list]:
    num = list(num)
    dn = len(den) - 1
    q = [Fraction(0)] * max(1, len(num) - dn)
    inv_lead = 1 / den[-1]
    for k in range(len(num) - dn - 1, -1, -1):
        c = num[k + dn]
        if c:
            f = c * inv_lead
            q[k] = f
            for i, d in enumerate(den):
                num[k + i] -= f * d
    rem = _poly_trim(num[:dn]) or [Fraction(0)]
    return _poly_trim(q) or [Fraction(0)], rem


def embed(w: CycloElt, k: int = 1) -> complex:
    """Floating-point image of w under zeta_n -> exp(2*pi*i*k/n).

    Diagnostic only; k must be coprime to the conductor so the image is a
    primitive root of unity.
    """
    if math.gcd(k, w.n) != 1:
        raise NotCoprimeError(f"embedding index {k} not coprime to {w.n}")
    z = cmath.exp(2j * cmath.pi * k / w.n)
    acc = 0j
    for c in reversed(w.coeffs):
        acc = acc * z + complex(c)
    return acc


def is_root_of_unity(w: CycloElt) -> int | None:
    """Least N with w^N = 1, or None if w is not a root of unity.

    The roots of unity in Q(zeta_n) all have order dividing lcm(2, n), so a
    single exponentiation decides membership.
    """
    if w.is_zero():
        return None
    bound = math.lcm(2, w.n)
    if w**bound != 1:
        return None
    order = bound
    for q in factorize(bound):
        while order % q == 0 and w ** (order // q) == 1:
            order //= q
    return order


def conductor_join(values: list[int]) -> int:
    """lcm of a list of conductors (at least 1)."""
    return reduce(math.lcm, values, 1)


__all__ = [
    "CycloElt",
    "cyclotomic_poly",
    "embed",
    "is_root_of_unity",
    "conductor_join",
    "euler_phi",
]
