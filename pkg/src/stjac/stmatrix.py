"""Stickelberger carry matrices, their integer kernels, and exact relation checks.

The carry matrix encodes the prime-over-p valuations of the Jacobi sums
J(T^a, phi): rows are indexed by the units k mod p-1 (one per embedding of
the character group into the circle), columns by the contributing character
exponents a with the exponent (p-1)/2 removed, and

    entry(k, a) = 1  iff  (k*a mod p-1) + (k*(p-1)/2 mod p-1) >= p-1,

i.e. iff adding the two character angles wraps past a full turn.  The
column lattice modulo the all-ones vector is the character lattice of the
identity component of the Sato-Tate group; kernel vectors of the matrix
are candidate multiplicative relations among the Frobenius characters and
are confirmed exactly in Q(zeta_{p-1}) (in practice inside the much
smaller subfield actually containing the Jacobi sums).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .charsums import jacobi_sum_compact
from .cyclo import CycloElt, conductor_join, is_root_of_unity
from .errors import NoColumnsError, NotInKernelError
from .ffield import PrimeField, make_field
from .intlinalg import kernel_basis, matvec, rank, snf_invariant_factors
from .pointcount import ADDITIVE, Contribution, contributing_ms


def family_genus(family: str, d: int) -> int:
    return (d - 1) // 2


@dataclass(frozen=True)
class StColumns:
    """Carry-matrix columns: contributing exponents minus the quadratic one."""

    columns: tuple[Contribution, ...]
    is_generic: bool


def st_columns(p: int, d: int, family: str) -> StColumns:
    """Contributing exponents with a = (p-1)/2 removed.

    The removed column's character times phi is trivial, so its Jacobi sum
    degenerates and carries no torus data.  The prime is generic exactly
    when 2*genus columns remain.
    """
    half = (p - 1) // 2
    cols = tuple(
        e for e in contributing_ms(p, d, family).entries if e.exponent != half
    )
    return StColumns(columns=cols, is_generic=len(cols) == 2 * family_genus(family, d))


def carry(k: int, a: int, n: int) -> int:
    """1 iff the angles of T^a and phi at embedding k sum to at least 2*pi."""
    return 1 if (k * a) % n + (k * (n // 2)) % n >= n else 0


@dataclass(frozen=True)
class CarryMatrix:
    p: int
    d: int
    family: str
    rows: tuple[int, ...]  # units mod p-1, ascending
    cols: tuple[Contribution, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return self.p - 1

    @property
    def is_generic(self) -> bool:
        return len(self.cols) == 2 * family_genus(self.family, self.d)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def grid(self) -> str:
        return "\n".join(" ".join(str(e) for e in row) for row in self.entries)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "family": self.family,
            "rows": list(self.rows),
            "columns": [{"index": c.index, "exponent": c.exponent} for c in self.cols],
            "entries": [list(r) for r in self.entries],
            "generic": self.is_generic,
        }


def build_matrix(p: int, d: int, family: str = ADDITIVE) -> CarryMatrix:
    """Carry matrix at p; raises NoColumnsError when no character contributes."""
    n = p - 1
    cols = st_columns(p, d, family).columns
    if not cols:
        raise NoColumnsError(f"no contributing characters for d={d} at p={p}")
    units = tuple(k for k in range(1, n) if math.gcd(k, n) == 1)
    entries = tuple(
        tuple(carry(k, c.exponent, n) for c in cols) for k in units
    )
    return CarryMatrix(p=p, d=d, family=family, rows=units, cols=cols, entries=entries)


def validate_matrix(mat: CarryMatrix) -> list[str]:
    """Names of violated structural checks (expected empty).

    Checks: every row and column is half zeros / half ones; conjugate rows
    k and p-1-k are complementary; the simultaneous Galois action on rows
    and columns fixes the table.
    """
    violations = []
    n = mat.n
    nrows, ncols = len(mat.rows), len(mat.cols)
    if any(sum(row) * 2 != ncols for row in mat.entries):
        violations.append("row_balance")
    if any(sum(row[j] for row in mat.entries) * 2 != nrows for j in range(ncols)):
        violations.append("column_balance")
    row_of = {k: i for i, k in enumerate(mat.rows)}
    if any(
        mat.entries[row_of[n - k]][j] != 1 - mat.entries[i][j]
        for i, k in enumerate(mat.rows)
        for j in range(ncols)
    ):
        violations.append("conjugate_complement")
    col_of = {c.exponent: j for j, c in enumerate(mat.cols)}
    galois_ok = True
    for u in mat.rows:
        u_inv = pow(u, -1, n)
        for i, k in enumerate(mat.rows):
            for j, c in enumerate(mat.cols):
                target = col_of.get((u_inv * c.exponent) % n)
                if target is None:
                    galois_ok = False
                    break
                if mat.entries[row_of[(k * u) % n]][target] != mat.entries[i][j]:
                    galois_ok = False
                    break
            if not galois_ok:
                break
        if not galois_ok:
            break
    if not galois_ok:
        violations.append("galois_stability")
    return violations


@dataclass(frozen=True)
class KernelLattice:
    """Saturated right kernel of a carry matrix, in canonical HNF form."""

    basis: tuple[tuple[int, ...], ...]
    rank: int
    saturated: bool

    def to_list(self) -> list[list[int]]:
        return [list(v) for v in self.basis]


def right_kernel(mat: CarryMatrix) -> KernelLattice:
    rows = [list(r) for r in mat.entries]
    basis = kernel_basis(rows)
    sat = all(f == 1 for f in snf_invariant_factors(basis)) if basis else True
    expected = len(mat.cols) - rank(rows)
    assert len(basis) == expected
    return KernelLattice(
        basis=tuple(tuple(v) for v in basis), rank=len(basis), saturated=sat
    )


@dataclass(frozen=True)
class RelationResult:
    """Outcome of the exact product check on one kernel vector."""

    kind: str  # "exact" | "torsion" | "fail"
    order: int | None = None

    @property
    def ok(self) -> bool:
        return self.kind in ("exact", "torsion")


def frobenius_factor(fld: PrimeField, a: int, c) -> CycloElt:
    """T^a(-c) * phi(c) * J(T^a, phi), in its minimal cyclotomic field.

    This is the exact term the point-count formula attaches to column a,
    i.e. (minus) a Frobenius eigenvalue of the curve at p.
    """
    n = fld.n
    half = n // 2
    cp = fld.reduce(c)
    if cp == 0:
        raise ZeroDivisionError(f"c = {c} vanishes mod {fld.p}")
    j = jacobi_sum_compact(fld, a, half)
    g = math.gcd(a % n, half)
    shift = (a * fld.dlog_of(-cp) + half * fld.dlog_of(cp)) % n
    return CycloElt.zeta_pow(j.n, (shift // g) % j.n) * j


def verify_relation(
    fld: PrimeField, mat: CarryMatrix, v, c=Fraction(1)
) -> RelationResult:
    """Classify a kernel vector as an exact or finite-order character relation.

    Computes W = prod_a (T^a(-c) * phi(c) * J(T^a, phi))^(v_a) exactly and
    tests whether W is 1 (exact relation) or a root of unity of some least
    order N dividing lcm(2, p-1) (relation up to torsion).  Anything else
    is a failure, which the torsion argument for these Frobenius characters
    says should never happen on genuine kernel vectors.

    Inverses never need a polynomial gcd: every factor satisfies
    w * conj(w) = p, so w^-1 = conj(w)/p.
    """
    v = [int(x) for x in v]
    if len(v) != len(mat.cols):
        raise NotInKernelError("vector length does not match the column count")
    if any(x != 0 for x in matvec(mat.entries, v)):
        raise NotInKernelError(f"{v} is not in the kernel of the carry matrix")
    if all(x == 0 for x in v):
        return RelationResult(kind="exact", order=1)
    factors = {
        col.exponent: frobenius_factor(fld, col.exponent, c)
        for col, coeff in zip(mat.cols, v)
        if coeff != 0
    }
    conductor = conductor_join([w.n for w in factors.values()] + [2])
    numerator = CycloElt.one(conductor)
    p_power = 0
    for col, coeff in zip(mat.cols, v):
        if coeff == 0:
            continue
        w = factors[col.exponent].lift(conductor)
        if coeff > 0:
            numerator = numerator * w**coeff
        else:
            wbar = w.conj()
            assert w * wbar == fld.p
            numerator = numerator * wbar ** (-coeff)
            p_power += -coeff
    value = numerator / Fraction(fld.p) ** p_power if p_power else numerator
    if value == 1:
        return RelationResult(kind="exact", order=1)
    order = is_root_of_unity(value)
    if order is None:
        return RelationResult(kind="fail", order=None)
    return RelationResult(kind="torsion", order=order)


def relation_report(
    p: int, d: int, family: str, c=Fraction(1)
) -> tuple[CarryMatrix, KernelLattice, list[RelationResult]]:
    """Matrix, kernel and per-basis-vector relation classification at p."""
    mat = build_matrix(p, d, family)
    kern = right_kernel(mat)
    fld = make_field(p)
    results = [verify_relation(fld, mat, vec, c) for vec in kern.basis]
    return mat, kern, results
