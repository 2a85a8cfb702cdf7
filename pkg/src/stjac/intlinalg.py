"""Exact integer linear algebra on small dense matrices.

Everything here works on plain lists of Python ints, so there is no
overflow concern; matrices stay at desk scale (tens of rows/columns).
"""

from __future__ import annotations


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hnf_rows(rows) -> list[list[int]]:
    """Row-style Hermite normal form of an integer matrix.

    Returns the nonzero rows: pivots positive, each entry above a pivot
    reduced into [0, pivot).  The result is the canonical basis of the
    row lattice, so two lattices are equal iff their HNFs are equal.
    """
    mat = [list(map(int, r)) for r in rows]
    mat = [r for r in mat if any(r)]
    if not mat:
        return []
    m, n = len(mat), len(mat[0])
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        for i in range(r + 1, m):
            if mat[i][col]:
                g, s, t = xgcd(mat[r][col], mat[i][col])
                u, v = mat[r][col] // g, mat[i][col] // g
                mat[r], mat[i] = (
                    [s * x + t * y for x, y in zip(mat[r], mat[i])],
                    [-v * x + u * y for x, y in zip(mat[r], mat[i])],
                )
        if mat[r][col] < 0:
            mat[r] = [-x for x in mat[r]]
        for i in range(r):
            q = mat[i][col] // mat[r][col]
            if q:
                mat[i] = [x - q * y for x, y in zip(mat[i], mat[r])]
        r += 1
        if r == m:
            break
    return [row for row in mat[:r] if any(row)]


def rank(rows) -> int:
    return len(hnf_rows(rows))


def kernel_basis(rows) -> list[list[int]]:
    """Canonical (HNF) basis of the saturated right kernel {v : rows @ v = 0}.

    Computed by a unimodular reduction of the transpose, which yields the
    full integer kernel directly, i.e. Z^n / kernel is torsion-free.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    a = [[int(rows[i][j]) for i in range(m)] for j in range(n)]
    u = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, n) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, n):
            if a[i][col]:
                g, s, t = xgcd(a[r][col], a[i][col])
                q1, q2 = a[r][col] // g, a[i][col] // g
                a[r], a[i] = (
                    [s * x + t * y for x, y in zip(a[r], a[i])],
                    [-q2 * x + q1 * y for x, y in zip(a[r], a[i])],
                )
                u[r], u[i] = (
                    [s * x + t * y for x, y in zip(u[r], u[i])],
                    [-q2 * x + q1 * y for x, y in zip(u[r], u[i])],
                )
        r += 1
        if r == n:
            break
    return hnf_rows(u[r:])


def snf_invariant_factors(rows) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix."""
    mat = [list(map(int, r)) for r in rows]
    if not mat or not mat[0]:
        return []
    m, n = len(mat), len(mat[0])
    factors = []
    t = 0
    while t < min(m, n):
        pos = min(
            (
                (abs(mat[i][j]), i, j)
                for i in range(t, m)
                for j in range(t, n)
                if mat[i][j]
            ),
            default=None,
        )
        if pos is None:
            break
        _, i0, j0 = pos
        mat[t], mat[i0] = mat[i0], mat[t]
        for row in mat:
            row[t], row[j0] = row[j0], row[t]
        while True:
            # clear column t, then row t; restart whenever a remainder survives
            dirty = False
            for i in range(t + 1, m):
                if mat[i][t]:
                    q = mat[i][t] // mat[t][t]
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[t])]
                    if mat[i][t]:
                        mat[t], mat[i] = mat[i], mat[t]
                        dirty = True
            for j in range(t + 1, n):
                if mat[t][j]:
                    q = mat[t][j] // mat[t][t]
                    for i in range(t, m):
                        mat[i][j] -= q * mat[i][t]
                    if mat[t][j]:
                        for i in range(t, m):
                            mat[i][t], mat[i][j] = mat[i][j], mat[i][t]
                        dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry
            bad = next(
                (
                    (i, j)
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if mat[i][j] % mat[t][t]
                ),
                None,
            )
            if bad is None:
                break
            mat[t] = [x + y for x, y in zip(mat[t], mat[bad[0]])]
        factors.append(abs(mat[t][t]))
        t += 1
    return factors


def matvec(rows, v) -> list[int]:
    return [sum(int(x) * int(y) for x, y in zip(row, v)) for row in rows]
