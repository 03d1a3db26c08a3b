"""Exact linear algebra over the integers and rationals.

Everything here runs on unbounded Python integers or fractions.Fraction;
no floating point is used anywhere.  Matrices are immutable tuples of
tuples of rows; helpers accept any nested sequence and normalize.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

IntMatrix = tuple[tuple[int, ...], ...]


def freeze(rows) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b):
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(m, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def det(m) -> int:
    """Determinant of an integer matrix, fraction-free (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithForm:
    """Decomposition D = U * A * V with U, V unimodular.

    diag holds the nonnegative diagonal of D, with the divisibility chain
    d[i] | d[i+1]; zeros (if any) come last.  vinv is V^{-1}, kept so that
    row-space computations need no separate inversion step.
    """

    diag: tuple[int, ...]
    u: IntMatrix
    v: IntMatrix
    vinv: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diag if d != 0)


def smith_normal_form(mat) -> SmithForm:
    """Smith normal form via row/column reduction.

    Pivot rule: smallest nonzero absolute value in the remaining block,
    ties broken by position, so the output is deterministic.
    """
    a = [list(row) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]
    vinv = [list(r) for r in identity(cols)]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def row_add(i, j, q):
        # row_i += q * row_j
        a[i] = [x + q * y for x, y in zip(a[i], a[j])]
        u[i] = [x + q * y for x, y in zip(u[i], u[j])]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]
        vinv[i], vinv[j] = vinv[j], vinv[i]

    def col_add(j, k, q):
        # col_j += q * col_k; V^{-1} tracks the inverse op on rows
        for r in a:
            r[j] += q * r[k]
        for r in v:
            r[j] += q * r[k]
        vinv[k] = [x - q * y for x, y in zip(vinv[k], vinv[j])]

    def pick_pivot(t):
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        return best

    t = 0
    while t < min(rows, cols):
        pos = pick_pivot(t)
        if pos is None:
            break
        i, j = pos
        if i != t:
            row_swap(t, i)
        if j != t:
            col_swap(t, j)
        if a[t][t] < 0:
            row_neg(t)
        # clear row and column t; remainders shrink the pivot, so this loop
        # terminates by infinite descent on |a[t][t]|
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    row_add(i, t, -q)
                    if a[i][t] != 0:
                        row_swap(t, i)
                        if a[t][t] < 0:
                            row_neg(t)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    col_add(j, t, -q)
                    if a[t][j] != 0:
                        col_swap(t, j)
                        if a[t][t] < 0:
                            row_neg(t)
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the block for the chain property
            offender = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, 1)
        t += 1

    diag = tuple(a[i][i] for i in range(min(rows, cols)))
    return SmithForm(diag=diag, u=freeze(u), v=freeze(v), vinv=freeze(vinv))


def hermite_row_basis(mat) -> IntMatrix:
    """Row-style Hermite normal form of the Z-rowspan (canonical basis).

    Pivots positive, entries above a pivot reduced into [0, pivot); zero
    rows dropped.  The HNF is the unique canonical basis of the span, so
    any two bases of the same lattice map to identical output.
    """
    rows = [list(r) for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    top = 0
    for col in range(ncols):
        piv = None
        for i in range(top, nrows):
            if rows[i][col] != 0:
                if piv is None:
                    piv = i
                    rows[top], rows[piv] = rows[piv], rows[top]
                    piv = top
                else:
                    a, b = rows[piv][col], rows[i][col]
                    g, x, y = _xgcd(a, b)
                    p, q = a // g, b // g
                    new_piv = [x * u + y * v for u, v in zip(rows[piv], rows[i])]
                    rows[i] = [-q * u + p * v for u, v in zip(rows[piv], rows[i])]
                    rows[piv] = new_piv
        if piv is None:
            continue
        if rows[piv][col] < 0:
            rows[piv] = [-x for x in rows[piv]]
        for i in range(top):
            q = rows[i][col] // rows[piv][col]
            if q:
                rows[i] = [u - q * v for u, v in zip(rows[i], rows[piv])]
        top += 1
    return tuple(tuple(r) for r in rows[:top] if any(r))


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def kernel(mat) -> IntMatrix:
    """Canonical basis rows for {x : mat @ x = 0} over Z; always saturated."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if rows == 0:
        return identity(cols)
    s = smith_normal_form(mat)
    free = [i for i in range(cols) if i >= len(s.diag) or s.diag[i] == 0]
    raw = tuple(tuple(s.v[r][i] for r in range(cols)) for i in free)
    return hermite_row_basis(raw)


def row_saturation(mat) -> IntMatrix:
    """Canonical basis rows of (Q-rowspan of mat) intersected with Z^n.

    Requires full row rank; the first rank rows of V^{-1} span the result.
    """
    s = smith_normal_form(mat)
    r = s.rank
    if r != len(mat):
        raise ValueError("rows are linearly dependent")
    return hermite_row_basis(tuple(s.vinv[i] for i in range(r)))


def row_span_basis(mat) -> IntMatrix:
    """Canonical basis rows of the Z-span of the given rows (not saturated)."""
    return hermite_row_basis(mat)


def rank(mat) -> int:
    if not mat:
        return 0
    return smith_normal_form(mat).rank


def solve_left(basis, targets):
    """Solve X * basis = targets over Q, or None if some row is outside the span.

    basis rows must be linearly independent.  Returns a tuple of Fraction
    rows, one per target row.
    """
    k = len(basis)
    n = len(basis[0]) if k else 0
    # Gaussian elimination on basis^T with all targets^T as right-hand sides
    aug = [[Fraction(basis[i][r]) for i in range(k)] + [Fraction(t[r]) for t in targets]
           for r in range(n)]
    piv_cols = []
    row = 0
    for col in range(k):
        sel = None
        for i in range(row, n):
            if aug[i][col] != 0:
                sel = i
                break
        if sel is None:
            raise ValueError("basis rows are linearly dependent")
        aug[row], aug[sel] = aug[sel], aug[row]
        inv = 1 / aug[row][col]
        aug[row] = [x * inv for x in aug[row]]
        for i in range(n):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        piv_cols.append(col)
        row += 1
    # consistency: rows below the pivots must have zero right-hand side
    for i in range(row, n):
        if any(aug[i][k + j] != 0 for j in range(len(targets))):
            return None
    sol = []
    for j in range(len(targets)):
        sol.append(tuple(aug[r][k + j] for r in range(k)))
    return tuple(sol)


def congruence_signature(gram):
    """Signs of a rational congruence diagonalization: (pos, neg, zero).

    Exact symmetric Gauss reduction over Fraction; the classical trick of
    adding row+column j into i handles a zero diagonal with a nonzero
    off-diagonal entry.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    alive = list(range(n))
    pos = neg = 0
    while alive:
        k = next((i for i in alive if a[i][i] != 0), None)
        if k is None:
            pair = None
            for i in alive:
                for j in alive:
                    if i != j and a[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                return pos, neg, len(alive)
            i, j = pair
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            k = i
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        alive.remove(k)
        for i in alive:
            if a[i][k] != 0:
                f = a[i][k] / d
                for t in range(n):
                    a[i][t] -= f * a[k][t]
                for t in range(n):
                    a[t][i] -= f * a[t][k]
    return pos, neg, 0


def content(rows) -> int:
    """gcd of all entries."""
    g = 0
    for row in rows:
        for x in row:
            g = gcd(g, x)
    return g
