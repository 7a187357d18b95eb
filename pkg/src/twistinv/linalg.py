"""Exact linear algebra over Q and Z.

Matrices are lists of rows; entries are Fractions (or ints for the integer
routines). Everything here is dense: the matrices that reach this module are
single weight spaces or small stacked kernels.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (reduced rows, pivot columns)."""
    m = [list(r) for r in rows]
    if ncols is None:
        ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        p = None
        for k in range(r, len(m)):
            if m[k][c]:
                p = k
                break
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pr = m[r]
        inv = 1 / Fraction(pr[c])
        if inv != 1:
            pr = [x * inv for x in pr]
            m[r] = pr
        for k in range(len(m)):
            if k != r and m[k][c]:
                f = m[k][c]
                row = m[k]
                m[k] = [a - f * b if b else a for a, b in zip(row, pr)]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, pc in zip(red, pivots):
            if row[free]:
                v[pc] = -row[free]
        basis.append(v)
    return basis


def row_space(vectors, ncols):
    """Echelon basis of the span of the given vectors."""
    if not vectors:
        return []
    return rref(vectors, ncols)[0]


def solve(rows, rhs):
    """One solution x of rows . x = rhs, or None when inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [Fraction(b)] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug, n + 1)
    if pivots and pivots[-1] == n:
        return None
    x = [ZERO] * n
    for row, pc in zip(red, pivots):
        x[pc] = row[n]
    return x


def in_span(basis, v, ncols):
    if not any(v):
        return True
    return rank(list(basis) + [v], ncols) == rank(basis, ncols)


def det(rows):
    m = [list(map(Fraction, r)) for r in rows]
    n = len(m)
    d = ONE
    for c in range(n):
        p = next((k for k in range(c, n) if m[k][c]), None)
        if p is None:
            return ZERO
        if p != c:
            m[c], m[p] = m[p], m[c]
            d = -d
        d *= m[c][c]
        inv = 1 / m[c][c]
        for k in range(c + 1, n):
            if m[k][c]:
                f = m[k][c] * inv
                m[k] = [a - f * b for a, b in zip(m[k], m[c])]
    return d


def inverse(rows):
    n = len(rows)
    aug = [list(map(Fraction, r)) + [ONE if i == j else ZERO for j in range(n)]
           for i, r in enumerate(rows)]
    red, pivots = rref(aug, 2 * n)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), ZERO) for col in bt] for row in a]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


# -- integer lattices ------------------------------------------------------

def smith_normal_form(mat):
    """Smith normal form of an integer matrix.

    Returns (D, U, V) with U * mat * V = D, U and V unimodular and D diagonal
    with d_1 | d_2 | ... (nonnegative).
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [list(map(int, r)) for r in mat]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(x, i, j):
        x[i], x[j] = x[j], x[i]

    def swap_cols(x, i, j):
        for row in x:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        nz = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(a, t, pi)
        swap_rows(u, t, pi)
        swap_cols(a, t, pj)
        swap_cols(v, t, pj)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
                if a[i][t]:
                    swap_rows(a, t, i)
                    swap_rows(u, t, i)
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                    for row in v:
                        row[j] -= q * row[t]
                if a[t][j]:
                    swap_cols(a, t, j)
                    swap_cols(v, t, j)
                    done = False
            if done:
                # enforce divisibility of the remaining block
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % a[t][t]:
                            a[t] = [x + y for x, y in zip(a[t], a[i])]
                            u[t] = [x + y for x, y in zip(u[t], u[i])]
                            done = False
                            break
                    if not done:
                        break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return a, u, v
