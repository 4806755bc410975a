"""Exact linear algebra over Z and Q.

Matrices are lists of rows of Python ints (arbitrary precision); vectors are
sequences. Row convention throughout the package: a lattice is the set of
integer combinations of the rows of its basis matrix, and a linear map acts
on a row vector y as y @ M.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vec_mat(v, a):
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0])))


def mat_eq(a, b):
    return [list(r) for r in a] == [list(r) for r in b]


def copy_rows(a):
    return [list(r) for r in a]


def is_zero_matrix(a):
    return all(all(x == 0 for x in row) for row in a)


def bareiss_det(a):
    """Fraction-free determinant of a square integer matrix."""
    n = len(a)
    if n == 0:
        return 1
    m = copy_rows(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(a):
    """Return (d, u, v) with diag(d) = u @ a @ v, u and v unimodular.

    d is the list of diagonal entries (length min(m, n)), nonnegative, with
    d[i] | d[i+1]. u and v are accumulated from elementary row/column
    operations so they are unimodular by construction.
    """
    m = copy_rows(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def row_op(i, j, q):  # row_i -= q*row_j
        m[i] = [x - q * y for x, y in zip(m[i], m[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q*col_j
        for r in m:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    t = 0
    while t < rows and t < cols:
        # locate a pivot of minimal absolute value in the trailing block
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    q = m[i][t] // m[t][t]
                    row_op(i, t, q)
                    if m[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    q = m[t][j] // m[t][t]
                    col_op(j, t, q)
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        t += 1

    # positive diagonal
    for i in range(min(rows, cols)):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            u[i] = [-x for x in u[i]]

    # enforce divisibility chain
    k = min(rows, cols)
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a_, b_ = m[i][i], m[i + 1][i + 1]
            if b_ % a_ if a_ else b_:
                if a_ and b_ % a_ == 0:
                    continue
                # fold entry (i+1, i+1) into column i and re-reduce the 2x2 block
                for r in m:
                    r[i] += r[i + 1]
                for r in v:
                    r[i] += r[i + 1]
                # local re-diagonalization of rows/cols i, i+1
                sub_reduce(m, u, v, i)
                changed = True
    d = [m[i][i] for i in range(k)]
    return d, u, v


def sub_reduce(m, u, v, t):
    """Re-diagonalize the trailing block starting at t after a divisibility fold."""
    rows, cols = len(m), len(m[0])

    def row_op(i, j, q):
        m[i] = [x - q * y for x, y in zip(m[i], m[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):
        for r in m:
            r[i] -= q * r[j]
        for r in v:
            r[i] -= q * r[j]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    tt = t
    while tt < rows and tt < cols:
        piv = None
        best = None
        for i in range(tt, rows):
            for j in range(tt, cols):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(tt, piv[0])
        swap_cols(tt, piv[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(tt + 1, rows):
                if m[i][tt] != 0:
                    q = m[i][tt] // m[tt][tt]
                    row_op(i, tt, q)
                    if m[i][tt] != 0:
                        swap_rows(tt, i)
                        dirty = True
            for j in range(tt + 1, cols):
                if m[tt][j] != 0:
                    q = m[tt][j] // m[tt][tt]
                    col_op(j, tt, q)
                    if m[tt][j] != 0:
                        swap_cols(tt, j)
                        dirty = True
        if m[tt][tt] < 0:
            m[tt] = [-x for x in m[tt]]
            u[tt] = [-x for x in u[tt]]
        tt += 1


def snf_diagonal(a):
    return smith_normal_form(a)[0]


def hnf_rows(a):
    """Canonical row-style Hermite normal form of the row space of a.

    Pivots positive, entries above a pivot reduced to [0, pivot). Zero rows
    dropped, so equal row spaces give equal HNFs.
    """
    m = [list(r) for r in a if any(r)]
    if not m:
        return []
    cols = len(m[0])
    out = []
    col = 0
    while m and col < cols:
        rows_with = [r for r in m if r[col] != 0]
        if not rows_with:
            col += 1
            continue
        # reduce to a single nonzero entry in this column via gcd steps
        while True:
            rows_with.sort(key=lambda r: abs(r[col]))
            p = rows_with[0]
            done = True
            for r in rows_with[1:]:
                q = r[col] // p[col]
                for j in range(cols):
                    r[j] -= q * p[j]
                if r[col] != 0:
                    done = False
            rows_with = [r for r in rows_with if r[col] != 0]
            if done or len(rows_with) == 1:
                break
        p = rows_with[0]
        if p[col] < 0:
            for j in range(cols):
                p[j] = -p[j]
        m = [r for r in m if r is not p and any(r)]
        out.append(p)
        col += 1
    # reduce above pivots, in increasing pivot order so earlier columns stay reduced
    for i in range(len(out)):
        pcol = next(j for j, x in enumerate(out[i]) if x != 0)
        for k in range(i):
            q = out[k][pcol] // out[i][pcol]
            if q:
                out[k] = [x - q * y for x, y in zip(out[k], out[i])]
    return out


def left_kernel(a):
    """Basis (rows) of {x : x @ a = 0} over Z."""
    d, u, v = smith_normal_form(a)
    rows = len(a)
    rank = sum(1 for x in d if x != 0)
    return [u[i] for i in range(rank, rows)]


def solve_left(a, b):
    """One integer solution x of x @ a = b, or None."""
    d, u, v = smith_normal_form(a)
    rows = len(a)
    cols = len(a[0]) if rows else len(b)
    bv = vec_mat(list(b), v)  # b @ v
    # x @ a = b  <=>  (x u^{-1}) D = b v ; z := x u^{-1}
    z = [0] * rows
    k = min(rows, cols)
    for i in range(k):
        if d[i] == 0:
            if bv[i] != 0:
                return None
        else:
            if bv[i] % d[i] != 0:
                return None
            z[i] = bv[i] // d[i]
    for i in range(k, cols):
        if bv[i] != 0:
            return None
    return vec_mat(z, u)


def int_inverse(a):
    """Inverse of a unimodular integer matrix, exact."""
    n = len(a)
    d, u, v = smith_normal_form(a)
    if any(x != 1 for x in d):
        raise ValueError("matrix is not unimodular")
    # diag = u a v = I  =>  a^{-1} = v u
    return mat_mul(v, u)


def frac_solve_left(a, b):
    """Solve x @ a = b over Q (a square nonsingular); returns tuple of Fractions."""
    n = len(a)
    # transpose to solve a^T x^T = b^T by Gaussian elimination
    m = [[Fraction(a[i][j]) for i in range(n)] + [Fraction(b[j])] for j in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[i][n] for i in range(n))


def frac_vec_mat(v, a):
    return tuple(sum(Fraction(v[i]) * a[i][j] for i in range(len(v))) for j in range(len(a[0])))


def frac_rank(rows):
    """Rank of a matrix with Fraction (or int) entries."""
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    col = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        m[rank] = [x / pv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank
