"""Small exact linear algebra helpers over a scalar domain.

Everything here is plain Gaussian elimination on lists of lists.  The
matrices involved are at most 5x5, so there is no pivoting strategy beyond
"first nonzero".
"""

from __future__ import annotations


def mat_copy(m):
    return [list(row) for row in m]


def rref(m, domain):
    """Reduced row echelon form.  Returns (rref_matrix, pivot_columns)."""
    a = mat_copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if a[i][c] != domain.zero:
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = domain.one / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != domain.zero:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def rank(m, domain) -> int:
    if not m:
        return 0
    _, pivots = rref(m, domain)
    return len(pivots)


def kernel_basis(m, domain):
    """Basis of the right kernel, one vector per free column.

    The basis is the standard one read off the RREF: free column j yields the
    vector with 1 in slot j and the negated pivot-row entries elsewhere, so
    the result is deterministic.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a, pivots = rref(m, domain)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [domain.zero] * cols
        v[fc] = domain.one
        for r, pc in enumerate(pivots):
            v[pc] = -a[r][fc]
        basis.append(v)
    return basis


def solve(m, rhs, domain):
    """One solution of m x = rhs, or None if inconsistent."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    aug = [list(m[i]) + [rhs[i]] for i in range(rows)]
    a, pivots = rref(aug, domain)
    if cols in pivots:
        return None
    x = [domain.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = a[r][cols]
    return x


def det_cofactor(m):
    """Determinant by cofactor expansion along the first row.

    Works over any commutative coefficient type (scalars or polynomials);
    intended for n <= 5.
    """
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    total = None
    for j in range(n):
        sub = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * det_cofactor(sub)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total
