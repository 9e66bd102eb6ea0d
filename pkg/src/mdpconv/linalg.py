"""Dense linear algebra over GF(q) on row-major lists of encoded ints.

All routines are exact.  Prime fields take an inlined ``% p`` path, which is
where nearly all of the desk-scale work happens.
"""

from __future__ import annotations

from .finite_field import GF

Matrix = list[list[int]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(size: int) -> Matrix:
    return [[int(i == j) for j in range(size)] for i in range(size)]


def copy(A: Matrix) -> Matrix:
    return [list(row) for row in A]


def shape(A: Matrix) -> tuple[int, int]:
    return len(A), (len(A[0]) if A else 0)


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def submatrix(A: Matrix, rows, cols) -> Matrix:
    return [[A[i][j] for j in cols] for i in rows]


def is_zero(A: Matrix) -> bool:
    return all(x == 0 for row in A for x in row)


def matmul(field: GF, A: Matrix, B: Matrix) -> Matrix:
    n, inner = shape(A)
    inner2, m = len(B), (len(B[0]) if B else 0)
    if inner != inner2:
        raise ValueError(f"shape mismatch {shape(A)} x {(inner2, m)}")
    out = zeros(n, m)
    if field.prime:
        p = field.p
        for i in range(n):
            row = out[i]
            for t, a in enumerate(A[i]):
                if a:
                    for j, b in enumerate(B[t]):
                        if b:
                            row[j] += a * b
            out[i] = [x % p for x in row]
        return out
    add, mul = field.add, field.mul
    for i in range(n):
        row = out[i]
        for t, a in enumerate(A[i]):
            if a:
                for j, b in enumerate(B[t]):
                    if b:
                        row[j] = add(row[j], mul(a, b))
    return out


def row_echelon(field: GF, A: Matrix, pivot_cols: int | None = None, reduced: bool = True):
    """Gauss-Jordan elimination.

    Returns ``(R, pivots)`` where ``R`` is the (reduced) echelon form with
    unit pivots and ``pivots`` lists pivot column indices.  Only the first
    ``pivot_cols`` columns are eligible as pivots; row operations still act
    on the full width, so augmented systems can be solved in place.
    """
    R = copy(A)
    nrows, ncols = shape(R)
    if pivot_cols is None:
        pivot_cols = ncols
    pivots: list[int] = []
    r = 0
    prime = field.prime
    p = field.p
    for c in range(pivot_cols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = field.inv(R[r][c])
        if prime:
            prow = [(x * inv) % p for x in R[r]]
        else:
            prow = [field.mul(x, inv) for x in R[r]]
        R[r] = prow
        targets = range(nrows) if reduced else range(r + 1, nrows)
        for i in targets:
            if i == r:
                continue
            f = R[i][c]
            if not f:
                continue
            row = R[i]
            if prime:
                R[i] = [(x - f * y) % p for x, y in zip(row, prow)]
            else:
                R[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(row, prow)]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(field: GF, A: Matrix) -> int:
    if not A or not A[0]:
        return 0
    return len(row_echelon(field, A, reduced=False)[1])


def det(field: GF, A: Matrix) -> int:
    n, m = shape(A)
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    R = copy(A)
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if R[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            R[c], R[piv] = R[piv], R[c]
            result = field.neg(result)
        pivot = R[c][c]
        result = field.mul(result, pivot)
        inv = field.inv(pivot)
        for i in range(c + 1, n):
            f = R[i][c]
            if f:
                f = field.mul(f, inv)
                R[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(R[i], R[c])]
    return result


def solve(field: GF, A: Matrix, B: Matrix) -> Matrix | None:
    """One solution ``X`` of ``A X = B`` (free variables set to zero), or None."""
    nrows, ncols = shape(A)
    if len(B) != nrows:
        raise ValueError("right-hand side has the wrong number of rows")
    nb = len(B[0]) if B else 0
    aug = [list(A[i]) + list(B[i]) for i in range(nrows)]
    R, pivots = row_echelon(field, aug, pivot_cols=ncols)
    r = len(pivots)
    for i in range(r, nrows):
        if any(R[i][ncols:]):
            return None
    X = zeros(ncols, nb)
    for i, c in enumerate(pivots):
        X[c] = list(R[i][ncols:])
    return X


def nullspace(field: GF, A: Matrix) -> Matrix:
    """Basis (as rows) of the right kernel ``{x : A x = 0}``."""
    nrows, ncols = shape(A)
    R, pivots = row_echelon(field, A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for i, c in enumerate(pivots):
            v[c] = field.neg(R[i][fcol])
        basis.append(v)
    return basis


def left_nullspace(field: GF, A: Matrix) -> Matrix:
    """Basis (as rows) of ``{y : y A = 0}``."""
    return nullspace(field, transpose(A)) if A else []
