"""Polynomial matrices over GF(q).

Entry access (``M[i, j]``, ``M.row(i)``) is 0-based like any Python
container.  Index *sets* handed to :func:`minor` and the row subsets used by
the stacked-matrix code are 1-based, following the usual ``t_1 < t_2 < ...``
notation for selecting columns of a matrix.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .finite_field import GF
from .poly import NEG_INF, Poly, poly_gcd

METHODS = ("minor_gcd", "smith", "right_inverse")
LAPLACE_MAX = 6


class RankDeficientError(ValueError):
    """The matrix does not have full row rank over the rational functions."""


class RightInverseBoundWarning(UserWarning):
    """A left prime matrix had no right inverse within the requested degree."""


class PolyMatrix:
    """Immutable ``rows x cols`` matrix of :class:`Poly` entries."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: GF, entries):
        grid = []
        for row in entries:
            out = []
            for e in row:
                if isinstance(e, Poly):
                    if e.field != field:
                        raise ValueError("entry over a different field")
                    out.append(e)
                elif isinstance(e, int):
                    out.append(Poly(field, (e,)))
                else:
                    out.append(Poly(field, e))
            grid.append(tuple(out))
        if not grid or not grid[0]:
            raise ValueError("polynomial matrices need at least one row and column")
        width = len(grid[0])
        if any(len(r) != width for r in grid):
            raise ValueError("ragged rows")
        self.field = field
        self.rows = len(grid)
        self.cols = width
        self.entries = tuple(grid)

    # -- constructors ------------------------------------------------------
    @classmethod
    def identity(cls, field: GF, size: int) -> PolyMatrix:
        one, zero = Poly.one(field), Poly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def zeros(cls, field: GF, rows: int, cols: int) -> PolyMatrix:
        zero = Poly.zero(field)
        return cls(field, [[zero] * cols for _ in range(rows)])

    @classmethod
    def from_coefficients(cls, field: GF, slices) -> PolyMatrix:
        """Assemble ``sum_i C_i z^i`` from scalar matrices ``C_0, C_1, ...``."""
        slices = list(slices)
        rows, cols = linalg.shape(slices[0])
        return cls(
            field,
            [
                [Poly._raw(field, [C[i][j] for C in slices]) for j in range(cols)]
                for i in range(rows)
            ],
        )

    # -- access --------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx) -> Poly:
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.entries[i]

    def to_lists(self) -> list[list[Poly]]:
        return [list(r) for r in self.entries]

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.entries)
        return f"PolyMatrix[{body}]"

    @property
    def degree(self):
        return max(e.degree for r in self.entries for e in r)

    def row_degree(self, i: int):
        return max(e.degree for e in self.entries[i])

    def row_degrees(self) -> list:
        return [self.row_degree(i) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(e.is_zero() for r in self.entries for e in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- algebra -----------------------------------------------------------
    def _same(self, other: PolyMatrix):
        if self.field != other.field:
            raise ValueError("matrices over different fields")

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        self._same(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            self.field,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __neg__(self) -> PolyMatrix:
        return PolyMatrix(self.field, [[-a for a in r] for r in self.entries])

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return self + (-other)

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        self._same(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = Poly.zero(self.field)
        out = []
        for r in self.entries:
            row = []
            for j in range(other.cols):
                acc = zero
                for t, a in enumerate(r):
                    if a.coeffs:
                        b = other.entries[t][j]
                        if b.coeffs:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, out)

    def scale(self, p: Poly) -> PolyMatrix:
        return PolyMatrix(self.field, [[p * a for a in r] for r in self.entries])

    @property
    def T(self) -> PolyMatrix:
        return PolyMatrix(self.field, [list(c) for c in zip(*self.entries)])

    def submatrix(self, rows, cols) -> PolyMatrix:
        return PolyMatrix(self.field, [[self.entries[i][j] for j in cols] for i in rows])

    def evaluate(self, x) -> linalg.Matrix:
        return [[e(x) for e in r] for r in self.entries]

    def coefficient(self, i: int) -> linalg.Matrix:
        return [[e.coeff(i) for e in r] for r in self.entries]

    def leading_row_matrix(self, row_degrees=None) -> linalg.Matrix:
        """Scalar matrix whose row i holds the z^(d_i) coefficients of row i."""
        if row_degrees is None:
            row_degrees = self.row_degrees()
        return [
            [e.coeff(d) if d != NEG_INF else 0 for e in r]
            for r, d in zip(self.entries, row_degrees)
        ]


def coefficient_slice(M: PolyMatrix, i: int) -> linalg.Matrix:
    """Matrix of the ``z**i`` coefficients (all zero once ``i > deg M``)."""
    if i < 0:
        raise ValueError("coefficient index must be non-negative")
    return M.coefficient(i)


# --------------------------------------------------------------------------
# determinants and minors
# --------------------------------------------------------------------------

def _det_laplace(field: GF, E) -> Poly:
    n = len(E)
    one, zero = Poly.one(field), Poly.zero(field)
    memo: dict[int, Poly] = {}

    def rec(row: int, mask: int) -> Poly:
        if row == n:
            return one
        if mask in memo:
            return memo[mask]
        total = zero
        pos = 0
        for j in range(n):
            bit = 1 << j
            if mask & bit:
                a = E[row][j]
                if a.coeffs:
                    sub = rec(row + 1, mask & ~bit)
                    if sub.coeffs:
                        term = a * sub
                        total = total - term if pos % 2 else total + term
                pos += 1
        memo[mask] = total
        return total

    return rec(0, (1 << n) - 1)


def _det_bareiss(field: GF, E) -> Poly:
    A = [list(r) for r in E]
    n = len(A)
    prev = Poly.one(field)
    negate = False
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if A[i][k].coeffs), None)
        if piv is None:
            return Poly.zero(field)
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            negate = not negate
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                A[i][j] = (akk * A[i][j] - aik * A[k][j]).exact_div(prev)
            A[i][k] = Poly.zero(field)
        prev = akk
    d = A[n - 1][n - 1]
    return -d if negate else d


def determinant(M: PolyMatrix, method: str | None = None) -> Poly:
    """Exact determinant: cofactor expansion up to 6x6, Bareiss above.

    ``method`` forces ``"laplace"`` or ``"bareiss"`` (used for cross-checks).
    """
    if not M.is_square():
        raise ValueError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    if method is None:
        method = "laplace" if M.rows <= LAPLACE_MAX else "bareiss"
    if method == "laplace":
        return _det_laplace(M.field, M.entries)
    if method == "bareiss":
        return _det_bareiss(M.field, M.entries)
    raise ValueError(f"unknown determinant method {method!r}")


def _check_index_set(idx, bound: int, what: str) -> list[int]:
    idx = list(idx)
    if any(not 1 <= i <= bound for i in idx):
        raise IndexError(f"{what} index out of range 1..{bound}: {idx}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"{what} indices must be strictly increasing: {idx}")
    return [i - 1 for i in idx]


def minor(M: PolyMatrix, row_set, col_set) -> Poly:
    """Determinant of the submatrix on 1-based ``row_set`` x ``col_set``."""
    if len(row_set) != len(col_set):
        raise ValueError("row and column index sets differ in size")
    rows = _check_index_set(row_set, M.rows, "row")
    cols = _check_index_set(col_set, M.cols, "column")
    if not rows:
        return Poly.one(M.field)
    return determinant(M.submatrix(rows, cols))


def full_size_minors(M: PolyMatrix):
    """Yield ``(col_set, minor)`` for every full-size minor of a wide matrix.

    Column sets are 1-based tuples in lexicographic order.
    """
    if M.rows > M.cols:
        raise ValueError("full-size minors need rows <= cols")
    rows = list(range(M.rows))
    for cols in combinations(range(M.cols), M.rows):
        yield tuple(c + 1 for c in cols), determinant(M.submatrix(rows, cols))


def max_minor_degree(M: PolyMatrix):
    return max(d.degree for _, d in full_size_minors(M))


def minor_gcd(M: PolyMatrix) -> Poly:
    """Monic gcd of all full-size minors (zero iff the matrix is rank deficient)."""
    g = Poly.zero(M.field)
    for _, d in full_size_minors(M):
        g = poly_gcd(g, d)
        if g.is_unit():
            break
    return g


def rank_rational(M: PolyMatrix) -> int:
    """Rank over GF(q)(z), by fraction-free (Bareiss) elimination."""
    A = M.to_lists()
    rows, cols = M.rows, M.cols
    prev = Poly.one(M.field)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if A[i][c].coeffs), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        arc = A[r][c]
        for i in range(r + 1, rows):
            aic = A[i][c]
            for j in range(c + 1, cols):
                A[i][j] = (arc * A[i][j] - aic * A[r][j]).exact_div(prev)
            A[i][c] = Poly.zero(M.field)
        prev = arc
        r += 1
    return r


def is_unimodular(M: PolyMatrix) -> bool:
    return M.is_square() and determinant(M).is_unit()


# --------------------------------------------------------------------------
# elementary-operation workspace shared by Smith / Hermite / row reduction
# --------------------------------------------------------------------------

class _Workspace:
    """Mutable matrix ``A`` with bookkeeping ``M = U A V``, ``A = Ui M Vi``."""

    def __init__(self, M: PolyMatrix, track_cols: bool = True):
        f = M.field
        self.field = f
        self.A = M.to_lists()
        self.r, self.c = M.rows, M.cols
        self.U = PolyMatrix.identity(f, self.r).to_lists()
        self.Ui = PolyMatrix.identity(f, self.r).to_lists()
        self.track_cols = track_cols
        if track_cols:
            self.V = PolyMatrix.identity(f, self.c).to_lists()
            self.Vi = PolyMatrix.identity(f, self.c).to_lists()

    # row i += q * row j
    def row_add(self, i: int, j: int, q: Poly):
        if not q.coeffs:
            return
        A, Ui, U = self.A, self.Ui, self.U
        A[i] = [a + q * b for a, b in zip(A[i], A[j])]
        Ui[i] = [a + q * b for a, b in zip(Ui[i], Ui[j])]
        for row in U:
            row[j] = row[j] - q * row[i]

    def row_swap(self, i: int, j: int):
        if i == j:
            return
        self.A[i], self.A[j] = self.A[j], self.A[i]
        self.Ui[i], self.Ui[j] = self.Ui[j], self.Ui[i]
        for row in self.U:
            row[i], row[j] = row[j], row[i]

    def row_scale(self, i: int, u: int):
        f = self.field
        self.A[i] = [a.scale(u) for a in self.A[i]]
        self.Ui[i] = [a.scale(u) for a in self.Ui[i]]
        inv = f.inv(u)
        for row in self.U:
            row[i] = row[i].scale(inv)

    # col j += q * col i
    def col_add(self, j: int, i: int, q: Poly):
        if not q.coeffs:
            return
        for row in self.A:
            row[j] = row[j] + q * row[i]
        for row in self.Vi:
            row[j] = row[j] + q * row[i]
        V = self.V
        V[i] = [a - q * b for a, b in zip(V[i], V[j])]

    def col_swap(self, i: int, j: int):
        if i == j:
            return
        for row in self.A:
            row[i], row[j] = row[j], row[i]
        for row in self.Vi:
            row[i], row[j] = row[j], row[i]
        self.V[i], self.V[j] = self.V[j], self.V[i]

    def matrix(self, grid) -> PolyMatrix:
        return PolyMatrix(self.field, grid)


# --------------------------------------------------------------------------
# Smith form
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """``M = U @ D @ V`` with unimodular ``U``, ``V`` and diagonal ``D``.

    ``U_inv`` and ``V_inv`` are the inverse transforms, so
    ``U_inv @ M @ V_inv == D``.  ``factors`` lists the ``min(rows, cols)``
    diagonal entries of ``D``; trailing zero polynomials mark rank
    deficiency.
    """

    U: PolyMatrix
    D: PolyMatrix
    V: PolyMatrix
    U_inv: PolyMatrix
    V_inv: PolyMatrix
    factors: tuple[Poly, ...]

    @property
    def rank(self) -> int:
        return sum(1 for f in self.factors if f.coeffs)


def smith(M: PolyMatrix) -> SmithDecomposition:
    """Smith normal form by elementary operations, pivoting on minimal degree."""
    ws = _Workspace(M)
    A = ws.A
    r, c = ws.r, ws.c
    for t in range(min(r, c)):
        while True:
            best = None
            for i in range(t, r):
                for j in range(t, c):
                    e = A[i][j]
                    if e.coeffs and (best is None or e.degree < best[0]):
                        best = (e.degree, i, j)
                        if best[0] == 0:
                            break
                if best is not None and best[0] == 0:
                    break
            if best is None:
                break
            _, bi, bj = best
            ws.row_swap(t, bi)
            ws.col_swap(t, bj)
            piv = A[t][t]
            clean = True
            for i in range(t + 1, r):
                if A[i][t].coeffs:
                    q, rem = divmod(A[i][t], piv)
                    ws.row_add(i, t, -q)
                    if rem.coeffs:
                        clean = False
            for j in range(t + 1, c):
                if A[t][j].coeffs:
                    q, rem = divmod(A[t][j], piv)
                    ws.col_add(j, t, -q)
                    if rem.coeffs:
                        clean = False
            if not clean:
                continue
            bad = None
            if not piv.is_unit():
                for i in range(t + 1, r):
                    for j in range(t + 1, c):
                        if A[i][j].coeffs and not piv.divides(A[i][j]):
                            bad = i
                            break
                    if bad is not None:
                        break
            if bad is None:
                break
            ws.row_add(t, bad, Poly.one(ws.field))
        if A[t][t].coeffs and A[t][t].lead != 1:
            ws.row_scale(t, ws.field.inv(A[t][t].lead))
    factors = tuple(A[i][i] for i in range(min(r, c)))
    return SmithDecomposition(
        U=ws.matrix(ws.U),
        D=ws.matrix(A),
        V=ws.matrix(ws.V),
        U_inv=ws.matrix(ws.Ui),
        V_inv=ws.matrix(ws.Vi),
        factors=factors,
    )


def invariant_factors_by_minors(M: PolyMatrix) -> list[Poly]:
    """Invariant factors as ratios of determinantal divisors.

    ``d_i`` is the monic gcd of all ``i x i`` minors and factor ``i`` is
    ``d_i / d_(i-1)``.  Exponential in the matrix size; meant as an
    independent cross-check of :func:`smith` on small inputs.
    """
    f = M.field
    prev = Poly.one(f)
    out = []
    for size in range(1, min(M.rows, M.cols) + 1):
        g = Poly.zero(f)
        for rows in combinations(range(M.rows), size):
            for cols in combinations(range(M.cols), size):
                g = poly_gcd(g, determinant(M.submatrix(rows, cols)))
        if not g.coeffs:
            out.extend([Poly.zero(f)] * (min(M.rows, M.cols) - size + 1))
            break
        out.append(g.exact_div(prev))
        prev = g
    return out


# --------------------------------------------------------------------------
# left primeness
# --------------------------------------------------------------------------

def _block_toeplitz(M: PolyMatrix, d: int) -> linalg.Matrix:
    """Coefficient matrix of ``X -> M X`` for ``deg X <= d``."""
    D = M.degree
    r, c = M.shape
    slices = [M.coefficient(i) for i in range(D + 1)]
    A = linalg.zeros(r * (D + d + 1), c * (d + 1))
    for i in range(d + 1):
        for s, C in enumerate(slices):
            t = i + s
            for a in range(r):
                A[t * r + a][i * c:(i + 1) * c] = C[a]
    return A


def _solve_right_inverse(M: PolyMatrix, d: int) -> linalg.Matrix | None:
    r = M.rows
    A = _block_toeplitz(M, d)
    B = linalg.zeros(len(A), r)
    for a in range(r):
        B[a][a] = 1
    return linalg.solve(M.field, A, B)


def right_inverse(M: PolyMatrix, max_deg: int | None = None) -> PolyMatrix | None:
    """Polynomial ``X`` of minimal degree ``<= max_deg`` with ``M @ X = I``.

    The coefficient system is solved over the field for each candidate
    degree.  Solvability is monotone in the degree (pad with zero
    coefficients), so the smallest solvable degree is located by bisection
    after a single feasibility check at ``max_deg``; the answer coincides
    with scanning ``d = 0, 1, ...`` upwards.  ``max_deg`` defaults to
    ``rows * deg(M)``.
    """
    if M.rows > M.cols:
        raise ValueError("right inverse needs rows <= cols")
    if M.is_zero():
        return None
    if max_deg is None:
        max_deg = M.rows * M.degree
    if max_deg < 0:
        raise ValueError("max_deg must be non-negative")
    if _solve_right_inverse(M, max_deg) is None:
        return None
    lo, hi = 0, max_deg
    while lo < hi:
        mid = (lo + hi) // 2
        if _solve_right_inverse(M, mid) is None:
            lo = mid + 1
        else:
            hi = mid
    Xbar = _solve_right_inverse(M, lo)
    c = M.cols
    X = PolyMatrix.from_coefficients(M.field, [Xbar[i * c:(i + 1) * c] for i in range(lo + 1)])
    if M @ X != PolyMatrix.identity(M.field, M.rows):
        raise AssertionError("right inverse failed exact verification")
    return X


def is_left_prime(M: PolyMatrix, method: str = "minor_gcd") -> bool:
    """Whether every left factor of ``M`` is unimodular.

    Raises :class:`RankDeficientError` for matrices without full row rank,
    where the question is not meaningful.
    """
    if M.rows > M.cols:
        raise ValueError("left primeness is defined for rows <= cols")
    if method == "minor_gcd":
        g = minor_gcd(M)
        if not g.coeffs:
            raise RankDeficientError("matrix is rank deficient over GF(q)(z)")
        return g.is_unit()
    if method == "smith":
        S = smith(M)
        if S.rank < M.rows:
            raise RankDeficientError("matrix is rank deficient over GF(q)(z)")
        return all(f.is_unit() for f in S.factors)
    if method == "right_inverse":
        if rank_rational(M) < M.rows:
            raise RankDeficientError("matrix is rank deficient over GF(q)(z)")
        X = right_inverse(M)
        if X is None and minor_gcd(M).is_unit():
            warnings.warn(
                f"left prime matrix has no right inverse of degree <= {M.rows * M.degree}",
                RightInverseBoundWarning,
                stacklevel=2,
            )
        return X is not None
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def left_prime_factorization(M: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix]:
    """Split ``M = F @ P`` with ``P`` left prime of the same shape as ``M``."""
    if M.rows > M.cols:
        raise ValueError("factorization needs rows <= cols")
    S = smith(M)
    r = M.rows
    if S.rank < r:
        raise RankDeficientError("matrix is rank deficient over GF(q)(z)")
    zero = Poly.zero(M.field)
    diag = PolyMatrix(M.field, [[S.factors[i] if i == j else zero for j in range(r)] for i in range(r)])
    F = S.U @ diag
    P = S.V.submatrix(range(r), range(M.cols))
    if F @ P != M:
        raise AssertionError("left prime factorization does not reproduce the input")
    return F, P


# --------------------------------------------------------------------------
# row reduction and Hermite form
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RowReducedForm:
    U: PolyMatrix
    R: PolyMatrix
    row_degrees: tuple[int, ...]
    leading_row_matrix: linalg.Matrix


def is_row_reduced(M: PolyMatrix) -> bool:
    if any(d == NEG_INF for d in M.row_degrees()):
        return False
    return linalg.rank(M.field, M.leading_row_matrix()) == M.rows


def row_reduce(M: PolyMatrix) -> RowReducedForm:
    """Unimodular ``U`` with ``U @ M`` row reduced (minimal row-degree sum).

    While the leading-row coefficient matrix is rank deficient, a left
    kernel vector of it gives a combination of z-shifted rows that cancels
    the leading terms of the highest-degree row involved; that row is
    replaced, which strictly lowers the row-degree sum.
    """
    if rank_rational(M) < M.rows:
        raise RankDeficientError("row reduction needs full row rank")
    f = M.field
    ws = _Workspace(M, track_cols=False)
    A = ws.A
    while True:
        degs = [max(e.degree for e in row) for row in A]
        lead = [[e.coeff(d) for e in row] for row, d in zip(A, degs)]
        kernel = linalg.left_nullspace(f, lead)
        if not kernel:
            break
        y = kernel[0]
        support = [i for i in range(ws.r) if y[i]]
        i0 = max(support, key=lambda i: (degs[i], -i))
        inv = f.inv(y[i0])
        # row i0 <- row i0 + sum_{i != i0} (y_i / y_i0) z^(d_i0 - d_i) row i
        for i in support:
            if i != i0:
                q = Poly.monomial(f, degs[i0] - degs[i], f.mul(y[i], inv))
                ws.row_add(i0, i, q)
    R = ws.matrix(A)
    degs = tuple(R.row_degrees())
    return RowReducedForm(
        U=ws.matrix(ws.Ui),
        R=R,
        row_degrees=degs,
        leading_row_matrix=R.leading_row_matrix(list(degs)),
    )


def hermite(M: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix]:
    """Row Hermite normal form: ``(U, H)`` with ``U`` unimodular, ``U @ M = H``.

    Pivots are monic and entries above a pivot have smaller degree, which
    makes ``H`` a canonical representative of the row module of ``M``.
    """
    ws = _Workspace(M, track_cols=False)
    A = ws.A
    r, c = ws.r, ws.c
    row = 0
    for col in range(c):
        if row == r:
            break
        while True:
            nz = [i for i in range(row, r) if A[i][col].coeffs]
            if not nz:
                break
            piv = min(nz, key=lambda i: (A[i][col].degree, i))
            ws.row_swap(row, piv)
            done = True
            for i in range(row + 1, r):
                if A[i][col].coeffs:
                    ws.row_add(i, row, -(A[i][col] // A[row][col]))
                    if A[i][col].coeffs:
                        done = False
            if done:
                break
        if not A[row][col].coeffs:
            continue
        if A[row][col].lead != 1:
            ws.row_scale(row, ws.field.inv(A[row][col].lead))
        for i in range(row):
            if A[i][col].coeffs:
                ws.row_add(i, row, -(A[i][col] // A[row][col]))
        row += 1
    return ws.matrix(ws.Ui), ws.matrix(A)


def row_equivalent(A: PolyMatrix, B: PolyMatrix) -> bool:
    """Same row module, i.e. ``A = W @ B`` for some unimodular ``W``."""
    if A.shape != B.shape or A.field != B.field:
        return False
    return hermite(A)[1] == hermite(B)[1]


def unimodular_quotient(A: PolyMatrix, B: PolyMatrix) -> PolyMatrix | None:
    """``W`` with ``A = W @ B`` and ``W`` unimodular, if ``B`` is left prime and one exists."""
    X = right_inverse(B)
    if X is None:
        return None
    W = A @ X
    if W @ B != A or not is_unimodular(W):
        return None
    return W
