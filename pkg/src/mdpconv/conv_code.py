"""Convolutional codes: parameters, degree, sliding matrices, MDP minor test.

A code is given by one polynomial matrix, either a ``k x n`` generator
matrix or an ``(n-k) x n`` parity-check matrix.  Column distances are
computed by exhaustive message enumeration and serve as the ground truth
against which the minor criterion is checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product

from . import linalg
from .finite_field import GF
from .poly_matrix import (
    PolyMatrix,
    RankDeficientError,
    left_prime_factorization,
    max_minor_degree,
    rank_rational,
    row_reduce,
    smith,
)

SIDES = ("generator", "parity")
MODES = ("structural", "literal")
ORACLE_CAP = 2**24


class OracleTooLarge(ValueError):
    """The brute-force message space exceeds the configured cap."""


def _check_side(side: str):
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


# --------------------------------------------------------------------------
# parameters
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CodeParams:
    """Quantities derived from ``(n, k, delta)``.

    ``nu`` and ``mm`` are the smallest possible polynomial degrees of a
    parity-check resp. generator matrix, ``t`` the number of parity rows of
    top degree under generic row degrees, and ``eps1``/``eps2`` the
    fractional parts of ``delta/k`` and ``delta/(n-k)``.
    """

    n: int
    k: int
    delta: int
    L: int
    nu: int
    mm: int
    t: int
    eps1: Fraction
    eps2: Fraction


def derive_params(n: int, k: int, delta: int) -> CodeParams:
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
    if delta < 0:
        raise ValueError("degree must be non-negative")
    c = n - k
    return CodeParams(
        n=n,
        k=k,
        delta=delta,
        L=delta // k + delta // c,
        nu=delta // c if delta % c == 0 else delta // c + 1,
        mm=delta // k if delta % k == 0 else delta // k + 1,
        t=delta - c * (delta // c),
        eps1=Fraction(delta, k) - delta // k,
        eps2=Fraction(delta, c) - delta // c,
    )


def column_bound(n: int, k: int, j: int) -> int:
    return (n - k) * (j + 1) + 1


def singleton_bound(n: int, k: int, delta: int) -> int:
    return (n - k) * (delta // k + 1) + delta + 1


# --------------------------------------------------------------------------
# codes
# --------------------------------------------------------------------------

def right_kernel_generator(H: PolyMatrix, n: int | None = None, k: int | None = None) -> PolyMatrix:
    """Row-reduced left prime ``G`` whose rows span ``{c : H c^T = 0}``.

    The kernel basis consists of the trailing columns of the inverse right
    transform of the Smith form ``H = U D V``.
    """
    r, cols = H.shape
    if n is not None and n != cols:
        raise ValueError(f"H has {cols} columns, expected n={n}")
    if k is not None and r != cols - k:
        raise ValueError(f"H has {r} rows, expected n-k={cols - k}")
    if r >= cols:
        raise ValueError("parity-check matrix must have fewer rows than columns")
    S = smith(H)
    if S.rank < r:
        raise RankDeficientError("parity-check matrix is rank deficient")
    Q = S.V_inv
    G = Q.submatrix(range(cols), range(r, cols)).T
    G = row_reduce(G).R
    if not (H @ G.T).is_zero():
        raise AssertionError("kernel generator is not annihilated by H")
    return G


@dataclass(frozen=True)
class ConvCode:
    side: str
    matrix: PolyMatrix

    def __post_init__(self):
        _check_side(self.side)
        r, c = self.matrix.shape
        if r >= c:
            raise ValueError(f"a {self.side} matrix needs fewer rows than columns, got {r}x{c}")
        if rank_rational(self.matrix) < r:
            raise RankDeficientError(f"{self.side} matrix is rank deficient")

    @property
    def field(self) -> GF:
        return self.matrix.field

    @property
    def n(self) -> int:
        return self.matrix.cols

    @property
    def k(self) -> int:
        r = self.matrix.rows
        return r if self.side == "generator" else self.n - r

    @cached_property
    def generator(self) -> PolyMatrix:
        if self.side == "generator":
            return self.matrix
        return right_kernel_generator(self.matrix)

    @cached_property
    def degree(self) -> int:
        return code_degree(self)

    @cached_property
    def params(self) -> CodeParams:
        return derive_params(self.n, self.k, self.degree)


def code_degree(code: ConvCode) -> int:
    """Degree of the code (not of the matrix).

    Generator side: the largest degree among the full-size minors.  Parity
    side: the row-degree sum of a row-reduced left prime matrix with the
    same kernel, obtained by factoring out the non-prime left part first.
    """
    M = code.matrix
    if code.side == "generator":
        return int(max_minor_degree(M))
    _, P = left_prime_factorization(M)
    return int(sum(row_reduce(P).row_degrees))


def naive_row_degree_sum(M: PolyMatrix):
    return sum(M.row_degrees())


# --------------------------------------------------------------------------
# sliding matrices and the minor criterion
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SlidingMatrix:
    base: linalg.Matrix
    j: int
    side: str
    block_rows: int
    block_cols: int

    @property
    def shape(self) -> tuple[int, int]:
        return linalg.shape(self.base)

    def block(self, r: int, c: int) -> linalg.Matrix:
        br, bc = self.block_rows, self.block_cols
        return [row[c * bc:(c + 1) * bc] for row in self.base[r * br:(r + 1) * br]]


def sliding(matrix: PolyMatrix, side: str, j: int) -> SlidingMatrix:
    """Truncated sliding matrix for window ``j``.

    Generator side is block upper triangular with block ``(r, c) = G_(c-r)``;
    parity side is block lower triangular with block ``(r, c) = H_(r-c)``.
    """
    _check_side(side)
    if j < 0:
        raise ValueError("window index must be non-negative")
    br, bc = matrix.shape
    if br >= bc:
        raise ValueError(f"{side} matrix must be wide, got {br}x{bc}")
    coeffs = [matrix.coefficient(i) for i in range(j + 1)]
    base = linalg.zeros((j + 1) * br, (j + 1) * bc)
    for r in range(j + 1):
        for c in range(j + 1):
            s = c - r if side == "generator" else r - c
            if s < 0:
                continue
            C = coeffs[s]
            for a in range(br):
                base[r * br + a][c * bc:(c + 1) * bc] = C[a]
    return SlidingMatrix(base=base, j=j, side=side, block_rows=br, block_cols=bc)


def _admissible(T, side: str, j: int, n: int, k: int, mode: str) -> bool:
    if side == "generator":
        # t_{sk+1} > sn
        return all(T[s * k] > s * n for s in range(1, j + 1))
    c = n - k
    if mode == "structural":
        # t_{s(n-k)} <= sn
        return all(T[s * c - 1] <= s * n for s in range(1, j + 1))
    # t_{s(n-k)+1} <= sn, as printed
    return all(T[s * c] <= s * n for s in range(1, j + 1))


def mdp_index_sets(side: str, j: int, n: int, k: int, mode: str = "structural"):
    """Yield the 1-based column sets whose minors the criterion inspects.

    Sets come out in lexicographic order.  On the parity side
    ``structural`` keeps exactly the sets whose minor is not forced to zero
    by the block-triangular shape; ``literal`` applies the index condition
    ``t_(s(n-k)+1) <= s n`` verbatim.  The generator side has one mode.
    """
    _check_side(side)
    _check_mode(mode)
    if j < 0:
        raise ValueError("window index must be non-negative")
    size = (j + 1) * (k if side == "generator" else n - k)
    for T in combinations(range(1, (j + 1) * n + 1), size):
        if _admissible(T, side, j, n, k, mode):
            yield T


@dataclass(frozen=True)
class MinorVerdict:
    holds: bool
    checked: int
    first_failure: tuple[int, ...] | None
    mode: str


def check_mdp_criterion(matrix: PolyMatrix, side: str, j: int, mode: str = "structural") -> MinorVerdict:
    """Evaluate every admissible full-size minor of the sliding matrix at ``j``.

    Stops at the first vanishing minor in lexicographic order.
    """
    Sm = sliding(matrix, side, j)
    r, c = matrix.shape
    n = c
    k = r if side == "generator" else c - r
    f = matrix.field
    size = Sm.shape[0]
    checked = 0
    for T in mdp_index_sets(side, j, n, k, mode):
        checked += 1
        cols = [t - 1 for t in T]
        sub = [[row[t] for t in cols] for row in Sm.base]
        if linalg.rank(f, sub) < size:
            return MinorVerdict(False, checked, T, mode)
    return MinorVerdict(True, checked, None, mode)


def is_mdp(code: ConvCode, mode: str = "structural") -> bool:
    return check_mdp_criterion(code.matrix, code.side, code.params.L, mode).holds


# --------------------------------------------------------------------------
# brute-force distances
# --------------------------------------------------------------------------

def _delay_free_generator(code: ConvCode) -> PolyMatrix:
    G = code.generator
    if linalg.rank(code.field, G.coefficient(0)) < G.rows:
        raise ValueError("column distances need a generator with full-rank constant term")
    return G


def column_distances(code: ConvCode, j: int, cap: int = ORACLE_CAP) -> list[int]:
    """``[d_0, ..., d_j]`` by exhaustive search over message prefixes.

    ``d_i`` minimises the weight of the first ``i+1`` codeword blocks over
    messages with a nonzero first block.  With a full-rank ``G_0`` this is
    exactly the set of codewords with nonzero constant term.
    """
    return [column_distance(code, i, cap) for i in range(j + 1)]


def column_distance(code: ConvCode, j: int, cap: int = ORACLE_CAP) -> int:
    if j < 0:
        raise ValueError("window index must be non-negative")
    f = code.field
    q, k, n = f.q, code.k, code.n
    space = q ** (k * (j + 1))
    if space > cap:
        raise OracleTooLarge(f"oracle too large: {space} message tuples exceed the cap {cap}")
    G = _delay_free_generator(code)
    msgs = list(product(range(q), repeat=k))
    blocks = [G.coefficient(s) for s in range(j + 1)]
    prods = [[tuple(linalg.matmul(f, [list(u)], B)[0]) for u in msgs] for B in blocks]
    if f.prime:
        p = f.p

        def vadd(a, b):
            return tuple((x + y) % p for x, y in zip(a, b))
    else:
        add = f.add

        def vadd(a, b):
            return tuple(add(x, y) for x, y in zip(a, b))

    best = n * (j + 1) + 1
    zero_vec = (0,) * n

    def dfs(level: int, acc: list, weight: int):
        nonlocal best
        for ui in range(len(msgs)):
            if level == 0 and ui == 0:
                continue  # msgs[0] is the zero message
            v = vadd(acc[0], prods[0][ui])
            w = weight + sum(1 for x in v if x)
            if w >= best:
                continue
            if level == j:
                best = w
                continue
            nxt = [vadd(acc[s], prods[s][ui]) for s in range(1, len(acc))]
            dfs(level + 1, nxt, w)

    dfs(0, [zero_vec] * (j + 1), 0)
    return best


@dataclass(frozen=True)
class FreeDistance:
    value: int
    certified: bool
    profile: tuple[int, ...]


def free_distance(code: ConvCode, j_cap: int | None = None, cap: int = ORACLE_CAP) -> FreeDistance:
    """Free distance via growing column distances.

    ``certified`` is set once a column distance reaches the generalized
    Singleton bound, which pins the free distance.  Otherwise the value is
    the last column distance computed and only a heuristic estimate.
    """
    n, k, delta = code.n, code.k, code.degree
    bound = singleton_bound(n, k, delta)
    if j_cap is None:
        j_cap = code.params.L + max(int(code.generator.degree), 0) + 1
    profile = []
    for j in range(j_cap + 1):
        profile.append(column_distance(code, j, cap))
        if profile[-1] >= bound:
            return FreeDistance(profile[-1], True, tuple(profile))
    return FreeDistance(profile[-1], False, tuple(profile))
