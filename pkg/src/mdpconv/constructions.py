"""Fixtures: the (3,1) example, Cauchy matrices, the L = 0 counterexample,
and a small-field search for MDP parity-check matrices."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import partial
from itertools import combinations

from . import linalg
from .conv_code import SIDES, ConvCode, MinorVerdict, check_mdp_criterion, code_degree, derive_params, right_kernel_generator
from .finite_field import GF, FieldElement, field_from_order
from .poly_matrix import (
    PolyMatrix,
    RankDeficientError,
    hermite,
    is_left_prime,
    is_row_reduced,
    max_minor_degree,
)
from .theorems import AuditReport, corollary_audit

MINOR_LIMIT = 10**6


# --------------------------------------------------------------------------
# the (3,1) example over GF(2)
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class ExampleFacts:
    H: PolyMatrix
    H_tilde: PolyMatrix
    degree: int
    row_degree_sum_H: int
    max_minor_degree_H: int
    H_left_prime: bool
    H_row_reduced: bool
    H0_full_rank: bool
    H_tilde_left_prime: bool
    H_tilde_row_reduced: bool
    same_code: bool


def paper_example_3_1() -> ExampleFacts:
    """Non-left-prime ``H`` and its left prime partner ``H_tilde`` over GF(2).

    Every fact is recomputed from the matrices, nothing is hard-coded.
    """
    F = GF(2)
    H = PolyMatrix(F, [[[0, 1, 1], 0, [1, 1]], [0, [1, 1], [1, 1]]])
    Ht = PolyMatrix(F, [[[0, 1], 0, 1], [0, 1, 1]])
    G, Gt = right_kernel_generator(H), right_kernel_generator(Ht)
    same = (
        (H @ Gt.T).is_zero()
        and (Ht @ G.T).is_zero()
        and hermite(G)[1] == hermite(Gt)[1]
    )
    return ExampleFacts(
        H=H,
        H_tilde=Ht,
        degree=code_degree(ConvCode("parity", H)),
        row_degree_sum_H=int(sum(H.row_degrees())),
        max_minor_degree_H=int(max_minor_degree(H)),
        H_left_prime=is_left_prime(H),
        H_row_reduced=is_row_reduced(H),
        H0_full_rank=linalg.rank(F, H.coefficient(0)) == H.rows,
        H_tilde_left_prime=is_left_prime(Ht),
        H_tilde_row_reduced=is_row_reduced(Ht),
        same_code=same,
    )


# --------------------------------------------------------------------------
# Cauchy matrices and minor checks
# --------------------------------------------------------------------------

def _as_ints(field: GF, pts) -> list[int]:
    return [field(p).value if isinstance(p, FieldElement) else field.check(int(p)) for p in pts]


def cauchy_matrix(field: GF, rows: int, cols: int, x=None, y=None) -> linalg.Matrix:
    """Entry ``(i, j) = 1 / (x_i - y_j)``; every minor of such a matrix is nonzero.

    Points default to the first ``rows`` field elements for ``x`` and the
    next ``cols`` for ``y`` in the integer encoding.
    """
    if rows < 1 or cols < 1 or rows > cols:
        raise ValueError("need 1 <= rows <= cols")
    if field.q < rows + cols:
        raise ValueError(f"GF({field.q}) is too small for a {rows}x{cols} Cauchy matrix")
    x = list(range(rows)) if x is None else _as_ints(field, x)
    y = list(range(rows, rows + cols)) if y is None else _as_ints(field, y)
    if len(x) != rows or len(y) != cols:
        raise ValueError("evaluation point counts do not match the shape")
    if len(set(x)) != rows or len(set(y)) != cols or set(x) & set(y):
        raise ValueError("evaluation points must be pairwise distinct and disjoint")
    return [[field.inv(field.sub(a, b)) for b in y] for a in x]


def all_minors_nonzero(field: GF, M: linalg.Matrix, sizes=None, full_size_only: bool = False, limit: int = MINOR_LIMIT) -> bool:
    rows, cols = linalg.shape(M)
    if full_size_only:
        sizes = [min(rows, cols)]
    elif sizes is None:
        sizes = range(1, min(rows, cols) + 1)
    sizes = list(sizes)
    total = sum(math.comb(rows, s) * math.comb(cols, s) for s in sizes)
    if total > limit:
        raise ValueError(f"{total} minors exceed the limit {limit}")
    for s in sizes:
        for R in combinations(range(rows), s):
            for C in combinations(range(cols), s):
                if linalg.det(field, linalg.submatrix(M, R, C)) == 0:
                    return False
    return True


# --------------------------------------------------------------------------
# L = 0 counterexample
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Counterexample:
    matrix: PolyMatrix
    side: str
    n: int
    k: int
    delta: int
    criterion: MinorVerdict
    left_prime: bool
    degree: int
    vanishes_at_one: bool

    @property
    def refutes(self) -> bool:
        """Criterion holds at ``L`` although the matrix is not left prime."""
        return self.criterion.holds and not self.left_prime


def counterexample_L0(n: int, k: int, delta: int, field: GF, side: str = "parity") -> Counterexample:
    """``M(z) = M_0 - M_0 z`` with ``M_0`` Cauchy, for parameters with ``L = 0``.

    The minor criterion only looks at ``M_0`` when ``L = 0``, so it holds,
    while ``M(1) = 0`` makes ``M`` not left prime.
    """
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}")
    if not (1 <= delta < k and delta < n - k):
        raise ValueError("need 1 <= delta < k and delta < n - k (so that L = 0)")
    rows = n - k if side == "parity" else k
    M0 = cauchy_matrix(field, rows, n)
    M1 = [[field.neg(a) for a in row] for row in M0]
    M = PolyMatrix.from_coefficients(field, [M0, M1])
    L = derive_params(n, k, delta).L
    crit = check_mdp_criterion(M, side, L)
    try:
        lp = is_left_prime(M)
    except RankDeficientError:
        lp = False
    return Counterexample(
        matrix=M,
        side=side,
        n=n,
        k=k,
        delta=delta,
        criterion=crit,
        left_prime=lp,
        degree=code_degree(ConvCode(side, M)),
        vanishes_at_one=linalg.is_zero(M.evaluate(1)),
    )


# --------------------------------------------------------------------------
# search
# --------------------------------------------------------------------------

STRATEGIES = ("exhaustive", "random")


@dataclass(frozen=True)
class SearchConfig:
    n: int
    k: int
    delta: int
    q: int
    modulus: tuple[int, ...] | None = None
    strategy: str = "exhaustive"
    budget: int = 100_000
    seed: int = 0

    def __post_init__(self):
        derive_params(self.n, self.k, self.delta)
        if self.strategy not in STRATEGIES:
            raise ValueError(f"strategy must be one of {STRATEGIES}")
        if self.budget < 0:
            raise ValueError("budget must be non-negative")

    @property
    def field(self) -> GF:
        return field_from_order(self.q, self.modulus)

    def row_degrees(self) -> list[int]:
        """Generic row degrees, top-degree rows first."""
        p = derive_params(self.n, self.k, self.delta)
        c = self.n - self.k
        if p.t == 0:
            return [p.nu] * c
        return [p.nu] * p.t + [p.nu - 1] * (c - p.t)


@dataclass(frozen=True)
class SearchHit:
    matrix: PolyMatrix
    side: str
    audit: AuditReport


@dataclass(frozen=True)
class SearchResult:
    hits: list[SearchHit]
    truncated: bool
    examined: int
    candidates: int


def _row_space_size(q: int, n: int, d: int) -> int:
    # canonical rows: exact degree d, first nonzero coefficient 1
    return (q ** (n * (d + 1)) - q ** (n * d)) // (q - 1)


def _canonical_rows(q: int, n: int, d: int):
    """Yield row coefficient vectors (degree-major) in lexicographic order."""
    width = n * (d + 1)
    for v in range(q**width):
        vec = [(v // q ** (width - 1 - i)) % q for i in range(width)]
        if not any(vec[n * d:]):
            continue
        if next(x for x in vec if x) != 1:
            continue
        yield vec


def _canonicalize(field: GF, vec: list[int]) -> list[int]:
    inv = field.inv(next(x for x in vec if x))
    return [field.mul(inv, x) for x in vec]


def _assemble(field: GF, n: int, degs: list[int], rows: list[list[int]]) -> PolyMatrix:
    grid = []
    for d, vec in zip(degs, rows):
        grid.append([[vec[s * n + j] for s in range(d + 1)] for j in range(n)])
    return PolyMatrix(field, grid)


def _lazy_product(factories):
    # like itertools.product, but re-creates each inner iterator instead of
    # materialising it, so huge row spaces can be walked under a budget
    if not factories:
        yield []
        return
    for head in factories[0]():
        for tail in _lazy_product(factories[1:]):
            yield [head] + tail


def search_mdp(config: SearchConfig) -> SearchResult:
    """Parity-check matrices with generic row degrees that pass the full audit.

    Rows are taken up to nonzero scaling (first nonzero coefficient 1).  The
    exhaustive strategy walks candidates lexicographically; the random one
    draws ``budget`` seeded samples.  Hits are returned in canonical order.
    """
    field = config.field
    n, k, delta = config.n, config.k, config.delta
    q = field.q
    degs = config.row_degrees()
    total = math.prod(_row_space_size(q, n, d) for d in degs)

    def keep(rows) -> SearchHit | None:
        M = _assemble(field, n, degs, rows)
        audit = corollary_audit(M, "parity", n, k, delta)
        return SearchHit(M, "parity", audit) if audit.passed else None

    found: dict[tuple, SearchHit] = {}
    examined = 0
    if config.strategy == "exhaustive":
        truncated = False
        factories = [partial(_canonical_rows, q, n, d) for d in degs]
        for rows in _lazy_product(factories):
            if examined >= config.budget:
                truncated = True
                break
            examined += 1
            hit = keep(rows)
            if hit is not None:
                found[tuple(map(tuple, rows))] = hit
    else:
        rng = random.Random(config.seed)
        for _ in range(config.budget):
            rows = []
            for d in degs:
                while True:
                    vec = [rng.randrange(q) for _ in range(n * (d + 1))]
                    if any(vec[n * d:]):
                        break
                rows.append(_canonicalize(field, vec))
            examined += 1
            key = tuple(map(tuple, rows))
            if key in found:
                continue
            hit = keep(rows)
            if hit is not None:
                found[key] = hit
        truncated = examined < total
    hits = [found[key] for key in sorted(found)]
    return SearchResult(hits=hits, truncated=truncated, examined=examined, candidates=total)
