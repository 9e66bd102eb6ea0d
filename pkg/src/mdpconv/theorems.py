"""Rank conditions on stacked coefficient matrices that force left primeness.

If the block matrix

    [ H_0                ]
    [  :   .             ]
    [ H_nu      H_0      ]
    [       .    :       ]
    [           H_nu     ]

with ``r + 1`` block columns has full row rank, solving it against
``[I; 0; ...; 0]`` yields the coefficients of a polynomial right inverse of
``H`` of degree at most ``r``.  When ``(n-k)`` does not divide ``delta`` the
last block row keeps only the rows listed in ``S``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .conv_code import (
    ConvCode,
    MinorVerdict,
    _check_side,
    check_mdp_criterion,
    code_degree,
    derive_params,
)
from .poly_matrix import PolyMatrix, RankDeficientError, is_left_prime, is_row_reduced


def _block_counts(side: str, n: int, k: int) -> tuple[int, int]:
    """(rows of the code matrix, the complementary dimension) for ``side``."""
    return (n - k, k) if side == "parity" else (k, n - k)


def top_row_count(side: str, n: int, k: int, delta: int) -> int:
    """Number of rows of top degree under generic row degrees."""
    rows, _ = _block_counts(side, n, k)
    return delta - rows * (delta // rows)


@dataclass(frozen=True)
class StackedMatrix:
    base: linalg.Matrix
    r: int
    S: tuple[int, ...] | None
    side: str
    degree: int
    block_rows: int
    block_cols: int

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.base), self.block_cols * (self.r + 1)


def _validate_S(S, bound: int) -> tuple[int, ...]:
    S = tuple(int(s) for s in S)
    if not S:
        raise ValueError("row subset S must be non-empty")
    if any(not 1 <= s <= bound for s in S):
        raise ValueError(f"row subset S must lie in 1..{bound}: {S}")
    if any(a >= b for a, b in zip(S, S[1:])):
        raise ValueError(f"row subset S must be strictly increasing: {S}")
    return S


def build_stacked(matrix: PolyMatrix, side: str, r: int, S=None, delta: int | None = None) -> StackedMatrix:
    """Stack the coefficients of ``matrix`` into the block matrix above.

    ``S`` holds 1-based row indices of the top coefficient kept in the last
    block row.  Passing ``delta`` additionally checks ``|S|`` and the matrix
    degree against the code parameters.
    """
    _check_side(side)
    if r < 0:
        raise ValueError("stacking depth r must be non-negative")
    br, bc = matrix.shape
    if br >= bc:
        raise ValueError(f"expected a wide matrix, got {br}x{bc}")
    if matrix.is_zero():
        raise ValueError("zero matrix has no stacked form")
    nu = int(matrix.degree)
    if S is not None:
        S = _validate_S(S, br)
    if delta is not None:
        n = bc
        k = br if side == "generator" else bc - br
        t = top_row_count(side, n, k, delta)
        if S is None:
            if t != 0:
                raise ValueError(f"{br} does not divide delta={delta}; a row subset S is required")
            if nu * br != delta:
                raise ValueError(f"matrix degree {nu} inconsistent with delta={delta}")
        else:
            if len(S) != t:
                raise ValueError(f"|S| must be {t}, got {len(S)}")
            if nu != delta // br + 1:
                raise ValueError(f"matrix degree {nu} inconsistent with delta={delta}")
    coeffs = [matrix.coefficient(i) for i in range(nu + 1)]
    base = []
    for i in range(r + nu + 1):
        keep = range(br)
        if S is not None and i == r + nu:
            keep = [s - 1 for s in S]
        for a in keep:
            row = [0] * (bc * (r + 1))
            for c in range(r + 1):
                s = i - c
                if 0 <= s <= nu:
                    row[c * bc:(c + 1) * bc] = coeffs[s][a]
            base.append(row)
    return StackedMatrix(base=base, r=r, S=S, side=side, degree=nu, block_rows=br, block_cols=bc)


@dataclass(frozen=True)
class SufficiencyReport:
    """Outcome of the stacked-rank test on one matrix.

    ``implication_ok`` is the property under test: either the stack is
    rank deficient (nothing is claimed) or the matrix is left prime and the
    degree-``r`` witness ``X`` satisfies ``matrix @ X == I``.
    """

    r: int
    S: tuple[int, ...] | None
    shape: tuple[int, int]
    rank: int
    rank_full: bool
    left_prime_confirmed: bool
    witness: PolyMatrix | None
    implication_ok: bool


def s_admissible(matrix: PolyMatrix, S) -> bool:
    """Rows of the top coefficient outside ``S`` must vanish.

    Only then does the truncated last block row account for every
    coefficient of ``matrix @ X`` in degree ``r + nu``.
    """
    top = matrix.coefficient(int(matrix.degree))
    keep = {s - 1 for s in S}
    return all(not any(top[a]) for a in range(matrix.rows) if a not in keep)


def verify_sufficiency(matrix: PolyMatrix, side: str, r: int, S=None, delta: int | None = None) -> SufficiencyReport:
    st = build_stacked(matrix, side, r, S, delta)
    if st.S is not None and not s_admissible(matrix, st.S):
        raise ValueError(
            "rows outside S must have degree below the matrix degree for the truncated stack"
        )
    f = matrix.field
    rows, _ = st.shape
    rk = linalg.rank(f, st.base)
    rank_full = rk == rows
    try:
        left_prime = is_left_prime(matrix, "minor_gcd")
    except RankDeficientError:
        left_prime = False
    witness = None
    if rank_full:
        br, bc = matrix.shape
        E = linalg.zeros(rows, br)
        for a in range(br):
            E[a][a] = 1
        Xbar = linalg.solve(f, st.base, E)
        if Xbar is None:
            raise AssertionError("full-rank stacked system reported inconsistent")
        X = PolyMatrix.from_coefficients(f, [Xbar[i * bc:(i + 1) * bc] for i in range(r + 1)])
        if matrix @ X != PolyMatrix.identity(f, br):
            raise AssertionError("stacked solution is not a right inverse")
        witness = X
    ok = (not rank_full) or (left_prime and witness is not None)
    return SufficiencyReport(
        r=r,
        S=st.S,
        shape=st.shape,
        rank=rk,
        rank_full=rank_full,
        left_prime_confirmed=left_prime,
        witness=witness,
        implication_ok=ok,
    )


# --------------------------------------------------------------------------
# parameter feasibility
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class FeasibleRange:
    """Admissible stacking depths for the non-divisible case.

    ``lower``/``upper`` are the row-count and containment bounds on ``r``;
    ``rational_feasible`` compares them as rationals, ``integer_feasible``
    asks for an actual integer ``r >= 0`` in between.  ``shape_lower`` is
    the bound obtained from the exact row count ``(n-k)(r+nu) + t`` of the
    S-truncated stack.
    """

    lower: Fraction
    upper: int
    rational_feasible: bool
    integer_feasible: bool
    shape_lower: Fraction


def _roles(n: int, k: int, delta: int, side: str):
    """(rows a, complement b) so the parity formulas apply with k -> b."""
    _check_side(side)
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < n, got n={n}, k={k}")
    a, b = _block_counts(side, n, k)
    if delta % a == 0:
        raise ValueError(
            f"this analysis assumes {a} does not divide delta={delta} on the {side} side"
        )
    return a, b


def r_feasible_range(n: int, k: int, delta: int, side: str = "parity") -> FeasibleRange:
    a, b = _roles(n, k, delta, side)
    deg = delta // a + 1
    lower = Fraction(2 * a * deg - n - delta, b)
    upper = delta // b - 1
    start = max(0, math.ceil(lower))
    return FeasibleRange(
        lower=lower,
        upper=upper,
        rational_feasible=lower <= upper,
        integer_feasible=start <= upper,
        shape_lower=Fraction(delta - b, b),
    )


def epsilon_condition(n: int, k: int, delta: int, side: str = "parity") -> bool:
    """Fractional-part test equivalent to ``lower <= upper``.

    Parity side: ``eps1 <= (n/k - 1)(2 eps2 - 1)``; the generator side swaps
    the roles of ``k`` and ``n-k``.
    """
    _check_side(side)
    p = derive_params(n, k, delta)
    if p.eps1 == 0 or p.eps2 == 0:
        raise ValueError("epsilon condition needs k and n-k both not dividing delta")
    if side == "parity":
        return p.eps1 <= (Fraction(n, k) - 1) * (2 * p.eps2 - 1)
    return p.eps2 <= (Fraction(n, n - k) - 1) * (2 * p.eps1 - 1)


# --------------------------------------------------------------------------
# full pipeline
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class AuditReport:
    n: int
    k: int
    delta: int
    side: str
    L: int
    criterion: MinorVerdict
    criterion_literal: MinorVerdict
    divisible: bool
    sufficiency: SufficiencyReport | None
    witness_r: int | None
    witness_S: tuple[int, ...] | None
    row_reduced: bool
    left_prime: bool
    degree: int | None
    degree_matches: bool

    @property
    def witness_found(self) -> bool:
        s = self.sufficiency
        return s is not None and s.rank_full and s.implication_ok

    @property
    def passed(self) -> bool:
        return self.criterion.holds and self.witness_found and self.left_prime and self.degree_matches


def corollary_audit(matrix: PolyMatrix, side: str, n: int, k: int, delta_claimed: int) -> AuditReport:
    """Run the whole chain: minor criterion, stacked rank, primeness, degree."""
    _check_side(side)
    rows_expected, other = _block_counts(side, n, k)
    if matrix.shape != (rows_expected, n):
        raise ValueError(f"expected a {rows_expected}x{n} {side} matrix, got {matrix.rows}x{matrix.cols}")
    params = derive_params(n, k, delta_claimed)
    L = params.L
    crit = check_mdp_criterion(matrix, side, L, "structural")
    crit_lit = check_mdp_criterion(matrix, side, L, "literal")

    divisible = delta_claimed % rows_expected == 0
    suff = None
    w_r = w_S = None
    if divisible:
        r = delta_claimed // other
        suff = verify_sufficiency(matrix, side, r)
        if suff.rank_full:
            w_r = r
    else:
        rng = r_feasible_range(n, k, delta_claimed, side)
        t = top_row_count(side, n, k, delta_claimed)
        start = max(0, math.ceil(rng.lower))
        for r in range(start, rng.upper + 1):
            for S in combinations(range(1, rows_expected + 1), t):
                if not s_admissible(matrix, S):
                    continue
                rep = verify_sufficiency(matrix, side, r, S)
                if suff is None:
                    suff = rep
                if rep.rank_full:
                    suff, w_r, w_S = rep, r, S
                    break
            if w_r is not None:
                break

    try:
        left_prime = is_left_prime(matrix, "minor_gcd")
    except RankDeficientError:
        left_prime = False
    try:
        degree = code_degree(ConvCode(side, matrix))
    except RankDeficientError:
        degree = None
    return AuditReport(
        n=n,
        k=k,
        delta=delta_claimed,
        side=side,
        L=L,
        criterion=crit,
        criterion_literal=crit_lit,
        divisible=divisible,
        sufficiency=suff,
        witness_r=w_r,
        witness_S=w_S,
        row_reduced=is_row_reduced(matrix),
        left_prime=left_prime,
        degree=degree,
        degree_matches=degree == delta_claimed,
    )
