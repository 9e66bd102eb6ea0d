import math
import random
from fractions import Fraction

import pytest

from conftest import rand_poly
from mdpconv.constructions import counterexample_L0
from mdpconv.finite_field import GF
from mdpconv.poly_matrix import PolyMatrix, is_left_prime
from mdpconv.theorems import (
    build_stacked,
    corollary_audit,
    epsilon_condition,
    r_feasible_range,
    s_admissible,
    top_row_count,
    verify_sufficiency,
)


def test_stacked_shapes(example_Ht):
    assert build_stacked(example_Ht, "parity", 2).shape == (8, 9)
    assert build_stacked(example_Ht, "parity", 2, delta=2).shape == (8, 9)
    st = build_stacked(example_Ht, "parity", 0)
    assert st.shape == (4, 3)
    assert st.base == example_Ht.coefficient(0) + example_Ht.coefficient(1)

    F = GF(5)
    rng = random.Random(0)
    rows = [[rand_poly(rng, F, 2, 0) for _ in range(7)] for _ in range(2)]
    rows += [[rand_poly(rng, F, 1, 0) for _ in range(7)]]
    H = PolyMatrix(F, rows)
    if H.degree < 2:
        H = H + PolyMatrix(F, [[[0, 0, 1]] + [0] * 6, [0] * 7, [0] * 7])
    st = build_stacked(H, "parity", 0, S=(1, 2), delta=5)
    assert st.shape == (8, 7)


def test_stacked_block_pattern(example_Ht):
    st = build_stacked(example_Ht, "parity", 2)
    H0, H1 = example_Ht.coefficient(0), example_Ht.coefficient(1)
    zero = [[0] * 3] * 2

    def block(i, c):
        return [row[3 * c:3 * c + 3] for row in st.base[2 * i:2 * i + 2]]

    for i in range(4):
        for c in range(3):
            expected = {0: H0, 1: H1}.get(i - c, zero)
            assert block(i, c) == expected


def test_stacked_validation(example_Ht):
    with pytest.raises(ValueError):
        build_stacked(example_Ht, "parity", -1)
    with pytest.raises(ValueError):
        build_stacked(example_Ht, "parity", 0, S=(3,))
    with pytest.raises(ValueError):
        build_stacked(example_Ht, "parity", 0, S=(2, 1))
    with pytest.raises(ValueError):
        build_stacked(example_Ht, "parity", 0, delta=1)  # 2 does not divide 1: S required
    with pytest.raises(ValueError):
        build_stacked(example_Ht, "parity", 0, S=(1, 2), delta=1)


def test_sufficiency_on_example(example_H, example_Ht):
    # H_tilde's top coefficient has a zero row, so the untruncated stack
    # cannot have full row rank
    rep = verify_sufficiency(example_Ht, "parity", 2, delta=2)
    assert rep.shape == (8, 9) and not rep.rank_full and rep.implication_ok
    # the code has degree 1, so the truncated stack applies
    rep = verify_sufficiency(example_Ht, "parity", 0, S=(1,), delta=1)
    assert rep.shape == (3, 3) and rep.rank_full and rep.left_prime_confirmed
    assert example_Ht @ rep.witness == PolyMatrix.identity(example_Ht.field, 2)
    for r in range(5):
        assert not verify_sufficiency(example_H, "parity", r).rank_full


def test_sufficiency_rejects_inadmissible_S(gf2):
    H = PolyMatrix(gf2, [[[0, 1], 0, 1], [[1, 1], 1, 1]])
    assert not s_admissible(H, (1,))
    with pytest.raises(ValueError):
        verify_sufficiency(H, "parity", 0, S=(1,))


def test_sufficiency_mdp_code(mdp_H):
    rep = verify_sufficiency(mdp_H, "parity", 1, delta=1)
    assert rep.shape == (3, 4) and rep.rank_full and rep.implication_ok
    assert rep.witness.degree <= 1


def test_counterexample_stack_never_full_rank():
    ce = counterexample_L0(5, 2, 1, GF(11))
    for r in range(6):
        rep = verify_sufficiency(ce.matrix, "parity", r)
        assert not rep.rank_full and rep.implication_ok


def _random_generic(rng, F, n, k, delta):
    """Parity matrix with generic row degrees: t rows of degree nu, the rest nu - 1."""
    c = n - k
    nu = -(-delta // c)
    t = delta - c * (delta // c)
    degs = [nu] * c if t == 0 else [nu] * t + [nu - 1] * (c - t)
    rows = []
    for d in degs:
        row = [[rng.randrange(F.q) for _ in range(d + 1)] for _ in range(n)]
        lead = rng.randrange(n)
        row[lead][d] = rng.randrange(1, F.q)
        rows.append(row)
    return PolyMatrix(F, rows), t


def test_implication_random_divisible():
    rng = random.Random(2024)
    full = 0
    for _ in range(120):
        q = rng.choice([2, 3, 5])
        F = GF(q)
        n = rng.randint(2, 5)
        k = rng.randint(1, n - 1)
        nu = rng.randint(1, 2)
        delta = (n - k) * nu
        H, _ = _random_generic(rng, F, n, k, delta)
        rep = verify_sufficiency(H, "parity", delta // k)
        assert rep.implication_ok
        full += rep.rank_full
    assert full > 0


def test_implication_random_truncated():
    rng = random.Random(77)
    full = 0
    for _ in range(120):
        q = rng.choice([2, 3, 5])
        F = GF(q)
        n = rng.randint(3, 5)
        k = rng.randint(1, n - 2)
        c = n - k
        delta = rng.choice([d for d in range(1, 2 * c) if d % c])
        H, t = _random_generic(rng, F, n, k, delta)
        start = max(0, math.ceil(Fraction(delta - k, k)))
        for r in range(start, start + 2):
            rep = verify_sufficiency(H, "parity", r, S=tuple(range(1, t + 1)))
            assert rep.implication_ok
            full += rep.rank_full
    assert full > 0


def test_r_range_examples():
    rg = r_feasible_range(7, 4, 5, "parity")
    assert (rg.lower, rg.upper, rg.integer_feasible) == (0, 0, True)
    assert rg.shape_lower == Fraction(1, 4)
    rg = r_feasible_range(5, 2, 1, "parity")
    assert (rg.lower, rg.upper, rg.integer_feasible) == (0, -1, False)
    with pytest.raises(ValueError):
        r_feasible_range(4, 2, 4, "parity")


def test_r_range_empty_when_upper_negative():
    for n in range(3, 8):
        for k in range(1, n):
            for delta in range(1, 10):
                if delta % (n - k) == 0:
                    continue
                rg = r_feasible_range(n, k, delta)
                if rg.upper < 0:
                    assert not rg.integer_feasible


def test_epsilon_examples():
    assert epsilon_condition(7, 4, 5, "parity") is True
    with pytest.raises(ValueError):
        epsilon_condition(4, 2, 4)
    # generator side (7,3,5): eps1 = 2/3 > 1/2 is necessary
    rg = r_feasible_range(7, 3, 5, "generator")
    assert epsilon_condition(7, 3, 5, "generator") == (rg.lower <= rg.upper)


def test_epsilon_needs_eps2_above_half():
    for n in range(3, 10):
        for k in range(1, n):
            for delta in range(1, 12):
                if delta % k == 0 or delta % (n - k) == 0:
                    continue
                eps2 = Fraction(delta, n - k) - delta // (n - k)
                if eps2 <= Fraction(1, 2):
                    assert not epsilon_condition(n, k, delta, "parity")


def test_top_row_count():
    assert top_row_count("parity", 7, 4, 5) == 2
    assert top_row_count("generator", 7, 4, 5) == 1


def test_audit_examples(mdp_H, example_Ht):
    a = corollary_audit(mdp_H, "parity", 2, 1, 1)
    assert a.passed and a.criterion.holds and a.witness_r == 1 and a.degree == 1
    assert a.sufficiency.shape == (3, 4)

    ce = counterexample_L0(5, 2, 1, GF(11))
    a = corollary_audit(ce.matrix, "parity", 5, 2, 1)
    assert a.criterion.holds and not a.witness_found and not a.left_prime
    assert a.degree == 0 and not a.degree_matches and not a.passed

    # left prime and row reduced, but the code has degree 1, not 2
    a = corollary_audit(example_Ht, "parity", 3, 1, 2)
    assert a.left_prime and a.row_reduced and a.degree == 1 and not a.degree_matches
    a = corollary_audit(example_Ht, "parity", 3, 1, 1)
    assert a.witness_found and a.witness_S == (1,) and a.left_prime and a.degree_matches
    assert not a.criterion.holds and not a.passed


def test_contrapositive_on_fixtures(example_H):
    ce = counterexample_L0(5, 2, 1, GF(11))
    for M, n, k in ((example_H, 3, 1), (ce.matrix, 5, 2)):
        assert not is_left_prime(M)
        for r in range(5):
            assert not verify_sufficiency(M, "parity", r).rank_full
