"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""

import itertools
import json
import math
import random
import subprocess
import sys
import warnings
from fractions import Fraction

import pytest

from conftest import rand_matrix, rand_poly
from mdpconv import linalg
from mdpconv.constructions import SearchConfig, counterexample_L0, paper_example_3_1, search_mdp
from mdpconv.conv_code import (
    ConvCode,
    check_mdp_criterion,
    column_distances,
    free_distance,
    singleton_bound,
)
from mdpconv.fileformat import format_matrix, parse_matrix
from mdpconv.finite_field import GF
from mdpconv.poly_matrix import (
    PolyMatrix,
    RankDeficientError,
    determinant,
    invariant_factors_by_minors,
    is_left_prime,
    is_unimodular,
    left_prime_factorization,
    rank_rational,
    row_equivalent,
    row_reduce,
    smith,
    unimodular_quotient,
)
from mdpconv.theorems import epsilon_condition, r_feasible_range, verify_sufficiency

METHODS = ("minor_gcd", "smith", "right_inverse")


@pytest.fixture
def verdict(capsys):
    def emit(number: int, title: str, ok: bool, detail: str = ""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, detail
    return emit


# 1 --------------------------------------------------------------------------

def test_criterion_1_example_reproduction(verdict):
    ex = paper_example_3_1()
    F, P = left_prime_factorization(ex.H)
    W = unimodular_quotient(P, ex.H_tilde)
    checks = {
        "degree": ex.degree == 1,
        "row_degree_sum": ex.row_degree_sum_H == 3,
        "max_minor_degree": ex.max_minor_degree_H == 3,
        "H not left prime": ex.H_left_prime is False,
        "H_tilde left prime": ex.H_tilde_left_prime is True,
        "factorization": F @ P == ex.H,
        "P ~ H_tilde": row_equivalent(P, ex.H_tilde),
        "quotient": W is not None and is_unimodular(W) and W @ ex.H_tilde == P,
    }
    failed = [k for k, v in checks.items() if not v]
    verdict(1, "(3,1) example reproduction", not failed, "failed: " + ", ".join(failed) if failed else "all 8 facts")


# 2 --------------------------------------------------------------------------

def test_criterion_2_L0_counterexample(verdict):
    field = GF(11)
    par = counterexample_L0(5, 2, 1, field, "parity")
    gen = counterexample_L0(5, 2, 1, field, "generator")
    ok_par = (
        par.criterion.holds
        and par.left_prime is False
        and par.degree == 0
        and par.vanishes_at_one
        and linalg.is_zero(par.matrix.evaluate(1))
    )
    # generator side: G = (1 - z) G_0, so the full-size minors have degree k
    ok_gen = gen.criterion.holds and gen.left_prime is False and gen.vanishes_at_one and gen.degree == 2
    verdict(
        2,
        "L = 0 counterexample at (5,2,1) over GF(11)",
        ok_par and ok_gen,
        f"parity degree {par.degree}, generator degree {gen.degree}",
    )


# 3 --------------------------------------------------------------------------

def _generic_parity(rng, field, n, k, delta, top_rows=None):
    c = n - k
    nu = -(-delta // c)
    t = delta - c * (delta // c)
    if t == 0:
        degs = [nu] * c
    else:
        degs = [nu if i + 1 in top_rows else nu - 1 for i in range(c)]
    rows = []
    for d in degs:
        row = [[rng.randrange(field.q) for _ in range(d + 1)] for _ in range(n)]
        row[rng.randrange(n)][d] = rng.randrange(1, field.q)
        rows.append(row)
    return PolyMatrix(field, rows)


def test_criterion_3_sufficiency_property(verdict):
    rng = random.Random(31337)
    violations = 0
    div_samples = div_full = 0
    while div_samples < 200:
        field = GF(rng.choice([2, 3, 5]))
        n = rng.randint(2, 5)
        k = rng.randint(1, n - 1)
        nu = rng.randint(1, 2)
        delta = (n - k) * nu
        H = _generic_parity(rng, field, n, k, delta)
        rep = verify_sufficiency(H, "parity", delta // k, delta=delta)
        div_samples += 1
        div_full += rep.rank_full
        if rep.rank_full and not (is_left_prime(H) and H @ rep.witness == PolyMatrix.identity(field, n - k)
                                  and rep.witness.degree <= delta // k):
            violations += 1

    s_samples = s_full = 0
    while s_samples < 100:
        field = GF(rng.choice([2, 3, 5]))
        n = rng.randint(3, 5)
        k = rng.randint(1, n - 2)
        c = n - k
        delta = rng.choice([d for d in range(1, 2 * c + 1) if d % c and -(-d // c) <= 2])
        t = delta - c * (delta // c)
        S = tuple(sorted(rng.sample(range(1, c + 1), t)))
        H = _generic_parity(rng, field, n, k, delta, top_rows=S)
        start = max(0, math.ceil(Fraction(delta - k, k)))
        for r in (start, start + 1):
            rep = verify_sufficiency(H, "parity", r, S=S, delta=delta)
            s_samples += 1
            s_full += rep.rank_full
            if rep.rank_full and not (is_left_prime(H) and H @ rep.witness == PolyMatrix.identity(field, c)):
                violations += 1
    ok = violations == 0 and div_full > 0 and s_full > 0
    verdict(
        3,
        "full-rank stack implies left prime with verified witness",
        ok,
        f"{div_samples} divisible samples ({div_full} full rank), "
        f"{s_samples} truncated samples ({s_full} full rank), {violations} violations",
    )


# 4 --------------------------------------------------------------------------

def test_criterion_4_left_prime_methods_agree(verdict):
    rng = random.Random(4444)
    samples = disagreements = prime = deficient = 0
    while samples < 500:
        field = GF(rng.choice([2, 3, 5]))
        r = rng.randint(1, 4)
        c = rng.randint(r, 6)
        if rng.random() < 0.4:
            # force a nontrivial left factor
            inner = rand_matrix(rng, field, r, c, 2)
            left = PolyMatrix.identity(field, r)
            i = rng.randrange(r)
            g = rand_poly(rng, field, 1, 0)
            left = PolyMatrix(field, [[g if a == b == i else left[a, b] for b in range(r)] for a in range(r)])
            M = left @ inner
        else:
            M = rand_matrix(rng, field, r, c, 3)
        if M.degree > 3:
            continue
        samples += 1
        answers = []
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            for m in METHODS:
                try:
                    answers.append(is_left_prime(M, m))
                except RankDeficientError:
                    answers.append("rank deficient")
        if len(set(answers)) != 1:
            disagreements += 1
        prime += answers[0] is True
        deficient += answers[0] == "rank deficient"
    verdict(
        4,
        "minor_gcd, smith and right_inverse agree",
        disagreements == 0,
        f"{samples} matrices, {prime} left prime, {deficient} rank deficient, {disagreements} disagreements",
    )


# 5 --------------------------------------------------------------------------

def test_criterion_5_characterization(verdict):
    violations = literal_disagreements = codes = 0
    for q in (2, 3, 5):
        field = GF(q)
        for m0 in itertools.product(range(q), repeat=2):
            if not any(m0):
                continue
            for m1 in itertools.product(range(q), repeat=2):
                M = PolyMatrix.from_coefficients(field, [[list(m0)], [list(m1)]])
                for side in ("parity", "generator"):
                    codes += 1
                    d = column_distances(ConvCode(side, M), 2)
                    for j in range(3):
                        target = d[j] == j + 2
                        violations += check_mdp_criterion(M, side, j, "structural").holds != target
                        literal_disagreements += check_mdp_criterion(M, side, j, "literal").holds != target
    verdict(
        5,
        "structural criterion iff d_j = j + 2 on all (2,1,1) codes",
        violations == 0,
        f"{codes} matrices, {violations} violations, literal-mode disagreements: {literal_disagreements}",
    )


# 6 --------------------------------------------------------------------------

def test_criterion_6_search(verdict):
    res3 = search_mdp(SearchConfig(2, 1, 1, 3))
    res2 = search_mdp(SearchConfig(2, 1, 1, 2))
    target = PolyMatrix(GF(3), [[[1, 1], [1, 2]]])
    profiles_ok = True
    for hit in res3.hits:
        code = ConvCode("parity", hit.matrix)
        fd = free_distance(code)
        profiles_ok &= column_distances(code, 2) == [2, 3, 4]
        profiles_ok &= fd.certified and fd.value == 4 == singleton_bound(2, 1, 1)
    ok = (
        len(res3.hits) >= 1
        and not res3.truncated
        and any(row_equivalent(h.matrix, target) for h in res3.hits)
        and profiles_ok
        and res2.hits == []
        and not res2.truncated
    )
    verdict(
        6,
        "MDP (2,1,1) codes exist over GF(3) but not GF(2)",
        ok,
        f"GF(3): {len(res3.hits)} hits of {res3.candidates}; GF(2): {len(res2.hits)} hits of {res2.candidates}",
    )


# 7 --------------------------------------------------------------------------

def test_criterion_7_epsilon_equivalence(verdict):
    instances = mismatches = true_parity = 0
    half_violations = 0
    for n in range(3, 13):
        for k in range(1, n):
            for delta in range(1, 13):
                if delta % k == 0 or delta % (n - k) == 0:
                    continue
                eps1 = Fraction(delta, k) - delta // k
                eps2 = Fraction(delta, n - k) - delta // (n - k)
                for side in ("parity", "generator"):
                    instances += 1
                    cond = epsilon_condition(n, k, delta, side)
                    rg = r_feasible_range(n, k, delta, side)
                    mismatches += cond != (rg.lower <= rg.upper)
                    if cond and side == "parity":
                        true_parity += 1
                        half_violations += eps2 <= Fraction(1, 2)
                    if cond and side == "generator":
                        half_violations += eps1 <= Fraction(1, 2)
    verdict(
        7,
        "epsilon condition iff lower <= upper",
        mismatches == 0 and half_violations == 0,
        f"{instances} instances, {mismatches} mismatches, {true_parity} true parity instances, "
        f"{half_violations} with eps <= 1/2",
    )


# 8 --------------------------------------------------------------------------

def test_criterion_8_smith_and_row_reduce(verdict):
    rng = random.Random(8888)
    samples = failures = reduced = 0
    while samples < 500:
        field = GF(rng.choice([2, 3, 5]))
        r = rng.randint(1, 4)
        c = rng.randint(r, 6) if rng.random() < 0.8 else r
        M = rand_matrix(rng, field, r, c, 3)
        samples += 1
        S = smith(M)
        nz = [f for f in S.factors if f.coeffs]
        ok = S.U @ S.D @ S.V == M and is_unimodular(S.U) and is_unimodular(S.V)
        ok &= all(a.divides(b) for a, b in zip(nz, nz[1:]))
        if r <= 3 and c <= 4:
            ok &= list(S.factors) == invariant_factors_by_minors(M)
        if rank_rational(M) == r:
            rr = row_reduce(M)
            reduced += 1
            ok &= rr.U @ M == rr.R and is_unimodular(rr.U)
            ok &= linalg.rank(field, rr.leading_row_matrix) == r
            ok &= sum(rr.row_degrees) <= sum(M.row_degrees())
            if r == c:
                ok &= sum(rr.row_degrees) == determinant(M).degree
        failures += not ok
    verdict(8, "Smith and row reduction algebra", failures == 0,
            f"{samples} Smith checks, {reduced} row reductions, {failures} failures")


# 9 --------------------------------------------------------------------------

def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "mdpconv", *argv, "--json"], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def test_criterion_9_cli(verdict, tmp_path):
    ex = paper_example_3_1()
    text = format_matrix(ex.H)
    round_trip = parse_matrix(text) == ex.H and format_matrix(parse_matrix(text)) == text
    mdp_file = tmp_path / "mdp.txt"
    mdp_file.write_text(format_matrix(PolyMatrix(GF(3), [[[1, 1], [1, 2]]])))

    runs = {
        "example": ("example-3-1",),
        "counterexample": ("counterexample", "--n", "5", "--k", "2", "--delta", "1", "--q", "11"),
        "counterexample-gen": ("counterexample", "--n", "5", "--k", "2", "--delta", "1", "--q", "11",
                               "--side", "generator"),
        "verify": ("verify", str(mdp_file), "--n", "2", "--k", "1", "--delta", "1"),
    }
    out = {}
    stable = True
    for name, argv in runs.items():
        a, b = _cli(*argv), _cli(*argv)
        stable &= a == b and a[0] == 0
        out[name] = json.loads(a[1]) if a[0] == 0 else {}
    e, c, g, v = out["example"], out["counterexample"], out["counterexample-gen"], out["verify"]
    facts = (
        e.get("degree") == 1
        and e.get("row_degree_sum_H") == 3
        and e.get("max_minor_degree_H") == 3
        and e.get("H_left_prime") is False
        and e.get("H_tilde_left_prime") is True
        and e.get("same_code") is True
        and c.get("criterion", {}).get("holds") is True
        and c.get("left_prime") is False
        and c.get("degree") == 0
        and c.get("vanishes_at_one") is True
        and g.get("refutes") is True
        and v.get("passed") is True
        and v.get("degree") == 1
    )
    verdict(9, "CLI reproduces criteria 1, 2 and the GF(3) audit", round_trip and stable and facts,
            f"round trip {round_trip}, stable {stable}, facts {facts}")

