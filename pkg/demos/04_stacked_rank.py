"""
Stacked coefficient matrices
============================

If the block-Toeplitz stack of coefficients has full row rank, solving it
against [I; 0] produces a polynomial right inverse, which proves left
primeness.  For parameters where n-k does not divide the degree, the last
block row keeps only the rows listed in S.
"""

from pathlib import Path

from mdpconv import build_stacked, epsilon_condition, r_feasible_range, verify_sufficiency
from mdpconv.fileformat import read_matrix

data = Path(__file__).parent / "data"
H = read_matrix(data / "gf3_mdp.txt")
rep = verify_sufficiency(H, "parity", r=1)
print("GF(3) code, r=1: stack", rep.shape, "full rank", rep.rank_full, "witness", rep.witness)

H_tilde = read_matrix(data / "example_3_1_H_tilde.txt")
print("H_tilde stack at r=2:", build_stacked(H_tilde, "parity", 2).shape)
rep = verify_sufficiency(H_tilde, "parity", 2)
print("  full rank:", rep.rank_full, "(the top coefficient has a zero row)")
rep = verify_sufficiency(H_tilde, "parity", 0, S=(1,), delta=1)
print("truncated stack, S=(1,):", rep.shape, "full rank", rep.rank_full, "witness", rep.witness)

# which depths r are admissible when n-k does not divide delta
for n, k, delta in [(7, 4, 5), (5, 2, 1), (7, 3, 5)]:
    rg = r_feasible_range(n, k, delta, "parity")
    try:
        eps = epsilon_condition(n, k, delta, "parity")
    except ValueError:
        eps = None
    print(f"({n},{k},{delta}): lower {rg.lower}, upper {rg.upper}, "
          f"integer feasible {rg.integer_feasible}, epsilon condition {eps}")
