"""
Catastrophic MDP matrices and a small search
============================================

With L = 0 the minor criterion only sees the constant coefficient, so
M(z) = M0 - M0 z with a Cauchy M0 passes it while M(1) = 0.  The search
then looks for genuine (2,1,1) MDP parity-check matrices.
"""

from mdpconv import GF, SearchConfig, cauchy_matrix, counterexample_L0, search_mdp

F = GF(11)
print("Cauchy 3x5 over GF(11):")
for row in cauchy_matrix(F, 3, 5):
    print("  ", row)

for side in ("parity", "generator"):
    ce = counterexample_L0(5, 2, 1, F, side)
    print(f"{side}: criterion {ce.criterion.holds}, left prime {ce.left_prime}, "
          f"degree {ce.degree}, M(1) = 0: {ce.vanishes_at_one}")

for q in (2, 3, 5):
    res = search_mdp(SearchConfig(2, 1, 1, q))
    print(f"GF({q}): {len(res.hits)} MDP matrices among {res.candidates} candidates")
    for hit in res.hits[:4]:
        print("   ", hit.matrix)
