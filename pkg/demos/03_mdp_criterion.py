"""
Sliding matrices, the minor criterion and column distances
==========================================================

H = [1+z, 1+2z] over GF(3) defines a (2,1,1) code.  Its column distances
meet the upper bound (n-k)(j+1)+1 for every j up to L = 2, and the minor
criterion on the sliding matrix says the same thing.
"""

from pathlib import Path

from mdpconv import (
    GF,
    ConvCode,
    PolyMatrix,
    check_mdp_criterion,
    column_bound,
    column_distances,
    free_distance,
    mdp_index_sets,
    sliding,
)
from mdpconv.fileformat import read_matrix

H = read_matrix(Path(__file__).parent / "data" / "gf3_mdp.txt")
code = ConvCode("parity", H)
print("generator:", code.generator, "degree:", code.degree, "L:", code.params.L)

for row in sliding(H, "parity", 2).base:
    print("  ", row)

for mode in ("structural", "literal"):
    sets = list(mdp_index_sets("parity", 1, 2, 1, mode))
    print(f"{mode} index sets at j=1:", sets)

for j in range(3):
    v = check_mdp_criterion(H, "parity", j)
    print(f"j={j}: criterion {v.holds} ({v.checked} minors)")

print("column distances:", column_distances(code, 2))
print("bounds:          ", [column_bound(2, 1, j) for j in range(3)])
print("free distance:", free_distance(code))

# a non-MDP code for contrast
G = ConvCode("generator", PolyMatrix(GF(2), [[[1, 1], 1]]))
print("[1+z, 1] over GF(2):", column_distances(G, 3), free_distance(G))
print("first vanishing minor:", check_mdp_criterion(G.matrix, "generator", 2).first_failure)
