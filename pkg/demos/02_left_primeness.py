"""
Left primeness and row reduction
================================

A parity-check matrix over GF(2) whose rows share the factor 1 + z, and the
left prime matrix that describes the same code.
"""

from pathlib import Path

from mdpconv import (
    ConvCode,
    code_degree,
    is_left_prime,
    left_prime_factorization,
    right_inverse,
    row_equivalent,
    row_reduce,
    smith,
)
from mdpconv.fileformat import read_matrix
from mdpconv.poly_matrix import max_minor_degree

data = Path(__file__).parent / "data"
H = read_matrix(data / "example_3_1_H.txt")
H_tilde = read_matrix(data / "example_3_1_H_tilde.txt")
print("H =", H)

# the naive degree measures overshoot
print("row-degree sum:", sum(H.row_degrees()))
print("max full-size minor degree:", max_minor_degree(H))
print("code degree:", code_degree(ConvCode("parity", H)))

# Smith form exposes the common factor
S = smith(H)
print("invariant factors:", [str(f) for f in S.factors])

for method in ("minor_gcd", "smith", "right_inverse"):
    print(f"left prime ({method}):", is_left_prime(H, method), "/", is_left_prime(H_tilde, method))

# strip the left factor; what remains spans the same code as H_tilde
F, P = left_prime_factorization(H)
print("left factor F =", F)
print("P row-equivalent to H_tilde:", row_equivalent(P, H_tilde))

X = right_inverse(H_tilde)
print("right inverse of H_tilde:", X, "check:", H_tilde @ X)

rr = row_reduce(P)
print("row-reduced P:", rr.R, "row degrees", rr.row_degrees)
