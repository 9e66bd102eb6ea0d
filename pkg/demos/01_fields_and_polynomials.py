"""
Finite fields and polynomials
=============================

Field elements are small integers; extension fields pick the smallest
irreducible modulus unless one is given.
"""

from mdpconv import GF, Poly, find_irreducible, poly_gcd

# the default modulus for GF(9) is z^2 + 1
print("GF(9) modulus:", find_irreducible(3, 2))

F4 = GF(2, 2)
alpha = F4((0, 1))
print("in GF(4): alpha^2 =", alpha * alpha, "= alpha + 1:", alpha * alpha == alpha + F4(1))
print("in GF(7): 1/3 =", GF(7)(3).inverse())

# polynomials keep ascending coefficients; the zero polynomial has degree -inf
F2 = GF(2)
a = Poly(F2, [1, 0, 1])  # 1 + z^2 = (1 + z)^2
b = Poly(F2, [1, 1])
print("gcd(1 + z^2, 1 + z) =", poly_gcd(a, b))
print("deg 0 =", Poly.zero(F2).degree)
