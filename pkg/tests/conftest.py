import random

import pytest

from mdpconv.finite_field import GF
from mdpconv.poly import Poly
from mdpconv.poly_matrix import PolyMatrix


def rand_poly(rng: random.Random, F: GF, deg: int, p_zero: float = 0.15) -> Poly:
    if rng.random() < p_zero:
        return Poly.zero(F)
    return Poly(F, [rng.randrange(F.q) for _ in range(deg + 1)])


def rand_matrix(rng: random.Random, F: GF, rows: int, cols: int, deg: int, p_zero: float = 0.15) -> PolyMatrix:
    return PolyMatrix(F, [[rand_poly(rng, F, rng.randint(0, deg), p_zero) for _ in range(cols)] for _ in range(rows)])


@pytest.fixture
def gf2():
    return GF(2)


@pytest.fixture
def gf3():
    return GF(3)


@pytest.fixture
def example_H(gf2):
    return PolyMatrix(gf2, [[[0, 1, 1], 0, [1, 1]], [0, [1, 1], [1, 1]]])


@pytest.fixture
def example_Ht(gf2):
    return PolyMatrix(gf2, [[[0, 1], 0, 1], [0, 1, 1]])


@pytest.fixture
def mdp_H(gf3):
    return PolyMatrix(gf3, [[[1, 1], [1, 2]]])
