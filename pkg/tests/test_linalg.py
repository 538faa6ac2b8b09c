import random
from fractions import Fraction

import pytest

from qnk.linalg import SingularMatrixError, fraction_inverse, hadamard_bound, integer_adjugate


def det_by_permutations(a):
    from itertools import permutations

    n = len(a)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = sign
        for i, j in enumerate(perm):
            prod *= a[i][j]
        total += prod
    return total


@pytest.mark.parametrize("seed", range(8))
def test_modular_and_fraction_routes_agree(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 6)
    while True:
        a = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(m)]
        if det_by_permutations(a):
            break
    adj, det = integer_adjugate(a)
    assert det == det_by_permutations(a)
    inv = fraction_inverse(a)
    assert all(Fraction(adj[i][j], det) == inv[i][j] for i in range(m) for j in range(m))
    assert abs(det) <= hadamard_bound(a)


def test_needs_row_swap():
    a = [[0, 1], [1, 0]]
    assert integer_adjugate(a) == ([[0, -1], [-1, 0]], -1)
    assert fraction_inverse(a) == [[0, 1], [1, 0]]


def test_singular():
    with pytest.raises(SingularMatrixError):
        integer_adjugate([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError):
        fraction_inverse([[1, 2], [2, 4]])


def test_large_entries_need_several_primes():
    a = [[10**12, 1], [3, 10**12 + 7]]
    adj, det = integer_adjugate(a)
    assert det == 10**12 * (10**12 + 7) - 3
    assert adj == [[10**12 + 7, -1], [-3, 10**12]]
