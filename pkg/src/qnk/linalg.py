"""Exact inverses of integer matrices.

Two independent routes:

* `fraction_inverse`: Gauss-Jordan over `Fraction`, pivoting on the first
  nonzero entry. Cubic in Python objects, fine up to a few dozen rows.
* `integer_adjugate`: multi-modular Gauss-Jordan with numpy int64 arithmetic
  modulo word-sized primes, recombined by CRT. The number of primes is fixed
  in advance by Hadamard's bound, so the recovered adjugate and determinant
  are exact, not probabilistic. A Freivalds-style product check guards the
  result anyway.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt, prod
from typing import Sequence

import numpy as np

Matrix = Sequence[Sequence[int]]


class SingularMatrixError(ArithmeticError):
    pass


def fraction_inverse(matrix: Matrix) -> list[list[Fraction]]:
    m = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(matrix)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        row = aug[col]
        inv = 1 / row[col]
        row = [x * inv for x in row]
        aug[col] = row
        for r in range(m):
            f = aug[r][col]
            if r != col and f != 0:
                aug[r] = [x - f * y for x, y in zip(aug[r], row)]
    return [row[m:] for row in aug]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for p < 3.4e14
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def _primes_below(limit: int):
    p = limit - 1
    while p > 2:
        if _is_prime(p):
            yield p
        p -= 1


# products of two residues must fit in int64
_PRIME_LIMIT = 1 << 31


def hadamard_bound(matrix: Matrix) -> int:
    """Integer upper bound on |det| of the matrix and of every minor."""
    return prod(isqrt(sum(x * x for x in row)) + 1 for row in matrix)


def _inverse_mod(a: np.ndarray, p: int) -> tuple[np.ndarray, int] | None:
    """(inverse mod p, det mod p), or None if singular modulo p."""
    m = a.shape[0]
    aug = np.concatenate([a % p, np.eye(m, dtype=np.int64)], axis=1)
    det = 1
    for col in range(m):
        nz = np.flatnonzero(aug[col:, col])
        if nz.size == 0:
            return None
        r = col + int(nz[0])
        if r != col:
            aug[[col, r]] = aug[[r, col]]
            det = -det
        pivot = int(aug[col, col])
        det = det * pivot % p
        # left columns before col are already reduced; skip them
        window = aug[:, col:]
        row = window[col] * pow(pivot, -1, p) % p
        window[col] = row
        factors = window[:, 0].copy()
        factors[col] = 0
        rows = np.flatnonzero(factors)
        if rows.size:
            sub = window[rows]
            update = np.multiply.outer(factors[rows], row)
            np.remainder(update, p, out=update)
            sub -= update
            sub += p * (sub < 0)
            window[rows] = sub
    return aug[:, m:], det % p


def integer_adjugate(matrix: Matrix) -> tuple[list[list[int]], int]:
    """Return (adj, det) with matrix @ adj == det * I, all exact integers."""
    m = len(matrix)
    a = np.array(matrix, dtype=np.int64)
    bound = hadamard_bound(matrix)
    modulus = 1
    det_acc = 0
    adj_acc = np.zeros((m, m), dtype=object)
    # a nonzero det <= bound has fewer than this many prime factors above 2^30
    max_unlucky = bound.bit_length() // 30 + 1
    unlucky = 0
    for p in _primes_below(_PRIME_LIMIT):
        if modulus > 2 * bound:
            break
        res = _inverse_mod(a, p)
        if res is None:
            unlucky += 1
            if unlucky > max_unlucky:
                raise SingularMatrixError("matrix is singular")
            continue
        inv_p, det_p = res
        adj_p = (inv_p * det_p % p).astype(object)
        # Garner step: lift the accumulated residues to the new modulus
        m_inv = pow(modulus % p, -1, p)
        det_acc += modulus * ((det_p - det_acc) * m_inv % p)
        adj_acc = adj_acc + modulus * (((adj_p - adj_acc) * m_inv) % p)
        modulus *= p
    half = modulus // 2
    det = det_acc - modulus if det_acc > half else det_acc
    adj = [[int(x) - modulus if x > half else int(x) for x in row] for row in adj_acc]
    if det == 0:
        raise SingularMatrixError("matrix is singular")
    _check_product(matrix, adj, det)
    return adj, det


def _check_product(matrix: Matrix, adj: list[list[int]], det: int, trials: int = 2) -> None:
    rng = random.Random(0x5EED)
    m = len(matrix)
    for _ in range(trials):
        v = [rng.randrange(-1000, 1000) for _ in range(m)]
        w = [sum(x * y for x, y in zip(row, v)) for row in adj]
        lhs = [sum(x * y for x, y in zip(row, w)) for row in matrix]
        if lhs != [det * x for x in v]:
            raise ArithmeticError("multi-modular inverse failed its product check")
