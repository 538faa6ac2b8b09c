"""Exact Kirchhoff indices of enhanced hypercubes and the monotonicity machinery.

All results are `fractions.Fraction`, which is already canonical (lowest terms,
positive denominator, zero as 0/1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .group_core import EnhancedParams, ParameterError
from .spectrum import LAPLACIAN, Spectrum, binom


class DomainError(ValueError):
    """Raised when an input is outside the domain of a formula (e.g. a disconnected graph)."""


class CertificateError(ArithmeticError):
    """Raised when two evaluation routes that must agree do not."""


def kf_from_laplacian(spec: Spectrum) -> Fraction:
    """|V| times the sum of reciprocal nonzero Laplacian eigenvalues."""
    if spec.kind != LAPLACIAN:
        raise DomainError("expected a Laplacian spectrum")
    zero_mult = spec.multiplicity(0)
    if zero_mult != 1:
        raise DomainError(f"eigenvalue 0 has multiplicity {zero_mult}; graph is not connected")
    total = sum((Fraction(m, mu) for mu, m in spec.entries if mu != 0), Fraction(0))
    return spec.order * total


def kf_closed_form(params: EnhancedParams) -> Fraction:
    """Double-sum formula; t runs to n when n and k share parity, else to n-1."""
    n, k = params.n, params.k
    t_max = n if (n - k) % 2 == 0 else n - 1
    a, b = n - k + 2, k - 1
    total = Fraction(0)
    for t in range(t_max + 1):
        # binom(a, 2j) * binom(b, t+1-2j) vanishes unless 2j <= a and t+1-2j <= b
        j_lo = max(0, (t + 1 - b + 1) // 2)
        j_hi = min(a // 2, (t + 1) // 2)
        inner = sum(binom(a, 2 * j) * binom(b, t + 1 - 2 * j) for j in range(j_lo, j_hi + 1))
        if inner:
            total += Fraction(inner, t + 1)
    return 2 ** (n - 1) * total


def even_binomial_identity_sides(n: int) -> tuple[Fraction, Fraction]:
    """Both sides of sum_i binom(n+1, 2i)/(2i) = sum_s (2^s - 1)/(s+1), i, s = 1..n."""
    if n < 1:
        raise ParameterError(f"need n >= 1, got {n}")
    lhs = sum((Fraction(binom(n + 1, 2 * i), 2 * i) for i in range(1, n + 1)), Fraction(0))
    rhs = sum((Fraction(2**s - 1, s + 1) for s in range(1, n + 1)), Fraction(0))
    return lhs, rhs


def _folded_sum(n: int) -> Fraction:
    return sum((Fraction(2**t - 1, t + 1) for t in range(1, n + 1)), Fraction(0))


def _k_max_sum(n: int) -> Fraction:
    head = sum((Fraction(2**t - 1, t) for t in range(1, n - 1)), Fraction(0))
    return head + Fraction(3 * ((n - 2) * 2 ** (n - 1) + 1), n * (n - 1))


def kf_folded(n: int) -> Fraction:
    """Kirchhoff index of Q_{n,1}, the folded hypercube."""
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    return 2 ** (n - 1) * _folded_sum(n)


def kf_k_max(n: int) -> Fraction:
    """Kirchhoff index of Q_{n,n-1}."""
    if n < 2:
        raise ParameterError(f"need n >= 2, got {n}")
    return 2 ** (n - 1) * _k_max_sum(n)


def delta_unified(n: int, k: int) -> Fraction:
    """Kf(Q_{n,k+1}) - Kf(Q_{n,k}) as the single parity-free double sum."""
    a, b = n - k + 1, k - 1
    total = Fraction(0)
    for t in range(n + 1):
        inner = sum(
            binom(a, 2 * j) * binom(b, t - 2 * j) - binom(a, 2 * j - 1) * binom(b, t - 2 * j + 1)
            for j in range(n + 1)
        )
        if inner:
            total += Fraction(inner, t + 1)
    return 2 ** (n - 1) * total


def delta_k(n: int, k: int) -> Fraction:
    """Increment of the Kirchhoff index from k to k+1, cross-checked two ways."""
    if not 1 <= k <= n - 2:
        raise ParameterError(f"delta_k needs 1 <= k <= n-2, got n={n}, k={k}")
    by_difference = kf_closed_form(EnhancedParams(n, k + 1)) - kf_closed_form(EnhancedParams(n, k))
    by_sum = delta_unified(n, k)
    if by_difference != by_sum:
        raise CertificateError(f"increment mismatch at n={n}, k={k}: {by_difference} != {by_sum}")
    return by_sum


def f_double_sum(n: int, k: int) -> Fraction:
    a, b = n - k, k - 1
    total = Fraction(0)
    for t in range(n + 1):
        inner = sum(
            binom(a, 2 * j) * binom(b, t - 2 * j - 1) - binom(a, 2 * j - 1) * binom(b, t - 2 * j)
            for j in range(n + 1)
        )
        if inner:
            total += Fraction(inner, t + 1)
    return total


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def f_integral(n: int, k: int) -> Fraction:
    """Integral over [0, 1] of u (1-u)^(n-k) (1+u)^(k-1), by exact expansion."""
    minus = [(-1) ** i * binom(n - k, i) for i in range(n - k + 1)]
    plus = [binom(k - 1, i) for i in range(k)]
    coeffs = _poly_mul(minus, plus)
    # extra factor u shifts degree i to i+1, whose integral is 1/(i+2)
    return sum((Fraction(c, i + 2) for i, c in enumerate(coeffs)), Fraction(0))


@dataclass(frozen=True)
class MonotonicityCertificate:
    n: int
    k: int
    f_sum: Fraction
    f_integral: Fraction
    delta: Optional[Fraction]  # None when k = n-1 (no Q_{n,k+1})

    def __post_init__(self):
        if self.f_sum != self.f_integral:
            raise CertificateError(f"F({self.n},{self.k}): sum {self.f_sum} != integral {self.f_integral}")
        if self.f_sum < 0:
            raise CertificateError(f"F({self.n},{self.k}) = {self.f_sum} is negative")
        if self.delta is not None and self.delta <= 0:
            raise CertificateError(f"increment at n={self.n}, k={self.k} is not positive: {self.delta}")


def monotonicity_certificate(n: int, k: int) -> MonotonicityCertificate:
    EnhancedParams(n, k)
    delta = delta_k(n, k) if k <= n - 2 else None
    return MonotonicityCertificate(n, k, f_double_sum(n, k), f_integral(n, k), delta)


def bounds(n: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bound on Kf(Q_{n,k}) over all admissible k."""
    return kf_folded(n), kf_k_max(n)


def limit_ratio(n: int, k: int) -> Fraction:
    """Kf(Q_{n,k}) / (4^n / (n+1))."""
    return kf_closed_form(EnhancedParams(n, k)) * (n + 1) / 4**n


def asymptotic_sequences(n: int) -> tuple[Fraction, Fraction]:
    """Lower and upper sequences squeezing limit_ratio(n, k) for every k."""
    if n < 3:
        raise ParameterError(f"need n >= 3, got {n}")
    scale = Fraction(2 ** (n + 1), n + 1)
    return _folded_sum(n) / scale, _k_max_sum(n) / scale
