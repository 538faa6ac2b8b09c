"""Elementary abelian 2-groups, their characters, and the enhanced-hypercube connection set.

Elements of Z_2^n are stored as integers. Bit 0 of the word is coordinate 1
(the generator e_1), bit n-1 is coordinate n. Every mask below derives from
that single convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_DIMENSION = 64


class ParameterError(ValueError):
    """Raised when (n, k) or another parameter lies outside its domain."""


class DimensionMismatchError(ValueError):
    """Raised when two group elements live in groups of different dimension."""


@dataclass(frozen=True, order=True)
class GroupElement:
    """An element of Z_2^n, equally usable as the index of a character."""

    bits: int
    n: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DIMENSION:
            raise ParameterError(f"dimension must satisfy 1 <= n <= {MAX_DIMENSION}, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ParameterError(f"bits {self.bits:#x} do not fit in dimension {self.n}")

    @classmethod
    def identity(cls, n: int) -> GroupElement:
        return cls(0, n)

    @classmethod
    def unit(cls, i: int, n: int) -> GroupElement:
        """The standard generator e_i, 1-based."""
        if not 1 <= i <= n:
            raise ParameterError(f"unit index must satisfy 1 <= i <= n, got i={i}, n={n}")
        return cls(1 << (i - 1), n)

    @classmethod
    def from_string(cls, text: str) -> GroupElement:
        """Parse a 0/1 string whose first character is coordinate 1."""
        if not text or set(text) - {"0", "1"}:
            raise ParameterError(f"not a 0/1 string: {text!r}")
        bits = sum(1 << i for i, ch in enumerate(text) if ch == "1")
        return cls(bits, len(text))

    def to_string(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n))

    def __str__(self) -> str:
        return self.to_string()

    def __xor__(self, other: GroupElement) -> GroupElement:
        _check_same_dimension(self, other)
        return GroupElement(self.bits ^ other.bits, self.n)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_identity(self) -> bool:
        return self.bits == 0


def _check_same_dimension(a: GroupElement, b: GroupElement) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"dimension mismatch: {a.n} != {b.n}")


def all_elements(n: int) -> Iterator[GroupElement]:
    for bits in range(1 << n):
        yield GroupElement(bits, n)


@dataclass(frozen=True)
class GeneratingSet:
    """Duplicate-free, identity-free subset of Z_2^n.

    Symmetry is automatic because every element is an involution.
    """

    elements: tuple[GroupElement, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        seen = set()
        for s in self.elements:
            if s.n != self.n:
                raise DimensionMismatchError(f"element {s} has dimension {s.n}, expected {self.n}")
            if s.is_identity():
                raise ParameterError("a connection set may not contain the identity")
            if s.bits in seen:
                raise ParameterError(f"duplicate element {s}")
            seen.add(s.bits)

    @classmethod
    def from_bits(cls, words: Iterable[int], n: int) -> GeneratingSet:
        return cls(tuple(GroupElement(w, n) for w in words), n)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    @property
    def words(self) -> tuple[int, ...]:
        return tuple(s.bits for s in self.elements)


@dataclass(frozen=True)
class EnhancedParams:
    """Parameters of Q_{n,k}.

    Closed-form computations accept any n >= 2; anything that materialises
    group elements is limited to n <= MAX_DIMENSION.
    """

    n: int
    k: int

    def __post_init__(self):
        if not isinstance(self.n, int) or not isinstance(self.k, int):
            raise ParameterError("n and k must be integers")
        if not (self.n >= 2 and 1 <= self.k <= self.n - 1):
            raise ParameterError(f"invalid parameters n={self.n}, k={self.k}: require 1 <= k <= n-1, n >= 2")

    @property
    def tail_mask(self) -> int:
        """Mask of coordinates k..n, i.e. the word of the extra generator."""
        return ((1 << self.n) - 1) ^ ((1 << (self.k - 1)) - 1)


def build_enhanced_generating_set(params: EnhancedParams) -> GeneratingSet:
    """Return {e_1, ..., e_n, eps_k} where eps_k = e_k + ... + e_n."""
    n = params.n
    units = [1 << i for i in range(n)]
    return GeneratingSet.from_bits(units + [params.tail_mask], n)


def character_value(chi_index: GroupElement, a: GroupElement) -> int:
    _check_same_dimension(chi_index, a)
    return -1 if (chi_index.bits & a.bits).bit_count() & 1 else 1


def eigenvalue_by_character(chi_index: GroupElement, s: GeneratingSet) -> int:
    """Adjacency eigenvalue of Cay(Z_2^n, s) belonging to the character chi_index."""
    if chi_index.n != s.n:
        raise DimensionMismatchError(f"dimension mismatch: {chi_index.n} != {s.n}")
    return sum(character_value(chi_index, g) for g in s)


def eigenvalue_by_weight(t: int, r: int, params: EnhancedParams) -> int:
    """Eigenvalue for a character of total weight t and weight r on coordinates k..n."""
    if not 0 <= r <= t <= params.n:
        raise ParameterError(f"require 0 <= r <= t <= n, got t={t}, r={r}, n={params.n}")
    return params.n - 2 * t + (-1) ** r
