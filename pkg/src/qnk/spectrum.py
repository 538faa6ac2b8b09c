"""Closed-form adjacency and Laplacian spectra of enhanced hypercubes Q_{n,k}."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .group_core import EnhancedParams, ParameterError

ADJACENCY = "adjacency"
LAPLACIAN = "laplacian"
KINDS = (ADJACENCY, LAPLACIAN)


def binom(a: int, b: int) -> int:
    """Binomial coefficient, zero whenever the lower index falls outside [0, a]."""
    if a < 0 or b < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalue multiset, stored as (eigenvalue, multiplicity) sorted descending."""

    entries: tuple[tuple[int, int], ...]
    n: int
    kind: str

    def __post_init__(self):
        entries = tuple((int(lam), int(m)) for lam, m in self.entries)
        object.__setattr__(self, "entries", entries)
        if self.kind not in KINDS:
            raise ValueError(f"unknown spectrum kind {self.kind!r}")
        for (a, _), (b, _) in zip(entries, entries[1:]):
            if not a > b:
                raise ValueError("eigenvalues must be distinct and sorted descending")
        if any(m < 1 for _, m in entries):
            raise ValueError("multiplicities must be positive")
        if sum(m for _, m in entries) != 1 << self.n:
            raise ValueError(f"multiplicities do not sum to 2^{self.n}")

    @classmethod
    def from_values(cls, values: Iterable[int], n: int, kind: str) -> Spectrum:
        counts = Counter(values)
        return cls(tuple(sorted(counts.items(), reverse=True)), n, kind)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def multiplicity(self, eigenvalue: int) -> int:
        return self.as_dict().get(eigenvalue, 0)

    @property
    def order(self) -> int:
        return sum(m for _, m in self.entries)

    def moment(self, p: int) -> int:
        return sum(m * lam**p for lam, m in self.entries)

    def is_symmetric(self) -> bool:
        d = self.as_dict()
        return all(d.get(-lam) == m for lam, m in d.items())

    def to_json_obj(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "entries": [[lam, str(m)] for lam, m in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: dict) -> Spectrum:
        return cls(tuple((int(lam), int(m)) for lam, m in obj["entries"]), int(obj["n"]), obj["kind"])

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["eigenvalue", "multiplicity"])
        writer.writerows(self.entries)
        return buf.getvalue()


@dataclass(frozen=True)
class RawFamilies:
    """The two eigenvalue families before coinciding values are merged.

    zeta: (t, n-2t-1, alpha_t) for t = 1..n; xi: (t, n-2t+1, beta_t) for t = 0..n.
    """

    zeta: tuple[tuple[int, int, int], ...]
    xi: tuple[tuple[int, int, int], ...]

    def alpha(self, t: int) -> int:
        return self.zeta[t - 1][2]

    def beta(self, t: int) -> int:
        return self.xi[t][2]


# Each multiplicity below is a sum over j of binom(a, 2j + s) * binom(b, t - 2j + u).
# The loose variants run j over the literal range written down by hand (0..n or
# 1..n); the default ones restrict j to the terms that can be nonzero.

def _parity_sum(a: int, b: int, t: int, shift_a: int, shift_b: int, j_range: range) -> int:
    return sum(binom(a, 2 * j + shift_a) * binom(b, t - 2 * j + shift_b) for j in j_range)


def _tight_range(a: int, b: int, t: int, shift_a: int, shift_b: int, j_min: int) -> range:
    # need 0 <= 2j + shift_a <= a and 0 <= t - 2j + shift_b <= b
    lo = max(j_min, -(shift_a // 2), -((b - t - shift_b) // 2))
    hi = min((a - shift_a) // 2, (t + shift_b) // 2)
    return range(lo, hi + 1) if hi >= lo else range(0)


def alpha_t(t: int, params: EnhancedParams, loose: bool = False) -> int:
    """Number of characters with weight t and odd weight on coordinates k..n."""
    n, k = params.n, params.k
    a, b = n - k + 1, k - 1
    j_range = range(1, n + 1) if loose else _tight_range(a, b, t, -1, 1, 1)
    return _parity_sum(a, b, t, -1, 1, j_range)


def beta_t(t: int, params: EnhancedParams, loose: bool = False) -> int:
    """Number of characters with weight t and even weight on coordinates k..n."""
    n, k = params.n, params.k
    a, b = n - k + 1, k - 1
    j_range = range(0, n + 1) if loose else _tight_range(a, b, t, 0, 0, 0)
    return _parity_sum(a, b, t, 0, 0, j_range)


def gamma_t(t: int, params: EnhancedParams, loose: bool = False) -> int:
    """Multiplicity of the merged eigenvalue n-2t-1.

    For 1 <= t <= n-1 this is the single-sum form over binom(n-k+2, 2j);
    for t = n it is alpha_n, the multiplicity of -(n+1).
    """
    n, k = params.n, params.k
    if t == n:
        return alpha_t(n, params, loose)
    if not 1 <= t <= n - 1:
        raise ParameterError(f"gamma_t needs 1 <= t <= n, got t={t}")
    a, b = n - k + 2, k - 1
    j_range = range(0, n + 1) if loose else _tight_range(a, b, t, 0, 1, 0)
    return _parity_sum(a, b, t, 0, 1, j_range)


def raw_eigenvalue_families(params: EnhancedParams, loose: bool = False) -> RawFamilies:
    n = params.n
    zeta = tuple((t, n - 2 * t - 1, alpha_t(t, params, loose)) for t in range(1, n + 1))
    xi = tuple((t, n - 2 * t + 1, beta_t(t, params, loose)) for t in range(0, n + 1))
    return RawFamilies(zeta, xi)


def adjacency_spectrum(params: EnhancedParams) -> Spectrum:
    n, k = params.n, params.k
    rows = [(n + 1, 1), (n - 1, k - 1)]
    rows += [(n - 2 * t - 1, gamma_t(t, params)) for t in range(1, n)]
    rows.append((-n - 1, gamma_t(n, params)))
    return Spectrum(tuple((lam, m) for lam, m in rows if m > 0), n, ADJACENCY)


def to_laplacian(spec: Spectrum, degree: int) -> Spectrum:
    if spec.kind != ADJACENCY:
        raise ValueError("expected an adjacency spectrum")
    return Spectrum(tuple((degree - lam, m) for lam, m in reversed(spec.entries)), spec.n, LAPLACIAN)


def laplacian_spectrum(params: EnhancedParams) -> Spectrum:
    return to_laplacian(adjacency_spectrum(params), params.n + 1)


def folded_spectrum(n: int, kind: str = ADJACENCY) -> Spectrum:
    """Spectrum of Q_{n,1} from its binomial closed form.

    The eigenvalue n+1-4i carries multiplicity binom(n+1, 2i); for odd n the
    last term is -(n+1) once, for even n it is 1-n with multiplicity n+1.
    """
    if n < 2:
        raise ParameterError(f"folded hypercube needs n >= 2, got {n}")
    if kind not in KINDS:
        raise ValueError(f"unknown spectrum kind {kind!r}")
    rows = [(n + 1 - 4 * i, comb(n + 1, 2 * i)) for i in range((n + 1) // 2 + 1)]
    spec = Spectrum(tuple(rows), n, ADJACENCY)
    return spec if kind == ADJACENCY else to_laplacian(spec, n + 1)


def spectral_gap(params: EnhancedParams) -> int:
    """Difference between the two largest adjacency eigenvalues."""
    (top, _), (second, _) = adjacency_spectrum(params).entries[:2]
    return top - second


def is_bipartite_by_parity(params: EnhancedParams) -> bool:
    return (params.n - params.k) % 2 == 0
