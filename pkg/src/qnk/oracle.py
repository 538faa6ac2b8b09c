"""Brute-force ground truth for Q_{n,k}.

Everything here works on the explicit graph: adjacency comes straight from
the two bit-flip rules, Kirchhoff indices come from exact effective
resistances, spectra from enumerating all 2^n character sums.
"""

from __future__ import annotations

import json
import os
import warnings
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import lcm
from pathlib import Path
from typing import Sequence

from .group_core import (
    EnhancedParams,
    GeneratingSet,
    GroupElement,
    ParameterError,
    build_enhanced_generating_set,
    eigenvalue_by_character,
)
from .linalg import fraction_inverse, integer_adjugate
from .spectrum import ADJACENCY, Spectrum

ENV_ORACLE_CAP = "QNK_MAX_ORACLE_N"
DEFAULT_RESISTANCE_MAX_N = 8
DEFAULT_ENUMERATION_MAX_N = 12
DEFAULT_CONSTRUCTION_MAX_N = 16


class OracleCostWarning(UserWarning):
    pass


class DisconnectedGraphError(ValueError):
    pass


def resistance_cap() -> int:
    value = os.environ.get(ENV_ORACLE_CAP)
    return int(value) if value else DEFAULT_RESISTANCE_MAX_N


def _check_cap(n: int, cap: int, what: str, allow_large: bool) -> None:
    if n <= cap:
        return
    if not allow_large:
        raise ParameterError(f"n={n} exceeds the {what} cap of {cap}; pass allow_large to override")
    warnings.warn(f"n={n} exceeds the {what} cap of {cap}; this may take a very long time", OracleCostWarning)


@dataclass(frozen=True)
class ExplicitGraph:
    n_vertices: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for u, nbrs in enumerate(self.adjacency):
            if u in nbrs:
                raise ValueError(f"loop at vertex {u}")
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbour list of {u} is not sorted and duplicate-free")
            for v in nbrs:
                if u not in self.adjacency[v]:
                    raise ValueError(f"edge {u}-{v} is not symmetric")

    @property
    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    @property
    def n_edges(self) -> int:
        return sum(self.degrees) // 2

    def laplacian(self) -> list[list[int]]:
        size = self.n_vertices
        lap = [[0] * size for _ in range(size)]
        for u, nbrs in enumerate(self.adjacency):
            lap[u][u] = len(nbrs)
            for v in nbrs:
                lap[u][v] = -1
        return lap

    def write_edge_list(self, path) -> None:
        lines = (f"{u} {v}\n" for u, v in self.edges())
        Path(path).write_text("".join(lines))


def _neighbours_by_rules(x: str, k: int) -> list[str]:
    """Neighbours of the bit string x = x_1 ... x_n under the two flip rules."""
    flip = {"0": "1", "1": "0"}
    out = [x[:i] + flip[x[i]] + x[i + 1 :] for i in range(len(x))]
    out.append(x[: k - 1] + "".join(flip[c] for c in x[k - 1 :]))
    return out


def build_graph(params: EnhancedParams, allow_large: bool = False) -> ExplicitGraph:
    """Construct Q_{n,k} from the coordinate-flip adjacency rules.

    Vertex indices use the GroupElement convention: character i of the bit
    string is bit i-1 of the index.
    """
    _check_cap(params.n, DEFAULT_CONSTRUCTION_MAX_N, "construction", allow_large)
    n = params.n
    adjacency = []
    for u in range(1 << n):
        x = GroupElement(u, n).to_string()
        nbrs = {GroupElement.from_string(y).bits for y in _neighbours_by_rules(x, params.k)}
        adjacency.append(tuple(sorted(nbrs)))
    return ExplicitGraph(1 << n, tuple(adjacency))


def cayley_graph(s: GeneratingSet) -> ExplicitGraph:
    words = s.words
    return ExplicitGraph(1 << s.n, tuple(tuple(sorted(u ^ w for w in words)) for u in range(1 << s.n)))


def bfs_distances(g: ExplicitGraph, source: int) -> list[int]:
    dist = [-1] * g.n_vertices
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def is_connected(g: ExplicitGraph) -> bool:
    return min(bfs_distances(g, 0)) >= 0


def two_colouring(g: ExplicitGraph) -> list[int] | None:
    """A proper 2-colouring of a connected graph, or None if it has an odd cycle."""
    colour = [-1] * g.n_vertices
    colour[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if colour[v] < 0:
                colour[v] = 1 - colour[u]
                queue.append(v)
            elif colour[v] == colour[u]:
                return None
    return colour


class GroundedInverse:
    """Inverse of the Laplacian with one vertex grounded, stored as adj / det."""

    def __init__(self, g: ExplicitGraph, ground: int = 0, method: str = "modular"):
        if not is_connected(g):
            raise DisconnectedGraphError("effective resistance needs a connected graph")
        self.ground = ground
        self.size = g.n_vertices
        keep = [v for v in range(self.size) if v != ground]
        lap = g.laplacian()
        reduced = [[lap[i][j] for j in keep] for i in keep]
        if method == "modular":
            adj, det = integer_adjugate(reduced)
        elif method == "fraction":
            inv = fraction_inverse(reduced)
            det = lcm(*(x.denominator for row in inv for x in row))
            adj = [[int(x * det) for x in row] for row in inv]
        else:
            raise ValueError(f"unknown method {method!r}")
        # common denominator: the determinant for the modular route, an lcm otherwise
        self.det = det
        self._pos = {v: i for i, v in enumerate(keep)}
        self._adj = adj

    def _entry(self, i: int, j: int) -> int:
        # the grounded vertex sits at potential zero
        if i == self.ground or j == self.ground:
            return 0
        return self._adj[self._pos[i]][self._pos[j]]

    def scaled_resistance(self, i: int, j: int) -> int:
        """det times r_ij, an exact integer."""
        return self._entry(i, i) + self._entry(j, j) - 2 * self._entry(i, j)

    def resistance(self, i: int, j: int) -> Fraction:
        return Fraction(self.scaled_resistance(i, j), self.det)

    def kirchhoff(self) -> Fraction:
        diag = [self._entry(i, i) for i in range(self.size)]
        total = 0
        for i in range(self.size):
            for j in range(i + 1, self.size):
                total += diag[i] + diag[j] - 2 * self._entry(i, j)
        return Fraction(total, self.det)


def effective_resistance_kf(
    g: ExplicitGraph, ground: int = 0, method: str = "modular", allow_large: bool = False
) -> Fraction:
    """Sum of effective resistances over all unordered vertex pairs."""
    cap = resistance_cap()
    if g.n_vertices > 1 << cap:
        _check_cap(g.n_vertices.bit_length() - 1, cap, "resistance", allow_large)
    return GroundedInverse(g, ground, method).kirchhoff()


def _character_sums(args: tuple[int, Sequence[int], int, int]) -> list[int]:
    n, words, start, stop = args
    s = GeneratingSet.from_bits(words, n)
    return [eigenvalue_by_character(GroupElement(i, n), s) for i in range(start, stop)]


def character_spectrum_values(s: GeneratingSet, workers: int = 1) -> list[int]:
    """All 2^n character sums of s, in character-index order."""
    total = 1 << s.n
    if workers <= 1:
        return _character_sums((s.n, s.words, 0, total))
    step = -(-total // workers)
    chunks = [(s.n, s.words, lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [v for part in pool.map(_character_sums, chunks) for v in part]


def bruteforce_spectrum(params: EnhancedParams, workers: int = 1, allow_large: bool = False) -> Spectrum:
    _check_cap(params.n, DEFAULT_ENUMERATION_MAX_N, "enumeration", allow_large)
    values = character_spectrum_values(build_enhanced_generating_set(params), workers)
    return Spectrum.from_values(values, params.n, ADJACENCY)


@dataclass(frozen=True)
class ResistanceReport:
    n: int
    k: int
    kf: Fraction
    wiener: int
    bipartite: bool
    diameter: int
    degree_ok: bool
    trace_ok: bool
    trace2_ok: bool

    def __post_init__(self):
        if not self.kf < self.wiener:
            raise ArithmeticError(f"Kf={self.kf} is not below the Wiener index {self.wiener}")

    def to_json_obj(self) -> dict:
        from .render import rational_json

        obj = asdict(self)
        obj["kf"] = rational_json(self.kf)
        obj["wiener"] = str(self.wiener)
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def distance_summary(g: ExplicitGraph) -> tuple[int, int]:
    """(Wiener index, diameter) from one BFS per vertex."""
    wiener = 0
    diameter = 0
    for u in range(g.n_vertices):
        dist = bfs_distances(g, u)
        if min(dist) < 0:
            raise DisconnectedGraphError("graph is not connected")
        wiener += sum(dist)
        diameter = max(diameter, max(dist))
    return wiener // 2, diameter


def graph_report(params: EnhancedParams, allow_large: bool = False, method: str = "modular") -> ResistanceReport:
    g = build_graph(params, allow_large=allow_large)
    kf = effective_resistance_kf(g, method=method, allow_large=allow_large)
    wiener, diameter = distance_summary(g)
    spec = bruteforce_spectrum(params, allow_large=allow_large)
    return ResistanceReport(
        n=params.n,
        k=params.k,
        kf=kf,
        wiener=wiener,
        bipartite=two_colouring(g) is not None,
        diameter=diameter,
        degree_ok=all(d == params.n + 1 for d in g.degrees),
        trace_ok=spec.moment(1) == 0,
        trace2_ok=spec.moment(2) == 2 * g.n_edges,
    )
