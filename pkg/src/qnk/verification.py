"""Runs every identity and oracle cross-check and collects pass/fail records."""

from __future__ import annotations

import random
import traceback
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from . import kirchhoff as kfm
from . import oracle, spectrum
from .group_core import (
    EnhancedParams,
    GeneratingSet,
    GroupElement,
    build_enhanced_generating_set,
    eigenvalue_by_character,
    eigenvalue_by_weight,
)
from .render import PUBLISHED_KF_TABLE, matches_printed


@dataclass
class Check:
    name: str
    passed: bool = True
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    def expect(self, ok: bool, what: str) -> None:
        self.cases += 1
        if not ok:
            self.passed = False
            if len(self.failures) < 10:
                self.failures.append(what)


def _params(max_n: int, min_n: int = 2) -> Iterator[EnhancedParams]:
    for n in range(min_n, max_n + 1):
        for k in range(1, n):
            yield EnhancedParams(n, k)


def check_table(c: Check, **_) -> None:
    for n, row in PUBLISHED_KF_TABLE.items():
        for k, text in enumerate(row, start=1):
            value = kfm.kf_closed_form(EnhancedParams(n, k))
            c.expect(matches_printed(value, text), f"({n},{k}): exact {value} does not round to {text}")


def check_character_weights(c: Check, n_enum: int, **_) -> None:
    for p in _params(n_enum):
        s = build_enhanced_generating_set(p)
        first, second, mismatches = 0, 0, 0
        for chi in range(1 << p.n):
            lam = eigenvalue_by_character(GroupElement(chi, p.n), s)
            t, r = chi.bit_count(), (chi & p.tail_mask).bit_count()
            first += lam
            second += lam * lam
            mismatches += lam != eigenvalue_by_weight(t, r, p)
        c.expect(mismatches == 0, f"({p.n},{p.k}) {mismatches} characters disagree with the weight formula")
        c.expect(first == 0, f"({p.n},{p.k}) trace {first} != 0")
        c.expect(second == (p.n + 1) << p.n, f"({p.n},{p.k}) second moment {second}")


def _check_eigenvectors(c: Check, s: GeneratingSet, label: str) -> None:
    g = oracle.cayley_graph(s)
    for chi in range(1 << s.n):
        lam = eigenvalue_by_character(GroupElement(chi, s.n), s)
        vec = [-1 if (chi & v).bit_count() & 1 else 1 for v in range(g.n_vertices)]
        image = [sum(vec[w] for w in g.adjacency[v]) for v in range(g.n_vertices)]
        c.expect(image == [lam * x for x in vec], f"{label} chi={chi}: A chi != {lam} chi")


def check_character_eigenvectors(c: Check, rng: random.Random, n_small: int, **_) -> None:
    for p in _params(min(n_small, 6)):
        _check_eigenvectors(c, build_enhanced_generating_set(p), f"Q({p.n},{p.k})")
    for _ in range(20):
        n = rng.randint(1, 6)
        size = rng.randint(1, (1 << n) - 1)
        words = rng.sample(range(1, 1 << n), size)
        _check_eigenvectors(c, GeneratingSet.from_bits(words, n), f"random S={words} n={n}")


def check_spectrum_vs_enumeration(c: Check, n_enum: int, workers: int = 1, fault: bool = False, **_) -> None:
    for p in _params(n_enum):
        closed = spectrum.adjacency_spectrum(p)
        if fault and (p.n, p.k) == (3, 2):
            # flip one multiplicity; Spectrum validation or the comparison must catch it
            entries = list(closed.entries)
            lam, m = entries[-1]
            entries[-1] = (lam, m + 1)
            try:
                closed = spectrum.Spectrum(tuple(entries), p.n, closed.kind)
            except ValueError as exc:
                c.expect(False, f"({p.n},{p.k}) injected fault: {exc}")
                continue
        brute = oracle.bruteforce_spectrum(p, workers=workers)
        c.expect(brute == closed, f"({p.n},{p.k}) closed {closed.entries} != enumerated {brute.entries}")


def check_family_identities(c: Check, n_closed: int, **_) -> None:
    for p in _params(n_closed):
        fam = spectrum.raw_eigenvalue_families(p)
        loose = spectrum.raw_eigenvalue_families(p, loose=True)
        c.expect(fam == loose, f"({p.n},{p.k}) tight and literal summation ranges differ")
        c.expect(fam.beta(0) == 1 and fam.beta(1) == p.k - 1, f"({p.n},{p.k}) beta_0/beta_1")
        total = sum(m for *_, m in fam.zeta) + sum(m for *_, m in fam.xi)
        c.expect(total == 1 << p.n, f"({p.n},{p.k}) families sum to {total}")
        for t in range(1, p.n):
            g = spectrum.gamma_t(t, p)
            c.expect(g == fam.alpha(t) + fam.beta(t + 1), f"({p.n},{p.k}) gamma_{t} != alpha_t + beta_(t+1)")
            c.expect(g == spectrum.gamma_t(t, p, loose=True), f"({p.n},{p.k}) gamma_{t} loose sum differs")


def check_closed_spectra(c: Check, n_closed: int, **_) -> None:
    for p in _params(n_closed):
        adj = spectrum.adjacency_spectrum(p)
        lap = spectrum.laplacian_spectrum(p)
        n = p.n
        c.expect(adj.entries[0] == (n + 1, 1), f"({n},{p.k}) top eigenvalue")
        c.expect(all((lam - n - 1) % 2 == 0 for lam, _ in adj.entries), f"({n},{p.k}) eigenvalue parity")
        c.expect(adj.order == 1 << n and adj.moment(1) == 0, f"({n},{p.k}) order/trace")
        c.expect(adj.moment(2) == (n + 1) << n, f"({n},{p.k}) second moment")
        c.expect(lap.entries[-1] == (0, 1), f"({n},{p.k}) Laplacian kernel")
        c.expect(all(mu % 2 == 0 and 0 <= mu <= 2 * n + 2 for mu, _ in lap.entries), f"({n},{p.k}) Laplacian range")
        gn = spectrum.gamma_t(n, p)
        bip = spectrum.is_bipartite_by_parity(p)
        c.expect(gn in (0, 1) and (gn == 1) == bip, f"({n},{p.k}) gamma_n={gn} vs parity")
        c.expect(bip == (adj.multiplicity(-n - 1) > 0) == adj.is_symmetric(), f"({n},{p.k}) bipartite equivalences")
        c.expect(spectrum.spectral_gap(p) == (4 if p.k == 1 else 2), f"({n},{p.k}) spectral gap")
    for n in range(2, n_closed + 1):
        p = EnhancedParams(n, 1)
        c.expect(spectrum.folded_spectrum(n) == spectrum.adjacency_spectrum(p), f"folded adjacency n={n}")
        c.expect(
            spectrum.folded_spectrum(n, spectrum.LAPLACIAN) == spectrum.laplacian_spectrum(p), f"folded Laplacian n={n}"
        )


def check_kirchhoff_closed(c: Check, n_closed: int, **_) -> None:
    for p in _params(n_closed):
        closed = kfm.kf_closed_form(p)
        c.expect(kfm.kf_from_laplacian(spectrum.laplacian_spectrum(p)) == closed, f"({p.n},{p.k}) spectral Kf")
        if p.k == 1:
            c.expect(kfm.kf_folded(p.n) == closed, f"({p.n},1) folded formula")
        if p.k == p.n - 1:
            c.expect(kfm.kf_k_max(p.n) == closed, f"({p.n},{p.k}) k = n-1 formula")
    for n in range(1, 10 * n_closed + 1):
        lhs, rhs = kfm.even_binomial_identity_sides(n)
        c.expect(lhs == rhs, f"binomial identity n={n}: {lhs} != {rhs}")


def check_monotonicity(c: Check, n_closed: int, **_) -> None:
    for n in range(2, n_closed + 1):
        row = [kfm.kf_closed_form(EnhancedParams(n, k)) for k in range(1, n)]
        c.expect(all(a < b for a, b in zip(row, row[1:])), f"row n={n} not strictly increasing")
        if n >= 3:
            c.expect(kfm.delta_k(n, 1) == Fraction(2 ** (n - 1), n + 1), f"first increment n={n}")
        for k in range(1, n):
            cert = kfm.monotonicity_certificate(n, k)
            c.expect(cert.f_sum == cert.f_integral >= 0, f"certificate ({n},{k})")
            if k <= n - 3:
                step = kfm.delta_k(n, k + 1) - kfm.delta_k(n, k)
                c.expect(step == 2**n * cert.f_sum, f"increment recurrence ({n},{k})")


def check_asymptotics(c: Check, n_closed: int, **_) -> None:
    for n in range(3, n_closed + 1):
        a, b = kfm.asymptotic_sequences(n)
        lo, hi = kfm.bounds(n)
        for k in range(1, n):
            r = kfm.limit_ratio(n, k)
            c.expect(a <= r <= b, f"({n},{k}) ratio {float(r)} outside [{float(a)}, {float(b)}]")
            kf = kfm.kf_closed_form(EnhancedParams(n, k))
            c.expect(lo <= kf <= hi, f"({n},{k}) Kf outside bounds")
    a, b = kfm.asymptotic_sequences(100)
    c.expect(abs(a - 1) < Fraction(1, 10) and abs(b - 1) < Fraction(1, 10), "n=100 sequences not within 0.1 of 1")


def check_oracle(c: Check, n_oracle: int, rng: random.Random, **_) -> None:
    for p in _params(n_oracle):
        g = oracle.build_graph(p)
        c.expect(g == oracle.cayley_graph(build_enhanced_generating_set(p)), f"({p.n},{p.k}) flip rules != Cayley")
        c.expect(all(d == p.n + 1 for d in g.degrees), f"({p.n},{p.k}) degree")
        c.expect(g.n_edges == (p.n + 1) << (p.n - 1), f"({p.n},{p.k}) edge count")
        c.expect((oracle.two_colouring(g) is not None) == spectrum.is_bipartite_by_parity(p), f"({p.n},{p.k}) BFS bipartite")
        inv = oracle.GroundedInverse(g)
        kf = inv.kirchhoff()
        c.expect(kf == kfm.kf_closed_form(p), f"({p.n},{p.k}) resistance Kf {kf} != closed form")
        wiener, _ = oracle.distance_summary(g)
        c.expect(kf < wiener, f"({p.n},{p.k}) Kf {kf} not below Wiener {wiener}")
        if p.n <= 6:
            for i in range(g.n_vertices):
                dist = oracle.bfs_distances(g, i)
                for j in range(i + 1, g.n_vertices):
                    c.expect(inv.resistance(i, j) <= dist[j], f"({p.n},{p.k}) r_{i}{j} > d_{i}{j}")
        for _ in range(20):
            i, j, l = (rng.randrange(g.n_vertices) for _ in range(3))
            r_ij, r_ji = inv.resistance(i, j), inv.resistance(j, i)
            c.expect(r_ij == r_ji, f"({p.n},{p.k}) asymmetric r_{i},{j}")
            c.expect(r_ij <= inv.resistance(i, l) + inv.resistance(l, j), f"({p.n},{p.k}) triangle {i},{l},{j}")
    if n_oracle >= 3:
        g = oracle.build_graph(EnhancedParams(3, 2))
        c.expect(
            oracle.GroundedInverse(g, 0).kirchhoff() == oracle.GroundedInverse(g, 5, method="fraction").kirchhoff(),
            "ground choice changes Kf",
        )


SUITES: list[tuple[str, Callable]] = [
    ("published_table", check_table),
    ("character_weight_formula", check_character_weights),
    ("character_eigenvectors", check_character_eigenvectors),
    ("spectrum_vs_enumeration", check_spectrum_vs_enumeration),
    ("eigenvalue_family_identities", check_family_identities),
    ("closed_form_spectra", check_closed_spectra),
    ("kirchhoff_closed_forms", check_kirchhoff_closed),
    ("monotonicity", check_monotonicity),
    ("asymptotics", check_asymptotics),
    ("resistance_oracle", check_oracle),
]


def run_verification(
    max_n_closed: int = 20, max_n_oracle: int = 8, seed: int = 0, inject_fault: bool = False, workers: int = 1
) -> dict:
    """Run every suite; exceptions inside a suite count as its failure."""
    rng = random.Random(seed)
    ctx = dict(
        n_closed=max_n_closed,
        n_enum=min(oracle.DEFAULT_ENUMERATION_MAX_N, max(max_n_oracle, min(max_n_closed, 12))),
        n_small=max_n_oracle,
        n_oracle=max_n_oracle,
        rng=rng,
        workers=workers,
        fault=inject_fault,
    )
    checks = []
    for name, suite in SUITES:
        c = Check(name)
        try:
            suite(c, **ctx)
        except Exception as exc:  # report, don't raise
            c.passed = False
            c.failures.append(f"{type(exc).__name__}: {exc}\n{traceback.format_exc(limit=3)}")
        checks.append(c)
    return {
        "passed": all(c.passed for c in checks),
        "parameters": {"max_n_closed": max_n_closed, "max_n_oracle": max_n_oracle, "seed": seed, "inject_fault": inject_fault},
        "checks": [asdict(c) for c in checks],
    }
