import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qnk import oracle
from qnk.group_core import EnhancedParams, GeneratingSet, ParameterError, build_enhanced_generating_set
from qnk.kirchhoff import kf_closed_form
from qnk.oracle import (
    DisconnectedGraphError,
    ExplicitGraph,
    GroundedInverse,
    OracleCostWarning,
    bruteforce_spectrum,
    build_graph,
    cayley_graph,
    distance_summary,
    effective_resistance_kf,
    graph_report,
    two_colouring,
)
from qnk.spectrum import adjacency_spectrum, is_bipartite_by_parity

P = EnhancedParams


def test_q21_is_k4():
    g = build_graph(P(2, 1))
    assert g.adjacency == ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))


def test_q31_is_k44():
    g = build_graph(P(3, 1))
    colour = two_colouring(g)
    assert colour is not None
    assert sorted(colour) == [0] * 4 + [1] * 4
    # every vertex sees all four vertices of the other side
    for u, nbrs in enumerate(g.adjacency):
        assert sorted(nbrs) == sorted(v for v in range(8) if colour[v] != colour[u])
    assert distance_summary(g)[1] == 2


def test_q43_edge_count():
    assert build_graph(P(4, 3)).n_edges == 40


@pytest.mark.parametrize("n", range(2, 15))
def test_flip_rules_match_cayley_construction(n):
    for k in range(1, n):
        g = build_graph(P(n, k))
        assert all(d == n + 1 for d in g.degrees)
        assert g.n_edges == (n + 1) << (n - 1)
        if n <= 10:
            assert g == cayley_graph(build_enhanced_generating_set(P(n, k)))


def test_explicit_graph_validation():
    with pytest.raises(ValueError):
        ExplicitGraph(2, ((1,), ()))
    with pytest.raises(ValueError):
        ExplicitGraph(2, ((0, 1), (0,)))


def test_construction_cap():
    with pytest.raises(ParameterError):
        build_graph(P(17, 3))


def test_effective_resistance_examples():
    assert effective_resistance_kf(build_graph(P(2, 1))) == 3
    assert effective_resistance_kf(build_graph(P(3, 2))) == 14
    assert effective_resistance_kf(build_graph(P(4, 2))) == Fraction(258, 5)


def test_k4_pair_resistances():
    inv = GroundedInverse(build_graph(P(2, 1)))
    assert {inv.resistance(i, j) for i in range(4) for j in range(4) if i != j} == {Fraction(1, 2)}


@pytest.mark.parametrize("n", range(2, 6))
def test_fraction_and_modular_resistance_agree(n):
    for k in range(1, n):
        g = build_graph(P(n, k))
        a = GroundedInverse(g, method="modular")
        b = GroundedInverse(g, ground=3, method="fraction")
        assert a.kirchhoff() == b.kirchhoff() == kf_closed_form(P(n, k))
        for i in range(g.n_vertices):
            for j in range(g.n_vertices):
                assert a.resistance(i, j) == b.resistance(i, j)


def test_path_resistance_and_disconnection():
    path = ExplicitGraph(3, ((1,), (0, 2), (1,)))
    assert effective_resistance_kf(path) == 4  # 1 + 1 + 2
    split = ExplicitGraph(4, ((1,), (0,), (3,), (2,)))
    with pytest.raises(DisconnectedGraphError):
        effective_resistance_kf(split)


def test_resistance_cap_env(monkeypatch):
    g = build_graph(P(4, 1))
    monkeypatch.setenv(oracle.ENV_ORACLE_CAP, "3")
    with pytest.raises(ParameterError):
        effective_resistance_kf(g)
    with pytest.warns(OracleCostWarning):
        assert effective_resistance_kf(g, allow_large=True) == 50


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_resistance_metric_and_klein_randic(n):
    rng = random.Random(n)
    for k in range(1, n):
        g = build_graph(P(n, k))
        inv = GroundedInverse(g)
        for i in range(g.n_vertices):
            dist = oracle.bfs_distances(g, i)
            for j in range(g.n_vertices):
                assert inv.resistance(i, j) == inv.resistance(j, i)
                assert inv.resistance(i, j) <= dist[j]
        for _ in range(50):
            i, j, l = (rng.randrange(g.n_vertices) for _ in range(3))
            assert inv.resistance(i, j) <= inv.resistance(i, l) + inv.resistance(l, j)


def test_bruteforce_examples():
    assert bruteforce_spectrum(P(3, 2)).entries == ((4, 1), (2, 1), (0, 3), (-2, 3))
    assert bruteforce_spectrum(P(2, 1)).entries == ((3, 1), (-1, 3))
    for n in range(2, 9):
        assert bruteforce_spectrum(P(n, n // 2)).entries[0] == (n + 1, 1)


def test_bruteforce_parallel_matches_serial():
    p = P(9, 4)
    assert bruteforce_spectrum(p, workers=3) == bruteforce_spectrum(p) == adjacency_spectrum(p)


def test_bruteforce_cap():
    with pytest.raises(ParameterError):
        bruteforce_spectrum(P(13, 2))


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 6), st.data())
def test_characters_are_eigenvectors_of_random_cayley_graphs(n, data):
    words = sorted(data.draw(st.sets(st.integers(1, (1 << n) - 1), min_size=1)))
    s = GeneratingSet.from_bits(words, n)
    g = cayley_graph(s)
    values = oracle.character_spectrum_values(s)
    for chi, lam in enumerate(values):
        vec = [-1 if (chi & v).bit_count() & 1 else 1 for v in range(g.n_vertices)]
        assert [sum(vec[w] for w in g.adjacency[v]) for v in range(g.n_vertices)] == [lam * x for x in vec]


def test_graph_report_examples():
    rep = graph_report(P(2, 1))
    assert (rep.wiener, rep.kf, rep.diameter) == (6, 3, 1)
    rep = graph_report(P(3, 2))
    assert rep.kf == 14 and rep.kf < rep.wiener
    assert not rep.bipartite
    rep = graph_report(P(3, 1))
    assert rep.bipartite and rep.degree_ok and rep.trace_ok and rep.trace2_ok
    obj = rep.to_json_obj()
    assert obj["kf"]["num"] == "13" and obj["wiener"] == str(rep.wiener)


@pytest.mark.parametrize("n", range(2, 13))
def test_bfs_bipartite_matches_parity(n):
    for k in range(1, n):
        g = build_graph(P(n, k))
        assert (two_colouring(g) is not None) == is_bipartite_by_parity(P(n, k))


def test_edge_list_export(tmp_path):
    path = tmp_path / "edges.txt"
    build_graph(P(2, 1)).write_edge_list(path)
    assert path.read_text().splitlines() == ["0 1", "0 2", "0 3", "1 2", "1 3", "2 3"]
