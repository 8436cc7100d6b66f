import random
from itertools import combinations
from math import factorial

import networkx as nx
import pytest
from hypothesis import given
from networkx.algorithms.isomorphism import GraphMatcher

from brute import brute_chi, brute_contains
from conftest import ordered_graphs
from ordchrom.constructions import complete_graph, shift_graph, tutte_step
from ordchrom.core import OrderedGraph, og
from ordchrom.oracle import (
    SMALL_FORESTS,
    BudgetExhausted,
    chromatic_number,
    copy_masks,
    count_orderings,
    extremal_number,
    is_proper,
    k_coloring,
    max_chi_avoiders,
    orderings,
    random_maximal_avoider,
    sat_k_coloring,
)


@given(ordered_graphs(min_n=1, max_n=7))
def test_chromatic_number_matches_brute(G):
    r = chromatic_number(G)
    assert r.value == brute_chi(G)
    assert is_proper(G, r.coloring) and max(r.coloring) + 1 == r.value
    assert all(G.has_edge(a, b) for a, b in combinations(r.clique, 2))


@given(ordered_graphs(min_n=1, max_n=7))
def test_sat_method_matches_brute(G):
    r = chromatic_number(G, method="sat")
    assert r.value == brute_chi(G)
    assert is_proper(G, r.coloring)


def test_sat_and_dsatur_agree_on_shift_graphs():
    for n in range(3, 9):
        G = shift_graph(n)
        assert chromatic_number(G, method="sat").value == chromatic_number(G).value


def test_sat_k_coloring_contract():
    C5 = OrderedGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert sat_k_coloring(C5, 2)[0] is None
    col, _ = sat_k_coloring(C5, 3)
    assert is_proper(C5, col)
    assert sat_k_coloring(complete_graph(4), 3)[0] is None
    assert sat_k_coloring(OrderedGraph(0, frozenset()), 1) == ([], 0)
    with pytest.raises(ValueError):
        chromatic_number(C5, method="magic")


def test_sat_budget_exhaustion_is_loud():
    tg = tutte_step(og("OG 4: 1-3,1-4,2-4"), complete_graph(3), 4)
    with pytest.raises(BudgetExhausted):
        sat_k_coloring(tg.graph, 3, budget=5)


def test_chromatic_number_examples():
    assert chromatic_number(complete_graph(6)).value == 6
    C5 = OrderedGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    r = chromatic_number(C5)
    assert r.value == 3 and r.refuted == 2


def test_k_coloring():
    C5 = OrderedGraph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert k_coloring(C5, 2)[0] is None
    col, _ = k_coloring(C5, 3)
    assert is_proper(C5, col)


def test_budget_exhaustion_is_loud():
    with pytest.raises(BudgetExhausted):
        chromatic_number(shift_graph(9), budget=5)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("ORDCHROM_NODE_BUDGET", "3")
    with pytest.raises(BudgetExhausted):
        chromatic_number(shift_graph(9))


def test_copy_masks_count_placements():
    H = og("OG 2: 1-2")
    assert len(copy_masks(H, 5)) == 10


def _brute_max_chi(H, n):
    pairs = list(combinations(range(1, n + 1), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        G = OrderedGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
        if not brute_contains(G, H):
            best = max(best, brute_chi(G))
    return best


@pytest.mark.parametrize("text", ["OG 2: 1-2", "OG 3: 1-2, 2-3", "OG 3: 1-3", "OG 4: 1-4, 2-3",
                                  "OG 4: 1-2, 3-4", "OG 4: 1-2, 2-3, 3-4"])
def test_max_chi_matches_brute(text):
    H = og(text)
    for n in (3, 4, 5):
        r = max_chi_avoiders(H, n)
        assert r.exhaustive and r.value == _brute_max_chi(H, n)
        assert r.verify()


def test_max_chi_reaches_k_minus_one():
    H = og("OG 4: 1-2, 2-3, 3-4")
    assert max_chi_avoiders(H, 6).value == 3


def _brute_ex(H, n):
    pairs = list(combinations(range(1, n + 1), 2))
    best = 0
    for mask in range(1 << len(pairs)):
        G = OrderedGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))
        if G.m > best and not brute_contains(G, H):
            best = G.m
    return best


def test_extremal_monotone_path_on_four_vertices():
    # on four vertices only the three consecutive pairs can host a copy, so
    # dropping 3-4 from K_4 already avoids it: 5 edges, beating K_{2,2}
    H = og("OG 4: 1-2, 2-3, 3-4")
    r = extremal_number(H, 4)
    assert r.value == _brute_ex(H, 4) == 5 and r.verify()
    K22 = og("OG 4: 1-3, 1-4, 2-3, 2-4")
    assert not brute_contains(K22, H) and K22.m == 4


@pytest.mark.parametrize("text", ["OG 2: 1-2", "OG 3: 1-3", "OG 4: 1-4, 2-3", "OG 3: 1-2, 2-3"])
def test_extremal_matches_brute(text):
    H = og(text)
    for n in (3, 4, 5):
        assert extremal_number(H, n).value == _brute_ex(H, n)


def test_extremal_invariants():
    H = og("OG 4: 1-3, 2-4")
    vals = [extremal_number(H, n).value for n in range(2, 8)]
    assert vals == sorted(vals)
    W = extremal_number(H, 6).witness
    for e in W.edges:
        assert not brute_contains(OrderedGraph(W.n, W.edges - {e}), H)


def test_max_chi_worked_examples():
    assert max_chi_avoiders(og("OG 2: 1-2"), 5).value == 1
    assert max_chi_avoiders(og("OG 3: 1-2, 2-3"), 6).value == 2
    assert extremal_number(og("OG 2: 1-2"), 4).value == 0
    assert extremal_number(og("OG 3: 1-3"), 5).value == _brute_ex(og("OG 3: 1-3"), 5)


def test_max_chi_monotone_in_n():
    for text in ("OG 4: 1-2, 2-3, 3-4", "OG 4: 1-4, 2-4, 2-3", "OG 4: 1-3, 2-4"):
        H = og(text)
        vals = [max_chi_avoiders(H, n).value for n in range(1, 8)]
        assert vals == sorted(vals)
        assert vals[H.n - 2] >= H.n - 1


def test_count_orderings_triangle():
    assert count_orderings(3, [(0, 1), (1, 2), (0, 2)]) == 1


def test_heuristic_is_lower_bound_only():
    H = og("OG 4: 1-2, 2-3, 3-4")
    r = max_chi_avoiders(H, 9, trials=5)
    assert r.lower_bound_only and not r.exhaustive
    assert r.value <= 3
    assert r.to_json()["lower_bound_only"]


def test_random_maximal_avoider_is_maximal():
    H = og("OG 4: 1-4, 2-3")
    rng = random.Random(0)
    for _ in range(5):
        G = random_maximal_avoider(H, 8, rng)
        assert not brute_contains(G, H)
        for e in combinations(range(1, 9), 2):
            if e not in G.edges:
                assert brute_contains(OrderedGraph(8, G.edges | {e}), H)


def _automorphisms(n, edges):
    g = nx.Graph()
    g.add_nodes_from(range(n))
    g.add_edges_from(edges)
    return sum(1 for _ in GraphMatcher(g, g).isomorphisms_iter())


@pytest.mark.parametrize("name", list(SMALL_FORESTS))
def test_orderings_match_orbit_count(name):
    n, edges = SMALL_FORESTS[name]
    assert count_orderings(n, edges) == factorial(n) // _automorphisms(n, edges)
    obs = orderings(n, edges)
    assert len(set(obs)) == len(obs)
