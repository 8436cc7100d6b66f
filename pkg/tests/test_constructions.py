from itertools import combinations, permutations
from math import comb

import networkx as nx
import pytest

from brute import brute_chi, brute_contains, to_nx
from ordchrom.constructions import (
    complete_graph,
    shift_graph,
    shift_pairs,
    spindle,
    spiral_path,
    tutte_sizes,
    tutte_step,
)
from ordchrom.core import OrderedGraph, contains, og, reverse
from ordchrom.oracle import chromatic_number, tutte_refutation
from ordchrom.patterns import BONNETS, is_minimal_tangled


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_shift_graph_sizes(n):
    S = shift_graph(n)
    assert S.n == comb(n, 2)
    assert S.m == comb(n, 3)


def test_shift_graph_edges_follow_the_rule():
    pairs = shift_pairs(5)
    S = shift_graph(5)
    for a, b in combinations(range(len(pairs)), 2):
        (i, j), (s, t) = pairs[a], pairs[b]
        assert S.has_edge(a + 1, b + 1) == (j == s or t == i)


def test_shift_graph_four_is_acyclic():
    S = shift_graph(4)
    assert S.is_forest()
    assert nx.number_connected_components(to_nx(S)) == 2  # a 5-vertex path and an isolated vertex


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_shift_graph_avoids_first_bonnet_family(n):
    # lexicographic order rules out u < v <= x,y <= w; the mirrored host handles the mirrored family
    G = shift_graph(n)
    for name in ("A1", "A2", "A3"):
        assert not brute_contains(G, BONNETS[name])
        assert not brute_contains(reverse(G), reverse(BONNETS[name]))


def test_shift_graph_contains_a_mirrored_bonnet():
    # the image (1,4) (2,3) (3,4) (4,5) carries B3; reversal of the host is needed to avoid it
    G = shift_graph(5)
    rank = {p: i + 1 for i, p in enumerate(shift_pairs(5))}
    image = [rank[p] for p in [(1, 4), (2, 3), (3, 4), (4, 5)]]
    B3 = BONNETS["B3"]
    assert all(G.has_edge(image[a - 1], image[b - 1]) for a, b in B3.edges)
    assert brute_contains(G, B3)


def test_spiral_path():
    assert spiral_path(4) == og("OG 4: 1-4, 2-4, 2-3")
    assert spiral_path(5) == og("OG 5: 1-5, 2-5, 2-4, 3-4")
    for k in range(4, 9):
        P = spiral_path(k)
        assert P.is_tree() and max(P.degree(v) for v in P.vertices) <= 2


@pytest.mark.parametrize("k", [4, 5])
def test_spindle_structure(k):
    s = spindle(k)
    G = s.graph
    assert G.n == 2 * k - 1
    for clique in ((s.u, *s.xs), (s.u, *s.ys), (*s.xs, s.x), (*s.ys, s.y)):
        assert all(G.has_edge(a, b) for a, b in combinations(sorted(clique), 2))
    assert G.has_edge(s.x, s.y)
    # the two cliques through X share the edges inside X, likewise for Y
    assert G.m == 4 * comb(k - 1, 2) - 2 * comb(k - 2, 2) + 1
    assert not brute_contains(G, s.path)


def test_spindle_four_chromatic_number():
    assert brute_chi(spindle(4).graph) == 4


def test_complete_graph():
    assert complete_graph(4).m == 6
    with pytest.raises(ValueError):
        complete_graph(0)


def test_tutte_sizes():
    assert tutte_sizes(3, 4) == (7, 35, 112)
    assert tutte_sizes(2, 3) == (3, 3, 9)


P = og("OG 4: 1-3, 1-4, 2-4")


def test_tutte_small_instance():
    tg = tutte_step(P, complete_graph(2), 3)
    G = tg.graph
    assert G.n == 9
    assert not brute_contains(G, P)
    assert brute_chi(G) == 3
    assert tutte_refutation(tg, 2)["refuted"]


def test_tutte_blocks_match_the_base():
    base = og("OG 3: 1-2, 2-3")
    tg = tutte_step(P, base, 3)
    assert len(tg.blocks) == tg.M == comb(tg.N, 3)
    assert not contains(tg.graph, P)
    assert chromatic_number(tg.graph).value == 3


def _minimal_tangled_paths(k):
    seen = set()
    for seq in permutations(range(1, k + 1)):
        Q = OrderedGraph.from_edges(k, zip(seq, seq[1:]))
        if Q not in seen:
            seen.add(Q)
            rep = is_minimal_tangled(Q)
            if rep.minimal:
                yield Q, rep


def test_tutte_mirrors_when_only_leftmost_splits():
    Q = next(Q for Q, rep in _minimal_tangled_paths(5) if not rep.rightmost_crossing)
    tg = tutte_step(Q, complete_graph(2), 3)
    assert tg.reversed
    assert not contains(tg.graph, Q)
    assert chromatic_number(tg.graph).value == 3
    # right block sits on the left after mirroring
    assert tg.right_block == tuple(range(1, tg.N + 1))


def test_tutte_rejects_bad_inputs():
    with pytest.raises(ValueError):
        tutte_step(og("OG 4: 1-2, 2-3, 3-4"), complete_graph(2), 3)
    with pytest.raises(ValueError):
        tutte_step(P, P, 3)
    with pytest.raises(ValueError):
        tutte_step(P, complete_graph(3), 4, vertex_cap=100)


def test_reverse_of_tutte_path():
    assert reverse(P) == P
