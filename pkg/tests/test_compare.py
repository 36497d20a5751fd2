import itertools
import math
import random
from fractions import Fraction

import pytest

from builders import graph, path_graph
from oracles import enumerate_interaction, random_graph
from pubgraph import (
    DisconnectedGraph,
    UsageError,
    avg_increasing_diameter,
    closeness_common_nodes,
    compare_all,
    largest_component,
    ratio_common_interactions,
    ratio_common_nodes,
    union_graph,
)
from pubgraph.compare import _interaction_ratio, common_closeness_detail

POOL = [f"n{i}" for i in range(12)]


def test_r_node_identical(golden_graph):
    assert ratio_common_nodes([golden_graph, golden_graph]) == 1.0


def test_r_node_disjoint():
    assert ratio_common_nodes([graph("ab"), graph("cd")]) == 0.0


def test_r_node_half():
    assert ratio_common_nodes([graph("abc"), graph("bcd")]) == 0.5


def test_r_node_needs_two():
    with pytest.raises(UsageError):
        ratio_common_nodes([graph("a")])
    with pytest.raises(UsageError):
        ratio_common_nodes([graph("a"), graph([])])


def test_r_interaction_three_pairs():
    g1 = graph("xyz", [("x", "y")])
    g2 = graph("xyz", [("x", "y"), ("y", "z")])
    assert ratio_common_interactions([g1, g2]) == pytest.approx(2 / 3, abs=0)
    assert _interaction_ratio([g1, g2]) == Fraction(2, 3)


def test_r_interaction_identical(golden_graph):
    assert ratio_common_interactions([golden_graph] * 3) == 1.0


def test_r_interaction_single_disagreeing_pair():
    assert ratio_common_interactions([graph("xy", [("x", "y")]), graph("xy")]) == 0.0


def test_r_interaction_absent_nodes_count_as_non_edges():
    # Pair (a, c) exists only in G1's node set: no edge anywhere -> agreement.
    g1 = graph("abc", [("a", "b")])
    g2 = graph("ab", [("a", "b")])
    assert ratio_common_interactions([g1, g2]) == 1.0


def test_r_interaction_errors():
    with pytest.raises(UsageError):
        ratio_common_interactions([graph("a"), graph("a")])
    with pytest.raises(UsageError):
        ratio_common_interactions([graph("ab")])


def test_r_interaction_k1_is_one():
    for seed in range(20):
        g = random_graph(random.Random(seed), POOL, 12)
        if len(g.nodes) >= 2:
            assert _interaction_ratio([g]) == 1


@pytest.mark.parametrize("seed", range(30))
def test_r_interaction_matches_enumeration(seed):
    rng = random.Random(seed)
    gs = [random_graph(rng, POOL, 12) for _ in range(rng.choice([2, 3]))]
    if len(union_graph(gs).nodes) < 2:
        return
    total, pairs = enumerate_interaction([g.nodes for g in gs], [set(g.edges) for g in gs])
    assert _interaction_ratio(gs) == Fraction(total, pairs)


def test_c_common_identical(golden_graph):
    assert closeness_common_nodes([golden_graph, golden_graph]) == 0.0


def test_c_common_no_common_nodes():
    assert closeness_common_nodes([graph("ab", [("a", "b")]), graph("cd", [("c", "d")])]) == math.inf


def test_c_common_chain():
    g1 = graph("pq", [("p", "q")])
    g2 = graph("pqr", [("q", "r")])
    g3 = graph("pr")
    # Common node p; union edges p-q, q-r.
    assert closeness_common_nodes([g1, g2, g3]) == 1.0


def test_c_common_two_graph_chain():
    g1 = graph("pq", [("p", "q")])
    g2 = graph("pr", [])
    # Union has p-q only; r is isolated and excluded from the evaluated component.
    value, excluded = common_closeness_detail(union_graph([g1, g2]))
    assert (value, excluded) == (0.5, 1)


def test_c_common_nonzero_when_nodes_differ():
    assert closeness_common_nodes([graph("ab", [("a", "b")]), graph("a")]) > 0


def test_delta_d_identical(golden_graph):
    assert avg_increasing_diameter([golden_graph, golden_graph]) == 0.0


def test_delta_d_two_paths():
    assert avg_increasing_diameter([path_graph("a", "b"), path_graph("b", "c")]) == 1.0


def test_delta_d_sub_supergraph():
    assert avg_increasing_diameter([path_graph("a", "b"), path_graph("a", "b", "c")]) == 0.5


def test_delta_d_can_be_negative():
    # Union shortcuts shrink the 4-hop path.
    long_path = path_graph("a", "b", "c", "d", "e")
    shortcut = graph("ae", [("a", "e")])
    assert avg_increasing_diameter([long_path, shortcut]) < 0


def test_delta_d_errors():
    with pytest.raises(UsageError):
        avg_increasing_diameter([path_graph("a", "b"), graph([])])
    with pytest.raises(DisconnectedGraph):
        avg_increasing_diameter([path_graph("a", "b"), graph("cd")])


def test_compare_all_identical(golden_graph):
    r = compare_all([golden_graph, golden_graph], ["x", "y"])
    assert (r.r_node, r.r_interaction, r.c_common, r.delta_diameter) == (1.0, 1.0, 0.0, 0.0)
    assert r.common_nodes == ("j1", "j2", "j3", "j4")
    assert r.k == 2


def test_compare_all_disjoint():
    r = compare_all([path_graph("a", "b"), path_graph("c", "d")])
    assert r.r_node == 0.0 and r.c_common == math.inf
    assert r.labels == ("G1", "G2")


def test_compare_all_composes_fixtures():
    r = compare_all([path_graph("a", "b"), path_graph("b", "c")])
    assert r.delta_diameter == 1.0
    assert r.r_node == ratio_common_nodes([path_graph("a", "b"), path_graph("b", "c")])
    assert r.r_interaction == pytest.approx(1 / 3, abs=0)
    assert r.c_common == pytest.approx(2 / 3, abs=0)
    assert r.diameters == (1, 1) and r.union_diameter == 2


def test_compare_all_label_count():
    with pytest.raises(UsageError):
        compare_all([graph("a"), graph("a")], ["only one"])


@pytest.mark.parametrize("seed", range(25))
def test_bounds_and_symmetry(seed):
    rng = random.Random(seed)
    k = rng.choice([2, 3])
    gs = [largest_component(random_graph(rng, POOL[:8], 8, edge_p=0.5)) for _ in range(k)]
    if len(union_graph(gs).nodes) < 2:
        return
    base = compare_all(gs)
    assert 0 <= base.r_node <= 1 and 0 <= base.r_interaction <= 1
    assert (base.c_common == math.inf) == (not base.common_nodes)
    for perm in itertools.permutations(gs):
        r = compare_all(list(perm))
        assert (r.r_node, r.r_interaction, r.c_common, r.delta_diameter) == (
            base.r_node, base.r_interaction, base.c_common, base.delta_diameter)


@pytest.mark.parametrize("seed", range(15))
def test_adding_shared_edge(seed):
    rng = random.Random(seed)
    nodes = POOL[:6]
    g1 = random_graph(rng, nodes, 6)
    g2 = random_graph(rng, nodes, 6)
    common = sorted(g1.nodes & g2.nodes)
    missing = [(u, v) for i, u in enumerate(common) for v in common[i + 1:]
               if (u, v) not in g1.edges or (u, v) not in g2.edges]
    if len(union_graph([g1, g2]).nodes) < 2 or not missing:
        return
    e = missing[0]
    h1 = graph(g1.nodes, list(g1.edges | {e}))
    h2 = graph(g2.nodes, list(g2.edges | {e}))
    assert ratio_common_nodes([h1, h2]) == ratio_common_nodes([g1, g2])
    before = len(g1.edges & g2.edges)
    assert len(h1.edges & h2.edges) == before + 1
