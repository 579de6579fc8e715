import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vulngraph.canon import CANON_LIMIT, canonical_form, canonical_order, tree_centers
from vulngraph.errors import CapExceededError
from vulngraph.graph import complete_graph, cycle_graph, from_edge_list, path_graph, star_graph
from vulngraph.graph6 import parse_graph6

from conftest import brute_isomorphic, graphs


def test_relabelled_path():
    a = path_graph(4)
    b = from_edge_list(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_form(a) == canonical_form(b)


def test_path_vs_star_and_cycle():
    assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))
    assert canonical_form(cycle_graph(4)) != canonical_form(path_graph(4))


def test_limit():
    with pytest.raises(CapExceededError, match="at most 12"):
        canonical_form(path_graph(CANON_LIMIT + 1))


def test_form_decodes_to_isomorphic_graph():
    g = from_edge_list(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    assert brute_isomorphic(parse_graph6(canonical_form(g)), g)


def test_tree_centres():
    assert tree_centers(path_graph(5)) == [2]
    assert tree_centers(path_graph(6)) == [2, 3]


@given(graphs(max_n=12), st.randoms(use_true_random=False))
def test_invariant_under_relabelling(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    assert canonical_form(g.relabel(perm)) == canonical_form(g)


@given(graphs(max_n=12))
def test_canonical_order_is_a_permutation(g):
    assert sorted(canonical_order(g)) == list(range(g.n))


def test_regular_graphs_are_fast_enough():
    for g in (complete_graph(12), cycle_graph(12), from_edge_list(12, [(i, (i + 1) % 12) for i in range(12)] + [(i, (i + 4) % 12) for i in range(12)])):
        perm = list(range(12))
        random.Random(1).shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_equal_forms_iff_isomorphic_small():
    rng = random.Random(11)
    checked = 0
    for _ in range(400):
        n = rng.randint(1, 6)
        m = rng.randint(0, n * (n - 1) // 2)
        pairs = [(u, v) for v in range(n) for u in range(v)]
        g = from_edge_list(n, rng.sample(pairs, m))
        h = from_edge_list(n, rng.sample(pairs, m))
        assert (canonical_form(g) == canonical_form(h)) == brute_isomorphic(g, h)
        checked += 1
    assert checked == 400
