from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vulngraph.enumeration import random_connected_graph, random_connected_spanning_subgraph
from vulngraph.errors import CapExceededError, CompleteGraphError, InvalidGraphError, NotACutError, NotConnectedError
from vulngraph.graph import complete_graph, cycle_graph, from_edge_list, is_forest_mask, omega_tau, path_graph, star_graph, vertex_set
from vulngraph.invariants import (
    PARAMETERS,
    all_parameters,
    compute,
    connectivity,
    evaluate_cut,
    integrity,
    objective,
    rupture_degree,
    scattering_number,
    subsets_by_size,
    tenacity,
    toughness,
)
from vulngraph.reference import naive_parameters

from conftest import connected_graphs

F = Fraction


def naive(g, name):
    return naive_parameters(g)[name][0]


# expected values below were produced by reference.naive_parameters and frozen
@pytest.mark.parametrize(
    "g, func, name, value",
    [
        (complete_graph(4), connectivity, "connectivity", F(3)),
        (path_graph(7), connectivity, "connectivity", F(1)),
        (cycle_graph(6), connectivity, "connectivity", F(2)),
        (path_graph(4), toughness, "toughness", F(1, 2)),
        (cycle_graph(6), toughness, "toughness", F(1)),
        (star_graph(3), toughness, "toughness", F(1, 3)),
        (star_graph(3), scattering_number, "scattering", F(2)),
        (path_graph(5), scattering_number, "scattering", F(1)),
        (cycle_graph(6), scattering_number, "scattering", F(0)),
        (star_graph(3), integrity, "integrity", F(2)),
        (path_graph(4), integrity, "integrity", F(3)),
        (complete_graph(4), integrity, "integrity", F(4)),
        (path_graph(4), tenacity, "tenacity", F(3, 2)),
        (cycle_graph(5), tenacity, "tenacity", F(2)),
        (star_graph(3), tenacity, "tenacity", F(2, 3)),
        (star_graph(3), rupture_degree, "rupture", F(1)),
        (cycle_graph(6), rupture_degree, "rupture", F(-1)),
        (path_graph(5), rupture_degree, "rupture", F(0)),
    ],
)
def test_parameter_examples(g, func, name, value):
    assert naive(g, name) == value
    result = func(g)
    assert result.parameter == name
    assert result.value == value


def test_example_certificates():
    assert connectivity(complete_graph(4)).certificate is None
    assert connectivity(path_graph(7)).certificate.vertices == [1]
    assert toughness(path_graph(4)).certificate.vertices == [1]
    assert toughness(star_graph(3)).certificate.vertices == [0]
    assert scattering_number(star_graph(3)).certificate.vertices == [0]
    # {1} and {1, 3} both reach 1; the smaller cut wins the tie
    assert scattering_number(path_graph(5)).certificate.vertices == [1]
    assert evaluate_cut(path_graph(5), vertex_set([1, 3]), "scattering").value == 1
    assert integrity(star_graph(3)).certificate.vertices == [0]
    assert integrity(path_graph(4)).certificate.vertices == [1]
    assert integrity(complete_graph(4)).certificate.vertices == []
    assert rupture_degree(cycle_graph(6)).certificate.vertices == [0, 2, 4]


def test_evaluate_cut_examples():
    cert = evaluate_cut(cycle_graph(6), vertex_set([0, 3]), "tenacity")
    assert (cert.cut_size, cert.omega, cert.tau, cert.value) == (2, 2, 2, F(2))
    assert evaluate_cut(star_graph(3), vertex_set([0]), "tenacity").value == F(2, 3)
    assert evaluate_cut(path_graph(5), vertex_set([1, 3]), "rupture").value == F(0)
    # brute force: 2/3 and 0 are the optima for these graphs
    assert naive(star_graph(3), "tenacity") == F(2, 3)
    assert naive(path_graph(5), "rupture") == F(0)


def test_evaluate_cut_errors():
    with pytest.raises(NotACutError):
        evaluate_cut(path_graph(4), vertex_set([0]), "tenacity")
    with pytest.raises(InvalidGraphError):
        evaluate_cut(path_graph(4), 0b1111, "integrity")
    with pytest.raises(NotConnectedError):
        evaluate_cut(from_edge_list(4, [(0, 1)]), 0, "integrity")
    with pytest.raises(ValueError):
        evaluate_cut(path_graph(4), 0b10, "strength")
    assert evaluate_cut(path_graph(4), 0, "integrity").value == 4


@pytest.mark.parametrize("func", [toughness, scattering_number, tenacity, rupture_degree])
def test_complete_graph_undefined(func):
    with pytest.raises(CompleteGraphError, match="undefined for complete graphs"):
        func(complete_graph(5))


@pytest.mark.parametrize("func", [connectivity, toughness, integrity, tenacity])
def test_disconnected_rejected(func):
    with pytest.raises(NotConnectedError, match="requires connected graph"):
        func(from_edge_list(4, [(0, 1), (2, 3)]))


def test_size_cap_and_override():
    big = path_graph(27)
    with pytest.raises(CapExceededError):
        connectivity(big)
    assert connectivity(big, max_n=27).value == 1


def test_all_parameters_p4():
    values = {r.parameter: r.value for r in all_parameters(path_graph(4))}
    # r(P_4) = -1 by brute force over all 15 proper subsets
    assert values == {
        "connectivity": 1,
        "toughness": F(1, 2),
        "scattering": 1,
        "integrity": 3,
        "tenacity": F(3, 2),
        "rupture": -1,
    }
    assert naive(path_graph(4), "rupture") == -1


def test_all_parameters_k4():
    results = {r.parameter: r for r in all_parameters(complete_graph(4))}
    assert results["connectivity"].value == 3
    assert results["integrity"].value == 4
    for name in ("toughness", "scattering", "tenacity", "rupture"):
        assert not results[name].defined
        assert results[name].undefined == "undefined for complete graphs"


def test_all_parameters_c5_tenacity():
    assert {r.parameter: r.value for r in all_parameters(cycle_graph(5))}["tenacity"] == 2


def test_single_vertex():
    g = from_edge_list(1, [])
    assert connectivity(g).value == 0
    assert integrity(g).value == 1


def test_subsets_by_size_order():
    got = list(subsets_by_size(5, 2))
    assert got == sorted(got)
    assert len(got) == 10 and all(bin(x).count("1") == 2 for x in got)


@settings(max_examples=150)
@given(connected_graphs(max_n=9))
def test_certificates_are_sound(g):
    for result in all_parameters(g):
        cert = result.certificate
        if cert is None:
            continue
        omega, tau = omega_tau(g.adj, g.full_mask & ~cert.cut)
        assert (omega, tau, bin(cert.cut).count("1")) == (cert.omega, cert.tau, cert.cut_size)
        assert objective(result.parameter, cert.cut_size, omega, tau) == cert.value == result.value
        assert isinstance(result.value, Fraction)


@settings(max_examples=150)
@given(connected_graphs(max_n=9))
def test_engine_matches_naive(g):
    expected = naive_parameters(g)
    for result in all_parameters(g):
        value, cut = expected[result.parameter]
        assert result.value == value
        assert (result.certificate.cut if result.certificate else None) == cut


@settings(max_examples=80)
@given(connected_graphs(max_n=9), st.lists(st.sampled_from(PARAMETERS), min_size=1, max_size=6))
def test_subset_of_parameters_matches_full_pass(g, names):
    full = {r.parameter: r for r in all_parameters(g)}
    for r in compute(g, names):
        assert r == full[r.parameter]


@given(connected_graphs(min_n=3, max_n=9))
def test_toughness_at_most_tenacity(g):
    if g.is_complete():
        return
    assert toughness(g).value <= tenacity(g).value


@settings(max_examples=60)
@given(connected_graphs(min_n=3, max_n=10), st.integers(0, 2**32))
def test_spanning_subgraph_monotone(g, seed):
    if g.is_complete():
        return
    h = random_connected_spanning_subgraph(g, seed)
    assert tenacity(h).value <= tenacity(g).value


@settings(max_examples=60)
@given(connected_graphs(min_n=4, max_n=9))
def test_forest_cut_bound(g):
    full = g.full_mask
    value = None
    for x in range(1, full):
        rest = full & ~x
        omega, _ = omega_tau(g.adj, rest)
        size = bin(x).count("1")
        if omega >= size + 2 and is_forest_mask(g, rest):
            value = value if value is not None else tenacity(g).value
            assert value <= 1
            if omega >= size + 3:
                assert value < 1


def test_monotonicity_seeded_pairs():
    for seed in range(40):
        g = random_connected_graph(8, 14, seed)
        h = random_connected_spanning_subgraph(g, seed)
        assert tenacity(h).value <= tenacity(g).value
