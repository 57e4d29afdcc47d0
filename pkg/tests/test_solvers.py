"""Exact solvers against brute-force oracles, plus certificates and budgets."""

import random

import pytest

from blowup_coloring import (
    Budget,
    Coloring,
    InvalidParameterError,
    ListAssignment,
    chromatic_number,
    clique_lower_bound,
    complete_graph,
    cycle_graph,
    defective_chromatic_number,
    empty_graph,
    Graph,
    is_L_coloring,
    is_d_defective,
    is_list_colorable,
    is_proper,
    petersen_graph,
    random_graph,
    strong_product,
)
from oracles import (
    brute_chromatic_number,
    brute_defective_chromatic_number,
    brute_list_coloring,
)


def test_chromatic_number_known_values():
    for n in range(1, 9):
        res = chromatic_number(complete_graph(n))
        assert res.value == n
        assert is_proper(complete_graph(n), res.certificate)
    assert chromatic_number(cycle_graph(5)).value == 3
    assert chromatic_number(cycle_graph(6)).value == 2
    assert chromatic_number(petersen_graph()).value == 3
    assert chromatic_number(empty_graph(0)).value == 0
    assert chromatic_number(empty_graph(4)).value == 1


def test_defective_chromatic_number_of_cliques():
    for n in range(1, 11):
        for d in range(4):
            res = defective_chromatic_number(complete_graph(n), d)
            assert res.value == -(-n // (d + 1)), (n, d)
            assert is_d_defective(complete_graph(n), res.certificate, d)


def test_defective_chromatic_number_examples():
    blowup = strong_product(cycle_graph(5), 2).product
    assert defective_chromatic_number(blowup, 1).value == 3
    assert defective_chromatic_number(empty_graph(0), 2).value == 0
    with pytest.raises(InvalidParameterError):
        defective_chromatic_number(cycle_graph(3), -1)


def test_zero_defect_equals_chromatic():
    rng = random.Random(31)
    for _ in range(40):
        g = random_graph(rng.randint(0, 7), rng.random(), rng)
        assert defective_chromatic_number(g, 0).value == chromatic_number(g).value


def test_chromatic_matches_brute_force_on_seeded_sample():
    rng = random.Random(32)
    for _ in range(200):
        g = random_graph(rng.randint(1, 7), rng.choice([0.2, 0.4, 0.6, 0.8]), rng)
        res = chromatic_number(g)
        assert res.value == brute_chromatic_number(g)
        assert is_proper(g, res.certificate)
        assert res.certificate.palette_size == res.value


def test_defective_matches_brute_force_on_seeded_sample():
    rng = random.Random(33)
    for _ in range(120):
        g = random_graph(rng.randint(1, 6), rng.choice([0.3, 0.5, 0.7]), rng)
        for d in (0, 1, 2):
            res = defective_chromatic_number(g, d)
            assert res.value == brute_defective_chromatic_number(g, d)
            assert is_d_defective(g, res.certificate, d)
            assert res.certificate.palette_size == res.value


def test_defective_monotone_in_defect_and_fibers():
    rng = random.Random(34)
    for _ in range(25):
        g = random_graph(rng.randint(1, 6), 0.5, rng)
        chi = chromatic_number(g).value
        prev = None
        for d in (0, 1, 2, 3):
            val = defective_chromatic_number(g, d).value
            assert val <= chi
            if prev is not None:
                assert val <= prev
            prev = val
        for d in (1, 2):
            small = strong_product(g, d).product
            big = strong_product(g, d + 1).product
            assert (
                defective_chromatic_number(small, d).value
                <= defective_chromatic_number(big, d).value
            )


def test_list_colorable_examples():
    assert is_list_colorable(complete_graph(3), ListAssignment([[1, 2]] * 3)).value is False
    res = is_list_colorable(Graph(3, [(0, 1), (1, 2)]), ListAssignment([[1, 2]] * 3))
    assert res.value is True
    assert res.certificate == Coloring([1, 2, 1])
    # K4 minus the 0-1 edge, all lists {1,2}: no proper choice exists
    g = Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert is_list_colorable(g, ListAssignment([[1, 2]] * 4)).value is False
    assert is_list_colorable(empty_graph(0), ListAssignment([])).value is True


def test_list_colorable_matches_brute_force():
    rng = random.Random(35)
    for _ in range(150):
        g = random_graph(rng.randint(1, 6), 0.5, rng)
        lists = ListAssignment(
            [rng.sample(range(4), rng.randint(1, 3)) for _ in range(g.n)]
        )
        res = is_list_colorable(g, lists)
        brute = brute_list_coloring(g, lists)
        assert res.value == (brute is not None)
        if res.value:
            assert is_L_coloring(g, lists, res.certificate)
        else:
            assert res.certificate is None


def test_clique_lower_bound():
    assert clique_lower_bound(complete_graph(5)) == 5
    assert clique_lower_bound(empty_graph(3)) == 1
    assert clique_lower_bound(empty_graph(0)) == 0
    assert clique_lower_bound(cycle_graph(5)) == 2
    rng = random.Random(36)
    for _ in range(30):
        g = random_graph(rng.randint(1, 7), 0.5, rng)
        assert clique_lower_bound(g) <= chromatic_number(g).value


def test_determinism_across_runs():
    rng = random.Random(37)
    for _ in range(15):
        g = random_graph(7, 0.5, rng)
        a = chromatic_number(g)
        b = chromatic_number(g)
        assert (a.value, a.certificate, a.nodes_explored) == (
            b.value,
            b.certificate,
            b.nodes_explored,
        )
        x = defective_chromatic_number(strong_product(g, 2).product, 1)
        y = defective_chromatic_number(strong_product(g, 2).product, 1)
        assert (x.value, x.certificate) == (y.value, y.certificate)


def test_budget_exhaustion_reports_no_value():
    g = petersen_graph()
    res = chromatic_number(g, Budget(max_nodes=2))
    assert res.timed_out and res.value is None and res.certificate is None
    assert res.nodes_explored >= 2
    res = defective_chromatic_number(strong_product(g, 2).product, 1, Budget(max_nodes=3))
    assert res.timed_out and res.value is None
    lists = ListAssignment([[0, 1]] * 10)
    res = is_list_colorable(g, lists, Budget(max_nodes=1))
    assert res.timed_out and res.value is None


def test_wall_clock_budget():
    g = strong_product(petersen_graph(), 2).product
    res = defective_chromatic_number(g, 1, Budget(max_seconds=0.0))
    # either the search finished inside the first check window or it timed out;
    # both are legal, but a timeout must not carry a value
    if res.timed_out:
        assert res.value is None
    else:
        assert res.value == 3
