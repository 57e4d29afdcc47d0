"""Shared sample generators and the session-wide solved table.

The solved table drives the acceptance suite: a deterministic pool of 200
graphs with n <= 7 (every graph up to relabeling for n <= 5, seeded random
draws for n in {6, 7}), solved exactly for chi and for the defective
chromatic numbers of both blowups at d in {1, 2}.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import pytest

from blowup_coloring import (
    Coloring,
    Graph,
    ListAssignment,
    Witness,
    chromatic_number,
    defective_chromatic_number,
    enumerate_canonical_graphs,
    is_d_defective,
    is_proper,
    max_color_degree,
    normalize_witness,
    random_graph,
    strong_product,
)

SAMPLE_SEED = 20260810
WITNESS_SEED = 424243


def seeded_graph_sample() -> list[Graph]:
    """The acceptance pool: 52 canonical graphs (n <= 5) + 148 seeded draws."""
    graphs: list[Graph] = []
    for n in range(1, 6):
        graphs.extend(enumerate_canonical_graphs(n))
    rng = random.Random(SAMPLE_SEED)
    for n in (6, 7):
        for _ in range(74):
            graphs.append(random_graph(n, rng.choice([0.2, 0.35, 0.5, 0.65]), rng))
    assert len(graphs) == 200
    return graphs


def seeded_witnesses(count: int, seed: int, bounded_color_degree: bool) -> list[Witness]:
    """Normalized witnesses with |F| <= 6, k <= 6, d <= 2.

    With ``bounded_color_degree`` every witness satisfies
    max_color_degree(F, L) <= d (rejection sampling); without it the pool
    also contains non-list-colorable instances.
    """
    rng = random.Random(seed)
    out: list[Witness] = []
    while len(out) < count:
        d = rng.choice([0, 1, 2])
        n = rng.randint(1, 6)
        f = random_graph(n, rng.choice([0.15, 0.3, 0.5]), rng)
        k0 = rng.randint(d + 1, 6)
        lists = [rng.sample(range(k0), d + 1) for _ in range(n)]
        w = normalize_witness(Witness(f, ListAssignment(lists), d))
        if bounded_color_degree and max_color_degree(w.F, w.lists) > d:
            continue
        assert w.k <= 6
        out.append(w)
    return out


@dataclass
class SolvedEntry:
    """One pool graph with its certified exact quantities."""

    graph: Graph
    chi: int
    chi_cert: Coloring
    blowup_value: dict[int, int]       # d -> chi^d(G x K_{d+1})
    blowup_cert: dict[int, Coloring]
    kd_value: dict[int, int]           # d -> chi^d(G x K_d)
    kd_cert: dict[int, Coloring]


def _solve_entry(g: Graph) -> SolvedEntry:
    chi_res = chromatic_number(g)
    assert not chi_res.timed_out and is_proper(g, chi_res.certificate)
    blowup_value, blowup_cert, kd_value, kd_cert = {}, {}, {}, {}
    for d in (1, 2):
        big = strong_product(g, d + 1).product
        res = defective_chromatic_number(big, d)
        assert not res.timed_out and is_d_defective(big, res.certificate, d)
        blowup_value[d], blowup_cert[d] = res.value, res.certificate
        small = strong_product(g, d).product
        res = defective_chromatic_number(small, d)
        assert not res.timed_out and is_d_defective(small, res.certificate, d)
        kd_value[d], kd_cert[d] = res.value, res.certificate
    return SolvedEntry(
        graph=g,
        chi=chi_res.value,
        chi_cert=chi_res.certificate,
        blowup_value=blowup_value,
        blowup_cert=blowup_cert,
        kd_value=kd_value,
        kd_cert=kd_cert,
    )


@pytest.fixture(scope="session")
def solved_table() -> list[SolvedEntry]:
    return [_solve_entry(g) for g in seeded_graph_sample()]
