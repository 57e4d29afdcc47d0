"""Brute-force reference implementations used to cross-check the solvers.

These deliberately share no search code with the package: plain enumeration
over itertools.product with direct edge checks, slow but obviously correct.
"""

from __future__ import annotations

from itertools import combinations, product as cartesian

from blowup_coloring import Graph, ListAssignment, VertexPartition


def assignment_is_proper(g: Graph, assign) -> bool:
    return all(assign[u] != assign[v] for u, v in g.edges())


def assignment_defect(g: Graph, assign) -> int:
    worst = 0
    for v in range(g.n):
        mono = sum(1 for u in g.neighbors(v) if assign[u] == assign[v])
        worst = max(worst, mono)
    return worst


def brute_chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for assign in cartesian(range(k), repeat=g.n):
            if assignment_is_proper(g, assign):
                return k
    raise AssertionError("n colors always suffice")


def brute_defective_chromatic_number(g: Graph, d: int) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for assign in cartesian(range(k), repeat=g.n):
            if assignment_defect(g, assign) <= d:
                return k
    raise AssertionError("n colors always suffice")


def brute_list_coloring(g: Graph, lists: ListAssignment):
    """A proper from-the-lists assignment as a tuple, or None.

    For the empty graph the empty tuple is returned (use ``is not None``).
    """
    for assign in cartesian(*[sorted(lists[v]) for v in range(g.n)]):
        if assignment_is_proper(g, assign):
            return assign
    return None


def brute_independent_transversals(h: Graph, p: VertexPartition) -> list[tuple[int, ...]]:
    """All independent transversals, one vertex per part in part order."""
    found = []
    for combo in cartesian(*[list(part) for part in p.parts]):
        if all(not h.has_edge(a, b) for a, b in combinations(combo, 2)):
            found.append(combo)
    return found
