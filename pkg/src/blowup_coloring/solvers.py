"""Exact solvers for chromatic number, defective chromatic number, and list coloring.

Everything here is an exhaustive search with deterministic tie-breaking, so
repeated runs on the same input return identical values *and* identical
certificates.  The solvers target desk-scale instances (a few dozen
vertices); they are exact or they time out, never approximate.

Algorithms:

* ``chromatic_number`` -- branch-and-bound with DSATUR vertex selection.
  Lower bound: a greedily grown clique.  Upper bound: DSATUR greedy.
  New colors are introduced in canonical order (color c+1 is tried only
  after colors 0..c), which removes color-permutation symmetry.
* ``defective_chromatic_number`` -- for k = lb, lb+1, ... run a complete
  decision search with vertices in degeneracy order, maintaining
  per-vertex monochromatic-degree counters; a color is feasible iff it
  keeps the counter of the candidate vertex and of every same-colored
  neighbor at most d.  The first feasible k is exact.
* ``is_list_colorable`` -- backtracking with minimum-remaining-values
  vertex selection, ties broken by lowest vertex index.

Budgets cap the number of search nodes (default 10^8) and optionally wall
time; exhausting either yields a ``timed_out`` result with no value, never
a wrong answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .coloring import Coloring, ListAssignment, _require_assignment
from .errors import InvalidParameterError, SearchInvariantError
from .graphs import Graph, iter_bits

__all__ = [
    "Budget",
    "SolveResult",
    "chromatic_number",
    "defective_chromatic_number",
    "is_list_colorable",
    "clique_lower_bound",
    "DEFAULT_NODE_BUDGET",
]

DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class Budget:
    """Search limits: a node count and an optional wall-clock cap in seconds."""

    max_nodes: int = DEFAULT_NODE_BUDGET
    max_seconds: float | None = None


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an exact solve.

    ``value`` is the optimum (or the decision for boolean queries) and is
    None exactly when ``timed_out`` is set: exhausted budgets never produce
    partial answers.  ``certificate`` is a coloring witnessing the value,
    when one exists.
    """

    value: int | bool | None
    certificate: Coloring | None
    nodes_explored: int
    timed_out: bool


class _OutOfBudget(Exception):
    pass


class _Done(Exception):
    pass


class _Ticker:
    """Node counter with budget enforcement; raises once the budget is gone."""

    __slots__ = ("nodes", "limit", "deadline")

    def __init__(self, budget: Budget | None):
        budget = budget or Budget()
        if budget.max_nodes < 0:
            raise InvalidParameterError("node budget must be non-negative")
        self.nodes = 0
        self.limit = budget.max_nodes
        self.deadline = (
            None if budget.max_seconds is None else time.monotonic() + budget.max_seconds
        )

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise _OutOfBudget
        if (
            self.deadline is not None
            and (self.nodes & 1023) == 0
            and time.monotonic() > self.deadline
        ):
            raise _OutOfBudget


def _greedy_clique(g: Graph) -> list[int]:
    """Grow a clique greedily by maximum degree inside the candidate set."""
    adj = g.adj_masks()
    cand = (1 << g.n) - 1
    clique: list[int] = []
    while cand:
        best, best_deg = -1, -1
        for v in iter_bits(cand):
            deg = (adj[v] & cand).bit_count()
            if deg > best_deg:
                best, best_deg = v, deg
        clique.append(best)
        cand &= adj[best]
    return clique


def clique_lower_bound(g: Graph) -> int:
    """Size of a greedily grown clique; a lower bound on the chromatic number."""
    return len(_greedy_clique(g))


def _dsatur_greedy(g: Graph) -> Coloring:
    """Greedy DSATUR coloring; deterministic, used as the search upper bound."""
    n = g.n
    adj = g.adj_masks()
    colors = [-1] * n
    sat = [0] * n  # bitmask of colors seen in the neighborhood
    degrees = [adj[v].bit_count() for v in range(n)]
    for _ in range(n):
        best, best_sat, best_deg = -1, -1, -1
        for v in range(n):
            if colors[v] >= 0:
                continue
            s = sat[v].bit_count()
            if s > best_sat or (s == best_sat and degrees[v] > best_deg):
                best, best_sat, best_deg = v, s, degrees[v]
        c = 0
        taken = sat[best]
        while (taken >> c) & 1:
            c += 1
        colors[best] = c
        bit = 1 << c
        for u in iter_bits(adj[best]):
            sat[u] |= bit
    return Coloring(colors)


def chromatic_number(g: Graph, budget: Budget | None = None) -> SolveResult:
    """Exact chromatic number with a proper certificate."""
    n = g.n
    if n == 0:
        return SolveResult(0, Coloring(()), 0, False)
    ticker = _Ticker(budget)
    adj = g.adj_masks()
    lb = max(1, clique_lower_bound(g))
    greedy = _dsatur_greedy(g)
    best_k = greedy.palette_size
    best_cols = list(greedy.colors)
    if best_k > lb:
        colors = [-1] * n
        sat = [0] * n
        degrees = [adj[v].bit_count() for v in range(n)]
        uncolored = (1 << n) - 1

        def dfs(colored: int, used: int) -> None:
            nonlocal best_k, best_cols, uncolored
            if used >= best_k:
                return
            if colored == n:
                best_k = used
                best_cols = colors.copy()
                if best_k == lb:
                    raise _Done
                return
            best_v, best_sat, best_deg = -1, -1, -1
            for v in iter_bits(uncolored):
                s = sat[v].bit_count()
                if s > best_sat or (s == best_sat and degrees[v] > best_deg):
                    best_v, best_sat, best_deg = v, s, degrees[v]
            v = best_v
            av = adj[v]
            bv = 1 << v
            uncolored ^= bv
            taken = sat[v]
            c = 0
            # Existing colors 0..used-1 plus one canonical new color, and
            # never a color index that cannot beat the incumbent.
            while c <= used and c < best_k - 1:
                if not (taken >> c) & 1:
                    ticker.tick()
                    colors[v] = c
                    cbit = 1 << c
                    touched = []
                    for u in iter_bits(av & uncolored):
                        if not sat[u] & cbit:
                            sat[u] |= cbit
                            touched.append(u)
                    dfs(colored + 1, used if c < used else used + 1)
                    for u in touched:
                        sat[u] ^= cbit
                    colors[v] = -1
                c += 1
            uncolored ^= bv

        try:
            dfs(0, 0)
        except _Done:
            pass
        except _OutOfBudget:
            return SolveResult(None, None, ticker.nodes, True)
    return SolveResult(best_k, Coloring(best_cols), ticker.nodes, False)


def _degeneracy_order(g: Graph) -> list[int]:
    """Vertex order in which each vertex has few already-ordered neighbors.

    Computed by repeatedly deleting a minimum-degree vertex (ties broken by
    lowest index) and reversing the deletion sequence.
    """
    n = g.n
    adj = g.adj_masks()
    alive = (1 << n) - 1
    removal: list[int] = []
    for _ in range(n):
        best, best_deg = -1, n + 1
        for v in iter_bits(alive):
            deg = (adj[v] & alive).bit_count()
            if deg < best_deg:
                best, best_deg = v, deg
        removal.append(best)
        alive ^= 1 << best
    removal.reverse()
    return removal


def _defective_decision(
    g: Graph, d: int, k: int, order: list[int], ticker: _Ticker
) -> list[int] | None:
    """Find a d-defective coloring of ``g`` with at most ``k`` colors, or None.

    Complete search: vertices follow ``order``; colors are introduced
    canonically; feasibility keeps every monochromatic-degree counter at
    most d (the candidate's own count and each same-colored neighbor's).
    """
    n = g.n
    adj = g.adj_masks()
    colors = [-1] * n
    color_masks = [0] * k
    saturated = [0] * k  # per color: vertices whose counter already equals d
    mono = [0] * n

    def dfs(idx: int, used: int) -> bool:
        if idx == n:
            return True
        v = order[idx]
        av = adj[v]
        bv = 1 << v
        cmax = used + 1 if used < k else k
        for c in range(cmax):
            cmask = color_masks[c]
            inter = av & cmask
            cnt = inter.bit_count()
            if cnt > d or av & saturated[c]:
                continue
            ticker.tick()
            colors[v] = c
            color_masks[c] = cmask | bv
            mono[v] = cnt
            if cnt == d:
                saturated[c] |= bv
            for u in iter_bits(inter):
                mu = mono[u] + 1
                mono[u] = mu
                if mu == d:
                    saturated[c] |= 1 << u
            if dfs(idx + 1, used + 1 if c == used else used):
                return True
            for u in iter_bits(inter):
                if mono[u] == d:
                    saturated[c] &= ~(1 << u)
                mono[u] -= 1
            if cnt == d:
                saturated[c] &= ~bv
            mono[v] = 0
            color_masks[c] = cmask
            colors[v] = -1
        return False

    return colors if dfs(0, 0) else None


def defective_chromatic_number(g: Graph, d: int, budget: Budget | None = None) -> SolveResult:
    """Exact d-defective chromatic number with a d-defective certificate.

    With d = 0 this agrees with ``chromatic_number``.
    """
    if d < 0:
        raise InvalidParameterError(f"defect bound must be >= 0, got {d}")
    n = g.n
    if n == 0:
        return SolveResult(0, Coloring(()), 0, False)
    ticker = _Ticker(budget)
    order = _degeneracy_order(g)
    lb = max(1, -(-clique_lower_bound(g) // (d + 1)))
    ub = _dsatur_greedy(g).palette_size  # a proper coloring is d-defective
    k = lb
    while True:
        try:
            found = _defective_decision(g, d, k, order, ticker)
        except _OutOfBudget:
            return SolveResult(None, None, ticker.nodes, True)
        if found is not None:
            cert = Coloring(found)
            if cert.palette_size != k:
                raise SearchInvariantError(
                    f"decision at k={k} produced a {cert.palette_size}-color certificate"
                )
            return SolveResult(k, cert, ticker.nodes, False)
        k += 1
        if k > ub:
            raise SearchInvariantError("search exceeded its greedy upper bound")


def is_list_colorable(g: Graph, lists: ListAssignment, budget: Budget | None = None) -> SolveResult:
    """Decide whether ``g`` admits a proper coloring from the given lists.

    Returns True with a certificate coloring, or False after exhaustive
    refutation.
    """
    _require_assignment(g, lists)
    n = g.n
    if n == 0:
        return SolveResult(True, Coloring(()), 0, False)
    ticker = _Ticker(budget)
    adj = g.adj_masks()
    palette = sorted(set().union(*[set(entry) for entry in lists.lists]))
    index_of = {c: i for i, c in enumerate(palette)}
    vlists = [tuple(sorted(index_of[c] for c in lists[v])) for v in range(n)]
    assigned = [0] * max(1, len(palette))  # per color index: assigned vertices
    chosen = [-1] * n
    uncolored = (1 << n) - 1

    def dfs(count: int) -> bool:
        nonlocal uncolored
        if count == n:
            return True
        best_v, best_opts = -1, None
        for v in iter_bits(uncolored):
            av = adj[v]
            opts = [ci for ci in vlists[v] if not av & assigned[ci]]
            if best_opts is None or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if not opts:
                    break
        if not best_opts:
            return False
        v = best_v
        bv = 1 << v
        uncolored ^= bv
        for ci in best_opts:
            ticker.tick()
            chosen[v] = ci
            assigned[ci] |= bv
            if dfs(count + 1):
                return True
            assigned[ci] ^= bv
            chosen[v] = -1
        uncolored ^= bv
        return False

    try:
        ok = dfs(0)
    except _OutOfBudget:
        return SolveResult(None, None, ticker.nodes, True)
    if not ok:
        return SolveResult(False, None, ticker.nodes, False)
    return SolveResult(True, Coloring(palette[ci] for ci in chosen), ticker.nodes, False)
