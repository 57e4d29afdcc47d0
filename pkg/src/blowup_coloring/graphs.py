"""Finite simple graphs with bitset adjacency, clique products, joins, and DIMACS io.

Vertices are the integers 0..n-1.  Adjacency is stored as one Python-int
bitmask per vertex, so edge queries are O(1) and neighborhood algebra
(intersections, unions, popcounts) is a single machine-assisted int
operation even for the blowup graphs the solvers chew on.  Graphs are
immutable after construction and safe to share between threads.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidParameterError, ParseError

__all__ = [
    "Graph",
    "ProductView",
    "strong_product",
    "join",
    "induced_subgraph",
    "max_degree",
    "read_graph",
    "write_graph",
    "parse_dimacs",
    "format_dimacs",
    "empty_graph",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "complete_bipartite_graph",
    "petersen_graph",
    "random_graph",
    "iter_bits",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An undirected simple graph on vertices 0..n-1.

    Construction validates the simple-graph invariants: endpoints in range,
    no self-loops.  Duplicate edges and both endpoint orders are tolerated
    (adjacency is a set).  Optional ``labels`` ride along for diagnostics
    only; they never affect equality or any algorithm.
    """

    __slots__ = ("n", "_adj", "labels")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Sequence[str] | None = None,
    ):
        if n < 0:
            raise InvalidParameterError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        if labels is not None:
            if len(labels) != n:
                raise InvalidParameterError(
                    f"labels length {len(labels)} does not match n={n}"
                )
            labels = tuple(labels)
        self.labels = labels

    @classmethod
    def from_adjacency_masks(
        cls, n: int, masks: Sequence[int], labels: Sequence[str] | None = None
    ) -> "Graph":
        """Build a graph directly from per-vertex neighbor bitmasks."""
        g = cls.__new__(cls)
        if n < 0 or len(masks) != n:
            raise InvalidParameterError("mask list length must equal n")
        full = (1 << n) - 1
        for v, mask in enumerate(masks):
            if mask & ~full:
                raise InvalidParameterError(f"mask of vertex {v} has out-of-range bits")
            if (mask >> v) & 1:
                raise InvalidParameterError(f"self-loop at vertex {v}")
        for v, mask in enumerate(masks):
            for u in iter_bits(mask):
                if not (masks[u] >> v) & 1:
                    raise InvalidParameterError(f"asymmetric adjacency at ({v},{u})")
        g.n = n
        g._adj = tuple(masks)
        if labels is not None and len(labels) != n:
            raise InvalidParameterError("labels length must equal n")
        g.labels = tuple(labels) if labels is not None else None
        return g

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self._adj) // 2

    def adj_mask(self, v: int) -> int:
        """Neighborhood of ``v`` as a bitmask."""
        return self._adj[v]

    def adj_masks(self) -> tuple[int, ...]:
        """All neighborhood bitmasks, indexed by vertex."""
        return self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self._adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def validate(self) -> None:
        """Re-check the simple-graph invariants (used by tests)."""
        full = (1 << self.n) - 1
        for v, mask in enumerate(self._adj):
            assert not mask & ~full, f"out-of-range bits at vertex {v}"
            assert not (mask >> v) & 1, f"self-loop at vertex {v}"
            for u in iter_bits(mask):
                assert (self._adj[u] >> v) & 1, f"asymmetric pair ({v},{u})"

    # -- protocol --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def max_degree(g: Graph) -> int:
    """Maximum vertex degree; 0 for edgeless or empty graphs."""
    return max((mask.bit_count() for mask in g._adj), default=0)


@dataclass(frozen=True)
class ProductView:
    """A clique blowup ``base ⊠ K_t`` with the index bijection.

    Product vertex (v, i) lives at index v*t + i, so each fiber
    {v} x [t] occupies a contiguous index block.
    """

    base: Graph
    t: int
    product: Graph

    def from_pair(self, v: int, i: int) -> int:
        if not (0 <= v < self.base.n and 0 <= i < self.t):
            raise InvalidParameterError(f"pair ({v},{i}) out of range")
        return v * self.t + i

    def to_pair(self, p: int) -> tuple[int, int]:
        if not (0 <= p < self.product.n):
            raise InvalidParameterError(f"product index {p} out of range")
        return divmod(p, self.t)

    def fiber(self, v: int) -> range:
        """Product indices of the fiber over base vertex ``v``."""
        return range(v * self.t, (v + 1) * self.t)


def strong_product(g: Graph, t: int) -> ProductView:
    """Blow up every vertex of ``g`` into a t-clique.

    (u, i) and (v, j) are adjacent iff u == v and i != j, or uv is an
    edge of ``g``.  With t = d+1 this is the graph whose d-defective
    chromatic number the library compares against the chromatic number
    of ``g``.
    """
    if t < 1:
        raise InvalidParameterError(f"fiber size must be >= 1, got {t}")
    n = g.n
    fiber_full = (1 << t) - 1
    # Neighborhood of (v, i): the rest of v's fiber plus the full fibers
    # of v's base neighbors.
    base_masks = []
    for v in range(n):
        mask = 0
        for u in iter_bits(g.adj_mask(v)):
            mask |= fiber_full << (u * t)
        base_masks.append(mask)
    masks = []
    for v in range(n):
        fiber_mask = fiber_full << (v * t)
        for i in range(t):
            p = v * t + i
            masks.append((fiber_mask & ~(1 << p)) | base_masks[v])
    labels = None
    if g.labels is not None:
        labels = [f"{g.labels[v]}:{i}" for v in range(n) for i in range(t)]
    product = Graph.from_adjacency_masks(n * t, masks, labels)
    return ProductView(base=g, t=t, product=product)


def join(gs: Sequence[Graph]) -> Graph:
    """Disjoint union of the parts plus all cross-part edges.

    Vertex indices are concatenated in input order.
    """
    if not gs:
        raise InvalidParameterError("join requires at least one graph")
    total = sum(g.n for g in gs)
    full = (1 << total) - 1
    masks = []
    offset = 0
    for g in gs:
        part_mask = ((1 << g.n) - 1) << offset
        cross = full & ~part_mask
        for v in range(g.n):
            masks.append((g.adj_mask(v) << offset) | cross)
        offset += g.n
    labels = None
    if all(g.labels is not None for g in gs):
        labels = [lbl for g in gs for lbl in g.labels]  # type: ignore[union-attr]
    return Graph.from_adjacency_masks(total, masks, labels)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``keep``, plus the old->new index map.

    Kept vertices are re-indexed densely, preserving their relative order.
    """
    kept = sorted(set(keep))
    for v in kept:
        if not (0 <= v < g.n):
            raise InvalidParameterError(f"vertex {v} out of range for n={g.n}")
    index_map = {old: new for new, old in enumerate(kept)}
    masks = []
    for old in kept:
        mask = 0
        orig = g.adj_mask(old)
        for new, other in enumerate(kept):
            if (orig >> other) & 1:
                mask |= 1 << new
        masks.append(mask)
    labels = None
    if g.labels is not None:
        labels = [g.labels[old] for old in kept]
    return Graph.from_adjacency_masks(len(kept), masks, labels), index_map


# -- DIMACS .col dialect ---------------------------------------------------
#
# "c ..." comments, a single "p edge <n> <m>" header, then "e <u> <v>" lines
# with 1-based endpoints.  The reader tolerates duplicate edges and both
# endpoint orders; the writer emits each edge once as "e u v" with u < v,
# ascending.


def parse_dimacs(text: str) -> Graph:
    n = -1
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n >= 0:
                raise ParseError(f"line {lineno}: duplicate 'p' header")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"line {lineno}: malformed header {line!r}")
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer header fields") from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
        elif parts[0] == "e":
            if n < 0:
                raise ParseError(f"line {lineno}: edge before 'p' header")
            if len(parts) != 3:
                raise ParseError(f"line {lineno}: malformed edge line {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"line {lineno}: non-integer endpoints") from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"line {lineno}: endpoint out of range 1..{n}")
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if n < 0:
        raise ParseError("missing 'p edge <n> <m>' header")
    return Graph(n, edges)


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    """Read a graph from a DIMACS .col file."""
    with open(path, "r", encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


def write_graph(g: Graph, path: str) -> None:
    """Write a graph as a DIMACS .col file (edges ascending, u < v)."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_dimacs(g))


# -- standard small graphs -------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError("cycles need at least 3 vertices")
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def petersen_graph() -> Graph:
    outer = [(v, (v + 1) % 5) for v in range(5)]
    spokes = [(v, v + 5) for v in range(5)]
    inner = [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    return Graph(10, outer + spokes + inner)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdos-Renyi G(n, p) drawn from the caller's RNG."""
    if not (0.0 <= p <= 1.0):
        raise InvalidParameterError(f"edge probability must be in [0,1], got {p}")
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph(n, edges)
