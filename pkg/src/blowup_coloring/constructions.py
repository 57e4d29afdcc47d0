"""Constructions relating chromatic numbers to defective colorings of blowups.

The pivot of the whole package is the relationship between the chromatic
number of a graph G and the d-defective chromatic number of its clique
blowup G ⊠ K_{d+1}:

* ``lift_proper_to_defective`` shows the easy direction: copying an optimal
  proper coloring across fibers gives chi^d(G ⊠ K_{d+1}) <= chi(G).
* ``build_counterexample`` goes the other way.  Starting from a witness
  (F, L, d) -- a graph with color lists of size d+1 -- it attaches a clique
  of one vertex per palette color, wiring vertex u of F to clique vertex t
  exactly when t is *not* in L(u).  The resulting graph G needs more than
  k = |palette| colors exactly when F has no proper coloring from its lists,
  while ``defective_blowup_coloring`` colors G ⊠ K_{d+1} with at most k
  colors whenever every color degree of (F, L) is at most d.  Witnesses
  with small color degrees and no list coloring (Bohman-Holzman style) thus
  separate chi(G) from chi^d(G ⊠ K_{d+1}).
* ``join_lift`` amplifies a single defective coloring: joining m copies of
  a base graph multiplies both chromatic quantities by m, and stretching
  fiber slots in blocks turns a delta-defective coloring of g ⊠ K_{delta+1}
  into a d-defective coloring of the join's blowup whenever
  (delta+1) divides (d+1).
* ``extract_proper_from_defective`` gives the counter-bound
  chi(G) <= 2 * chi^d(G ⊠ K_d): from a d-defective coloring of G ⊠ K_d it
  builds a conflict graph on two layers of the fiber slots, takes an
  independent transversal (which exists because every part has 2d vertices
  and the conflict graph has maximum degree at most d), and reads off a
  proper coloring of G with at most twice as many colors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .coloring import Coloring, ListAssignment, defect, is_proper
from .errors import (
    BudgetExhaustedError,
    InvalidParameterError,
    InvalidWitnessError,
    ParseError,
    SearchInvariantError,
)
from .graphs import Graph, join, strong_product
from .solvers import Budget
from .transversal import VertexPartition, find_independent_transversal

__all__ = [
    "Witness",
    "CounterexampleBundle",
    "normalize_witness",
    "build_counterexample",
    "defective_blowup_coloring",
    "lift_proper_to_defective",
    "join_lift",
    "slot_block_index",
    "extract_proper_from_defective",
    "build_extraction_graph",
    "witness_palette_formula",
    "read_witness",
    "write_witness",
    "parse_witness_json",
    "format_witness_json",
]


@dataclass(frozen=True)
class Witness:
    """A graph F with per-vertex color lists and a defect parameter d.

    ``k`` is always the size of the union of the lists (recomputed, never
    stored).  A witness is *normalized* when every list has exactly d+1
    colors and the palette is {0, ..., k-1}.
    """

    F: Graph
    lists: ListAssignment
    d: int

    def __post_init__(self):
        if self.d < 0:
            raise InvalidParameterError(f"defect parameter must be >= 0, got {self.d}")
        if len(self.lists) != self.F.n:
            raise InvalidParameterError(
                f"witness has {len(self.lists)} lists for {self.F.n} vertices"
            )

    @property
    def k(self) -> int:
        return len(self.lists.palette())

    def is_normalized(self) -> bool:
        size = self.d + 1
        if any(len(entry) != size for entry in self.lists.lists):
            return False
        return self.lists.palette() == frozenset(range(self.k))


@dataclass(frozen=True)
class CounterexampleBundle:
    """Output of ``build_counterexample``: the witness graph F embedded at
    indices 0..|F|-1, followed by one clique vertex per palette color."""

    G: Graph
    F_vertices: range
    clique_vertices: range
    k: int
    d: int


def witness_palette_formula(d: int) -> int:
    """Palette size 2d^3 + 2d^2 + d + 3 of the known non-list-colorable
    witnesses with color degrees at most d (29 at d = 2)."""
    if d < 0:
        raise InvalidParameterError(f"defect parameter must be >= 0, got {d}")
    return 2 * d**3 + 2 * d**2 + d + 3


def normalize_witness(w: Witness) -> Witness:
    """Shrink every list to its d+1 smallest colors and rename the palette
    densely to {0, ..., k-1}.

    Shrinking lists cannot create a list coloring and cannot raise any
    color degree, so the properties that make a witness useful survive.
    """
    size = w.d + 1
    truncated = []
    for v, entry in enumerate(w.lists.lists):
        if len(entry) < size:
            raise InvalidWitnessError(
                f"list of vertex {v} has {len(entry)} colors, need at least {size}"
            )
        truncated.append(sorted(entry)[:size])
    palette = sorted({c for entry in truncated for c in entry})
    rename = {c: i for i, c in enumerate(palette)}
    renamed = [[rename[c] for c in entry] for entry in truncated]
    return Witness(w.F, ListAssignment(renamed), w.d)


def build_counterexample(w: Witness) -> CounterexampleBundle:
    """Attach a palette clique to a normalized witness.

    The result G has F's vertices first, then clique vertices v_0..v_{k-1},
    pairwise adjacent, with u ~ v_t exactly when t is not in L(u).  G is
    k-colorable iff F has a proper coloring from its lists: any proper
    k-coloring must use all k colors on the clique, which forces every F
    vertex into its own list; conversely a list coloring of F extends by
    giving each v_t the color t.
    """
    if not w.is_normalized():
        size = w.d + 1
        for v, entry in enumerate(w.lists.lists):
            if len(entry) != size:
                raise InvalidWitnessError(
                    f"witness not normalized: list of vertex {v} has {len(entry)} colors, expected {size}"
                )
        raise InvalidWitnessError(
            f"witness not normalized: palette {sorted(w.lists.palette())} is not dense"
        )
    nf = w.F.n
    k = w.k
    n = nf + k
    clique_full = ((1 << k) - 1) << nf
    masks = []
    for u in range(nf):
        mask = w.F.adj_mask(u)
        for t in range(k):
            if t not in w.lists[u]:
                mask |= 1 << (nf + t)
        masks.append(mask)
    attach = masks.copy()
    for t in range(k):
        mask = clique_full & ~(1 << (nf + t))
        for u in range(nf):
            if (attach[u] >> (nf + t)) & 1:
                mask |= 1 << u
        masks.append(mask)
    labels = None
    if w.F.labels is not None:
        labels = list(w.F.labels) + [f"v{t}" for t in range(k)]
    g = Graph.from_adjacency_masks(n, masks, labels)
    return CounterexampleBundle(
        G=g, F_vertices=range(nf), clique_vertices=range(nf, n), k=k, d=w.d
    )


def defective_blowup_coloring(w: Witness, b: CounterexampleBundle) -> Coloring:
    """Color G ⊠ K_{d+1} from the witness lists.

    Fiber slot i of an F vertex v takes the i-th smallest color of L(v);
    every slot of clique vertex v_t takes color t.  The palette is a subset
    of {0, ..., k-1}, and the coloring is d-defective whenever every color
    degree of (F, L) is at most d: the monochromatic degree of an F slot
    equals the color degree of its color, while each clique fiber is its
    own monochromatic (d+1)-clique.
    """
    if b.d != w.d or b.k != w.k or len(b.F_vertices) != w.F.n:
        raise InvalidParameterError("bundle does not match the witness")
    if b.G != build_counterexample(w).G:
        raise InvalidParameterError("bundle graph was not built from this witness")
    t = w.d + 1
    colors = []
    for v in b.F_vertices:
        slots = sorted(w.lists[v])
        colors.extend(slots)  # slot i of fiber v gets slots[i]
    for idx, _ in enumerate(b.clique_vertices):
        colors.extend([idx] * t)
    return Coloring(colors)


def lift_proper_to_defective(g: Graph, c: Coloring, t: int) -> Coloring:
    """Copy a proper coloring of g across all fibers of g ⊠ K_t.

    Each fiber becomes a monochromatic K_t, so the lifted coloring has
    defect exactly t-1 on a non-empty graph; with t = d+1 it is a
    d-defective coloring of the blowup using chi-many colors.
    """
    if t < 1:
        raise InvalidParameterError(f"fiber size must be >= 1, got {t}")
    if not is_proper(g, c):
        raise InvalidParameterError("coloring is not proper on the base graph")
    return Coloring(c[v] for v in range(g.n) for _ in range(t))


def slot_block_index(i: int, d: int, delta: int) -> int:
    """Which block of (d+1)/(delta+1) consecutive fiber slots contains slot i."""
    if delta < 0 or d < delta:
        raise InvalidParameterError(f"need 0 <= delta <= d, got delta={delta}, d={d}")
    if (d + 1) % (delta + 1):
        raise InvalidParameterError(f"(delta+1)={delta + 1} must divide (d+1)={d + 1}")
    if not 0 <= i <= d:
        raise InvalidParameterError(f"slot {i} out of range 0..{d}")
    return i // ((d + 1) // (delta + 1))


def join_lift(g0: Graph, c0: Coloring, m: int, d: int) -> tuple[Graph, Coloring]:
    """Join m copies of g0 and stretch a defective coloring to defect d.

    ``c0`` must be a delta-defective coloring of g0 ⊠ K_{delta+1} on a dense
    palette {0, ..., r-1}, where delta is inferred from len(c0) / g0.n - 1
    and (delta+1) must divide (d+1).  Copy t of the join reuses c0 shifted
    into its own color block {r*t, ..., r*t + r - 1}, and slot i of the
    target fiber reads block slot i // ((d+1)/(delta+1)).  Each color class
    meets at most delta+1 source vertices, each inflated to (d+1)/(delta+1)
    slots, so the result is d-defective with exactly r*m colors.
    """
    if m < 1:
        raise InvalidParameterError(f"copy count must be >= 1, got {m}")
    if d < 0:
        raise InvalidParameterError(f"defect bound must be >= 0, got {d}")
    if g0.n == 0:
        if len(c0) != 0:
            raise InvalidParameterError("coloring is not empty for an empty base graph")
        return join([g0] * m), Coloring(())
    if len(c0) % g0.n:
        raise InvalidParameterError(
            f"coloring length {len(c0)} is not a multiple of the base size {g0.n}"
        )
    delta = len(c0) // g0.n - 1
    if (d + 1) % (delta + 1):
        raise InvalidParameterError(
            f"(delta+1)={delta + 1} must divide (d+1)={d + 1}"
        )
    base_product = strong_product(g0, delta + 1).product
    if defect(base_product, c0) > delta:
        raise InvalidParameterError(
            f"base coloring has defect {defect(base_product, c0)} > delta={delta}"
        )
    r = c0.palette_size
    if max(c0.colors) + 1 != r:
        raise InvalidParameterError("base coloring palette is not dense {0..r-1}")
    joined = join([g0] * m)
    stretch = (d + 1) // (delta + 1)
    colors = []
    for t in range(m):
        shift = r * t
        for v_star in range(g0.n):
            row = v_star * (delta + 1)
            for i in range(d + 1):
                colors.append(c0[row + i // stretch] + shift)
    return joined, Coloring(colors)


def build_extraction_graph(g: Graph, d: int, c: Coloring) -> tuple[Graph, VertexPartition]:
    """Conflict graph used when turning a defective blowup coloring proper.

    Vertices are (v, i, a) for v in V(g), fiber slot i in [d], layer a in
    {0, 1}, at index (v*d + i)*2 + a.  Two vertices are adjacent iff their
    base vertices are adjacent in g, their slots carry the same color under
    ``c``, and they lie in the same layer.  The parts of the returned
    partition are the per-base-vertex fibers of size 2d.
    """
    if d < 1:
        raise InvalidParameterError(f"fiber count must be >= 1, got {d}")
    if len(c) != g.n * d:
        raise InvalidParameterError(
            f"coloring covers {len(c)} vertices but g ⊠ K_{d} has {g.n * d}"
        )
    n = g.n
    nh = n * d * 2
    masks = [0] * nh
    for g1 in range(n):
        for g2 in g.neighbors(g1):
            if g2 <= g1:
                continue
            for i in range(d):
                c1 = c[g1 * d + i]
                for j in range(d):
                    if c1 != c[g2 * d + j]:
                        continue
                    for a in (0, 1):
                        x = (g1 * d + i) * 2 + a
                        y = (g2 * d + j) * 2 + a
                        masks[x] |= 1 << y
                        masks[y] |= 1 << x
    h = Graph.from_adjacency_masks(nh, masks)
    parts = [range(v * 2 * d, (v + 1) * 2 * d) for v in range(n)]
    return h, VertexPartition(parts)


def extract_proper_from_defective(
    g: Graph, d: int, c: Coloring, budget: Budget | None = None
) -> Coloring:
    """Turn a d-defective coloring of g ⊠ K_d into a proper coloring of g.

    Picks an independent transversal of the conflict graph's fibers (one
    slot-layer pair per base vertex) and encodes the chosen (color, layer)
    pair as 2*color + layer.  Every part has 2d vertices while the conflict
    graph has maximum degree at most d, so the transversal always exists;
    the result is proper and uses at most twice as many colors as ``c``.
    """
    if d < 1:
        raise InvalidParameterError(f"fiber count must be >= 1, got {d}")
    if len(c) != g.n * d:
        raise InvalidParameterError(
            f"coloring covers {len(c)} vertices but g ⊠ K_{d} has {g.n * d}"
        )
    product = strong_product(g, d).product
    if defect(product, c) > d:
        raise InvalidParameterError(
            f"coloring has defect {defect(product, c)} > d={d} on the blowup"
        )
    h, partition = build_extraction_graph(g, d, c)
    result = find_independent_transversal(h, partition, budget)
    if result.timed_out:
        raise BudgetExhaustedError("transversal search budget exhausted")
    if result.transversal is None:
        raise SearchInvariantError(
            "no independent transversal despite parts of size 2d >= 2*max degree"
        )
    colors = []
    for v in range(g.n):
        idx = result.transversal[v]
        layer = idx & 1
        slot = (idx >> 1) % d
        colors.append(2 * c[v * d + slot] + layer)
    return Coloring(colors)


# -- witness files -----------------------------------------------------------
#
# {"d": int, "F": {"n": int, "edges": [[u, v], ...]}, "lists": [[int, ...]; n]}
# The loader validates the graph and list invariants; k is recomputed.


def parse_witness_json(text: str) -> Witness:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("top-level value must be an object")
    for field in ("d", "F", "lists"):
        if field not in data:
            raise ParseError(f"missing field '{field}'")
    d = data["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 0:
        raise ParseError("field 'd' must be a non-negative integer")
    f_obj = data["F"]
    if not isinstance(f_obj, dict) or "n" not in f_obj or "edges" not in f_obj:
        raise ParseError("field 'F' must be an object with 'n' and 'edges'")
    n = f_obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("field 'F.n' must be a non-negative integer")
    edges = f_obj["edges"]
    if not isinstance(edges, list):
        raise ParseError("field 'F.edges' must be an array")
    pairs = []
    for idx, e in enumerate(edges):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or any(not isinstance(x, int) or isinstance(x, bool) for x in e)
        ):
            raise ParseError(f"field 'F.edges[{idx}]' must be a pair of integers")
        pairs.append((e[0], e[1]))
    try:
        f_graph = Graph(n, pairs)
    except InvalidParameterError as exc:
        raise ParseError(f"field 'F.edges': {exc}") from None
    lists = data["lists"]
    if not isinstance(lists, list) or len(lists) != n:
        raise ParseError(f"field 'lists' must be an array of length {n}")
    for v, entry in enumerate(lists):
        if not isinstance(entry, list):
            raise ParseError(f"field 'lists[{v}]' must be an array")
        for col in entry:
            if not isinstance(col, int) or isinstance(col, bool) or col < 0:
                raise ParseError(f"field 'lists[{v}]' must hold non-negative integers")
        if len(set(entry)) != len(entry):
            raise ParseError(f"field 'lists[{v}]' contains a duplicate color")
    return Witness(f_graph, ListAssignment(lists), d)


def format_witness_json(w: Witness) -> str:
    return (
        json.dumps(
            {
                "d": w.d,
                "F": {"n": w.F.n, "edges": [list(e) for e in w.F.edges()]},
                "lists": [sorted(entry) for entry in w.lists.lists],
            }
        )
        + "\n"
    )


def read_witness(path: str) -> Witness:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_witness_json(fh.read())


def write_witness(w: Witness, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_witness_json(w))
