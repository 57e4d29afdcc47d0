"""Colorings, defect and properness checks, list assignments, and color degrees.

Colors are plain non-negative integers.  A coloring is *proper* when no edge
is monochromatic, and *d-defective* when every vertex has at most d
same-colored neighbors (equivalently, each color class induces a subgraph of
maximum degree at most d; proper = 0-defective).  List assignments give each
vertex a finite set of allowed colors; the color degree of color a at vertex
v counts the neighbors whose list contains a.
"""

from __future__ import annotations

import json
from typing import Iterable

from .errors import InvalidParameterError, ParseError
from .graphs import Graph, iter_bits

__all__ = [
    "Coloring",
    "ListAssignment",
    "is_proper",
    "defect",
    "is_d_defective",
    "color_degree",
    "max_color_degree",
    "is_L_coloring",
    "read_coloring",
    "write_coloring",
    "parse_coloring_json",
    "format_coloring_json",
    "read_list_assignment",
    "write_list_assignment",
    "parse_list_assignment_json",
    "format_list_assignment_json",
]


class Coloring:
    """A total assignment of colors to the vertices 0..len-1.

    ``palette_size`` is the number of distinct colors actually used; it is
    recomputed at construction and never trusted from files.
    """

    __slots__ = ("colors", "palette_size")

    def __init__(self, colors: Iterable[int]):
        seq = tuple(int(c) for c in colors)
        for v, c in enumerate(seq):
            if c < 0:
                raise InvalidParameterError(f"negative color {c} at vertex {v}")
        self.colors = seq
        self.palette_size = len(set(seq))

    def __len__(self) -> int:
        return len(self.colors)

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def __iter__(self):
        return iter(self.colors)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Coloring):
            return NotImplemented
        return self.colors == other.colors

    def __hash__(self) -> int:
        return hash(self.colors)

    def __repr__(self) -> str:
        return f"Coloring({list(self.colors)!r})"


class ListAssignment:
    """Per-vertex finite sets of allowed colors.

    The global palette is simply the union of the lists; colors need not
    come from any fixed range.
    """

    __slots__ = ("lists",)

    def __init__(self, lists: Iterable[Iterable[int]]):
        norm = []
        for v, raw in enumerate(lists):
            entries = [int(c) for c in raw]
            for c in entries:
                if c < 0:
                    raise InvalidParameterError(f"negative color {c} in list of vertex {v}")
            norm.append(frozenset(entries))
        self.lists = tuple(norm)

    def __len__(self) -> int:
        return len(self.lists)

    def __getitem__(self, v: int) -> frozenset[int]:
        return self.lists[v]

    def palette(self) -> frozenset[int]:
        """Union of all lists."""
        out: frozenset[int] = frozenset()
        for entry in self.lists:
            out |= entry
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ListAssignment):
            return NotImplemented
        return self.lists == other.lists

    def __repr__(self) -> str:
        return f"ListAssignment({[sorted(entry) for entry in self.lists]!r})"


def _require_total(g: Graph, c: Coloring) -> None:
    if len(c) != g.n:
        raise InvalidParameterError(
            f"coloring covers {len(c)} vertices but the graph has {g.n}"
        )


def _require_assignment(g: Graph, lists: ListAssignment) -> None:
    if len(lists) != g.n:
        raise InvalidParameterError(
            f"list assignment covers {len(lists)} vertices but the graph has {g.n}"
        )


def is_proper(g: Graph, c: Coloring) -> bool:
    """True iff no edge of ``g`` is monochromatic under ``c``."""
    _require_total(g, c)
    cols = c.colors
    for u in range(g.n):
        cu = cols[u]
        for v in iter_bits(g.adj_mask(u) >> (u + 1)):
            if cols[u + 1 + v] == cu:
                return False
    return True


def defect(g: Graph, c: Coloring) -> int:
    """Maximum over vertices of the number of same-colored neighbors."""
    _require_total(g, c)
    cols = c.colors
    class_masks: dict[int, int] = {}
    for v, col in enumerate(cols):
        class_masks[col] = class_masks.get(col, 0) | (1 << v)
    worst = 0
    for v in range(g.n):
        mono = (g.adj_mask(v) & class_masks[cols[v]]).bit_count()
        if mono > worst:
            worst = mono
    return worst


def is_d_defective(g: Graph, c: Coloring, d: int) -> bool:
    """True iff every vertex has at most ``d`` same-colored neighbors."""
    if d < 0:
        raise InvalidParameterError(f"defect bound must be >= 0, got {d}")
    return defect(g, c) <= d


def color_degree(g: Graph, lists: ListAssignment, v: int, alpha: int) -> int:
    """Number of neighbors of ``v`` whose list contains ``alpha``.

    ``alpha`` must belong to v's own list.
    """
    _require_assignment(g, lists)
    if not (0 <= v < g.n):
        raise InvalidParameterError(f"vertex {v} out of range")
    if alpha not in lists[v]:
        raise InvalidParameterError(f"color {alpha} is not in the list of vertex {v}")
    return sum(1 for u in iter_bits(g.adj_mask(v)) if alpha in lists[u])


def max_color_degree(g: Graph, lists: ListAssignment) -> int:
    """Max of color_degree over all vertices and list colors; 0 when edgeless."""
    _require_assignment(g, lists)
    worst = 0
    for v in range(g.n):
        nbrs = list(iter_bits(g.adj_mask(v)))
        for alpha in lists[v]:
            deg = sum(1 for u in nbrs if alpha in lists[u])
            if deg > worst:
                worst = deg
    return worst


def is_L_coloring(g: Graph, lists: ListAssignment, c: Coloring) -> bool:
    """True iff ``c`` is proper and picks each vertex's color from its list."""
    _require_assignment(g, lists)
    _require_total(g, c)
    if any(c[v] not in lists[v] for v in range(g.n)):
        return False
    return is_proper(g, c)


# -- file formats ------------------------------------------------------------
#
# Coloring file:  {"n": int, "colors": [int; n]}
# List file:      {"n": int, "lists": [[int, ...]; n]}
#
# Color ids are stored verbatim (0-based, no conversion) so certificates
# stay bit-exact across write/read.


def _load_json_object(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("top-level value must be an object")
    return data


def _require_count(data: dict) -> int:
    if "n" not in data:
        raise ParseError("missing field 'n'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ParseError("field 'n' must be a non-negative integer")
    return n


def parse_coloring_json(text: str) -> Coloring:
    data = _load_json_object(text)
    n = _require_count(data)
    if "colors" not in data:
        raise ParseError("missing field 'colors'")
    colors = data["colors"]
    if not isinstance(colors, list) or len(colors) != n:
        raise ParseError(f"field 'colors' must be an array of length {n}")
    for v, c in enumerate(colors):
        if not isinstance(c, int) or isinstance(c, bool) or c < 0:
            raise ParseError(f"field 'colors[{v}]' must be a non-negative integer")
    return Coloring(colors)


def format_coloring_json(c: Coloring) -> str:
    return json.dumps({"n": len(c), "colors": list(c.colors)}) + "\n"


def read_coloring(path: str) -> Coloring:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_coloring_json(fh.read())


def write_coloring(c: Coloring, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_coloring_json(c))


def parse_list_assignment_json(text: str) -> ListAssignment:
    data = _load_json_object(text)
    n = _require_count(data)
    if "lists" not in data:
        raise ParseError("missing field 'lists'")
    lists = data["lists"]
    if not isinstance(lists, list) or len(lists) != n:
        raise ParseError(f"field 'lists' must be an array of length {n}")
    for v, entry in enumerate(lists):
        if not isinstance(entry, list):
            raise ParseError(f"field 'lists[{v}]' must be an array")
        for c in entry:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ParseError(f"field 'lists[{v}]' must hold non-negative integers")
        if len(set(entry)) != len(entry):
            raise ParseError(f"field 'lists[{v}]' contains a duplicate color")
    return ListAssignment(lists)


def format_list_assignment_json(lists: ListAssignment) -> str:
    return json.dumps({"n": len(lists), "lists": [sorted(entry) for entry in lists.lists]}) + "\n"


def read_list_assignment(path: str) -> ListAssignment:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_list_assignment_json(fh.read())


def write_list_assignment(lists: ListAssignment, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_list_assignment_json(lists))
