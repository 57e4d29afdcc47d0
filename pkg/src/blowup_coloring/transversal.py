"""Independent transversals of vertex partitions.

An independent transversal of a partition (V_1, ..., V_l) of V(H) is an
independent set picking exactly one vertex from each part.  When every part
has size at least twice the maximum degree of H, such a transversal is
guaranteed to exist (Haxell's theorem); the guarantee is nonconstructive,
so the finder below is an exhaustive backtracking search.  It is complete
at desk scale: it either returns a transversal, proves none exists, or
reports an exhausted budget (a distinct outcome from "none").
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InvalidParameterError, ParseError
from .graphs import Graph
from .solvers import Budget, _OutOfBudget, _Ticker

__all__ = [
    "VertexPartition",
    "TransversalResult",
    "haxell_condition",
    "find_independent_transversal",
    "read_partition",
    "write_partition",
    "parse_partition_json",
    "format_partition_json",
    "format_transversal_json",
    "write_transversal",
]


class VertexPartition:
    """An ordered partition of a host graph's vertices into non-empty parts."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[Iterable[int]]):
        norm = []
        seen: set[int] = set()
        for idx, raw in enumerate(parts):
            part = tuple(sorted(set(int(v) for v in raw)))
            if not part:
                raise InvalidParameterError(f"part {idx} is empty")
            overlap = seen.intersection(part)
            if overlap:
                raise InvalidParameterError(
                    f"part {idx} reuses vertex {min(overlap)}"
                )
            seen.update(part)
            norm.append(part)
        self.parts = tuple(norm)

    def validate_for(self, host: Graph) -> None:
        """Check that the parts exactly cover the host's vertex set."""
        covered = set()
        for part in self.parts:
            covered.update(part)
        expected = set(range(host.n))
        if covered != expected:
            missing = sorted(expected - covered)
            extra = sorted(covered - expected)
            raise InvalidParameterError(
                f"partition does not cover the host: missing {missing}, foreign {extra}"
            )

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexPartition):
            return NotImplemented
        return self.parts == other.parts

    def __repr__(self) -> str:
        return f"VertexPartition({[list(p) for p in self.parts]!r})"


@dataclass(frozen=True)
class TransversalResult:
    """Search outcome.  ``transversal`` is one vertex per part (in part
    order) when found; None either means proven nonexistence
    (``timed_out`` False) or an exhausted budget (``timed_out`` True)."""

    transversal: tuple[int, ...] | None
    nodes_explored: int
    timed_out: bool

    @property
    def found(self) -> bool:
        return self.transversal is not None


def haxell_condition(h: Graph, p: VertexPartition) -> bool:
    """True iff every part has size >= 2 * max degree of the host."""
    p.validate_for(h)
    bound = 2 * max((h.degree(v) for v in range(h.n)), default=0)
    return all(len(part) >= bound for part in p.parts)


def find_independent_transversal(
    h: Graph, p: VertexPartition, budget: Budget | None = None
) -> TransversalResult:
    """Exhaustive deterministic search for an independent transversal.

    Parts are processed smallest first (ties by part index) and vertices
    within a part in ascending order; a candidate adjacent to any already
    chosen vertex is pruned.
    """
    p.validate_for(h)
    nparts = len(p.parts)
    order = sorted(range(nparts), key=lambda i: (len(p.parts[i]), i))
    adj = h.adj_masks()
    ticker = _Ticker(budget)
    chosen = [-1] * nparts  # indexed by original part position

    def dfs(depth: int, chosen_mask: int) -> bool:
        if depth == nparts:
            return True
        part_idx = order[depth]
        for v in p.parts[part_idx]:
            ticker.tick()
            if adj[v] & chosen_mask:
                continue
            chosen[part_idx] = v
            if dfs(depth + 1, chosen_mask | (1 << v)):
                return True
            chosen[part_idx] = -1
        return False

    try:
        ok = dfs(0, 0)
    except _OutOfBudget:
        return TransversalResult(None, ticker.nodes, True)
    if not ok:
        return TransversalResult(None, ticker.nodes, False)
    return TransversalResult(tuple(chosen), ticker.nodes, False)


# -- file formats ------------------------------------------------------------
#
# Partition file: {"parts": [[int, ...], ...]}
# Transversal output: a JSON list of vertex indices.


def parse_partition_json(text: str) -> VertexPartition:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or "parts" not in data:
        raise ParseError("expected an object with field 'parts'")
    parts = data["parts"]
    if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
        raise ParseError("field 'parts' must be an array of arrays")
    for i, part in enumerate(parts):
        for v in part:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ParseError(f"field 'parts[{i}]' must hold non-negative integers")
    try:
        return VertexPartition(parts)
    except InvalidParameterError as exc:
        raise ParseError(f"field 'parts': {exc}") from None


def format_partition_json(p: VertexPartition) -> str:
    return json.dumps({"parts": [list(part) for part in p.parts]}) + "\n"


def read_partition(path: str) -> VertexPartition:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_partition_json(fh.read())


def write_partition(p: VertexPartition, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_partition_json(p))


def format_transversal_json(transversal: Sequence[int]) -> str:
    return json.dumps(list(transversal)) + "\n"


def write_transversal(transversal: Sequence[int], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_transversal_json(transversal))
