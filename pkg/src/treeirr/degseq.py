"""Degree sequences, the Prüfer codec, and the special tree builders."""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Sequence

from .tree import Tree

PruferCode = tuple[int, ...]


class NotTreeGraphical(ValueError):
    """A degree multiset no tree realizes; ``reason`` says why."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


@dataclass(frozen=True)
class DegreeSequence:
    """Non-increasing degree multiset of a tree.

    Instances come from :func:`validate_tree_sequence`, so they are always
    tree-graphical: either the one-vertex sequence ``(0,)`` or positive
    values summing to ``2(n-1)``.
    """

    values: tuple[int, ...]

    def __post_init__(self):
        if any(self.values[i] < self.values[i + 1] for i in range(len(self.values) - 1)):
            raise ValueError("values must be sorted non-increasing")

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def tree_graphical(self) -> bool:
        v = self.values
        if len(v) == 1:
            return v == (0,)
        return all(x >= 1 for x in v) and sum(v) == 2 * (len(v) - 1)

    def multiset(self) -> dict[int, int]:
        """Value -> multiplicity, largest value first."""
        out: dict[int, int] = {}
        for x in self.values:
            out[x] = out.get(x, 0) + 1
        return out

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.values) + ")"


def validate_tree_sequence(values: Sequence[int]) -> DegreeSequence:
    """Sort and accept a tree-graphical degree sequence, else reject loudly."""
    vals = tuple(sorted((int(x) for x in values), reverse=True))
    if not vals:
        raise NotTreeGraphical("empty input")
    if len(vals) == 1:
        if vals != (0,):
            raise NotTreeGraphical("a single vertex must have degree 0")
        return DegreeSequence(vals)
    if vals[-1] <= 0:
        raise NotTreeGraphical(f"zero or negative entry: {vals[-1]}")
    total = sum(vals)
    want = 2 * (len(vals) - 1)
    if total != want:
        raise NotTreeGraphical(f"degree sum {total} != 2(n-1) = {want}")
    return DegreeSequence(vals)


def prufer_encode(t: Tree) -> PruferCode:
    """Code of a labeled tree under smallest-leaf-first elimination."""
    n = t.n
    if n < 2:
        raise ValueError("encoding needs at least 2 vertices")
    if n == 2:
        return ()
    deg = [len(a) for a in t.adjacency]
    alive = [True] * n
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    code = []
    for _ in range(n - 2):
        v = heapq.heappop(heap)
        alive[v] = False
        u = next(w for w in t.adjacency[v] if alive[w])
        code.append(u)
        deg[u] -= 1
        if deg[u] == 1:
            heapq.heappush(heap, u)
    return tuple(code)


def prufer_decode(code: Sequence[int], n: int) -> Tree:
    """Rebuild the labeled tree of a code; inverse of :func:`prufer_encode`."""
    if n < 2:
        raise ValueError("decoding needs at least 2 vertices")
    code = tuple(int(c) for c in code)
    if len(code) != n - 2:
        raise ValueError(f"code length {len(code)} != n-2 = {n - 2}")
    for c in code:
        if not (0 <= c < n):
            raise ValueError(f"code entry out of range 0..{n - 1}: {c}")
    deg = [1] * n
    for c in code:
        deg[c] += 1
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    edges = []
    for c in code:
        v = heapq.heappop(heap)
        edges.append((v, c) if v < c else (c, v))
        deg[v] = 0
        deg[c] -= 1
        if deg[c] == 1:
            heapq.heappush(heap, c)
    u = heapq.heappop(heap)
    v = heapq.heappop(heap)
    edges.append((u, v) if u < v else (v, u))
    return Tree(n, edges)


def star(leaf_count: int) -> Tree:
    """Center 0 adjacent to ``leaf_count`` leaves."""
    if leaf_count < 1:
        raise ValueError("a star needs at least one leaf")
    return Tree(leaf_count + 1, [(0, i) for i in range(1, leaf_count + 1)])


def path(order: int) -> Tree:
    """The path on ``order`` vertices with consecutive ids."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return Tree(order, [(i, i + 1) for i in range(order - 1)])


def caterpillar(spine_degrees: Sequence[int]) -> Tree:
    """Caterpillar whose i-th spine vertex ends up with the given degree.

    Spine vertices get ids ``0..k-1`` in order and are joined consecutively;
    vertex i then receives enough pendant leaves to reach degree
    ``spine_degrees[i]``. Interior spine slots therefore need degree >= 2,
    the two ends (or a lone spine vertex) only >= 1.
    """
    spine = [int(s) for s in spine_degrees]
    k = len(spine)
    if k == 0:
        raise ValueError("empty spine")
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, s in enumerate(spine):
        backbone = 0 if k == 1 else (1 if i in (0, k - 1) else 2)
        if s < backbone or s < 1:
            raise ValueError(
                f"infeasible spine degree {s} at slot {i} (needs >= {max(backbone, 1)})"
            )
        for _ in range(s - backbone):
            edges.append((i, nxt))
            nxt += 1
    if nxt == 1:
        return Tree(1, [])
    return Tree(nxt, edges)


def build_special(kind: str, params: dict) -> Tree:
    """Dispatch on ``kind``: star (leaves=), path (order=), caterpillar (spine=)."""
    if kind == "star":
        return star(params["leaves"])
    if kind == "path":
        return path(params["order"])
    if kind == "caterpillar":
        return caterpillar(params["spine"])
    raise ValueError(f"unknown kind {kind!r} (expected star, path or caterpillar)")


def degree_sequence_of(t: Tree) -> DegreeSequence:
    """The validated degree sequence of a tree."""
    if t.n == 1:
        return DegreeSequence((0,))
    return DegreeSequence(tuple(sorted((len(a) for a in t.adjacency), reverse=True)))


def parse_degree_sequence(text: str) -> DegreeSequence:
    """One whitespace-separated line of integers, any order."""
    parts = text.split()
    if not parts:
        raise NotTreeGraphical("empty input")
    try:
        values: Iterable[int] = [int(p) for p in parts]
    except ValueError as exc:
        raise NotTreeGraphical(f"non-integer entry: {exc}") from None
    return validate_tree_sequence(values)
