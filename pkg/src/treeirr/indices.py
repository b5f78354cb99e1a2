"""Exact integer graph invariants of a tree."""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .tree import Tree


@dataclass(frozen=True)
class IndexBundle:
    """The five invariants of one tree.

    irr: sum over edges of |d(u)-d(v)| (Albertson irregularity).
    irr_t: the same absolute difference over all unordered vertex pairs.
    sigma: sum over edges of (d(u)-d(v))^2.
    m1, m2: first and second Zagreb index.
    """

    irr: int
    irr_t: int
    sigma: int
    m1: int
    m2: int


def compute_indices(t: Tree) -> IndexBundle:
    """All five invariants in one pass; a single vertex yields all zeros."""
    irr, irr_t, sigma, m1, m2 = _kernels.index_bundle(t.n, t.flat_edges())
    return IndexBundle(irr=irr, irr_t=irr_t, sigma=sigma, m1=m1, m2=m2)


def total_irregularity_by_sequence(t: Tree) -> int:
    """Total irregularity from the sorted degree sequence.

    Evaluates ``2(n+1)m - 2 * sum(i * d_i)`` with degrees sorted
    non-increasing and positions counted from 1. Agrees with the pairwise
    definition in :func:`compute_indices` on every tree.
    """
    n = t.n
    m = n - 1
    ordered = sorted((len(a) for a in t.adjacency), reverse=True)
    weighted = sum(i * d for i, d in enumerate(ordered, start=1))
    return 2 * (n + 1) * m - 2 * weighted


def path_imbalance(t: Tree, u: int, v: int) -> int:
    """Accumulated |degree difference| along the unique u-v path."""
    n = t.n
    if not (0 <= u < n) or not (0 <= v < n):
        raise ValueError(f"vertex id out of range 0..{n - 1}: {u}, {v}")
    if u == v:
        return 0
    parent = [-1] * n
    parent[u] = u
    queue = [u]
    for x in queue:
        if x == v:
            break
        for y in t.adjacency[x]:
            if parent[y] < 0:
                parent[y] = x
                queue.append(y)
    deg = [len(a) for a in t.adjacency]
    total = 0
    x = v
    while x != u:
        p = parent[x]
        total += abs(deg[x] - deg[p])
        x = p
    return total
