"""Exhaustive tree streams and the leaf-relocation move.

Two independent enumerators of unlabeled trees live here. The primary one
walks canonical level sequences (a recursive-generation scheme); the second
realizes every tree-graphical degree multiset through Prüfer codes and
deduplicates by canonical code. They must agree, and the test suite holds
them to that.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from . import _kernels
from .degseq import DegreeSequence, prufer_decode, validate_tree_sequence
from .tree import Tree, canonical_code

DEFAULT_MAX_ORDER = 16
DEFAULT_CODE_CAP = 10_000_000


class EnumerationGuard(ValueError):
    """A sweep would exceed the configured desk-scale guard rails."""


def _check_order(n: int, max_order: int) -> None:
    if not 1 <= n <= max_order:
        raise EnumerationGuard(f"order {n} outside guard range 1..{max_order}")


def _levels_to_edges(levels: Sequence[int]) -> list[tuple[int, int]]:
    # Parent of vertex i is the nearest earlier vertex one level up.
    edges = []
    stack: list[int] = []
    for i, lv in enumerate(levels):
        while stack and levels[stack[-1]] >= lv:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return edges


def all_trees(n: int, max_order: int = DEFAULT_MAX_ORDER) -> Iterator[Tree]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    Deterministic emission: ascending canonical code.
    """
    _check_order(n, max_order)
    trees = [Tree(n, _levels_to_edges(seq)) for seq in _kernels.level_sequences(n)]
    trees.sort(key=canonical_code)
    yield from trees


def tree_degree_sequences(n: int) -> Iterator[DegreeSequence]:
    """All tree-graphical degree multisets of length ``n``, largest-first order."""
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        yield DegreeSequence((0,))
        return
    if n == 2:
        yield DegreeSequence((1, 1))
        return

    def rec(slots: int, remaining: int, max_part: int, prefix: list[int]):
        if slots == 0:
            if remaining == 0:
                yield DegreeSequence(tuple(prefix))
            return
        hi = min(max_part, remaining - (slots - 1))
        for x in range(hi, 0, -1):
            if x * slots < remaining:
                break
            prefix.append(x)
            yield from rec(slots - 1, remaining - x, x, prefix)
            prefix.pop()

    yield from rec(n, 2 * (n - 1), n - 1, [])


def _multiset_perms(entries: list[list[int]], length: int) -> Iterator[tuple[int, ...]]:
    # entries: mutable [value, count] pairs; emits distinct arrangements.
    if length == 0:
        yield ()
        return
    for entry in entries:
        if entry[1] > 0:
            entry[1] -= 1
            for rest in _multiset_perms(entries, length - 1):
                yield (entry[0],) + rest
            entry[1] += 1


def realization_count(seq: DegreeSequence) -> int:
    """Labeled realizations of the sequence with the identity degree assignment."""
    if seq.n <= 2:
        return 1
    total = factorial(seq.n - 2)
    for d in seq.values:
        total //= factorial(d - 1)
    return total


def trees_with_degree_sequence(
    seq: DegreeSequence | Sequence[int],
    max_order: int = DEFAULT_MAX_ORDER,
    code_cap: int = DEFAULT_CODE_CAP,
) -> Iterator[Tree]:
    """Every isomorphism class realizing the degree multiset, code order.

    Realization walks the distinct Prüfer arrangements in which vertex i
    appears ``d_i - 1`` times, decodes each, and deduplicates canonically.
    The stream size is bounded up front by ``code_cap``.
    """
    if not isinstance(seq, DegreeSequence):
        seq = validate_tree_sequence(seq)
    n = seq.n
    _check_order(n, max_order)
    if n == 1:
        yield Tree(1, [])
        return
    if n == 2:
        yield Tree(2, [(0, 1)])
        return
    count = realization_count(seq)
    if count > code_cap:
        raise EnumerationGuard(
            f"degree sequence {seq} needs {count} realization codes, cap is {code_cap}"
        )
    entries = [[v, d - 1] for v, d in enumerate(seq.values) if d >= 2]
    found: dict[bytes, Tree] = {}
    for code in _multiset_perms(entries, n - 2):
        t = prufer_decode(code, n)
        found.setdefault(canonical_code(t), t)
    for key in sorted(found):
        yield found[key]


def all_trees_by_realization(
    n: int,
    max_order: int = DEFAULT_MAX_ORDER,
    code_cap: int = DEFAULT_CODE_CAP,
) -> Iterator[Tree]:
    """Independent twin of :func:`all_trees` built from degree realizations."""
    _check_order(n, max_order)
    found: dict[bytes, Tree] = {}
    for seq in tree_degree_sequences(n):
        for t in trees_with_degree_sequence(seq, max_order=max_order, code_cap=code_cap):
            found.setdefault(canonical_code(t), t)
    for key in sorted(found):
        yield found[key]


@dataclass(frozen=True)
class RelocationStep:
    """Record of one leaf relocation: who moved where and the degree effect."""

    support: int
    donor: int
    recipient: int
    degrees_before: tuple[int, int, int]
    degrees_after: tuple[int, int, int]


def relocate_leaf(t: Tree, y: int, donor: int, recipient: int) -> tuple[Tree, RelocationStep]:
    """Detach leaf ``donor`` from ``y`` and hang it on ``recipient``.

    ``recipient`` must be another neighbor of ``y``; the move needs
    ``degree(y) >= 3``. The result is again a tree of the same order with
    exactly the degrees of ``y`` and ``recipient`` shifted by one.
    """
    n = t.n
    for v in (y, donor, recipient):
        if not 0 <= v < n:
            raise ValueError(f"vertex id out of range 0..{n - 1}: {v}")
    lam = t.degree(y)
    if lam < 3:
        raise ValueError(f"lambda below 3: degree({y}) = {lam}")
    if donor not in t.adjacency[y] or t.degree(donor) != 1:
        raise ValueError(f"donor {donor} is not a leaf attached to {y}")
    if recipient == donor or recipient not in t.adjacency[y]:
        raise ValueError(f"recipient {recipient} is not another neighbor of {y}")
    dropped = (y, donor) if y < donor else (donor, y)
    added = (recipient, donor) if recipient < donor else (donor, recipient)
    edges = [e for e in t.edges if e != dropped]
    edges.append(added)
    out = Tree(n, edges)
    step = RelocationStep(
        support=y,
        donor=donor,
        recipient=recipient,
        degrees_before=(lam, 1, t.degree(recipient)),
        degrees_after=(out.degree(y), out.degree(donor), out.degree(recipient)),
    )
    assert step.degrees_after == (lam - 1, 1, t.degree(recipient) + 1)
    return out, step
