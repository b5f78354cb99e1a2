"""Edge-list documents: one ``u v`` pair per line, ``#`` comments allowed."""

from __future__ import annotations

from dataclasses import dataclass

from .tree import Tree


class ParseError(ValueError):
    """Malformed edge-list document; ``line`` locates the offense when known."""

    def __init__(self, line: int | None, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class ParsedTree:
    """A validated tree plus the original vertex labels, indexed by dense id."""

    tree: Tree
    labels: tuple[int, ...]


def parse_edge_list(text: str) -> ParsedTree:
    """Parse and validate a document, re-indexing labels densely.

    Labels may be arbitrary integers with gaps; ids are assigned by sorted
    label order. Self-loops, duplicate edges and cycles are rejected with
    the offending line number, disconnected input after the fact.
    """
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"expected two integers, got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex label in {raw.strip()!r}") from None
        pairs.append((lineno, u, v))
    if not pairs:
        raise ParseError(None, "document contains no edges")

    root: dict[int, int] = {}

    def find(x: int) -> int:
        r = x
        while root[r] != r:
            r = root[r]
        while root[x] != r:
            root[x], x = r, root[x]
        return r

    seen: set[tuple[int, int]] = set()
    for lineno, u, v in pairs:
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise ParseError(lineno, f"duplicate edge {key}")
        seen.add(key)
        root.setdefault(u, u)
        root.setdefault(v, v)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise ParseError(lineno, "edge closes a cycle")
        root[ru] = rv

    labels = tuple(sorted(root))
    n = len(labels)
    if len(pairs) != n - 1:
        raise ParseError(
            None, f"disconnected input: {n} vertices but only {len(pairs)} edges"
        )
    index = {lab: i for i, lab in enumerate(labels)}
    tree = Tree(n, [(index[u], index[v]) for _, u, v in pairs])
    return ParsedTree(tree=tree, labels=labels)


def parse_tree(text: str) -> Tree:
    """The tree of a document, labels dropped."""
    return parse_edge_list(text).tree


def format_edge_list(tree: Tree, labels: tuple[int, ...] | None = None) -> str:
    """Emit a document that reparses to the same tree.

    With ``labels`` (as produced by :func:`parse_edge_list`) the original
    vertex names are restored.
    """
    if labels is None:
        labels = tuple(range(tree.n))
    lines = [f"{labels[u]} {labels[v]}" for u, v in tree.edges]
    return "\n".join(lines) + "\n"
