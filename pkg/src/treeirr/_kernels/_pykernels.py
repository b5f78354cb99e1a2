"""Pure-Python kernels. Reference semantics for the compiled twin.

Trees are passed around as flat edge lists ``[u0, v0, u1, v1, ...]`` over
dense vertex ids ``0..n-1``; nothing here validates, callers do.
"""

BACKEND = "python"


def level_sequences(n):
    """Canonical level sequences of all free trees on ``n`` vertices.

    A level sequence lists, vertex by vertex in preorder, the depth in a
    rooted layout. Iteration uses the Wright-Richmond-Odlyzko-McKay
    successor scheme over Beyer-Hedetniemi rooted sequences, so every
    isomorphism class of free trees appears exactly once.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return [(0,)]
    if n == 2:
        return [(0, 1)]
    out = []
    layout = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _skip_to_free(layout)
        if layout is not None:
            out.append(tuple(layout))
            layout = _successor(layout)
    return out


def _successor(layout, p=None):
    # Beyer-Hedetniemi successor of a rooted level sequence; None past the end.
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    nxt = list(layout)
    for i in range(p, len(nxt)):
        nxt[i] = nxt[i - p + q]
    return nxt


def _split_first_subtree(layout):
    # Portion rooted at the root's first child vs. the remainder of the tree.
    m = len(layout)
    for i in range(2, len(layout)):
        if layout[i] == 1:
            m = i
            break
    left = [layout[i] - 1 for i in range(1, m)]
    rest = [0] + layout[m:]
    return left, rest


def _skip_to_free(layout):
    # A rooted sequence encodes a free tree iff the first root subtree is
    # no higher than the rest, with size then lexicographic tie-breaks.
    # Invalid layouts jump straight to the next candidate.
    left, rest = _split_first_subtree(layout)
    lh = max(left)
    rh = max(rest)
    good = rh > lh or (
        rh == lh
        and (len(left) < len(rest) or (len(left) == len(rest) and left <= rest))
    )
    if good:
        return layout
    p = len(left)
    nxt = _successor(layout, p)
    if layout[p] > 2:
        new_left, _ = _split_first_subtree(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[len(nxt) - len(tail):] = tail
    return nxt


def canon_code(n, flat_edges):
    """Relabeling-invariant code of a tree: equal codes iff isomorphic.

    Rooted at the tree center; for bicentral trees the smaller of the two
    rooted codes wins. The code is the usual nested-parentheses encoding
    with children ordered by byte value.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if n == 1:
        return b"()"
    adj = _adjacency(n, flat_edges)
    best = None
    for root in _centers(n, adj):
        code = _rooted_code(n, adj, root)
        if best is None or code < best:
            best = code
    return best


def _adjacency(n, flat_edges):
    adj = [[] for _ in range(n)]
    for k in range(0, 2 * (n - 1), 2):
        u = flat_edges[k]
        v = flat_edges[k + 1]
        adj[u].append(v)
        adj[v].append(u)
    return adj


def _centers(n, adj):
    if n <= 2:
        return list(range(n))
    deg = [len(a) for a in adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return layer


def _rooted_code(n, adj, root):
    parent = [-1] * n
    parent[root] = root
    order = [root]
    for v in order:
        for w in adj[v]:
            if parent[w] < 0:
                parent[w] = v
                order.append(w)
    codes = [b""] * n
    for v in reversed(order):
        kids = sorted(codes[w] for w in adj[v] if parent[w] == v and w != v)
        codes[v] = b"(" + b"".join(kids) + b")"
    return codes[root]


def index_bundle(n, flat_edges):
    """(irr, irr_T, sigma, M1, M2) of the tree, exact integers.

    irr sums |d(u)-d(v)| over edges, irr_T over all unordered vertex pairs,
    sigma the squared edge differences, M1 the squared degrees, M2 the
    degree products over edges.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    m = n - 1
    deg = [0] * n
    for k in range(0, 2 * m, 2):
        deg[flat_edges[k]] += 1
        deg[flat_edges[k + 1]] += 1
    irr = 0
    sigma = 0
    m2 = 0
    for k in range(0, 2 * m, 2):
        du = deg[flat_edges[k]]
        dv = deg[flat_edges[k + 1]]
        d = du - dv if du >= dv else dv - du
        irr += d
        sigma += d * d
        m2 += du * dv
    m1 = 0
    irr_t = 0
    for i in range(n):
        di = deg[i]
        m1 += di * di
        for j in range(i + 1, n):
            dj = deg[j]
            irr_t += di - dj if di >= dj else dj - di
    return irr, irr_t, sigma, m1, m2
