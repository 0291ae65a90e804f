"""Chordal-graph machinery: MCS orders, perfect elimination orderings,
maximal cliques, clique trees and minimal separators.

Everything on the main path here is O(n + m): bucket-based maximum
cardinality search, the first-later-neighbor elimination test, and the
clique tree grown along the MCS visit order.  These back the linear-time
end-vertex deciders, so no step may fall back to anything superlinear.
"""

from __future__ import annotations

from collections import deque

from .errors import DisconnectedGraphError, NotChordalError
from .graph import Graph, is_connected


def mcs_order(g: Graph, start: int = 0) -> list[int]:
    """A maximum cardinality search order in O(n + m).

    Buckets of unvisited vertices keyed by visited-neighbor count, with
    lazy deletion; ties broken by most recent bucket insertion, which is
    a valid (if arbitrary) MCS tie-break.  Requires a connected graph.
    """
    n = g.n
    if n == 0:
        return []
    if not 0 <= start < n:
        raise ValueError(f"start vertex {start} out of range")
    if not is_connected(g):
        raise DisconnectedGraphError("MCS requires a connected graph")
    adj = g.adj
    count = [0] * n
    visited = bytearray(n)
    # A vertex's count never exceeds its degree, so the bucket table only
    # needs max-degree-plus-one slots, not n.
    max_degree = max((len(nbrs) for nbrs in adj), default=0)
    buckets: list[list[int]] = [[] for _ in range(max_degree + 2)]
    order = [start]
    visited[start] = 1
    for w in adj[start]:
        count[w] = 1
        buckets[1].append(w)
    maxc = 1
    for _ in range(n - 1):
        v = -1
        while v < 0:
            while maxc > 1 and not buckets[maxc]:
                maxc -= 1
            bucket = buckets[maxc]
            if not bucket:
                # Unreachable on connected input (guarded above).
                raise DisconnectedGraphError("MCS ran out of labeled vertices")
            cand = bucket.pop()
            if not visited[cand] and count[cand] == maxc:
                v = cand
        visited[v] = 1
        order.append(v)
        for w in adj[v]:
            if not visited[w]:
                c = count[w] + 1
                count[w] = c
                buckets[c].append(w)
                if c > maxc:
                    maxc = c
    return order


def _position_map(order, n: int) -> list[int]:
    """Inverse of a permutation, validating it is one (linear)."""
    if len(order) != n:
        raise ValueError("order is not a permutation of the vertex set")
    pos = [-1] * n
    for i, v in enumerate(order):
        if not 0 <= v < n or pos[v] >= 0:
            raise ValueError("order is not a permutation of the vertex set")
        pos[v] = i
    return pos


def peo_check(g: Graph, order) -> bool:
    """True iff `order` is a perfect elimination ordering of g.

    Uses the first-later-neighbor test: a vertex only has to be checked
    against its earliest later neighbor u, which must absorb the rest of
    the later neighborhood.  O(n + m).
    """
    return peo_violation(g, order) is None


def peo_violation(g: Graph, order) -> tuple[int, int, int] | None:
    """None if `order` is a PEO; otherwise a witness triple (v, u, x).

    The witness satisfies: u and x come after v in the order, both are
    adjacent to v, u is v's earliest later neighbor, and ux is not an
    edge (so {v} + later neighbors is not a clique).
    """
    n = g.n
    pos = _position_map(order, n)
    # to_check[u] accumulates (v, x) pairs requiring x to be a later neighbor of u.
    to_check: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for v in order:
        pv = pos[v]
        later = [w for w in g.adj[v] if pos[w] > pv]
        if len(later) <= 1:
            continue
        u = min(later, key=pos.__getitem__)
        bucket = to_check[u]
        for x in later:
            if x != u:
                bucket.append((v, x))
    for u in range(n):
        if not to_check[u]:
            continue
        adj_u = g.adj[u]
        for v, x in to_check[u]:
            if x not in adj_u:
                return (v, u, x)
    return None


def clique_tree(g: Graph, order: list[int] | None = None) -> tuple[list[frozenset], list[tuple[int, int, frozenset]]]:
    """Maximal cliques and clique-tree edges of a connected chordal graph.

    Walks an MCS visit order: a new maximal clique starts whenever the
    visited-neighbor count fails to grow, and the new clique hangs off
    the clique of the most recently visited such neighbor.  Tree edges
    carry their separator (the visited neighborhood of the clique's
    first vertex).  O(n + m); raises NotChordalError on non-chordal
    input, detected by the elimination test on the reversed order.
    """
    n = g.n
    if n == 0:
        return [], []
    if order is None:
        order = mcs_order(g)
    elif not is_connected(g):
        raise DisconnectedGraphError("clique_tree requires a connected graph")
    if peo_violation(g, list(reversed(order))) is not None:
        raise NotChordalError("graph is not chordal (no perfect elimination ordering)")
    visit_index = _position_map(order, n)
    cliques: list[list[int]] = [[order[0]]]
    clique_of = [0] * n
    edges: list[tuple[int, int, frozenset]] = []
    prev_card = 0
    for j in range(1, n):
        v = order[j]
        earlier = [w for w in g.adj[v] if visit_index[w] < j]
        card = len(earlier)
        if card <= prev_card:
            attach = max(earlier, key=visit_index.__getitem__)
            edges.append((len(cliques), clique_of[attach], frozenset(earlier)))
            earlier.append(v)
            cliques.append(earlier)
        else:
            cliques[-1].append(v)
        clique_of[v] = len(cliques) - 1
        prev_card = card
    return [frozenset(c) for c in cliques], edges


def maximal_cliques_chordal(g: Graph) -> list[frozenset]:
    """Maximal cliques of a connected chordal graph (at most n of them)."""
    cliques, _ = clique_tree(g)
    return cliques


def minimal_separators_chordal(g: Graph) -> list[frozenset]:
    """All minimal separators of a connected chordal graph, deduplicated.

    They are exactly the intersections of adjacent maximal cliques in a
    clique tree, which the MCS-grown tree provides directly as its edge
    separators.  Sorted by (size, members) for deterministic output.
    """
    _, edges = clique_tree(g)
    seps = {sep for _, _, sep in edges if sep}
    return sorted(seps, key=lambda s: (len(s), sorted(s)))


def recognize_chordal(g: Graph) -> list[int] | None:
    """A perfect elimination ordering, or None when g is not chordal.

    The candidate PEO is the reversed MCS order (chordal iff it passes
    the elimination test).  Use `chordal_hole` for a refusal certificate.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("chordality recognition needs a connected graph")
    if g.n == 0:
        return []
    order = list(reversed(mcs_order(g)))
    if peo_violation(g, order) is None:
        return order
    return None


def chordal_hole(g: Graph) -> list[int] | None:
    """A chordless cycle on >= 4 vertices certifying non-chordality.

    Routes a cycle through the elimination-test witness when possible
    (shortest u-x path dodging the rest of N[v]); falls back to the
    generic induced-path search.  Returns None on chordal input.
    """
    if g.n == 0:
        return None
    order = list(reversed(mcs_order(g)))
    witness = peo_violation(g, order)
    if witness is None:
        return None
    v, u, x = witness
    blocked = (g.adj[v] | {v}) - {u, x}
    path = _shortest_path_avoiding(g, u, x, blocked)
    if path is not None and len(path) >= 3:
        cycle = [v] + path
        if is_chordless_cycle(g, cycle):
            return cycle
    return find_hole(g, min_len=4)


def find_hole(g: Graph, min_len: int = 4) -> list[int] | None:
    """Some chordless cycle with at least `min_len` vertices, or None.

    Desk-scale induced-path extension: grow induced paths from each
    anchor vertex (kept minimal in the cycle, which canonicalizes the
    search) and close them when the tip sees the anchor again.
    """
    adj = g.adj

    def extend(path: list[int], in_path: set[int]) -> list[int] | None:
        last = path[-1]
        anchor = path[0]
        interior = in_path - {anchor, last}
        for w in adj[last]:
            if w in in_path or w < anchor:
                continue
            if any(x in adj[w] for x in interior):
                continue
            if anchor in adj[w]:
                if len(path) + 1 >= min_len:
                    return path + [w]
                continue
            path.append(w)
            in_path.add(w)
            got = extend(path, in_path)
            if got is not None:
                return got
            path.pop()
            in_path.remove(w)
        return None

    for a in range(g.n):
        for b in adj[a]:
            if b < a:
                continue
            got = extend([a, b], {a, b})
            if got is not None:
                return got
    return None


def is_chordless_cycle(g: Graph, cycle: list[int]) -> bool:
    """Check a claimed hole: >= 4 distinct vertices, consecutive pairs
    adjacent (cyclically), all other pairs non-adjacent."""
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for i in range(k):
        for j in range(i + 1, k):
            adjacent_on_cycle = j - i == 1 or (i == 0 and j == k - 1)
            if g.has_edge(cycle[i], cycle[j]) != adjacent_on_cycle:
                return False
    return True


def _shortest_path_avoiding(g: Graph, s: int, t: int, blocked) -> list[int] | None:
    prev = {s: -1}
    queue = deque([s])
    while queue:
        a = queue.popleft()
        if a == t:
            path = [t]
            while prev[path[-1]] != -1:
                path.append(prev[path[-1]])
            path.reverse()
            return path
        for b in g.adj[a]:
            if b not in prev and (b == t or b not in blocked):
                prev[b] = a
                queue.append(b)
    return None
