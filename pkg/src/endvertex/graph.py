"""Simple undirected graphs with adjacency-set representation.

Vertices are dense 0-based integers.  Graphs are immutable after
construction and every operation here is a pure function, so shared
read-only graphs are safe to use from concurrent callers.
"""

from __future__ import annotations

from collections import deque
from typing import Collection, Iterable, Iterator, Sequence

from .errors import DisconnectedGraphError

Vertex = int
VertexSet = frozenset


class Graph:
    """Finite, undirected, simple graph on vertices 0..n-1.

    Invariants enforced at construction: adjacency is symmetric, there
    are no self-loops, and every neighbor id is < n.  Connectivity is a
    checkable predicate (`is_connected`), not an invariant: search entry
    points demand it, construction does not.
    """

    __slots__ = ("adj", "_masks")

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        adj = tuple(frozenset(nbrs) for nbrs in adjacency)
        n = len(adj)
        for v, nbrs in enumerate(adj):
            for w in nbrs:
                if not isinstance(w, int) or not 0 <= w < n:
                    raise ValueError(f"neighbor {w!r} of vertex {v} out of range 0..{n - 1}")
                if w == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if v not in adj[w]:
                    raise ValueError(f"asymmetric adjacency: {v} -> {w} without {w} -> {v}")
        self.adj = adj
        self._masks: tuple[int, ...] | None = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph on n vertices from an edge list (duplicates collapse)."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        g = cls.__new__(cls)
        g.adj = tuple(frozenset(s) for s in adj)
        g._masks = None
        return g

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def neighbors(self, v: int) -> frozenset:
        return self.adj[v]

    def closed_neighborhood(self, v: int) -> frozenset:
        return self.adj[v] | {v}

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor sets as integer bitmasks (computed lazily)."""
        if self._masks is None:
            masks = []
            for nbrs in self.adj:
                m = 0
                for w in nbrs:
                    m |= 1 << w
                masks.append(m)
            self._masks = tuple(masks)
        return self._masks

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def is_simplicial(g: Graph, t: int) -> bool:
    """True iff the neighborhood of t induces a clique.

    Mark-and-count: mark N(t), then for each neighbor v count how many of
    v's neighbors are marked.  t is simplicial iff every count equals
    deg(t)-1 (open-neighborhood convention: t itself is never counted).
    Runs in time linear in the sum of degrees over N(t).
    """
    if not 0 <= t < g.n:
        raise ValueError(f"vertex {t} out of range")
    marked = g.adj[t]
    want = len(marked) - 1
    for v in marked:
        cnt = 0
        for w in g.adj[v]:
            if w in marked:
                cnt += 1
        if cnt != want:
            return False
    return True


def is_connected(g: Graph) -> bool:
    """True iff the graph has exactly one connected component (n<=1: True)."""
    n = g.n
    if n <= 1:
        return True
    seen = bytearray(n)
    seen[0] = 1
    queue = deque([0])
    count = 1
    adj = g.adj
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = 1
                count += 1
                queue.append(w)
    return count == n


def connected_components(g: Graph) -> list[list[int]]:
    """Connected components as vertex lists (each sorted ascending)."""
    n = g.n
    seen = bytearray(n)
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        comps.append(comp)
    return comps


def cut_vertices(g: Graph) -> frozenset:
    """Articulation vertices of a connected graph, in linear time.

    Iterative lowpoint computation (recursion-free so large instances do
    not hit the interpreter stack limit).
    """
    if not is_connected(g):
        raise DisconnectedGraphError("cut_vertices requires a connected graph")
    n = g.n
    if n <= 2:
        return frozenset()
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = set()
    timer = 0
    adj = g.adj
    # One DFS from vertex 0 suffices on a connected graph.
    root = 0
    stack: list[tuple[int, Iterator[int]]] = [(root, iter(adj[root]))]
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    while stack:
        v, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] < 0:
                parent[w] = v
                disc[w] = low[w] = timer
                timer += 1
                if v == root:
                    root_children += 1
                stack.append((w, iter(adj[w])))
                advanced = True
                break
            elif w != parent[v]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if not advanced:
            stack.pop()
            p = parent[v]
            if p >= 0:
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != root and low[v] >= disc[p]:
                    cuts.add(p)
    if root_children > 1:
        cuts.add(root)
    return frozenset(cuts)


def induced_subgraph(g: Graph, vertices: Collection[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by `vertices`, relabeled 0..|S|-1.

    Returns (subgraph, remap) where remap[new_id] is the original id;
    new ids follow ascending original-id order.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {old: new for new, old in enumerate(keep)}
    adj = [frozenset(index[w] for w in g.adj[old] if w in index) for old in keep]
    sub = Graph.__new__(Graph)
    sub.adj = tuple(adj)
    sub._masks = None
    return sub, tuple(keep)


def complement(g: Graph) -> Graph:
    """Edge-complement: xy is an edge iff it is not an edge of g (no loops)."""
    n = g.n
    full = frozenset(range(n))
    adj = [full - g.adj[v] - {v} for v in range(n)]
    comp = Graph.__new__(Graph)
    comp.adj = tuple(adj)
    comp._masks = None
    return comp


def is_inclusion_chain(sets: Sequence[Collection[int]]) -> bool:
    """True iff the given sets are totally ordered by inclusion.

    Counting sort by cardinality (descending), then a single stamped-array
    sweep verifying each set against its predecessor; time linear in the
    total size of the input family.
    """
    k = len(sets)
    if k <= 1:
        return True
    maxlen = 0
    for s in sets:
        if len(s) > maxlen:
            maxlen = len(s)
    buckets: list[list[Collection[int]]] = [[] for _ in range(maxlen + 1)]
    for s in sets:
        buckets[len(s)].append(s)
    stamp: dict[int, int] = {}
    i = 0
    for size in range(maxlen, -1, -1):
        for s in buckets[size]:
            i += 1
            if i == 1:
                for x in s:
                    stamp[x] = 1
                continue
            for x in s:
                if stamp.get(x) != i - 1:
                    return False
            for x in s:
                stamp[x] = i
    return True
