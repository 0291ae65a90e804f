"""End-vertex deciders for chordal graph classes, with linear-time
contracts, plus a dispatcher that routes (graph class, search kind) to
the strongest applicable characterization.

The deciders trust their class precondition by default so the linear
bound holds; pass verify_class=True (desk scale) or go through
`dispatch_endvertex`, which recognizes classes first.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .chordal import clique_tree, recognize_chordal
from .errors import ClassMismatchError, DisconnectedGraphError, GuardExceededError
from .graph import Graph, cut_vertices, induced_subgraph, is_connected, is_inclusion_chain, is_simplicial
from .oracle import SET_STATE_KINDS, is_endvertex_exhaustive
from .recognize import (
    CliqueOrder,
    is_claw_net_free,
    is_split,
    recognize_interval,
    recognize_split,
    recognize_unit_interval,
    validate_clique_order,
)
from .search import SearchKind


class Verdict(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# MNS on chordal graphs


def decide_mns_chordal(g: Graph, t: int) -> bool:
    """t is an MNS end-vertex of a connected chordal graph iff t is
    simplicial and the minimal separators inside N(t) form an inclusion
    chain.  O(n + m)."""
    ok, _ = _mns_chordal_explain(g, t)
    return ok


def _mns_chordal_explain(g: Graph, t: int, name_of=str) -> tuple[bool, str | None]:
    if not 0 <= t < g.n:
        raise ValueError(f"vertex {t} out of range")
    # Straight to the clique-tree edge separators: the sorted public
    # wrapper is unnecessary on this hot path.
    _, tree_edges = clique_tree(g)  # raises on disconnected / non-chordal
    if not is_simplicial(g, t):
        return False, f"vertex {name_of(t)} is not simplicial"
    nt = g.adj[t]
    inside = list({sep for _, _, sep in tree_edges if sep and sep <= nt})
    if is_inclusion_chain(inside):
        return True, None
    pair = _incomparable_pair(inside)
    return False, (f"minimal separators {_fmt(pair[0], name_of)} and {_fmt(pair[1], name_of)} "
                   f"inside N({name_of(t)}) are inclusion-incomparable")


# ---------------------------------------------------------------------------
# MCS on split graphs


def decide_mcs_split(g: Graph, t: int) -> bool:
    """t is an MCS end-vertex of a connected split graph iff t is
    simplicial and the neighborhoods of all strictly lower-degree
    vertices form an inclusion chain.  Counting sort by degree plus a
    stamped marking array keep this O(n + m)."""
    ok, _ = _mcs_split_explain(g, t)
    return ok


def _mcs_split_explain(g: Graph, t: int, name_of=str) -> tuple[bool, str | None]:
    n = g.n
    if not 0 <= t < n:
        raise ValueError(f"vertex {t} out of range")
    if not is_connected(g):
        raise DisconnectedGraphError("split decider requires a connected graph")
    if not is_split(g):
        raise ClassMismatchError("graph is not split")
    if not is_simplicial(g, t):
        return False, f"vertex {name_of(t)} is not simplicial"
    deg_t = len(g.adj[t])
    buckets: list[list[int]] = [[] for _ in range(deg_t)]
    for v in range(n):
        d = len(g.adj[v])
        if d < deg_t:
            buckets[d].append(v)
    stamp = [0] * n
    i = 0
    prev = -1
    for d in range(deg_t - 1, -1, -1):
        for v in buckets[d]:
            i += 1
            if i == 1:
                for w in g.adj[v]:
                    stamp[w] = 1
            else:
                for w in g.adj[v]:
                    if stamp[w] != i - 1:
                        return False, (f"neighborhoods of vertices {name_of(prev)} and "
                                       f"{name_of(v)} are inclusion-incomparable")
                for w in g.adj[v]:
                    stamp[w] = i
            prev = v
    return True, None


# ---------------------------------------------------------------------------
# Unit interval graphs (MNS, MCS and LDFS simultaneously)


def decide_unit_interval(g: Graph, t: int, verify_class: bool = False) -> bool:
    """End-vertex status of t on a connected unit interval graph, valid
    simultaneously for MNS, MCS and LDFS: t is simplicial and G - N[t]
    is connected (or empty).  O(n + m) with verification off."""
    ok, _ = _unit_interval_explain(g, t, verify_class)
    return ok


def _unit_interval_explain(g: Graph, t: int, verify_class: bool = False,
                           name_of=str) -> tuple[bool, str | None]:
    if not 0 <= t < g.n:
        raise ValueError(f"vertex {t} out of range")
    if not is_connected(g):
        raise DisconnectedGraphError("unit interval decider requires a connected graph")
    if verify_class and recognize_unit_interval(g) is None:
        raise ClassMismatchError("graph is not unit interval")
    if not is_simplicial(g, t):
        return False, f"vertex {name_of(t)} is not simplicial"
    if _connected_outside_closed_neighborhood(g, t):
        return True, None
    return False, f"G - N[{name_of(t)}] is disconnected"


def _connected_outside_closed_neighborhood(g: Graph, t: int) -> bool:
    banned = g.adj[t] | {t}
    n = g.n
    rest = n - len(banned)
    if rest == 0:
        return True  # empty remainder counts as connected
    seed = next(v for v in range(n) if v not in banned)
    seen = bytearray(n)
    seen[seed] = 1
    queue = deque([seed])
    reached = 1
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if not seen[w] and w not in banned:
                seen[w] = 1
                reached += 1
                queue.append(w)
    return reached == rest


# ---------------------------------------------------------------------------
# DFS deciders


def decide_dfs_claw_net_free(g: Graph, t: int, verify_class: bool = False) -> bool:
    """On a connected (claw, net)-free graph, t is a DFS end-vertex iff
    t is not a cut vertex.  O(n + m) with verification off."""
    if not 0 <= t < g.n:
        raise ValueError(f"vertex {t} out of range")
    if verify_class and not is_claw_net_free(g):
        raise ClassMismatchError("graph contains an induced claw or net")
    return t not in cut_vertices(g)


def decide_dfs_interval(g: Graph, t: int, subset_guard: int = 20) -> bool:
    """On a connected interval graph, t is a DFS end-vertex iff the
    subgraph induced by N(t), taken as one graph, has a hamiltonian
    path."""
    if not 0 <= t < g.n:
        raise ValueError(f"vertex {t} out of range")
    if not is_connected(g):
        raise DisconnectedGraphError("interval DFS decider requires a connected graph")
    sub, _ = induced_subgraph(g, g.adj[t])
    return hamiltonian_path(sub, guard=subset_guard) is not None


def hamiltonian_path(g: Graph, guard: int = 20) -> list[int] | None:
    """A hamiltonian path, or None.  Subset dynamic program, O(2^n n^2);
    the guard refuses larger instances explicitly.  The emitted path
    re-validates (consecutive adjacency, all vertices once)."""
    n = g.n
    if n > guard:
        raise GuardExceededError("hamiltonian path dynamic program", n, guard)
    if n == 0:
        return []
    if n == 1:
        return [0]
    masks = g.adjacency_masks()
    full = (1 << n) - 1
    # reach[mask] = bitmask of vertices at which some hamiltonian path of
    # G[mask] can end.
    reach = [0] * (full + 1)
    for v in range(n):
        reach[1 << v] = 1 << v
    for mask in range(1, full + 1):
        ends = reach[mask]
        if not ends:
            continue
        rest = ends
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            ext = masks[v] & ~mask
            while ext:
                wlow = ext & -ext
                ext ^= wlow
                reach[mask | wlow] |= wlow
    if not reach[full]:
        return None
    # Reconstruct backwards from any feasible endpoint.
    path = []
    mask = full
    v = (reach[full] & -reach[full]).bit_length() - 1
    while True:
        path.append(v)
        prev_mask = mask ^ (1 << v)
        if not prev_mask:
            break
        cand = reach[prev_mask] & masks[v]
        if not cand:
            raise AssertionError("hamiltonian path reconstruction failed")
        mask = prev_mask
        v = (cand & -cand).bit_length() - 1
    path.reverse()
    return path


# ---------------------------------------------------------------------------
# MCS on interval graphs: one-sided sufficient condition


def mcs_interval_sufficient(g: Graph, order: CliqueOrder, t: int) -> Verdict:
    """One-sided test for MCS end-vertex status on an interval graph.

    YES when t is simplicial and, with C_i the unique clique holding t,
    either i is an end of the order, or both
        C_{i-1} & C_i  subset of  C_i & C_{i+1}
        |C_i & C_{i+1}| <= |C_j & C_{j+1}| for all j > i
    hold in the given order or in its reverse.  UNKNOWN is not a
    negative answer."""
    if not 0 <= t < g.n:
        raise ValueError(f"vertex {t} out of range")
    if not validate_clique_order(g, order):
        raise ValueError("invalid clique order for this graph")
    if not is_simplicial(g, t):
        return Verdict.UNKNOWN
    if _separator_growth_conditions(order.cliques, t) or _separator_growth_conditions(order.reversed().cliques, t):
        return Verdict.YES
    return Verdict.UNKNOWN


def _separator_growth_conditions(cliques: tuple[frozenset, ...], t: int) -> bool:
    holding = [i for i, c in enumerate(cliques) if t in c]
    if len(holding) != 1:
        return False  # non-simplicial t sits in several cliques
    i = holding[0]
    k = len(cliques)
    if i == 0 or i == k - 1:
        return True
    if not (cliques[i - 1] & cliques[i]) <= (cliques[i] & cliques[i + 1]):
        return False
    bar = len(cliques[i] & cliques[i + 1])
    return all(len(cliques[j] & cliques[j + 1]) >= bar for j in range(i + 1, k - 1))


# ---------------------------------------------------------------------------
# Dispatch


@dataclass(frozen=True)
class DispatchResult:
    verdict: Verdict
    method: str
    detail: str | None = None
    witness: tuple[int, ...] | None = None
    classes: tuple[str, ...] = ()


_HINTS = ("auto", "split", "chordal", "interval", "unit-interval")


def dispatch_endvertex(g: Graph, t: int, kind: SearchKind, class_hint: str | None = None,
                       oracle_guard: int = 18, name_of=str) -> DispatchResult:
    """Route an end-vertex query to the strongest applicable decider.

    Recognizers run first (or validate the supplied hint; a hint whose
    certificate fails is a ClassMismatchError).  Preference order is
    unit-interval > split > chordal characterizations, then the
    exhaustive oracle under its guard, then UNKNOWN with the reason.
    """
    if not 0 <= t < g.n:
        raise ValueError(f"vertex {t} out of range")
    if not is_connected(g):
        raise DisconnectedGraphError("end-vertex dispatch requires a connected graph")
    hint = class_hint or "auto"
    if hint not in _HINTS:
        raise ValueError(f"unknown class hint {hint!r} (expected one of {_HINTS})")

    classes = _detect_classes(g, hint)
    tags = tuple(sorted(classes))

    def result(verdict: Verdict, method: str, detail: str | None = None,
               witness: list[int] | None = None) -> DispatchResult:
        return DispatchResult(verdict, method, detail,
                              tuple(witness) if witness is not None else None, tags)

    if kind in (SearchKind.MNS, SearchKind.MCS, SearchKind.LDFS) and "unit-interval" in classes:
        ok, why = _unit_interval_explain(g, t, name_of=name_of)
        return result(Verdict.YES if ok else Verdict.NO, "unit-interval characterization", why)
    if kind is SearchKind.MCS and "split" in classes:
        ok, why = _mcs_split_explain(g, t, name_of=name_of)
        return result(Verdict.YES if ok else Verdict.NO, "split MCS characterization", why)
    if kind is SearchKind.MNS and "chordal" in classes:
        ok, why = _mns_chordal_explain(g, t, name_of=name_of)
        return result(Verdict.YES if ok else Verdict.NO, "chordal MNS characterization", why)
    if kind is SearchKind.DFS and "claw-net-free" in classes:
        ok = decide_dfs_claw_net_free(g, t)
        return result(Verdict.YES if ok else Verdict.NO, "cut-vertex characterization",
                      None if ok else f"vertex {name_of(t)} is a cut vertex")
    if kind is SearchKind.DFS and "interval" in classes:
        ok = decide_dfs_interval(g, t)
        return result(Verdict.YES if ok else Verdict.NO, "interval DFS characterization",
                      None if ok else f"G[N({name_of(t)})] has no hamiltonian path")
    if kind is SearchKind.MCS and "interval" in classes:
        order = recognize_interval(g)
        if order is not None and mcs_interval_sufficient(g, order, t) is Verdict.YES:
            return result(Verdict.YES, "interval MCS sufficient condition")
        fallback = _oracle_fallback(g, t, kind, oracle_guard)
        if fallback is not None:
            ok, witness = fallback
            return result(Verdict.YES if ok else Verdict.NO, "exhaustive oracle",
                          "MCS on general interval graphs has no full characterization in scope",
                          witness)
        return result(Verdict.UNKNOWN, "none",
                      "no polynomial characterization in scope (MCS on interval graphs is open)")

    fallback = _oracle_fallback(g, t, kind, oracle_guard)
    if fallback is not None:
        ok, witness = fallback
        return result(Verdict.YES if ok else Verdict.NO, "exhaustive oracle", None, witness)
    return result(Verdict.UNKNOWN, "none", "no polynomial characterization in scope")


def _oracle_fallback(g: Graph, t: int, kind: SearchKind, oracle_guard: int):
    guard = oracle_guard if kind in SET_STATE_KINDS else min(oracle_guard, 12)
    try:
        ok, witness = is_endvertex_exhaustive(g, kind, t, guard=guard)
    except GuardExceededError:
        return None
    return ok, witness


def _detect_classes(g: Graph, hint: str) -> set[str]:
    if hint != "auto":
        if hint == "split":
            if recognize_split(g) is None:
                raise ClassMismatchError("class hint 'split' failed certificate validation")
            return {"split", "chordal"}
        if hint == "chordal":
            if recognize_chordal(g) is None:
                raise ClassMismatchError("class hint 'chordal' failed certificate validation")
            return {"chordal"}
        if hint == "interval":
            if recognize_interval(g) is None:
                raise ClassMismatchError("class hint 'interval' failed certificate validation")
            return {"interval", "chordal"}
        if recognize_unit_interval(g) is None:
            raise ClassMismatchError("class hint 'unit-interval' failed certificate validation")
        return {"unit-interval", "interval", "chordal", "claw-net-free"}
    classes: set[str] = set()
    if recognize_chordal(g) is not None:
        classes.add("chordal")
        if is_split(g):
            classes.add("split")
        if recognize_interval(g) is not None:
            classes.add("interval")
            if recognize_unit_interval(g) is not None:
                classes.add("unit-interval")
    if is_claw_net_free(g):
        classes.add("claw-net-free")
    return classes


def _incomparable_pair(sets) -> tuple[frozenset, frozenset]:
    ordered = sorted(sets, key=len)
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            a, b = ordered[i], ordered[j]
            if not (a <= b or b <= a):
                return a, b
    raise AssertionError("no incomparable pair in a non-chain family")


def _fmt(s: frozenset, name_of=str) -> str:
    return "{" + ",".join(name_of(v) for v in sorted(s)) + "}"
