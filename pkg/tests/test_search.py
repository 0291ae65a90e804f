import random

import pytest

import fixtures as fx
from endvertex import (
    DisconnectedGraphError,
    FixedPreference,
    Graph,
    HIGHEST_ID,
    LOWEST_ID,
    SearchKind,
    SeededRandom,
    eligible_set,
    run_search,
    validate_order,
)

K = SearchKind
ALL_KINDS = list(SearchKind)


def test_eligible_set_known_examples():
    g, nm = fx.unit_interval_example()
    prefix = [nm["b"], nm["c"], nm["d"]]
    assert eligible_set(K.LDFS, g, prefix) == frozenset({nm["e"]})
    assert eligible_set(K.MCS, g, prefix) == frozenset({nm["a"]})


def test_eligible_set_empty_prefix_is_everything():
    g = fx.path(4)
    for kind in ALL_KINDS:
        assert eligible_set(kind, g, []) == frozenset(range(4))


def test_eligible_set_input_validation():
    g = fx.path(3)
    with pytest.raises(ValueError):
        eligible_set(K.BFS, g, [0, 0])
    with pytest.raises(ValueError):
        eligible_set(K.BFS, g, [0, 1, 2])
    with pytest.raises(ValueError):
        eligible_set(K.BFS, g, [9])


def test_validation_matrix_unit_interval_example():
    g, nm = fx.unit_interval_example()
    o = lambda *names: [nm[x] for x in names]
    assert validate_order(K.MCS, g, o("b", "c", "d", "a", "e")) == (True, None)
    assert validate_order(K.LDFS, g, o("b", "c", "d", "a", "e")) == (False, 4)
    assert validate_order(K.LDFS, g, o("b", "c", "d", "e", "a")) == (True, None)
    assert validate_order(K.MCS, g, o("b", "c", "d", "e", "a")) == (False, 4)
    assert validate_order(K.MNS, g, o("d", "b", "c", "e", "a")) == (True, None)
    assert validate_order(K.MCS, g, o("d", "b", "c", "e", "a")) == (False, 4)
    assert validate_order(K.LDFS, g, o("d", "b", "c", "e", "a")) == (False, 4)


def test_bfs_trap_orders_never_end_at_t():
    g, nm = fx.bfs_trap()
    t = nm["t"]
    from itertools import permutations
    others = [v for v in range(6) if v != t]
    for perm in permutations(others):
        ok, _ = validate_order(K.BFS, g, list(perm) + [t])
        assert not ok


def test_run_search_forced_path():
    g = fx.path(3)
    for kind in ALL_KINDS:
        assert run_search(kind, g, start=0) == [0, 1, 2]


def test_run_search_policies():
    g = fx.clique(3)
    assert run_search(K.MNS, g, start=0, policy=LOWEST_ID) == [0, 1, 2]
    assert run_search(K.MNS, g, start=0, policy=HIGHEST_ID) == [0, 2, 1]
    a = run_search(K.MCS, g, policy=SeededRandom(42))
    assert a == run_search(K.MCS, g, policy=SeededRandom(42))
    g10, nm = fx.mcs_jump_example()
    target = [nm[x] for x in ("a", "b", "u", "h", "i", "c", "d", "e", "f", "g", "t")]
    got = run_search(K.MCS, g10, start=target[0], policy=FixedPreference(tuple(target)))
    assert got == target
    assert validate_order(K.MCS, g10, target) == (True, None)


def test_run_search_requires_connected():
    with pytest.raises(DisconnectedGraphError):
        run_search(K.BFS, Graph.from_edges(3, [(0, 1)]))


def test_replay_soundness_all_kinds():
    rng = random.Random(3001)
    for _ in range(60):
        g = fx.rand_connected_graph(rng, rng.randint(1, 9))
        for kind in ALL_KINDS:
            for policy in (LOWEST_ID, HIGHEST_ID, SeededRandom(rng.getrandbits(32))):
                start = rng.randrange(g.n)
                order = run_search(kind, g, start=start, policy=policy)
                assert validate_order(kind, g, order) == (True, None)


def test_validate_order_rejects_non_permutations():
    g = fx.path(3)
    with pytest.raises(ValueError):
        validate_order(K.BFS, g, [0, 1])
    with pytest.raises(ValueError):
        validate_order(K.BFS, g, [0, 1, 1])


def test_validate_order_on_disconnected_graph_flags_the_gap():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    ok, pos = validate_order(K.GENERIC, g, [0, 1, 2, 3])
    assert not ok and pos == 3  # no eligible vertex across the component gap


def test_fixed_preference_must_cover_eligible_vertices():
    g = fx.clique(3)
    with pytest.raises(ValueError, match="preference"):
        run_search(K.MCS, g, policy=FixedPreference((0, 1)))


def test_hierarchy_on_random_runs():
    """Containments: LBFS < BFS, MNS; LDFS < DFS, MNS; MCS < MNS;
    everything < Generic."""
    rng = random.Random(3002)
    contained_in = {
        K.LBFS: (K.BFS, K.MNS, K.GENERIC),
        K.LDFS: (K.DFS, K.MNS, K.GENERIC),
        K.MCS: (K.MNS, K.GENERIC),
        K.BFS: (K.GENERIC,),
        K.DFS: (K.GENERIC,),
        K.MNS: (K.GENERIC,),
    }
    for _ in range(50):
        g = fx.rand_connected_graph(rng, rng.randint(2, 9))
        for kind, supers in contained_in.items():
            order = run_search(kind, g, start=rng.randrange(g.n),
                               policy=SeededRandom(rng.getrandbits(32)))
            for sup in supers:
                assert validate_order(sup, g, order) == (True, None)


def test_peo_from_lbfs_and_mcs_on_chordal():
    import endvertex
    rng = random.Random(3003)
    for _ in range(60):
        g = fx.rand_chordal(rng, rng.randint(1, 9))
        for kind in (K.LBFS, K.MCS):
            order = run_search(kind, g, start=rng.randrange(g.n),
                               policy=SeededRandom(rng.getrandbits(32)))
            assert endvertex.peo_check(g, list(reversed(order)))


def test_mcs_mns_eligibility_depends_on_visited_set_only():
    rng = random.Random(3004)
    for _ in range(40):
        g = fx.rand_connected_graph(rng, rng.randint(3, 8))
        n = g.n
        prefix = random.Random(rng.getrandbits(32)).sample(range(n), rng.randint(1, n - 1))
        shuffled = prefix[:]
        random.Random(rng.getrandbits(32)).shuffle(shuffled)
        for kind in (K.MCS, K.MNS):
            assert eligible_set(kind, g, prefix) == eligible_set(kind, g, shuffled)


def test_search_kind_parse():
    assert SearchKind.parse("MCS") is K.MCS
    assert SearchKind.parse(" lbfs ") is K.LBFS
    with pytest.raises(ValueError):
        SearchKind.parse("dijkstra")
