from collections import Counter

import pytest

from kmetric.catalog import (
    CONNECTED_COUNTS,
    decode_graph6,
    encode_graph6,
    random_connected_graph,
    random_tree,
)
from kmetric.graphs import all_pairs_distances, complete_graph, path_graph

from util import are_isomorphic


def test_counts_match_known_sequence(catalog):
    counts = Counter(g.n for g in catalog)
    assert dict(counts) == CONNECTED_COUNTS
    assert len(catalog) == 996


def test_members_are_simple_connected(catalog):
    # construction validates; spot-check basic structural sanity
    for g in catalog:
        assert 1 <= g.n <= 7
        for v in range(g.n):
            assert v not in g.adjacency[v]
        assert sum(g.degree(v) for v in range(g.n)) == 2 * g.num_edges


def test_known_members_present(catalog):
    p3 = path_graph(3)
    k7 = complete_graph(7)
    assert sum(1 for g in catalog if g.n == 3 and are_isomorphic(g, p3)) == 1
    assert sum(1 for g in catalog if g.n == 7 and are_isomorphic(g, k7)) == 1
    for n in range(2, 8):
        assert sum(1 for g in catalog if g.n == n and are_isomorphic(g, path_graph(n))) == 1


def test_pairwise_non_isomorphic(catalog):
    # combined with the count test this proves the catalog is exhaustive
    groups = {}
    for g in catalog:
        dm = all_pairs_distances(g)
        inv = (
            g.n,
            g.num_edges,
            tuple(sorted(g.degree(v) for v in range(g.n))),
            tuple(sorted(tuple(sorted(dm.row(i))) for i in range(g.n))),
        )
        groups.setdefault(inv, []).append(g)
    for members in groups.values():
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                assert not are_isomorphic(members[i], members[j])


def test_graph6_round_trip(catalog):
    for g in catalog[:200]:
        assert decode_graph6(encode_graph6(g)).adjacency == g.adjacency


def test_graph6_rejects_garbage():
    with pytest.raises(ValueError):
        decode_graph6("\x01\x02")
    with pytest.raises(ValueError):
        decode_graph6("")


def test_random_generators_deterministic():
    import random

    a = random_connected_graph(random.Random(5), 9)
    b = random_connected_graph(random.Random(5), 9)
    assert a.adjacency == b.adjacency
    t = random_tree(random.Random(5), 9)
    assert t.num_edges == 8
