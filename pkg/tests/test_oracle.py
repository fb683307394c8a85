import itertools

import pytest
from hypothesis import given, settings

from rlis.errors import DomainError
from rlis.generators import complete, cycle, path, star
from rlis.graph import classify_mask
from rlis.oracle import enumerate_induced_subtrees, leaf_function, oracle_rlis

from conftest import brute_is_tree, graphs


def sizes(G):
    out = {}
    for rec in enumerate_induced_subtrees(G):
        out[rec.size] = out.get(rec.size, 0) + 1
    return out


def test_triangle_has_six():
    assert sizes(complete(3)) == {1: 3, 2: 3}


def test_p3():
    assert sizes(path(3)) == {1: 3, 2: 2, 3: 1}


def test_c4():
    assert sizes(cycle(4)) == {1: 4, 2: 4, 3: 4}


@pytest.mark.parametrize("n", range(1, 9))
def test_path_counts(n):
    assert sum(sizes(path(n)).values()) == n * (n + 1) // 2


def test_oracle_rlis_examples():
    K13 = star(3)
    assert oracle_rlis(K13, 0, 4, 3)
    assert not oracle_rlis(K13, 1, 4, 3)
    assert not oracle_rlis(K13, 0, 4, 5)


@pytest.mark.parametrize("G, want", [
    (star(3), {1: 0, 2: 2, 3: 2, 4: 3}),
    (complete(4), {1: 0, 2: 2}),
    (path(4), {1: 0, 2: 2, 3: 2, 4: 2}),
])
def test_leaf_function(G, want):
    assert leaf_function(G) == want


def test_refuses_large():
    with pytest.raises(DomainError):
        list(enumerate_induced_subtrees(path(21)))


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=8))
def test_enumeration_is_exact_and_duplicate_free(G):
    recs = list(enumerate_induced_subtrees(G))
    keys = [r.vertices for r in recs]
    assert len(keys) == len(set(keys))
    want = {sum(1 << v for v in S)
            for r in range(1, G.n + 1) for S in itertools.combinations(range(G.n), r)
            if brute_is_tree(G, S)}
    assert set(keys) == want
    for rec in recs:
        shape = classify_mask(G, rec.vertices)
        assert shape is not None and shape.leaf_count == rec.leaf_count
        assert shape.internals == rec.internal_set


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=7))
def test_max_size_truncates(G):
    for k in range(G.n + 1):
        assert all(r.size <= k for r in enumerate_induced_subtrees(G, k))
        full = [r.vertices for r in enumerate_induced_subtrees(G) if r.size <= k]
        assert sorted(full) == sorted(r.vertices for r in enumerate_induced_subtrees(G, k))


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=7))
def test_oracle_rlis_matches_profiles(G):
    from rlis.oracle import internal_profiles, leaf_profile
    profiles = internal_profiles(G)
    for v0 in range(G.n):
        assert profiles[v0] == leaf_profile(G, v0)
        for a in range(1, G.n + 1):
            for b in range(3, a + 2):
                assert oracle_rlis(G, v0, a, b) == (profiles[v0].get(a, -1) >= b)
