"""Slow, literal versions of the weighted-partition operators.

Partitions here are frozensets of frozensets and every lattice operation is
evaluated by enumerating ``Π(U)``, so nothing is shared with :mod:`rlis.wpart`
beyond the conversion helpers.  Used as the yardstick in tests; ``opt`` and
``represents`` are the semantics that ``reduce`` must preserve.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable

from .wpart import Partition, WeightedPartitionSet

INF = math.inf


def all_partitions(universe: Iterable) -> list[frozenset]:
    """Every set partition of ``universe`` as a frozenset of frozensets."""
    return list(_all_partitions(tuple(sorted(universe))))


@lru_cache(maxsize=None)
def _all_partitions(uni: tuple) -> tuple:
    if not uni:
        return (frozenset(),)
    first, rest = uni[0], uni[1:]
    out = []
    for p in _all_partitions(rest):
        out.append(p | {frozenset([first])})
        for block in p:
            out.append((p - {block}) | {block | {first}})
    return tuple(out)


def to_sets(p: Partition) -> frozenset:
    return frozenset(frozenset(b) for b in p.blocks())


def from_sets(p: frozenset, universe: Iterable) -> Partition:
    return Partition.from_blocks(p, universe)


def coarser(p: frozenset, q: frozenset) -> bool:
    """``p ⊑ q`` read off the definition."""
    return all(any(S <= T for T in p) for S in q)


def naive_meet(p: frozenset, q: frozenset, universe) -> frozenset:
    """The finest partition coarser than both, found by enumeration."""
    lower = [r for r in all_partitions(universe) if coarser(r, p) and coarser(r, q)]
    best = [r for r in lower if all(coarser(s, r) for s in lower)]
    assert len(best) == 1
    return best[0]


def restrict(p: frozenset, X) -> frozenset:
    X = frozenset(X)
    return frozenset(S & X for S in p if S & X)


def extend(p: frozenset, X) -> frozenset:
    covered = frozenset().union(*p) if p else frozenset()
    return p | {frozenset([x]) for x in X if x not in covered}


def U_of(universe, S) -> frozenset:
    """``U[S]``: singletons outside ``S`` plus the block ``S``."""
    S = frozenset(S)
    out = {frozenset([x]) for x in universe if x not in S}
    if S:
        out.add(S)
    return frozenset(out)


def naive_rmc(pairs) -> set:
    pairs = list(pairs)
    return {(p, w) for p, w in pairs if all(not (p2 == p) or w <= w2 for p2, w2 in pairs)}


def naive_union(A: set, B: set) -> set:
    return naive_rmc(A | B)


def naive_ins(X, A: set, universe) -> set:
    new = set(universe) | set(X)
    return {(extend(p, new), w) for p, w in A}


def naive_shift(w2: int, A: set) -> set:
    return {(p, w + w2) for p, w in A}


def naive_glue(S, A: set, universe) -> set:
    hat = set(universe) | set(S)
    return naive_rmc({(naive_meet(U_of(hat, S), extend(p, hat), hat), w) for p, w in A})


def naive_project(X, A: set, universe) -> set:
    X = set(X)
    rest = [x for x in universe if x not in X]
    ok = []
    for p, w in A:
        if all(any(coarser(p, U_of(universe, {e, e2})) for e2 in rest) for e in X):
            ok.append((restrict(p, rest), w))
    return naive_rmc(ok)


def naive_join(A: set, B: set, U1, U2) -> set:
    hat = set(U1) | set(U2)
    return naive_rmc(
        {(naive_meet(extend(p, hat), extend(q, hat), hat), w1 + w2) for p, w1 in A for q, w2 in B}
    )


def as_naive(A: WeightedPartitionSet) -> set:
    return {(to_sets(p), w) for p, w in A}


def _single_block(p: Partition, q: Partition) -> bool:
    uni = p.universe
    if not uni:
        return True
    pos = {x: k for k, x in enumerate(uni)}
    parent = list(range(len(uni)))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for rep in (p.rep, q.rep):
        for k, r in enumerate(rep):
            a, b = find(k), find(pos[r])
            if a != b:
                parent[a] = b
    return len({find(k) for k in range(len(uni))}) == 1


def opt(q: Partition, A: WeightedPartitionSet) -> float:
    """Minimum weight of an entry whose meet with ``q`` is a single block."""
    best = INF
    for p, w in A:
        if w < best and _single_block(p, q):
            best = w
    return best


def represents(A1: WeightedPartitionSet, A2: WeightedPartitionSet) -> bool:
    """True iff ``opt`` agrees on every ``q`` of the universe."""
    if A1.universe != A2.universe:
        return False
    for qs in all_partitions(A1.universe):
        q = from_sets(qs, A1.universe)
        if opt(q, A1) != opt(q, A2):
            return False
    return True
