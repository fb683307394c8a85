"""Brute-force ground truth by enumerating induced subtrees.

Only meant for small graphs (the enumeration refuses more than
:data:`MAX_VERTICES` vertices).  Both solvers are tested against it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError
from .graph import Graph, bits

MAX_VERTICES = 20


@dataclass(frozen=True)
class SubtreeRecord:
    vertices: int
    leaf_count: int
    internal_set: int

    @property
    def size(self) -> int:
        return self.vertices.bit_count()


def enumerate_induced_subtrees(G: Graph, max_size: int | None = None) -> Iterator[SubtreeRecord]:
    """Yield every vertex set of size ``1..max_size`` inducing a tree, once.

    Connected sets are grown from their minimum vertex; a candidate with two
    or more neighbours already in the set would close a cycle and is skipped
    together with all its supersets.
    """
    if G.n > MAX_VERTICES:
        raise DomainError(f"oracle refuses graphs with more than {MAX_VERTICES} vertices")
    if max_size is None:
        max_size = G.n
    if max_size < 1:
        return
    adj = G.adj

    def record(S):
        leaves = internal = 0
        for v in bits(S):
            d = (adj[v] & S).bit_count()
            if d == 1:
                leaves |= 1 << v
            elif d >= 2:
                internal |= 1 << v
        return SubtreeRecord(S, leaves.bit_count(), internal)

    def grow(S, size, ext, excl, floor):
        yield record(S)
        if size == max_size:
            return
        while ext:
            low = ext & -ext
            u = low.bit_length() - 1
            ext ^= low
            if (adj[u] & S).bit_count() == 1:
                fresh = adj[u] & ~(S | ext | excl) & floor
                yield from grow(S | low, size + 1, ext | fresh, excl, floor)
            excl |= low

    for r in range(G.n):
        floor = G.all_mask & ~((2 << r) - 1)
        yield from grow(1 << r, 1, adj[r] & floor, 0, floor)


def leaf_profile(G: Graph, v0: int | None = None, max_size: int | None = None) -> dict[int, int]:
    """Map size -> max leaves over induced subtrees of that size.

    With ``v0`` only subtrees having ``v0`` as an internal vertex count.
    Sizes without any qualifying subtree are absent.
    """
    best: dict[int, int] = {}
    for rec in enumerate_induced_subtrees(G, max_size):
        if v0 is not None and not rec.internal_set >> v0 & 1:
            continue
        k = rec.size
        if best.get(k, -1) < rec.leaf_count:
            best[k] = rec.leaf_count
    return dict(sorted(best.items()))


def leaf_function(G: Graph, restrict_internal: int | None = None) -> dict[int, int]:
    return leaf_profile(G, restrict_internal)


def internal_profiles(G: Graph) -> list[dict[int, int]]:
    """``leaf_profile(G, v)`` for every vertex ``v`` from a single enumeration."""
    out: list[dict[int, int]] = [{} for _ in range(G.n)]
    for rec in enumerate_induced_subtrees(G):
        k, lc = rec.size, rec.leaf_count
        for v in bits(rec.internal_set):
            if out[v].get(k, -1) < lc:
                out[v][k] = lc
    return [dict(sorted(p.items())) for p in out]


def oracle_rlis(G: Graph, v0: int, a: int, b: int) -> bool:
    """Is there an induced subtree with ``a`` vertices, ``>= b`` leaves, ``v0`` internal?"""
    for rec in enumerate_induced_subtrees(G, a):
        if rec.size == a and rec.leaf_count >= b and rec.internal_set >> v0 & 1:
            return True
    return False
