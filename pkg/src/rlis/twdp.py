"""Single-exponential treewidth dynamic program over weighted partitions.

Works on a bag-complete nice decomposition in which ``v0`` belongs to every
nonempty bag.  A state is a tuple ``(s, i, j, l, c)``:

* ``s`` labels the sorted bag: :data:`UNUSED`, :data:`INTERNAL`,
  :data:`LEAF0` (a leaf with no internal neighbour yet) or :data:`LEAF1`
  (a leaf with its single internal neighbour),
* ``i`` / ``j``: vertices / edges of the internal part seen so far,
* ``l``: leaves seen so far,
* ``c``: neighbours of ``v0`` in the partial subtree, capped at 2.

Each state maps to a :class:`~rlis.wpart.WeightedPartitionSet` over the bag
vertices labelled internal; a partition records which of them are already
connected below.  All weights are zero.  After every node each set is shrunk
with :func:`~rlis.wpart.reduce`.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import wpart
from .errors import DecompositionError, DomainError
from .graph import Graph, bits
from .treedec import (BAG_COMPLETE, FORGET, INTRODUCE, INTRODUCE_EDGE, JOIN, LEAF,
                      NiceDecomposition, TreeDecomposition, pinned_nice)
from .wpart import Partition, WeightedPartitionSet

__all__ = [
    "UNUSED",
    "INTERNAL",
    "LEAF0",
    "LEAF1",
    "TwResult",
    "tw_leaf",
    "tw_introduce",
    "tw_forget",
    "tw_join",
    "reduce_pass",
    "tw_tables",
    "treewidth_profile",
    "solve_treewidth",
    "solve_treewidth_auto",
]

UNUSED, INTERNAL, LEAF0, LEAF1 = 0, 1, 2, 3

_EMPTY = WeightedPartitionSet((), {Partition((), ()): 0})


def _merge(table: dict, key, A: WeightedPartitionSet) -> None:
    old = table.get(key)
    if old is None:
        table[key] = A
    else:
        table[key] = wpart.union(old, A)


def _universe(bag: tuple, s: tuple) -> tuple:
    return tuple(v for v, x in zip(bag, s) if x == INTERNAL)


def tw_leaf() -> dict:
    return {((), 0, 0, 0, 0): _EMPTY}


def tw_introduce(child: dict, v: int, child_bag: tuple, G: Graph, v0: int, a: int) -> dict:
    """Table after introducing ``v`` above a node with bag ``child_bag``."""
    out: dict = {}
    if v == v0:
        if child_bag:
            raise DecompositionError("v0 must be introduced directly above a leaf")
        A = child.get(((), 0, 0, 0, 0))
        if A:
            out[((INTERNAL,), 1, 0, 0, 0)] = wpart.ins({v0}, A)
        return out
    bag = tuple(sorted(child_bag + (v,)))
    pos = bag.index(v)
    nbrs = [x for x, u in enumerate(child_bag) if G.has_edge(u, v)]
    touches_v0 = G.has_edge(v, v0)
    for (s, i, j, l, c), A in child.items():
        _merge(out, (s[:pos] + (UNUSED,) + s[pos:], i, j, l, c), A)
        labels = [s[x] for x in nbrs]
        # as a leaf: every used neighbour must be internal, at most one of them
        used = [x for x in labels if x != UNUSED]
        if len(used) <= 1 and all(x == INTERNAL for x in used) and i + l + 1 <= a:
            lab = LEAF1 if used else LEAF0
            nc = min(2, c + 1) if touches_v0 else c
            _merge(out, (s[:pos] + (lab,) + s[pos:], i, j, l + 1, nc), A)
        # as an internal vertex: neighbouring leaves gain v as their neighbour
        if LEAF1 in labels:
            continue
        nh = [child_bag[x] for x in nbrs if s[x] == INTERNAL]
        ni, nj = i + 1, j + len(nh)
        if nj > ni - 1 or ni + l > a:
            continue
        ns = list(s)
        for x in nbrs:
            if s[x] == LEAF0:
                ns[x] = LEAF1
        ns.insert(pos, INTERNAL)
        nc = min(2, c + 1) if touches_v0 else c
        glued = wpart.glue(set(nh) | {v}, wpart.ins({v}, A))
        _merge(out, (tuple(ns), ni, nj, l, nc), glued)
    return out


def tw_forget(child: dict, v: int, child_bag: tuple, v0: int) -> dict:
    """Table after forgetting ``v``; a forgotten internal vertex must stay
    connected to the bag, a forgotten leaf must have its neighbour."""
    pos = child_bag.index(v)
    if v == v0 and child_bag != (v0,):
        raise DecompositionError("v0 must be the last vertex forgotten")
    out: dict = {}
    for (s, i, j, l, c), A in child.items():
        lab = s[pos]
        ns = s[:pos] + s[pos + 1:]
        if lab == UNUSED or lab == LEAF1:
            _merge(out, (ns, i, j, l, c), A)
        elif lab == INTERNAL:
            if v == v0:
                # universe is {v0}: the partial subtree is connected
                if c == 2 and A:
                    _merge(out, (ns, i, j, l, c), _EMPTY)
            else:
                P = wpart.project({v}, A)
                if P:
                    _merge(out, (ns, i, j, l, c), P)
    return out


def _edge_count(adjpos: list[int], mask: int) -> int:
    return sum((adjpos[x] & mask).bit_count() for x in bits(mask)) // 2


def tw_join(left: dict, right: dict, bag: tuple, G: Graph, v0: int, a: int) -> dict:
    """Combine children sharing ``bag``.

    Internal and unused labels must agree.  A bag leaf is a leaf on both
    sides; its internal neighbours inside the bag are seen by both, so its
    neighbour counts add up minus that overlap and must stay at most one.
    Bag vertices, bag edges and bag leaves are counted once.
    """
    k = len(bag)
    adjpos = [sum(1 << y for y in range(k) if G.has_edge(bag[x], bag[y])) for x in range(k)]
    p0 = bag.index(v0)
    groups: dict = {}
    for key, A in right.items():
        sig = tuple(min(x, 2) for x in key[0])
        groups.setdefault(sig, []).append((key, A))
    out: dict = {}
    cache: dict = {}
    for (s1, i1, j1, l1, c1), A1 in left.items():
        sig = tuple(min(x, 2) for x in s1)
        partners = groups.get(sig)
        if not partners:
            continue
        info = cache.get(sig)
        if info is None:
            ones = sum(1 << x for x, t in enumerate(sig) if t == INTERNAL)
            leaves = sum(1 << x for x, t in enumerate(sig) if t == 2)
            beta = {x: (adjpos[x] & ones).bit_count() for x in bits(leaves)}
            beta0 = (adjpos[p0] & (ones | leaves)).bit_count()
            info = cache[sig] = (ones.bit_count(), _edge_count(adjpos, ones),
                                 leaves.bit_count(), beta, beta0)
        n_i, n_e, n_l, beta, beta0 = info
        for (s2, i2, j2, l2, c2), A2 in partners:
            ns = list(s1)
            ok = True
            for x, bx in beta.items():
                z = s1[x] + s2[x] - 4 - bx
                if z > 1:
                    ok = False
                    break
                ns[x] = LEAF0 + z
            if not ok:
                continue
            i = i1 + i2 - n_i
            j = j1 + j2 - n_e
            l = l1 + l2 - n_l
            if j > i - 1 or i + l > a:
                continue
            c = 2 if beta0 >= 2 else min(2, c1 + c2 - beta0)
            J = wpart.join(A1, A2)
            if J:
                _merge(out, (tuple(ns), i, j, l, c), J)
    return out


def reduce_pass(table: dict) -> dict:
    """Replace every state's set by a representative subset."""
    return {key: wpart.reduce(A) for key, A in table.items() if A}


def _check_pinned(N: NiceDecomposition, v0: int) -> None:
    if N.pin != v0:
        raise DecompositionError(f"decomposition is pinned at {N.pin!r}, not at v0={v0}")
    if N.convention != BAG_COMPLETE:
        raise DecompositionError("the treewidth solver needs a bag-complete decomposition")
    for bag in N.bags:
        if bag and v0 not in bag:
            raise DecompositionError("v0 is missing from a nonempty bag")


def tw_tables(G: Graph, N: NiceDecomposition, v0: int, a: int, reduce: bool = True) -> dict:
    """Root table of the dynamic program (states with the empty labelling)."""
    _check_pinned(N, v0)
    tables: list = [None] * len(N)
    for t in range(len(N)):
        kind, item, ch = N.kind[t], N.item[t], N.children[t]
        if kind == LEAF:
            tab = tw_leaf()
        elif kind == INTRODUCE:
            tab = tw_introduce(tables[ch[0]], item, tuple(sorted(N.bags[ch[0]])), G, v0, a)
        elif kind == FORGET:
            tab = tw_forget(tables[ch[0]], item, tuple(sorted(N.bags[ch[0]])), v0)
        elif kind == JOIN:
            tab = tw_join(tables[ch[0]], tables[ch[1]], tuple(sorted(N.bags[t])), G, v0, a)
        elif kind == INTRODUCE_EDGE:
            raise DecompositionError("introduce-edge nodes are not supported; use bag-complete")
        else:
            raise DomainError(f"unknown node kind {kind!r}")
        if reduce:
            tab = reduce_pass(tab)
        tables[t] = tab
        for c in ch:
            tables[c] = None
    return tables[N.root]


def treewidth_profile(G: Graph, N: NiceDecomposition, v0: int, max_size: int | None = None,
                      reduce: bool = True) -> dict[int, int]:
    """Map size -> max leaves of an induced subtree with ``v0`` internal."""
    a = G.n if max_size is None else max_size
    best: dict[int, int] = {}
    for (s, i, j, l, c), A in tw_tables(G, N, v0, a, reduce).items():
        if A and j == i - 1 and c == 2:
            size = i + l
            if best.get(size, -1) < l:
                best[size] = l
    return dict(sorted(best.items()))


@dataclass
class TwResult:
    verdict: bool
    width: int
    leaves: int | None = None


def solve_treewidth(G: Graph, N: NiceDecomposition, v0: int, a: int, b: int,
                    reduce: bool = True) -> TwResult:
    """Decide the instance on a pinned, bag-complete nice decomposition."""
    from .chordal import check_parameters

    check_parameters(G, v0, a, b)
    _check_pinned(N, v0)
    if a < 4:
        return TwResult(False, N.width)
    best = treewidth_profile(G, N, v0, a, reduce).get(a)
    return TwResult(best is not None and best >= b, N.width, best)


def solve_treewidth_auto(G: Graph, v0: int, a: int, b: int, D: TreeDecomposition | None = None,
                         method: str = "min-fill", reduce: bool = True) -> TwResult:
    """Build (or pin the given) decomposition and solve."""
    from .chordal import check_parameters

    check_parameters(G, v0, a, b)
    return solve_treewidth(G, pinned_nice(G, v0, D, method), v0, a, b, reduce)
