"""Weighted partitions and the rank-based reduction.

A :class:`Partition` of a finite ordered universe is stored canonically: the
universe as a sorted tuple, plus for every element the minimum element of its
block.  Two partitions are equal exactly when their encodings are.

The operators below (``union``, ``ins``, ``shift``, ``glue``, ``project``,
``join``) act on :class:`WeightedPartitionSet` values and always return sets
with at most one weight per partition, the smallest one.  ``reduce`` keeps a
subset of at most ``2**(|U|-1)`` entries that still answers every
connectivity query ``opt(q, .)`` the same way as the full set.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Iterator

from .errors import DomainError

__all__ = [
    "Partition",
    "WeightedPartitionSet",
    "is_coarsening",
    "meet",
    "project_down",
    "lift_up",
    "rmc",
    "union",
    "ins",
    "shift",
    "glue",
    "glue_w",
    "project",
    "join",
    "reduce",
    "cut_rows",
]


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


class Partition:
    """Set partition of a sorted universe, encoded by block minima."""

    __slots__ = ("universe", "rep", "_hash")

    def __init__(self, universe: tuple, rep: tuple):
        self.universe = universe
        self.rep = rep
        self._hash = hash((universe, rep))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[Hashable]], universe: Iterable | None = None) -> "Partition":
        blocks = [sorted(b) for b in blocks]
        if any(not b for b in blocks):
            raise DomainError("partition blocks must be nonempty")
        elems = [x for b in blocks for x in b]
        if len(set(elems)) != len(elems):
            raise DomainError("partition blocks must be disjoint")
        uni = tuple(sorted(elems))
        if universe is not None and tuple(sorted(universe)) != uni:
            raise DomainError("blocks do not cover the universe exactly")
        head = {x: b[0] for b in blocks for x in b}
        return cls(uni, tuple(head[x] for x in uni))

    @classmethod
    def singletons(cls, universe: Iterable) -> "Partition":
        uni = tuple(sorted(universe))
        return cls(uni, uni)

    @classmethod
    def whole(cls, universe: Iterable) -> "Partition":
        uni = tuple(sorted(universe))
        return cls(uni, (uni[0],) * len(uni) if uni else ())

    @classmethod
    def _from_parent(cls, universe: tuple, parent: list[int]) -> "Partition":
        # parent indexes into universe; block minimum = smallest index in the class
        low: dict[int, int] = {}
        rep = []
        for k in range(len(universe)):
            r = _find(parent, k)
            if r not in low:
                low[r] = k
            rep.append(universe[low[r]])
        return cls(universe, tuple(rep))

    def blocks(self) -> list[tuple]:
        out: dict = {}
        for x, r in zip(self.universe, self.rep):
            out.setdefault(r, []).append(x)
        return [tuple(b) for b in out.values()]

    def block_count(self) -> int:
        return sum(1 for x, r in zip(self.universe, self.rep) if x == r)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.universe == other.universe and self.rep == other.rep

    def __lt__(self, other):
        return (self.universe, self.rep) < (other.universe, other.rep)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "Partition(%s)" % ", ".join("{%s}" % ",".join(map(str, b)) for b in self.blocks())


def _same_universe(p: Partition, q: Partition) -> None:
    if p.universe != q.universe:
        raise DomainError(f"universe mismatch: {p.universe} vs {q.universe}")


def is_coarsening(p: Partition, q: Partition) -> bool:
    """``p ⊑ q``: every block of ``q`` lies inside some block of ``p``."""
    _same_universe(p, q)
    head: dict = {}
    for rq, rp in zip(q.rep, p.rep):
        if head.setdefault(rq, rp) != rp:
            return False
    return True


def meet(p: Partition, q: Partition) -> Partition:
    """Finest common coarsening of ``p`` and ``q``."""
    _same_universe(p, q)
    return _meet(p.universe, p.rep, q.rep)


def _meet(universe: tuple, rep1: tuple, rep2: tuple) -> Partition:
    pos = {x: k for k, x in enumerate(universe)}
    parent = list(range(len(universe)))
    for rep in (rep1, rep2):
        for k, r in enumerate(rep):
            a, b = _find(parent, k), _find(parent, pos[r])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return Partition._from_parent(universe, parent)


def project_down(p: Partition, X: Iterable) -> Partition:
    """Restrict ``p`` to ``X ⊆ U``, dropping emptied blocks."""
    X = set(X)
    if not X <= set(p.universe):
        raise DomainError("projection target is not a subset of the universe")
    uni = tuple(x for x in p.universe if x in X)
    head: dict = {}
    rep = []
    for x, r in zip(p.universe, p.rep):
        if x in X:
            rep.append(head.setdefault(r, x))
    return Partition(uni, tuple(rep))


def lift_up(p: Partition, X: Iterable) -> Partition:
    """Extend ``p`` to ``X ⊇ U`` with singleton blocks for new elements."""
    X = set(X)
    old = dict(zip(p.universe, p.rep))
    if not set(old) <= X:
        raise DomainError("lift target does not contain the universe")
    uni = tuple(sorted(X))
    return Partition(uni, tuple(old.get(x, x) for x in uni))


class WeightedPartitionSet:
    """Map partition -> nonnegative integer weight over a fixed universe."""

    __slots__ = ("universe", "entries")

    def __init__(self, universe: Iterable = (), entries: dict | None = None):
        self.universe = tuple(sorted(universe))
        self.entries: dict[Partition, int] = {} if entries is None else entries

    @classmethod
    def of(cls, universe: Iterable, pairs: Iterable[tuple[Partition, int]]) -> "WeightedPartitionSet":
        return rmc(universe, pairs)

    def __len__(self):
        return len(self.entries)

    def __bool__(self):
        return bool(self.entries)

    def __iter__(self) -> Iterator[tuple[Partition, int]]:
        return iter(self.entries.items())

    def __contains__(self, p):
        return p in self.entries

    def __eq__(self, other):
        if not isinstance(other, WeightedPartitionSet):
            return NotImplemented
        return self.universe == other.universe and self.entries == other.entries

    def __repr__(self):
        body = ", ".join(f"({p!r}, {w})" for p, w in sorted(self.entries.items()))
        return f"WeightedPartitionSet({self.universe}, [{body}])"

    def add(self, p: Partition, w: int) -> None:
        """In-place keep-min insertion."""
        old = self.entries.get(p)
        if old is None or w < old:
            self.entries[p] = w


def rmc(universe: Iterable, pairs: Iterable[tuple[Partition, int]]) -> WeightedPartitionSet:
    """Keep, for every partition, only its minimum weight."""
    out = WeightedPartitionSet(universe)
    for p, w in pairs:
        if p.universe != out.universe:
            raise DomainError("partition universe differs from the set universe")
        out.add(p, w)
    return out


def union(A: WeightedPartitionSet, B: WeightedPartitionSet) -> WeightedPartitionSet:
    if A.universe != B.universe:
        raise DomainError("union of sets over different universes")
    out = WeightedPartitionSet(A.universe, dict(A.entries))
    for p, w in B:
        out.add(p, w)
    return out


def ins(X: Iterable, A: WeightedPartitionSet) -> WeightedPartitionSet:
    X = set(X)
    if X & set(A.universe):
        raise DomainError("inserted elements must be new to the universe")
    uni = set(A.universe) | X
    return rmc(uni, ((lift_up(p, uni), w) for p, w in A))


def shift(w: int, A: WeightedPartitionSet) -> WeightedPartitionSet:
    return WeightedPartitionSet(A.universe, {p: x + w for p, x in A})


def glue(S: Iterable, A: WeightedPartitionSet) -> WeightedPartitionSet:
    """Lift to ``U ∪ S`` and merge all blocks meeting ``S`` into one."""
    S = set(S)
    uni = tuple(sorted(set(A.universe) | S))
    out = WeightedPartitionSet(uni)
    if not S:
        for p, w in A:
            out.add(p, w)
        return out
    pos = {x: k for k, x in enumerate(uni)}
    s_idx = [pos[x] for x in S]
    for p, w in A:
        old = dict(zip(p.universe, p.rep))
        parent = [pos[old.get(x, x)] for x in uni]
        # parent points at the block minimum, which is its own root
        root = _find(parent, s_idx[0])
        for k in s_idx[1:]:
            r = _find(parent, k)
            if r != root:
                lo, hi = min(r, root), max(r, root)
                parent[hi] = lo
                root = lo
        out.add(Partition._from_parent(uni, parent), w)
    return out


def glue_w(u, v, weight: Callable[[object, object], int], A: WeightedPartitionSet) -> WeightedPartitionSet:
    return shift(weight(u, v), glue((u, v), A))


def project(X: Iterable, A: WeightedPartitionSet) -> WeightedPartitionSet:
    """Remove ``X`` from the universe, keeping only partitions in which every
    removed element shares its block with some surviving element."""
    X = set(X)
    if not X <= set(A.universe):
        raise DomainError("projected elements must belong to the universe")
    keep = tuple(x for x in A.universe if x not in X)
    out = WeightedPartitionSet(keep)
    for p, w in A:
        alive = {r for x, r in zip(p.universe, p.rep) if x not in X}
        if any(r not in alive for x, r in zip(p.universe, p.rep) if x in X):
            continue
        out.add(project_down(p, keep), w)
    return out


def join(A: WeightedPartitionSet, B: WeightedPartitionSet) -> WeightedPartitionSet:
    """Pairwise lift-and-meet with summed weights."""
    uni = tuple(sorted(set(A.universe) | set(B.universe)))
    out = WeightedPartitionSet(uni)
    if not A or not B:
        return out
    left = [(lift_up(p, uni).rep, w) for p, w in A] if A.universe != uni else [(p.rep, w) for p, w in A]
    right = [(lift_up(q, uni).rep, w) for q, w in B] if B.universe != uni else [(q.rep, w) for q, w in B]
    for r1, w1 in left:
        for r2, w2 in right:
            out.add(_meet(uni, r1, r2), w1 + w2)
    return out


def cut_rows(A: WeightedPartitionSet, order: list[Partition]) -> list[int]:
    """Rows of the cut matrix for ``order``, as column bitsets.

    Columns are the ``2**(|U|-1)`` bipartitions ``(V1, V2)`` with the first
    universe element in ``V1``; column ``c`` puts element ``k >= 1`` in ``V2``
    iff bit ``k-1`` of ``c`` is set.  An entry is 1 iff every block of the
    partition lies on one side.
    """
    uni = A.universe
    k = len(uni)
    ncols = 1 << (k - 1)
    pos = {x: i for i, x in enumerate(uni)}
    rows = []
    for p in order:
        groups: dict = {}
        for x, r in zip(uni, p.rep):
            groups[r] = groups.get(r, 0) | (1 << pos[x])
        # shift off the pivot so masks align with column bits
        masks = [g >> 1 for g in groups.values()]
        pivot_block = groups[p.rep[0]] >> 1
        row = 0
        for c in range(ncols):
            if c & pivot_block:
                continue
            if all((c & m) == 0 or (c & m) == m for m in masks):
                row |= 1 << c
        rows.append(row)
    return rows


def reduce(A: WeightedPartitionSet) -> WeightedPartitionSet:
    """Representative subset via a weight-ordered basis of the cut matrix."""
    if len(A) <= 1:
        return WeightedPartitionSet(A.universe, dict(A.entries))
    if not A.universe:
        p, w = min(A, key=lambda e: e[1])
        return WeightedPartitionSet((), {p: w})
    order = sorted(A.entries, key=lambda p: (A.entries[p], p.rep))
    basis: dict[int, int] = {}  # pivot bit -> reduced row
    kept = {}
    for p, row in zip(order, cut_rows(A, order)):
        while row:
            top = row.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = row
                kept[p] = A.entries[p]
                break
            row ^= b
    return WeightedPartitionSet(A.universe, kept)
