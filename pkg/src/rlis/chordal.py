"""Polynomial dynamic program for chordal graphs over a clique tree.

Every bag of a clique tree is a clique, so an induced subtree meets a bag in
at most two vertices.  A table entry is keyed by ``(S, d, i)``:

* ``S``: the (sorted) tuple of at most two bag vertices used by the partial
  subtree,
* ``d``: their degrees in the partial subtree, capped at 2, aligned with ``S``,
* ``i``: the number of vertices of the partial subtree,

and maps to the largest number of already-forgotten vertices that are leaves.
Missing keys are infeasible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NotChordalError
from .graph import Graph, bits, component_of, induced_subgraph
from .treedec import (FORGET, INTRODUCE, INTRODUCE_EDGE, JOIN, LEAF, BAG_COMPLETE,
                      NiceDecomposition, chordal_clique_tree, chordless_cycle, is_chordal,
                      make_nice)

__all__ = [
    "ChordalResult",
    "transfer_leaf",
    "transfer_introduce",
    "transfer_forget",
    "transfer_join",
    "chordal_tables",
    "chordal_profile",
    "solve_chordal",
    "check_parameters",
]

# subtracted per shared vertex at a join: a vertex of a 2-element S sees the
# S-internal edge once in each child
JOIN_DEGREE_OVERLAP = 1


def check_parameters(G: Graph, v0: int, a: int, b: int) -> None:
    if not (isinstance(v0, int) and 0 <= v0 < G.n):
        raise DomainError(f"v0={v0!r} is not a vertex of the graph")
    if b < 3:
        raise DomainError("b must be at least 3")
    if not 1 <= a <= G.n:
        raise DomainError(f"a={a} must lie in [1, {G.n}]")


def _put(table, back, key, value, ptr):
    old = table.get(key)
    if old is None or value > old:
        table[key] = value
        if back is not None:
            back[key] = ptr


def transfer_leaf(a: int) -> dict:
    return {((), (), 0): 0}


def transfer_introduce(child: dict, v: int, a: int, back: dict | None = None) -> dict:
    """Introduce ``v`` into a clique bag: skip it, start a subtree at it, or
    hang it below the single bag vertex already in use."""
    out: dict = {}
    for key, val in child.items():
        S, d, i = key
        _put(out, back, key, val, ("skip", key))
        if not S and i == 0:
            _put(out, back, ((v,), (0,), 1), val, ("start", key))
        elif len(S) == 1 and i < a:
            u, du = S[0], min(d[0] + 1, 2)
            nk = ((u, v), (du, 1), i + 1) if u < v else ((v, u), (1, du), i + 1)
            _put(out, back, nk, val, ("attach", key))
    return out


def transfer_forget(child: dict, v: int, v0: int, back: dict | None = None) -> dict:
    """Forget ``v``: it is unused, internal, or a leaf; ``v0`` must be internal."""
    out: dict = {}
    for key, val in child.items():
        S, d, i = key
        if v not in S:
            if v != v0:
                _put(out, back, key, val, ("unused", key))
            continue
        k = S.index(v)
        nk = (S[:k] + S[k + 1:], d[:k] + d[k + 1:], i)
        if d[k] == 2:
            _put(out, back, nk, val, ("internal", key))
        elif d[k] == 1 and v != v0:
            _put(out, back, nk, val + 1, ("leaf", key))
    return out


def transfer_join(left: dict, right: dict, a: int, back: dict | None = None) -> dict:
    """Glue partial subtrees that meet the bag in the same ``S``.

    With ``S`` empty one side has to be empty, otherwise the union is
    disconnected.
    """
    by_s: dict = {}
    for key, val in right.items():
        by_s.setdefault(key[0], []).append((key, val))
    out: dict = {}
    for lkey, lval in left.items():
        S, d1, i1 = lkey
        partners = by_s.get(S)
        if not partners:
            continue
        s = len(S)
        overlap = JOIN_DEGREE_OVERLAP * (s - 1) if s else 0
        for rkey, rval in partners:
            _, d2, i2 = rkey
            if not S and i1 and i2:
                continue
            i = i1 + i2 - s
            if i > a:
                continue
            d = tuple(min(2, x + y - overlap) for x, y in zip(d1, d2))
            _put(out, back, (S, d, i), lval + rval, ("join", lkey, rkey))
    return out


def chordal_tables(N: NiceDecomposition, v0: int, a: int, keep: bool = False):
    """Evaluate all node tables bottom-up.

    Returns the root table, or with ``keep`` the lists of tables and
    back-pointer maps for every node.
    """
    tables: list = [None] * len(N)
    backs: list = [None] * len(N)
    for t in range(len(N)):
        kind, item, ch = N.kind[t], N.item[t], N.children[t]
        back = {} if keep else None
        if kind == LEAF:
            tab = transfer_leaf(a)
        elif kind == INTRODUCE:
            tab = transfer_introduce(tables[ch[0]], item, a, back)
        elif kind == FORGET:
            tab = transfer_forget(tables[ch[0]], item, v0, back)
        elif kind == INTRODUCE_EDGE:
            tab = dict(tables[ch[0]])
            if keep:
                back = {k: ("skip", k) for k in tab}
        elif kind == JOIN:
            tab = transfer_join(tables[ch[0]], tables[ch[1]], a, back)
        else:
            raise DomainError(f"unknown node kind {kind!r}")
        tables[t] = tab
        backs[t] = back
        if not keep:
            for c in ch:
                tables[c] = None
    if keep:
        return tables, backs
    return tables[N.root]


def _witness(N: NiceDecomposition, tables, backs, key) -> list[int]:
    out = []
    stack = [(N.root, key)]
    while stack:
        t, k = stack.pop()
        kind = N.kind[t]
        if kind == LEAF:
            continue
        ptr = backs[t][k]
        ch = N.children[t]
        if kind == JOIN:
            stack.append((ch[0], ptr[1]))
            stack.append((ch[1], ptr[2]))
            continue
        if kind == INTRODUCE and ptr[0] in ("start", "attach"):
            out.append(N.item[t])
        stack.append((ch[0], ptr[1]))
    return sorted(set(out))


@dataclass
class ChordalResult:
    verdict: bool
    witness: list[int] | None
    width: int
    leaves: int | None = None


def _prepare(G: Graph, v0: int):
    if not is_chordal(G):
        raise NotChordalError(chordless_cycle(G))
    comp = component_of(G, v0)
    keep = list(bits(comp))
    H = induced_subgraph(G, comp)
    D = chordal_clique_tree(H)
    N = make_nice(H, D, BAG_COMPLETE)
    return H, keep, keep.index(v0), N, D.width


def chordal_profile(G: Graph, v0: int, max_size: int | None = None) -> dict[int, int]:
    """Map size -> max leaves of an induced subtree with ``v0`` internal.

    One table evaluation answers every size up to ``max_size``.
    """
    if not 0 <= v0 < G.n:
        raise DomainError(f"v0={v0!r} is not a vertex of the graph")
    H, _, h0, N, _ = _prepare(G, v0)
    a = H.n if max_size is None else min(max_size, H.n)
    root = chordal_tables(N, h0, a)
    return {i: val for (S, d, i), val in sorted(root.items(), key=lambda kv: kv[0][2]) if i >= 1}


def solve_chordal(G: Graph, v0: int, a: int, b: int, want_witness: bool = False) -> ChordalResult:
    """Decide whether ``G`` has an induced subtree on exactly ``a`` vertices
    with at least ``b`` leaves and ``v0`` internal.

    Raises :class:`~rlis.errors.NotChordalError` on non-chordal input and
    :class:`~rlis.errors.DomainError` for ``b < 3`` or a bad ``v0``/``a``.
    """
    check_parameters(G, v0, a, b)
    H, keep, h0, N, width = _prepare(G, v0)
    if a < 4 or a > H.n:
        # a tree with three leaves has at least four vertices
        return ChordalResult(False, None, width)
    if want_witness:
        tables, backs = chordal_tables(N, h0, a, keep=True)
        root = tables[N.root]
    else:
        root = chordal_tables(N, h0, a)
    key = ((), (), a)
    best = root.get(key)
    if best is None or best < b:
        return ChordalResult(False, None, width, best)
    witness = None
    if want_witness:
        witness = [keep[v] for v in _witness(N, tables, backs, key)]
    return ChordalResult(True, witness, width, best)
