"""Simple undirected graphs over dense integer vertices.

Vertices are ``0..n-1``; vertex sets are plain ``int`` bitmasks so that the
dynamic programs can hash and intersect them cheaply.  External labels (for
instance the 1-based numbering of PACE files) are kept in ``Graph.labels``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError

__all__ = [
    "Graph",
    "TreeShape",
    "bits",
    "mask_of",
    "parse_graph",
    "induced_subgraph",
    "classify_tree",
    "classify_mask",
    "component_of",
]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    n : int
        Number of vertices, labelled ``0..n-1`` internally.
    edges : iterable of pairs
        Edges as pairs of internal vertex ids.  Duplicates collapse.
    labels : sequence, optional
        External label of every vertex; defaults to the internal ids.
    """

    __slots__ = ("n", "adj", "labels", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels: Sequence | None = None):
        if n < 0:
            raise DomainError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise DomainError(f"self-loop on vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        if labels is None:
            labels = range(n)
        labels = tuple(labels)
        if len(labels) != n:
            raise DomainError("one label per vertex is required")
        self.labels = labels
        self._m = sum(a.bit_count() for a in adj) // 2

    @property
    def m(self) -> int:
        return self._m

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def edge_count_within(self, mask: int) -> int:
        """Number of edges with both endpoints in ``mask``."""
        return sum((self.adj[v] & mask).bit_count() for v in bits(mask)) // 2

    def index_of(self, label) -> int:
        """Internal id of the vertex carrying external ``label``."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainError(f"no vertex labelled {label!r}") from None

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0].startswith(("c", "#", "%")):
            continue
        yield lineno, parts


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def parse_graph(data: str | bytes, format: str = "pace-gr") -> Graph:
    """Parse a graph from PACE ``.gr`` text or a plain edge list.

    PACE: header ``p tw <n> <m>`` followed by 1-based edges ``u v``; comment
    lines start with ``c``.  The resulting graph keeps the 1-based numbers as
    labels.

    Edge list: 0-based integer pairs, optionally preceded by a header line
    ``<n> <m>``.  A leading pair counts as the header exactly when it is
    followed by ``m`` edge lines.
    """
    if isinstance(data, bytes):
        data = data.decode()
    lines = list(_data_lines(data))
    if format == "pace-gr":
        return _parse_pace(lines)
    if format == "edge-list":
        return _parse_edge_list(lines)
    raise DomainError(f"unknown graph format {format!r}")


def _parse_pace(lines) -> Graph:
    if not lines:
        raise ParseError("missing 'p tw' header")
    lineno, head = lines[0]
    if len(head) != 4 or head[0] != "p" or head[1] != "tw":
        raise ParseError(f"malformed header {' '.join(head)!r}", lineno)
    n, m = _ints(head[2:], lineno)
    edges = []
    for lineno, parts in lines[1:]:
        if len(parts) != 2:
            raise ParseError(f"edge line needs two endpoints, got {len(parts)}", lineno)
        u, v = _ints(parts, lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"endpoint out of range 1..{n}", lineno)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
        edges.append((u - 1, v - 1))
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges but {len(edges)} were given")
    return Graph(n, edges, labels=range(1, n + 1))


def _parse_edge_list(lines) -> Graph:
    n = None
    if lines:
        lineno, head = lines[0]
        if len(head) == 2:
            hn, hm = _ints(head, lineno)
            if hm == len(lines) - 1:
                n = hn
                lines = lines[1:]
    edges = []
    top = -1
    for lineno, parts in lines:
        if len(parts) != 2:
            raise ParseError(f"edge line needs two endpoints, got {len(parts)}", lineno)
        u, v = _ints(parts, lineno)
        if u < 0 or v < 0 or (n is not None and (u >= n or v >= n)):
            raise ParseError("endpoint out of range", lineno)
        if u == v:
            raise ParseError(f"self-loop on vertex {u}", lineno)
        edges.append((u, v))
        top = max(top, u, v)
    if n is None:
        n = top + 1
    return Graph(n, edges)


def induced_subgraph(G: Graph, S: int | Iterable[int]) -> Graph:
    """The subgraph induced by ``S``, relabelled densely in increasing order.

    Labels of the result are the labels the vertices carry in ``G``.
    """
    mask = S if isinstance(S, int) else mask_of(S)
    if mask >> G.n:
        raise DomainError("vertex set is not contained in the graph")
    keep = list(bits(mask))
    index = {v: k for k, v in enumerate(keep)}
    edges = [(index[u], index[w]) for u in keep for w in bits(G.adj[u] & mask) if u < w]
    return Graph(len(keep), edges, labels=[G.labels[v] for v in keep])


@dataclass(frozen=True)
class TreeShape:
    """Leaf/internal split of a tree; ``None`` is used for non-trees."""

    leaves: int
    internals: int

    @property
    def leaf_count(self) -> int:
        return self.leaves.bit_count()


def component_of(G: Graph, v: int, within: int | None = None) -> int:
    """Bitmask of the connected component of ``v`` inside ``within``."""
    if within is None:
        within = G.all_mask
    seen = 1 << v
    frontier = seen
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= G.adj[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def classify_mask(G: Graph, mask: int) -> TreeShape | None:
    """Classify ``G[mask]``; returns ``None`` unless it is a tree."""
    if not mask:
        return None
    size = mask.bit_count()
    if G.edge_count_within(mask) != size - 1:
        return None
    first = (mask & -mask).bit_length() - 1
    if component_of(G, first, mask) != mask:
        return None
    leaves = internals = 0
    for v in bits(mask):
        d = (G.adj[v] & mask).bit_count()
        if d == 1:
            leaves |= 1 << v
        elif d >= 2:
            internals |= 1 << v
    return TreeShape(leaves, internals)


def classify_tree(G: Graph) -> TreeShape | None:
    """Return the leaf/internal split of ``G`` if it is a tree, else ``None``.

    The single vertex is a tree without leaves; a single edge has two.
    """
    return classify_mask(G, G.all_mask)
