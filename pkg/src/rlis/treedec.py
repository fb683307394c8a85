"""Tree decompositions: construction, validation, nicification and PACE I/O.

Bags are ``frozenset`` of internal vertex ids.  A :class:`NiceDecomposition`
stores its nodes in a flat list whose order is bottom-up (every child has a
smaller index than its parent), so the solvers can evaluate tables with a
single forward loop and no recursion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import DomainError, NotChordalError, ParseError
from .graph import Graph, bits

__all__ = [
    "TreeDecomposition",
    "NiceDecomposition",
    "Violation",
    "LEAF",
    "INTRODUCE",
    "FORGET",
    "INTRODUCE_EDGE",
    "JOIN",
    "BAG_COMPLETE",
    "EXPLICIT_EDGES",
    "validate_decomposition",
    "chordal_clique_tree",
    "is_chordal",
    "mcs_order",
    "chordless_cycle",
    "decomposition_from_ordering",
    "heuristic_decomposition",
    "compact",
    "make_nice",
    "check_nice",
    "pinned_nice",
    "format_td",
    "parse_td",
]

LEAF = "leaf"
INTRODUCE = "introduce"
FORGET = "forget"
INTRODUCE_EDGE = "introduce-edge"
JOIN = "join"

BAG_COMPLETE = "bag-complete"
EXPLICIT_EDGES = "explicit-edge-nodes"


@dataclass
class TreeDecomposition:
    """Bags indexed ``0..len(bags)-1`` and the tree edges between them."""

    bags: list[frozenset]
    edges: list[tuple[int, int]] = field(default_factory=list)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def __len__(self):
        return len(self.bags)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.bags]
        for x, y in self.edges:
            adj[x].append(y)
            adj[y].append(x)
        return adj


@dataclass(frozen=True)
class Violation:
    """First violated decomposition axiom and a witness for it."""

    axiom: str
    witness: object

    def __str__(self):
        return f"{self.axiom} violated: {self.witness}"


def _tree_path(adj: list[list[int]], x: int, y: int) -> list[int]:
    prev = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for w in adj[u]:
            if w not in prev:
                prev[w] = u
                queue.append(w)
    path = [y]
    while path[-1] != x:
        path.append(prev[path[-1]])
    return path[::-1]


def validate_decomposition(G: Graph, D: TreeDecomposition) -> Violation | None:
    """Check the tree-decomposition axioms; return the first violation or None."""
    k = len(D.bags)
    if k == 0:
        if G.n:
            return Violation("vertex-coverage", 0)
        return None
    for t, bag in enumerate(D.bags):
        bad = [v for v in bag if not (isinstance(v, int) and 0 <= v < G.n)]
        if bad:
            return Violation("bag-range", (t, bad[0]))
    adj = D.adjacency()
    if len(D.edges) != k - 1 or any(not (0 <= x < k and 0 <= y < k) or x == y for x, y in D.edges):
        return Violation("tree", "edge count or endpoints")
    seen = {0}
    stack = [0]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    if len(seen) != k:
        return Violation("tree", "disconnected")

    where: list[list[int]] = [[] for _ in range(G.n)]
    for t, bag in enumerate(D.bags):
        for v in bag:
            where[v].append(t)
    for v in range(G.n):
        if not where[v]:
            return Violation("vertex-coverage", v)
    for u, v in G.edges():
        if not set(where[u]).intersection(where[v]):
            return Violation("edge-coverage", (u, v))
    for v in range(G.n):
        nodes = set(where[v])
        start = where[v][0]
        reach = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w in nodes and w not in reach:
                    reach.add(w)
                    stack.append(w)
        if len(reach) != len(nodes):
            y = min(nodes - reach)
            path = _tree_path(adj, start, y)
            z = next(t for t in path if v not in D.bags[t])
            return Violation("running-intersection", (v, (start, z, y)))
    return None


# -- elimination orderings ----------------------------------------------------


def decomposition_from_ordering(G: Graph, order: list[int]) -> TreeDecomposition:
    """Decomposition of the elimination game played along ``order``.

    Vertex ``v`` gets the bag ``{v} ∪ N(v)`` in the filled graph at the time it
    is eliminated; its parent is the neighbour eliminated next.
    """
    if sorted(order) != list(range(G.n)):
        raise DomainError("order must be a permutation of the vertices")
    if G.n == 0:
        return TreeDecomposition([frozenset()], [])
    adj = list(G.adj)
    rank = {v: k for k, v in enumerate(order)}
    alive = G.all_mask
    bags = []
    parent = {}
    for v in order:
        nb = adj[v] & alive & ~(1 << v)
        bags.append(frozenset(bits(nb)) | {v})
        for u in bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
        if nb:
            parent[v] = min(bits(nb), key=rank.__getitem__)
    edges = []
    roots = []
    for v in order:
        if v in parent:
            edges.append((rank[v], rank[parent[v]]))
        else:
            roots.append(rank[v])
    # components of the elimination forest share no vertex, so chaining is safe
    edges.extend(zip(roots, roots[1:]))
    return compact(TreeDecomposition(bags, edges))


def compact(D: TreeDecomposition) -> TreeDecomposition:
    """Contract every tree edge whose one bag is contained in the other."""
    adj = [set(a) for a in D.adjacency()]
    bags = list(D.bags)
    alive = set(range(len(bags)))
    work = deque(D.edges)
    while work:
        x, y = work.popleft()
        if x not in alive or y not in alive or y not in adj[x]:
            continue
        if bags[x] <= bags[y]:
            drop, keep = x, y
        elif bags[y] <= bags[x]:
            drop, keep = y, x
        else:
            continue
        for w in adj[drop]:
            if w != keep:
                adj[w].discard(drop)
                adj[w].add(keep)
                adj[keep].add(w)
                work.append((keep, w))
        adj[keep].discard(drop)
        adj[drop] = set()
        alive.discard(drop)
    index = {t: k for k, t in enumerate(sorted(alive))}
    new_edges = sorted({(min(index[x], index[y]), max(index[x], index[y])) for x in alive for y in adj[x]})
    return TreeDecomposition([bags[t] for t in sorted(alive)], new_edges)


def heuristic_decomposition(G: Graph, method: str = "min-fill") -> TreeDecomposition:
    """Greedy elimination-ordering decomposition (``min-degree`` or ``min-fill``)."""
    if method not in ("min-degree", "min-fill"):
        raise DomainError(f"unknown heuristic {method!r}")
    adj = list(G.adj)
    alive = G.all_mask
    order = []
    for _ in range(G.n):
        best = None
        for v in bits(alive):
            nb = adj[v] & alive
            deg = nb.bit_count()
            if method == "min-degree":
                key = (deg, v)
            else:
                missing = 0
                for u in bits(nb):
                    missing += (nb & ~adj[u] & ~(1 << u)).bit_count()
                key = (missing // 2, deg, v)
            if best is None or key < best[0]:
                best = (key, v)
        v = best[1]
        nb = adj[v] & alive
        for u in bits(nb):
            adj[u] |= nb & ~(1 << u)
        alive &= ~(1 << v)
        order.append(v)
    return decomposition_from_ordering(G, order)


def mcs_order(G: Graph) -> list[int]:
    """Maximum cardinality search visiting order (ties to the smallest id)."""
    weight = [0] * G.n
    done = [False] * G.n
    visit = []
    for _ in range(G.n):
        v = max((u for u in range(G.n) if not done[u]), key=lambda u: (weight[u], -u))
        done[v] = True
        visit.append(v)
        for u in bits(G.adj[v]):
            if not done[u]:
                weight[u] += 1
    return visit


def _peo_violation(G: Graph, visit: list[int]):
    """Vertex whose earlier-visited neighbours are not a clique, with a
    nonadjacent pair among them; ``None`` if ``visit`` reversed is a PEO."""
    before = 0
    for v in visit:
        earlier = G.adj[v] & before
        for u in bits(earlier):
            missing = earlier & ~G.adj[u] & ~(1 << u)
            if missing:
                return v, u, (missing & -missing).bit_length() - 1
        before |= 1 << v
    return None


def chordless_cycle(G: Graph) -> list[int] | None:
    """Some induced cycle of length at least four, or None if G is chordal."""
    for v in range(G.n):
        nb = G.neighbors(v)
        for a in range(len(nb)):
            for b in range(a + 1, len(nb)):
                u, w = nb[a], nb[b]
                if G.has_edge(u, w):
                    continue
                allowed = G.all_mask & ~(G.adj[v] | 1 << v) | (1 << u) | (1 << w)
                prev = {u: None}
                queue = deque([u])
                while queue and w not in prev:
                    x = queue.popleft()
                    for y in bits(G.adj[x] & allowed):
                        if y not in prev:
                            prev[y] = x
                            queue.append(y)
                if w in prev:
                    path = [w]
                    while path[-1] != u:
                        path.append(prev[path[-1]])
                    return [v] + path[::-1]
    return None


def is_chordal(G: Graph) -> bool:
    return _peo_violation(G, mcs_order(G)) is None


def chordal_clique_tree(G: Graph) -> TreeDecomposition:
    """Clique tree of a chordal graph from an MCS elimination ordering.

    Raises :class:`NotChordalError` carrying a chordless cycle otherwise.
    """
    visit = mcs_order(G)
    if _peo_violation(G, visit) is not None:
        raise NotChordalError(chordless_cycle(G))
    return decomposition_from_ordering(G, visit[::-1])


# -- nice decompositions ------------------------------------------------------


class NiceDecomposition:
    """Rooted binary decomposition with typed nodes, stored bottom-up.

    ``kind[t]`` is one of :data:`LEAF`, :data:`INTRODUCE`, :data:`FORGET`,
    :data:`INTRODUCE_EDGE` and :data:`JOIN`; ``item[t]`` is the introduced or
    forgotten vertex, the introduced edge, or ``None``.
    """

    def __init__(self, convention: str, pin: int | None = None):
        self.kind: list[str] = []
        self.item: list = []
        self.bags: list[frozenset] = []
        self.children: list[tuple[int, ...]] = []
        self.convention = convention
        self.pin = pin

    @property
    def root(self) -> int:
        return len(self.kind) - 1

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def __len__(self):
        return len(self.kind)

    def _add(self, kind, item, bag, children=()) -> int:
        self.kind.append(kind)
        self.item.append(item)
        self.bags.append(frozenset(bag))
        self.children.append(tuple(children))
        return len(self.kind) - 1

    def as_tree_decomposition(self) -> TreeDecomposition:
        edges = [(c, t) for t, ch in enumerate(self.children) for c in ch]
        return TreeDecomposition(list(self.bags), edges)

    def to_json(self, labels=None) -> dict:
        lab = (lambda v: v) if labels is None else labels.__getitem__
        nodes = []
        for t in range(len(self)):
            node = {"id": t, "kind": self.kind[t], "bag": sorted(lab(v) for v in self.bags[t]),
                    "children": list(self.children[t])}
            item = self.item[t]
            if self.kind[t] == INTRODUCE_EDGE:
                node["edge"] = [lab(item[0]), lab(item[1])]
            elif item is not None:
                node["vertex"] = lab(item)
            nodes.append(node)
        return {"convention": self.convention, "pin": None if self.pin is None else lab(self.pin),
                "root": self.root, "nodes": nodes}


def _rooted(D: TreeDecomposition, root: int):
    adj = D.adjacency()
    order = [root]
    parent = {root: None}
    for x in order:
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
    children = {x: [] for x in order}
    for x in order[1:]:
        children[parent[x]].append(x)
    return order, children


def make_nice(G: Graph, D: TreeDecomposition, convention: str = BAG_COMPLETE,
              pin: int | None = None, root: int = 0) -> NiceDecomposition:
    """Turn ``D`` into a nice decomposition with empty root and leaf bags.

    Vertices are introduced in ascending order and forgotten in ascending
    order.  With ``pin`` the vertex is added to every bag, introduced first
    above each leaf and forgotten last below the root.  Under
    :data:`EXPLICIT_EDGES` every edge gets one introduce-edge node placed just
    below the forget of whichever endpoint leaves first.
    """
    if convention not in (BAG_COMPLETE, EXPLICIT_EDGES):
        raise DomainError(f"unknown edge convention {convention!r}")
    if pin is not None and not (isinstance(pin, int) and 0 <= pin < G.n):
        raise DomainError(f"pin vertex {pin!r} is not a vertex of the graph")
    if not D.bags:
        D = TreeDecomposition([frozenset()], [])
    bags = list(D.bags)
    if pin is not None:
        bags = [b | {pin} for b in bags]
    explicit = convention == EXPLICIT_EDGES
    N = NiceDecomposition(convention, pin)

    def intro_order(vs):
        vs = sorted(vs)
        if pin in vs:
            vs.remove(pin)
            vs.insert(0, pin)
        return vs

    def forget_order(vs):
        vs = sorted(vs)
        if pin in vs:
            vs.remove(pin)
            vs.append(pin)
        return vs

    def forget(top, v):
        bag = N.bags[top]
        if explicit:
            for w in sorted(bits(G.adj[v])):
                if w in bag:
                    top = N._add(INTRODUCE_EDGE, (min(v, w), max(v, w)), bag, (top,))
        return N._add(FORGET, v, bag - {v}, (top,))

    def move(top, target):
        bag = N.bags[top]
        for v in forget_order(bag - target):
            top = forget(top, v)
        for v in intro_order(target - N.bags[top]):
            top = N._add(INTRODUCE, v, N.bags[top] | {v}, (top,))
        return top

    order, children = _rooted(D, root)
    top_of = {}
    for x in reversed(order):
        target = bags[x]
        if not children[x]:
            top_of[x] = move(N._add(LEAF, None, ()), target)
            continue
        tops = [move(top_of[c], target) for c in children[x]]
        acc = tops[0]
        for t in tops[1:]:
            acc = N._add(JOIN, None, target, (acc, t))
        top_of[x] = acc
    move(top_of[root], frozenset())
    return N


def pinned_nice(G: Graph, v0: int, D: TreeDecomposition | None = None,
                method: str = "min-fill") -> NiceDecomposition:
    """Bag-complete nice decomposition with ``v0`` in every nonempty bag."""
    if D is None:
        D = heuristic_decomposition(G, method)
    return make_nice(G, D, BAG_COMPLETE, pin=v0)


def check_nice(G: Graph, N: NiceDecomposition) -> list[str]:
    """Structural problems of ``N`` as a nice decomposition of ``G`` (empty if none)."""
    problems = []
    k = len(N)
    if k == 0:
        return ["no nodes"]
    explicit = N.convention == EXPLICIT_EDGES
    scope = [0] * k
    edges_below: list[set] = [set() for _ in range(k)] if explicit else []
    introduced: dict = {}
    for t in range(k):
        kind, item, bag, ch = N.kind[t], N.item[t], N.bags[t], N.children[t]
        if any(c >= t for c in ch):
            problems.append(f"node {t}: child index not below parent")
            continue
        if kind == LEAF:
            if ch or bag:
                problems.append(f"node {t}: leaf must have no children and an empty bag")
        elif kind == JOIN:
            if len(ch) != 2 or any(N.bags[c] != bag for c in ch):
                problems.append(f"node {t}: join children must share its bag")
            elif explicit and edges_below[ch[0]] & edges_below[ch[1]]:
                problems.append(f"node {t}: join children share an edge")
        elif len(ch) != 1:
            problems.append(f"node {t}: {kind} node needs exactly one child")
            continue
        else:
            cbag = N.bags[ch[0]]
            if kind == INTRODUCE:
                if item in cbag or bag != cbag | {item}:
                    problems.append(f"node {t}: bad introduce of {item}")
                elif scope[ch[0]] >> item & 1:
                    problems.append(f"node {t}: vertex {item} introduced twice in one branch")
            elif kind == FORGET:
                if item not in cbag or bag != cbag - {item}:
                    problems.append(f"node {t}: bad forget of {item}")
            elif kind == INTRODUCE_EDGE:
                u, v = item
                if not explicit:
                    problems.append(f"node {t}: introduce-edge node under {N.convention}")
                elif bag != cbag or u not in bag or v not in bag or not G.has_edge(u, v):
                    problems.append(f"node {t}: bad introduce-edge {item}")
                introduced[(u, v)] = introduced.get((u, v), 0) + 1
            else:
                problems.append(f"node {t}: unknown kind {kind!r}")
        s = 0
        for c in ch:
            s |= scope[c]
        if kind == INTRODUCE and isinstance(item, int):
            s |= 1 << item
        scope[t] = s
        if explicit:
            e = set()
            for c in ch:
                e |= edges_below[c]
            if kind == INTRODUCE_EDGE:
                e.add(item)
            edges_below[t] = e
        if N.pin is not None and bag and N.pin not in bag:
            problems.append(f"node {t}: pinned vertex {N.pin} missing from nonempty bag")
    if N.bags[N.root]:
        problems.append("root bag is not empty")
    if scope[N.root] != G.all_mask:
        problems.append("root scope is not the whole vertex set")
    if explicit:
        for u, v in G.edges():
            if introduced.get((u, v), 0) != 1:
                problems.append(f"edge {(u, v)} introduced {introduced.get((u, v), 0)} times")
    reachable = {N.root}
    stack = [N.root]
    while stack:
        for c in N.children[stack.pop()]:
            if c not in reachable:
                reachable.add(c)
                stack.append(c)
    if len(reachable) != k:
        problems.append("some nodes are not below the root")
    bad = validate_decomposition(G, N.as_tree_decomposition())
    if bad is not None:
        problems.append(str(bad))
    return problems


# -- PACE .td -----------------------------------------------------------------


def format_td(D: TreeDecomposition, n: int) -> str:
    """PACE ``.td`` text; vertex ``v`` is written as ``v + 1``."""
    lines = [f"s td {len(D.bags)} {D.width + 1} {n}"]
    for t, bag in enumerate(D.bags):
        lines.append(" ".join(["b", str(t + 1)] + [str(v + 1) for v in sorted(bag)]))
    for x, y in D.edges:
        lines.append(f"{x + 1} {y + 1}")
    return "\n".join(lines) + "\n"


def parse_td(data: str | bytes, n: int | None = None) -> TreeDecomposition:
    """Read a PACE ``.td`` file.  ``n`` optionally cross-checks the vertex count."""
    if isinstance(data, bytes):
        data = data.decode()
    header = None
    bags: dict[int, frozenset] = {}
    edges = []
    for lineno, line in enumerate(data.splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] == "c":
            continue
        try:
            if parts[0] == "s":
                if header is not None or len(parts) != 5 or parts[1] != "td":
                    raise ParseError("malformed solution line", lineno)
                header = tuple(int(p) for p in parts[2:])
                if n is not None and header[2] != n:
                    raise ParseError(f"decomposition is for {header[2]} vertices, graph has {n}", lineno)
            elif header is None:
                raise ParseError("content before 's td' line", lineno)
            elif parts[0] == "b":
                if len(parts) < 2:
                    raise ParseError("bag line without id", lineno)
                t = int(parts[1])
                vs = [int(p) for p in parts[2:]]
                if not 1 <= t <= header[0] or t in bags:
                    raise ParseError(f"bad or repeated bag id {t}", lineno)
                if any(not 1 <= v <= header[2] for v in vs):
                    raise ParseError(f"bag {t} names a vertex outside 1..{header[2]}", lineno)
                bags[t] = frozenset(v - 1 for v in vs)
            else:
                if len(parts) != 2:
                    raise ParseError("tree edge needs two bag ids", lineno)
                x, y = int(parts[0]), int(parts[1])
                if not (1 <= x <= header[0] and 1 <= y <= header[0]):
                    raise ParseError("tree edge names an unknown bag", lineno)
                edges.append((x - 1, y - 1))
        except ValueError as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"expected integers in {line.strip()!r}", lineno) from None
    if header is None:
        raise ParseError("missing 's td' line")
    if len(bags) != header[0]:
        raise ParseError(f"header announces {header[0]} bags, found {len(bags)}")
    width = max((len(b) for b in bags.values()), default=0)
    if width != header[1]:
        raise ParseError(f"header announces bag size {header[1]}, largest bag has {width}")
    return TreeDecomposition([bags[t] for t in range(1, header[0] + 1)], edges)
