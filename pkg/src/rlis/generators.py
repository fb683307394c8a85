"""Random graph families used by tests, benchmarks and the demos."""

from __future__ import annotations

import itertools
import random

from .graph import Graph
from .treedec import TreeDecomposition


def gnp(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])


def random_ktree_with_decomposition(n: int, k: int, rng: random.Random) -> tuple[Graph, TreeDecomposition]:
    """Random k-tree and its width-k decomposition (one bag per (k+1)-clique).

    Graphs with ``n <= k + 1`` vertices are complete.
    """
    if n <= k + 1:
        return Graph(n, itertools.combinations(range(n), 2)), TreeDecomposition([frozenset(range(n))])
    edges = set(itertools.combinations(range(k + 1), 2))
    bags = [frozenset(range(k + 1))]
    tree = []
    for v in range(k + 1, n):
        host = rng.randrange(len(bags))
        base = sorted(bags[host])
        base.remove(rng.choice(base))
        edges.update((u, v) for u in base)
        bags.append(frozenset(base) | {v})
        tree.append((host, len(bags) - 1))
    return Graph(n, edges), TreeDecomposition(bags, tree)


def random_ktree(n: int, k: int, rng: random.Random) -> Graph:
    return random_ktree_with_decomposition(n, k, rng)[0]


def random_partial_ktree(n: int, k: int, keep: float, rng: random.Random) -> tuple[Graph, TreeDecomposition]:
    """Subgraph of a random k-tree keeping each edge with probability ``keep``;
    the k-tree decomposition stays valid for it."""
    G, D = random_ktree_with_decomposition(n, k, rng)
    return Graph(n, [e for e in G.edges() if rng.random() < keep]), D


def random_interval_graph(n: int, rng: random.Random, max_length: float | None = None) -> Graph:
    """Intersection graph of ``n`` random intervals with left ends in ``[0, n)``.

    Lengths are uniform in ``[0, max_length]``; by default ``max_length`` is
    drawn so that small instances range from sparse to dense.
    """
    if max_length is None:
        max_length = rng.uniform(0.5, 0.6 * n + 1)
    iv = []
    for _ in range(n):
        x = rng.uniform(0, n)
        iv.append((x, x + rng.uniform(0, max_length)))
    edges = [(u, v) for u, v in itertools.combinations(range(n), 2)
             if iv[u][0] <= iv[v][1] and iv[v][0] <= iv[u][1]]
    return Graph(n, edges)


def random_chordal(n: int, rng: random.Random) -> Graph:
    """A random k-tree (k in 1..3) or a random interval graph, evenly."""
    if rng.random() < 0.5:
        return random_ktree(n, rng.choice((1, 2, 3)), rng)
    return random_interval_graph(n, rng)


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def path(n: int) -> Graph:
    return Graph(n, [(v, v + 1) for v in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(v, (v + 1) % n) for v in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))
