"""The treewidth solver on a graph that is not chordal.

A partial 3-tree comes with its own decomposition; pinning the internal
vertex into every bag costs one unit of width.
"""
import random

from rlis import oracle_rlis, pinned_nice, solve_treewidth, treewidth_profile
from rlis.generators import random_partial_ktree
from rlis.treedec import check_nice

rng = random.Random(11)
G, D = random_partial_ktree(16, 3, 0.7, rng)
v0 = max(range(G.n), key=G.degree)
N = pinned_nice(G, v0, D)
print(G, "decomposition width", D.width, "pinned nice width", N.width, "nodes", len(N))
assert check_nice(G, N) == []

prof = treewidth_profile(G, N, v0)
print("size -> max leaves:", prof)

for a in (5, 8, 11):
    b = prof.get(a, 3)
    r = solve_treewidth(G, N, v0, a, b)
    print(f"a={a:2d} b={b}: {'yes' if r.verdict else 'no ':3s}  oracle agrees: {r.verdict == oracle_rlis(G, v0, a, b)}")

# switching off the rank-based reduction changes table sizes, not answers
print("same profile without reduce:", treewidth_profile(G, N, v0, reduce=False) == prof)
