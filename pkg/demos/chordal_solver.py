"""Induced subtrees with many leaves in a chordal graph.

Builds a small interval graph, asks for a subtree of a given size with a
prescribed internal vertex, prints the certificate and checks it.
"""
import random

from rlis import chordal_clique_tree, chordal_profile, solve_chordal
from rlis.generators import random_interval_graph
from rlis.graph import classify_mask, mask_of

rng = random.Random(3)
G = random_interval_graph(14, rng, max_length=4)
hub = max(range(G.n), key=G.degree)
print(G, "hub", hub, "degree", G.degree(hub))

# one table pass gives the best leaf count for every size
profile = chordal_profile(G, hub)
print("size -> max leaves with the hub internal:", profile)

a = max(profile)
b = profile[a]
res = solve_chordal(G, hub, a, b, want_witness=True)
print(f"a={a} b={b}:", "yes" if res.verdict else "no", "witness", res.witness)

shape = classify_mask(G, mask_of(res.witness))
print("witness is a tree with", shape.leaf_count, "leaves")

# every clique of the clique tree meets the witness in at most two vertices
D = chordal_clique_tree(G)
print("max overlap with a bag:", max(len(set(res.witness) & bag) for bag in D.bags))

print("asking for one more leaf:", solve_chordal(G, hub, a, b + 1).verdict)
