"""Weighted partitions and the rank-based reduction.

All 15 partitions of a four-element set are reduced to a representative
subset; optimum values against every other partition are unchanged.
"""
from rlis import wpart
from rlis import wpart_reference as ref
from rlis.wpart import Partition

U = ("a", "b", "c", "d")
full = wpart.rmc(U, [(ref.from_sets(p, U), len(p)) for p in ref.all_partitions(U)])
print(len(full), "weighted partitions; weight = number of blocks")

small = wpart.reduce(full)
print("after reduce:", len(small), "kept (bound", 2 ** (len(U) - 1), ")")
for p, w in sorted(small, key=lambda e: (e[1], e[0])):
    print("  ", p.blocks(), w)

print("represents the full set:", ref.represents(small, full))

# the operators used by the dynamic program
A = wpart.rmc(("a", "b"), [(Partition.singletons(("a", "b")), 0)])
print("glue {b,c}:", wpart.glue({"b", "c"}, A))
print("project a :", wpart.project({"a"}, wpart.glue({"a", "b"}, A)))
