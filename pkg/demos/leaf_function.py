"""Maximum number of leaves of an induced subtree, size by size.

Compares the solver-backed leaf map with brute-force enumeration on a small
random graph, and shows the same thing through the command line.
"""
import random
import subprocess
import sys
import tempfile

from rlis import leaf_function
from rlis.cli import SolveRequest, run_leafmap
from rlis.generators import gnp

rng = random.Random(5)
G = gnp(11, 0.3, rng)
print(G)
report = run_leafmap(SolveRequest(G, mode="leafmap"))
print("solver", report["solver"], "in", report["millis"], "ms")
print("leafmap :", report["leafmap"])
print("by brute:", leaf_function(G))

with tempfile.NamedTemporaryFile("w", suffix=".gr", delete=False) as fh:
    fh.write(f"p tw {G.n} {G.m}\n")
    fh.writelines(f"{u + 1} {v + 1}\n" for u, v in G.edges())
out = subprocess.run([sys.executable, "-m", "rlis.cli", "leafmap", "--graph", fh.name, "--json"],
                     capture_output=True, text=True)
print("cli     :", out.stdout.strip())
