"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line.

Run directly (``python tests/test_acceptance.py``) or through pytest, which
prints the lines in its terminal summary.
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from conftest import ACCEPTANCE  # noqa: E402

from rlis import wpart  # noqa: E402
from rlis import wpart_reference as ref  # noqa: E402
from rlis.chordal import solve_chordal  # noqa: E402
from rlis.generators import (gnp, random_chordal, random_interval_graph, random_ktree,  # noqa: E402
                             random_partial_ktree)
from rlis.graph import bits, classify_mask, component_of, mask_of  # noqa: E402
from rlis.oracle import internal_profiles  # noqa: E402
from rlis.treedec import (BAG_COMPLETE, EXPLICIT_EDGES, check_nice, chordal_clique_tree,  # noqa: E402
                          heuristic_decomposition, is_chordal, make_nice, pinned_nice,
                          validate_decomposition)
from rlis.twdp import solve_treewidth  # noqa: E402
from rlis.wpart import Partition  # noqa: E402

CHORDAL_WITNESSES: list = []


def record(number, name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {name} ({detail})"
    ACCEPTANCE.append(line)
    print(line)
    return ok


def sweep(G):
    for v0 in range(G.n):
        for a in range(1, G.n + 1):
            for b in range(3, max(a, 3) + 1):
                yield v0, a, b


def oracle_verdict(profiles, v0, a, b):
    return profiles[v0].get(a, -1) >= b


def chordal_graphs(count, seed):
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(1, 12)
        if k % 2:
            out.append(random_ktree(n, rng.choice((1, 2, 3)), rng))
        else:
            out.append(random_interval_graph(n, rng))
    return out


# -- 1 --------------------------------------------------------------------------------------

def test_criterion_1_chordal_oracle():
    checks = bad = 0
    CHORDAL_WITNESSES.clear()
    for G in chordal_graphs(200, 1):
        profiles = internal_profiles(G)
        for v0, a, b in sweep(G):
            res = solve_chordal(G, v0, a, b, want_witness=True)
            checks += 1
            if res.verdict != oracle_verdict(profiles, v0, a, b):
                bad += 1
            if res.verdict:
                CHORDAL_WITNESSES.append((G, v0, a, b, res.witness))
    ok = record(1, "chordal solver = oracle", bad == 0,
                f"{checks} instances on 200 graphs, {bad} mismatches")
    assert ok


# -- 2 --------------------------------------------------------------------------------------

def test_criterion_2_treewidth_oracle():
    rng = random.Random(2)
    checks = bad = 0
    for k in range(200):
        G = gnp(rng.randint(1, 10), (0.2, 0.35, 0.5)[k % 3], rng)
        profiles = internal_profiles(G)
        D = heuristic_decomposition(G, ("min-fill", "min-degree")[k % 2])
        nice = {}
        for v0, a, b in sweep(G):
            N = nice.get(v0) or nice.setdefault(v0, pinned_nice(G, v0, D))
            checks += 1
            if solve_treewidth(G, N, v0, a, b).verdict != oracle_verdict(profiles, v0, a, b):
                bad += 1
    ok = record(2, "treewidth solver = oracle", bad == 0,
                f"{checks} instances on 200 G(n,p) graphs, {bad} mismatches")
    assert ok


# -- 3 --------------------------------------------------------------------------------------

def test_criterion_3_cross_solver():
    checks = bad = 0
    for G in chordal_graphs(100, 3):
        D = heuristic_decomposition(G)
        nice = {}
        for v0, a, b in sweep(G):
            N = nice.get(v0) or nice.setdefault(v0, pinned_nice(G, v0, D))
            checks += 1
            if solve_chordal(G, v0, a, b).verdict != solve_treewidth(G, N, v0, a, b).verdict:
                bad += 1
    ok = record(3, "chordal solver = treewidth solver", bad == 0,
                f"{checks} instances on 100 chordal graphs, {bad} disagreements")
    assert ok


# -- 4 --------------------------------------------------------------------------------------

def random_partition(U, rng):
    blocks: dict = {}
    for x in U:
        blocks.setdefault(rng.randrange(len(U)), []).append(x)
    return Partition.from_blocks(blocks.values(), U)


def test_criterion_4_reduce():
    rng = random.Random(4)
    bad = 0
    largest = 0
    for _ in range(500):
        U = tuple(range(rng.randint(0, 5)))
        A = wpart.rmc(U, [(random_partition(U, rng), rng.randint(0, 9)) for _ in range(rng.randint(0, 200))])
        R = wpart.reduce(A)
        largest = max(largest, len(A))
        subset = all(p in A and A.entries[p] == w for p, w in R)
        bound = len(R) <= (2 ** (len(U) - 1) if U else 1)
        kept = all(ref.opt(ref.from_sets(q, U), R) == ref.opt(ref.from_sets(q, U), A)
                   for q in ref.all_partitions(U))
        bad += not (subset and bound and kept)
    ok = record(4, "reduce subset/size/opt", bad == 0, f"500 sets, up to {largest} distinct entries, {bad} failures")
    assert ok


# -- 5 --------------------------------------------------------------------------------------

def test_criterion_5_operator_oracles():
    rng = random.Random(5)
    bad = 0
    for _ in range(1000):
        U = tuple("abcde"[: rng.randint(0, 5)])
        pairs = [(random_partition(U, rng), rng.randint(0, 9)) for _ in range(rng.randint(0, 10))]
        A = wpart.rmc(U, pairs)
        B = wpart.rmc(U, [(random_partition(U, rng), rng.randint(0, 9)) for _ in range(rng.randint(0, 10))])
        nA, nB = ref.as_naive(A), ref.as_naive(B)
        checks = [
            ref.as_naive(A) == ref.naive_rmc({(ref.to_sets(p), w) for p, w in pairs}),
            ref.as_naive(wpart.union(A, B)) == ref.naive_union(nA, nB),
        ]
        X = list("xyz"[: rng.randint(0, 2)])
        checks.append(ref.as_naive(wpart.ins(X, A)) == ref.naive_ins(X, nA, U))
        w = rng.randint(0, 9)
        checks.append(ref.as_naive(wpart.shift(w, A)) == ref.naive_shift(w, nA))
        S = rng.sample(list(U) + ["x", "y"], rng.randint(0, min(3, len(U) + 2)))
        checks.append(ref.as_naive(wpart.glue(S, A)) == ref.naive_glue(S, nA, U))
        Xp = rng.sample(list(U), rng.randint(0, len(U)))
        checks.append(ref.as_naive(wpart.project(Xp, A)) == ref.naive_project(Xp, nA, U))
        U2 = tuple(x for x in U if rng.random() < 0.5) + ("f",)
        C = wpart.rmc(U2, [(random_partition(U2, rng), rng.randint(0, 9)) for _ in range(rng.randint(0, 8))])
        checks.append(ref.as_naive(wpart.join(A, C)) == ref.naive_join(nA, ref.as_naive(C), U, U2))
        bad += not all(checks)
    ok = record(5, "operators = naive definitions", bad == 0, f"1000 inputs x 7 operators, {bad} failures")
    assert ok


# -- 6 --------------------------------------------------------------------------------------

def test_criterion_6_reduce_transparency():
    rng = random.Random(6)
    checks = bad = 0
    for k in range(50):
        G = gnp(rng.randint(4, 9), (0.25, 0.4, 0.55)[k % 3], rng)
        for v0 in range(G.n):
            N = pinned_nice(G, v0)
            for a in range(4, G.n + 1):
                for b in range(3, a + 1):
                    on = solve_treewidth(G, N, v0, a, b, reduce=True).verdict
                    off = solve_treewidth(G, N, v0, a, b, reduce=False).verdict
                    checks += 1
                    bad += on != off
    ok = record(6, "reduce on = reduce off", bad == 0, f"{checks} instances on 50 graphs, {bad} differences")
    assert ok


# -- 7 --------------------------------------------------------------------------------------

def test_criterion_7_witness_bag_overlap():
    if not CHORDAL_WITNESSES:
        test_criterion_1_chordal_oracle()
    bad = 0
    trees = {}
    for G, v0, a, b, W in CHORDAL_WITNESSES:
        D = trees.get(id(G)) or trees.setdefault(id(G), chordal_clique_tree(G))
        shape = classify_mask(G, mask_of(W))
        sound = shape is not None and len(W) == a and shape.leaf_count >= b and shape.internals >> v0 & 1
        bad += not (sound and all(len(set(W) & bag) <= 2 for bag in D.bags))
    ok = record(7, "witness meets every clique-tree bag in <= 2 vertices", bad == 0,
                f"{len(CHORDAL_WITNESSES)} witnesses, {bad} violations")
    assert ok


# -- 8 --------------------------------------------------------------------------------------

def _best_of(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def _hub(G):
    comp = max((component_of(G, v) for v in range(G.n)), key=int.bit_count)
    return max(bits(comp), key=G.degree)


def test_criterion_8_scaling():
    rng = random.Random(8)
    chordal_times = []
    for n in (100, 200, 400):
        cases = []
        for _ in range(3):
            G = random_interval_graph(n, rng, max_length=10)
            cases.append((G, _hub(G)))
        chordal_times.append(_best_of(lambda: [solve_chordal(G, v, 20, 5) for G, v in cases]))
    tw_times = []
    for n in (30, 60, 120):
        cases = []
        for _ in range(5):
            G, D = random_partial_ktree(n, 3, 0.8, rng)
            v0 = _hub(G)
            cases.append((G, v0, pinned_nice(G, v0, D)))
        tw_times.append(_best_of(lambda: [solve_treewidth(G, N, v, 8, 4) for G, v, N in cases], repeat=2))
    r_ch = [chordal_times[k + 1] / chordal_times[k] for k in range(2)]
    r_tw = [tw_times[k + 1] / tw_times[k] for k in range(2)]
    ok = all(r <= 20 for r in r_ch) and all(r <= 8 for r in r_tw)
    detail = ("chordal n=100/200/400: " + "/".join(f"{t:.3f}s" for t in chordal_times)
              + " ratios " + ", ".join(f"{r:.2f}" for r in r_ch)
              + "; treewidth n=30/60/120: " + "/".join(f"{t:.3f}s" for t in tw_times)
              + " ratios " + ", ".join(f"{r:.2f}" for r in r_tw))
    record(8, "polynomial scaling", ok, detail)
    assert ok


# -- 9 --------------------------------------------------------------------------------------

def test_criterion_9_decomposition_tooling():
    rng = random.Random(9)
    checked = bad = 0
    for k in range(500):
        n = rng.randint(0, 30)
        G = random_chordal(n, rng) if k % 3 == 0 else gnp(n, rng.choice((0.08, 0.15, 0.3)), rng)
        ds = [heuristic_decomposition(G, "min-fill"), heuristic_decomposition(G, "min-degree")]
        if is_chordal(G):
            ds.append(chordal_clique_tree(G))
        for D in ds:
            nices = [make_nice(G, D, conv) for conv in (BAG_COMPLETE, EXPLICIT_EDGES)]
            if n:
                nices.append(make_nice(G, D, BAG_COMPLETE, pin=rng.randrange(n)))
            checked += 1 + len(nices)
            bad += validate_decomposition(G, D) is not None
            bad += sum(bool(check_nice(G, N)) for N in nices)
    ok = record(9, "generated decompositions are valid and nice", bad == 0,
                f"{checked} decompositions from 500 graphs, {bad} invalid")
    assert ok


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
