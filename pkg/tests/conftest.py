import itertools

from hypothesis import strategies as st

from rlis.graph import Graph


@st.composite
def graphs(draw, max_n=8, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def brute_is_tree(G, S):
    """Independent check: connected and acyclic by a plain DFS."""
    S = set(S)
    if not S:
        return False
    start = next(iter(S))
    seen, stack, parent = {start}, [start], {start: None}
    while stack:
        u = stack.pop()
        for w in G.neighbors(u):
            if w not in S:
                continue
            if w in seen:
                if parent[u] != w:
                    return False
                continue
            seen.add(w)
            parent[w] = u
            stack.append(w)
    return seen == S


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
