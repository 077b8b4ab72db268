import random

from hypothesis import strategies as st

from chordality.graph import Graph


def cycle(n, offset=0):
    return [(offset + i, offset + (i + 1) % n) for i in range(n)]


def cycle_graph(n):
    return Graph(n, cycle(n))


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a, b):
    return Graph(a + b, [(x, a + y) for x in range(a) for y in range(b)])


def star(leaves):
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def two_c6_sharing_edge():
    # 0-1-2-3-4-5 and 0-1-6-7-8-9 share the edge {0, 1}
    return Graph(10, cycle(6) + [(1, 6), (6, 7), (7, 8), (8, 9), (9, 0)])


def split_k3_two():
    # K3 on 0,1,2 plus 3 and 4 adjacent to all of it
    return Graph(5, [(0, 1), (0, 2), (1, 2)] + [(i, j) for i in (3, 4) for j in (0, 1, 2)])


def random_tree(n, seed):
    rng = random.Random(seed)
    return Graph(n, [(rng.randrange(v), v) for v in range(1, n)])


@st.composite
def small_graphs(draw, max_n=9, connected=False):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree keeps the graph connected
        order = draw(st.permutations(range(n)))
        for i in range(1, n):
            j = draw(st.integers(0, i - 1))
            e = (min(order[i], order[j]), max(order[i], order[j]))
            if e not in chosen:
                chosen.append(e)
    return Graph(n, chosen)


# one verdict line per acceptance criterion, printed after the run
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
