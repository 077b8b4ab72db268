"""Exponential exact solvers used as ground truth.

Everything here works on bitmasks and shares no code with the structural
solvers beyond the graph type and the feasibility predicates.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, GuardExceededError, enumerate_induced_cycles
from .problems import ProblemKind, Solution, is_feasible, make_solution

__all__ = ["oracle_solve", "oracle_feasible", "steiner_naive", "SUBSET_GUARD", "ECT_GUARD"]

SUBSET_GUARD = 20
ECT_GUARD = 18


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


class _Masks:
    def __init__(self, g: Graph):
        self.n = g.n
        self.full = (1 << g.n) - 1
        self.nb = [sum(1 << w for w in g.adj[v]) for v in range(g.n)]
        self.closed = [self.nb[v] | (1 << v) for v in range(g.n)]

    def components(self, mask: int) -> int:
        count = 0
        left = mask
        while left:
            seed = left & -left
            comp = seed
            frontier = seed
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= self.nb[v]
                grow &= mask & ~comp
                comp |= grow
                frontier = grow
            left &= ~comp
            count += 1
        return count

    def connected(self, mask: int) -> bool:
        return mask != 0 and self.components(mask) == 1

    def acyclic(self, mask: int) -> bool:
        edges = sum(_popcount(self.nb[v] & mask) for v in _bits(mask)) // 2
        return edges == _popcount(mask) - self.components(mask)

    def bipartite(self, mask: int) -> bool:
        color = {}
        for s in _bits(mask):
            if s in color:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                u = stack.pop()
                for w in _bits(self.nb[u] & mask):
                    if w not in color:
                        color[w] = 1 - color[u]
                        stack.append(w)
                    elif color[w] == color[u]:
                        return False
        return True

    def dominates(self, mask: int) -> bool:
        cover = 0
        for v in _bits(mask):
            cover |= self.closed[v]
        return cover == self.full


def _scan(n: int, start: int, ok):
    """Smallest subset (as a mask) accepted by ``ok``, trying sizes from ``start`` up."""
    for size in range(start, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if ok(mask):
                return mask
    raise AssertionError("no feasible subset")


def _max_independent(bm: _Masks) -> int:
    best = 0

    def grow(cand: int, chosen: int, size: int) -> None:
        nonlocal best
        if size + _popcount(cand) <= _popcount(best):
            return
        if not cand:
            best = chosen
            return
        # branch on the candidate with the most candidate neighbours
        v = max(_bits(cand), key=lambda x: _popcount(bm.nb[x] & cand))
        if not bm.nb[v] & cand:
            grow(cand & ~(1 << v), chosen | (1 << v), size + 1)
            return
        grow(cand & ~bm.closed[v], chosen | (1 << v), size + 1)
        grow(cand & ~(1 << v), chosen, size)

    grow(bm.full, 0, 0)
    return best


def _min_vertex_cover(g: Graph) -> int:
    edges = list(g.edges())

    def cover(budget: int, chosen: int) -> int | None:
        for u, v in edges:
            if not (chosen >> u) & 1 and not (chosen >> v) & 1:
                break
        else:
            return chosen
        if budget == 0:
            return None
        return cover(budget - 1, chosen | (1 << u)) or cover(budget - 1, chosen | (1 << v))

    if not edges:
        return 0
    for budget in range(1, g.n + 1):
        found = cover(budget, 0)
        if found is not None:
            return found
    raise AssertionError("unreachable")


def _bfs_all(g: Graph):
    dist, parent = [], []
    for s in range(g.n):
        d = [-1] * g.n
        p = [-1] * g.n
        d[s] = 0
        queue = [s]
        for u in queue:
            for w in g.adj[u]:
                if d[w] < 0:
                    d[w] = d[u] + 1
                    p[w] = u
                    queue.append(w)
        dist.append(d)
        parent.append(p)
    return dist, parent


def _steiner_dw(g: Graph, terminals: tuple[int, ...]) -> set[int]:
    """Dreyfus-Wagner over terminal subsets with unit edge lengths."""
    r = len(terminals)
    dist, parent = _bfs_all(g)
    inf = float("inf")
    n = g.n
    size = 1 << r
    dp = [[inf] * n for _ in range(size)]
    back: list[list[tuple | None]] = [[None] * n for _ in range(size)]
    for i, t in enumerate(terminals):
        for v in range(n):
            if dist[t][v] >= 0:
                dp[1 << i][v] = dist[t][v]
                back[1 << i][v] = ("path", t)
    for mask in range(1, size):
        if mask & (mask - 1) == 0:
            continue
        row = dp[mask]
        for v in range(n):
            sub = (mask - 1) & mask
            while sub:
                if sub & (mask & -mask):
                    cost = dp[sub][v] + dp[mask ^ sub][v]
                    if cost < row[v]:
                        row[v] = cost
                        back[mask][v] = ("split", sub)
                sub = (sub - 1) & mask
        settled = list(row)
        for v in range(n):
            for u in range(n):
                if dist[u][v] >= 0 and settled[u] + dist[u][v] < row[v]:
                    row[v] = settled[u] + dist[u][v]
                    back[mask][v] = ("path", u, "then")
    full = size - 1
    root = terminals[0]
    if dp[full][root] == inf:
        raise ValueError("terminals lie in different components")

    out: set[int] = set()
    stack = [(full, root)]
    while stack:
        mask, v = stack.pop()
        how = back[mask][v]
        out.add(v)
        if how is None:
            continue
        if how[0] == "split":
            stack.append((how[1], v))
            stack.append((mask ^ how[1], v))
            continue
        u = how[1]
        w = v
        while w != u:
            out.add(w)
            w = parent[u][w]
        out.add(u)
        if len(how) == 3:
            stack.append((mask, u))
    return out


def steiner_naive(g: Graph, terminals) -> set[int]:
    """Smallest connected vertex set containing ``terminals`` by plain subset scan."""
    bm = _Masks(g)
    t_mask = sum(1 << t for t in terminals)
    others = [v for v in range(g.n) if not (t_mask >> v) & 1]
    for size in range(len(others) + 1):
        for combo in combinations(others, size):
            mask = t_mask | sum(1 << v for v in combo)
            if bm.connected(mask):
                return set(_bits(mask))
    raise ValueError("terminals lie in different components")


def oracle_solve(problem: ProblemKind, g: Graph, terminals=None) -> Solution:
    """Exact optimum for ``problem`` on a small graph by exhaustive search."""
    problem = ProblemKind(problem)
    guard = ECT_GUARD if problem is ProblemKind.ECT else SUBSET_GUARD
    if g.n > guard:
        raise GuardExceededError(f"n={g.n} exceeds oracle guard {guard} for {problem.value}")
    if (terminals is not None) != (problem is ProblemKind.STEINER_TREE):
        raise ValueError("terminals are required for, and only for, SteinerTree")
    bm = _Masks(g)
    n = g.n
    if problem is ProblemKind.MIS:
        mask = _max_independent(bm)
    elif problem is ProblemKind.VERTEX_COVER:
        mask = _min_vertex_cover(g)
    elif problem is ProblemKind.DOMINATING_SET:
        mask = _scan(n, 0 if n == 0 else 1, bm.dominates)
    elif problem is ProblemKind.FVS:
        mask = _scan(n, 0, lambda s: bm.acyclic(bm.full & ~s))
    elif problem is ProblemKind.OCT:
        mask = _scan(n, 0, lambda s: bm.bipartite(bm.full & ~s))
    elif problem is ProblemKind.ECT:
        evens = [sum(1 << v for v in c) for c in enumerate_induced_cycles(g, max_n=ECT_GUARD) if len(c) % 2 == 0]
        mask = _scan(n, 0, lambda s: all(c & s for c in evens))
    elif problem is ProblemKind.CONNECTED_DOMINATING_SET:
        if n == 0:
            mask = 0
        elif not bm.connected(bm.full):
            raise ValueError("connected dominating set needs a connected graph")
        else:
            lower = _popcount(_scan(n, 1, bm.dominates))
            mask = _scan(n, lower, lambda s: bm.dominates(s) and bm.connected(s))
    else:
        ts = tuple(sorted(set(terminals)))
        if not ts:
            raise ValueError("empty terminal set")
        if any(not 0 <= t < n for t in ts):
            raise ValueError("terminal out of range")
        return make_solution(problem, _steiner_dw(g, ts), ts)
    return make_solution(problem, _bits(mask))


def oracle_feasible(problem: ProblemKind, g: Graph, candidate, terminals=None) -> bool:
    return is_feasible(ProblemKind(problem), g, candidate, terminals or ())
