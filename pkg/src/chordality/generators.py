"""Seeded random instance generators.

``gen_sck`` grows an SC_k graph with the constructive operations (pendant
vertex, k-cycle through a vertex, k-cycle across an edge, and for even k a
half-cycle ear between antipodal vertices) and records each step, so the
reversed record is a vertex cycle ordering of the result.

``gen_2k2_subclass`` builds a connected 2K2-free graph whose most specific
subclass is the requested one, from a blueprint of that class grown by
random vertex additions that stay inside the class.
"""

from __future__ import annotations

import random
from typing import NamedTuple

from .graph import Graph, enumerate_induced_cycles, is_connected, vertex_set
from .separators import SubclassTag, classify_subclass, in_subclass
from .vco import UnitKind, Vco, VcoUnit

__all__ = ["SckInstance", "GenerationError", "gen_sck", "gen_2k2_subclass"]


class GenerationError(RuntimeError):
    pass


class SckInstance(NamedTuple):
    graph: Graph
    trace: Vco
    seed: int


class _Builder:
    def __init__(self, k: int, rng: random.Random):
        self.k = k
        self.rng = rng
        self.adj: list[set[int]] = []
        self.edges: list[tuple[int, int]] = []
        self.units: list[VcoUnit] = []
        self.on_cycle: list[bool] = []
        # cycles whose 2-connected block is the cycle itself, by id
        self.cycles: list[tuple[int, ...]] = []
        self.lone: set[int] = set()
        self.edge_cycles: dict[tuple[int, int], list[int]] = {}
        # hub pair -> list of parallel paths (interior vertices)
        self.cages: dict[tuple[int, int], list[tuple[int, ...]]] = {}

    @property
    def n(self) -> int:
        return len(self.adj)

    def add_vertices(self, count: int) -> list[int]:
        start = self.n
        for _ in range(count):
            self.adj.append(set())
            self.on_cycle.append(False)
        return list(range(start, start + count))

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.edges.append((min(u, v), max(u, v)))

    def add_path(self, ends: tuple[int, int], interior: list[int]) -> None:
        seq = [ends[0], *interior, ends[1]]
        for u, v in zip(seq, seq[1:]):
            self.add_edge(u, v)

    def register(self, cyc: tuple[int, ...], lone: bool) -> None:
        cid = len(self.cycles)
        self.cycles.append(cyc)
        for v in cyc:
            self.on_cycle[v] = True
        if lone:
            self.lone.add(cid)
            for u, v in zip(cyc, cyc[1:] + cyc[:1]):
                self.edge_cycles.setdefault((min(u, v), max(u, v)), []).append(cid)

    def base_cycle(self) -> None:
        vs = self.add_vertices(self.k)
        for i in range(self.k):
            self.add_edge(vs[i], vs[(i + 1) % self.k])
        self.register(tuple(vs), True)

    def pendant(self) -> None:
        a = self.rng.randrange(self.n)
        (x,) = self.add_vertices(1)
        self.add_edge(a, x)
        self.units.append(VcoUnit(UnitKind.PENDANT_VERTEX, (x,), (a,), (x,)))

    def cycle_at_vertex(self) -> None:
        a = self.rng.randrange(self.n)
        kind = UnitKind.ONE_PENDANT_CYCLE if self.on_cycle[a] else UnitKind.ZERO_PENDANT_CYCLE
        xs = self.add_vertices(self.k - 1)
        self.add_path((a, a), xs)
        label = (a, *xs)
        self.register(label, True)
        self.units.append(VcoUnit(kind, label, (a,), vertex_set(xs)))

    def cycle_on_edge(self) -> None:
        a, b = self.rng.choice(self.edges)
        for cid in self.edge_cycles.pop((a, b), []):
            self.lone.discard(cid)
        xs = self.add_vertices(self.k - 2)
        self.add_path((a, b), xs)
        label = (a, *xs, b)
        self.register(label, False)
        self.units.append(VcoUnit(UnitKind.TWO_PENDANT_CYCLE, label, (a, b), vertex_set(xs)))

    def can_ear(self) -> bool:
        return self.k % 2 == 0 and bool(self.lone or self.cages)

    def half_ear(self) -> None:
        half = self.k // 2
        options = len(self.lone) + len(self.cages)
        pick = self.rng.randrange(options)
        if pick < len(self.lone):
            cid = sorted(self.lone)[pick]
            self.lone.discard(cid)
            cyc = self.cycles[cid]
            for u, v in zip(cyc, cyc[1:] + cyc[:1]):
                self.edge_cycles.pop((min(u, v), max(u, v)), None)
            i = self.rng.randrange(self.k)
            rot = cyc[i:] + cyc[:i]
            w, z = rot[0], rot[half]
            # interiors of the two halves, both running from w to z
            paths = [tuple(rot[1:half]), tuple(reversed(rot[half + 1 :]))]
            if w > z:
                paths = [p[::-1] for p in paths]
            hubs = (min(w, z), max(w, z))
            self.cages[hubs] = paths
        else:
            hubs = sorted(self.cages)[pick - len(self.lone)]
        w, z = hubs
        other = self.rng.choice(self.cages[hubs])
        xs = self.add_vertices(half - 1)
        self.add_path((w, z), xs)
        label = (w, *xs, z, *reversed(other))
        for v in label:
            self.on_cycle[v] = True
        self.cages[hubs].append(tuple(xs))
        self.units.append(VcoUnit(UnitKind.HALF_PLUS_ONE_PENDANT_CYCLE, label, hubs, vertex_set(xs)))


def gen_sck(k: int, ops: int, seed: int, max_n: int | None = None) -> SckInstance:
    """Random SC_k graph from ``ops`` construction steps on ``K1`` or ``C_k``.

    When the base is ``K1`` the first step always adds a cycle, so every
    instance with ``ops >= 1`` contains a ``C_k``.  With ``max_n`` set,
    steps that would exceed it are skipped and generation stops once
    nothing fits.
    """
    if k < 5:
        raise ValueError("k must be at least 5")
    if ops < 0:
        raise ValueError("ops must be non-negative")
    if max_n is not None and max_n < 1:
        raise ValueError("max_n must be positive")
    rng = random.Random(seed)
    b = _Builder(k, rng)
    with_cycle = rng.random() < 0.5 and (max_n is None or max_n >= k)
    if with_cycle:
        b.base_cycle()
        core = tuple(range(k))
    else:
        b.add_vertices(1)
        core = (0,)
    cost = {"pendant": 1, "vertex": k - 1, "edge": k - 2, "ear": k // 2 - 1}
    weights = {"pendant": 3, "vertex": 2, "edge": 2, "ear": 3}
    for step in range(ops):
        room = None if max_n is None else max_n - b.n
        kinds = [c for c in cost if room is None or cost[c] <= room]
        if step == 0 and not with_cycle:
            kinds = [c for c in kinds if c == "vertex"]
        if "edge" in kinds and not b.edges:
            kinds.remove("edge")
        if "ear" in kinds and not b.can_ear():
            kinds.remove("ear")
        if not kinds:
            break
        kind = rng.choices(kinds, [weights[c] for c in kinds])[0]
        {"pendant": b.pendant, "vertex": b.cycle_at_vertex, "edge": b.cycle_on_edge, "ear": b.half_ear}[kind]()
    g = Graph(b.n, b.edges)
    if g.n <= 24:
        bad = [c for c in enumerate_induced_cycles(g) if len(c) != k]
        if bad:
            raise GenerationError(f"construction produced an induced cycle of length {len(bad[0])}")
    return SckInstance(g, Vco(k, tuple(reversed(b.units)), core), seed)


ATTEMPT_CAP = 400

# fewest vertices a graph of each exact subclass can have
_MIN_N = {
    SubclassTag.C3C4_FREE: 1,
    SubclassTag.C3C5_FREE: 4,
    SubclassTag.C4C5_FREE: 3,
    SubclassTag.C3_FREE: 6,
    SubclassTag.C4_FREE: 6,
    SubclassTag.GENERAL_2K2_FREE: 7,
}


def _double_star(n: int, rng: random.Random) -> list[tuple[int, int]]:
    if n <= 1:
        return []
    edges = [(0, 1)]
    for v in range(2, n):
        edges.append((rng.randrange(2), v))
    return edges


def _chain_graph(n: int, rng: random.Random) -> list[tuple[int, int]]:
    # X = 0..p-1, Y = p..n-1; N(x_i) = first d_i of Y with d nonincreasing
    p = rng.randrange(1, n)
    q = n - p
    degs = sorted((rng.randint(1, q) for _ in range(p)), reverse=True)
    degs[0] = q
    return [(i, p + j) for i, d in enumerate(degs) for j in range(d)]


def _split_graph(n: int, rng: random.Random) -> list[tuple[int, int]]:
    c = rng.randint(3, n)
    edges = [(u, v) for u in range(c) for v in range(u + 1, c)]
    for x in range(c, n):
        size = rng.randint(1, c)
        edges += [(a, x) for a in rng.sample(range(c), size)]
    return edges


def _c5_blowup(n: int, rng: random.Random) -> list[tuple[int, int]]:
    cls = [[i] for i in range(5)]
    for v in range(5, n):
        cls[rng.randrange(5)].append(v)
    return [(a, b) for i in range(5) for a in cls[i] for b in cls[(i + 1) % 5]]


def _wheel(n: int, rng: random.Random) -> list[tuple[int, int]]:
    return [(i, (i + 1) % 5) for i in range(5)] + [(5, i) for i in range(5)]


def _wheel_twin(n: int, rng: random.Random) -> list[tuple[int, int]]:
    # a false twin of a rim vertex adds an induced C4 to the 5-wheel
    return _wheel(n, rng) + [(6, 1), (6, 4), (6, 5)]


def _grow(adj: list[set[int]], tag: SubclassTag, n_target: int, rng: random.Random) -> bool:
    tries = 0
    while len(adj) < n_target:
        tries += 1
        if tries > 60 * n_target:
            return False
        n = len(adj)
        u = rng.randrange(n)
        mode = rng.random()
        if mode < 0.35:
            nb = set(adj[u])
        elif mode < 0.6:
            nb = set(adj[u]) | {u}
        else:
            p = rng.uniform(0.15, 0.85)
            nb = {v for v in range(n) if rng.random() < p}
        if not nb:
            continue
        adj.append(nb)
        g = Graph(len(adj), [(v, w) for w in range(len(adj)) for v in adj[w] if v < w])
        if in_subclass(g, tag):
            for v in nb:
                adj[v].add(n)
        else:
            adj.pop()
    return True


_BLUEPRINT = {
    SubclassTag.C3C4_FREE: _double_star,
    SubclassTag.C3C5_FREE: _chain_graph,
    SubclassTag.C4C5_FREE: _split_graph,
    SubclassTag.C3_FREE: _c5_blowup,
    SubclassTag.C4_FREE: _wheel,
    SubclassTag.GENERAL_2K2_FREE: _wheel_twin,
}

_BASE_N = {SubclassTag.C4_FREE: 6, SubclassTag.GENERAL_2K2_FREE: 7}


def gen_2k2_subclass(tag, n_target: int, seed: int) -> Graph:
    """Connected graph on ``n_target`` vertices whose subclass tag is exactly ``tag``.

    Trees from the C3C4Free blueprint are double stars (stars included),
    the only trees without a 2K2; at five vertices the blueprint picks C5
    half the time.
    """
    tag = SubclassTag(tag)
    if tag is SubclassTag.NOT_2K2_FREE:
        raise ValueError("cannot generate Not2K2Free graphs")
    if n_target < _MIN_N[tag]:
        raise GenerationError(f"{tag.value} needs at least {_MIN_N[tag]} vertices")
    rng = random.Random(seed)
    for _ in range(ATTEMPT_CAP):
        if tag is SubclassTag.C3C4_FREE and n_target == 5 and rng.random() < 0.5:
            return Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        base = _BASE_N.get(tag)
        if base is None:
            base = n_target if tag is not SubclassTag.C3_FREE else rng.randint(5, n_target)
        edges = _BLUEPRINT[tag](base, rng)
        adj: list[set[int]] = [set() for _ in range(base)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        if not _grow(adj, tag, n_target, rng):
            continue
        perm = list(range(n_target))
        rng.shuffle(perm)
        g = Graph(n_target, [(perm[u], perm[v]) for u in range(n_target) for v in adj[u] if u < v])
        if is_connected(g) and classify_subclass(g) is tag:
            return g
    raise GenerationError(f"no {tag.value} graph on {n_target} vertices after {ATTEMPT_CAP} attempts")
