"""2K2-freeness, minimal vertex separators and the separator-relative split.

For a connected 2K2-free graph and a minimal separator ``S`` the rest of
the graph falls into trivial components ``T`` and at most one non-trivial
component ``G1``; ``G1`` is further split by how many ``S``-neighbours a
vertex has (all: ``U``, some: ``U'``, none: ``M``).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from .graph import Graph, connected_components, induced_subgraph, is_connected

__all__ = [
    "SubclassTag",
    "SeparatorDecomposition",
    "Violation",
    "is_2k2_free",
    "find_induced_c4",
    "find_induced_c5",
    "classify_subclass",
    "in_subclass",
    "find_minimal_separator",
    "decompose",
    "verify_structure_theorem",
]


class SubclassTag(str, Enum):
    C3C4_FREE = "C3C4Free"
    C3C5_FREE = "C3C5Free"
    C4C5_FREE = "C4C5Free"
    C3_FREE = "C3Free"
    C4_FREE = "C4Free"
    GENERAL_2K2_FREE = "General2K2Free"
    NOT_2K2_FREE = "Not2K2Free"


@dataclass(frozen=True)
class SeparatorDecomposition:
    S: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    T: tuple[int, ...]
    nontrivial: tuple[tuple[int, ...], ...]
    G1: tuple[int, ...] | None
    U: tuple[int, ...]
    Uprime: tuple[int, ...]
    M: tuple[int, ...]
    # number of S-neighbours of every vertex outside S
    s_degree: dict

    def describe(self) -> dict:
        def ids(vs):
            return [v + 1 for v in vs]

        return {
            "S": ids(self.S),
            "T": ids(self.T),
            "G1": None if self.G1 is None else ids(self.G1),
            "U": ids(self.U),
            "Uprime": ids(self.Uprime),
            "M": ids(self.M),
        }


@dataclass(frozen=True)
class Violation:
    clause: str
    witness: tuple[int, ...]


def is_2k2_free(g: Graph, witness: bool = False):
    """Whether no two edges of ``g`` are independent and non-adjacent.

    With ``witness=True`` returns ``(ok, (a, b, c, d))`` where ``ab`` and
    ``cd`` form an induced 2K2 when ``ok`` is false.
    """
    edges = list(g.edges())
    adj = g.adj
    for i, (a, b) in enumerate(edges):
        near = adj[a] | adj[b]
        for c, d in edges[i + 1 :]:
            if c not in near and d not in near and c != a and c != b and d != a and d != b:
                return (False, (a, b, c, d)) if witness else False
    return (True, None) if witness else True


def _has_triangle(g: Graph):
    for u, v in g.edges():
        common = g.adj[u] & g.adj[v]
        if common:
            return (u, v, min(common))
    return None


def find_induced_c4(g: Graph, within=None):
    """An induced 4-cycle ``(a, x, b, y)`` or None."""
    adj = g.adj
    vs = sorted(within) if within is not None else range(g.n)
    pool = set(vs)
    for a, b in combinations(vs, 2):
        if b in adj[a]:
            continue
        common = sorted(adj[a] & adj[b] & pool)
        for x, y in combinations(common, 2):
            if y not in adj[x]:
                return (a, x, b, y)
    return None


def find_induced_c5(g: Graph, within=None):
    """An induced 5-cycle ``(a, b, c, d, e)`` or None."""
    adj = g.adj
    pool = set(within) if within is not None else set(range(g.n))
    for a in sorted(pool):
        na = adj[a] & pool
        for b, e in combinations(sorted(na), 2):
            if e in adj[b]:
                continue
            for c in adj[b] & pool:
                if c == a or c in adj[a] or c in adj[e]:
                    continue
                for d in adj[c] & adj[e] & pool:
                    if d != b and d not in adj[a] and d not in adj[b]:
                        return (a, b, c, d, e)
    return None


def _flags(g: Graph) -> tuple[bool, bool, bool]:
    return _has_triangle(g) is not None, find_induced_c4(g) is not None, find_induced_c5(g) is not None


def classify_subclass(g: Graph) -> SubclassTag:
    """Most specific 2K2-free subclass of ``g``.

    A 2K2-free graph has no induced cycle longer than 5, so the tag is
    decided by which of C3, C4, C5 occur.  Graphs with none of them go to
    C3C4Free.
    """
    if not is_2k2_free(g):
        return SubclassTag.NOT_2K2_FREE
    c3, c4, c5 = _flags(g)
    if not c3 and not c4:
        return SubclassTag.C3C4_FREE
    if not c3 and not c5:
        return SubclassTag.C3C5_FREE
    if not c4 and not c5:
        return SubclassTag.C4C5_FREE
    if not c3:
        return SubclassTag.C3_FREE
    if not c4:
        return SubclassTag.C4_FREE
    return SubclassTag.GENERAL_2K2_FREE


_FORBIDDEN = {
    SubclassTag.C3C4_FREE: (True, True, False),
    SubclassTag.C3C5_FREE: (True, False, True),
    SubclassTag.C4C5_FREE: (False, True, True),
    SubclassTag.C3_FREE: (True, False, False),
    SubclassTag.C4_FREE: (False, True, False),
    SubclassTag.GENERAL_2K2_FREE: (False, False, False),
}


def in_subclass(g: Graph, tag: SubclassTag) -> bool:
    """Membership in the class named by ``tag`` (not only the most specific tag)."""
    tag = SubclassTag(tag)
    if tag is SubclassTag.NOT_2K2_FREE:
        return not is_2k2_free(g)
    if not is_2k2_free(g):
        return False
    flags = _flags(g)
    return not any(f and forbid for f, forbid in zip(flags, _FORBIDDEN[tag]))


def _component_of(g: Graph, start: int, blocked: set[int]) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if w not in seen and w not in blocked:
                seen.add(w)
                stack.append(w)
    return seen


def find_minimal_separator(g: Graph, pair=None, rng: random.Random | None = None):
    """A minimal vertex separator of ``g`` with its decomposition, or None if complete.

    Starts from a non-adjacent pair ``(a, b)``: by default the
    lexicographically smallest one, or ``pair`` if given, or a random one
    drawn from ``rng``.  The neighbourhood of the component of ``G - N[a]``
    containing ``b`` separates the pair; it is then shrunk until every
    component of ``G - S`` is adjacent to every vertex of ``S``, which makes
    ``S`` a separator of ``G`` none of whose proper subsets separates ``G``.
    """
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    pairs = None
    if pair is not None:
        a, b = pair
        if a == b or g.has_edge(a, b):
            raise ValueError("pair must be two distinct non-adjacent vertices")
    elif rng is not None:
        pairs = [(u, v) for u in range(g.n) for v in range(g.n) if u != v and v not in g.adj[u]]
        if not pairs:
            return None
        a, b = rng.choice(pairs)
    else:
        for a in range(g.n):
            rest = [v for v in range(a + 1, g.n) if v not in g.adj[a]]
            if rest:
                b = rest[0]
                break
        else:
            return None
    closed = set(g.adj[a]) | {a}
    comp = _component_of(g, b, closed)
    s = set()
    for v in comp:
        s |= g.adj[v]
    s -= comp
    return decompose(g, _shrink(g, s))


def _shrink(g: Graph, s: set[int]) -> set[int]:
    # drop separator vertices missing some component until every component
    # of G - S sees every vertex of S; then no proper subset of S separates G
    while True:
        blocked = set(s)
        comps = []
        left = set(range(g.n)) - blocked
        while left:
            c = _component_of(g, min(left), blocked)
            comps.append(c)
            left -= c
        for x in sorted(s):
            if any(not g.adj[x] & c for c in comps):
                s = s - {x}
                break
        else:
            return s


def decompose(g: Graph, s) -> SeparatorDecomposition:
    """Split the vertices outside ``s`` relative to ``s``."""
    s = set(s)
    rest = [v for v in range(g.n) if v not in s]
    h, mapping = induced_subgraph(g, rest)
    comps = tuple(tuple(sorted(mapping[v] for v in c)) for c in connected_components(h))
    trivial = sorted(c[0] for c in comps if len(c) == 1)
    nontrivial = tuple(c for c in comps if len(c) > 1)
    s_degree = {v: len(g.adj[v] & s) for v in rest}
    g1 = nontrivial[0] if nontrivial else None
    full = len(s)
    u = up = m = ()
    if g1 is not None:
        u = tuple(v for v in g1 if s_degree[v] == full)
        up = tuple(v for v in g1 if 0 < s_degree[v] < full)
        m = tuple(v for v in g1 if s_degree[v] == 0)
    return SeparatorDecomposition(
        tuple(sorted(s)), comps, tuple(trivial), nontrivial, g1, u, up, m, s_degree
    )


def _independent(g: Graph, vs) -> tuple[int, int] | None:
    for u, v in combinations(sorted(vs), 2):
        if v in g.adj[u]:
            return (u, v)
    return None


def _general_clauses(g: Graph, d: SeparatorDecomposition) -> list[Violation]:
    out = []
    s = set(d.S)
    adj = g.adj
    if len(d.nontrivial) > 1:
        out.append(Violation("one-nontrivial-component", tuple(c[0] for c in d.nontrivial)))
    if d.G1 is not None:
        h, mp = induced_subgraph(g, d.G1)
        ok, w = is_2k2_free(h, witness=True)
        if not ok:
            out.append(Violation("nontrivial-component-2k2-free", tuple(mp[v] for v in w)))
    for t in d.T:
        if not s <= adj[t]:
            out.append(Violation("trivial-universal", (t, min(s - adj[t]))))
    for comp in d.nontrivial:
        cs = set(comp)
        for u in comp:
            for v in adj[u] & cs:
                if u < v and not s <= adj[u] | adj[v]:
                    out.append(Violation("edge-universal", (u, v, min(s - adj[u] - adj[v]))))
    hs, ms = induced_subgraph(g, d.S)
    s_parts = [tuple(ms[v] for v in c) for c in connected_components(hs)]
    s_big = [c for c in s_parts if len(c) > 1]
    if len(s_parts) > 1 and len(s_big) > 1:
        out.append(Violation("separator-one-nontrivial-part", tuple(c[0] for c in s_big)))
    for part in s_big[:1]:
        hp, mp = induced_subgraph(g, part)
        ok, w = is_2k2_free(hp, witness=True)
        if not ok:
            out.append(Violation("separator-part-2k2-free", tuple(mp[v] for v in w)))
        if d.G1 is not None:
            reach = [v for v in d.G1 if d.s_degree[v] > 0]
            ps = set(part)
            for x in part:
                for y in adj[x] & ps:
                    if x < y:
                        for v in reach:
                            if x not in adj[v] and y not in adj[v]:
                                out.append(Violation("separator-edge-universal", (x, y, v)))
    return out


def _c3c4_clauses(g: Graph, d: SeparatorDecomposition) -> list[Violation]:
    out = []
    adj = g.adj
    s = set(d.S)
    e = _independent(g, d.S)
    if e:
        out.append(Violation("separator-independent", e))
    if len(d.S) > 1 and len(d.T) != 1:
        out.append(Violation("one-trivial-component", d.T))
    if d.G1 is not None:
        g1 = set(d.G1)
        for u in d.G1:
            for v in adj[u] & g1:
                if u < v:
                    su, sv = adj[u] & s, adj[v] & s
                    if su & sv or su | sv != s:
                        out.append(Violation("edge-splits-separator", (u, v)))
        for x in d.S:
            pair = _independent(g, adj[x] & g1)
            if pair:
                out.append(Violation("separator-neighbourhood-independent", (x,) + pair))
        for v in d.G1:
            if d.s_degree[v] != 1:
                out.append(Violation("one-separator-neighbour", (v,)))
    return out


def _c3c5_clauses(g: Graph, d: SeparatorDecomposition) -> list[Violation]:
    out = []
    adj = g.adj
    s = set(d.S)
    e = _independent(g, d.S)
    if e:
        out.append(Violation("separator-independent", e))
    if d.G1 is not None:
        g1 = set(d.G1)
        for x in d.S:
            pair = _independent(g, adj[x] & g1)
            if pair:
                out.append(Violation("separator-neighbourhood-independent", (x,) + pair))
        for u in d.G1:
            for v in adj[u] & g1:
                if u < v:
                    du, dv = d.s_degree[u], d.s_degree[v]
                    if sorted((du, dv)) != [0, len(s)]:
                        out.append(Violation("edge-universal-and-free-end", (u, v)))
        uni = set(d.U)
        non = [v for v in d.G1 if v not in uni]
        if not any(set(non) <= adj[u] for u in d.U):
            out.append(Violation("universal-to-nonuniversal", tuple(d.U)))
    for t in d.T:
        for x in d.S:
            if x not in adj[t]:
                out.append(Violation("trivial-separator-complete-bipartite", (t, x)))
    for a, b in combinations(d.T, 2):
        if b in adj[a]:
            out.append(Violation("trivial-separator-complete-bipartite", (a, b)))
    return out


def _c4c5_clauses(g: Graph, d: SeparatorDecomposition) -> list[Violation]:
    for u, v in combinations(d.S, 2):
        if v not in g.adj[u]:
            return [Violation("separator-clique", (u, v))]
    return []


def _p4_in(g: Graph, vs):
    pool = set(vs)
    adj = g.adj
    for b in pool:
        for c in adj[b] & pool:
            for a in adj[b] & pool:
                if a == c or a in adj[c]:
                    continue
                for e in adj[c] & pool:
                    if e not in (a, b) and e not in adj[a] and e not in adj[b]:
                        return (a, b, c, e)
    return None


def _c3_clauses(g: Graph, d: SeparatorDecomposition) -> list[Violation]:
    out = []
    adj = g.adj
    e = _independent(g, d.S)
    if e:
        out.append(Violation("separator-independent", e))
    if d.G1 is None:
        return out
    g1 = set(d.G1)
    for x in d.S:
        nx = adj[x] & g1
        pair = _independent(g, nx)
        if pair:
            out.append(Violation("separator-neighbourhood-independent", (x,) + pair))
        for u, v in combinations(sorted(nx), 2):
            # a shortest u-v path through G1 has exactly one inner vertex
            if v not in adj[u] and not adj[u] & adj[v] & g1:
                out.append(Violation("separator-neighbours-at-distance-two", (x, u, v)))
    if len(d.S) >= 2:
        m = set(d.M)
        core = [v for v in d.G1 if v not in m]
        p4 = _p4_in(g, core)
        if p4:
            out.append(Violation("core-p4-free", p4))
        pair = _independent(g, m)
        if pair:
            out.append(Violation("free-vertices-independent", pair))
        if m:
            hits = [u for u in core if m <= adj[u]]
            if len(hits) != 1:
                out.append(Violation("unique-universal-to-free", tuple(hits)))
    c5 = find_induced_c5(g, d.G1)
    if c5:
        out.append(Violation("component-c5-free", c5))
    c5 = find_induced_c5(g, set(d.G1) | set(d.S))
    if c5:
        out.append(Violation("component-with-separator-c5-free", c5))
    return out


def _is_star(g: Graph) -> bool:
    if g.n < 3 or g.m != g.n - 1:
        return False
    return max(g.degrees()) == g.n - 1


def _is_c5(g: Graph) -> bool:
    return g.n == 5 and g.m == 5 and all(len(a) == 2 for a in g.adj) and is_connected(g)


def _c4_clauses(g: Graph, d: SeparatorDecomposition) -> list[Violation]:
    out = []
    adj = g.adj
    s = set(d.S)
    hs, _ = induced_subgraph(g, d.S)
    s_connected = is_connected(hs)
    if not s_connected and not (_is_c5(g) or _is_star(g)):
        out.append(Violation("separator-connected", d.S))
    if s_connected and d.G1 is not None:
        for x in d.G1:
            for u in adj[x] & s:
                if not adj[u] & s <= adj[x]:
                    out.append(Violation("separator-neighbourhood-inherited", (x, u)))
    clique = all(v in adj[u] for u, v in combinations(d.S, 2))
    if not clique:
        if len(d.T) != 1:
            out.append(Violation("one-trivial-component", d.T))
        if d.G1 is not None:
            for x in d.G1:
                for a, b in combinations(sorted(adj[x] & s), 2):
                    if b not in adj[a]:
                        out.append(Violation("no-universal-to-non-adjacent-pair", (x, a, b)))
            if len(d.G1) != 2:
                out.append(Violation("nontrivial-component-is-k2", d.G1))
    for trio in combinations(d.S, 3):
        if _independent(g, trio) is None:
            out.append(Violation("separator-independence-at-most-two", trio))
            break
    p4 = _p4_in(g, d.S)
    if p4:
        out.append(Violation("separator-p4-free", p4))
    for c in d.S:
        leaves = sorted(adj[c] & s)
        for trio in combinations(leaves, 3):
            if _independent(g, trio) is None:
                out.append(Violation("separator-claw-free", (c,) + trio))
                break
    return out


_CLAUSES = {
    SubclassTag.C3C4_FREE: _c3c4_clauses,
    SubclassTag.C3C5_FREE: _c3c5_clauses,
    SubclassTag.C4C5_FREE: _c4c5_clauses,
    SubclassTag.C3_FREE: _c3_clauses,
    SubclassTag.C4_FREE: _c4_clauses,
}


def verify_structure_theorem(g: Graph, d: SeparatorDecomposition, tag: SubclassTag) -> list[Violation]:
    """Structural clauses that fail for ``d``; empty when all hold.

    Every tag is checked against the clauses shared by all connected 2K2-free
    graphs, then against the clauses specific to its subclass.
    """
    tag = SubclassTag(tag)
    if tag is SubclassTag.NOT_2K2_FREE or not in_subclass(g, tag):
        raise ValueError(f"graph is not in class {tag.value}")
    out = _general_clauses(g, d)
    extra = _CLAUSES.get(tag)
    if extra is not None:
        out += extra(g, d)
    return out
