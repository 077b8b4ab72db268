"""Simple undirected graphs with dense integer vertex ids.

Vertices are ``0..n-1`` internally.  The text format used by the command
line tools is 1-indexed; translation happens only in :func:`parse_graph`
and :meth:`Graph.to_text`.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphFormatError",
    "MalformedHeaderError",
    "VertexRangeError",
    "SelfLoopError",
    "DuplicateEdgeError",
    "GuardExceededError",
    "parse_graph",
    "connected_components",
    "induced_subgraph",
    "enumerate_induced_cycles",
    "is_bipartite",
    "is_acyclic",
    "is_connected",
    "vertex_set",
]


class GraphFormatError(ValueError):
    """Base class for edge-list parse errors."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MalformedHeaderError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class DuplicateEdgeError(GraphFormatError):
    pass


class GuardExceededError(ValueError):
    """Raised when an exponential routine is asked to run past its size guard."""


def vertex_set(vertices: Iterable[int]) -> tuple[int, ...]:
    """Canonical VertexSet: sorted, duplicate free tuple."""
    return tuple(sorted(set(vertices)))


class Graph:
    """Immutable simple undirected graph.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of (u, v)
        0-indexed edges.  Self-loops and repeated edges raise ``ValueError``.
    """

    __slots__ = ("n", "adj", "m", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
            m += 1
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(a) for a in adj)
        self.m = m
        self._hash = None

    @classmethod
    def from_adjacency(cls, adj: Sequence[Iterable[int]]) -> "Graph":
        """Build from a symmetric adjacency list (no validation of symmetry beyond edges)."""
        edges = [(u, v) for u, nbrs in enumerate(adj) for v in nbrs if u < v]
        return cls(len(adj), edges)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __len__(self) -> int:
        return self.n

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.adj):
            for v in sorted(nbrs):
                if u < v:
                    yield (u, v)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def to_text(self, comment: str | None = None) -> str:
        """Serialize to the 1-indexed ``p``/``e`` edge-list format."""
        lines = []
        if comment:
            lines.extend(f"c {c}" for c in comment.splitlines())
        lines.append(f"p {self.n} {self.m}")
        lines.extend(f"e {u + 1} {v + 1}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def without(self, removed: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on the complement of ``removed``."""
        gone = set(removed)
        return induced_subgraph(self, [v for v in range(self.n) if v not in gone])


def parse_graph(text: bytes | str) -> Graph:
    """Parse the edge-list format.

    First non-comment line is ``p <n> <m>``, followed by exactly ``m`` lines
    ``e <u> <v>`` with 1-indexed ids.  Lines starting with ``c`` are comments.

    >>> g = parse_graph("p 3 2\\ne 1 2\\ne 2 3")
    >>> g.degrees()
    [1, 2, 1]
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line == "c" or line.startswith("c "):
            continue
        fields = line.split()
        if n is None:
            if fields[0] != "p" or len(fields) != 3:
                raise MalformedHeaderError(f"expected 'p <n> <m>', got {line!r}", lineno)
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise MalformedHeaderError(f"non-integer header {line!r}", lineno) from None
            if n < 0 or m < 0:
                raise MalformedHeaderError("negative vertex or edge count", lineno)
            continue
        if fields[0] != "e" or len(fields) != 3:
            raise GraphFormatError(f"expected 'e <u> <v>', got {line!r}", lineno)
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise GraphFormatError(f"non-integer edge {line!r}", lineno) from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise VertexRangeError(f"vertex id out of range 1..{n} in {line!r}", lineno)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v) - 1, max(u, v) - 1)
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise MalformedHeaderError("missing 'p <n> <m>' header")
    if len(edges) != m:
        raise MalformedHeaderError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    adj = g.adj
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``(h, mapping)`` where ``mapping[i]`` is the id in ``g`` of vertex ``i`` of ``h``."""
    mapping = list(vertex_set(s))
    for v in mapping:
        if not 0 <= v < g.n:
            raise IndexError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(mapping)}
    edges = [
        (index[u], index[v]) for u in mapping for v in g.adj[u] if v in index and u < v
    ]
    return Graph(len(mapping), edges), mapping


def enumerate_induced_cycles(g: Graph, max_n: int = 24) -> list[tuple[int, ...]]:
    """All chordless cycles of ``g``, each listed once in cyclic order.

    A cycle is reported starting from its smallest vertex, oriented so the
    second vertex is smaller than the last.  Exponential; refuses graphs
    with more than ``max_n`` vertices.
    """
    if g.n > max_n:
        raise GuardExceededError(f"n={g.n} exceeds induced-cycle guard {max_n}")
    adj = g.adj
    cycles: list[tuple[int, ...]] = []

    def extend(path: list[int], blocked: set[int]) -> None:
        s, last = path[0], path[-1]
        for v in adj[last]:
            if v <= s or v in blocked:
                continue
            if s in adj[v]:
                if len(path) >= 2 and path[1] < v:
                    cycles.append(tuple(path) + (v,))
                continue
            # once ``last`` becomes interior, none of its neighbours may follow
            path.append(v)
            extend(path, blocked | adj[last])
            path.pop()

    for s in range(g.n):
        for p1 in adj[s]:
            if p1 > s:
                extend([s, p1], {s, p1})
    cycles.sort(key=lambda c: (len(c), c))
    return cycles


def is_bipartite(g: Graph, certificate: bool = False):
    """Test for an odd cycle.

    With ``certificate=True`` return ``(ok, witness)`` where ``witness`` is a
    0/1 colouring list when ``ok``, otherwise an odd cycle as a vertex list.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    queue.append(w)
                elif color[w] == color[u]:
                    if not certificate:
                        return False
                    return False, _odd_cycle(parent, u, w)
    return (True, color) if certificate else True


def _odd_cycle(parent: list[int], u: int, w: int) -> list[int]:
    def chain(x: int) -> list[int]:
        out = [x]
        while parent[x] != -1:
            x = parent[x]
            out.append(x)
        return out

    pu, pw = chain(u), chain(w)
    common = set(pu) & set(pw)
    pu = pu[: next(i for i, x in enumerate(pu) if x in common) + 1]
    pw = pw[: next(i for i, x in enumerate(pw) if x in common)]
    return pu + list(reversed(pw))


def is_acyclic(g: Graph) -> bool:
    """True iff every component is a tree."""
    comps = connected_components(g)
    return g.m == g.n - len(comps)
