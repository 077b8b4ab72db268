"""Recognition of strictly chordality-k graphs by peeling a vertex cycle ordering.

A connected graph is SC_k (every induced cycle has length exactly ``k``) iff
it can be built from ``K1`` or ``C_k`` by repeatedly attaching a pendant
vertex, a ``C_k`` through one vertex, a ``C_k`` across an edge, or (``k``
even) a path of ``k/2 - 1`` new vertices between two vertices at distance
``k/2``.  :func:`compute_vco` runs that construction backwards.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .graph import Graph, enumerate_induced_cycles, induced_subgraph, is_connected, vertex_set

__all__ = [
    "UnitKind",
    "VcoUnit",
    "Vco",
    "Rejection",
    "Cage",
    "compute_vco",
    "validate_vco",
    "detect_cage",
    "format_vco",
    "parse_vco",
]


class UnitKind(str, Enum):
    PENDANT_VERTEX = "PendantVertex"
    ZERO_PENDANT_CYCLE = "ZeroPendantCycle"
    ONE_PENDANT_CYCLE = "OnePendantCycle"
    TWO_PENDANT_CYCLE = "TwoPendantCycle"
    HALF_PLUS_ONE_PENDANT_CYCLE = "HalfPlusOnePendantCycle"

    @property
    def is_cycle(self) -> bool:
        return self is not UnitKind.PENDANT_VERTEX


@dataclass(frozen=True)
class VcoUnit:
    """One peeled piece.

    ``vertices`` is the unit's label in cyclic order (a single vertex for a
    pendant).  ``attachment`` are the label vertices that stay in the graph,
    ``removed`` the ones deleted when the unit is peeled.
    """

    kind: UnitKind
    vertices: tuple[int, ...]
    attachment: tuple[int, ...]
    removed: tuple[int, ...]


@dataclass(frozen=True)
class Vco:
    k: int
    units: tuple[VcoUnit, ...]
    core: tuple[int, ...]
    accepted: bool = field(default=True, init=False)
    # solvers memoise their elimination plan and results here
    cache: dict = field(default_factory=dict, init=False, compare=False, repr=False)

    @property
    def core_is_cycle(self) -> bool:
        return len(self.core) > 1


@dataclass(frozen=True)
class Rejection:
    """Negative recognition answer.

    ``cycle`` is a chordless cycle whose length differs from ``k`` when one
    was found; otherwise ``residual`` lists the vertices left when no unit
    could be peeled.
    """

    k: int
    reason: str
    cycle: tuple[int, ...] | None = None
    residual: tuple[int, ...] = ()
    accepted: bool = field(default=False, init=False)


def compute_vco(g: Graph, k: int) -> Vco | Rejection:
    """Peel ``g`` into a vertex cycle ordering, or explain why it is not SC_k.

    Pendant vertices are peeled first, smallest id first; otherwise the
    degree-2 run containing the smallest eligible vertex is tried.  Runs
    are evaluated once and revisited only after a neighbouring degree
    changes, so the whole pass is near linear for bounded ``k``.
    """
    if k < 5:
        raise ValueError("k must be at least 5")
    if g.n == 0:
        raise ValueError("graph has no vertices")
    if not is_connected(g):
        raise ValueError("graph is disconnected")

    adj = [set(a) for a in g.adj]
    alive = [True] * g.n
    n_alive = g.n
    units: list[VcoUnit] = []
    heap = [(0 if len(adj[v]) == 1 else 1, v) for v in range(g.n) if len(adj[v]) <= 2]
    heapq.heapify(heap)
    checked: set[int] = set()

    def push(v: int) -> None:
        checked.discard(v)
        d = len(adj[v])
        if d <= 2:
            heapq.heappush(heap, (0 if d == 1 else 1, v))

    def remove(xs: Iterable[int]) -> None:
        nonlocal n_alive
        touched = set()
        for x in xs:
            alive[x] = False
            n_alive -= 1
            for w in adj[x]:
                adj[w].discard(x)
                touched.add(w)
            adj[x] = set()
        for w in touched:
            if alive[w]:
                push(w)

    while n_alive > 1:
        if not heap:
            return _stuck(g, adj, alive, k)
        _, v = heapq.heappop(heap)
        if not alive[v] or v in checked:
            continue
        d = len(adj[v])
        if d == 1:
            (a,) = adj[v]
            units.append(VcoUnit(UnitKind.PENDANT_VERTEX, (v,), (a,), (v,)))
            remove([v])
            continue
        if d != 2:
            continue
        path, a, b = _walk_run(adj, v)
        checked.update(path)
        m = len(path)
        if a is None:
            if m == k:
                return _finish(units, k, tuple(path))
            return Rejection(k, f"residual is a chordless cycle of length {m}", tuple(path))
        if a == b:
            if m + 1 != k:
                return Rejection(k, f"pendant cycle of length {m + 1}", (a, *path))
            units.append(
                VcoUnit(UnitKind.ONE_PENDANT_CYCLE, (a, *path), (a,), vertex_set(path))
            )
            remove(path)
        elif b in adj[a]:
            if m + 2 != k:
                return Rejection(k, f"cycle of length {m + 2} across an edge", (a, *path, b))
            units.append(
                VcoUnit(UnitKind.TWO_PENDANT_CYCLE, (a, *path, b), vertex_set((a, b)), vertex_set(path))
            )
            remove(path)
        else:
            budget = k - m - 1
            q = _bounded_path(adj, a, b, set(path), budget)
            if q is None:
                continue
            if len(q) - 1 < budget:
                cyc = (a, *path, b, *reversed(q[1:-1]))
                return Rejection(k, f"chordless cycle of length {len(cyc)}", cyc)
            if k % 2 == 0 and m == k // 2 - 1:
                units.append(
                    VcoUnit(
                        UnitKind.HALF_PLUS_ONE_PENDANT_CYCLE,
                        (a, *path, b, *reversed(q[1:-1])),
                        vertex_set((a, b)),
                        vertex_set(path),
                    )
                )
                remove(path)
            # any other run closing a k-cycle is only peelable once its ends shrink
    core = tuple(v for v in range(g.n) if alive[v])
    return _finish(units, k, core)


def _finish(units: list[VcoUnit], k: int, core: tuple[int, ...]) -> Vco:
    # attachment of a one-vertex cycle unit lies on a residual cycle iff it
    # appears on the label of a later cycle unit or on the core cycle
    on_cycle = set(core) if len(core) > 1 else set()
    labelled: list[VcoUnit] = []
    for unit in reversed(units):
        if unit.kind is UnitKind.ONE_PENDANT_CYCLE and unit.attachment[0] not in on_cycle:
            unit = VcoUnit(UnitKind.ZERO_PENDANT_CYCLE, unit.vertices, unit.attachment, unit.removed)
        if unit.kind.is_cycle:
            on_cycle.update(unit.vertices)
        labelled.append(unit)
    labelled.reverse()
    return Vco(k, tuple(labelled), core)


def _walk_run(adj: list[set[int]], v: int) -> tuple[list[int], int | None, int | None]:
    """Maximal path of degree-2 vertices through ``v`` and its two end neighbours.

    Returns ``(cycle, None, None)`` if the run closes on itself.
    """
    left, right = tuple(adj[v])
    fwd = [v]
    prev, cur = v, right
    while len(adj[cur]) == 2 and cur != v:
        fwd.append(cur)
        x, y = adj[cur]
        prev, cur = cur, (y if x == prev else x)
    if cur == v:
        return fwd, None, None
    b = cur
    back = []
    prev, cur = v, left
    while len(adj[cur]) == 2:
        back.append(cur)
        x, y = adj[cur]
        prev, cur = cur, (y if x == prev else x)
    a = cur
    return back[::-1] + fwd, a, b


def _bounded_path(
    adj: list[set[int]], a: int, b: int, avoid: set[int], limit: int
) -> list[int] | None:
    """Shortest a-b path avoiding ``avoid`` if its length is at most ``limit``."""
    parent = {a: a}
    frontier = [a]
    for _ in range(limit):
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w in parent or w in avoid:
                    continue
                parent[w] = u
                if w == b:
                    path = [b]
                    while path[-1] != a:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(w)
        if not nxt:
            return None
        frontier = nxt
    return None


def _stuck(g: Graph, adj: list[set[int]], alive: list[bool], k: int) -> Rejection:
    residual = tuple(v for v in range(g.n) if alive[v])
    if len(residual) <= 24:
        h, mapping = induced_subgraph(g, residual)
        for cyc in enumerate_induced_cycles(h):
            if len(cyc) != k:
                return Rejection(
                    k, f"chordless cycle of length {len(cyc)}", tuple(mapping[i] for i in cyc), residual
                )
    for v in residual:
        if len(adj[v]) != 2:
            continue
        path, a, b = _walk_run(adj, v)
        if a is None or a == b or b in adj[a]:
            continue
        q = _bounded_path(adj, a, b, set(path), len(residual))
        if q is not None and len(path) + len(q) != k:
            cyc = (a, *path, b, *reversed(q[1:-1]))
            return Rejection(k, f"chordless cycle of length {len(cyc)}", cyc, residual)
    return Rejection(k, "no peelable unit in residual", None, residual)


def _on_cycle(adj: dict[int, set[int]], a: int) -> bool:
    """Whether ``a`` lies on a cycle of the graph given by ``adj``."""
    for w in adj[a]:
        seen = {a, w}
        stack = [w]
        while stack:
            u = stack.pop()
            for x in adj[u]:
                if u == w and x == a:
                    continue
                if x == a:
                    return True
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
    return False


def validate_vco(g: Graph, vco: Vco) -> bool:
    """Replay ``vco`` in reverse and check that it rebuilds exactly ``g``."""
    k = vco.k
    n = g.n
    every = [v for u in vco.units for v in u.removed] + list(vco.core)
    if any(not 0 <= v < n for v in every) or sorted(every) != list(range(n)):
        return False
    built: set[int] = set(vco.core)
    if len(vco.core) != 1:
        if len(vco.core) != k or not _is_chordless_cycle(g, vco.core):
            return False
    edges = sum(1 for u in vco.core for w in g.adj[u] if w in built) // 2
    live = {v: set(g.adj[v]) & built for v in built}
    for unit in reversed(vco.units):
        xs = set(unit.removed)
        att = unit.attachment
        if not set(att) <= built or xs & built:
            return False
        scope = built | xs
        for x in xs:
            if not (g.adj[x] & scope) <= xs | set(att):
                return False
        kind = unit.kind
        if kind is UnitKind.PENDANT_VERTEX:
            if len(xs) != 1 or len(att) != 1 or unit.vertices != unit.removed:
                return False
            (x,) = xs
            if g.adj[x] & scope != set(att):
                return False
        else:
            label = set(unit.vertices)
            if len(unit.vertices) != k or not xs | set(att) <= label:
                return False
            if kind is not UnitKind.HALF_PLUS_ONE_PENDANT_CYCLE and label != xs | set(att):
                return False
            if not _is_chordless_cycle_in(g, unit.vertices, scope):
                return False
            if kind in (UnitKind.ZERO_PENDANT_CYCLE, UnitKind.ONE_PENDANT_CYCLE):
                if len(att) != 1 or len(xs) != k - 1:
                    return False
                if (kind is UnitKind.ONE_PENDANT_CYCLE) != _on_cycle(live, att[0]):
                    return False
            elif kind is UnitKind.TWO_PENDANT_CYCLE:
                if len(att) != 2 or len(xs) != k - 2 or not g.has_edge(*att):
                    return False
            else:
                if k % 2 or len(att) != 2 or len(xs) != k // 2 - 1:
                    return False
                if _distance(live, att[0], att[1]) != k // 2:
                    return False
        for x in xs:
            nb = g.adj[x] & scope
            live[x] = set(nb)
            for w in nb:
                if w in built:
                    live[w].add(x)
        edges += sum(len(g.adj[x] & built) for x in xs) + sum(len(g.adj[x] & xs) for x in xs) // 2
        built = scope
    return built == set(range(n)) and edges == g.m


def _is_chordless_cycle(g: Graph, cyc: tuple[int, ...]) -> bool:
    return _is_chordless_cycle_in(g, cyc, set(cyc))


def _is_chordless_cycle_in(g: Graph, cyc: tuple[int, ...], scope: set[int]) -> bool:
    s = set(cyc)
    if len(s) != len(cyc) or len(cyc) < 3 or not s <= scope:
        return False
    L = len(cyc)
    for i, v in enumerate(cyc):
        if g.adj[v] & s != {cyc[i - 1], cyc[(i + 1) % L]}:
            return False
    return True


def _distance(adj: dict[int, set[int]], a: int, b: int) -> int | None:
    dist = {a: 0}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            return dist[u]
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return None


@dataclass(frozen=True)
class Cage:
    """Two hubs joined by parallel paths of degree-2 vertices."""

    hubs: tuple[int, int]
    paths: tuple[tuple[int, ...], ...]


def detect_cage(g: Graph, k: int) -> list[Cage]:
    """Hub pairs joined by at least two runs of ``k/2 - 1`` degree-2 vertices.

    With exactly two runs the hubs must both have degree at least three,
    otherwise the pair is just two antipodal vertices of a lone cycle.
    """
    if k % 2:
        raise ValueError("cages only arise for even k")
    want = k // 2 - 1
    adj = [set(a) for a in g.adj]
    groups: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    seen: set[int] = set()
    for v in range(g.n):
        if v in seen or len(adj[v]) != 2:
            continue
        path, a, b = _walk_run(adj, v)
        seen.update(path)
        if a is None or a == b or len(path) != want:
            continue
        if a > b:
            a, b = b, a
            path = path[::-1]
        groups.setdefault((a, b), []).append(tuple(path))
    out = []
    for (a, b), paths in sorted(groups.items()):
        if len(paths) < 2:
            continue
        if len(paths) == 2 and (g.degree(a) < 3 or g.degree(b) < 3):
            continue
        out.append(Cage((a, b), tuple(sorted(paths))))
    return out


def _ids(vs: Iterable[int]) -> str:
    return ",".join(str(v + 1) for v in vs)


def format_vco(vco: Vco) -> str:
    """Line format: ``k <k>``, one ``u`` line per unit, then ``core``; 1-indexed."""
    lines = [f"k {vco.k}"]
    for u in vco.units:
        lines.append(
            f"u {u.kind.value} attach={_ids(u.attachment)} removed={_ids(u.removed)} label={_ids(u.vertices)}"
        )
    lines.append("core " + " ".join(str(v + 1) for v in vco.core))
    return "\n".join(lines) + "\n"


def parse_vco(text: str) -> Vco:
    k = None
    units = []
    core: tuple[int, ...] = ()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c "):
            continue
        head, _, rest = line.partition(" ")
        if head == "k":
            k = int(rest)
        elif head == "core":
            core = tuple(int(t) - 1 for t in rest.split())
        elif head == "u":
            kind_s, *pairs = rest.split()
            fields = dict(p.split("=", 1) for p in pairs)
            parse = lambda s: tuple(int(t) - 1 for t in s.split(",") if t)  # noqa: E731
            removed = parse(fields["removed"])
            label = parse(fields.get("label", "")) or removed
            units.append(VcoUnit(UnitKind(kind_s), label, parse(fields["attach"]), removed))
        else:
            raise ValueError(f"unrecognised VCO line {line!r}")
    if k is None:
        raise ValueError("missing 'k' line")
    return Vco(k, tuple(units), core)
