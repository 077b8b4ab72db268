"""Polynomial solvers for SC_k graphs driven by a vertex cycle ordering.

Every VCO unit removes a path whose ends hang on at most two surviving
vertices.  Eliminating the unit's vertices one at a time therefore only
ever folds a vertex into one neighbour (leaf) or replaces it by a table on
the pair of its two neighbours (series), exactly like series-parallel
reduction.  Each problem supplies small state tables and composition rules
for those two moves, so the solvers are exact and linear in ``n``.
"""

from __future__ import annotations

import heapq
from itertools import product

from .graph import Graph, connected_components, induced_subgraph
from .problems import ProblemKind, Solution, make_solution
from .vco import Rejection, Vco, compute_vco

__all__ = [
    "InvalidVcoError",
    "NotSCkError",
    "elimination_plan",
    "solve_mis",
    "solve_vertex_cover",
    "solve_dominating_set",
    "solve_oct",
    "solve_ect",
    "solve_fvs",
    "solve_steiner",
    "solve_connected_dominating_set",
    "solve_sck",
]

INF = float("inf")


class InvalidVcoError(ValueError):
    pass


class NotSCkError(ValueError):
    def __init__(self, rejection: Rejection):
        super().__init__(rejection.reason)
        self.rejection = rejection


def elimination_plan(g: Graph, vco: Vco) -> list[tuple]:
    """Elimination moves for ``g`` following the unit order of ``vco``.

    Moves are ``("L", x, a)`` (fold ``x`` into its only neighbour ``a``),
    ``("S", x, a, b)`` (replace ``x`` by an ``a``-``b`` table) and
    ``("R", x)`` (``x`` is the last vertex of its component).
    """
    cached = vco.cache.get("plan")
    if cached is not None and cached[0] is g:
        return cached[1]
    order = [v for u in vco.units for v in u.removed] + list(vco.core)
    if sorted(order) != list(range(g.n)):
        raise InvalidVcoError("units and core do not partition the vertex set")
    rank = [0] * g.n
    for i, unit in enumerate(vco.units):
        for v in unit.removed:
            rank[v] = i
    for v in vco.core:
        rank[v] = len(vco.units)
    # vertices of earlier units go first; a later vertex is taken only when
    # nothing earlier has table degree <= 2 (a cage hub that an earlier ear
    # tied to the other hub, for instance)
    tadj = [set(a) for a in g.adj]
    heap = [(rank[v], v) for v in range(g.n) if len(tadj[v]) <= 2]
    heapq.heapify(heap)
    done = [False] * g.n
    ops: list[tuple] = []
    while heap:
        _, x = heapq.heappop(heap)
        if done[x] or len(tadj[x]) > 2:
            continue
        done[x] = True
        nb = tadj[x]
        tadj[x] = set()
        for y in nb:
            tadj[y].discard(x)
        if len(nb) == 2:
            a, b = sorted(nb)
            tadj[a].add(b)
            tadj[b].add(a)
            ops.append(("S", x, a, b))
        elif nb:
            (a,) = nb
            ops.append(("L", x, a))
        else:
            ops.append(("R", x))
        for y in nb:
            if len(tadj[y]) <= 2:
                heapq.heappush(heap, (rank[y], y))
    if len(ops) != g.n:
        left = [v for v in range(g.n) if not done[v]]
        raise InvalidVcoError(f"vertices {left[:10]} cannot be eliminated")
    vco.cache["plan"] = (g, ops)
    return ops


class _Algebra:
    """State spaces and composition rules of one problem, compiled to indices."""

    def __init__(self, vkeys, ekeys, base_e, merge_v, merge_e, leaf, series, final, member, monotone=None):
        self.vkeys = list(vkeys)
        self.ekeys = list(ekeys)
        vi = {k: i for i, k in enumerate(self.vkeys)}
        ei = {k: i for i, k in enumerate(self.ekeys)}

        def close(rules, out_index):
            # a cheaper "stronger" state is also a valid "weaker" one
            rules = list(rules)
            if monotone is not None:
                extra = []
                for r in rules:
                    for weaker in monotone(r[0]):
                        extra.append((weaker,) + tuple(r[1:]))
                rules += extra
            return [(out_index[r[0]],) + tuple(r[1:]) for r in rules]

        self.base_e = [base_e.get(k, INF) for k in self.ekeys]
        self.merge_v = [(o, vi[a], vi[b]) for o, a, b in close(merge_v, vi)]
        self.merge_e = [(o, ei[a], ei[b]) for o, a, b in close(merge_e, ei)]
        self.leaf = [(o, vi[a], ei[b]) for o, a, b in close(leaf, vi)]
        self.series = [(o, vi[a], ei[b], ei[c]) for o, a, b, c in close(series, ei)]
        self.final = [vi[k] for k in final]
        self.member = {vi[k] for k in member}
        tp = [ei[(k[1], k[0]) + tuple(k[2:])] for k in self.ekeys]
        self.tperm = tp
        self.vi = vi
        # [flipped] -> leaf rules whose edge index reads a table stored as (a, x)
        self.leaf_by_flip = [self.leaf, [(o, i, tp[j]) for o, i, j in self.leaf]]
        # [first flipped][second flipped] -> series rules
        self.series_by_flip = [
            [
                [(o, i, tp[j] if fa else j, tp[k] if fb else k) for o, i, j, k in self.series]
                for fb in (False, True)
            ]
            for fa in (False, True)
        ]


def _weaker(key, strong, weak, positions):
    """All keys obtained by weakening any non-empty subset of ``positions``."""
    hits = [i for i in positions if key[i] == strong] if isinstance(key, tuple) else []
    out = []
    for mask in range(1, 1 << len(hits)):
        k = list(key)
        for j, i in enumerate(hits):
            if mask >> j & 1:
                k[i] = weak
        out.append(tuple(k))
    return out


def _mis_algebra() -> _Algebra:
    b = (0, 1)
    return _Algebra(
        vkeys=b,
        ekeys=list(product(b, b)),
        base_e={(0, 0): 0, (0, 1): 0, (1, 0): 0},
        merge_v=[(s, s, s) for s in b],
        merge_e=[(k, k, k) for k in product(b, b)],
        leaf=[(sa, sx, (sx, sa)) for sa in b for sx in b],
        series=[((sa, sb), sx, (sa, sx), (sx, sb)) for sa in b for sb in b for sx in b],
        final=b,
        member=[1],
    )


# dominating set states: in the set, out and dominated by this part, out with no promise
_I, _P, _N = 0, 1, 2


def _ds_algebra() -> _Algebra:
    s3 = (_I, _P, _N)
    split = {_I: [(_I, _I)], _P: [(_P, _N), (_N, _P)], _N: [(_N, _N)]}
    base = {k: 0 for k in product(s3, s3)}
    for k in [(_P, _P), (_P, _N), (_N, _P)]:
        del base[k]
    series = []
    for sa, sb in product(s3, s3):
        out = (sa, sb)
        series += [
            (out, _I, (sa, _I), (_I, sb)),
            (out, _P, (sa, _N), (_N, sb)),
            (out, _N, (sa, _P), (_N, sb)),
            (out, _N, (sa, _N), (_P, sb)),
        ]

    def monotone(key):
        if isinstance(key, tuple):
            return _weaker(key, _P, _N, (0, 1))
        return [_N] if key == _P else []

    return _Algebra(
        vkeys=s3,
        ekeys=list(product(s3, s3)),
        base_e=base,
        merge_v=[(s, a, b) for s in s3 for a, b in split[s]],
        merge_e=[
            ((sa, sb), (a1, b1), (a2, b2))
            for sa, sb in product(s3, s3)
            for a1, a2 in split[sa]
            for b1, b2 in split[sb]
        ],
        leaf=[r for sa in s3 for r in [(sa, _I, (_I, sa)), (sa, _P, (_N, sa)), (sa, _N, (_P, sa))]],
        series=series,
        final=[_I, _P],
        member=[_I],
        monotone=monotone,
    )


# feedback vertex set: kept/deleted, plus whether the part joins its two ends
_K, _D = 0, 1


def _fvs_algebra() -> _Algebra:
    b = (0, 1)
    merge_e = []
    for sa, sb, c1, c2 in product(b, b, b, b):
        if not (c1 and c2):
            merge_e.append(((sa, sb, c1 | c2), (sa, sb, c1), (sa, sb, c2)))
    series = []
    for sa, sb, sx, c1, c2 in product(b, b, b, b, b):
        c = 0 if sx == _D else c1 & c2
        series.append(((sa, sb, c), sx, (sa, sx, c1), (sx, sb, c2)))
    return _Algebra(
        vkeys=b,
        ekeys=list(product(b, b, b)),
        base_e={(_K, _K, 1): 0, (_K, _D, 0): 0, (_D, _K, 0): 0, (_D, _D, 0): 0},
        merge_v=[(s, s, s) for s in b],
        merge_e=merge_e,
        leaf=[(sa, sx, (sx, sa, c)) for sa in b for sx in b for c in b],
        series=series,
        final=b,
        member=[_D],
    )


# Steiner: vertex selected, unselected with nothing chosen below, or unselected
# with a finished connected solution somewhere below; edge flag is "ends joined"
# for two selected ends and "finished solution inside" for two unselected ends
_S, _OE, _OC = 0, 1, 2


def _steiner_algebra() -> _Algebra:
    b = (0, 1)
    SS1, SS0, SO, OS, OOE, OOC = (0, 0, 1), (0, 0, 0), (0, 1, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1)
    series = [
        (SS1, _S, SS1, SS1),
        (SS0, _S, SS1, SS0),
        (SS0, _S, SS0, SS1),
        (SS0, _OE, SO, OS),
        (SO, _S, SS1, SO),
        (SO, _OE, SO, OOE),
        (OS, _S, OS, SS1),
        (OS, _OE, OOE, OS),
        (OOE, _OE, OOE, OOE),
        (OOC, _S, OS, SO),
        (OOC, _OC, OOE, OOE),
        (OOC, _OE, OOC, OOE),
        (OOC, _OE, OOE, OOC),
    ]
    return _Algebra(
        vkeys=(_S, _OE, _OC),
        ekeys=list(product(b, b, b)),
        base_e={SS1: 0, SS0: 0, SO: 0, OS: 0, OOE: 0},
        merge_v=[(_S, _S, _S), (_OE, _OE, _OE), (_OC, _OC, _OE), (_OC, _OE, _OC)],
        merge_e=[
            (SS0, SS0, SS0),
            (SS1, SS1, SS0),
            (SS1, SS0, SS1),
            (SO, SO, SO),
            (OS, OS, OS),
            (OOE, OOE, OOE),
            (OOC, OOC, OOE),
            (OOC, OOE, OOC),
        ],
        leaf=[
            (_S, _S, SS1),
            (_S, _OE, OS),
            (_OE, _OE, OOE),
            (_OC, _OC, OOE),
            (_OC, _OE, OOC),
            (_OC, _S, SO),
        ],
        series=series,
        final=[_S, _OC],
        member=[_S],
        monotone=lambda key: [SS0] if key == SS1 else [],
    )


_ALGEBRAS: dict[str, _Algebra] = {}


def _algebra(name: str) -> _Algebra:
    if name not in _ALGEBRAS:
        _ALGEBRAS[name] = {"mis": _mis_algebra, "ds": _ds_algebra, "fvs": _fvs_algebra, "steiner": _steiner_algebra}[name]()
    return _ALGEBRAS[name]


def _run(g: Graph, plan: list[tuple], alg: _Algebra, base_v) -> tuple[float, set[int]]:
    """Execute ``plan`` under ``alg``; return optimum cost and the chosen vertices.

    A table node is ``(table, kids, choice, vertex)``.  ``choice[i]`` is the
    rule that produced entry ``i``; its tail holds the entries of ``kids``
    behind it.  Edge tables are always stored for the sorted vertex pair, so
    rules come precompiled for both orientations of each input.
    """
    nv, ne = len(alg.vkeys), len(alg.ekeys)
    vnode = [(base_v(x), (), None, x) for x in range(g.n)]
    base = (alg.base_e, (), None, None)
    enode = dict.fromkeys(g.edges(), base)
    leaf_rules, series_rules = alg.leaf_by_flip, alg.series_by_flip
    merge_v, merge_e = alg.merge_v, alg.merge_e

    roots = []
    for op in plan:
        x = op[1]
        vx = vnode[x]
        V = vx[0]
        if op[0] == "S":
            a, b = op[2], op[3]
            na = enode.pop((a, x) if a < x else (x, a))
            nb = enode.pop((x, b) if x < b else (b, x))
            A, B = na[0], nb[0]
            out = [INF] * ne
            ch = [None] * ne
            for r in series_rules[x < a][b < x]:
                c = V[r[1]] + A[r[2]] + B[r[3]]
                if c < out[r[0]]:
                    out[r[0]] = c
                    ch[r[0]] = r
            new = (out, (vx, na, nb), ch, None)
            old = enode.get((a, b))
            if old is not None:
                t1, t2 = old[0], out
                out = [INF] * ne
                ch = [None] * ne
                for r in merge_e:
                    c = t1[r[1]] + t2[r[2]]
                    if c < out[r[0]]:
                        out[r[0]] = c
                        ch[r[0]] = r
                new = (out, (old, new), ch, None)
            enode[(a, b)] = new
        elif op[0] == "L":
            a = op[2]
            en = enode.pop((x, a) if x < a else (a, x))
            E = en[0]
            out = [INF] * nv
            ch = [None] * nv
            for r in leaf_rules[a < x]:
                c = V[r[1]] + E[r[2]]
                if c < out[r[0]]:
                    out[r[0]] = c
                    ch[r[0]] = r
            w = (out, (vx, en), ch, None)
            va = vnode[a]
            t1 = va[0]
            out = [INF] * nv
            ch = [None] * nv
            for r in merge_v:
                c = t1[r[1]] + w[0][r[2]]
                if c < out[r[0]]:
                    out[r[0]] = c
                    ch[r[0]] = r
            vnode[a] = (out, (va, w), ch, None)
        else:
            roots.append(vx)

    total = 0
    member = alg.member
    chosen: set[int] = set()
    stack = []
    for root in roots:
        best = min(alg.final, key=lambda i: root[0][i])
        total += root[0][best]
        stack.append((root, best))
    pop, push = stack.pop, stack.append
    while stack:
        node, idx = pop()
        kids = node[1]
        if not kids:
            if node[3] is not None and idx in member:
                chosen.add(node[3])
            continue
        r = node[2][idx]
        push((kids[0], r[1]))
        push((kids[1], r[2]))
        if len(kids) == 3:
            push((kids[2], r[3]))
    return total, chosen


def _check(g: Graph, vco: Vco) -> list[tuple]:
    if not isinstance(vco, Vco):
        raise InvalidVcoError("expected a Vco")
    return elimination_plan(g, vco)


def _solve_cached(g: Graph, vco: Vco, name: str, compute):
    key = ("solution", name)
    hit = vco.cache.get(key)
    if hit is not None and hit[0] is g:
        return hit[1]
    result = compute()
    vco.cache[key] = (g, result)
    return result


def solve_mis(g: Graph, vco: Vco) -> Solution:
    """Maximum independent set."""
    plan = _check(g, vco)

    def compute():
        _, chosen = _run(g, plan, _algebra("mis"), lambda x: [0, -1])
        return make_solution(ProblemKind.MIS, chosen)

    return _solve_cached(g, vco, "mis", compute)


def solve_vertex_cover(g: Graph, vco: Vco) -> Solution:
    """Minimum vertex cover as the complement of a maximum independent set."""
    mis = set(solve_mis(g, vco).vertices)
    return make_solution(ProblemKind.VERTEX_COVER, (v for v in range(g.n) if v not in mis))


def solve_dominating_set(g: Graph, vco: Vco) -> Solution:
    """Minimum dominating set.

    Among minimum sets, one with the largest total degree is returned; this
    keeps leaves out of the set, which matters when the set is later
    connected into a connected dominating set.
    """
    plan = _check(g, vco)

    def compute():
        big = 2 * g.m + 1
        _, chosen = _run(g, plan, _algebra("ds"), lambda x: [big - len(g.adj[x]), INF, 0])
        return make_solution(ProblemKind.DOMINATING_SET, chosen)

    return _solve_cached(g, vco, "ds", compute)


def _fvs(g: Graph, vco: Vco, plan) -> set[int]:
    def compute():
        _, chosen = _run(g, plan, _algebra("fvs"), lambda x: [0, 1])
        return frozenset(chosen)

    return _solve_cached(g, vco, "fvs", compute)


def solve_fvs(g: Graph, vco: Vco) -> Solution:
    """Minimum feedback vertex set."""
    plan = _check(g, vco)
    return make_solution(ProblemKind.FVS, _fvs(g, vco, plan))


def solve_oct(g: Graph, vco: Vco) -> Solution:
    """Minimum odd cycle transversal.

    Every induced cycle has length k, so for even k the graph is bipartite,
    and for odd k a set leaves a bipartite graph iff it leaves a forest.
    """
    plan = _check(g, vco)
    if vco.k % 2 == 0:
        return make_solution(ProblemKind.OCT, ())
    return make_solution(ProblemKind.OCT, _fvs(g, vco, plan))


def solve_ect(g: Graph, vco: Vco) -> Solution:
    """Minimum even (induced) cycle transversal; the mirror image of OCT."""
    plan = _check(g, vco)
    if vco.k % 2 == 1:
        return make_solution(ProblemKind.ECT, ())
    return make_solution(ProblemKind.ECT, _fvs(g, vco, plan))


def solve_steiner(g: Graph, vco: Vco, terminals) -> Solution:
    """Smallest connected vertex set containing ``terminals``.

    The value counts Steiner (non-terminal) vertices only.
    """
    plan = _check(g, vco)
    ts = set(terminals)
    if not ts:
        raise ValueError("terminal set is empty")
    if any(not 0 <= t < g.n for t in ts):
        raise ValueError("terminal out of range")
    comps = connected_components(g)
    if sum(1 for c in comps if ts & set(c)) > 1:
        raise ValueError("terminals lie in different components")
    cost, chosen = _run(g, plan, _algebra("steiner"), lambda x: [0, INF, INF] if x in ts else [1, 0, INF])
    if cost == INF:
        raise ValueError("no connected vertex set contains all terminals")
    return make_solution(ProblemKind.STEINER_TREE, chosen, ts)


def solve_connected_dominating_set(g: Graph, vco: Vco) -> Solution:
    """A minimum dominating set joined up by a Steiner tree over it."""
    if g.n == 0:
        return make_solution(ProblemKind.CONNECTED_DOMINATING_SET, ())
    if len(connected_components(g)) > 1:
        raise ValueError("connected dominating set needs a connected graph")
    ds = solve_dominating_set(g, vco).vertices
    tree = solve_steiner(g, vco, ds).vertices
    return make_solution(ProblemKind.CONNECTED_DOMINATING_SET, set(ds) | set(tree))


_SOLVERS = {
    ProblemKind.MIS: solve_mis,
    ProblemKind.VERTEX_COVER: solve_vertex_cover,
    ProblemKind.DOMINATING_SET: solve_dominating_set,
    ProblemKind.OCT: solve_oct,
    ProblemKind.ECT: solve_ect,
    ProblemKind.FVS: solve_fvs,
    ProblemKind.CONNECTED_DOMINATING_SET: solve_connected_dominating_set,
}


def solve_sck(problem, g: Graph, k: int, terminals=None) -> Solution:
    """Recognize and solve in one call, component by component.

    Raises :class:`NotSCkError` (carrying the rejection) when a component is
    not SC_k.
    """
    problem = ProblemKind(problem)
    if problem is ProblemKind.CONNECTED_DOMINATING_SET and g.n and len(connected_components(g)) > 1:
        raise ValueError("connected dominating set needs a connected graph")
    ts = set(terminals or ())
    if problem is ProblemKind.STEINER_TREE:
        if not ts:
            raise ValueError("terminal set is empty")
        if any(not 0 <= t < g.n for t in ts):
            raise ValueError("terminal out of range")
    picked: list[int] = []
    touched = 0
    for comp in connected_components(g):
        if problem is ProblemKind.STEINER_TREE:
            if not ts & set(comp):
                continue
            touched += 1
            if touched > 1:
                raise ValueError("terminals lie in different components")
        h, mapping = induced_subgraph(g, comp)
        vco = compute_vco(h, k)
        if isinstance(vco, Rejection):
            raise NotSCkError(
                Rejection(
                    vco.k,
                    vco.reason,
                    None if vco.cycle is None else tuple(mapping[v] for v in vco.cycle),
                    tuple(mapping[v] for v in vco.residual),
                )
            )
        if problem is ProblemKind.STEINER_TREE:
            local = {i for i, v in enumerate(mapping) if v in ts}
            sol = solve_steiner(h, vco, local)
        else:
            sol = _SOLVERS[problem](h, vco)
        picked.extend(mapping[v] for v in sol.vertices)
    return make_solution(problem, picked, ts)
