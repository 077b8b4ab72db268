"""Exact solvers for FVS, Steiner tree and dominating set on 2K2-free subclasses.

Each solver works from a minimal separator ``S`` and the split of the rest
into trivial components ``T`` and one non-trivial component ``G1``.
Recursive cases solve induced subgraphs of ``S`` plus ``G1``, which stay in
the same class and are strictly smaller.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, connected_components, induced_subgraph, is_acyclic, is_bipartite, is_connected
from .problems import ProblemKind, Solution, is_feasible, make_solution
from .separators import SubclassTag, classify_subclass, find_induced_c5, find_minimal_separator, in_subclass

__all__ = [
    "WrongSubclassError",
    "fvs_c3c5",
    "ds_c3c5",
    "steiner_c3c5",
    "fvs_split",
    "fvs_c3",
    "ds_c3",
    "steiner_c3",
    "fvs_c4",
    "connected_ds_2k2",
    "solve_2k2",
    "solver_tag",
    "SUPPORTED",
]


class WrongSubclassError(ValueError):
    pass


def _require(g: Graph, tag: SubclassTag) -> None:
    if not is_connected(g):
        raise ValueError("graph is disconnected")
    if not in_subclass(g, tag):
        raise WrongSubclassError(f"graph is not in class {tag.value}")


def _decomp(g: Graph, d):
    return find_minimal_separator(g) if d is None else d


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def _forest_after(g: Graph, removed) -> bool:
    gone = set(removed)
    return is_acyclic(induced_subgraph(g, [v for v in range(g.n) if v not in gone])[0])


def _drop_one(g: Graph, keep_from, extra=()):
    """``keep_from`` minus one vertex, plus ``extra``, choosing a vertex that leaves a forest."""
    keep_from = sorted(keep_from)
    for v in keep_from:
        cand = set(keep_from) - {v} | set(extra)
        if _forest_after(g, cand):
            return cand
    return set(keep_from[1:]) | set(extra)


def _sub(g: Graph, vs):
    """Induced subgraph on ``vs`` with a lifting function back to ``g``."""
    h, mp = induced_subgraph(g, sorted(vs))
    return h, lambda xs: {mp[x] for x in xs}


def _universal_to(g: Graph, d, pool=None):
    # first vertex of U adjacent to every vertex of G1 outside U
    rest = set(d.G1) - set(d.U)
    for u in d.U if pool is None else pool:
        if rest <= g.adj[u]:
            return u
    return None


# ---------------------------------------------------------------- C3C5-free


def fvs_c3c5(g: Graph, d=None) -> Solution:
    """Minimum FVS of a connected (2K2, C3, C5)-free graph.

    With only trivial components the graph is complete bipartite between
    ``S`` and ``T`` and one side but one vertex goes.  Otherwise the kept
    forest is found directly from the nested neighbourhoods.
    """
    _require(g, SubclassTag.C3C5_FREE)
    d = _decomp(g, d)
    if d is None:
        return make_solution(ProblemKind.FVS, ())
    if d.G1 is None:
        side = d.S if len(d.S) <= len(d.T) else d.T
        return make_solution(ProblemKind.FVS, side[1:])
    return make_solution(ProblemKind.FVS, _chain_fvs(g))


def _chain_fvs(g: Graph) -> set[int]:
    # An induced forest of a chain graph is a double star on its two
    # widest vertices p, q plus non-adjacent leaf sets A (hung on q) and
    # B (hung on p).  A holds the X-vertices whose neighbourhood fits
    # inside that of a chosen x0, B the Y-vertices outside N(x0).
    ok, side = is_bipartite(g, certificate=True)
    if not ok:
        raise WrongSubclassError("graph is not bipartite")
    X = [v for v in range(g.n) if side[v] == 0]
    Y = [v for v in range(g.n) if side[v] == 1]
    best: set[int] = set()
    for p in X + [None]:
        for q in Y + [None]:
            xs = [x for x in X if x != p]
            ys = [y for y in Y if y != q]
            for x0 in xs + [None]:
                reach = g.adj[x0] if x0 is not None else frozenset()
                a = [x for x in xs if g.adj[x] - {q} <= reach]
                b = [y for y in ys if y not in reach]
                kept = set(a) | set(b) | {v for v in (p, q) if v is not None}
                if len(kept) > len(best):
                    best = kept
    return set(range(g.n)) - best


def _drop_one_each(g: Graph, a, b):
    a, b = sorted(a), sorted(b)
    for x in a:
        for y in b:
            cand = (set(a) - {x}) | (set(b) - {y})
            if _forest_after(g, cand):
                return cand
    return set(a[1:]) | set(b[1:])


def ds_c3c5(g: Graph, d=None) -> Solution:
    _require(g, SubclassTag.C3C5_FREE)
    d = _decomp(g, d)
    if d is None:
        return make_solution(ProblemKind.DOMINATING_SET, (0,))
    x = d.S[0]
    if d.G1 is None:
        if len(d.S) == 1:
            return make_solution(ProblemKind.DOMINATING_SET, d.S)
        return make_solution(ProblemKind.DOMINATING_SET, (x, d.T[0]))
    u = _universal_to(g, d)
    if u is None:
        raise AssertionError("no vertex of U is universal to U'")
    return make_solution(ProblemKind.DOMINATING_SET, (x, u))


def _connected(g: Graph, vs) -> bool:
    vs = sorted(set(vs))
    return bool(vs) and len(connected_components(induced_subgraph(g, vs)[0])) == 1


def _check_terminals(g: Graph, terminals):
    r = set(terminals)
    if not r:
        raise ValueError("empty terminal set")
    if any(not 0 <= t < g.n for t in r):
        raise ValueError("terminal out of range")
    return r


def steiner_c3c5(g: Graph, d, terminals) -> Solution:
    _require(g, SubclassTag.C3C5_FREE)
    r = _check_terminals(g, terminals)
    d = _decomp(g, d)
    if _connected(g, r) or d is None:
        return make_solution(ProblemKind.STEINER_TREE, r, r)
    # connectors named by the case table; the cheapest that connects wins
    singles = [(x,) for x in d.S] + [(a,) for a in d.T]
    v = _universal_to(g, d) if d.G1 is not None else None
    if v is not None:
        singles.append((v,))
    pairs = [(v, x) for x in d.S] if v is not None else []
    for extra in singles + pairs:
        if _connected(g, r | set(extra)):
            return make_solution(ProblemKind.STEINER_TREE, r | set(extra), r)
    raise AssertionError("no connector from the case table joins the terminals")


# ---------------------------------------------------------------- split


def fvs_split(g: Graph, d=None) -> Solution:
    _require(g, SubclassTag.C4C5_FREE)
    return make_solution(ProblemKind.FVS, _fvs_split(g, _decomp(g, d), {}))


def _fvs_split(g: Graph, d, memo: dict) -> set[int]:
    if g in memo:
        return memo[g]
    memo[g] = out = _fvs_split_step(g, d, memo)
    return out


def _fvs_split_step(g: Graph, d, memo: dict) -> set[int]:
    if d is None:
        return set(range(2, g.n))
    S = list(d.S)
    if d.G1 is None:
        return _drop_one(g, S)
    h, lift = _sub(g, d.G1)
    if is_acyclic(h):
        for v in S:
            if len(g.adj[v] & set(d.G1)) == 1:
                return set(S) - {v}
        return set(S)
    best = None
    for j in S:
        hj, lift = _sub(g, set(d.G1) | {j})
        cand = (set(S) - {j}) | lift(_fvs_split(hj, find_minimal_separator(hj), memo))
        if best is None or len(cand) < len(best):
            best = cand
    return best


# ---------------------------------------------------------------- C3-free
#
# A connected (2K2, C3)-free graph is bipartite, and then (2K2, C3, C5)-free,
# or a blow-up of C5: five independent classes in cyclic order, consecutive
# classes complete to each other and nothing else.  Vertices of one class
# are twins, so the blow-up cases only decide how many vertices each class
# contributes.


def _c5_classes(g: Graph) -> list[list[int]] | None:
    """The five classes of a C5 blow-up in cyclic order, or None if bipartite."""
    if is_bipartite(g):
        return None
    cyc = find_induced_c5(g)
    pos = {c: i for i, c in enumerate(cyc)}
    classes: list[list[int]] = [[] for _ in range(5)]
    for v in range(g.n):
        if v in pos:
            classes[pos[v]].append(v)
            continue
        hit = sorted(pos[c] for c in g.adj[v] & set(cyc))
        for i in range(5):
            if hit == sorted(((i - 1) % 5, (i + 1) % 5)):
                classes[i].append(v)
                break
        else:
            raise AssertionError("triangle-free 2K2-free graph is not a C5 blow-up")
    return classes


def _class_choices(classes, options):
    def rec(i):
        if i == 5:
            yield ()
            return
        for k in sorted(set(options(classes[i]))):
            for rest in rec(i + 1):
                yield (k,) + rest

    return rec(0)


def fvs_c3(g: Graph) -> Solution:
    _require(g, SubclassTag.C3_FREE)
    classes = _c5_classes(g)
    if classes is None:
        return make_solution(ProblemKind.FVS, fvs_c3c5(g).vertices)
    best = None
    # keeping two vertices of a class closes the same cycles as keeping all
    for ks in _class_choices(classes, lambda c: (0, 1, len(c))):
        kept = [v for c, k in zip(classes, ks) for v in c[:k]]
        if (best is None or len(kept) > len(best)) and is_acyclic(induced_subgraph(g, kept)[0]):
            best = kept
    return make_solution(ProblemKind.FVS, set(range(g.n)) - set(best))


def ds_c3(g: Graph, d=None) -> Solution:
    """Minimum dominating set of a connected (2K2, C3)-free graph.

    Only trivial components give ``{x, a}`` (or ``S`` when ``|S| = 1``).
    Otherwise bipartite inputs go to the (2K2, C3, C5)-free solver and
    C5 blow-ups choose 0, 1 or all vertices of each class.
    """
    _require(g, SubclassTag.C3_FREE)
    d = _decomp(g, d)
    if d is None:
        return make_solution(ProblemKind.DOMINATING_SET, (0,))
    if d.G1 is None:
        if len(d.S) == 1:
            return make_solution(ProblemKind.DOMINATING_SET, d.S)
        return make_solution(ProblemKind.DOMINATING_SET, (d.S[0], d.T[0]))
    classes = _c5_classes(g)
    if classes is None:
        return make_solution(ProblemKind.DOMINATING_SET, ds_c3c5(g).vertices)
    best = None
    for ks in _class_choices(classes, lambda c: (0, 1, len(c))):
        covered = all(ks[i] == len(classes[i]) or ks[i - 1] or ks[(i + 1) % 5] for i in range(5))
        if covered and (best is None or sum(ks) < sum(best)):
            best = ks
    chosen = [v for c, k in zip(classes, best) for v in c[:k]]
    return make_solution(ProblemKind.DOMINATING_SET, chosen)


def steiner_c3(g: Graph, d, terminals) -> Solution:
    _require(g, SubclassTag.C3_FREE)
    r = _check_terminals(g, terminals)
    return make_solution(ProblemKind.STEINER_TREE, _steiner_c3(g, _decomp(g, d), r), r)


def _steiner_c3(g: Graph, d, r: set[int]) -> set[int]:
    if _connected(g, r) or d is None:
        return set(r)
    S, T = set(d.S), set(d.T)
    G1 = set(d.G1 or ())
    if r <= T:
        return r | {min(S)}
    if r <= S:
        return r | {min(T)}
    core = S | G1
    h, mp = induced_subgraph(g, sorted(core))
    back = {v: i for i, v in enumerate(mp)}

    def inner(terms):
        hd = find_minimal_separator(h) if h.n > 1 else None
        return {mp[v] for v in _steiner_c3(h, hd, {back[t] for t in terms})}

    # the rows of the case table overlap; every row that applies is tried
    options = []
    if r <= T | G1:
        options += [inner((r - T) | {x}) | (r & T) for x in sorted(S)]
    if r & (S | G1) and (not r & T or r & S):
        options.append(inner(r - T) | (r & T))
    return min(options, key=lambda f: (len(f), sorted(f)))


# ---------------------------------------------------------------- C4-free


def fvs_c4(g: Graph, d=None) -> Solution:
    _require(g, SubclassTag.C4_FREE)
    return make_solution(ProblemKind.FVS, _fvs_c4(g, _decomp(g, d), {}))


def _fvs_c4(g: Graph, d, memo: dict) -> set[int]:
    if g in memo:
        return memo[g]
    memo[g] = out = _fvs_c4_step(g, d, memo)
    return out


def _fvs_c4_step(g: Graph, d, memo: dict) -> set[int]:
    if d is None:
        return set(range(2, g.n))
    S = list(d.S)
    clique = all(v in g.adj[u] for u, v in combinations(S, 2))
    if not clique or d.G1 is None:
        return _drop_one(g, S)
    best = None
    for j in S:
        hj, lift = _sub(g, set(d.G1) | {j})
        cand = (set(S) - {j}) | lift(_fvs_c4(hj, find_minimal_separator(hj), memo))
        if best is None or len(cand) < len(best):
            best = cand
    return best


# ---------------------------------------------------------------- dispatch


def connected_ds_2k2(g: Graph, tag) -> Solution:
    """Minimum dominating set joined by a Steiner tree over it."""
    tag = SubclassTag(tag)
    if tag is SubclassTag.C3C5_FREE:
        ds, st = ds_c3c5, steiner_c3c5
    elif tag is SubclassTag.C3_FREE:
        ds, st = ds_c3, steiner_c3
    else:
        raise WrongSubclassError(f"no connected dominating set solver for {tag.value}")
    dom = ds(g).vertices
    tree = st(g, None, dom).vertices
    return make_solution(ProblemKind.CONNECTED_DOMINATING_SET, tree)


SUPPORTED = {
    (ProblemKind.FVS, SubclassTag.C3C5_FREE): lambda g, r: fvs_c3c5(g),
    (ProblemKind.DOMINATING_SET, SubclassTag.C3C5_FREE): lambda g, r: ds_c3c5(g),
    (ProblemKind.STEINER_TREE, SubclassTag.C3C5_FREE): lambda g, r: steiner_c3c5(g, None, r),
    (ProblemKind.FVS, SubclassTag.C4C5_FREE): lambda g, r: fvs_split(g),
    (ProblemKind.FVS, SubclassTag.C3_FREE): lambda g, r: fvs_c3(g),
    (ProblemKind.DOMINATING_SET, SubclassTag.C3_FREE): lambda g, r: ds_c3(g),
    (ProblemKind.STEINER_TREE, SubclassTag.C3_FREE): lambda g, r: steiner_c3(g, None, r),
    (ProblemKind.FVS, SubclassTag.C4_FREE): lambda g, r: fvs_c4(g),
    (ProblemKind.CONNECTED_DOMINATING_SET, SubclassTag.C3C5_FREE): lambda g, r: connected_ds_2k2(g, SubclassTag.C3C5_FREE),
    (ProblemKind.CONNECTED_DOMINATING_SET, SubclassTag.C3_FREE): lambda g, r: connected_ds_2k2(g, SubclassTag.C3_FREE),
}


def solver_tag(problem, g: Graph | None, tag) -> SubclassTag:
    """The class whose solver handles ``problem`` for a graph tagged ``tag``.

    Falls back to containing classes the graph belongs to; with ``g`` None
    any containing class with a solver is accepted.
    """
    problem, tag = ProblemKind(problem), SubclassTag(tag)
    for t in (tag, *_WIDER.get(tag, ())):
        if (problem, t) in SUPPORTED and (t is tag or g is None or in_subclass(g, t)):
            return t
    raise WrongSubclassError(f"no {problem.value} solver for class {tag.value}")


def solve_2k2(problem, g: Graph, tag=None, terminals=None) -> Solution:
    """Route ``problem`` to the solver for ``tag`` (detected when None)."""
    problem = ProblemKind(problem)
    if (terminals is not None) != (problem is ProblemKind.STEINER_TREE):
        raise ValueError("terminals are required for, and only for, SteinerTree")
    tag = classify_subclass(g) if tag is None else SubclassTag(tag)
    sol = SUPPORTED[(problem, solver_tag(problem, g, tag))](g, None if terminals is None else set(terminals))
    if not is_feasible(problem, g, sol.vertices, terminals or ()):
        raise AssertionError(f"{problem.value} solver returned an infeasible set")
    return sol


# classes containing each tag, most specific first
_WIDER = {
    SubclassTag.C3C4_FREE: (SubclassTag.C3C5_FREE, SubclassTag.C4C5_FREE, SubclassTag.C3_FREE, SubclassTag.C4_FREE),
    SubclassTag.C3C5_FREE: (SubclassTag.C3_FREE,),
    SubclassTag.C4C5_FREE: (SubclassTag.C4_FREE,),
}
