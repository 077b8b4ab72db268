"""Problem kinds and solution records shared by solvers, oracle and CLI."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, connected_components, induced_subgraph, is_acyclic, is_bipartite


class ProblemKind(str, Enum):
    MIS = "MIS"
    VERTEX_COVER = "VertexCover"
    DOMINATING_SET = "DominatingSet"
    OCT = "OCT"
    ECT = "ECT"
    FVS = "FVS"
    STEINER_TREE = "SteinerTree"
    CONNECTED_DOMINATING_SET = "ConnectedDominatingSet"

    @classmethod
    def parse(cls, name: str) -> "ProblemKind":
        key = name.replace("-", "").replace("_", "").lower()
        aliases = {
            "mis": cls.MIS,
            "vc": cls.VERTEX_COVER,
            "vertexcover": cls.VERTEX_COVER,
            "ds": cls.DOMINATING_SET,
            "dominatingset": cls.DOMINATING_SET,
            "oct": cls.OCT,
            "ect": cls.ECT,
            "fvs": cls.FVS,
            "steiner": cls.STEINER_TREE,
            "steinertree": cls.STEINER_TREE,
            "cds": cls.CONNECTED_DOMINATING_SET,
            "connecteddominatingset": cls.CONNECTED_DOMINATING_SET,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown problem {name!r}") from None


@dataclass(frozen=True)
class Solution:
    problem: ProblemKind
    vertices: tuple[int, ...]
    value: int

    def to_json(self) -> dict:
        return {
            "problem": self.problem.value,
            "value": self.value,
            "vertices": [v + 1 for v in self.vertices],
        }


def make_solution(problem: ProblemKind, vertices, terminals=()) -> Solution:
    vs = tuple(sorted(set(vertices)))
    if problem is ProblemKind.STEINER_TREE:
        value = len(set(vs) - set(terminals))
    else:
        value = len(vs)
    return Solution(problem, vs, value)


def is_feasible(problem: ProblemKind, g: Graph, candidate, terminals=()) -> bool:
    """Feasibility predicate of ``problem`` for the vertex set ``candidate``."""
    s = set(candidate)
    if not s <= set(range(g.n)):
        raise ValueError("candidate contains vertices outside the graph")
    rest = [v for v in range(g.n) if v not in s]
    if problem is ProblemKind.MIS:
        return all(not (g.adj[v] & s) for v in s)
    if problem is ProblemKind.VERTEX_COVER:
        return all(u in s or v in s for u, v in g.edges())
    if problem is ProblemKind.DOMINATING_SET:
        return all(v in s or g.adj[v] & s for v in range(g.n))
    if problem is ProblemKind.OCT:
        return is_bipartite(induced_subgraph(g, rest)[0])
    if problem is ProblemKind.FVS:
        return is_acyclic(induced_subgraph(g, rest)[0])
    if problem is ProblemKind.ECT:
        from .graph import enumerate_induced_cycles

        h = induced_subgraph(g, rest)[0]
        return all(len(c) % 2 for c in enumerate_induced_cycles(h, max_n=max(24, h.n)))
    if problem is ProblemKind.STEINER_TREE:
        t = set(terminals)
        if not t or not t <= s:
            return False
        return len(connected_components(induced_subgraph(g, sorted(s))[0])) == 1
    if problem is ProblemKind.CONNECTED_DOMINATING_SET:
        if not s:
            return g.n == 0
        dom = all(v in s or g.adj[v] & s for v in range(g.n))
        return dom and len(connected_components(induced_subgraph(g, sorted(s))[0])) == 1
    raise ValueError(problem)
