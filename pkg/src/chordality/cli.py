"""Command line entry point: recognize, solve, verify, generate, analyze.

Exit codes: 0 success, 1 usage or input error and any verification
mismatch, 2 a recognition rejection that comes with a witness.
Payload goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from .generators import GenerationError, gen_2k2_subclass, gen_sck
from .graph import Graph, GraphFormatError, GuardExceededError, is_connected, parse_graph
from .oracle import oracle_solve
from .problems import ProblemKind, is_feasible
from .sck_solvers import NotSCkError, solve_sck
from .separators import SubclassTag, classify_subclass, find_minimal_separator, is_2k2_free
from .twok2 import WrongSubclassError, solve_2k2, solver_tag
from .vco import Rejection, compute_vco, format_vco

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


class UsageError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("CHORDALITY_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"CHORDALITY_SEED is not an integer: {raw!r}") from None


def _read_graph(path: str) -> Graph:
    try:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_graph(data)


def _ids(vs) -> list[int]:
    return [v + 1 for v in vs]


def _parse_terminals(text: str | None, n: int) -> set[int] | None:
    if text is None:
        return None
    try:
        ts = {int(t) - 1 for t in text.split(",") if t.strip()}
    except ValueError:
        raise UsageError(f"bad terminal list {text!r}") from None
    if not ts:
        raise UsageError("terminal list is empty")
    if any(not 0 <= t < n for t in ts):
        raise UsageError("terminal out of range")
    return ts


def _girth(g: Graph) -> int | None:
    # a shortest cycle has no chord, so its length is the only candidate k
    best = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = [s]
        for u in queue:
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


def _guess_k(g: Graph) -> int:
    girth = _girth(g)
    return 5 if girth is None else girth


def _emit(payload: dict, as_json: bool, text: str) -> None:
    print(json.dumps(payload) if as_json else text)


# ------------------------------------------------------------------ commands


def cmd_recognize(args) -> int:
    g = _read_graph(args.input)
    result = compute_vco(g, args.k)
    if isinstance(result, Rejection):
        payload = {
            "accepted": False,
            "k": result.k,
            "reason": result.reason,
            "cycle": None if result.cycle is None else _ids(result.cycle),
            "residual": _ids(result.residual),
        }
        lines = [f"reject k {result.k}: {result.reason}"]
        if result.cycle is not None:
            lines.append("cycle " + " ".join(map(str, _ids(result.cycle))))
        if result.residual:
            lines.append("residual " + " ".join(map(str, _ids(result.residual))))
        _emit(payload, args.json, "\n".join(lines))
        return EXIT_NEGATIVE
    text = format_vco(result)
    _emit({"accepted": True, "k": result.k, "vco": text}, args.json, text.rstrip("\n"))
    return EXIT_OK


def _route(problem: ProblemKind, g: Graph, cls: str, k: int | None):
    """Pick ``("sck", k)`` or ``("2k2", tag)`` for the requested class."""
    if cls == "sck" or (cls == "auto" and k is not None):
        return "sck", k if k is not None else _guess_k(g)
    if cls != "auto":
        try:
            return "2k2", SubclassTag(cls)
        except ValueError:
            raise UsageError(f"unknown class {cls!r}") from None
    if g.n and is_connected(g) and is_2k2_free(g):
        tag = classify_subclass(g)
        try:
            return "2k2", solver_tag(problem, g, tag)
        except WrongSubclassError:
            pass
    return "sck", _guess_k(g)


def _solve(problem: ProblemKind, g: Graph, route, terminals):
    kind, arg = route
    if kind == "sck":
        return solve_sck(problem, g, arg, terminals)
    return solve_2k2(problem, g, arg, terminals)


def cmd_solve(args) -> int:
    problem = ProblemKind.parse(args.problem)
    g = _read_graph(args.input)
    terminals = _parse_terminals(args.terminals, g.n)
    if (terminals is not None) != (problem is ProblemKind.STEINER_TREE):
        raise UsageError("--terminals is required for, and only for, steiner")
    route = _route(problem, g, args.cls, args.k)
    try:
        sol = _solve(problem, g, route, terminals)
    except NotSCkError as exc:
        rej = exc.rejection
        where = f" (cycle {' '.join(map(str, _ids(rej.cycle)))})" if rej.cycle else ""
        raise UsageError(f"graph is not SC_{rej.k}: {rej.reason}{where}") from None
    payload = sol.to_json()
    payload["class"] = f"sck:{route[1]}" if route[0] == "sck" else route[1].value
    text = f"{payload['problem']} {payload['value']}: " + " ".join(map(str, payload["vertices"]))
    _emit(payload, args.json, text)
    return EXIT_OK


def _instance(cls: str, k: int | None, seed: int, max_n: int):
    rng = random.Random(seed)
    if cls == "sck":
        kk = k if k is not None else rng.randint(5, 8)
        inst = gen_sck(kk, rng.randint(1, 6), seed, max_n=max_n)
        return inst.graph, ("sck", kk)
    tag = SubclassTag(cls)
    lo = {SubclassTag.C3_FREE: 6, SubclassTag.C4_FREE: 6, SubclassTag.GENERAL_2K2_FREE: 7}.get(tag, 4)
    return gen_2k2_subclass(tag, rng.randint(lo, max(lo, max_n)), seed), ("2k2", tag)


def cmd_verify(args) -> int:
    problem = ProblemKind.parse(args.problem)
    seed = args.seed if args.seed is not None else _default_seed()
    if args.cls != "sck":
        try:
            tag = SubclassTag(args.cls)
        except ValueError:
            raise UsageError(f"unknown class {args.cls!r}") from None
        solver_tag(problem, None, tag)
    rows = []
    failures = 0
    for i in range(args.count):
        s = seed + i
        g, route = _instance(args.cls, args.k, s, args.max_n)
        rng = random.Random(s ^ 0x5EED)
        terminals = None
        if problem is ProblemKind.STEINER_TREE:
            terminals = set(rng.sample(range(g.n), min(g.n, rng.randint(2, 5))))
        got = _solve(problem, g, route, terminals)
        want = oracle_solve(problem, g, terminals=terminals)
        ok = got.value == want.value and is_feasible(problem, g, got.vertices, terminals or ())
        row = {"seed": s, "n": g.n, "m": g.m, "solver": got.value, "oracle": want.value, "ok": ok}
        if not ok:
            failures += 1
            dump = Path(args.dump_dir) / f"mismatch-{args.cls}-{problem.value}-{s}.graph"
            dump.parent.mkdir(parents=True, exist_ok=True)
            note = f"seed {s} solver {got.value} oracle {want.value}"
            if terminals is not None:
                note += " terminals " + ",".join(map(str, _ids(sorted(terminals))))
            dump.write_text(g.to_text(comment=note))
            row["dump"] = str(dump)
            print(f"mismatch at seed {s}, dumped to {dump}", file=sys.stderr)
        rows.append(row)
    if args.json:
        print(json.dumps({"problem": problem.value, "class": args.cls, "seed": seed, "instances": rows}))
    else:
        for r in rows:
            print(f"seed {r['seed']} n {r['n']} solver {r['solver']} oracle {r['oracle']} {'ok' if r['ok'] else 'MISMATCH'}")
    return EXIT_ERROR if failures else EXIT_OK


def cmd_generate(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    trace = None
    if args.cls == "sck":
        if args.k is None:
            raise UsageError("--k is required for --class sck")
        inst = gen_sck(args.k, args.ops, seed, max_n=args.max_n)
        g, trace = inst.graph, inst.trace
        note = f"sck k {args.k} ops {args.ops} seed {seed}"
    else:
        try:
            tag = SubclassTag(args.cls)
        except ValueError:
            raise UsageError(f"unknown class {args.cls!r}") from None
        if args.n is None:
            raise UsageError("--n is required for 2K2 classes")
        g = gen_2k2_subclass(tag, args.n, seed)
        note = f"{tag.value} n {args.n} seed {seed}"
    text = g.to_text(comment=note)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.trace:
        if trace is None:
            raise UsageError("--trace is only available for --class sck")
        Path(args.trace).write_text(format_vco(trace))
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = _read_graph(args.input)
    ok, witness = is_2k2_free(g, witness=True)
    payload = {
        "n": g.n,
        "m": g.m,
        "connected": is_connected(g),
        "2k2_free": ok,
        "2k2_witness": None if ok else _ids(witness),
        "class": classify_subclass(g).value,
        "girth": _girth(g),
        "separator": None,
    }
    if payload["connected"] and g.n:
        d = find_minimal_separator(g)
        if d is not None:
            payload["separator"] = d.describe()
    lines = [f"{key} {payload[key]}" for key in ("n", "m", "connected", "2k2_free", "class", "girth")]
    if not ok:
        lines.append("2k2_witness " + " ".join(map(str, payload["2k2_witness"])))
    if payload["separator"]:
        for key, vs in payload["separator"].items():
            lines.append(f"{key} " + (" ".join(map(str, vs)) if vs else "-"))
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chordality", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="structured output")

    r = sub.add_parser("recognize", help="test SC_k membership and print the ordering or a witness")
    r.add_argument("--k", type=int, required=True)
    r.add_argument("--input", required=True, help="graph file, '-' for stdin")
    common(r)
    r.set_defaults(func=cmd_recognize)

    s = sub.add_parser("solve", help="solve a problem on an SC_k or 2K2-free graph")
    s.add_argument("--problem", required=True)
    s.add_argument("--input", required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--terminals", help="comma separated 1-indexed terminals")
    s.add_argument("--class", dest="cls", default="auto", help="auto, sck or a 2K2 subclass tag")
    common(s)
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="compare a solver with the oracle on generated instances")
    v.add_argument("--problem", required=True)
    v.add_argument("--class", dest="cls", required=True)
    v.add_argument("--k", type=int)
    v.add_argument("--count", type=int, default=20)
    v.add_argument("--seed", type=int)
    v.add_argument("--max-n", type=int, default=14)
    v.add_argument("--dump-dir", default=".")
    common(v)
    v.set_defaults(func=cmd_verify)

    gsub = sub.add_parser("generate", help="write a random instance of a class")
    gsub.add_argument("--class", dest="cls", required=True)
    gsub.add_argument("--k", type=int)
    gsub.add_argument("--ops", type=int, default=10)
    gsub.add_argument("--n", type=int)
    gsub.add_argument("--max-n", type=int)
    gsub.add_argument("--seed", type=int)
    gsub.add_argument("-o", "--output")
    gsub.add_argument("--trace", help="also write the construction ordering (sck only)")
    gsub.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="report 2K2 class and a minimal separator decomposition")
    a.add_argument("--input", required=True)
    common(a)
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, GuardExceededError, GenerationError, WrongSubclassError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
