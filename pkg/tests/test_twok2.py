import pytest
from hypothesis import given, settings, strategies as st

from chordality.generators import gen_2k2_subclass
from chordality.graph import Graph
from chordality.oracle import oracle_solve
from chordality.problems import ProblemKind, is_feasible
from chordality.separators import SubclassTag, find_minimal_separator
from chordality.twok2 import (
    SUPPORTED,
    WrongSubclassError,
    connected_ds_2k2,
    ds_c3,
    ds_c3c5,
    fvs_c3,
    fvs_c3c5,
    fvs_c4,
    fvs_split,
    solve_2k2,
    steiner_c3,
    steiner_c3c5,
)

from conftest import complete_bipartite, complete_graph, cycle_graph, split_k3_two, star

P = ProblemKind
T = SubclassTag


def test_fvs_c3c5_examples():
    assert fvs_c3c5(complete_bipartite(2, 3)).value == 1
    double_star = Graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (1, 6)])
    assert fvs_c3c5(double_star).value == 0
    assert fvs_c3c5(cycle_graph(4)).value == 1


def test_steiner_c3c5_examples():
    g = complete_bipartite(2, 3)
    d = find_minimal_separator(g, pair=(2, 3))
    sol = steiner_c3c5(g, d, [2, 3])
    assert sol.value == 1 and set(sol.vertices) - {2, 3} <= {0, 1}
    sol = steiner_c3c5(g, d, [0, 1])
    assert sol.value == 1 and set(sol.vertices) - {0, 1} <= {2, 3, 4}
    assert steiner_c3c5(g, d, [0, 2]).value == 0


def test_ds_c3c5_examples():
    assert ds_c3c5(complete_bipartite(2, 3)).value == 2
    assert ds_c3c5(star(5)).vertices == (0,)


def test_ds_c3c5_with_a_nontrivial_component():
    for seed in range(40):
        g = gen_2k2_subclass(T.C3C5_FREE, 10, seed)
        if find_minimal_separator(g).G1 is not None:
            sol = ds_c3c5(g)
            assert sol.value == 2 and is_feasible(P.DOMINATING_SET, g, sol.vertices)
            assert oracle_solve(P.DOMINATING_SET, g).value == 2
            return
    pytest.fail("no instance with a non-trivial component")


def test_fvs_split_examples():
    assert fvs_split(complete_graph(5)).value == 3
    assert fvs_split(split_k3_two()).value == 2
    assert fvs_split(star(4)).value == 0


def test_c3_free_examples():
    assert fvs_c3(cycle_graph(4)).value == 1
    assert fvs_c3(star(6)).value == 0
    assert ds_c3(cycle_graph(4)).value == 2
    assert ds_c3(cycle_graph(5)).value == 2
    assert steiner_c3(cycle_graph(4), None, [0, 2]).value == 1


def test_steiner_c3_terminals_in_one_part():
    g = complete_bipartite(2, 3)
    d = find_minimal_separator(g, pair=(2, 3))
    assert steiner_c3(g, d, [2, 3, 4]).value == 1
    assert steiner_c3(g, d, [0, 1]).value == 1


def test_fvs_c4_examples():
    assert fvs_c4(cycle_graph(5)).value == 1
    assert fvs_c4(complete_graph(4)).value == 2


def test_connected_ds_examples():
    assert connected_ds_2k2(star(4), T.C3C5_FREE).vertices == (0,)
    assert connected_ds_2k2(complete_bipartite(2, 3), T.C3C5_FREE).value == 2
    sol = connected_ds_2k2(cycle_graph(4), T.C3_FREE)
    assert sol.value == 2 and is_feasible(P.CONNECTED_DOMINATING_SET, cycle_graph(4), sol.vertices)
    with pytest.raises(WrongSubclassError):
        connected_ds_2k2(cycle_graph(5), T.C4_FREE)


def test_wrong_class_is_refused():
    with pytest.raises(WrongSubclassError):
        fvs_c3c5(cycle_graph(5))
    with pytest.raises(WrongSubclassError):
        fvs_split(cycle_graph(4))
    with pytest.raises(WrongSubclassError):
        fvs_c4(cycle_graph(4))
    with pytest.raises(WrongSubclassError):
        ds_c3(complete_graph(3))


def test_terminal_errors():
    with pytest.raises(ValueError):
        steiner_c3c5(cycle_graph(4), None, [])
    with pytest.raises(ValueError):
        solve_2k2(P.STEINER_TREE, cycle_graph(4))


def test_solve_2k2_widens_to_containing_class():
    # a tree is C3C4Free; DS comes from the C3C5Free solver
    assert solve_2k2(P.DOMINATING_SET, star(3)).value == 1
    with pytest.raises(WrongSubclassError):
        solve_2k2(P.DOMINATING_SET, split_k3_two())


CASES = sorted(((p, t) for p, t in SUPPORTED if p is not P.CONNECTED_DOMINATING_SET), key=str)


@settings(max_examples=150, deadline=None)
@given(st.sampled_from(CASES), st.integers(7, 13), st.integers(0, 10**6), st.data())
def test_matches_oracle(case, n, seed, data):
    problem, tag = case
    g = gen_2k2_subclass(tag, n, seed)
    ts = None
    if problem is P.STEINER_TREE:
        size = data.draw(st.integers(1, 5))
        ts = data.draw(st.lists(st.integers(0, n - 1), min_size=size, max_size=size, unique=True))
    sol = solve_2k2(problem, g, tag, terminals=ts)
    assert is_feasible(problem, g, sol.vertices, ts or ())
    assert sol.value == oracle_solve(problem, g, terminals=ts).value


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 10**6))
def test_trees_and_c5(n, seed):
    g = gen_2k2_subclass(T.C3C4_FREE, n, seed)
    for problem in (P.FVS, P.DOMINATING_SET):
        assert solve_2k2(problem, g).value == oracle_solve(problem, g).value
