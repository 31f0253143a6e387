from ribbontutte.graphs import (
    MultiGraph,
    tutte_classical,
    tutte_recursive,
    underlying,
    universal_graph_U,
    universal_graph_U_closed,
)
from ribbontutte.named import THETA_T
from ribbontutte.poly import parse_poly, var

x, y = var("x"), var("y")
PATH = MultiGraph(2, ((0, 1),))
LOOP = MultiGraph(1, ((0, 0),))
C3 = MultiGraph(3, ((0, 1), (1, 2), (2, 0)))
TWO_LOOPS = MultiGraph(1, ((0, 0), (0, 0)))


def test_rank_and_loops():
    assert PATH.rank({1}) == 1
    assert TWO_LOOPS.is_loop(1)
    assert TWO_LOOPS.rank() == 0
    assert PATH.is_bridge(1) and not C3.is_bridge(1)
    assert C3.rank_by_subset()[-1] == 2


def test_contract_and_delete():
    assert C3.contract(1).same_as(MultiGraph(2, ((0, 1), (1, 0)), (2, 3)))
    assert LOOP.contract(1).same_as(MultiGraph(1, ()))
    assert C3.delete(2).ids == (1, 3)


def test_same_as_respects_edge_ids():
    a = MultiGraph(3, ((0, 1), (1, 2)))
    b = MultiGraph(3, ((1, 2), (0, 1)))
    c = MultiGraph(3, ((0, 1), (1, 2)), (1, 3))
    assert a.same_as(MultiGraph(3, ((2, 1), (1, 0))))
    assert a.same_as(b)  # relabel vertices 0<->2
    assert not a.same_as(c)


def test_tutte_values():
    assert tutte_classical(PATH) == x
    assert tutte_classical(LOOP) == y
    assert tutte_classical(C3) == x**2 + x + y
    assert tutte_classical(MultiGraph(4, ())) == 1
    for g in (PATH, LOOP, C3, TWO_LOOPS, MultiGraph(2, ((0, 1), (0, 1), (0, 1), (1, 1)))):
        assert tutte_recursive(g) == tutte_classical(g)


def test_universal_graph_invariant():
    assert universal_graph_U(MultiGraph(3, ())) == var("gamma") ** 3
    assert universal_graph_U(LOOP) == parse_poly("gamma*y")
    assert universal_graph_U(PATH) == parse_poly("gamma*x")
    for g in (PATH, LOOP, C3, TWO_LOOPS, MultiGraph(3, ((0, 1), (1, 2), (1, 2), (0, 0)))):
        assert universal_graph_U(g) == universal_graph_U_closed(g)


def test_underlying():
    u = underlying(THETA_T)
    assert u.same_as(TWO_LOOPS)
