import pytest

from ribbontutte.colouring import (
    ColouredRibbonGraph,
    coloured_disjoint_union,
    coloured_equivalent,
    coloured_join,
    contract_coloured,
    delete_coloured,
    discard_isolated,
    dual_coloured,
    quotient_boundary_graph,
    quotient_vertex_graph,
)
from ribbontutte.graphs import MultiGraph
from ribbontutte.named import B1, BQ2, L1N, L1O, THETA_T
from ribbontutte.ribbon import RibbonError, contract_edge, delete_edge, equivalent, geometric_dual


def C(g, v=None, b=None):
    return ColouredRibbonGraph(g, v, b)


def test_partitions_are_validated():
    with pytest.raises(RibbonError, match="out of range 1..2"):
        C(B1, [{0, 1, 2}])
    with pytest.raises(RibbonError, match="overlap"):
        C(B1, [{0, 1}, {1}])
    with pytest.raises(RibbonError, match="cover"):
        C(BQ2, None, [{0}, {1}])
    assert C(B1).is_vertex_discrete() and C(B1).is_boundary_discrete()
    assert not C(B1, [{0, 1}]).is_vertex_discrete()


def test_delete_theta_single_class():
    d = delete_coloured(C(THETA_T, None, [{0}]), 2)
    assert equivalent(d.graph, L1O)
    assert len(d.bclasses) == 1


def test_delete_b1_keeps_one_class():
    d = delete_coloured(C(B1), 1)
    assert d.graph.num_vertices == 2 and d.graph.num_boundary == 2
    # both circles descend from the single boundary of B1
    assert len(d.bclasses) == 1
    assert d.vclasses == C(B1).vclasses


def test_delete_bq2_merges_the_faces_the_edge_separated():
    cg = C(BQ2)
    f = 2
    touched = {cg.graph.face_of[(f, 1, 0)], cg.graph.face_of[(f, 1, 1)]}
    assert len(touched) == 2
    d = delete_coloured(cg, f)
    assert equivalent(d.graph, L1O)
    assert len(d.bclasses) == 2  # the untouched face stays alone
    assert len(delete_coloured(C(BQ2, None, [{0, 1, 2}]), f).bclasses) == 1


def test_contract_colour_rules():
    c = contract_coloured(C(THETA_T), 2)
    assert c.graph.num_vertices == 2 and len(c.vclasses) == 1
    c = contract_coloured(C(B1, [{0, 1}]), 1)
    assert c.graph.num_vertices == 1 and len(c.vclasses) == 1
    c = contract_coloured(C(L1N), 1)
    assert c.graph.num_vertices == 1 and len(c.vclasses) == 1
    # boundary classes move one-to-one
    cg = C(BQ2, None, [{0, 2}, {1}])
    for e in (1, 2):
        assert sorted(map(len, contract_coloured(cg, e).bclasses)) == [1, 2]


def test_forgetting_colours_commutes_with_minors():
    cg = C(THETA_T, None, [{0}])
    for e in (1, 2):
        assert delete_coloured(cg, e).graph == delete_edge(cg.graph, e)
        assert contract_coloured(cg, e).graph == contract_edge(cg.graph, e)


def test_dual():
    d = dual_coloured(C(B1))
    assert equivalent(d.graph, L1O)
    assert len(d.vclasses) == 1 and len(d.bclasses) == 2
    for cg in (C(THETA_T), C(THETA_T, None, [{0}]), C(BQ2, None, [{0, 1}, {2}]), C(B1, [{0, 1}])):
        dd = dual_coloured(dual_coloured(cg))
        assert coloured_equivalent(dd, cg)
        assert equivalent(dual_coloured(cg).graph, geometric_dual(cg.graph))
    d = dual_coloured(C(L1N))
    assert (len(d.vclasses), len(d.bclasses)) == (1, 1)


def test_coloured_equivalence_sees_colours():
    assert not coloured_equivalent(C(B1), C(B1, [{0, 1}]))
    assert not coloured_equivalent(C(BQ2, None, [{0, 1}, {2}]), C(BQ2))
    # relabelling vertices is allowed
    g = C(B1.__class__((((1, 2),), ((1, 1),))))
    assert coloured_equivalent(g, C(B1))


def test_quotients():
    assert quotient_vertex_graph(C(B1)).same_as(MultiGraph(2, ((0, 1),)))
    assert quotient_vertex_graph(C(B1, [{0, 1}])).same_as(MultiGraph(1, ((0, 0),)))
    assert quotient_vertex_graph(C(THETA_T)).same_as(MultiGraph(1, ((0, 0), (0, 0)), (1, 2)))
    assert quotient_boundary_graph(C(L1O)).same_as(MultiGraph(2, ((0, 1),)))
    assert quotient_boundary_graph(C(L1O, None, [{0, 1}])).same_as(MultiGraph(1, ((0, 0),)))
    assert quotient_boundary_graph(C(THETA_T, None, [{0}])).same_as(MultiGraph(1, ((0, 0), (0, 0)), (1, 2)))


def test_discard_isolated():
    cg = delete_coloured(C(THETA_T), 1)
    cg = contract_coloured(cg, 2)
    assert cg.graph.num_vertices == 2 and cg.graph.num_edges == 0
    h = discard_isolated(cg)
    assert h.graph.num_vertices == 0 and h.vclasses == () and h.bclasses == ()
    kept = discard_isolated(delete_coloured(C(BQ2), 2))
    assert equivalent(kept.graph, L1O) and len(kept.bclasses) == 2


def test_join_and_union():
    a, b = C(L1O), C(L1O)
    j = coloured_join(a, 0, b, 0)
    assert equivalent(j.graph, BQ2)
    assert len(j.vclasses) == 1
    # the two opened faces become one walk; the two inner faces stay apart
    assert j.graph.num_boundary == 3 and j.is_boundary_discrete()
    # classes of the opened faces are merged with each other
    a2 = C(L1O, None, [{0, 1}])
    j2 = coloured_join(a2, 0, C(B1), 0)
    assert len(j2.bclasses) == 1
    u = coloured_disjoint_union(C(B1), C(L1N))
    assert u.graph.num_vertices == 3 and len(u.vclasses) == 3 and len(u.bclasses) == 2
