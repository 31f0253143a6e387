from fractions import Fraction

import pytest

from ribbontutte.named import B1, BQ2, EMPTY, L1N, L1O, POINT, THETA_T
from ribbontutte.ribbon import (
    RibbonError,
    RibbonGraph,
    canonical_form,
    contract_edge,
    delete_edge,
    disjoint_union,
    doop_status,
    equivalent,
    geometric_dual,
    is_trivial_loop,
    join_at,
    loop_status,
    partial_dual,
    partial_dual_maps,
    relabel_edges,
    restrict,
    rho,
    unlabelled_form,
    validate,
)


def test_validate():
    assert validate(B1) == []
    assert validate(EMPTY) == []
    doubled = RibbonGraph((((1, 1),), ((1, 2), (1, 2))))
    assert any("half-edge multiplicity" in p for p in validate(doubled))
    missing = RibbonGraph((((1, 1),),))
    assert any("missing" in p for p in validate(missing))
    assert any("twist" in p for p in validate(RibbonGraph((((1, 1), (1, 2)),), frozenset({7}))))


@pytest.mark.parametrize(
    "g, b", [(B1, 1), (L1O, 2), (L1N, 1), (THETA_T, 1), (BQ2, 3), (POINT, 1), (EMPTY, 0)]
)
def test_boundary_counts(g, b):
    assert g.num_boundary == b


def test_boundary_walks_cover_every_flag_once():
    for g in (B1, L1O, L1N, THETA_T, BQ2):
        flags = [f for comp in g.boundary for f in comp.flags]
        assert sorted(flags) == sorted(g.flags)
        assert [c.index for c in g.boundary] == list(range(1, g.num_boundary + 1))


def test_genus_and_orientability():
    assert (THETA_T.euler_genus(), THETA_T.is_orientable()) == (2, True)
    assert (L1N.euler_genus(), L1N.is_orientable()) == (1, False)
    assert (POINT.euler_genus(), POINT.is_orientable()) == (0, True)
    assert B1.euler_genus() == 0 and BQ2.euler_genus() == 0
    # a twisted non-loop edge can be untwisted by reflecting one end
    assert RibbonGraph((((1, 1),), ((1, 2),)), frozenset({1})).is_orientable()


def test_rho():
    assert rho(L1N, {1}) == Fraction(1, 2)
    assert rho(THETA_T, set()) == 0
    assert rho(THETA_T, {1, 2}) == 1


def test_delete():
    d = delete_edge(B1, 1)
    assert d.num_vertices == 2 and d.num_edges == 0
    assert equivalent(delete_edge(THETA_T, 2), L1O)
    assert equivalent(delete_edge(L1N, 1), POINT)
    with pytest.raises(RibbonError):
        delete_edge(B1, 5)


def test_contract():
    assert equivalent(contract_edge(B1, 1), POINT)
    c = contract_edge(THETA_T, 2)
    assert (c.num_vertices, c.num_edges, c.num_boundary) == (2, 1, 1)
    assert not c.is_loop(1)
    assert equivalent(contract_edge(L1N, 1), POINT)
    # orientable loop: splits the vertex
    assert contract_edge(L1O, 1).num_vertices == 2


def test_contract_matches_three_case_table():
    """Independent rotation surgery for each of the three contraction cases."""
    # non-loop: splice rotations of the two ends
    g = RibbonGraph((((1, 1), (2, 1)), ((1, 2), (3, 1)), ((2, 2),), ((3, 2),)))
    spliced = RibbonGraph((((2, 1), (3, 1)), ((2, 2),), ((3, 2),)))
    assert equivalent(contract_edge(g, 1), spliced)
    # orientable loop: the two arcs become two vertices
    g = RibbonGraph((((1, 1), (2, 1), (1, 2), (3, 1)), ((2, 2),), ((3, 2),)))
    split = RibbonGraph((((2, 1),), ((3, 1),), ((2, 2),), ((3, 2),)))
    assert equivalent(contract_edge(g, 1), split)
    # non-orientable loop: one arc is reversed and reattached, its edges retwisted
    g = RibbonGraph((((1, 1), (2, 1), (1, 2), (3, 1)), ((2, 2),), ((3, 2),)), frozenset({1}))
    c = contract_edge(g, 1)
    assert c.num_vertices == 3 and c.num_boundary == g.num_boundary
    assert c.euler_genus() == g.euler_genus() - 1


def test_contraction_preserves_boundary_count():
    for g in (B1, L1O, L1N, THETA_T, BQ2):
        for e in g.edges:
            assert contract_edge(g, e).num_boundary == g.num_boundary


def test_duals():
    assert equivalent(geometric_dual(B1), L1O)
    assert equivalent(geometric_dual(L1O), B1)
    assert equivalent(geometric_dual(L1N), L1N)
    assert equivalent(partial_dual(THETA_T, set()), THETA_T)
    assert equivalent(partial_dual(B1, {1}), L1O)
    assert partial_dual(THETA_T, {1, 2}).num_vertices == 1
    for g in (B1, L1O, L1N, THETA_T, BQ2):
        assert equivalent(geometric_dual(geometric_dual(g)), g)
        assert equivalent(partial_dual(g, g.edges), geometric_dual(g))
        for e in g.edges:
            assert equivalent(partial_dual(partial_dual(g, {e}), {e}), g)
            assert equivalent(geometric_dual(contract_edge(g, e)), delete_edge(geometric_dual(g), e))


def test_partial_dual_flag_map_is_a_bijection():
    pd = partial_dual_maps(THETA_T, {1})
    assert sorted(pd.flag_map) == sorted(THETA_T.flags)
    assert sorted(pd.flag_map.values()) == sorted(pd.graph.flags)


def test_loop_and_doop_status():
    assert doop_status(B1, 1) == "orientable_doop"
    assert doop_status(L1O, 1) == "not_doop"
    assert doop_status(L1N, 1) == "nonorientable_doop"
    assert loop_status(B1, 1) == "not_loop"
    assert loop_status(L1N, 1) == "nonorientable_loop"
    as_loop = {"not_doop": "not_loop", "orientable_doop": "orientable_loop", "nonorientable_doop": "nonorientable_loop"}
    for g in (B1, L1O, L1N, THETA_T, BQ2):
        for e in g.edges:
            assert as_loop[doop_status(g, e)] == loop_status(geometric_dual(g), e)


def test_trivial_loops():
    assert is_trivial_loop(L1O, 1) and is_trivial_loop(L1N, 1)
    assert not is_trivial_loop(THETA_T, 1)
    assert is_trivial_loop(BQ2, 1) and is_trivial_loop(BQ2, 2)
    assert not is_trivial_loop(B1, 1)


def test_restrict_union_join():
    assert equivalent(restrict(THETA_T, {1}), L1O)
    u = disjoint_union(B1, L1O)
    assert (u.num_vertices, u.num_edges, u.num_components) == (3, 2, 2)
    assert equivalent(join_at(L1O, 0, L1O, 0), BQ2)
    assert equivalent(join_at(L1O, 0, L1O, 0, arc_g=1), BQ2)
    with pytest.raises(RibbonError):
        join_at(B1, 4, B1, 0)


def test_equivalence_ignores_vertex_order_and_reflection():
    a = RibbonGraph((((1, 1), (2, 1), (3, 1)), ((1, 2), (2, 2), (3, 2))))
    b = RibbonGraph((((1, 2), (3, 2), (2, 2)), ((1, 1), (3, 1), (2, 1))))
    assert equivalent(a, b)
    # reflecting one vertex twists its non-loop edges
    c = RibbonGraph((((1, 1), (3, 1), (2, 1)), ((1, 2), (2, 2), (3, 2))), frozenset({1, 2, 3}))
    assert equivalent(a, c)
    assert not equivalent(THETA_T, BQ2)
    assert canonical_form(a) == canonical_form(b)


def test_unlabelled_form_identifies_relabellings():
    g = RibbonGraph((((1, 1), (2, 1), (2, 2), (1, 2)),), frozenset({2}))
    h = relabel_edges(g, {1: 2, 2: 1})
    assert not equivalent(g, h)
    assert unlabelled_form(g) == unlabelled_form(h)
