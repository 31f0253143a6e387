from ribbontutte.fileformat import serialize
from ribbontutte.generate import (
    enumerate_coloured,
    enumerate_ribbon_graphs,
    random_coloured_ribbon_graph,
    random_corpus,
    set_partitions,
)
from ribbontutte.ribbon import validate


def test_deterministic():
    for seed in range(20):
        assert serialize(random_coloured_ribbon_graph(seed)) == serialize(random_coloured_ribbon_graph(seed))
    assert [serialize(g) for g in random_corpus(5, 10)] == [serialize(g) for g in random_corpus(5, 10)]


def test_single_vertex():
    g = random_coloured_ribbon_graph(123, 1, 0).graph
    assert (g.num_vertices, g.num_edges) == (1, 0)


def test_draws_are_valid_and_varied():
    draws = [random_coloured_ribbon_graph(s, 3, 5) for s in range(1000)]
    assert all(validate(cg.graph) == [] for cg in draws)
    twisted = sum(1 for cg in draws if cg.graph.twisted)
    non_orientable = sum(1 for cg in draws if not cg.graph.is_orientable())
    merged = sum(1 for cg in draws if not (cg.is_vertex_discrete() and cg.is_boundary_discrete()))
    assert twisted >= 100 and non_orientable >= 100 and merged >= 100
    assert max(cg.graph.num_edges for cg in draws) == 5


def test_connected_draws():
    assert all(cg.graph.num_components == 1 for cg in random_corpus(1, 200, 4, 6, connected=True))


def test_set_partitions_are_bell_numbers():
    assert [sum(1 for _ in set_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]


def test_small_enumeration():
    graphs = list(enumerate_ribbon_graphs(1, 1))
    # a bare vertex, the two one-edge loops, and the empty graph
    assert len(graphs) == 4
    assert len(list(enumerate_coloured(1, 1))) == 5
