"""Small reference ribbon graphs used in examples and tests."""

from .ribbon import RibbonGraph

#: one untwisted edge joining two vertices
B1 = RibbonGraph((((1, 1),), ((1, 2),)))
#: one vertex with an untwisted loop
L1O = RibbonGraph((((1, 1), (1, 2)),))
#: one vertex with a twisted loop
L1N = RibbonGraph((((1, 1), (1, 2)),), frozenset({1}))
#: one vertex, rotation e f e f, both untwisted
THETA_T = RibbonGraph((((1, 1), (2, 1), (1, 2), (2, 2)),))
#: one vertex, rotation e e f f, both untwisted
BQ2 = RibbonGraph((((1, 1), (1, 2), (2, 1), (2, 2)),))
#: a single isolated vertex
POINT = RibbonGraph(((),))
EMPTY = RibbonGraph(())

__all__ = ["B1", "BQ2", "EMPTY", "L1N", "L1O", "POINT", "THETA_T"]
