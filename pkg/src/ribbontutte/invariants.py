"""Rank functions r1..r4, doops, and the (contract, delete) edge types."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .colouring import (
    ColouredRibbonGraph,
    contract_coloured,
    delete_coloured,
    discard_isolated,
    quotient_boundary_graph,
    quotient_vertex_graph,
)
from .ribbon import RibbonError, RibbonGraph, boundary_counts_by_subset, doop_status, loop_status

__all__ = [
    "EDGE_CLASSES",
    "EdgeType",
    "RankProfile",
    "RankTable",
    "as_coloured",
    "classify_one_edge",
    "edge_type",
    "edge_type_direct",
    "rank_profile",
]

EDGE_CLASSES = ("bs", "bp", "olc", "olh", "nl")


def as_coloured(g) -> ColouredRibbonGraph:
    """Accept a plain ribbon graph wherever a coloured one is expected."""
    if isinstance(g, ColouredRibbonGraph):
        return g
    if isinstance(g, RibbonGraph):
        return ColouredRibbonGraph(g)
    raise TypeError(f"expected a ribbon graph, got {type(g).__name__}")


@dataclass(frozen=True)
class RankProfile:
    r1: Fraction
    r2: Fraction
    r3: Fraction
    r4: Fraction
    rho: Fraction

    def __post_init__(self):
        assert self.r1 + self.r2 == self.rho


class RankTable:
    """All subset ranks of one coloured graph, in doubled integers.

    Subsets are bitmasks over ``cg.edges`` (bit ``k`` is the ``k``-th
    smallest edge id).
    """

    def __init__(self, cg):
        cg = as_coloured(cg)
        self.cg = cg
        g = cg.graph
        self.ids = g.edge_ids
        self.m = len(self.ids)
        self.full = (1 << self.m) - 1
        self.v = g.num_vertices
        qv, qb = quotient_vertex_graph(cg), quotient_boundary_graph(cg)
        self.b = boundary_counts_by_subset(g)
        self.rv = qv.rank_by_subset()
        self.rb = qb.rank_by_subset()
        self.k_v = qv.n - self.rv[self.full]
        self.k_b = qb.n - self.rb[self.full]

    def mask_of(self, subset: Iterable[int]) -> int:
        pos = {e: k for k, e in enumerate(self.ids)}
        mask = 0
        for e in subset:
            if e not in pos:
                raise RibbonError(f"unknown edge {e}")
            mask |= 1 << pos[e]
        return mask

    def doubled(self, mask: int) -> tuple:
        """``(2 r1, 2 r2, 2 r3, 2 r4, 2 rho)`` for one subset."""
        size = bin(mask).count("1")
        rho2 = size + self.v - self.b[mask]
        r1 = 2 * self.rv[mask]
        comp = self.full ^ mask
        r3 = 2 * (self.rb[self.full] - self.rb[comp])
        r4 = 2 * size + 2 * self.rb[comp] - 2 * self.rb[self.full] - rho2
        return r1, rho2 - r1, r3, r4, rho2

    @cached_property
    def all_doubled(self) -> list:
        return [self.doubled(mask) for mask in range(self.full + 1)]

    def profile(self, mask: int) -> RankProfile:
        return RankProfile(*(Fraction(d, 2) for d in self.doubled(mask)))


def rank_profile(cg, subset: Iterable[int]) -> RankProfile:
    table = RankTable(cg)
    return table.profile(table.mask_of(subset))


@dataclass(frozen=True)
class EdgeType:
    contract_class: str
    delete_class: str

    def __str__(self):
        return f"({self.contract_class}, {self.delete_class})"


def edge_type(cg, e: int) -> EdgeType:
    """Edge type from doop/loop status in the graph and its two quotients."""
    cg = as_coloured(cg)
    g = cg.graph
    g._require_edge(e)
    qv, qb = quotient_vertex_graph(cg), quotient_boundary_graph(cg)
    doop = doop_status(g, e)
    if doop == "nonorientable_doop":
        i = "nl"
    elif doop == "orientable_doop":
        i = "bs" if qv.is_bridge(e) else "bp"
    else:
        i = "olh" if qb.is_loop(e) else "olc"
    loop = loop_status(g, e)
    if loop == "nonorientable_loop":
        j = "nl"
    elif loop == "orientable_loop":
        j = "olc" if qb.is_bridge(e) else "olh"
    else:
        j = "bp" if qv.is_loop(e) else "bs"
    return EdgeType(i, j)


def classify_one_edge(cg: ColouredRibbonGraph) -> str:
    """Name of a one-edge coloured ribbon graph without isolated vertices."""
    g = cg.graph
    if g.num_edges != 1 or g.isolated_vertices():
        raise ValueError("expected exactly one edge and no isolated vertices")
    (e,) = g.edge_ids
    if g.num_vertices == 2:
        return "bs" if len(cg.vclasses) == 2 else "bp"
    if e in g.twisted:
        return "nl"
    return "olc" if len(cg.bclasses) == 2 else "olh"


def edge_type_direct(cg, e: int) -> EdgeType:
    """Edge type by literally forming ``G/e^c`` and ``G\\e^c``."""
    cg = as_coloured(cg)
    cg.graph._require_edge(e)
    contracted = deleted = cg
    for f in cg.edges:
        if f != e:
            contracted = contract_coloured(contracted, f)
            deleted = delete_coloured(deleted, f)
    return EdgeType(classify_one_edge(discard_isolated(contracted)), classify_one_edge(discard_isolated(deleted)))
