"""Quasi-trees, resolution trees, and the activity expansion of ``P``.

The resolution tree processes edges from the top of a total order down.
At each node the current edge is either resolved in one forced step
(with a two-term coefficient) or the tree branches into delete and
contract.  A forced step is only taken when it is valid for the colour
classes at that node:

==================================================  ======  ===============
node status of the edge                              type    coefficient
==================================================  ======  ===============
trivial orientable loop, bridge in H*/B              1       1 + b_olc
trivial orientable loop, loop in H*/B                2       1 + b_olh
trivial non-orientable loop                          3       1 + (b_bp b_olh)^(1/2)
bridge, bridge in H/V                                4       1 + b_bs
bridge, loop in H/V                                  5       1 + b_bp
==================================================  ======  ===============

Anything else branches: deleting costs 1 and contracting costs one of
``b_bs, b_bp, b_olc, b_olh, (b_bp b_olh)^(1/2)`` (types 6-10).  A bridge
whose ends lie in different but connected vertex classes of ``H/V``, and
the dual situation for trivial loops, therefore branch as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .colouring import (
    ColouredRibbonGraph,
    contract_coloured,
    delete_coloured,
    quotient_boundary_graph,
    quotient_vertex_graph,
)
from .graphs import MultiGraph, underlying
from .invariants import as_coloured
from .poly import HalfPoly, monomial, poly_sum, var
from .ribbon import RibbonError, RibbonGraph, boundary_counts_by_subset, is_trivial_loop, loop_status, partial_dual

__all__ = [
    "ACTIONS",
    "EfvhRecord",
    "ResolutionBranch",
    "Step",
    "branch_to_quasi_tree",
    "classify_activity",
    "coefficient",
    "efvh_predicates",
    "node_graph",
    "node_status",
    "quasi_tree_expansion",
    "replay",
    "resolution_branches",
    "spanning_quasi_trees",
]

ACTIONS = ("delete", "contract", "forced-delete", "forced-contract")


def coefficient(token: int | None) -> HalfPoly:
    """``C(1)`` .. ``C(10)``; ``None`` is the unit weight of a plain deletion."""
    if token is None:
        return HalfPoly.const(1)
    root = monomial({"b_bp": Fraction(1, 2), "b_olh": Fraction(1, 2)})
    table = {
        1: 1 + var("b_olc"),
        2: 1 + var("b_olh"),
        3: 1 + root,
        4: 1 + var("b_bs"),
        5: 1 + var("b_bp"),
        6: var("b_bs"),
        7: var("b_bp"),
        8: var("b_olc"),
        9: var("b_olh"),
        10: root,
    }
    try:
        return table[token]
    except KeyError:
        raise ValueError(f"no activity type {token}") from None


@dataclass(frozen=True)
class Step:
    edge: int
    action: str
    token: int | None

    def __str__(self):
        tok = "unit" if self.token is None else f"C({self.token})"
        return f"{self.edge}:{self.action}:{tok}"


@dataclass(frozen=True)
class ResolutionBranch:
    edges: tuple
    steps: tuple

    @property
    def deleted(self) -> frozenset:
        return frozenset(s.edge for s in self.steps if s.action in ("delete", "forced-delete"))

    @property
    def contracted(self) -> frozenset:
        return frozenset(s.edge for s in self.steps if s.action in ("contract", "forced-contract"))

    def weight(self) -> HalfPoly:
        out = HalfPoly.const(1)
        for s in self.steps:
            out = out * coefficient(s.token)
        return out


def _require_connected(g: RibbonGraph):
    if g.num_components > 1:
        raise RibbonError("quasi-tree machinery needs a connected ribbon graph")


def _check_order(cg: ColouredRibbonGraph, order: Sequence[int] | None) -> list:
    order = list(sorted(cg.edges) if order is None else order)
    if sorted(order) != sorted(cg.edges):
        raise RibbonError("order must list every edge exactly once")
    return order


def node_status(h: ColouredRibbonGraph, e: int) -> tuple:
    """``(kind, token)``: kind is an action for forced steps, else ``'branch'``.

    For a branching edge the token is the one its contraction carries.
    """
    g = h.graph
    g._require_edge(e)
    qv, qb = quotient_vertex_graph(h), quotient_boundary_graph(h)
    status = loop_status(g, e)
    if status == "nonorientable_loop":
        return ("forced-delete", 3) if is_trivial_loop(g, e) else ("branch", 10)
    if status == "orientable_loop":
        if is_trivial_loop(g, e):
            if qb.is_bridge(e):
                return ("forced-delete", 1)
            if qb.is_loop(e):
                return ("forced-delete", 2)
        return ("branch", 8 if qb.is_bridge(e) else 9)
    if underlying(g).is_bridge(e):
        if qv.is_bridge(e):
            return ("forced-contract", 4)
        if qv.is_loop(e):
            return ("forced-contract", 5)
    return ("branch", 7 if qv.is_loop(e) else 6)


def resolution_branches(cg, order: Sequence[int] | None = None) -> list:
    """Every root-to-leaf path; the root handles the highest edge of ``order``."""
    cg = as_coloured(cg)
    _require_connected(cg.graph)
    order = _check_order(cg, order)
    out = []

    def walk(h, k, steps):
        if k < 0:
            out.append(ResolutionBranch(tuple(order), tuple(steps)))
            return
        e = order[k]
        kind, token = node_status(h, e)
        if kind == "forced-delete":
            walk(delete_coloured(h, e), k - 1, steps + [Step(e, kind, token)])
        elif kind == "forced-contract":
            walk(contract_coloured(h, e), k - 1, steps + [Step(e, kind, token)])
        else:
            walk(delete_coloured(h, e), k - 1, steps + [Step(e, "delete", None)])
            walk(contract_coloured(h, e), k - 1, steps + [Step(e, "contract", token)])

    walk(cg, len(order) - 1, [])
    return out


def quasi_tree_expansion(cg, order: Sequence[int] | None = None) -> HalfPoly:
    return poly_sum(b.weight() for b in resolution_branches(cg, order))


def replay(cg, branch: ResolutionBranch):
    """Yield ``(node graph, step)`` pairs down the branch, then the leaf with ``None``."""
    h = as_coloured(cg)
    for step in branch.steps:
        yield h, step
        if step.action in ("delete", "forced-delete"):
            h = delete_coloured(h, step.edge)
        else:
            h = contract_coloured(h, step.edge)
    yield h, None


def branch_to_quasi_tree(branch: ResolutionBranch) -> frozenset:
    """Edges the branch did not delete."""
    return frozenset(branch.edges) - branch.deleted


def spanning_quasi_trees(g) -> list:
    """Edge sets with exactly one boundary component, in binary-counter order."""
    g = as_coloured(g).graph
    _require_connected(g)
    ids = g.edge_ids
    counts = boundary_counts_by_subset(g)
    return [
        frozenset(e for k, e in enumerate(ids) if mask >> k & 1)
        for mask, b in enumerate(counts)
        if b == 1
    ]


def node_graph(cg, order: Sequence[int], tree: Iterable[int], e: int) -> ColouredRibbonGraph:
    """``G \\ D / C`` for the edges above ``e``: ``C`` inside ``tree``, ``D`` outside."""
    cg = as_coloured(cg)
    order = _check_order(cg, order)
    tree = frozenset(tree)
    if e not in order:
        raise RibbonError(f"unknown edge {e}")
    h = cg
    for f in reversed(order[order.index(e) + 1 :]):
        h = contract_coloured(h, f) if f in tree else delete_coloured(h, f)
    return h


def classify_activity(cg, order: Sequence[int], tree: Iterable[int], e: int):
    """Activity type of ``e`` for ``tree`` (``None`` means a unit deletion)."""
    tree = frozenset(tree)
    h = node_graph(cg, order, tree, e)
    kind, token = node_status(h, e)
    internal = e in tree
    if kind == "forced-contract" and not internal:
        raise ValueError(f"edge {e} is a forced contraction but lies outside the tree")
    if kind == "forced-delete" and internal:
        raise ValueError(f"edge {e} is a forced deletion but lies inside the tree")
    if kind == "branch" and not internal:
        return None
    return token


@dataclass(frozen=True)
class EfvhRecord:
    internal: bool
    vertex_essential: bool
    boundary_essential: bool
    live_status: str
    consistency: str | None


def _connected_without(q: MultiGraph, removed: set, a: int, b: int) -> bool:
    keep = [f for f in q.ids if f not in removed]
    parent = list(range(q.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in keep:
        u, v = q.endpoints(f)
        parent[find(u)] = find(v)
    return find(a) == find(b)


def _interlaced(g: RibbonGraph, e: int, f: int) -> bool:
    if not (g.is_loop(e) and g.is_loop(f)) or g.vertex_of((e, 1)) != g.vertex_of((f, 1)):
        return False
    rot = g.rotations[g.vertex_of((e, 1))]
    i, j = sorted((rot.index((e, 1)), rot.index((e, 2))))
    inside = {h[0] for h in rot[i + 1 : j]}
    outside = {h[0] for h in rot[j + 1 :] + rot[:i]}
    return f in inside and f in outside


def efvh_predicates(cg, order: Sequence[int], tree: Iterable[int], e: int) -> EfvhRecord:
    """Activity predicates computed from the partial dual and the quotients."""
    cg = as_coloured(cg)
    order = _check_order(cg, order)
    tree = frozenset(tree)
    above = order[order.index(e) + 1 :]
    inner_above = {f for f in above if f in tree}

    qv = quotient_vertex_graph(cg)
    a, b = qv.endpoints(e)
    others = {f for f in qv.ids if f not in inner_above}
    vertex_essential = a == b or _connected_without(qv, others, a, b)

    qb = quotient_boundary_graph(cg)
    a, b = qb.endpoints(e)
    boundary_essential = not _connected_without(qb, inner_above | {e}, a, b)

    gt = partial_dual(cg.graph, tree)
    below = order[: order.index(e)]
    live = not any(_interlaced(gt, e, f) for f in below)
    if not live:
        status = "dead"
    elif loop_status(gt, e) == "nonorientable_loop":
        status = "live non-orientable"
    elif loop_status(gt, e) == "orientable_loop":
        status = "internally live orientable" if e in tree else "externally live orientable"
    else:
        status = "live non-loop"

    h = node_graph(cg, order, tree, e)
    node_loop = loop_status(h.graph, e)
    consistency = {"orientable_loop": "consistent", "nonorientable_loop": "inconsistent"}.get(node_loop)
    return EfvhRecord(e in tree, vertex_essential, boundary_essential, status, consistency)
