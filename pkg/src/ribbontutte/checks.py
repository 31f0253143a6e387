"""Invariant suite shared by ``ribbon check`` and the test-suite.

Every check takes a coloured ribbon graph and a ``random.Random`` and
returns a list of failure messages (empty on success).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable

from .activities import (
    branch_to_quasi_tree,
    efvh_predicates,
    node_graph,
    node_status,
    quasi_tree_expansion,
    resolution_branches,
    spanning_quasi_trees,
)
from .colouring import (
    ColouredRibbonGraph,
    coloured_disjoint_union,
    coloured_equivalent,
    coloured_join,
    contract_coloured,
    delete_coloured,
    dual_coloured,
    quotient_boundary_graph,
    quotient_vertex_graph,
)
from .evaluators import (
    bollobas_riordan,
    check_duality,
    p_from_u,
    p_normalized,
    t_cps,
    t_cs,
    t_ps,
    t_s,
    universal_U_recursive,
    universal_U_state_sum,
    universality_closed_form,
)
from .graphs import tutte_classical, tutte_recursive, underlying
from .invariants import RankTable, edge_type, edge_type_direct
from .poly import monomial, var
from .ribbon import boundary_counts_by_subset, doop_status, is_trivial_loop, loop_status

__all__ = ["CHECKS", "run_checks", "run_corpus"]

_HALF = Fraction(1, 2)
# change of (r1, r2, r3, r4) per edge class; nl splits evenly between bp and olh
_UNIT = {
    "bs": (1, 0, 0, 0),
    "bp": (0, 1, 0, 0),
    "olc": (0, 0, 1, 0),
    "olh": (0, 0, 0, 1),
    "nl": (0, _HALF, 0, _HALF),
}
_RHO_DELETE = {"orientable_doop": 1, "not_doop": 0, "nonorientable_doop": _HALF}
_RHO_CONTRACT = {"not_loop": 1, "orientable_loop": 0, "nonorientable_loop": _HALF}


def _shuffled(cg, rng) -> list:
    order = list(cg.edges)
    rng.shuffle(order)
    return order


def _connected(cg) -> bool:
    return cg.graph.num_components == 1


def check_oracle_triangle(cg, rng):
    out = []
    u = universal_U_state_sum(cg)
    for _ in range(2):
        order = _shuffled(cg, rng)
        if universal_U_recursive(cg, order) != u:
            out.append(f"U recursion differs from the state sum for order {order}")
    p = p_normalized(cg)
    if p_from_u(u) != p:
        out.append("specialising U does not give P")
    if _connected(cg):
        for _ in range(3):
            order = _shuffled(cg, rng)
            if quasi_tree_expansion(cg, order) != p:
                out.append(f"quasi-tree expansion differs from P for order {order}")
    return out


def check_closed_form(cg, rng):
    return [] if universality_closed_form(cg) == universal_U_state_sum(cg) else ["U closed form mismatch"]


def check_duality_identities(cg, rng):
    out = [] if check_duality(cg) else ["t_ps / t_s / t_cps duality failed"]
    if not coloured_equivalent(dual_coloured(dual_coloured(cg)), cg):
        out.append("double dual is not equivalent to the graph")
    return out


def check_hierarchy(cg, rng):
    out = []
    full = t_ps(cg)
    if full.substitute({"w": var("x")}) != t_s(cg):
        out.append("t_ps(w=x) != t_s")
    if full.substitute({"z": var("y")}) != t_cps(cg):
        out.append("t_ps(y=z) != t_cps")
    tcs = t_cs(cg)
    if t_s(cg).substitute({"z": var("y")}) != tcs:
        out.append("t_s(y=z) != t_cs")
    if t_cps(cg).substitute({"w": var("x")}) != tcs:
        out.append("t_cps(w=x) != t_cs")
    return out


def check_classical(cg, rng):
    g = cg.graph
    ug = underlying(g)
    out = []
    tutte = tutte_classical(ug)
    if tutte_recursive(ug) != tutte:
        out.append("classical Tutte: state sum and recursion differ")
    if g.euler_genus() == 0:
        x, y = var("x"), var("y")
        if t_cs(g).substitute({"x": x - 1, "y": y - 1}) != tutte:
            out.append("genus 0: t_cs(x-1, y-1) != classical Tutte")
    return out


def check_bollobas_riordan(cg, rng):
    x, y, z = var("x"), var("y"), var("z")
    out = []
    for vclasses in {None, cg.vclasses}:
        coloured = ColouredRibbonGraph(cg.graph, vclasses, None)
        r2 = Fraction(RankTable(coloured).all_doubled[-1][1], 2)
        scale = monomial({"y": r2, "z": 2 * r2})
        rhs = scale * t_cps(coloured).substitute({"w": x - 1, "x": 1 / (y * z**2), "y": y})
        if bollobas_riordan(cg.graph, vclasses) != rhs:
            out.append(f"Bollobas-Riordan identity failed (vclasses={vclasses})")
    return out


def check_plane_remark(cg, rng):
    g = cg.graph
    if g.euler_genus() or not _connected(cg) or not (cg.is_vertex_discrete() and cg.is_boundary_discrete()):
        return []
    out = []
    order = _shuffled(cg, rng)
    for br in resolution_branches(cg, order):
        bad = {s.token for s in br.steps} - {None, 1, 4, 6}
        if bad:
            out.append(f"plane graph uses activity types {sorted(bad)}")
    bbs, bolc = var("b_bs"), var("b_olc")
    ug = underlying(g)
    rhs = bbs ** ug.rank() * tutte_classical(ug).substitute({"x": 1 + 1 / bbs, "y": 1 + bolc})
    if p_normalized(cg) != rhs:
        out.append("plane P differs from the classical substitution")
    return out


def _profile(t, mask):
    return tuple(Fraction(d, 2) for d in t.all_doubled[mask][:4])


def check_rank_recursions(cg, rng):
    out = []
    g = cg.graph
    t = RankTable(cg)
    for e in cg.edges:
        kind = edge_type(cg, e)
        td, tc = RankTable(delete_coloured(cg, e)), RankTable(contract_coloured(cg, e))
        rest = [f for f in cg.edges if f != e]
        for sub in range(1 << len(rest)):
            a = [f for k, f in enumerate(rest) if sub >> k & 1]
            if _profile(t, t.mask_of(a)) != _profile(td, td.mask_of(a)):
                out.append(f"edge {e}: r_k over G and G\\e differ on {a}")
            gained = tuple(p - q for p, q in zip(_profile(t, t.mask_of(a + [e])), _profile(tc, tc.mask_of(a))))
            if gained != _UNIT[kind.delete_class]:
                out.append(f"edge {e}: contraction step {gained} on {a + [e]} for class {kind.delete_class}")
        drop = tuple(p - q for p, q in zip(_profile(t, t.full), _profile(td, td.full)))
        if drop != _UNIT[kind.contract_class]:
            out.append(f"edge {e}: deletion step {drop} for class {kind.contract_class}")
        rho_e = Fraction(t.all_doubled[t.full][4], 2)
        if rho_e - Fraction(td.all_doubled[td.full][4], 2) != _RHO_DELETE[doop_status(g, e)]:
            out.append(f"edge {e}: rho change under deletion")
        if rho_e - Fraction(tc.all_doubled[tc.full][4], 2) != _RHO_CONTRACT[loop_status(g, e)]:
            out.append(f"edge {e}: rho change under contraction")
    return out


def check_quotients(cg, rng):
    out = []
    qv, qb = quotient_vertex_graph(cg), quotient_boundary_graph(cg)
    for e in cg.edges:
        d, c = delete_coloured(cg, e), contract_coloured(cg, e)
        if not quotient_vertex_graph(d).same_as(qv.delete(e)):
            out.append(f"(G\\{e})/V != (G/V)\\{e}")
        if not quotient_vertex_graph(c).same_as(qv.contract(e)):
            out.append(f"(G/{e})/V != (G/V)/{e}")
        if not quotient_boundary_graph(d).same_as(qb.contract(e)):
            out.append(f"(G\\{e})*/B != (G*/B)/{e}")
        if not quotient_boundary_graph(c).same_as(qb.delete(e)):
            out.append(f"(G/{e})*/B != (G*/B)\\{e}")
        if not coloured_equivalent(dual_coloured(c), delete_coloured(dual_coloured(cg), e)):
            out.append(f"(G/{e})* != G*\\{e}")
    return out


def check_edge_types(cg, rng):
    out = []
    g = cg.graph
    qv, qb = quotient_vertex_graph(cg), quotient_boundary_graph(cg)
    for e in cg.edges:
        a, b = edge_type(cg, e), edge_type_direct(cg, e)
        if a != b:
            out.append(f"edge {e}: criteria give {a}, direct computation {b}")
        if g.is_loop(e) and not qv.is_loop(e):
            out.append(f"edge {e}: loop in G but not in G/V")
        if qb.is_bridge(e) and loop_status(g, e) != "orientable_loop":
            out.append(f"edge {e}: bridge in G*/B but not an orientable loop")
    return out


def _shape_branch(h, e) -> bool:
    """A branching step at a bridge or trivial loop (outside the forced cases)."""
    g = h.graph
    return is_trivial_loop(g, e) or (not g.is_loop(e) and underlying(g).is_bridge(e))


def check_quasi_trees(cg, rng):
    """Leaf-to-quasi-tree map and the activity predicates along every branch."""
    if not _connected(cg):
        return []
    out = []
    order = _shuffled(cg, rng)
    branches = resolution_branches(cg, order)
    trees = [branch_to_quasi_tree(b) for b in branches]
    if len(set(trees)) != len(trees):
        out.append(f"two leaves give the same edge set for order {order}")
    counts = boundary_counts_by_subset(cg.graph)
    table = RankTable(cg)
    regular = True
    for br, tree in zip(branches, trees):
        h = cg
        for step in br.steps:
            kind, _ = node_status(h, step.edge)
            if kind == "branch" and _shape_branch(h, step.edge):
                regular = False
            h = delete_coloured(h, step.edge) if step.action.endswith("delete") else contract_coloured(h, step.edge)
        if any(s.token == 3 for s in br.steps):
            regular = False
        out.extend(_activity_predicates(cg, order, tree, br, counts[table.mask_of(tree)] == 1))
    if regular:
        bad = [sorted(q) for q in trees if counts[table.mask_of(q)] != 1]
        if bad:
            out.append(f"leaves with b != 1: {bad}")
        if set(trees) != set(spanning_quasi_trees(cg)):
            out.append(f"leaves and quasi-trees differ for order {order}")
    return out


def _activity_predicates(cg, order, tree, branch, quasi_tree: bool) -> list:
    """Items 1-2 always; the live-status items 3-5 only when ``tree`` is a quasi-tree."""
    out = []
    for step in branch.steps:
        e = step.edge
        h = node_graph(cg, order, tree, e)
        g = h.graph
        rec = efvh_predicates(cg, order, tree, e)
        qv, qb = quotient_vertex_graph(h), quotient_boundary_graph(h)
        trivial = is_trivial_loop(g, e)
        status = loop_status(g, e)
        bridge = not g.is_loop(e) and underlying(g).is_bridge(e)
        pairs = [
            ("loop in H/V", qv.is_loop(e), "vertex essential", rec.vertex_essential),
            ("bridge in H*/B", qb.is_bridge(e), "boundary essential", rec.boundary_essential),
            (
                "trivial orientable loop",
                trivial and status == "orientable_loop",
                "externally live orientable",
                rec.live_status == "externally live orientable",
            ),
            (
                "trivial non-orientable loop",
                trivial and status == "nonorientable_loop",
                "live non-orientable",
                rec.live_status == "live non-orientable",
            ),
            ("bridge in H", bridge, "internally live orientable", rec.live_status == "internally live orientable"),
        ]
        for k, (lhs, a, rhs, b) in enumerate(pairs, 1):
            if a != b and (k <= 2 or quasi_tree):
                out.append(f"item {k} at edge {e}, T={sorted(tree)}: {lhs}={a} but {rhs}={b}")
    return out


def check_join(cg, rng, partner=None):
    if cg.graph.num_vertices == 0:
        return []
    if partner is None:
        from .generate import random_coloured_ribbon_graph

        partner = random_coloured_ribbon_graph(rng.getrandbits(32), 2, 2)
    if partner.graph.num_vertices == 0:
        return []
    va, vb = rng.randrange(cg.graph.num_vertices), rng.randrange(partner.graph.num_vertices)
    arc_a, arc_b = rng.randrange(4), rng.randrange(4)
    joined = coloured_join(cg, va, partner, vb, arc_a, arc_b)
    union = coloured_disjoint_union(cg, partner)
    if p_normalized(joined) != p_normalized(union):
        return [f"P(join) != P(union) at vertices {va + 1}, {vb + 1}"]
    return []


CHECKS: dict = {
    "oracle": check_oracle_triangle,
    "closed-form": check_closed_form,
    "duality": check_duality_identities,
    "hierarchy": check_hierarchy,
    "classical": check_classical,
    "bollobas-riordan": check_bollobas_riordan,
    "plane": check_plane_remark,
    "rank-recursions": check_rank_recursions,
    "quotients": check_quotients,
    "edge-types": check_edge_types,
    "quasi-trees": check_quasi_trees,
    "join": check_join,
}


def run_checks(cg, seed, names: Iterable[str] | None = None) -> list:
    """Run the named checks (default: all) and prefix failures with the check name."""
    out = []
    for name in names or CHECKS:
        rng = random.Random(f"{seed}:{name}")
        out.extend(f"{name}: {msg}" for msg in CHECKS[name](cg, rng))
    return out


def _run_case(args):
    index, cg, seed, names = args
    return index, run_checks(cg, f"{seed}:{index}", names)


def run_corpus(corpus, seed, names: Iterable[str] | None = None, workers: int = 1) -> list:
    """``(case index, failure)`` pairs, ordered by case index whatever ``workers`` is."""
    names = list(names or CHECKS)
    jobs = [(i, cg, seed, names) for i, cg in enumerate(corpus)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_run_case, jobs, chunksize=8))
    else:
        results = [_run_case(job) for job in jobs]
    return [(i, msg) for i, msgs in sorted(results, key=lambda r: r[0]) for msg in msgs]
