"""Topological Tutte polynomials and the universal invariant ``U``.

Every state sum runs over all edge subsets using a :class:`RankTable`,
so exponents are accumulated as doubled integers and the result is built
once.  The recursive evaluator applies deletion-contraction with the
coloured minor operations and serves as an independent oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .colouring import contract_coloured, delete_coloured, dual_coloured
from .invariants import RankTable, as_coloured, edge_type
from .poly import HalfPoly, monomial, poly_sum, var
from .ribbon import RibbonError

__all__ = [
    "P_VARS",
    "U_VARS",
    "bollobas_riordan",
    "check_duality",
    "krushkal",
    "p_from_u",
    "p_normalized",
    "t_cps",
    "t_cs",
    "t_ps",
    "t_s",
    "universal_U_recursive",
    "universal_U_state_sum",
    "universality_closed_form",
]

U_VARS = (
    "alpha", "beta", "gamma",
    "a_bs", "a_bp", "a_olc", "a_olh",
    "b_bs", "b_bp", "b_olc", "b_olh",
)
P_VARS = ("b_bs", "b_bp", "b_olc", "b_olh")


def _from_counts(names: Sequence[str], counts: dict) -> HalfPoly:
    return HalfPoly(names, counts)


def _tally(counts: dict, key: tuple):
    counts[key] = counts.get(key, 0) + 1


def universal_U_state_sum(cg) -> HalfPoly:
    t = RankTable(cg)
    r1e, r2e, r3e, r4e, _ = t.all_doubled[t.full]
    counts: dict = {}
    for r1, r2, r3, r4, _ in t.all_doubled:
        _tally(counts, (
            2 * t.k_v + r1e - r1,
            2 * t.k_b + r3,
            2 * t.v - r1 - r2 + r3 + r4,
            r1e - r1, r2e - r2, r3e - r3, r4e - r4,
            r1, r2, r3, r4,
        ))
    return _from_counts(U_VARS, counts)


def _half(name: str) -> HalfPoly:
    return monomial({name: Fraction(1, 2)})


def _step_weights():
    a = {k: var(f"a_{k}") for k in ("bs", "bp", "olc", "olh")}
    b = {k: var(f"b_{k}") for k in ("bs", "bp", "olc", "olh")}
    a["nl"] = _half("a_bp") * _half("a_olh")
    b["nl"] = _half("b_bp") * _half("b_olh")
    return a, b


def universal_U_recursive(cg, order: Sequence[int] | None = None) -> HalfPoly:
    """Deletion-contraction, processing edges in ``order`` (default: by id)."""
    cg = as_coloured(cg)
    order = list(cg.edges if order is None else order)
    if sorted(order) != sorted(cg.edges):
        raise RibbonError("order must list every edge exactly once")
    a, b = _step_weights()
    memo: dict = {}

    def rec(h, k):
        key = (h, k)
        if key in memo:
            return memo[key]
        if k == len(order):
            out = var("alpha") ** len(h.vclasses) * var("beta") ** len(h.bclasses) * var("gamma") ** h.graph.num_vertices
        else:
            e = order[k]
            kind = edge_type(h, e)
            out = a[kind.contract_class] * rec(delete_coloured(h, e), k + 1)
            out = out + b[kind.delete_class] * rec(contract_coloured(h, e), k + 1)
        memo[key] = out
        return out

    return rec(cg, 0)


def p_from_u(u: HalfPoly) -> HalfPoly:
    """Set ``alpha, beta, gamma`` and all ``a_*`` to one."""
    ones = {n: 1 for n in ("alpha", "beta", "gamma", "a_bs", "a_bp", "a_olc", "a_olh")}
    return u.substitute(ones)


def p_normalized(cg) -> HalfPoly:
    t = RankTable(cg)
    counts: dict = {}
    for r1, r2, r3, r4, _ in t.all_doubled:
        _tally(counts, (r1, r2, r3, r4))
    return _from_counts(P_VARS, counts)


def t_ps(cg) -> HalfPoly:
    """Polynomial in ``w, x, y, z`` of a vertex- and boundary-coloured graph."""
    t = RankTable(cg)
    r1e, r2e, _, _, _ = t.all_doubled[t.full]
    counts: dict = {}
    for r1, r2, r3, r4, _ in t.all_doubled:
        _tally(counts, (r1e - r1, r2e - r2, r3, r4))
    return _from_counts(("w", "x", "y", "z"), counts)


def t_s(cg) -> HalfPoly:
    """Polynomial in ``x, y, z``; vertex colours are ignored."""
    t = RankTable(as_coloured(cg).forget_vertex_colours())
    rhoe = t.all_doubled[t.full][4]
    counts: dict = {}
    for _, _, r3, r4, rho in t.all_doubled:
        _tally(counts, (rhoe - rho, r3, r4))
    return _from_counts(("x", "y", "z"), counts)


def t_cps(cg) -> HalfPoly:
    """Polynomial in ``w, x, y``; boundary colours are ignored."""
    t = RankTable(as_coloured(cg).forget_boundary_colours())
    r1e, r2e, _, _, _ = t.all_doubled[t.full]
    counts: dict = {}
    for mask, (r1, r2, _, _, rho) in enumerate(t.all_doubled):
        size2 = 2 * bin(mask).count("1")
        _tally(counts, (r1e - r1, r2e - r2, size2 - rho))
    return _from_counts(("w", "x", "y"), counts)


def t_cs(g) -> HalfPoly:
    """Polynomial in ``x, y`` of the underlying ribbon graph."""
    cg = as_coloured(g)
    t = RankTable(type(cg)(cg.graph))
    rhoe = t.all_doubled[t.full][4]
    counts: dict = {}
    for mask, d in enumerate(t.all_doubled):
        rho = d[4]
        _tally(counts, (rhoe - rho, 2 * bin(mask).count("1") - rho))
    return _from_counts(("x", "y"), counts)


def universality_closed_form(cg) -> HalfPoly:
    """``U`` rebuilt from ``t_ps`` at the universal substitution."""
    cg = as_coloured(cg)
    t = RankTable(cg)
    r1, r2, r3, r4, rho = (Fraction(d, 2) for d in t.all_doubled[t.full])
    al, be, ga = var("alpha"), var("beta"), var("gamma")
    pre = monomial({
        "alpha": t.k_v, "beta": t.k_b, "gamma": t.v - rho,
        "b_bs": r1, "b_bp": r2, "a_olc": r3, "a_olh": r4,
    })
    args = {
        "w": al * ga * var("a_bs") / var("b_bs"),
        "x": ga * var("a_bp") / var("b_bp"),
        "y": be * ga * var("b_olc") / var("a_olc"),
        "z": ga * var("b_olh") / var("a_olh"),
    }
    return pre * t_ps(cg).substitute(args)


def bollobas_riordan(g, vclasses=None) -> HalfPoly:
    """Bollobás-Riordan polynomial; with ``vclasses`` the partitioned variant.

    Without a partition the rank is that of the underlying graph and ``z``
    carries the Euler genus of each spanning subgraph.
    """
    from .colouring import ColouredRibbonGraph

    cg = as_coloured(g)
    cg = ColouredRibbonGraph(cg.graph, vclasses, None)
    t = RankTable(cg)
    r1e = t.rv[t.full]
    x, y, z = var("x"), var("y"), var("z")
    counts: dict = {}
    for mask, d in enumerate(t.all_doubled):
        r1, rho2 = t.rv[mask], d[4]
        size = bin(mask).count("1")
        _tally(counts, (r1e - r1, size - r1, rho2 - 2 * r1))
    return poly_sum(c * (x - 1) ** i * y ** j * z ** k for (i, j, k), c in counts.items())


def krushkal(cg, ambient_euler_genus: int | None = None) -> HalfPoly:
    """Krushkal polynomial in ``x, y, a, b`` for a graph in a closed surface.

    The ambient Euler genus must be supplied because the coloured graph
    determines its surface only up to stabilisation.
    """
    cg = as_coloured(cg)
    if ambient_euler_genus is None:
        raise TypeError("krushkal needs the ambient Euler genus")
    if not cg.is_vertex_discrete():
        raise RibbonError("krushkal requires discrete vertex classes")
    t = RankTable(cg)
    r2 = Fraction(t.all_doubled[t.full][1], 2)
    pre = monomial({"a": r2, "b": Fraction(ambient_euler_genus, 2)})
    a, b = var("a"), var("b")
    return pre * t_ps(cg).substitute({"w": var("x"), "x": 1 / a, "y": var("y"), "z": 1 / b})


def check_duality(cg) -> bool:
    """Dual swaps ``(w, x) <-> (y, z)`` in ``t_ps``; ``t_s`` and ``t_cps`` trade places."""
    cg = as_coloured(cg)
    d = dual_coloured(cg)
    w, x, y, z = var("w"), var("x"), var("y"), var("z")
    ok = t_ps(d) == t_ps(cg).substitute({"w": y, "x": z, "y": w, "z": x})
    ok &= t_s(cg) == t_cps(d).substitute({"w": y, "x": z, "y": x})
    ok &= t_cps(cg) == t_s(d).substitute({"x": y, "y": w, "z": x})
    return ok
