"""Abstract multigraphs: rank, bridges, and the classical Tutte polynomial."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .poly import HalfPoly, poly_sum, var

__all__ = [
    "MultiGraph",
    "tutte_classical",
    "tutte_recursive",
    "underlying",
    "universal_graph_U",
    "universal_graph_U_closed",
]


def _find(parent, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


@dataclass(frozen=True)
class MultiGraph:
    """``n`` vertices ``0..n-1``; ``edges[k]`` joins an endpoint pair and has id ``ids[k]``."""

    n: int
    edges: tuple
    ids: tuple = None

    def __post_init__(self):
        edges = tuple(tuple(p) for p in self.edges)
        for u, v in edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge endpoint out of range in {(u, v)}")
        ids = tuple(range(1, len(edges) + 1)) if self.ids is None else tuple(self.ids)
        if len(ids) != len(edges) or len(set(ids)) != len(ids):
            raise ValueError("edge ids must be distinct, one per edge")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "ids", ids)

    def _index(self, e) -> int:
        try:
            return self.ids.index(e)
        except ValueError:
            raise KeyError(f"unknown edge {e}") from None

    def endpoints(self, e):
        return self.edges[self._index(e)]

    def components(self, subset: Iterable | None = None) -> int:
        parent = list(range(self.n))
        chosen = self.ids if subset is None else subset
        for e in chosen:
            u, v = self.endpoints(e)
            parent[_find(parent, u)] = _find(parent, v)
        return sum(1 for a in range(self.n) if _find(parent, a) == a)

    def rank(self, subset: Iterable | None = None) -> int:
        return self.n - self.components(subset)

    def is_loop(self, e) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def is_bridge(self, e) -> bool:
        others = [x for x in self.ids if x != e]
        return self.components(others) > self.components()

    def delete(self, e) -> "MultiGraph":
        k = self._index(e)
        return MultiGraph(self.n, self.edges[:k] + self.edges[k + 1 :], self.ids[:k] + self.ids[k + 1 :])

    def contract(self, e) -> "MultiGraph":
        """Identify the ends of ``e`` (the higher index folds into the lower)."""
        u, v = self.endpoints(e)
        g = self.delete(e)
        if u == v:
            return g
        lo, hi = min(u, v), max(u, v)

        def relabel(a):
            if a == hi:
                return lo
            return a - 1 if a > hi else a

        return MultiGraph(self.n - 1, tuple((relabel(a), relabel(b)) for a, b in g.edges), g.ids)

    def rank_by_subset(self) -> list:
        """``rank`` of every subset, indexed by bitmask over ``ids`` order."""
        m = len(self.edges)
        out = [0] * (1 << m)
        for mask in range(1 << m):
            parent = list(range(self.n))
            r = 0
            for k, (u, v) in enumerate(self.edges):
                if mask >> k & 1:
                    a, b = _find(parent, u), _find(parent, v)
                    if a != b:
                        parent[a] = b
                        r += 1
            out[mask] = r
        return out

    def to_networkx(self):
        import networkx as nx

        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        for e, (u, v) in zip(self.ids, self.edges):
            g.add_edge(u, v, key=e, id=e)
        return g

    def same_as(self, other: "MultiGraph") -> bool:
        """Isomorphic by a vertex bijection that respects edge ids."""
        import networkx as nx

        if self.n != other.n or sorted(self.ids) != sorted(other.ids):
            return False

        def match(a, b):
            return sorted(d["id"] for d in a.values()) == sorted(d["id"] for d in b.values())

        return nx.is_isomorphic(self.to_networkx(), other.to_networkx(), edge_match=match)


def underlying(g) -> MultiGraph:
    """Abstract graph of a ribbon graph."""
    return MultiGraph(g.num_vertices, tuple(g.endpoints(e) for e in g.edges), g.edges)


def tutte_classical(g: MultiGraph) -> HalfPoly:
    """Whitney rank generating form of the Tutte polynomial in ``x``, ``y``."""
    x, y = var("x"), var("y")
    ranks = g.rank_by_subset()
    full = ranks[-1]
    counts: dict = {}
    for mask, r in enumerate(ranks):
        key = (full - r, bin(mask).count("1") - r)
        counts[key] = counts.get(key, 0) + 1
    return poly_sum(c * (x - 1) ** i * (y - 1) ** j for (i, j), c in counts.items())


def tutte_recursive(g: MultiGraph) -> HalfPoly:
    """Deletion-contraction on the lowest-id edge."""
    if not g.ids:
        return HalfPoly.const(1)
    e = min(g.ids)
    if g.is_loop(e):
        return var("y") * tutte_recursive(g.delete(e))
    if g.is_bridge(e):
        return var("x") * tutte_recursive(g.contract(e))
    return tutte_recursive(g.delete(e)) + tutte_recursive(g.contract(e))


def universal_graph_U(g: MultiGraph) -> HalfPoly:
    """Recursive universal deletion-contraction invariant in ``x, y, a, b, gamma``."""
    if not g.ids:
        return var("gamma") ** g.n
    e = min(g.ids)
    if g.is_loop(e):
        return var("y") * universal_graph_U(g.delete(e))
    if g.is_bridge(e):
        return var("x") * universal_graph_U(g.contract(e))
    return var("a") * universal_graph_U(g.delete(e)) + var("b") * universal_graph_U(g.contract(e))


def universal_graph_U_closed(g: MultiGraph) -> HalfPoly:
    """``gamma^k a^nullity b^rank T(x/b, y/a)`` expanded exactly."""
    x, y, a, b = var("x"), var("y"), var("a"), var("b")
    r = g.rank()
    nullity = len(g.ids) - r
    ranks = g.rank_by_subset()
    # T(x/b, y/a) = sum (x/b - 1)^(r-rA) (y/a - 1)^(|A|-rA); clear denominators termwise
    terms = []
    for mask, ra in enumerate(ranks):
        i, j = r - ra, bin(mask).count("1") - ra
        terms.append((x - b) ** i * b ** (r - i) * (y - a) ** j * a ** (nullity - j))
    return var("gamma") ** g.components() * poly_sum(terms)
