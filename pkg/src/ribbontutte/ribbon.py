"""Ribbon graphs as signed rotation systems.

A ribbon graph is stored as one cyclic sequence of half-edges per vertex
(``(edge, end)`` pairs, ``end`` in ``{1, 2}``) plus the set of twisted
edges.  Each half-edge has two *side flags* ``(edge, end, side)`` with
``side`` 0 (left) or 1 (right).  Sides are named per band: at end 1 the
left side faces the next half-edge in the rotation, at end 2 it faces the
previous one, so an untwisted band joins left to left.  Three involutions
on flags drive everything:

* ``long``   - run along the band to the other end (swap sides if twisted),
* ``corner`` - cross a vertex corner to the neighbouring half-edge,
* ``swap``   - change side at the same end.

Boundary components are the orbits of ``long`` and ``corner``; vertices
are the orbits of ``corner`` and ``swap``.  Partial duality exchanges
``long`` and ``swap`` on the chosen edges, which is how both the geometric
dual and edge contraction are computed here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import permutations
from typing import Iterable, NamedTuple

__all__ = [
    "BoundaryComponent",
    "Flag",
    "HalfEdge",
    "PartialDual",
    "RibbonError",
    "RibbonGraph",
    "boundary_counts_by_subset",
    "canonical_form",
    "contract_edge",
    "corner_flag",
    "delete_edge",
    "disjoint_union",
    "doop_status",
    "equivalent",
    "geometric_dual",
    "is_trivial_loop",
    "join_at",
    "loop_status",
    "partial_dual",
    "partial_dual_maps",
    "relabel_edges",
    "restrict",
    "rho",
    "unlabelled_form",
    "validate",
]

HalfEdge = tuple  # (edge, end)
Flag = tuple  # (edge, end, side)

LEFT, RIGHT = 0, 1


class RibbonError(ValueError):
    """Raised for unknown edges/vertices or malformed rotation systems."""


def next_side(end: int) -> int:
    """Side of a half-edge that faces the following half-edge at its vertex."""
    return LEFT if end == 1 else RIGHT


def prev_side(end: int) -> int:
    return RIGHT if end == 1 else LEFT


def _rotate_to_min(rot: tuple) -> tuple:
    if not rot:
        return rot
    i = rot.index(min(rot))
    return rot[i:] + rot[:i]


@dataclass(frozen=True)
class BoundaryComponent:
    """One boundary walk; ``index`` is the 1-based canonical number."""

    index: int
    flags: tuple
    vertices: frozenset

    @property
    def is_flagless(self) -> bool:
        return not self.flags


@dataclass(frozen=True)
class RibbonGraph:
    rotations: tuple
    twisted: frozenset = frozenset()
    edge_ids: tuple | None = field(default=None)

    def __post_init__(self):
        rots = tuple(_rotate_to_min(tuple(tuple(h) for h in r)) for r in self.rotations)
        object.__setattr__(self, "rotations", rots)
        object.__setattr__(self, "twisted", frozenset(self.twisted))
        if self.edge_ids is None:
            ids = sorted({h[0] for r in rots for h in r})
        else:
            ids = sorted(set(self.edge_ids))
        object.__setattr__(self, "edge_ids", tuple(ids))

    # -- sizes ----------------------------------------------------------
    @property
    def edges(self) -> tuple:
        return self.edge_ids

    @property
    def num_vertices(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return len(self.edge_ids)

    def __repr__(self):
        rots = " | ".join(" ".join(f"{e}.{k}" for e, k in r) for r in self.rotations)
        tw = sorted(self.twisted)
        return f"RibbonGraph([{rots}], twisted={tw})"

    # -- incidence ------------------------------------------------------
    @cached_property
    def where(self) -> dict:
        """Half-edge -> (vertex index, position in rotation)."""
        return {h: (v, i) for v, r in enumerate(self.rotations) for i, h in enumerate(r)}

    def vertex_of(self, half_edge) -> int:
        return self.where[half_edge][0]

    def endpoints(self, e: int) -> tuple:
        self._require_edge(e)
        return self.where[(e, 1)][0], self.where[(e, 2)][0]

    def is_loop(self, e: int) -> bool:
        u, v = self.endpoints(e)
        return u == v

    def isolated_vertices(self) -> list:
        return [v for v, r in enumerate(self.rotations) if not r]

    def _require_edge(self, e: int):
        if e not in self.edge_ids:
            raise RibbonError(f"unknown edge {e}")

    # -- flags and the three involutions ------------------------------------
    @cached_property
    def flags(self) -> tuple:
        return tuple(sorted((e, end, s) for e in self.edge_ids for end in (1, 2) for s in (0, 1)))

    def long(self, f: Flag) -> Flag:
        e, end, s = f
        return (e, 3 - end, 1 - s if e in self.twisted else s)

    @staticmethod
    def swap(f: Flag) -> Flag:
        return (f[0], f[1], 1 - f[2])

    @cached_property
    def corner_map(self) -> dict:
        out = {}
        for rot in self.rotations:
            d = len(rot)
            for k, (e, end) in enumerate(rot):
                e2, end2 = rot[(k + 1) % d]
                a = (e, end, next_side(end))
                b = (e2, end2, prev_side(end2))
                out[a] = b
                out[b] = a
        return out

    def corner(self, f: Flag) -> Flag:
        return self.corner_map[f]

    # -- boundary components -----------------------------------------------
    @cached_property
    def boundary(self) -> tuple:
        """Canonical boundary components (flagged ones first, then isolated)."""
        seen = set()
        walks = []
        corner = self.corner_map
        for f0 in self.flags:
            if f0 in seen:
                continue
            walk = []
            f = f0
            while True:
                g = self.long(f)
                walk += (f, g)
                f = corner[g]
                if f == f0:
                    break
            seen.update(walk)
            walks.append(tuple(walk))
        where = self.where
        comps = [
            BoundaryComponent(i + 1, w, frozenset(where[x[:2]][0] for x in w))
            for i, w in enumerate(walks)
        ]
        for v in self.isolated_vertices():
            comps.append(BoundaryComponent(len(comps) + 1, (), frozenset({v})))
        return tuple(comps)

    @cached_property
    def face_of(self) -> dict:
        """Flag -> 0-based position of its boundary component."""
        return {f: c.index - 1 for c in self.boundary for f in c.flags}

    def flagless_face(self, v: int) -> int:
        """0-based boundary position of the circle around isolated vertex ``v``."""
        for c in self.boundary:
            if c.is_flagless and v in c.vertices:
                return c.index - 1
        raise RibbonError(f"vertex {v} is not isolated")

    @property
    def num_boundary(self) -> int:
        return len(self.boundary)

    # -- topology -------------------------------------------------------
    def _vertex_components(self, subset=None) -> int:
        parent = list(range(self.num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        edges = self.edge_ids if subset is None else subset
        for e in edges:
            u, v = self.endpoints(e)
            parent[find(u)] = find(v)
        return sum(1 for a in range(self.num_vertices) if find(a) == a)

    @cached_property
    def num_components(self) -> int:
        return self._vertex_components()

    def euler_genus(self) -> int:
        return 2 * self.num_components - self.num_vertices + self.num_edges - self.num_boundary

    @cached_property
    def orientation_signs(self) -> tuple | None:
        """A reflection sign per vertex making every edge untwisted, if one exists."""
        sign = [None] * self.num_vertices
        adj = [[] for _ in range(self.num_vertices)]
        for e in self.edge_ids:
            u, v = self.endpoints(e)
            t = int(e in self.twisted)
            adj[u].append((v, t))
            adj[v].append((u, t))
        for root in range(self.num_vertices):
            if sign[root] is not None:
                continue
            sign[root] = 0
            queue = [root]
            while queue:
                u = queue.pop()
                for v, t in adj[u]:
                    want = sign[u] ^ t
                    if sign[v] is None:
                        sign[v] = want
                        queue.append(v)
                    elif sign[v] != want:
                        return None
        return tuple(sign)

    def is_orientable(self) -> bool:
        return self.orientation_signs is not None


# -- module level operations ------------------------------------------------


def validate(g: RibbonGraph) -> list:
    """Return a list of diagnostics; an empty list means ``g`` is well formed."""
    problems = []
    ids = set(g.edge_ids)
    counts: dict = {}
    for r in g.rotations:
        for h in r:
            if len(h) != 2 or h[1] not in (1, 2) or not isinstance(h[0], int):
                problems.append(f"malformed half-edge {h!r}")
                continue
            if h[0] not in ids:
                problems.append(f"half-edge {h[0]}.{h[1]} of undeclared edge")
            counts[h] = counts.get(h, 0) + 1
    for h, c in sorted(counts.items()):
        if c > 1:
            problems.append(f"half-edge multiplicity: {h[0]}.{h[1]} occurs {c} times")
    for e in sorted(ids):
        for end in (1, 2):
            if (e, end) not in counts:
                problems.append(f"half-edge multiplicity: {e}.{end} is missing")
    for e in sorted(g.twisted):
        if e not in ids:
            problems.append(f"twist entry for nonexistent edge {e}")
    return problems


def rho(g: RibbonGraph, subset: Iterable[int]) -> Fraction:
    sub = restrict(g, subset)
    return Fraction(sub.num_edges + sub.num_vertices - sub.num_boundary, 2)


def delete_edge(g: RibbonGraph, e: int) -> RibbonGraph:
    g._require_edge(e)
    rots = tuple(tuple(h for h in r if h[0] != e) for r in g.rotations)
    return RibbonGraph(rots, g.twisted - {e}, tuple(x for x in g.edge_ids if x != e))


def restrict(g: RibbonGraph, subset: Iterable[int]) -> RibbonGraph:
    """Spanning ribbon subgraph on the edges of ``subset``."""
    keep = set(subset)
    for e in keep:
        g._require_edge(e)
    rots = tuple(tuple(h for h in r if h[0] in keep) for r in g.rotations)
    return RibbonGraph(rots, g.twisted & keep, tuple(sorted(keep)))


class PartialDual(NamedTuple):
    graph: RibbonGraph
    flag_map: dict  # old flag -> new flag
    origins: tuple  # new vertex -> frozenset of old vertices it touches


def partial_dual_maps(g: RibbonGraph, subset: Iterable[int], *, face_order: bool = False) -> PartialDual:
    """Partial dual with the flag correspondence and vertex origins.

    New vertices are ordered by the smallest old vertex they touch (ties
    by smallest flag).  With ``face_order`` they follow the canonical
    boundary order of ``g`` instead, which is what the geometric dual uses.
    """
    A = frozenset(subset)
    for e in A:
        g._require_edge(e)
    corner = g.corner_map

    def swap2(f):  # side swap of the partial dual
        return g.long(f) if f[0] in A else RibbonGraph.swap(f)

    def long2(f):
        return RibbonGraph.swap(f) if f[0] in A else g.long(f)

    seen = set()
    orbits = []
    for f0 in g.flags:
        if f0 in seen:
            continue
        orbit = []
        f = f0
        while True:
            y = swap2(f)
            orbit += (f, y)
            f = corner[y]
            if f == f0:
                break
        seen.update(orbit)
        orbits.append(orbit)

    fmap: dict = {}
    built = []
    where = g.where
    for orbit in orbits:
        plain = [x for x in orbit if x[0] not in A]
        if plain:
            a = min(plain)
            start = a if a[2] == prev_side(a[1]) else RibbonGraph.swap(a)
        else:
            start = min(orbit)
        rot = []
        x = start
        while True:
            y = swap2(x)
            e = x[0]
            if e in A:
                end = 1 if (e, 1, 0) in (x, y) else 2
            else:
                end = x[1]
            rot.append((e, end))
            fmap[x] = (e, end, prev_side(end))
            fmap[y] = (e, end, next_side(end))
            x = corner[y]
            if x == start:
                break
        touched = frozenset(where[f[:2]][0] for f in orbit)
        if face_order:
            key = (g.face_of[min(orbit)],)
        else:
            key = (min(touched), min(orbit))
        built.append((key, tuple(rot), touched))
    for v in g.isolated_vertices():
        key = (g.flagless_face(v),) if face_order else (v, ())
        built.append((key, (), frozenset({v})))
    built.sort(key=lambda t: t[0])

    inverse = {new: old for old, new in fmap.items()}
    twisted = set()
    for e in g.edge_ids:
        partner = fmap[long2(inverse[(e, 1, 0)])]
        if partner[2] != 0:
            twisted.add(e)
    graph = RibbonGraph(tuple(r for _, r, _ in built), frozenset(twisted), g.edge_ids)
    return PartialDual(graph, fmap, tuple(p for _, _, p in built))


def partial_dual(g: RibbonGraph, subset: Iterable[int]) -> RibbonGraph:
    return partial_dual_maps(g, subset).graph


def geometric_dual(g: RibbonGraph) -> RibbonGraph:
    """Dual ribbon graph; dual vertex ``i`` caps boundary component ``i``."""
    return partial_dual_maps(g, g.edge_ids, face_order=True).graph


def contract_edge(g: RibbonGraph, e: int) -> RibbonGraph:
    g._require_edge(e)
    return delete_edge(partial_dual(g, {e}), e)


def loop_status(g: RibbonGraph, e: int) -> str:
    """``'not_loop'``, ``'orientable_loop'`` or ``'nonorientable_loop'``."""
    if not g.is_loop(e):
        return "not_loop"
    return "nonorientable_loop" if e in g.twisted else "orientable_loop"


def doop_status(g: RibbonGraph, e: int) -> str:
    """Loop status of ``e`` in the dual, read off the boundary walks of ``g``.

    ``e`` is a doop when both long sides of its band lie on one boundary
    walk; the dual loop is orientable exactly when that walk runs along the
    two sides in opposite directions.
    """
    g._require_edge(e)
    faces = g.face_of
    a, b = (e, 1, 0), (e, 1, 1)
    if faces[a] != faces[b]:
        return "not_doop"
    walk = g.boundary[faces[a]].flags
    directions = []
    for i in range(0, len(walk), 2):
        f = walk[i]
        if f[0] == e:
            directions.append(f[1])
    assert len(directions) == 2
    return "orientable_doop" if directions[0] != directions[1] else "nonorientable_doop"


def is_trivial_loop(g: RibbonGraph, e: int) -> bool:
    """A loop whose two rotation arcs are not joined by any other path."""
    if not g.is_loop(e):
        return False
    v = g.vertex_of((e, 1))
    rot = g.rotations[v]
    i, j = rot.index((e, 1)), rot.index((e, 2))
    if i > j:
        i, j = j, i
    inner = set(rot[i + 1 : j])
    n = g.num_vertices
    # vertex v stands for the inner arc, n for the outer arc
    parent = list(range(n + 1))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def node(h):
        w = g.vertex_of(h)
        if w != v:
            return w
        return v if h in inner else n

    for f in g.edge_ids:
        if f != e:
            parent[find(node((f, 1)))] = find(node((f, 2)))
    return find(v) != find(n)


def boundary_counts_by_subset(g: RibbonGraph) -> list:
    """``b`` of every spanning subgraph, indexed by bitmask over ``g.edges``."""
    ids = g.edge_ids
    m = len(ids)
    pos = {e: k for k, e in enumerate(ids)}

    def flag_index(e, end, s):
        return 4 * pos[e] + 2 * (end - 1) + s

    long_pairs = []
    for e in ids:
        for s in (0, 1):
            a = (e, 1, s)
            long_pairs.append((flag_index(*a), flag_index(*g.long(a)), 1 << pos[e]))
    rotations = g.rotations
    out = [0] * (1 << m)
    for mask in range(1 << m):
        parent = list(range(4 * m))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        count = 4 * bin(mask).count("1")
        for a, b, bit in long_pairs:
            if mask & bit:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
                    count -= 1
        bare = 0
        for rot in rotations:
            kept = [h for h in rot if mask >> pos[h[0]] & 1]
            if not kept:
                bare += 1
                continue
            d = len(kept)
            for k in range(d):
                e1, end1 = kept[k]
                e2, end2 = kept[(k + 1) % d]
                ra = find(flag_index(e1, end1, next_side(end1)))
                rb = find(flag_index(e2, end2, prev_side(end2)))
                if ra != rb:
                    parent[ra] = rb
                    count -= 1
        out[mask] = count + bare
    return out


def relabel_edges(g: RibbonGraph, mapping: dict) -> RibbonGraph:
    rots = tuple(tuple((mapping[e], end) for e, end in r) for r in g.rotations)
    return RibbonGraph(rots, frozenset(mapping[e] for e in g.twisted), tuple(mapping[e] for e in g.edge_ids))


def disjoint_union(g: RibbonGraph, h: RibbonGraph) -> RibbonGraph:
    """Union with ``h``'s edges shifted past ``g``'s largest id."""
    offset = max(g.edge_ids, default=0)
    h2 = relabel_edges(h, {e: e + offset for e in h.edge_ids})
    return RibbonGraph(g.rotations + h2.rotations, g.twisted | h2.twisted, g.edge_ids + h2.edge_ids)


def corner_flag(g: RibbonGraph, v: int, arc: int = 0):
    """Flag on the corner just before position ``arc`` at ``v`` (None if isolated)."""
    if not 0 <= v < g.num_vertices:
        raise RibbonError(f"unknown vertex {v}")
    rot = g.rotations[v]
    if not rot:
        return None
    e, end = rot[arc % len(rot)]
    return (e, end, prev_side(end))


def join_at(g: RibbonGraph, vg: int, h: RibbonGraph, vh: int, arc_g: int = 0, arc_h: int = 0) -> RibbonGraph:
    """One-point join: splice ``h``'s rotation at ``vh`` into ``g`` at ``vg``.

    The merged vertex keeps ``vg``'s index; ``h``'s other vertices follow
    ``g``'s, and ``h``'s edges are shifted as in :func:`disjoint_union`.
    """
    if not 0 <= vg < g.num_vertices:
        raise RibbonError(f"unknown vertex {vg} of the first graph")
    if not 0 <= vh < h.num_vertices:
        raise RibbonError(f"unknown vertex {vh} of the second graph")
    offset = max(g.edge_ids, default=0)
    h2 = relabel_edges(h, {e: e + offset for e in h.edge_ids})
    rg, rh = g.rotations[vg], h2.rotations[vh]
    if rg:
        arc_g %= len(rg)
    if rh:
        arc_h %= len(rh)
    merged = rg[:arc_g] + rh[arc_h:] + rh[:arc_h] + rg[arc_g:]
    rots = list(g.rotations)
    rots[vg] = merged
    rots += [r for i, r in enumerate(h2.rotations) if i != vh]
    return RibbonGraph(tuple(rots), g.twisted | h2.twisted, g.edge_ids + h2.edge_ids)


# -- equivalence ------------------------------------------------------------


def _component_form(g: RibbonGraph, root: int, flip: int):
    """Breadth-first normal form of one component from a rooted orientation."""
    where = g.where
    orient = {root: flip}
    order = [root]
    words = []
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        rot = g.rotations[v]
        if orient[v]:
            rot = rot[::-1]
        ids = [e for e, _ in rot]
        word = min(tuple(ids[k:] + ids[:k]) for k in range(len(ids)))
        words.append(word)
        for e in word:
            for end in (1, 2):
                w = where[(e, end)][0]
                if w not in orient:
                    orient[w] = orient[v] ^ int(e in g.twisted)
                    order.append(w)
    twisted = []
    for e in g.edge_ids:
        u, w = g.endpoints(e)
        if u in orient and (int(e in g.twisted) ^ orient[u] ^ orient[w]):
            twisted.append(e)
    return tuple(words), tuple(twisted)


def canonical_form(g: RibbonGraph):
    """Hashable normal form: equal exactly for equivalent edge-labelled graphs.

    Equivalence allows renumbering vertices, swapping the two ends of an
    edge, and reflecting a vertex while flipping the twist of the non-loop
    edges at it.
    """
    seen = set()
    parts = []
    for e in g.edge_ids:
        u, v = g.endpoints(e)
        if u in seen:
            continue
        best = min(_component_form(g, root, flip) for root in {u, v} for flip in (0, 1))
        seen |= _reach(g, u)
        parts.append(best)
    parts.sort()
    return tuple(parts), len(g.isolated_vertices())


def _reach(g: RibbonGraph, start: int) -> set:
    adj: dict = {}
    for e in g.edge_ids:
        u, v = g.endpoints(e)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    out = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj.get(u, ()):
            if w not in out:
                out.add(w)
                stack.append(w)
    return out


def equivalent(g: RibbonGraph, h: RibbonGraph) -> bool:
    return canonical_form(g) == canonical_form(h)


def unlabelled_form(g: RibbonGraph):
    """Normal form up to equivalence and renaming of edges (small graphs only)."""
    ids = g.edge_ids
    targets = list(range(1, len(ids) + 1))
    return min(
        canonical_form(relabel_edges(g, dict(zip(ids, perm)))) for perm in permutations(targets)
    )
