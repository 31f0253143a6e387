"""Vertex and boundary colourings carried through minors and duality.

A colouring is a pair of partitions: of vertex positions and of canonical
boundary positions (both 0-based here; the text format is 1-based).
Boundary identity across an operation is tracked through side flags,
which keep their names under deletion and are mapped explicitly by the
partial-dual machinery under contraction and duality.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .graphs import MultiGraph
from .ribbon import (
    RibbonError,
    RibbonGraph,
    corner_flag,
    delete_edge,
    disjoint_union,
    join_at,
    partial_dual_maps,
)

__all__ = [
    "ColouredRibbonGraph",
    "coloured_disjoint_union",
    "coloured_equivalent",
    "coloured_join",
    "contract_coloured",
    "delete_coloured",
    "discard_isolated",
    "dual_coloured",
    "quotient_boundary_graph",
    "quotient_vertex_graph",
]


def _normalise(blocks, n: int, what: str) -> tuple:
    if blocks is None:
        return tuple(frozenset({i}) for i in range(n))
    out = [frozenset(b) for b in blocks if b]
    seen = set()
    for b in out:
        if seen & b:
            raise RibbonError(f"{what} classes overlap")
        seen |= b
    if seen != set(range(n)):
        bad = sorted(seen - set(range(n)))
        if bad:
            raise RibbonError(f"{what} class index {bad[0] + 1} out of range 1..{n}")
        raise RibbonError(f"{what} classes do not cover all {n} items")
    return tuple(sorted(out, key=min))


@dataclass(frozen=True)
class ColouredRibbonGraph:
    """A ribbon graph with a vertex partition and a boundary partition.

    ``None`` for either partition means discrete (every item alone).
    """

    graph: RibbonGraph
    vclasses: tuple = None
    bclasses: tuple = None

    def __post_init__(self):
        g = self.graph
        object.__setattr__(self, "vclasses", _normalise(self.vclasses, g.num_vertices, "vertex"))
        object.__setattr__(self, "bclasses", _normalise(self.bclasses, g.num_boundary, "boundary"))

    @property
    def edges(self):
        return self.graph.edge_ids

    def vclass_of(self) -> list:
        out = [0] * self.graph.num_vertices
        for k, block in enumerate(self.vclasses):
            for v in block:
                out[v] = k
        return out

    def bclass_of(self) -> list:
        out = [0] * self.graph.num_boundary
        for k, block in enumerate(self.bclasses):
            for f in block:
                out[f] = k
        return out

    def forget_vertex_colours(self) -> "ColouredRibbonGraph":
        return ColouredRibbonGraph(self.graph, None, self.bclasses)

    def forget_boundary_colours(self) -> "ColouredRibbonGraph":
        return ColouredRibbonGraph(self.graph, self.vclasses, None)

    def is_vertex_discrete(self) -> bool:
        return len(self.vclasses) == self.graph.num_vertices

    def is_boundary_discrete(self) -> bool:
        return len(self.bclasses) == self.graph.num_boundary

    def __repr__(self):
        vs = [sorted(b) for b in self.vclasses]
        bs = [sorted(b) for b in self.bclasses]
        return f"Coloured({self.graph!r}, V={vs}, B={bs})"


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, a):
        self.parent.setdefault(a, a)
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def union_all(self, items):
        items = list(items)
        for a in items[1:]:
            self.union(items[0], a)


def _blocks_from_roots(n: int, root_of) -> list:
    groups: dict = {}
    for i in range(n):
        groups.setdefault(root_of(i), set()).add(i)
    return list(groups.values())


def delete_coloured(cg: ColouredRibbonGraph, e: int) -> ColouredRibbonGraph:
    """Delete ``e``; boundary classes follow a closure over shared flags.

    Every boundary component that ran along ``e`` is merged (with its
    whole class) into the classes of the components that replace it.
    """
    g = cg.graph
    h = delete_edge(g, e)
    uf = _UnionFind()
    for block in cg.bclasses:
        uf.union_all(("old", i) for i in block)
    for j, comp in enumerate(h.boundary):
        for f in comp.flags:
            uf.union(("new", j), ("old", g.face_of[f]))
    touched = {g.face_of[(e, end, s)] for end in (1, 2) for s in (0, 1)}
    uf.union_all(("old", i) for i in touched)
    anchor = ("old", min(touched))
    ends = set(g.endpoints(e))
    for j, comp in enumerate(h.boundary):
        if comp.flags:
            if any(g.face_of[f] in touched for f in comp.flags):
                uf.union(("new", j), anchor)
        else:
            (w,) = comp.vertices
            if w in ends:
                uf.union(("new", j), anchor)
            else:
                uf.union(("new", j), ("old", g.flagless_face(w)))
    bclasses = _blocks_from_roots(h.num_boundary, lambda j: uf.find(("new", j)))
    return ColouredRibbonGraph(h, cg.vclasses, bclasses)


def contract_coloured(cg: ColouredRibbonGraph, e: int) -> ColouredRibbonGraph:
    """Contract ``e``; vertex classes of its ends merge, boundary classes move 1-1."""
    g = cg.graph
    u, v = g.endpoints(e)
    pd = partial_dual_maps(g, {e})
    h = delete_edge(pd.graph, e)

    vcls = cg.vclass_of()
    merged = {vcls[u], vcls[v]}
    new_v = []
    for touched in pd.origins:
        if touched & {u, v}:
            new_v.append(-1)
        else:
            (w,) = touched
            new_v.append(-1 if vcls[w] in merged else vcls[w])
    vclasses = _blocks_from_roots(h.num_vertices, lambda i: new_v[i])

    # boundary transport: old face -> new face
    target = {}
    inverse = {pd.flag_map[f]: f for f in g.flags if f[0] != e}
    for j, comp in enumerate(h.boundary):
        if comp.flags:
            olds = {g.face_of[inverse[f]] for f in comp.flags}
            if len(olds) != 1:
                raise AssertionError("contraction split a boundary component")
            target[olds.pop()] = j
    vertex_of_new_flag = {}
    for i, rot in enumerate(pd.graph.rotations):
        for he in rot:
            vertex_of_new_flag[he] = i
    for i, comp in enumerate(g.boundary):
        if i in target:
            continue
        if comp.flags:
            f = pd.flag_map[comp.flags[0]]
            target[i] = h.flagless_face(vertex_of_new_flag[f[:2]])
        else:
            (w,) = comp.vertices
            (nw,) = [k for k, p in enumerate(pd.origins) if p == {w}]
            target[i] = h.flagless_face(nw)
    if sorted(target.values()) != list(range(h.num_boundary)):
        raise AssertionError("boundary transport under contraction is not a bijection")
    bclasses = [{target[i] for i in block} for block in cg.bclasses]
    return ColouredRibbonGraph(h, vclasses, bclasses)


def dual_maps(g: RibbonGraph):
    """Geometric dual plus the map from dual boundary positions to old vertices."""
    pd = partial_dual_maps(g, g.edge_ids, face_order=True)
    d = pd.graph
    inverse = {new: old for old, new in pd.flag_map.items()}
    face_to_vertex = []
    for comp in d.boundary:
        if comp.flags:
            face_to_vertex.append(g.vertex_of(inverse[comp.flags[0]][:2]))
        else:
            (i,) = comp.vertices  # dual vertex i caps the flagless face i of g
            (w,) = g.boundary[i].vertices
            face_to_vertex.append(w)
    return d, face_to_vertex


def dual_coloured(cg: ColouredRibbonGraph) -> ColouredRibbonGraph:
    d, face_to_vertex = dual_maps(cg.graph)
    vcls = cg.vclass_of()
    bclasses = _blocks_from_roots(d.num_boundary, lambda j: vcls[face_to_vertex[j]])
    return ColouredRibbonGraph(d, cg.bclasses, bclasses)


def quotient_vertex_graph(cg: ColouredRibbonGraph) -> MultiGraph:
    cls = cg.vclass_of()
    g = cg.graph
    pairs = tuple((cls[a], cls[b]) for a, b in (g.endpoints(e) for e in g.edges))
    return MultiGraph(len(cg.vclasses), pairs, g.edges)


def quotient_boundary_graph(cg: ColouredRibbonGraph) -> MultiGraph:
    cls = cg.bclass_of()
    g = cg.graph
    face = g.face_of
    pairs = tuple((cls[face[(e, 1, 0)]], cls[face[(e, 1, 1)]]) for e in g.edges)
    return MultiGraph(len(cg.bclasses), pairs, g.edges)


def discard_isolated(cg: ColouredRibbonGraph) -> ColouredRibbonGraph:
    """Drop isolated vertices together with their boundary circles."""
    g = cg.graph
    keep_v = [v for v in range(g.num_vertices) if g.rotations[v]]
    vpos = {v: i for i, v in enumerate(keep_v)}
    h = RibbonGraph(tuple(g.rotations[v] for v in keep_v), g.twisted, g.edge_ids)
    nflagged = sum(1 for c in g.boundary if c.flags)
    vclasses = [{vpos[v] for v in b if v in vpos} for b in cg.vclasses]
    bclasses = [{f for f in b if f < nflagged} for b in cg.bclasses]
    return ColouredRibbonGraph(h, vclasses, bclasses)


def coloured_disjoint_union(a: ColouredRibbonGraph, b: ColouredRibbonGraph) -> ColouredRibbonGraph:
    g = disjoint_union(a.graph, b.graph)
    nv, shift = a.graph.num_vertices, _offset(a)
    vclasses = list(a.vclasses) + [{v + nv for v in blk} for blk in b.vclasses]
    bclasses = []
    for cg, es, vs in ((a, 0, 0), (b, shift, nv)):
        for blk in cg.bclasses:
            new = set()
            for i in blk:
                comp = cg.graph.boundary[i]
                if comp.flags:
                    e, end, s = comp.flags[0]
                    new.add(g.face_of[(e + es, end, s)])
                else:
                    (w,) = comp.vertices
                    new.add(g.flagless_face(w + vs))
            bclasses.append(new)
    return ColouredRibbonGraph(g, vclasses, bclasses)


def _offset(a: ColouredRibbonGraph) -> int:
    return max(a.graph.edge_ids, default=0)


def coloured_join(a: ColouredRibbonGraph, va: int, b: ColouredRibbonGraph, vb: int, arc_a: int = 0, arc_b: int = 0):
    """One-point join; the two joined vertices and the two opened faces merge classes."""
    g = join_at(a.graph, va, b.graph, vb, arc_a, arc_b)
    shift = _offset(a)
    nva = a.graph.num_vertices

    def new_vertex(w):  # vertex of b -> vertex of g
        if w == vb:
            return va
        return nva + w - (1 if w > vb else 0)

    uf = _UnionFind()
    for blk in a.vclasses:
        uf.union_all([("v", w) for w in blk])
    for blk in b.vclasses:
        uf.union_all([("v", new_vertex(w)) for w in blk])
    vclasses = _blocks_from_roots(g.num_vertices, lambda w: uf.find(("v", w)))

    uf = _UnionFind()
    for side, cg, es in (("a", a, 0), ("b", b, shift)):
        for blk in cg.bclasses:
            uf.union_all([(side, i) for i in blk])
        for i, comp in enumerate(cg.graph.boundary):
            if comp.flags:
                e, end, s = comp.flags[0]
                uf.union((side, i), ("new", g.face_of[(e + es, end, s)]))
            else:
                (w,) = comp.vertices
                nw = w if side == "a" else new_vertex(w)
                if g.rotations[nw]:
                    continue  # the isolated vertex was absorbed by the join
                uf.union((side, i), ("new", g.flagless_face(nw)))
    uf.union(("a", _opened_face(a.graph, va, arc_a)), ("b", _opened_face(b.graph, vb, arc_b)))
    if not g.rotations[va]:
        uf.union(("a", _opened_face(a.graph, va, arc_a)), ("new", g.flagless_face(va)))
    bclasses = _blocks_from_roots(g.num_boundary, lambda j: uf.find(("new", j)))
    return ColouredRibbonGraph(g, vclasses, bclasses)


def _opened_face(g: RibbonGraph, v: int, arc: int) -> int:
    f = corner_flag(g, v, arc)
    return g.flagless_face(v) if f is None else g.face_of[f]


# -- equivalence of coloured graphs ---------------------------------------------


def _component_flag_maps(g: RibbonGraph, h: RibbonGraph, start):
    """All flag bijections from ``start``'s component that respect edge ids."""
    for target in [(start[0], end, s) for end in (1, 2) for s in (0, 1)]:
        if start[0] not in h.edge_ids:
            return
        phi = {start: target}
        used = {target}
        stack = [start]
        ok = True
        while stack and ok:
            x = stack.pop()
            for op_g, op_h in ((g.long, h.long), (g.corner, h.corner), (RibbonGraph.swap, RibbonGraph.swap)):
                y, z = op_g(x), op_h(phi[x])
                if y in phi:
                    if phi[y] != z:
                        ok = False
                        break
                elif z in used or z[0] != y[0]:
                    ok = False
                    break
                else:
                    phi[y] = z
                    used.add(z)
                    stack.append(y)
        if ok:
            yield phi


def coloured_equivalent(a: ColouredRibbonGraph, b: ColouredRibbonGraph) -> bool:
    """Equivalence of edge-labelled coloured ribbon graphs (small inputs)."""
    import networkx as nx

    g, h = a.graph, b.graph
    if (g.edge_ids, g.num_vertices, g.num_boundary) != (h.edge_ids, h.num_vertices, h.num_boundary):
        return False
    starts = []
    covered = set()
    for f in g.flags:
        if f not in covered:
            maps = list(_component_flag_maps(g, h, f))
            if not maps:
                return False
            starts.append(maps)
            covered |= set(maps[0])

    def bipartite(cg, vmap, fmap):
        graph = nx.MultiGraph()
        vc, bc = cg.vclass_of(), cg.bclass_of()
        for k, blk in enumerate(cg.vclasses):
            graph.add_node(("V", k), label=("V", frozenset(vmap[w] for w in blk if w in vmap)))
        for k, blk in enumerate(cg.bclasses):
            graph.add_node(("B", k), label=("B", frozenset(fmap[i] for i in blk if i in fmap)))
        for w in cg.graph.isolated_vertices():
            graph.add_edge(("V", vc[w]), ("B", bc[cg.graph.flagless_face(w)]))
        return graph

    ident_v = {v: v for v in range(h.num_vertices) if h.rotations[v]}
    ident_f = {i: i for i, c in enumerate(h.boundary) if c.flags}
    target = bipartite(b, ident_v, ident_f)
    for choice in product(*starts):
        phi = {}
        for part in choice:
            phi.update(part)
        vmap = {g.vertex_of(x[:2]): h.vertex_of(y[:2]) for x, y in phi.items()}
        fmap = {g.face_of[x]: h.face_of[y] for x, y in phi.items()}
        source = bipartite(a, vmap, fmap)
        if nx.is_isomorphic(source, target, node_match=lambda p, q: p["label"] == q["label"]):
            return True
    return False
