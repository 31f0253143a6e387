"""Seeded random coloured ribbon graphs and exhaustive small corpora."""

from __future__ import annotations

import random
from itertools import product

from .colouring import ColouredRibbonGraph
from .ribbon import RibbonGraph, unlabelled_form

__all__ = [
    "enumerate_coloured",
    "enumerate_ribbon_graphs",
    "random_coloured_ribbon_graph",
    "random_corpus",
    "set_partitions",
]


def _random_partition(rng: random.Random, n: int):
    """Discrete half the time, otherwise a random coarsening."""
    if n <= 1 or rng.random() < 0.5:
        return None
    k = rng.randint(1, n - 1)
    labels = [rng.randrange(k) for _ in range(n)]
    return [{i for i in range(n) if labels[i] == c} for c in set(labels)]


def random_coloured_ribbon_graph(seed, v_max: int = 3, e_max: int = 4, *, connected: bool = False) -> ColouredRibbonGraph:
    """Deterministic for ``seed``.

    Each half-edge goes to a uniformly chosen vertex and rotation slot and
    each edge is twisted with probability 1/2.  With ``connected`` the
    first ``n - 1`` edges form a random spanning tree.
    """
    if v_max < 0 or e_max < 0:
        raise ValueError("bounds must be nonnegative")
    rng = random.Random(seed)
    n = rng.randint(1, v_max) if v_max else 0
    if not n:
        return ColouredRibbonGraph(RibbonGraph((), frozenset(), ()))
    lo = n - 1 if connected else 0
    m = rng.randint(lo, max(lo, e_max))
    rotations = [[] for _ in range(n)]

    def place(v, half):
        rot = rotations[v]
        rot.insert(rng.randint(0, len(rot)), half)

    for e in range(1, m + 1):
        if connected and e < n:
            place(rng.randrange(e), (e, 1))
            place(e, (e, 2))
        else:
            place(rng.randrange(n), (e, 1))
            place(rng.randrange(n), (e, 2))
    twisted = frozenset(e for e in range(1, m + 1) if rng.random() < 0.5)
    g = RibbonGraph(tuple(map(tuple, rotations)), twisted, tuple(range(1, m + 1)))
    return ColouredRibbonGraph(g, _random_partition(rng, g.num_vertices), _random_partition(rng, g.num_boundary))


def random_corpus(seed: int, count: int, v_max: int = 3, e_max: int = 6, *, connected: bool = False) -> list:
    """``count`` graphs drawn from one master seed."""
    rng = random.Random(seed)
    return [
        random_coloured_ribbon_graph(rng.getrandbits(64), v_max, e_max, connected=connected)
        for _ in range(count)
    ]


def set_partitions(n: int):
    """All set partitions of ``range(n)`` as lists of sets."""
    if n == 0:
        yield []
        return
    for rest in set_partitions(n - 1):
        for i in range(len(rest)):
            yield [b | {n - 1} if j == i else b for j, b in enumerate(rest)]
        yield rest + [{n - 1}]


def _rotation_systems(n: int, m: int):
    # Insert half-edges one at a time; slot 0 and slot len coincide cyclically.
    halves = [(e, k) for e in range(1, m + 1) for k in (1, 2)]

    def go(i, rots):
        if i == len(halves):
            yield tuple(map(tuple, rots))
            return
        for v in range(n):
            slots = range(1, len(rots[v]) + 1) if rots[v] else (0,)
            for s in slots:
                rots[v].insert(s, halves[i])
                yield from go(i + 1, rots)
                del rots[v][s]

    yield from go(0, [[] for _ in range(n)])


def enumerate_ribbon_graphs(max_vertices: int, max_edges: int) -> list:
    """Ribbon graphs up to equivalence and edge relabelling, including the empty one."""
    seen = {}
    for n in range(max_vertices + 1):
        for m in range(max_edges + 1 if n else 1):
            for rots in _rotation_systems(n, m):
                for bits in product((0, 1), repeat=m):
                    twisted = frozenset(e for e, t in zip(range(1, m + 1), bits) if t)
                    g = RibbonGraph(rots, twisted, tuple(range(1, m + 1)))
                    seen.setdefault(unlabelled_form(g), g)
    return list(seen.values())


def enumerate_coloured(max_vertices: int, max_edges: int):
    """Every graph of :func:`enumerate_ribbon_graphs` with every pair of partitions."""
    for g in enumerate_ribbon_graphs(max_vertices, max_edges):
        for vp in set_partitions(g.num_vertices):
            for bp in set_partitions(g.num_boundary):
                yield ColouredRibbonGraph(g, vp, bp)
