"""Plain-text format for (coloured) ribbon graphs.

Example::

    ribbon v1
    edges: 2
    twist: e2
    vertex: 1.1 2.1 1.2 2.2
    bclasses: {1}

Vertex lines list half-edges ``k.1`` / ``k.2`` in rotation order; an empty
``vertex:`` line is an isolated vertex.  ``vclasses`` refer to vertex
lines (1-based) and ``bclasses`` to canonical boundary numbers, which
:func:`describe_boundary` prints.  Missing partitions are discrete.
"""

from __future__ import annotations

import re

from .colouring import ColouredRibbonGraph
from .ribbon import RibbonError, RibbonGraph, relabel_edges, validate

__all__ = ["RibbonFormatError", "describe_boundary", "parse", "serialize"]

HEADER = "ribbon v1"
_HALF = re.compile(r"^(\d+)\.([12])$")
_TWIST = re.compile(r"^e?(\d+)$")
_BLOCK = re.compile(r"\{([^{}]*)\}")


class RibbonFormatError(ValueError):
    """Malformed ribbon file."""


def _blocks(text: str, lineno: int) -> list:
    rest = _BLOCK.sub("", text).strip()
    if rest:
        raise RibbonFormatError(f"line {lineno}: malformed class list near {rest!r}")
    out = []
    for body in _BLOCK.findall(text):
        items = [t for t in re.split(r"[,\s]+", body.strip()) if t]
        try:
            out.append({int(t) for t in items})
        except ValueError:
            raise RibbonFormatError(f"line {lineno}: class members must be integers") from None
    return out


def parse(text: str) -> ColouredRibbonGraph:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines or lines[0][1] != HEADER:
        raise RibbonFormatError(f"first line must be {HEADER!r}")
    m = None
    twisted: set = set()
    rotations = []
    vtext = btext = None
    for lineno, line in lines[1:]:
        key, sep, value = line.partition(":")
        if not sep:
            raise RibbonFormatError(f"line {lineno}: expected 'key: value'")
        key, value = key.strip(), value.strip()
        if key == "edges":
            if m is not None:
                raise RibbonFormatError(f"line {lineno}: repeated edges line")
            if not value.isdigit():
                raise RibbonFormatError(f"line {lineno}: edge count must be a nonnegative integer")
            m = int(value)
        elif key == "twist":
            for tok in value.split():
                hit = _TWIST.match(tok)
                if not hit:
                    raise RibbonFormatError(f"line {lineno}: malformed twist token {tok!r}")
                twisted.add(int(hit.group(1)))
        elif key == "vertex":
            rot = []
            for tok in value.split():
                hit = _HALF.match(tok)
                if not hit:
                    raise RibbonFormatError(f"line {lineno}: malformed half-edge token {tok!r}")
                rot.append((int(hit.group(1)), int(hit.group(2))))
            rotations.append(tuple(rot))
        elif key == "vclasses":
            vtext = (lineno, value)
        elif key == "bclasses":
            btext = (lineno, value)
        else:
            raise RibbonFormatError(f"line {lineno}: unknown key {key!r}")
    if m is None:
        raise RibbonFormatError("missing 'edges:' line")
    for rot in rotations:
        for e, _ in rot:
            if not 1 <= e <= m:
                raise RibbonFormatError(f"half-edge {e} outside 1..{m}")
    for e in twisted:
        if not 1 <= e <= m:
            raise RibbonFormatError(f"twist entry for nonexistent edge {e}")
    g = RibbonGraph(tuple(rotations), frozenset(twisted), tuple(range(1, m + 1)))
    problems = validate(g)
    if problems:
        raise RibbonFormatError(problems[0])
    vclasses = bclasses = None
    if vtext:
        blocks = _blocks(vtext[1], vtext[0])
        for b in blocks:
            for i in b:
                if not 1 <= i <= g.num_vertices:
                    raise RibbonFormatError(
                        f"line {vtext[0]}: vertex {i} out of range (graph has {g.num_vertices} vertices)"
                    )
        vclasses = [{i - 1 for i in b} for b in blocks]
    if btext:
        blocks = _blocks(btext[1], btext[0])
        for b in blocks:
            for i in b:
                if not 1 <= i <= g.num_boundary:
                    raise RibbonFormatError(
                        f"line {btext[0]}: boundary index {i} exceeds b(g) = {g.num_boundary}"
                    )
        bclasses = [{i - 1 for i in b} for b in blocks]
    try:
        return ColouredRibbonGraph(g, vclasses, bclasses)
    except RibbonError as exc:
        raise RibbonFormatError(str(exc)) from None


def _contiguous(g: RibbonGraph) -> RibbonGraph:
    if g.edge_ids == tuple(range(1, g.num_edges + 1)):
        return g
    return relabel_edges(g, {e: k for k, e in enumerate(g.edge_ids, 1)})


def _fmt_blocks(blocks) -> str:
    return " ".join("{" + ",".join(str(i + 1) for i in sorted(b)) + "}" for b in blocks)


def serialize(cg) -> str:
    """Canonical text; edges are renumbered ``1..m`` in their existing order."""
    if isinstance(cg, RibbonGraph):
        cg = ColouredRibbonGraph(cg)
    g = _contiguous(cg.graph)
    out = [HEADER, f"edges: {g.num_edges}"]
    if g.twisted:
        out.append("twist: " + " ".join(f"e{e}" for e in sorted(g.twisted)))
    for rot in g.rotations:
        out.append(("vertex: " + " ".join(f"{e}.{k}" for e, k in rot)).rstrip())
    if not cg.is_vertex_discrete():
        out.append("vclasses: " + _fmt_blocks(cg.vclasses))
    if not cg.is_boundary_discrete():
        out.append("bclasses: " + _fmt_blocks(cg.bclasses))
    return "\n".join(out) + "\n"


def describe_boundary(g: RibbonGraph) -> list:
    """One line per boundary component, e.g. ``boundary 1: 1.1L 1.2L 1.2R 1.1R``."""
    lines = []
    for comp in g.boundary:
        if comp.flags:
            walk = " ".join(f"{e}.{k}{'LR'[s]}" for e, k, s in comp.flags)
        else:
            (v,) = comp.vertices
            walk = f"(circle around isolated vertex {v + 1})"
        lines.append(f"boundary {comp.index}: {walk}")
    return lines
