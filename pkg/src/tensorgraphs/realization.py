"""Feynman graphs of the quartic melonic model with a prescribed boundary.

Every boundary white vertex ``d`` is replaced by a white gadget and every
boundary black vertex ``x`` by its mirror image.  A white gadget is the chain
``V_1, ..., V_{D-1}`` in which white 0 of each bubble is contracted with black
0 of the next one.  White 0 of the last bubble (the marked leg ``a``) then
reaches a different open black port ``c_k`` along each color ``k``: the walk
of color ``k`` leaves the chain at the bubble ``V_k``, or at the first bubble
when ``k = D``.  The other open whites are the ports ``q_1..q_{D-1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .boundary import boundary
from .graphs import (ColoredGraph, GraphLike, InteractionModel, OpenFeynmanGraph,
                     as_graph, connected_components, is_feynman_graph, quartic_bubble)
from .perm import inverse
from .surgery import EdgeRef, pretzel, separated_sum


@dataclass(frozen=True)
class Raceme:
    """A gadget with its ports.

    For a white gadget ``marked`` is the white leg ``a``, ``singles[k-1]`` the
    black port ``c_k`` and ``pairs[i-1]`` the white port ``q_i``.  For a black
    gadget the colors of the vertices are swapped: ``marked`` is the black leg
    ``r``, ``singles`` the white ports ``p_k`` and ``pairs`` the black ports ``b_i``.
    """

    graph: OpenFeynmanGraph
    marked: int
    singles: tuple[int, ...]
    pairs: tuple[int, ...]


def white_gadget(D: int) -> Raceme:
    if D < 3:
        raise ValueError(f"realization needs D >= 3, got {D}")
    perms = [[] for _ in range(D)]
    for j, k in enumerate(range(1, D)):
        bub = quartic_bubble(D, k)
        for c in range(D):
            perms[c].extend(b + 2 * j for b in bub.perms[c])
    pairs = [(2 * j, 2 * (j + 1)) for j in range(D - 2)]
    g = OpenFeynmanGraph.from_pairs(perms, pairs)
    a = 2 * (D - 2)
    B = boundary(g)
    k_a = B.white_sites.index(a)
    singles = tuple(B.black_sites[B.graph.perms[c][k_a]] for c in range(D))
    if len(set(singles)) != D:
        raise AssertionError("white gadget ports are not distinct")
    q = tuple(w for w in B.white_sites if w != a)
    return Raceme(g, a, singles, q)


def mirror(g: OpenFeynmanGraph) -> OpenFeynmanGraph:
    """Swap the vertex colors (white becomes black)."""
    perms = tuple(inverse(p) for p in g.perms)
    prop0: list[Optional[int]] = [None] * g.half_order
    for w, b in g.pairs():
        prop0[b] = w
    return OpenFeynmanGraph(perms, tuple(prop0))


def black_gadget(D: int) -> Raceme:
    w = white_gadget(D)
    return Raceme(mirror(w.graph), w.marked, w.singles, w.pairs)


@dataclass(frozen=True)
class Realization:
    graph: OpenFeynmanGraph
    white_legs: tuple[int, ...]
    black_legs: tuple[int, ...]
    # color-0 edges usable for chaining: (c_1, p_1) and (q_1, b_1) at white 0
    chain_edges: tuple[EdgeRef, EdgeRef]


def _realize_connected(b: ColoredGraph) -> Realization:
    D, p = b.rank, b.half_order
    wg, bg = white_gadget(D), black_gadget(D)
    size = wg.graph.half_order
    perms = [[] for _ in range(D)]
    prop0: list[Optional[int]] = []
    for d in range(p):
        off = d * size
        for c in range(D):
            perms[c].extend(x + off for x in wg.graph.perms[c])
        prop0.extend(None if x is None else x + off for x in wg.graph.prop0)
    base = p * size
    for x in range(p):
        off = base + x * size
        for c in range(D):
            perms[c].extend(y + off for y in bg.graph.perms[c])
        prop0.extend(None if y is None else y + off for y in bg.graph.prop0)

    def wsite(d, local):
        return d * size + local

    def bsite(x, local):
        return base + x * size + local

    edge_c1 = edge_q1 = None
    for i in range(1, D + 1):
        for d in range(p):
            x = b.perms[i - 1][d]
            # c_i of d meets p_i of x
            pw = bsite(x, bg.singles[i - 1])
            prop0[pw] = wsite(d, wg.singles[i - 1])
            if i < D:
                # q_i of d meets b_i of x
                qw = wsite(d, wg.pairs[i - 1])
                prop0[qw] = bsite(x, bg.pairs[i - 1])
            if i == 1 and d == 0:
                edge_c1 = EdgeRef(0, pw)
                edge_q1 = EdgeRef(0, qw)
    g = OpenFeynmanGraph(tuple(map(tuple, perms)), tuple(prop0))
    whites = tuple(wsite(d, wg.marked) for d in range(p))
    blacks = tuple(bsite(x, bg.marked) for x in range(p))
    return Realization(g, whites, blacks, (edge_c1, edge_q1))


def realize_connected(b: ColoredGraph, D: int | None = None) -> OpenFeynmanGraph:
    if D is not None and D != b.rank:
        raise ValueError(f"graph has rank {b.rank}, not {D}")
    if b.rank < 3:
        raise ValueError(f"realization needs D >= 3, got {b.rank}")
    if b.half_order == 0:
        raise ValueError("empty boundary: use any vacuum graph")
    if len(connected_components(b)) != 1:
        raise ValueError("graph is not connected")
    return _realize_connected(b).graph


def realize(b: GraphLike, D: int | None = None) -> OpenFeynmanGraph:
    """A connected Feynman graph of the quartic melonic model with boundary ``b``.

    Components are realized one by one and chained by separating gadgets, so
    the boundary is ``b`` with its components listed one after another.
    """
    b = as_graph(b)
    if D is not None and D != b.rank:
        raise ValueError(f"graph has rank {b.rank}, not {D}")
    if b.rank < 3:
        raise ValueError(f"realization needs D >= 3, got {b.rank}")
    comps = connected_components(b)
    if not comps:
        return pretzel(b.rank)
    parts = [_realize_connected(c.graph) for c in comps]
    total = parts[0].graph
    prev_edge = parts[0].chain_edges[0]
    for part in parts[1:]:
        offset = total.half_order + 4
        total = separated_sum(total, prev_edge, part.graph, part.chain_edges[1])
        prev_edge = EdgeRef(0, part.chain_edges[0].white + offset)
    return total


@dataclass(frozen=True)
class PipelineReport:
    legs: int
    components: int
    vertices: int
    bubbles: int
    propagators: int
    feynman: bool
    abelianizations: tuple


def crystallization_pipeline(b: GraphLike) -> PipelineReport:
    from .pi1 import abelianization, gagliardi_presentation, is_crystallization
    b = as_graph(b)
    g = realize(b)
    comps = connected_components(b)
    abel = []
    for c in comps:
        if c.graph.rank >= 4 and is_crystallization(c.graph):
            abel.append(abelianization(gagliardi_presentation(c.graph, 1, 2)))
        else:
            abel.append(None)
    model = InteractionModel.phi4(b.rank)
    return PipelineReport(
        legs=g.leg_count,
        components=len(connected_components(boundary(g).graph)),
        vertices=2 * g.half_order,
        bubbles=len(connected_components(g.residue())),
        propagators=len(g.pairs()),
        feynman=is_feynman_graph(g, model),
        abelianizations=tuple(abel),
    )
