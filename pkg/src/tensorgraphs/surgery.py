"""Connected sums, dipole removal and the separating gadgets."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graphs import ColoredGraph, OpenFeynmanGraph
from .perm import inverse

Graph = Union[ColoredGraph, OpenFeynmanGraph]


@dataclass(frozen=True)
class EdgeRef:
    """The edge of ``color`` leaving white vertex ``white`` (color 0: the propagator)."""

    color: int
    white: int


def _target(g: Graph, e: EdgeRef) -> int:
    if not 0 <= e.white < g.half_order:
        raise ValueError(f"white vertex {e.white} does not exist")
    if e.color == 0:
        if not isinstance(g, OpenFeynmanGraph):
            raise ValueError("closed rank-D graphs have no color-0 edges")
        b = g.prop0[e.white]
        if b is None:
            raise ValueError(f"white vertex {e.white} carries no internal color-0 edge")
        return b
    if not 1 <= e.color <= g.rank:
        raise ValueError(f"color {e.color} out of range 1..{g.rank}")
    return g.perms[e.color - 1][e.white]


def connected_sum(g1: Graph, e1: EdgeRef, g2: Graph, e2: EdgeRef) -> Graph:
    """Disjoint union with edges ``e1``, ``e2`` cut and cross-reconnected."""
    if e1.color != e2.color:
        raise ValueError(f"edge colors differ: {e1.color} vs {e2.color}")
    if g1.rank != g2.rank:
        raise ValueError("rank mismatch")
    if type(g1) is not type(g2):
        raise ValueError("both graphs must be closed or both open")
    b1, b2 = _target(g1, e1), _target(g2, e2)
    n1 = g1.half_order
    w1, w2 = e1.white, e2.white + n1
    perms = [list(p) + [b + n1 for b in q] for p, q in zip(g1.perms, g2.perms)]
    if isinstance(g1, OpenFeynmanGraph):
        prop0 = list(g1.prop0) + [None if b is None else b + n1 for b in g2.prop0]
        if e1.color == 0:
            prop0[w1], prop0[w2] = b2 + n1, b1
        else:
            c = e1.color - 1
            perms[c][w1], perms[c][w2] = b2 + n1, b1
        return OpenFeynmanGraph(tuple(map(tuple, perms)), tuple(prop0))
    c = e1.color - 1
    perms[c][w1], perms[c][w2] = b2 + n1, b1
    return ColoredGraph(tuple(map(tuple, perms)))


@dataclass(frozen=True)
class DipoleRemoval:
    """Result of deleting the two ends of an edge and regluing colorwise.

    ``gluing`` lists ``(color, white, black)`` in the old labels: the color
    edge from ``white`` now ends at ``black``.  ``white_map``/``black_map``
    send old indices to new ones (``None`` for the removed pair).
    """

    graph: ColoredGraph
    removed_colors: frozenset
    gluing: tuple[tuple[int, int, int], ...]
    white_map: tuple[Optional[int], ...]
    black_map: tuple[Optional[int], ...]


def remove_dipole(b: ColoredGraph, e: EdgeRef) -> DipoleRemoval:
    r = e.white
    t = _target(b, e)
    if e.color == 0:
        raise ValueError("remove_dipole acts on closed rank-D graphs")
    n = b.half_order
    I = frozenset(c for c in range(1, b.rank + 1) if b.perms[c - 1][r] == t)
    perms = [list(p) for p in b.perms]
    gluing = []
    for c in range(1, b.rank + 1):
        if c in I:
            continue
        p = b.perms[c - 1]
        w = inverse(p)[t]
        perms[c - 1][w] = p[r]
        gluing.append((c, w, p[r]))
    wmap = tuple(None if i == r else (i if i < r else i - 1) for i in range(n))
    bmap = tuple(None if j == t else (j if j < t else j - 1) for j in range(n))
    new = tuple(tuple(bmap[perms[c][i]] for i in range(n) if i != r) for c in range(b.rank))
    return DipoleRemoval(ColoredGraph(new), I, tuple(gluing), wmap, bmap)


def pretzel(D: int) -> OpenFeynmanGraph:
    """Closed separating gadget: bubbles ``V_1`` and ``V_D`` joined by color 0.

    Whites 0,1 (blacks 0,1) form ``V_1``; whites 2,3 form ``V_D``.  The
    propagators are 0-2, 2-0, 1-1 and 3-3; the last two are the edges
    ``k`` (at white 1) and ``l`` (at white 3) used for chaining.
    """
    if D < 3:
        raise ValueError(f"the separating gadget needs D >= 3, got {D}")
    perms = []
    for c in range(1, D + 1):
        p = [0, 1, 2, 3]
        if c == 1:
            p[0], p[1] = 1, 0
        if c == D:
            p[2], p[3] = 3, 2
        perms.append(tuple(p))
    return OpenFeynmanGraph(tuple(perms), (2, 1, 0, 3))


PRETZEL_K = EdgeRef(0, 1)
PRETZEL_L = EdgeRef(0, 3)


def separatrix(D: int) -> OpenFeynmanGraph:
    """The pretzel with edges ``k`` and ``l`` cut open into four legs."""
    P = pretzel(D)
    return OpenFeynmanGraph(P.perms, (2, None, 0, None))


def separated_sum(K: OpenFeynmanGraph, e: EdgeRef, G: OpenFeynmanGraph, f: EdgeRef) -> OpenFeynmanGraph:
    """``K #_{e,k} P #_{l,f} G`` along color-0 edges; the boundary is that of K and G side by side."""
    P = pretzel(K.rank)
    KP = connected_sum(K, e, P, PRETZEL_K)
    l = EdgeRef(0, PRETZEL_L.white + K.half_order)
    return connected_sum(KP, l, G, f)


def first_propagator(g: OpenFeynmanGraph) -> EdgeRef:
    for w, b in enumerate(g.prop0):
        if b is not None:
            return EdgeRef(0, w)
    raise ValueError("graph has no internal color-0 edge")


def necklace_vacuum(D: int) -> OpenFeynmanGraph:
    """One ``V_D`` bubble closed on itself by two crossed propagators (degree 1)."""
    perms = tuple((1, 0) if c == D else (0, 1) for c in range(1, D + 1))
    return OpenFeynmanGraph(perms, (1, 0))


def degree_bump(g: OpenFeynmanGraph, L: OpenFeynmanGraph) -> OpenFeynmanGraph:
    """``g # P # L``: same boundary as ``g``, larger degree when ``L`` is not a melon."""
    if not L.is_vacuum:
        raise ValueError("the bumping graph must be a vacuum graph")
    if L.rank != g.rank:
        raise ValueError("rank mismatch")
    return separated_sum(g, first_propagator(g), L, first_propagator(L))
