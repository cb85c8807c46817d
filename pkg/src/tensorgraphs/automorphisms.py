"""Colored automorphism groups.

An automorphism is stored by its action on white vertices; it determines the
black map (``sigma_c tau sigma_c^-1``, the same for every color) and the edges.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import factorial
from typing import Optional, Sequence

from .graphs import (ColoredGraph, GraphLike, as_graph, canonical_form,
                     connected_components, isomorphism)
from .perm import Perm, compose, identity, inverse

ELEMENT_LIST_LIMIT = 8


@dataclass(frozen=True)
class Lift:
    white: Perm
    black: Perm

    def edge_map(self, g: ColoredGraph) -> dict[tuple[int, int], tuple[int, int]]:
        """``(color, white)`` of an edge to the ``(color, white)`` of its image."""
        return {(c, i): (c, self.white[i]) for c in range(1, g.rank + 1) for i in range(g.half_order)}


def lift(g: GraphLike, tau: Sequence[int]) -> Optional[Lift]:
    g = as_graph(g)
    tau = tuple(tau)
    if sorted(tau) != list(range(g.half_order)):
        return None
    if g.rank == 0:
        return Lift(tau, tau)
    black = None
    for p in g.perms:
        b = compose(p, compose(tau, inverse(p)))
        if black is None:
            black = b
        elif b != black:
            return None
    return Lift(tau, black)


@dataclass(frozen=True)
class AutGroup:
    generators: tuple[Perm, ...]
    order: int
    element_list: Optional[tuple[Perm, ...]]


def _walk_extension(taus: Sequence[Perm], n: int, image0: int) -> Optional[Perm]:
    """The unique map commuting with ``taus`` and sending 0 to ``image0``."""
    tau = [-1] * n
    tau[0] = image0
    queue = [0]
    idx = 0
    while idx < len(queue):
        v = queue[idx]
        idx += 1
        for t in taus:
            w, x = t[v], t[tau[v]]
            if tau[w] < 0:
                tau[w] = x
                queue.append(w)
            elif tau[w] != x:
                return None
    if min(tau) < 0 or len(set(tau)) != n:
        return None
    return tuple(tau)


def _connected_elements(g: ColoredGraph) -> list[Perm]:
    n = g.half_order
    if n == 0:
        return [()]
    s1inv = inverse(g.perms[0])
    taus = [compose(s1inv, p) for p in g.perms[1:]]
    out = []
    for j in range(n):
        tau = _walk_extension(taus, n, j)
        if tau is not None and lift(g, tau) is not None:
            out.append(tau)
    return out


def _closure(gens: Sequence[Perm], n: int) -> tuple[Perm, ...]:
    e = identity(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = compose(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(seen))


def _small_generators(elements: Sequence[Perm], n: int) -> tuple[Perm, ...]:
    gens: list[Perm] = []
    span = {identity(n)}
    for x in elements:
        if x not in span:
            gens.append(x)
            span = set(_closure(gens, n))
    return tuple(gens)


def aut_group(g: GraphLike) -> AutGroup:
    g = as_graph(g)
    n = g.half_order
    comps = connected_components(g)
    if len(comps) <= 1:
        elems = tuple(sorted(_connected_elements(g)))
        return AutGroup(_small_generators(elems, n), len(elems), elems)
    types: dict[bytes, list] = defaultdict(list)
    for comp in comps:
        types[canonical_form(comp.graph).encoding].append(comp)
    gens: list[Perm] = []
    order = 1
    for members in types.values():
        first = members[0]
        local = aut_group(first.graph)
        order *= factorial(len(members)) * local.order ** len(members)
        for h in local.generators:
            tau = list(range(n))
            for i, w in enumerate(first.whites):
                tau[w] = first.whites[h[i]]
            gens.append(tuple(tau))
        for a, b in zip(members, members[1:]):
            wmap, _ = isomorphism(a.graph, b.graph)
            tau = list(range(n))
            for i, w in enumerate(a.whites):
                tau[w] = b.whites[wmap[i]]
                tau[b.whites[wmap[i]]] = w
            gens.append(tuple(tau))
    elems = _closure(gens, n) if n <= ELEMENT_LIST_LIMIT else None
    if elems is not None and len(elems) != order:
        raise AssertionError("wreath-product order disagrees with the generated group")
    return AutGroup(tuple(gens), order, elems)


def symmetry_factor(b: GraphLike) -> int:
    """``prod_i m_i! |Aut(B_i)|^{m_i}`` over the distinct component types."""
    g = as_graph(b)
    counts: dict[bytes, list] = defaultdict(list)
    for comp in connected_components(g):
        counts[canonical_form(comp.graph).encoding].append(comp.graph)
    out = 1
    for members in counts.values():
        out *= factorial(len(members)) * len(_connected_elements(members[0])) ** len(members)
    return out


def cycle_symmetry_formula(cycle_type: Sequence[int]) -> int:
    """``prod_j n_j! j^{n_j}`` for a multiset of cycle lengths."""
    counts: dict[int, int] = defaultdict(int)
    for j in cycle_type:
        counts[j] += 1
    out = 1
    for j, m in counts.items():
        out *= factorial(m) * j ** m
    return out


def matrix_cycle_check(cycle_type: Sequence[int]) -> int:
    """Symmetry factor of the 2-colored graph made of one ``2j``-cycle per entry."""
    from .fixtures import cycle_type_graph
    return symmetry_factor(cycle_type_graph(list(cycle_type)))
