"""Closed and open edge-colored bipartite graphs.

A closed graph of rank ``D`` on ``2p`` vertices is stored as ``D`` permutations
of ``0..p-1``: the edge of color ``c`` (colors are labeled ``1..D``) leaving
white vertex ``i`` ends at black vertex ``perms[c-1][i]``.  Open graphs add a
partial injective map ``prop0`` from white to black vertices (the color-0
propagators); vertices it leaves unmatched carry the external legs.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .perm import Perm, compose, identity, inverse, is_permutation, orbits


def _as_perms(perms) -> tuple[Perm, ...]:
    return tuple(tuple(int(x) for x in p) for p in perms)


@dataclass(frozen=True)
class ColoredGraph:
    """Closed ``D``-colored graph, colors ``1..D`` stored 0-indexed in ``perms``."""

    perms: tuple[Perm, ...]

    def __post_init__(self):
        object.__setattr__(self, "perms", _as_perms(self.perms))

    @classmethod
    def empty(cls, rank: int) -> "ColoredGraph":
        return cls(tuple(() for _ in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.perms)

    @property
    def half_order(self) -> int:
        return len(self.perms[0]) if self.perms else 0

    def sigma(self, color: int) -> Perm:
        return self.perms[color - 1]

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as ``(color, white, black)`` triples."""
        return [(c + 1, i, b) for c, p in enumerate(self.perms) for i, b in enumerate(p)]

    def __repr__(self) -> str:
        body = ", ".join(str(list(p)) for p in self.perms)
        return f"ColoredGraph(D={self.rank}, p={self.half_order}: {body})"


@dataclass(frozen=True)
class OpenFeynmanGraph:
    """Open graph: ``D`` color permutations plus a partial color-0 matching.

    ``prop0[w]`` is the black vertex joined to white ``w`` by an internal
    color-0 propagator, or ``None`` when ``w`` carries an external leg.
    """

    perms: tuple[Perm, ...]
    prop0: tuple[Optional[int], ...]
    amputated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "perms", _as_perms(self.perms))
        object.__setattr__(self, "prop0", tuple(None if b is None else int(b) for b in self.prop0))

    @classmethod
    def from_pairs(cls, perms, pairs: Iterable[tuple[int, int]]) -> "OpenFeynmanGraph":
        perms = _as_perms(perms)
        n = len(perms[0]) if perms else 0
        prop0: list[Optional[int]] = [None] * n
        for w, b in pairs:
            prop0[w] = b
        return cls(perms, tuple(prop0))

    @property
    def rank(self) -> int:
        return len(self.perms)

    @property
    def half_order(self) -> int:
        return len(self.perms[0]) if self.perms else 0

    def sigma(self, color: int) -> Perm:
        return self.perms[color - 1]

    def pairs(self) -> list[tuple[int, int]]:
        return [(w, b) for w, b in enumerate(self.prop0) if b is not None]

    def unmatched_whites(self) -> list[int]:
        return [w for w, b in enumerate(self.prop0) if b is None]

    def unmatched_blacks(self) -> list[int]:
        used = {b for b in self.prop0 if b is not None}
        return [b for b in range(self.half_order) if b not in used]

    @property
    def leg_count(self) -> int:
        if self.amputated:
            return 0
        return 2 * len(self.unmatched_whites())

    @property
    def is_vacuum(self) -> bool:
        return all(b is not None for b in self.prop0)

    def residue(self) -> ColoredGraph:
        """The graph restricted to colors ``1..D``."""
        return ColoredGraph(self.perms)

    def to_colored_graph(self) -> ColoredGraph:
        """A vacuum graph as a closed ``(D+1)``-colored graph; color 0 becomes color 1."""
        if not self.is_vacuum:
            raise ValueError("only vacuum graphs (full color-0 matching) are closed")
        return ColoredGraph((tuple(self.prop0),) + self.perms)


@dataclass(frozen=True)
class DisconnectedGraph:
    """A multiset of closed graphs of one rank, kept in canonical order."""

    rank: int
    components: tuple[ColoredGraph, ...] = ()

    def __post_init__(self):
        comps = tuple(canonical_form(c).graph for c in self.components)
        for c in comps:
            if c.rank != self.rank:
                raise ValueError("components must share the rank")
        comps = tuple(sorted(comps, key=lambda c: canonical_form(c).key))
        object.__setattr__(self, "components", comps)

    @classmethod
    def from_graph(cls, g: ColoredGraph) -> "DisconnectedGraph":
        return cls(g.rank, tuple(comp.graph for comp in connected_components(g)))

    def union(self) -> ColoredGraph:
        return disjoint_union(self.components, rank=self.rank)

    @property
    def half_order(self) -> int:
        return sum(c.half_order for c in self.components)

    def multiplicities(self) -> list[tuple[ColoredGraph, int]]:
        counts = Counter(canonical_form(c).encoding for c in self.components)
        seen = {}
        for c in self.components:
            seen.setdefault(canonical_form(c).encoding, c)
        return [(seen[e], counts[e]) for e in seen]


GraphLike = Union[ColoredGraph, DisconnectedGraph]


def as_graph(g: GraphLike) -> ColoredGraph:
    if isinstance(g, DisconnectedGraph):
        return g.union()
    return g


@dataclass(frozen=True)
class ValidityReport:
    problems: tuple[str, ...] = ()
    legs: int = 0

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


def validate(g) -> ValidityReport:
    problems = []
    if isinstance(g, DisconnectedGraph):
        g = g.union()
    rank = len(g.perms)
    if rank < 2:
        problems.append(f"rank {rank} out of range (need at least 2 colors)")
    n = len(g.perms[0]) if g.perms else 0
    for c, p in enumerate(g.perms, start=1):
        if not is_permutation(p, n):
            problems.append(f"color {c} not a permutation of 0..{n - 1}")
    legs = 0
    if isinstance(g, OpenFeynmanGraph):
        if len(g.prop0) != n:
            problems.append(f"prop0 has length {len(g.prop0)}, expected {n}")
        targets = [b for b in g.prop0 if b is not None]
        if any(not (0 <= b < n) for b in targets):
            problems.append("prop0 target out of range")
        if len(set(targets)) != len(targets):
            problems.append("prop0 not injective")
        legs = 0 if g.amputated else 2 * sum(1 for b in g.prop0 if b is None)
    return ValidityReport(tuple(problems), legs)


def disjoint_union(graphs: Sequence[ColoredGraph], rank: int | None = None) -> ColoredGraph:
    if rank is None:
        if not graphs:
            raise ValueError("rank needed for an empty union")
        rank = graphs[0].rank
    perms: list[list[int]] = [[] for _ in range(rank)]
    offset = 0
    for g in graphs:
        if g.rank != rank:
            raise ValueError("rank mismatch in disjoint union")
        for c in range(rank):
            perms[c].extend(b + offset for b in g.perms[c])
        offset += g.half_order
    return ColoredGraph(tuple(tuple(p) for p in perms))


def relabel(g: ColoredGraph, alpha: Sequence[int], beta: Sequence[int]) -> ColoredGraph:
    """Apply white relabeling ``alpha`` and black relabeling ``beta`` (old -> new)."""
    ainv = inverse(alpha)
    return ColoredGraph(tuple(compose(beta, compose(p, ainv)) for p in g.perms))


@dataclass(frozen=True)
class Component:
    """A connected piece with maps from its local indices to the parent's."""

    graph: Union[ColoredGraph, OpenFeynmanGraph]
    whites: tuple[int, ...]
    blacks: tuple[int, ...]


def _restrict(perms: Sequence[Perm], whites: Sequence[int], blacks: Sequence[int]) -> tuple[Perm, ...]:
    bpos = {b: k for k, b in enumerate(blacks)}
    return tuple(tuple(bpos[p[w]] for w in whites) for p in perms)


def connected_components(g, colors: Sequence[int] | None = None) -> list[Component]:
    """Connected components, or the bubbles spanned by ``colors`` when given.

    For open graphs the color-0 propagators also join vertices unless a
    color subset is given (then 0 may appear in it to include them).
    """
    if isinstance(g, DisconnectedGraph):
        g = g.union()
    n = g.half_order
    is_open = isinstance(g, OpenFeynmanGraph)
    if colors is None:
        colors = list(range(1, g.rank + 1))
        use0 = is_open
    else:
        colors = sorted(set(colors))
        use0 = 0 in colors
        colors = [c for c in colors if c != 0]
    if not is_open and not use0 and colors:
        first = g.perms[colors[0] - 1]
        finv = inverse(first)
        gens = [compose(finv, g.perms[c - 1]) for c in colors[1:]]
        out = []
        for orb in orbits(n, gens):
            blacks = tuple(sorted(first[w] for w in orb))
            sub = _restrict([g.perms[c - 1] for c in colors], orb, blacks)
            out.append(Component(ColoredGraph(sub), tuple(orb), blacks))
        return out
    # general union-find on 2n nodes (white w -> w, black b -> n + b)
    parent = list(range(2 * n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def join(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for c in colors:
        for w, b in enumerate(g.perms[c - 1]):
            join(w, n + b)
    if use0:
        for w, b in enumerate(g.prop0):
            if b is not None:
                join(w, n + b)
    groups: dict[int, tuple[list[int], list[int]]] = {}
    for x in range(2 * n):
        r = find(x)
        ws, bs = groups.setdefault(r, ([], []))
        if x < n:
            ws.append(x)
        else:
            bs.append(x - n)
    out = []
    for ws, bs in sorted(groups.values(), key=lambda t: min(t[0] + [2 * n + b for b in t[1]])):
        bpos = {b: k for k, b in enumerate(bs)}
        sub_perms = tuple(tuple(bpos[g.perms[c - 1][w]] for w in ws) for c in colors)
        if is_open and use0:
            sub_prop = tuple(None if g.prop0[w] is None else bpos[g.prop0[w]] for w in ws)
            out.append(Component(OpenFeynmanGraph(sub_perms, sub_prop), tuple(ws), tuple(bs)))
        elif is_open:
            out.append(Component(OpenFeynmanGraph(sub_perms, (None,) * len(ws)), tuple(ws), tuple(bs)))
        else:
            out.append(Component(ColoredGraph(sub_perms), tuple(ws), tuple(bs)))
    return out


def is_connected(g) -> bool:
    return len(connected_components(g)) <= 1


# canonical forms -----------------------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical encoding of a closed graph.

    ``white_map``/``black_map`` send old vertex indices to the indices of
    ``graph``, the canonical representative (with color 1 the identity).
    """

    encoding: bytes
    key: tuple
    graph: ColoredGraph
    white_map: Perm
    black_map: Perm


def _connected_key(taus: Sequence[Perm], verts: Sequence[int]) -> tuple[tuple, list[int]]:
    """Least traversal encoding of one component given the gauge-fixed maps."""
    best = None
    best_order = None
    m = len(verts)
    for s in verts:
        label = {s: 0}
        order = [s]
        idx = 0
        while idx < len(order):
            v = order[idx]
            idx += 1
            for t in taus:
                w = t[v]
                if w not in label:
                    label[w] = len(order)
                    order.append(w)
        if len(order) != m:
            raise ValueError("component is not connected")
        cand = tuple(tuple(label[t[order[i]]] for i in range(m)) for t in taus)
        if best is None or cand < best:
            best = cand
            best_order = order
    return best, best_order


def _encode(rank: int, keys: Sequence[tuple]) -> bytes:
    parts = []
    for key in keys:
        parts.append("/".join(".".join(map(str, t)) for t in key[1]) if key[1] else str(key[0]))
    return (f"{rank}:" + "|".join(parts)).encode()


_CANON_CACHE: dict[tuple, CanonicalForm] = {}


def canonical_form(g: GraphLike) -> CanonicalForm:
    g = as_graph(g)
    hit = _CANON_CACHE.get(g.perms)
    if hit is not None:
        return hit
    D, n = g.rank, g.half_order
    s1 = g.perms[0] if D else identity(n)
    s1inv = inverse(s1)
    taus = [compose(s1inv, p) for p in g.perms[1:]]
    comps = []
    for orb in orbits(n, taus):
        code, order = _connected_key(taus, orb)
        comps.append(((len(orb), code), order))
    comps.sort(key=lambda t: t[0])
    white_map = [0] * n
    offset = 0
    for _, order in comps:
        for k, w in enumerate(order):
            white_map[w] = offset + k
        offset += len(order)
    white_map_t = tuple(white_map)
    black_map = compose(white_map_t, s1inv)
    canon = relabel(g, white_map_t, black_map)
    keys = tuple(k for k, _ in comps)
    key = (D, keys)
    enc = _encode(D, keys)
    out = CanonicalForm(enc, key, canon, white_map_t, black_map)
    if len(_CANON_CACHE) > 200000:
        _CANON_CACHE.clear()
    _CANON_CACHE[g.perms] = out
    return out


def is_isomorphic(g: GraphLike, h: GraphLike) -> bool:
    return canonical_form(g).encoding == canonical_form(h).encoding


def isomorphism(g: GraphLike, h: GraphLike) -> tuple[Perm, Perm] | None:
    """White and black maps sending ``g`` onto ``h``, or ``None``."""
    cg, ch = canonical_form(g), canonical_form(h)
    if cg.encoding != ch.encoding:
        return None
    return compose(inverse(ch.white_map), cg.white_map), compose(inverse(ch.black_map), cg.black_map)


# models ----------------------------------------------------------------------


def quartic_bubble(rank: int, k: int) -> ColoredGraph:
    """The quartic melonic vertex ``V_k``: color ``k`` swaps the two pairs."""
    if not 1 <= k <= rank:
        raise ValueError(f"color {k} out of range 1..{rank}")
    return ColoredGraph(tuple((1, 0) if c == k else (0, 1) for c in range(1, rank + 1)))


@dataclass(frozen=True)
class InteractionModel:
    rank: int
    bubbles: tuple[ColoredGraph, ...]
    name: str = ""
    complete_boundary_sector: bool = False
    kinetic_difference_constant: bool = True
    _codes: frozenset = field(default=frozenset(), compare=False, repr=False)

    def __post_init__(self):
        for b in self.bubbles:
            if b.rank != self.rank:
                raise ValueError("bubble rank differs from model rank")
            if not is_connected(b):
                raise ValueError("bubbles must be connected")
        object.__setattr__(self, "_codes", frozenset(canonical_form(b).encoding for b in self.bubbles))

    @classmethod
    def phi4(cls, rank: int) -> "InteractionModel":
        """The quartic melonic model with vertices ``V_1..V_D``."""
        bubbles = tuple(quartic_bubble(rank, k) for k in range(1, rank + 1))
        return cls(rank, bubbles, name=f"phi4_{rank}", complete_boundary_sector=rank >= 2)

    def admits(self, bubble: ColoredGraph) -> bool:
        return canonical_form(bubble).encoding in self._codes


def is_feynman_graph(g: OpenFeynmanGraph, model: InteractionModel) -> bool:
    if g.rank != model.rank or not validate(g).ok:
        return False
    if not g.pairs():
        return False
    return all(model.admits(comp.graph) for comp in connected_components(g.residue()))
