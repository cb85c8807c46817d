"""Fundamental groups of crystallizations and their abelianizations.

Letters are signed 1-based generator indices: ``2`` is ``x_2`` and ``-2`` its
inverse.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .graphs import ColoredGraph, as_graph, connected_components
from .perm import inverse

Word = tuple[int, ...]


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        rels = tuple(tuple(int(x) for x in r) for r in self.relators)
        for r in rels:
            for x in r:
                if x == 0 or abs(x) > self.generator_count:
                    raise ValueError(f"letter {x} out of range")
        object.__setattr__(self, "relators", rels)

    def __str__(self) -> str:
        gens = ", ".join(f"g{k}" for k in range(1, self.generator_count + 1))
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"< {gens} | {rels} >"


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "1"
    return " ".join(f"g{x}" if x > 0 else f"g{-x}^-1" for x in w)


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...] = ()

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def is_crystallization(g) -> bool:
    """Connected, and removing any one color leaves a connected graph."""
    g = as_graph(g)
    if g.half_order == 0 or len(connected_components(g)) != 1:
        return False
    colors = range(1, g.rank + 1)
    return all(len(connected_components(g, [d for d in colors if d != c])) == 1 for c in colors)


def word_from_incidence(seq: Sequence[tuple[int, str]]) -> Word:
    """Word read around a bicolored cycle from ``(residue, 'b' | 'w')`` pairs."""
    out = []
    for alpha, kind in seq:
        if kind not in ("b", "w"):
            raise ValueError(f"vertex kind must be 'b' or 'w', got {kind!r}")
        out.append(alpha if kind == "b" else -alpha)
    return tuple(out)


def bicolored_cycles(g: ColoredGraph, i: int, j: int) -> list[list[tuple[str, int]]]:
    """``{i,j}``-cycles as vertex lists, each starting at its least white vertex."""
    si, sj_inv = g.perms[i - 1], inverse(g.perms[j - 1])
    seen = set()
    out = []
    for w0 in range(g.half_order):
        if w0 in seen:
            continue
        cyc = []
        w = w0
        while w not in seen:
            seen.add(w)
            b = si[w]
            cyc += [("w", w), ("b", b)]
            w = sj_inv[b]
        out.append(cyc)
    return out


def gagliardi_presentation(g, i: int, j: int, dropped_generator: Optional[int] = None,
                           dropped_relation: Optional[int] = None) -> GroupPresentation:
    """Presentation of the fundamental group read off a crystallization.

    Generators are the residues avoiding colors ``i`` and ``j``; each
    ``{i,j}``-cycle gives a relator.  ``dropped_generator`` (1-based, default
    the last) is killed by a one-letter relator and ``dropped_relation``
    (0-based index into the cycles, default the last) is omitted.
    """
    g = as_graph(g)
    C = g.rank
    if C < 4:
        raise ValueError(f"need at least 4 colors, got {C}")
    if i == j or not (1 <= i <= C and 1 <= j <= C):
        raise ValueError(f"bad color pair ({i}, {j})")
    if not is_crystallization(g):
        raise ValueError("graph is not a crystallization")
    rest = [c for c in range(1, C + 1) if c not in (i, j)]
    res = connected_components(g, rest)
    white_res = {}
    black_res = {}
    for k, comp in enumerate(res, start=1):
        for w in comp.whites:
            white_res[w] = k
        for b in comp.blacks:
            black_res[b] = k
    n = len(res)
    cycles = bicolored_cycles(g, i, j)
    if dropped_generator is None:
        dropped_generator = n
    if dropped_relation is None:
        dropped_relation = len(cycles) - 1
    if not 1 <= dropped_generator <= n:
        raise ValueError("dropped generator out of range")
    if not 0 <= dropped_relation < len(cycles):
        raise ValueError("dropped relation out of range")
    rels = [(dropped_generator,)]
    for k, cyc in enumerate(cycles):
        if k == dropped_relation:
            continue
        seq = [(white_res[v] if kind == "w" else black_res[v], kind) for kind, v in cyc]
        rels.append(word_from_incidence(seq))
    return GroupPresentation(n, tuple(rels))


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    n = p.generator_count
    if n == 0:
        return AbelianInvariants(0)
    rows = []
    for r in p.relators:
        row = [0] * n
        for x in r:
            row[abs(x) - 1] += 1 if x > 0 else -1
        if any(row):
            rows.append(row)
    if not rows:
        return AbelianInvariants(n)
    factors = [abs(int(d)) for d in invariant_factors(Matrix(rows), domain=ZZ)]
    nonzero = [d for d in factors if d != 0]
    return AbelianInvariants(n - len(nonzero), tuple(sorted(d for d in nonzero if d > 1)))


# Tietze moves -----------------------------------------------------------------


def free_reduce(w: Sequence[int]) -> Word:
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Sequence[int]) -> Word:
    w = list(free_reduce(w))
    while len(w) > 1 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def _invert(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def _cyclic_key(w: Word) -> Word:
    cands = []
    for v in (w, _invert(w)):
        cands += [v[k:] + v[:k] for k in range(len(v))]
    return min(cands) if cands else ()


def _drop_generator(rels: list[Word], n: int, x: int, value: Word) -> list[Word]:
    """Replace generator ``x`` by ``value`` and renumber the rest."""
    out = []
    inv = _invert(value)
    for r in rels:
        w: list[int] = []
        for y in r:
            if y == x:
                w.extend(value)
            elif y == -x:
                w.extend(inv)
            else:
                w.append(y)
        out.append(tuple((y - 1 if y > x else y + 1 if y < -x else y) for y in w))
    return out


def tietze_simplify(p: GroupPresentation) -> GroupPresentation:
    """Free and cyclic reduction, removal of trivial or repeated relators,
    and elimination of generators that occur once in some relator."""
    n = p.generator_count
    rels = [tuple(r) for r in p.relators]
    while True:
        cleaned, keys = [], set()
        for r in rels:
            r = cyclic_reduce(r)
            k = _cyclic_key(r)
            if r and k not in keys:
                keys.add(k)
                cleaned.append(r)
        rels = cleaned
        target = None
        for idx, r in sorted(enumerate(rels), key=lambda t: (len(t[1]), t[0])):
            for pos, x in enumerate(r):
                if sum(1 for y in r if abs(y) == abs(x)) == 1:
                    target = (idx, pos)
                    break
            if target:
                break
        if target is None:
            return GroupPresentation(n, tuple(rels))
        idx, pos = target
        r = rels.pop(idx)
        x = r[pos]
        # r = u x v = 1 gives x = (v u)^-1
        value = _invert(r[pos + 1:] + r[:pos])
        gen = abs(x)
        if x < 0:
            value = _invert(value)
        rels = _drop_generator(rels, n, gen, value)
        n -= 1


def has_spherical_residues(g) -> bool:
    """Every residue missing one color has degree zero.

    For 4 colors this says each 3-residue is a planar surface, so the graph
    encodes a closed 3-manifold.
    """
    from .invariants import gurau_degree
    g = as_graph(g)
    C = g.rank
    for c in range(1, C + 1):
        for comp in connected_components(g, [d for d in range(1, C + 1) if d != c]):
            if comp.graph.rank >= 3 and gurau_degree(comp.graph) != 0:
                return False
    return True
