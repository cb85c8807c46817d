"""Named example graphs.

Index conventions (0-based) are fixed here once; tests and the CLI refer to
these constructors rather than spelling out permutations again.
"""
from __future__ import annotations

from .graphs import ColoredGraph, disjoint_union, quartic_bubble


def dipole(rank: int = 3) -> ColoredGraph:
    """Two vertices joined by one edge of every color (the melon)."""
    return ColoredGraph(tuple((0,) for _ in range(rank)))


def quartic(rank: int, k: int) -> ColoredGraph:
    return quartic_bubble(rank, k)


def k33() -> ColoredGraph:
    """Complete bipartite graph on 3+3 vertices, 3-colored (a torus)."""
    return ColoredGraph(((0, 1, 2), (2, 0, 1), (1, 2, 0)))


def necklace() -> ColoredGraph:
    """4-colored graph on 4 vertices with degree 1: colors 1,2 parallel, 3,4 crossed."""
    return ColoredGraph(((0, 1), (0, 1), (1, 0), (1, 0)))


def empty(rank: int = 3) -> ColoredGraph:
    return ColoredGraph.empty(rank)


def dipoles(count: int, rank: int = 3) -> ColoredGraph:
    return disjoint_union([dipole(rank)] * count, rank=rank)


def cycle2(j: int) -> ColoredGraph:
    """Connected 2-colored graph on ``2j`` vertices (a ``2j``-cycle)."""
    return ColoredGraph((tuple(range(j)), tuple((i + 1) % j for i in range(j))))


def cycle_type_graph(lengths) -> ColoredGraph:
    """Disjoint union of 2-colored cycles with ``2j`` vertices for each ``j``."""
    return disjoint_union([cycle2(j) for j in lengths], rank=2)


# crystallizations of closed 3-manifolds (4 colors); each has one residue per
# color and spherical 3-residues.


def s3() -> ColoredGraph:
    """The 3-sphere: the 4-colored dipole."""
    return dipole(4)


def s2xs1() -> ColoredGraph:
    """8-vertex crystallization with fundamental group Z."""
    return ColoredGraph(((0, 1, 2, 3), (0, 2, 3, 1), (1, 3, 2, 0), (2, 3, 0, 1)))


def rp3() -> ColoredGraph:
    """8-vertex crystallization with fundamental group Z/2."""
    return ColoredGraph(((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)))


def lens31() -> ColoredGraph:
    """12-vertex crystallization with fundamental group Z/3."""
    return ColoredGraph(((0, 1, 2, 3, 4, 5), (1, 2, 0, 4, 5, 3),
                         (3, 5, 4, 0, 2, 1), (4, 3, 5, 1, 0, 2)))


FIXTURES = {
    "dipole": lambda: dipole(3),
    "dipole4": lambda: dipole(4),
    "dipole5": lambda: dipole(5),
    "v1": lambda: quartic(3, 1),
    "v2": lambda: quartic(3, 2),
    "v3": lambda: quartic(3, 3),
    "k33": k33,
    "necklace": necklace,
    "empty": lambda: empty(3),
    "s3": s3,
    "s2xs1": s2xs1,
    "rp3": rp3,
    "lens31": lens31,
}
