"""Faces, jackets and the Gurau degree of closed colored graphs.

All arithmetic is exact.  A graph with ``C`` colors is read as an element of
the ``(C-1)``-dimensional theory, so the face-counting identity uses
``D = C - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb, factorial

from .graphs import ColoredGraph, OpenFeynmanGraph, as_graph, connected_components
from .perm import compose, cycle_count, inverse


class DegreeInconsistency(AssertionError):
    """Jacket genera and the face-counting identity disagree (a bug)."""


def _closed(g) -> ColoredGraph:
    if isinstance(g, OpenFeynmanGraph):
        return g.to_colored_graph()
    return as_graph(g)


def face_count(g: ColoredGraph, c: int, d: int) -> int:
    """Number of ``{c,d}``-bicolored cycles."""
    return cycle_count(compose(inverse(g.perms[d - 1]), g.perms[c - 1]))


def faces(g) -> dict[tuple[int, int], int]:
    g = _closed(g)
    return {(c, d): face_count(g, c, d) for c, d in combinations(range(1, g.rank + 1), 2)}


def jacket_classes(colors: int) -> list[tuple[int, ...]]:
    """Cyclic orders of ``1..colors`` up to rotation and reflection."""
    if colors < 3:
        raise ValueError(f"jackets need at least 3 colors, got {colors}")
    out = []
    for rest in permutations(range(2, colors + 1)):
        if rest[0] < rest[-1]:
            out.append((1,) + rest)
    return out


@dataclass(frozen=True)
class JacketReport:
    cycle_class: tuple[int, ...]
    face_count: int
    euler_characteristic: int
    genus: int


def jackets(g) -> list[JacketReport]:
    g = _closed(g)
    C, p = g.rank, g.half_order
    fc = faces(g)
    ncomp = len(connected_components(g))
    reports = []
    for order in jacket_classes(C):
        pairs = [tuple(sorted((order[k], order[(k + 1) % C]))) for k in range(C)]
        F = sum(fc[pr] for pr in pairs)
        chi = 2 * p - C * p + F
        twice_genus = 2 * ncomp - chi
        if twice_genus < 0 or twice_genus % 2:
            raise DegreeInconsistency(f"jacket {order} has Euler characteristic {chi}")
        reports.append(JacketReport(order, F, chi, twice_genus // 2))
    return reports


def face_formula_degree(g) -> Fraction:
    """Degree read off the face count of a connected graph."""
    g = _closed(g)
    D = g.rank - 1
    F = sum(faces(g).values())
    return Fraction(factorial(D - 1), 2) * (comb(D, 2) * g.half_order + D - F)


@dataclass(frozen=True)
class DegreeReport:
    omega: Fraction
    jacket_genera: tuple[int, ...]
    face_formula: Fraction
    consistent: bool


def degree_report(g) -> DegreeReport:
    g = _closed(g)
    if g.rank < 3:
        raise ValueError(f"the degree needs at least 3 colors, got {g.rank}")
    genera = tuple(j.genus for j in jackets(g))
    omega = Fraction(sum(genera))
    formula = sum((face_formula_degree(c.graph) for c in connected_components(g)), Fraction(0))
    return DegreeReport(omega, genera, formula, omega == formula)


def gurau_degree(g) -> Fraction:
    rep = degree_report(g)
    if not rep.consistent:
        raise DegreeInconsistency(
            f"jacket sum {rep.omega} differs from face formula {rep.face_formula}")
    return rep.omega


def is_melon(g) -> bool:
    return gurau_degree(g) == 0


def amplitude_exponent(g, D: int | None = None) -> Fraction:
    """Exponent of ``N`` in the large-``N`` scaling of the amplitude."""
    g = _closed(g)
    if D is None:
        D = g.rank - 1
    return D - 2 * gurau_degree(g) / factorial(D - 1)
