"""Boundary-graph expansions of the free energy and of the Ward-Takahashi Y-term.

Everything here is symbolic: momenta are slot names, coefficients are exact
fractions, and graphs are canonical representatives.  White vertices of a
boundary graph are numbered ``1..k`` in canonical order; components of a
disconnected graph come in ascending size, so a vertex of a later component
has a larger index.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .automorphisms import _closure, aut_group, symmetry_factor
from .enumeration import EnumerationRequest, enumerate_graphs
from .graphs import ColoredGraph, GraphLike, InteractionModel, as_graph, canonical_form, isomorphism
from .perm import compose
from .surgery import EdgeRef, remove_dipole


@dataclass(frozen=True)
class ExpansionTerm:
    boundary: ColoredGraph
    coefficient: Fraction
    order: int

    @property
    def encoding(self) -> str:
        return canonical_form(self.boundary).encoding.decode()


def boundary_classes(rank: int, k: int) -> list[ColoredGraph]:
    """All classes of possibly disconnected rank-``D`` graphs with ``2k`` vertices."""
    if k == 0:
        return [ColoredGraph.empty(rank)]
    return enumerate_graphs(EnumerationRequest(rank, k, connected_only=False))


def _check_model(model: InteractionModel, max_order: int) -> None:
    if not model.complete_boundary_sector:
        raise ValueError(f"boundary sector of model {model.name!r} is not known to be complete")
    if max_order < 0 or max_order % 2:
        raise ValueError(f"order must be a nonnegative even number, got {max_order}")


def free_energy_terms(model: InteractionModel, max_order: int) -> list[ExpansionTerm]:
    """One term ``G_B * J(B) / sigma(B)`` per boundary class with at most ``max_order`` vertices."""
    _check_model(model, max_order)
    out = []
    for k in range(1, max_order // 2 + 1):
        for b in boundary_classes(model.rank, k):
            out.append(ExpansionTerm(b, Fraction(1, symmetry_factor(b)), 2 * k))
    return out


# graph calculus ---------------------------------------------------------------


@dataclass(frozen=True)
class DeltaTerm:
    """``prod_i delta(a^i, c^{pairs[i]})``: slot ``i`` of the derivative
    variable is identified with slot ``pairs[i]`` of the differentiated graph
    (both 1-based, listed for ``i = 1..k``)."""

    pairs: tuple[int, ...]

    def __str__(self) -> str:
        return " ".join(f"d(a{i},c{j})" for i, j in enumerate(self.pairs, start=1))


def graph_derivative(r: GraphLike, q: GraphLike) -> tuple[DeltaTerm, ...]:
    """Derivative of the source monomial of ``r`` with respect to that of ``q``.

    Empty when the graphs are not isomorphic; otherwise one term per
    isomorphism ``q -> r``, i.e. ``|Aut(r)|`` terms.
    """
    r, q = as_graph(r), as_graph(q)
    iso = isomorphism(q, r)
    if iso is None:
        return ()
    phi = iso[0]
    group = aut_group(r)
    elems = group.element_list
    if elems is None:
        elems = _closure(group.generators, r.half_order)
    maps = sorted(compose(alpha, phi) for alpha in elems)
    return tuple(DeltaTerm(tuple(m[i] + 1 for i in range(len(m)))) for m in maps)


# Y-term bookkeeping -----------------------------------------------------------


@dataclass(frozen=True)
class Source:
    """What feeds one color of the removed vertex: ``m`` (the fixed index
    ``m_a``), ``q`` (a summed index) or ``y`` (component ``color`` of the
    remaining vertex ``index``)."""

    kind: str
    color: int
    index: Optional[int] = None

    def __str__(self) -> str:
        if self.kind == "m":
            return f"m{self.color}"
        if self.kind == "q":
            return f"q{self.color}"
        return f"y{self.index}_{self.color}"


@dataclass(frozen=True)
class YTerm:
    boundary: ColoredGraph
    r: int
    color: int
    removed_colors: tuple[int, ...]
    residual: ColoredGraph
    summed_colors: tuple[int, ...]
    xi: tuple[tuple[int, int], ...]
    kappa: tuple[tuple[int, int], ...]
    zmap: tuple[Source, ...]
    coefficient: Fraction = Fraction(1)

    def pattern(self) -> str:
        """The argument pattern of the removed vertex, e.g. ``sum_{q1,q3} G(q1, m2, q3)``."""
        args = ", ".join(str(s) for s in self.zmap)
        head = ""
        if self.summed_colors:
            head = "sum_{" + ",".join(f"q{c}" for c in self.summed_colors) + "} "
        return f"{head}G({args})"

    def record(self) -> str:
        res = canonical_form(self.residual).encoding.decode()
        return "\t".join([
            str(self.coefficient), canonical_form(self.boundary).encoding.decode(),
            str(self.r), str(self.color), res, " ".join(str(s) for s in self.zmap)])


def delta_bookkeeping(b: ColoredGraph, r: int, a: int, coefficient: Fraction = Fraction(1)) -> YTerm:
    """Index bookkeeping for removing the color-``a`` edge at white vertex ``r`` (1-based)."""
    k, D = b.half_order, b.rank
    if not 1 <= r <= k:
        raise ValueError(f"vertex {r} out of range 1..{k}")
    if not 1 <= a <= D:
        raise ValueError(f"color {a} out of range 1..{D}")
    removal = remove_dipole(b, EdgeRef(a, r - 1))
    I = removal.removed_colors
    t = b.perms[a - 1][r - 1]
    xi, kappa, z = [], [], []
    for i in range(1, D + 1):
        if i == a:
            z.append(Source("m", a))
        elif i in I:
            z.append(Source("q", i))
        else:
            x = b.perms[i - 1].index(t) + 1
            kp = x if x < r else x - 1
            # the shift rule must agree with the relabeling done by the removal
            assert removal.white_map[x - 1] == kp - 1
            xi.append((i, x))
            kappa.append((i, kp))
            z.append(Source("y", i, kp))
    summed = tuple(sorted(c for c in I if c != a))
    return YTerm(b, r, a, tuple(sorted(I)), removal.graph, summed, tuple(xi), tuple(kappa),
                 tuple(z), coefficient)


def y_expansion(model: InteractionModel, a: int, max_order: int) -> list[YTerm]:
    """Y-term contributions ``Delta_{m_a,r} G_B * J(B - e_a^r) / |Aut(B)|``."""
    _check_model(model, max_order)
    out = []
    for k in range(1, max_order // 2 + 1):
        for b in boundary_classes(model.rank, k):
            coeff = Fraction(1, symmetry_factor(b))
            for r in range(1, k + 1):
                out.append(delta_bookkeeping(b, r, a, coeff))
    return out


# two-point Schwinger-Dyson inventory --------------------------------------------


@dataclass(frozen=True)
class SDETerm:
    category: str
    color: Optional[int]
    graph: str
    arguments: str
    summed: tuple[str, ...]
    prefactor: str
    multiplicity: int = 1
    kernel: Optional[str] = None
    subtracted: Optional[str] = None


@dataclass(frozen=True)
class SDETermInventory:
    terms: tuple[SDETerm, ...]

    def counts(self) -> tuple[int, ...]:
        return tuple(sum(1 for t in self.terms if t.category == c) for c in SDE_CATEGORIES)


SDE_CATEGORIES = ("free", "tadpole", "four_point", "disconnected", "difference", "coincident")


def sde_two_point_terms(D: int = 3) -> SDETermInventory:
    """Term structure of the closed equation for the melonic 2-point function."""
    if D != 3:
        raise ValueError("the two-point equation is only generated for D = 3")
    pref = "-2*lambda/(m^2+|x|^2)"
    x = ["x1", "x2", "x3"]

    def sub(c, name):
        return ", ".join(name if k == c - 1 else x[k] for k in range(3))

    terms = [SDETerm("free", None, "", "", (), "1/(m^2+|x|^2)")]
    for c in (1, 2, 3):
        others = [n for n in ("k", "l")]
        args = []
        it = iter(others)
        for k in range(3):
            args.append(x[k] if k == c - 1 else next(it))
        terms.append(SDETerm("tadpole", c, "dipole", f"G2(x) * G2({', '.join(args)})",
                             ("k", "l"), pref))
    for c in (1, 2, 3):
        terms.append(SDETerm("four_point", c, f"V{c}", f"{sub(c, 'q')}; x", ("q",), pref, 2))
    for c in (1, 2, 3):
        names = iter(("b", "c"))
        args = ", ".join(x[k] if k == c - 1 else next(names) for k in range(3))
        terms.append(SDETerm("disconnected", c, "dipole+dipole", f"x; {args}", ("b", "c"), pref))
    for c in (1, 2, 3):
        terms.append(SDETerm("difference", c, "dipole", sub(c, f"y{c}"), (f"y{c}",), pref, -1,
                             kernel=f"1/(y{c}^2-x{c}^2)", subtracted="x"))
    for c in (1, 2, 3):
        terms.append(SDETerm("coincident", c, f"V{c}", "x, x", (), pref))
    return SDETermInventory(tuple(terms))
