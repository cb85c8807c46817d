"""Boundary graphs of open graphs, amputation and coning."""
from __future__ import annotations

from dataclasses import dataclass, replace

from .graphs import ColoredGraph, GraphLike, OpenFeynmanGraph, as_graph


@dataclass(frozen=True)
class BoundaryResult:
    """``graph`` is the boundary; boundary white ``k`` sits at internal white
    ``white_sites[k]`` and boundary black ``k`` at internal black ``black_sites[k]``."""

    graph: ColoredGraph
    white_sites: tuple[int, ...]
    black_sites: tuple[int, ...]

    @property
    def leg_map(self) -> dict[tuple[str, int], tuple[str, int]]:
        out = {("w", k): ("w", s) for k, s in enumerate(self.white_sites)}
        out.update({("b", k): ("b", s) for k, s in enumerate(self.black_sites)})
        return out


def boundary(g: OpenFeynmanGraph) -> BoundaryResult:
    D = g.rank
    if g.amputated:
        return BoundaryResult(ColoredGraph.empty(D), (), ())
    whites = g.unmatched_whites()
    blacks = g.unmatched_blacks()
    bpos = {b: k for k, b in enumerate(blacks)}
    back0 = {b: w for w, b in enumerate(g.prop0) if b is not None}
    perms = []
    for c in range(D):
        sigma = g.perms[c]
        img = []
        for w in whites:
            b = sigma[w]
            # alternate color-c edges and internal propagators until a leg is hit
            while b not in bpos:
                b = sigma[back0[b]]
            img.append(bpos[b])
        perms.append(tuple(img))
    return BoundaryResult(ColoredGraph(tuple(perms)), tuple(whites), tuple(blacks))


def amputate(g: OpenFeynmanGraph) -> OpenFeynmanGraph:
    return replace(g, amputated=True)


def cone(b: GraphLike) -> OpenFeynmanGraph:
    """Attach one external leg to every vertex of ``b``."""
    b = as_graph(b)
    return OpenFeynmanGraph(b.perms, (None,) * b.half_order)

