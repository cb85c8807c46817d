from __future__ import annotations

import pytest

from tensorgraphs.boundary import boundary
from tensorgraphs.enumeration import EnumerationRequest, enumerate_graphs
from tensorgraphs.fixtures import dipole, dipoles, k33, lens31, necklace, quartic, s2xs1, s3
from tensorgraphs.graphs import (ColoredGraph, InteractionModel, connected_components,
                                 disjoint_union, is_connected, is_feynman_graph, is_isomorphic)
from tensorgraphs.realization import (black_gadget, crystallization_pipeline, realize,
                                      realize_connected, white_gadget)


@pytest.mark.parametrize("D", [3, 4, 5, 6, 7, 8])
def test_gadget_ports(D):
    w = white_gadget(D)
    res = boundary(w.graph)
    assert len(res.white_sites) == D and len(res.black_sites) == D
    k = res.white_sites.index(w.marked)
    assert tuple(res.black_sites[res.graph.perms[c][k]] for c in range(D)) == w.singles
    assert len(set(w.singles)) == D and len(w.pairs) == D - 1
    b = black_gadget(D)
    mres = boundary(b.graph)
    assert set(mres.black_sites) == {b.marked, *b.pairs}
    assert set(mres.white_sites) == set(b.singles)
    # p_k reaches r along color k
    r_pos = mres.black_sites.index(b.marked)
    for c in range(1, D + 1):
        assert mres.graph.perms[c - 1][mres.white_sites.index(b.singles[c - 1])] == r_pos


def _check(b):
    g = realize(b)
    m = InteractionModel.phi4(b.rank)
    assert is_feynman_graph(g, m)
    assert is_connected(g)
    assert boundary(g).graph == b or is_isomorphic(boundary(g).graph, b)
    return g


def test_realize_fixtures():
    for b in (k33(), dipole(3), necklace(), quartic(4, 2), dipole(5)):
        g = _check(b)
        assert boundary(g).graph == b


def test_realize_all_small_connected():
    for D, pmax in ((3, 3), (4, 2)):
        for p in range(1, pmax + 1):
            for b in enumerate_graphs(EnumerationRequest(D, p)):
                g = realize_connected(b)
                assert boundary(g).graph == b
                assert all(InteractionModel.phi4(D).admits(c.graph)
                           for c in connected_components(g.residue()))
                assert g.pairs()


def test_realize_disconnected():
    cases = [dipoles(2), disjoint_union([k33(), quartic(3, 1)]), dipoles(3),
             disjoint_union([quartic(3, 2), k33(), dipole()]),
             disjoint_union([necklace(), dipole(4)]), disjoint_union([lens31(), s2xs1(), s3()])]
    for b in cases:
        g = _check(b)
        assert len(connected_components(boundary(g).graph)) == len(connected_components(b))


def test_realize_union_is_union_of_boundaries():
    a, b = k33(), quartic(3, 3)
    lhs = boundary(realize(disjoint_union([a, b]))).graph
    rhs = disjoint_union([boundary(realize(a)).graph, boundary(realize(b)).graph])
    assert is_isomorphic(lhs, rhs)


def test_realize_empty_and_errors():
    g = realize(ColoredGraph.empty(3))
    assert g.is_vacuum and boundary(g).graph.half_order == 0
    with pytest.raises(ValueError):
        realize(ColoredGraph(((0,), (0,))))
    with pytest.raises(ValueError):
        realize_connected(ColoredGraph.empty(3))
    with pytest.raises(ValueError):
        realize_connected(dipoles(2))


def test_pipeline():
    rep = crystallization_pipeline(disjoint_union([lens31(), s2xs1(), s3()]))
    assert rep.components == 3 and rep.feynman and rep.legs == 2 * (6 + 4 + 1)
    tors = [(a.free_rank, a.torsion) for a in rep.abelianizations]
    assert sorted(tors) == sorted([(0, (3,)), (1, ()), (0, ())])
    single = crystallization_pipeline(dipole(3))
    assert single.legs == 2 and single.abelianizations == (None,)
    empty = crystallization_pipeline(ColoredGraph.empty(3))
    assert empty.legs == 0 and empty.components == 0
