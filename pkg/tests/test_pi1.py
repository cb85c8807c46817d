from __future__ import annotations

import random
from itertools import permutations

import pytest

from oracles import determinantal_invariants, word_value_in_abelian
from tensorgraphs.fixtures import dipole, dipoles, k33, lens31, necklace, rp3, s2xs1, s3
from tensorgraphs.graphs import connected_components
from tensorgraphs.pi1 import (AbelianInvariants, GroupPresentation, abelianization,
                              bicolored_cycles, gagliardi_presentation, has_spherical_residues,
                              is_crystallization, tietze_simplify, word_from_incidence)
from tensorgraphs.surgery import EdgeRef, connected_sum

TARGETS = {"s3": (s3, 0, ()), "s2xs1": (s2xs1, 1, ()), "lens31": (lens31, 0, (3,)),
           "rp3": (rp3, 0, (2,))}


def test_word_builder():
    assert word_from_incidence([(1, "b"), (2, "w")] * 3) == (1, -2, 1, -2, 1, -2)
    w = word_from_incidence([(2, "b"), (2, "w"), (1, "b"), (1, "w")])
    assert w == (2, -2, 1, -1)
    assert tietze_simplify(GroupPresentation(2, (w,))).relators == ()


def test_is_crystallization():
    assert is_crystallization(dipole(4))
    assert not is_crystallization(dipoles(2, rank=4))
    doubled = connected_sum(dipole(4), EdgeRef(1, 0), dipole(4), EdgeRef(1, 0))
    assert len(connected_components(doubled, [2, 3, 4])) == 2
    assert not is_crystallization(doubled)


def test_dipole_presentation():
    p = gagliardi_presentation(dipole(4), 1, 2)
    assert p == GroupPresentation(1, ((1,),))
    assert abelianization(p).is_trivial


def test_abelianization_examples():
    assert abelianization(GroupPresentation(1, ((1, 1, 1),))) == AbelianInvariants(0, (3,))
    assert abelianization(GroupPresentation(1, ())) == AbelianInvariants(1)
    assert abelianization(GroupPresentation(2, ((1, 2, -1, -2),))) == AbelianInvariants(2)


def test_abelianization_against_minors():
    rng = random.Random(4)
    for _ in range(200):
        n = rng.randint(1, 3)
        rels = [tuple(rng.choice([x for x in range(-n, n + 1) if x]) for _ in range(rng.randint(1, 6)))
                for _ in range(rng.randint(0, 3))]
        rows = [word_value_in_abelian(r, n) for r in rels]
        free, tors = determinantal_invariants(rows, n) if rows else (n, ())
        ab = abelianization(GroupPresentation(n, tuple(rels)))
        assert (ab.free_rank, ab.torsion) == (free, tors)


def test_tietze_examples():
    p = GroupPresentation(2, ((2,), (1, -2, 1, -2, 1, -2)))
    assert tietze_simplify(p) == GroupPresentation(1, ((1, 1, 1),))
    q = GroupPresentation(2, ((2,), (2, -2, 1, -1)))
    assert tietze_simplify(q) == GroupPresentation(1, ())
    simple = GroupPresentation(1, ((1, 1, 1),))
    assert tietze_simplify(simple) == simple


def test_tietze_preserves_abelianization():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(1, 4)
        rels = tuple(tuple(rng.choice([x for x in range(-n, n + 1) if x]) for _ in range(rng.randint(0, 7)))
                     for _ in range(rng.randint(0, 4)))
        p = GroupPresentation(n, rels)
        assert abelianization(tietze_simplify(p)) == abelianization(p)


@pytest.mark.parametrize("name", sorted(TARGETS))
def test_fixture_crystallizations(name):
    make, free, tors = TARGETS[name]
    g = make()
    assert is_crystallization(g) and has_spherical_residues(g)
    C = g.rank
    seen = set()
    for i, j in permutations(range(1, C + 1), 2):
        base = gagliardi_presentation(g, i, j)
        n = base.generator_count
        ncyc = len(bicolored_cycles(g, i, j))
        assert n == len(connected_components(g, [c for c in range(1, C + 1) if c not in (i, j)]))
        assert len(base.relators) == 1 + ncyc - 1
        for w in base.relators[1:]:
            assert all((w[k] > 0) != (w[(k + 1) % len(w)] > 0) for k in range(len(w)))
        for dg in range(1, n + 1):
            for dr in range(ncyc):
                ab = abelianization(gagliardi_presentation(g, i, j, dg, dr))
                seen.add((ab.free_rank, ab.torsion))
    assert seen == {(free, tors)}


def test_fixture_groups_simplify():
    assert tietze_simplify(gagliardi_presentation(lens31(), 1, 2)).generator_count == 1
    p = tietze_simplify(gagliardi_presentation(lens31(), 1, 2))
    assert len(p.relators) == 1 and sorted(set(map(abs, p.relators[0]))) == [1] and len(p.relators[0]) == 3
    assert tietze_simplify(gagliardi_presentation(s2xs1(), 1, 2)) == GroupPresentation(1, ())
    assert tietze_simplify(gagliardi_presentation(s3(), 1, 2)) == GroupPresentation(0, ())


def test_presentation_errors():
    with pytest.raises(ValueError):
        gagliardi_presentation(k33(), 1, 2)
    with pytest.raises(ValueError):
        gagliardi_presentation(dipoles(2, rank=4), 1, 2)
    with pytest.raises(ValueError):
        gagliardi_presentation(dipole(4), 1, 1)
    assert is_crystallization(necklace())
    with pytest.raises(ValueError):
        GroupPresentation(1, ((2,),))
