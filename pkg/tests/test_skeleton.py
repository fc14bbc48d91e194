from math import comb

import pytest

from oracles import antipodal_free_triples
from xpoly.cycles import expand, classify, parse_cycle
from xpoly.errors import IneligibleK
from xpoly.skeleton import (
    SkeletonKind,
    SkeletonSpec,
    cross_cycles,
    simplex_cycles,
    skeleton_triangles,
    triangle_count,
    vertex_labeling_convention,
)


def names(cycles):
    return [str(c) for c in cycles]


def test_labeling_convention():
    lab = vertex_labeling_convention(3)
    assert lab.antipodal_pairs == ((0, 3), (1, 4), (2, 5))
    assert vertex_labeling_convention(4).antipodal_pairs == tuple((i, i + 4) for i in range(4))
    for k in range(3, 26):
        assert vertex_labeling_convention(k).shift_preserves_pairing()
    with pytest.raises(IneligibleK):
        vertex_labeling_convention(2)


def test_cross_cycles_examples():
    assert names(cross_cycles(3)) == ["(1 : 1 : 4)", "(2 : 2 : 2)"]
    assert names(cross_cycles(4)) == ["(1 : 1 : 6)", "(1 : 2 : 5)", "(1 : 5 : 2)", "(2 : 3 : 3)"]
    assert sum(len(expand(c)) for c in cross_cycles(3)) == 8


def test_simplex_cycles_examples():
    assert names(simplex_cycles(5)) == ["(1 : 1 : 3)", "(1 : 2 : 2)"]
    assert len(simplex_cycles(7)) == 5
    assert sum(len(expand(c)) for c in simplex_cycles(7)) == 35
    with pytest.raises(IneligibleK):
        simplex_cycles(3)


@pytest.mark.parametrize(
    "kind, k, expected",
    [("cross", 3, 8), ("cross", 4, 32), ("simplex", 7, 35)],
)
def test_triangle_count_examples(kind, k, expected):
    assert triangle_count(SkeletonSpec(kind, k)) == expected


@pytest.mark.parametrize("k", range(3, 26))
def test_cross_counts_against_brute_force(k):
    spec = SkeletonSpec(SkeletonKind.CROSS, k)
    brute = antipodal_free_triples(k)
    cycles = cross_cycles(k)
    assert triangle_count(spec) == comb(2 * k, 3) - k * (2 * k - 2) == len(brute)
    assert sum(len(expand(c)) for c in cycles) == len(brute)
    assert skeleton_triangles(spec) == brute
    assert all(k not in c.gaps for c in cycles)
    assert all(classify(t, 2 * k) in cycles for t in brute)
    for c in cycles:
        # edge differences are the gaps (up to sign); none may be antipodal
        assert all(g % (2 * k) != k for g in c.gaps)
        assert all(spec.contains(t) for t in expand(c))


@pytest.mark.parametrize("k", range(4, 26))
def test_simplex_counts(k):
    spec = SkeletonSpec(SkeletonKind.SIMPLEX, k)
    assert triangle_count(spec) == comb(k, 3) == sum(len(expand(c)) for c in simplex_cycles(k))


def test_spec_validation():
    with pytest.raises(IneligibleK):
        SkeletonSpec("cross", 2)
    with pytest.raises(IneligibleK):
        SkeletonSpec("simplex", 3)
    assert SkeletonSpec("simplex", 6).simplex_eligible is False
    assert SkeletonSpec("simplex", 11).simplex_eligible is True
    assert SkeletonSpec("cross", 5).modulus == 10
    assert not SkeletonSpec("cross", 3).contains((0, 1, 3))
    assert SkeletonSpec("cross", 3).contains(tuple(sorted(expand(parse_cycle("(1:1:4)")))[0]))
