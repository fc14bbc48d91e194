import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import orientable_by_backtracking, orientable_by_enumeration, orientable_by_gf2
from xpoly.complex import TwoComplex, build
from xpoly.cycles import enumerate_all, parse_cycle, shift_triangle
from xpoly.errors import EmptyComplex, ModulusMismatch, NotPseudomanifold
from xpoly.skeleton import SkeletonSpec
from xpoly.surface import (
    Classification,
    boundary_cycles,
    certify,
    is_subcomplex_of_skeleton,
    orient,
    _classify,
)

C = Classification


def complex_of(n, *texts):
    return build(n, [parse_cycle(t) for t in texts])


def only(cert):
    assert len(cert.components) == 1
    return cert.components[0]


def test_octahedron_is_a_sphere():
    cert = only(certify(complex_of(6, "(1:1:4)", "(2:2:2)")))
    assert (cert.vertices, cert.edges, cert.faces) == (6, 12, 8)
    assert cert.is_closed and cert.orientable and cert.links_ok
    assert cert.euler_characteristic == 2 and cert.genus == 0
    assert cert.classification is C.SPHERE


def test_seven_vertex_torus():
    c = complex_of(7, "(1:2:4)", "(1:4:2)")
    assert all(len(ts) == 2 for ts in c.edges.values()) and len(c.edges) == 21
    cert = only(certify(c))
    assert cert.euler_characteristic == 0 and cert.orientable and cert.is_closed
    assert cert.genus == 1 and cert.classification is C.TORUS


def test_seven_vertex_moebius_strip():
    c = complex_of(7, "(1:1:5)")
    cert = only(certify(c))
    assert cert.euler_characteristic == 0
    assert cert.boundary_components == 1
    assert cert.orientable is False and orientable_by_enumeration(c.triangles) is False
    assert cert.classification is C.MOEBIUS_STRIP
    (cycle,) = boundary_cycles(c)
    assert len(cycle) == 7 and {c.edge_class(e) for e in cycle} == {2}


def test_boundary_cycles_examples():
    assert boundary_cycles(complex_of(6, "(1:1:4)", "(2:2:2)")) == []
    # every gap-4 edge of (2:2:4) mod 8 lies in two triangles: the complex is
    # two tetrahedron boundaries, so no boundary at all
    c = complex_of(8, "(2:2:4)")
    assert all(len(ts) == 2 for ts in c.edges.values())
    assert boundary_cycles(c) == []
    cert = certify(c)
    assert [p.classification for p in cert.components] == [C.SPHERE, C.SPHERE]
    # two triangles sharing nothing: two boundary circles of length 3
    loops = boundary_cycles(complex_of(6, "(2:2:2)"))
    assert sorted(len(x) for x in loops) == [3, 3]


def test_boundary_cycles_requires_pseudomanifold():
    thick = complex_of(7, "(1:1:5)", "(1:2:4)", "(1:4:2)")
    with pytest.raises(NotPseudomanifold):
        boundary_cycles(thick)
    cert = certify(thick)
    assert not cert.is_pseudomanifold
    assert cert.orientable is None and cert.components[0].classification is C.OTHER


def test_annulus_and_disks():
    cert = only(certify(complex_of(6, "(1:1:4)")))
    assert cert.classification is C.ANNULUS and cert.boundary_components == 2
    cert = certify(complex_of(6, "(2:2:2)"))
    assert [p.classification for p in cert.components] == [C.DISK, C.DISK]


def test_empty_complex_rejected():
    with pytest.raises(EmptyComplex):
        certify(build(7, []))


def test_bowtie_fails_links():
    c = TwoComplex.from_triangles(7, [(0, 1, 2), (0, 3, 4)])
    cert = only(certify(c))
    assert cert.is_pseudomanifold and not cert.links_ok and not cert.is_surface


@pytest.mark.parametrize(
    "chi, orientable, boundary, expected",
    [
        (2, True, 0, C.SPHERE),
        (0, True, 0, C.TORUS),
        (1, True, 1, C.DISK),
        (0, True, 2, C.ANNULUS),
        (-2, True, 0, C.OTHER),
        (1, False, 0, C.PROJECTIVE_PLANE),
        (0, False, 0, C.KLEIN_BOTTLE),
        (0, False, 1, C.MOEBIUS_STRIP),
        (-1, False, 0, C.OTHER),
        (3, True, 0, C.OTHER),
    ],
)
def test_classification_table(chi, orientable, boundary, expected):
    assert _classify(chi, orientable, boundary)[1] is expected


def small_complexes(max_n, max_cycles, max_faces=None):
    for n in range(3, max_n + 1):
        cycles = enumerate_all(n)
        for r in range(1, max_cycles + 1):
            for group in itertools.combinations(cycles, r):
                c = build(n, group)
                if max_faces is None or len(c.triangles) <= max_faces:
                    yield c


def test_orientation_matches_full_enumeration():
    count = 0
    for c in small_complexes(12, 3, max_faces=12):
        assert (orient(c) is not None) == orientable_by_enumeration(c.triangles)
        count += 1
    assert count > 50


def test_orientation_matches_search_and_gf2():
    for c in small_complexes(12, 3):
        expected = orient(c) is not None
        assert orientable_by_backtracking(c.triangles) == expected
        assert orientable_by_gf2(c.triangles) == expected


def test_euler_characteristic_consistent_with_class():
    for c in small_complexes(12, 2):
        for comp in certify(c).components:
            if comp.classification is C.OTHER:
                continue
            b = comp.boundary_components
            if comp.orientable:
                assert comp.euler_characteristic == 2 - 2 * comp.genus - b
            else:
                assert comp.euler_characteristic == 2 - comp.genus - b
            assert comp.is_closed == (b == 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 16).flatmap(
    lambda n: st.tuples(st.just(n), st.sets(st.sampled_from(enumerate_all(n)), min_size=1, max_size=3))))
def test_certificate_shift_invariant(params):
    n, group = params
    c = build(n, group)
    relabeled = TwoComplex.from_triangles(n, (shift_triangle(t, 3, n) for t in c.triangles))
    assert certify(relabeled) == certify(c)


def test_is_subcomplex_of_skeleton():
    octa = complex_of(6, "(1:1:4)", "(2:2:2)")
    assert is_subcomplex_of_skeleton(octa, SkeletonSpec("cross", 3))
    assert not is_subcomplex_of_skeleton(complex_of(6, "(1:2:3)"), SkeletonSpec("cross", 3))
    assert is_subcomplex_of_skeleton(complex_of(7, "(1:2:4)"), SkeletonSpec("simplex", 7))
    with pytest.raises(ModulusMismatch):
        is_subcomplex_of_skeleton(octa, SkeletonSpec("cross", 4))
