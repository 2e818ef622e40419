import pytest

from cornmaps.core import cells, euler_and_genus, face_length, skeleton, uniform_valence
from cornmaps.errors import DegenerateResult, NonUniformValence, WidthOutOfRange
from cornmaps.operators import dual, hole, is_isomorphic, opposite, petrie


def involutions(m):
    return (m.r0, m.r1, m.r2)


def test_dual_swaps_vertices_and_faces(cube, antiprism3):
    d = dual(cube)
    assert len(cells(d, "vertex")) == 6
    assert len(cells(d, "face")) == 8
    assert is_isomorphic(d, antiprism3) is not None


def test_dual_involution(cube, torus44):
    for m in (cube, torus44):
        assert involutions(dual(dual(m))) == involutions(m)


def test_torus_self_dual(torus44):
    assert is_isomorphic(dual(torus44), torus44) is not None


def test_petrie_involution(cube, torus44, theta3):
    for m in (cube, torus44, theta3):
        assert involutions(petrie(petrie(m))) == involutions(m)


def test_petrie_keeps_skeleton(torus44):
    assert skeleton(petrie(torus44)).endpoints == skeleton(torus44).endpoints


def test_petrie_paths_of_torus(torus44):
    P = petrie(torus44)
    assert {face_length(P, f.id) for f in cells(P, "face")} == {8}
    assert is_isomorphic(P, torus44) is None  # face lengths 4 vs 8


def test_opposite_of_torus(torus44, opp44):
    assert uniform_valence(opp44) == 8
    eg = euler_and_genus(opp44)
    assert (eg.chi, eg.orientable, eg.genus) == (-8, True, 5)
    ref = dual(petrie(dual(torus44)))
    assert involutions(opp44) == involutions(ref)
    assert is_isomorphic(petrie(opp44), opp44) is not None


def test_opposite_involution(torus44, opp44):
    assert is_isomorphic(opposite(opp44), torus44) is not None


def test_opposite_keeps_face_adjacency_bipartition(torus44, opp44):
    from cornmaps.core import face_bipartition

    assert face_bipartition(torus44) is not None
    assert face_bipartition(opp44) is not None


def test_opposite_can_degenerate(antiprism4):
    with pytest.raises(DegenerateResult):
        opposite(antiprism4)


def test_hole_width_one_is_identity(opp44):
    result = hole(opp44, 1)
    assert len(result.maps) == 1
    assert involutions(result.maps[0]) == involutions(opp44)
    assert result.correspondence == tuple((0, f) for f in range(opp44.n_flags))


def test_hole_splits_vertices(opp44):
    result = hole(opp44, 2)
    assert len(result.maps) == 4
    for component in result.maps:
        assert uniform_valence(component) == 4
        assert len(cells(component, "vertex")) == 4
    # every original vertex splits in two
    total_vertices = sum(len(cells(c, "vertex")) for c in result.maps)
    assert total_vertices == 2 * len(cells(opp44, "vertex"))


def test_hole_correspondence_partitions(opp44):
    result = hole(opp44, 2)
    seen = set()
    for f, (ci, local) in enumerate(result.correspondence):
        assert 0 <= ci < len(result.maps)
        assert 0 <= local < result.maps[ci].n_flags
        seen.add((ci, local))
    assert len(seen) == opp44.n_flags


def test_hole_composition(opp44):
    parts22 = []
    for component in hole(opp44, 2).maps:
        parts22.extend(hole(component, 2).maps)
    h4 = list(hole(opp44, 4).maps)
    assert len(parts22) == len(h4)
    unused = list(range(len(h4)))
    for a in parts22:
        hit = next(i for i in unused if is_isomorphic(a, h4[i]) is not None)
        unused.remove(hit)
    assert unused == []


def test_hole_rejects_bad_width(torus44, theta4):
    with pytest.raises(WidthOutOfRange):
        hole(torus44, 4)
    with pytest.raises(WidthOutOfRange):
        hole(theta4, 0)


def test_hole_rejects_mixed_valence(asymmetric_map):
    with pytest.raises(NonUniformValence):
        hole(asymmetric_map, 1)


def test_is_isomorphic_identity(cube):
    phi = is_isomorphic(cube, cube)
    assert phi == tuple(range(cube.n_flags))


def test_is_isomorphic_distinguishes(cube, antiprism3, torus44):
    assert is_isomorphic(cube, antiprism3) is None
    assert is_isomorphic(cube, torus44) is None


def test_is_isomorphic_commutes(cube, antiprism3):
    d = dual(cube)
    phi = is_isomorphic(d, antiprism3)
    for i in range(3):
        ra = d.r(i)
        rb = antiprism3.r(i)
        assert all(phi[ra[f]] == rb[phi[f]] for f in range(d.n_flags))
