import pytest

import cornmaps.cornerations as corn
from cornmaps.builders import (
    build_antiprism_corneration,
    build_torus_grid_corneration,
)
from cornmaps.core import cells, face_boundary_edges, order_mod, rotation_at_vertex
from cornmaps.errors import (
    CircuitTooShort,
    GroupNotSubgroup,
    NoHalfReflexiveGroup,
    NotWedgeCorneration,
    StraightCornerHasNoSide,
    StraightHasNoComplement,
    WidthMismatch,
    WidthOutOfRange,
)
from cornmaps.operators import hole, petrie
from cornmaps.symmetry import SymGroup, automorphism_group


def trivial_group(m):
    return SymGroup(m, (tuple(range(m.n_flags)),))


def straight_corneration(m):
    A = automorphism_group(m)
    q = {len(v.flags) // 2 for v in cells(m, "vertex")}.pop()
    (L,) = corn.enumerate_invariant_cornerations(m, A, q // 2)
    return L


# -- corners ----------------------------------------------------------------


def test_all_j_corners_counts(cube, torus44, opp44):
    assert len(corn.all_j_corners(cube, 1)) == 24  # all corners at valence 3
    assert len(corn.all_j_corners(torus44, 2)) == 16 * 2  # straight pairs
    assert len(corn.all_j_corners(opp44, 3)) == 8 * 8
    with pytest.raises(WidthOutOfRange):
        corn.all_j_corners(cube, 2)
    with pytest.raises(WidthOutOfRange):
        corn.all_j_corners(torus44, 0)


def test_corner_fields(opp44):
    for c in corn.all_j_corners(opp44, 3):
        assert c.width == 3
        assert not c.straight
        assert len(c.interior_wedges) == 3
        assert len(c.boundary_wedges) == 4
        assert len(c.interior_boundary_wedges) == 2
        assert len(c.exterior_boundary_wedges) == 2


def test_straight_corner_fields(torus44):
    for c in corn.all_j_corners(torus44, 2):
        assert c.straight
        assert c.interior_wedges == frozenset()
        assert len(c.boundary_wedges) == 4


def test_wedge_corner_fields(cube):
    for c in corn.all_j_corners(cube, 1):
        assert len(c.interior_wedges) == 1
        assert c.interior_boundary_wedges == c.interior_wedges
        assert len(c.boundary_wedges) == 3  # q = 3 leaves only three wedges


def test_corner_needs_one_vertex(theta4):
    # the two darts of one edge sit at different vertices, so no corner
    dart_of = theta4.cell_index("dart")
    e0 = cells(theta4, "edge")[0]
    d1 = dart_of[e0.id]
    d2 = dart_of[theta4.r0[e0.id]]
    assert d1 != d2
    with pytest.raises(ValueError):
        corn.corner_from_darts(theta4, (d1, d2))
    with pytest.raises(ValueError):
        corn.corner_from_darts(theta4, (d1, d1))


# -- alignment ---------------------------------------------------------------


def test_alignment_of_face_wedges(cube):
    wedge_cells = cells(cube, "wedge")
    wedge_of = cube.cell_index("wedge")
    f0 = cells(cube, "face")[0]
    from cornmaps.core import face_boundary_wedges

    walk = face_boundary_wedges(cube, f0.id)
    c1 = corn.corner_of_wedge(cube, walk[0])
    c2 = corn.corner_of_wedge(cube, walk[1])
    assert corn.alignment(cube, c1, c2) == corn.CONVEX


def test_alignment_of_petrie_consecutive(cube):
    # transfer the first face wedge pair of the petrie dual back: those
    # corners sit on opposite sides in the original map
    P = petrie(cube)
    from cornmaps.core import face_boundary_wedges

    f0 = cells(P, "face")[0]
    walk = face_boundary_wedges(P, f0.id)
    c1 = corn.corner_of_wedge(P, walk[0])
    c2 = corn.corner_of_wedge(P, walk[1])
    d1 = corn.corner_from_darts(cube, c1.darts)
    d2 = corn.corner_from_darts(cube, c2.darts)
    assert corn.alignment(cube, d1, d2) == corn.INFLECTION


def test_alignment_disjoint_and_straight(cube, torus44):
    corners = corn.all_j_corners(cube, 1)
    edge_of = cube.cell_index("edge")
    c1 = corners[0]
    e1 = {edge_of[d] for d in c1.darts}
    c2 = next(
        c
        for c in corners
        if not ({edge_of[d] for d in c.darts} & e1)
    )
    assert corn.alignment(cube, c1, c2) == corn.NOT_ALIGNED
    s = corn.all_j_corners(torus44, 2)
    assert corn.alignment(torus44, s[0], s[1]) == corn.NOT_ALIGNED
    with pytest.raises(ValueError):
        corn.alignment(cube, c1, s[0])


def test_interior_flag_rejects_straight(torus44):
    c = corn.all_j_corners(torus44, 2)[0]
    with pytest.raises(StraightCornerHasNoSide):
        corn._interior_flag_on_dart(torus44, c, c.darts[0])


# -- cover checks ------------------------------------------------------------


def test_is_corneration(torus44):
    L = straight_corneration(torus44)
    assert corn.is_corneration(torus44, L.corners).ok
    doubled = corn.all_j_corners(torus44, 1)
    report = corn.is_corneration(torus44, doubled)
    assert not report.ok and report.witness is not None
    empty = corn.is_corneration(torus44, [])
    assert not empty.ok and empty.reason == "uncovered dart"


# -- circuits ----------------------------------------------------------------


def test_lines_of_straight_torus(torus44):
    L = straight_corneration(torus44)
    dec = corn.circuits_of(L)
    assert len(dec) == 8
    assert sorted(len(c) for c in dec.circuits) == [4] * 8
    edges = [e for c in dec.circuits for e in c.edges]
    assert len(edges) == len(set(edges)) == 32


def test_pattern_a_circuits_are_faces(opp44):
    L = corn.symmetric_cornerations_from_coloring(opp44, 1)[0]
    report = corn.face_patterns(L)
    assert report.configuration == 1
    covered = {f for f, letter in report.per_face.items() if letter == "A"}
    dec = corn.circuits_of(L)
    assert {c.edges for c in dec.circuits} == {
        frozenset(face_boundary_edges(opp44, f)) for f in covered
    }


def test_circuit_roundtrips(torus44, theta4):
    for m in (torus44, theta4):
        L = straight_corneration(m)
        dec = corn.circuits_of(L)
        assert corn.corneration_of(m, dec) == L
        dec2 = corn.circuits_of(corn.corneration_of(m, dec))
        assert {c.edges for c in dec2.circuits} == {c.edges for c in dec.circuits}


def test_two_circuits_of_parallel_edges(theta4):
    L = straight_corneration(theta4)
    dec = corn.circuits_of(L)
    assert sorted(len(c) for c in dec.circuits) == [2, 2]


def test_corneration_of_rejects_bad_input(torus44):
    from cornmaps.core import Circuit

    L = straight_corneration(torus44)
    dec = corn.circuits_of(L)
    tiny = Circuit(darts=(dec.circuits[0].darts[0],), edges=frozenset([0]))
    with pytest.raises(CircuitTooShort):
        corn.corneration_of(torus44, [tiny])
    with pytest.raises(ValueError):
        corn.corneration_of(torus44, dec.circuits[:-1])  # misses edges


# -- complement --------------------------------------------------------------


def test_j_complement(opp44):
    L = corn.symmetric_cornerations_from_coloring(opp44, 1)[0]
    K = corn.j_complement(L)
    assert len(K) == len(L)
    assert corn.j_complement(K) == L
    assert K.corners.isdisjoint(L.corners)


def test_complement_alternation_period(opp44):
    # around a vertex, walking from a corner to the other corner on its
    # dart alternates between L and the complement with period |j|_q
    for j in (1, 3):
        L = corn.symmetric_cornerations_from_coloring(opp44, j)[0]
        in_l = {c.key() for c in L.corners}
        all_corners = {c.key(): c for c in corn.all_j_corners(opp44, j)}
        v0 = cells(opp44, "vertex")[0].id
        rotation = rotation_at_vertex(opp44, v0)
        q = len(rotation)
        pos = {d: i for i, d in enumerate(rotation)}
        start = next(c for c in L.corners if c.vertex == v0)
        period = order_mod(j, q)
        current = start.key()
        for step in range(1, 2 * period + 1):
            v, darts = current
            i = min(pos[darts[0]], pos[darts[1]], key=lambda p: p)
            # the next corner of width j sharing the "far" dart
            a, b = sorted((pos[darts[0]], pos[darts[1]]))
            lead = b if (b - a) % q == j else a
            nxt = (lead, (lead + j) % q)
            current = (
                v0,
                tuple(sorted((rotation[nxt[0]], rotation[nxt[1]]))),
            )
            inside = current in in_l
            assert inside == (step % 2 == 0)
        assert current == start.key()


def test_straight_has_no_complement(torus44):
    with pytest.raises(StraightHasNoComplement):
        corn.j_complement(straight_corneration(torus44))


# -- local cornerations -------------------------------------------------------


def test_local_corneration_straight(torus44):
    L = straight_corneration(torus44)
    v0 = cells(torus44, "vertex")[0].id
    lc = corn.local_corneration(L, v0)
    assert lc.straight
    assert lc.classification == corn.OTHER_LOCAL


def test_local_corneration_standard_odd(opp44):
    L = corn.symmetric_cornerations_from_coloring(opp44, 1)[0]
    for vcell in cells(opp44, "vertex"):
        lc = corn.local_corneration(L, vcell.id)
        assert lc.classification == corn.STANDARD_ODD


def test_local_corneration_standard_even(opp44):
    records = corn.enumerate_transitive_cornerations(opp44, 2)
    transitive = [r for r in records if r.transitive]
    assert transitive
    for r in transitive[:2]:
        for vcell in cells(opp44, "vertex"):
            lc = corn.local_corneration(r.corneration, vcell.id)
            assert lc.classification == corn.STANDARD_EVEN


# -- face patterns ------------------------------------------------------------


def test_face_patterns_configurations(opp44):
    L = corn.symmetric_cornerations_from_coloring(opp44, 1)[0]
    assert corn.face_patterns(L).configuration == 1
    moved = corn.transfer(L, petrie(opp44))
    assert corn.face_patterns(moved).configuration == 2


def test_face_patterns_antiprism():
    m, L = build_antiprism_corneration(4)
    report = corn.face_patterns(L)
    assert report.configuration == 3
    assert report.letters == frozenset({"C", "E"})


def test_face_patterns_grid():
    m, L = build_torus_grid_corneration(4, 5)
    report = corn.face_patterns(L)
    assert report.configuration == 4
    assert report.letters == frozenset({"D"})


def test_face_patterns_rejects_wider(torus44):
    with pytest.raises(NotWedgeCorneration):
        corn.face_patterns(straight_corneration(torus44))


# -- enumeration ---------------------------------------------------------------


def test_enumerate_straight_unique(torus44):
    A = automorphism_group(torus44)
    out = corn.enumerate_invariant_cornerations(torus44, A, 2)
    assert len(out) == 1
    assert out[0].width == 2


def test_enumerate_odd_valence_is_empty(theta3):
    out = corn.enumerate_invariant_cornerations(theta3, trivial_group(theta3), 1)
    assert out == []


def test_enumerate_trivial_group_theta4(theta4):
    out = corn.enumerate_invariant_cornerations(theta4, trivial_group(theta4), 1)
    assert len(out) == 4
    out2 = corn.enumerate_invariant_cornerations(theta4, trivial_group(theta4), 2)
    assert len(out2) == 1


def test_enumerate_rejects_foreign_group(torus44, opp44):
    A = automorphism_group(opp44)
    with pytest.raises(GroupNotSubgroup):
        corn.enumerate_invariant_cornerations(torus44, A, 1)


def test_enumerate_rejects_non_symmetry(torus44):
    n = torus44.n_flags
    # a transposition of two flags is almost never a map symmetry
    perm = list(range(n))
    perm[0], perm[1] = perm[1], perm[0]
    bogus = SymGroup(torus44, (tuple(range(n)), tuple(perm)))
    with pytest.raises(GroupNotSubgroup):
        corn.enumerate_invariant_cornerations(torus44, bogus, 1)


def test_corner_orbits(opp44):
    L = corn.symmetric_cornerations_from_coloring(opp44, 1)[0]
    A = automorphism_group(opp44)
    G = corn.corneration_stabilizer(A, L)
    assert len(corn.corner_orbits(G, L.corners)) == 1
    lone = SymGroup(opp44, (tuple(range(opp44.n_flags)),))
    singletons = corn.corner_orbits(lone, L.corners)
    assert len(singletons) == len(L)
    with pytest.raises(ValueError):
        corn.corner_orbits(A, list(L.corners)[:3])


def test_transitive_records(torus44):
    records = corn.enumerate_transitive_cornerations(torus44, 1)
    assert records
    for r in records:
        report = corn.is_corneration(torus44, r.corneration.corners)
        assert report.ok
        if r.symmetric:
            assert r.transitive
    symmetric = [r for r in records if r.symmetric]
    assert len(symmetric) == 4


# -- symmetric construction -----------------------------------------------------


def test_symmetric_construction_torus(torus44):
    LR, LG = corn.symmetric_cornerations_from_coloring(torus44, 1)
    assert LR.width == LG.width == 1
    assert LR.corners.isdisjoint(LG.corners)
    for L in (LR, LG):
        assert corn.face_patterns(L).configuration == 1


def test_symmetric_construction_rejects_even(torus44):
    with pytest.raises(WidthOutOfRange):
        corn.symmetric_cornerations_from_coloring(torus44, 2)


def test_symmetric_construction_rejects_odd_valence(cube):
    with pytest.raises(WidthOutOfRange):
        corn.symmetric_cornerations_from_coloring(cube, 1)


def test_symmetric_construction_needs_half_reflexible(antiprism4):
    with pytest.raises(NoHalfReflexiveGroup):
        corn.symmetric_cornerations_from_coloring(antiprism4, 1)


# -- transfer --------------------------------------------------------------------


def test_transfer_to_petrie_preserves_widths(opp44):
    for j in (1, 3):
        L = corn.symmetric_cornerations_from_coloring(opp44, j)[0]
        moved = corn.transfer(L, petrie(opp44))
        assert moved.width == j
        assert {c.key() for c in moved.corners} == {c.key() for c in L.corners}
        back = corn.transfer(moved, petrie(petrie(opp44)))
        assert {c.key() for c in back.corners} == {c.key() for c in L.corners}


def test_transfer_through_hole(opp44):
    L = corn.symmetric_cornerations_from_coloring(opp44, 3)[0]
    result = hole(opp44, 3)
    assert len(result.maps) == 1
    (moved,) = corn.transfer(L, result)
    assert moved.width == 1
    assert len(moved) == len(L)


def test_transfer_width_mismatch(opp44):
    L = corn.symmetric_cornerations_from_coloring(opp44, 1)[0]
    with pytest.raises(WidthMismatch):
        corn.transfer(L, hole(opp44, 3))


def test_transfer_disconnected_hole(torus44):
    L = straight_corneration(torus44)
    result = hole(torus44, 2)
    moved = corn.transfer(L, result)
    assert len(moved) == len(result.maps)
    for component, ml in zip(result.maps, moved):
        assert corn.is_corneration(component, ml.corners).ok
        assert ml.width == 1
