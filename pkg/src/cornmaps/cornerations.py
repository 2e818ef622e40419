"""Corners, cornerations, their circuits, local analysis and enumeration.

A corner is an unordered pair of darts at a common vertex on distinct
edges; a corneration is a set of corners covering every dart exactly once.
Corners are canonically encoded as ``(vertex id, sorted dart pair)`` and
compared by that encoding alone; everything else is derived data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Union

from .core import (
    DART,
    EDGE,
    FACE,
    VERTEX,
    Circuit,
    FlagMap,
    cells,
    face_boundary_wedges,
    other_dart,
    uniform_valence,
    valence,
    wedges_at_vertex,
    rotation_at_vertex,
)
from .errors import (
    CircuitTooShort,
    GroupNotSubgroup,
    NoHalfReflexiveGroup,
    NonUniformValence,
    NotWedgeCorneration,
    StraightCornerHasNoSide,
    StraightHasNoComplement,
    WidthMismatch,
    WidthOutOfRange,
)
from .operators import OperatorResult, petrie
from .symmetry import (
    SymGroup,
    automorphism_group,
    flag_orbit_index,
    is_face_reflexible,
    orbits_on,
    subgroups_up_to_index,
)

CONVEX = "Convex"
INFLECTION = "Inflection"
NOT_ALIGNED = "NotAligned"

STANDARD_ODD = "StandardOdd"
STANDARD_EVEN = "StandardEven"
OTHER_LOCAL = "Other"


@dataclass(frozen=True)
class Corner:
    """A j-corner: two darts at one vertex, ``j`` wedges on its short side.

    ``interior_wedges`` is empty exactly for straight corners (both sides
    of the vertex rotation have the same length, so no side is canonical);
    ``boundary_wedges`` are the up-to-four wedges containing either dart.
    """

    vertex: int
    darts: tuple[int, int]
    width: int = field(compare=False)
    straight: bool = field(compare=False)
    interior_wedges: frozenset = field(compare=False)
    boundary_wedges: frozenset = field(compare=False)

    @property
    def interior_boundary_wedges(self) -> frozenset:
        return self.boundary_wedges & self.interior_wedges

    @property
    def exterior_boundary_wedges(self) -> frozenset:
        return self.boundary_wedges - self.interior_wedges

    def key(self) -> tuple:
        return (self.vertex, self.darts)

    def __str__(self):
        return f"corner(v={self.vertex}, darts={self.darts}, j={self.width})"


def corner_from_darts(m: FlagMap, darts: Sequence[int]) -> Corner:
    """The corner of ``m`` spanned by two darts at a common vertex."""
    d1, d2 = darts
    if d1 == d2:
        raise ValueError("a corner needs two distinct darts")
    vertex_of = m.cell_index(VERTEX)
    edge_of = m.cell_index(EDGE)
    v = vertex_of[d1]
    if vertex_of[d2] != v:
        raise ValueError(f"darts {d1} and {d2} do not share a vertex")
    if edge_of[d1] == edge_of[d2]:
        raise ValueError(f"darts {d1} and {d2} lie on the same edge")
    rotation = rotation_at_vertex(m, v)
    wedges = wedges_at_vertex(m, v)
    q = len(rotation)
    pos = {d: i for i, d in enumerate(rotation)}
    p1, p2 = pos[d1], pos[d2]
    s = (p2 - p1) % q
    width = min(s, q - s)
    straight = 2 * s == q
    if straight:
        interior = frozenset()
    else:
        if s <= q - s:
            start, count = p1, s
        else:
            start, count = p2, q - s
        interior = frozenset(wedges[(start + t) % q] for t in range(count))
    boundary = frozenset(
        wedges[i % q] for i in (p1 - 1, p1, p2 - 1, p2)
    )
    return Corner(
        vertex=v,
        darts=tuple(sorted((d1, d2))),
        width=width,
        straight=straight,
        interior_wedges=interior,
        boundary_wedges=boundary,
    )


def corner_of_wedge(m: FlagMap, wedge_id: int) -> Corner:
    """The 1-corner spanned by the two flags of a wedge cell."""
    dart_of = m.cell_index(DART)
    return corner_from_darts(m, (dart_of[wedge_id], dart_of[m.r1[wedge_id]]))


def corner_edges(m: FlagMap, c: Corner) -> tuple[int, int]:
    edge_of = m.cell_index(EDGE)
    return tuple(sorted(edge_of[d] for d in c.darts))


def all_j_corners(m: FlagMap, j: int) -> list[Corner]:
    """Every corner of width exactly ``j``, in canonical order."""
    if j < 1:
        raise WidthOutOfRange(f"corner width must be at least 1, got {j}")
    out = []
    seen = set()
    for vcell in cells(m, VERTEX):
        v = vcell.id
        q = valence(m, v)
        if j > q // 2:
            raise WidthOutOfRange(
                f"width {j} exceeds half the valence {q} at vertex {v}"
            )
        rotation = rotation_at_vertex(m, v)
        for i in range(q):
            pair = tuple(sorted((rotation[i], rotation[(i + j) % q])))
            if pair in seen:
                continue
            seen.add(pair)
            out.append(corner_from_darts(m, pair))
    out.sort(key=Corner.key)
    return out


def _interior_flag_on_dart(m: FlagMap, c: Corner, dart: int) -> int:
    """The flag of ``c``'s interior-boundary wedge lying on ``dart``."""
    if c.straight:
        raise StraightCornerHasNoSide(f"{c} has no interior side")
    if dart not in c.darts:
        raise ValueError(f"dart {dart} is not part of {c}")
    dart_of = m.cell_index(DART)
    for w in c.interior_boundary_wedges:
        for f in (w, m.r1[w]):
            if dart_of[f] == dart:
                return f
    raise AssertionError("interior boundary wedge misses its own dart")


def alignment(m: FlagMap, c1: Corner, c2: Corner) -> str:
    """Convex, Inflection or NotAligned for two corners of equal width.

    Convex means the interior sides of the two corners agree along a
    shared edge; straight corners have no side and never align.  Corners
    sharing two edges only align if both edges agree on the verdict.
    """
    if c1.width != c2.width:
        raise ValueError("alignment is defined for corners of equal width")
    if c1.straight or c2.straight or c1.vertex == c2.vertex:
        return NOT_ALIGNED
    edge_of = m.cell_index(EDGE)
    shared = {edge_of[d] for d in c1.darts} & {edge_of[d] for d in c2.darts}
    if not shared:
        return NOT_ALIGNED
    verdicts = set()
    for e in shared:
        d1 = next(d for d in c1.darts if edge_of[d] == e)
        d2 = next(d for d in c2.darts if edge_of[d] == e)
        f1 = _interior_flag_on_dart(m, c1, d1)
        f2 = _interior_flag_on_dart(m, c2, d2)
        verdicts.add(CONVEX if m.r0[f1] == f2 else INFLECTION)
    if len(verdicts) == 1:
        return verdicts.pop()
    return NOT_ALIGNED


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    witness: Optional[int]
    reason: Optional[str]


def is_corneration(m: FlagMap, corners: Iterable[Corner]) -> CoverReport:
    """Whether the corners cover every dart of ``m`` exactly once."""
    count = {c.id: 0 for c in cells(m, DART)}
    for corner in corners:
        for d in corner.darts:
            count[d] += 1
    for d in sorted(count):
        if count[d] == 0:
            return CoverReport(False, d, "uncovered dart")
        if count[d] > 1:
            return CoverReport(False, d, f"dart covered {count[d]} times")
    return CoverReport(True, None, None)


@dataclass(frozen=True, eq=False)
class Corneration:
    """A dart-exact set of corners of one map."""

    map: FlagMap
    corners: frozenset
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @classmethod
    def from_corners(cls, m: FlagMap, corners: Iterable[Corner]) -> "Corneration":
        return cls(m, frozenset(corners))

    def __eq__(self, other):
        return (
            isinstance(other, Corneration)
            and self.map == other.map
            and self.corners == other.corners
        )

    def __hash__(self):
        return hash((self.map.n_flags, frozenset(c.key() for c in self.corners)))

    @property
    def width(self) -> Optional[int]:
        """The uniform width, or None for a mixed corneration."""
        widths = {c.width for c in self.corners}
        return widths.pop() if len(widths) == 1 else None

    def sorted_corners(self) -> list[Corner]:
        return sorted(self.corners, key=Corner.key)

    def key(self) -> tuple:
        return tuple(c.key() for c in self.sorted_corners())

    def corner_of_dart(self, d: int) -> Corner:
        cache = self._cache
        if "by_dart" not in cache:
            by = {}
            for c in self.corners:
                for dart in c.darts:
                    by[dart] = c
            cache["by_dart"] = by
        return cache["by_dart"][d]

    def in_wedges(self) -> frozenset:
        """Wedge ids of the corners, defined for width-1 cornerations."""
        if self.width != 1:
            raise NotWedgeCorneration("in-wedges exist only for width-1 cornerations")
        out = set()
        for c in self.corners:
            (w,) = c.interior_wedges
            out.add(w)
        return frozenset(out)

    def __len__(self):
        return len(self.corners)

    def __iter__(self):
        return iter(self.sorted_corners())

    def __str__(self):
        j = self.width
        jtxt = "mixed" if j is None else str(j)
        return f"corneration<{len(self.corners)} corners, width {jtxt}>"


@dataclass(frozen=True)
class CircuitDecomposition:
    """A partition of the edge set into circuits."""

    circuits: tuple[Circuit, ...]

    def edge_sets(self) -> list[frozenset]:
        return [c.edges for c in self.circuits]

    def __len__(self):
        return len(self.circuits)


def circuits_of(L: Corneration) -> CircuitDecomposition:
    """The circuit decomposition traced by following corners dart to dart.

    From a dart, the corner covering it selects the continuing edge; the
    walk continues from that edge's far end.  Every circuit is traced by
    exactly two opposite dart cycles which are merged by edge set.
    """
    m = L.map
    report = is_corneration(m, L.corners)
    if not report.ok:
        raise ValueError(f"not a corneration: {report.reason} at dart {report.witness}")
    edge_of = m.cell_index(EDGE)
    darts = [c.id for c in cells(m, DART)]

    def step(d: int) -> int:
        c = L.corner_of_dart(d)
        a, b = c.darts
        return other_dart(m, b if d == a else a)

    remaining = set(darts)
    by_edges = {}
    while remaining:
        start = min(remaining)
        cycle = [start]
        d = step(start)
        while d != start:
            cycle.append(d)
            d = step(d)
        remaining.difference_update(cycle)
        edges = frozenset(edge_of[d] for d in cycle)
        if len(edges) != len(cycle):
            raise AssertionError("corner chain revisited an edge")
        by_edges.setdefault(edges, []).append(tuple(cycle))
    circuits = []
    for edges, traversals in sorted(by_edges.items(), key=lambda kv: min(kv[1][0])):
        best = min(traversals, key=min)
        k = best.index(min(best))
        canonical = best[k:] + best[:k]
        circuits.append(Circuit(darts=canonical, edges=edges))
    circuits.sort(key=lambda c: c.darts[0])
    return CircuitDecomposition(tuple(circuits))


def corneration_of(m: FlagMap, decomposition) -> Corneration:
    """The corners read off consecutive edge-vertex-edge triples of circuits.

    Accepts a :class:`CircuitDecomposition` or an iterable of circuits.
    The circuits must be closed walks with pairwise distinct edges whose
    edge sets partition the edges of ``m``.
    """
    if isinstance(decomposition, CircuitDecomposition):
        circuits = decomposition.circuits
    else:
        circuits = tuple(decomposition)
    vertex_of = m.cell_index(VERTEX)
    edge_of = m.cell_index(EDGE)
    covered = set()
    corners = []
    for circuit in circuits:
        ds = circuit.darts
        k = len(ds)
        if k < 2:
            raise CircuitTooShort("a circuit in a loopless graph has at least 2 edges")
        edges = [edge_of[d] for d in ds]
        if len(set(edges)) != k:
            raise ValueError("circuit repeats an edge")
        for e in edges:
            if e in covered:
                raise ValueError(f"edge {e} appears in two circuits")
            covered.add(e)
        for i in range(k):
            d_here = ds[i]
            d_next_far = ds[(i + 1) % k]
            d_next_near = other_dart(m, d_next_far)
            if vertex_of[d_next_near] != vertex_of[d_here]:
                raise ValueError("consecutive circuit edges do not share a vertex")
            corners.append(corner_from_darts(m, (d_here, d_next_near)))
    if covered != {c.id for c in cells(m, EDGE)}:
        raise ValueError("circuits do not cover every edge")
    L = Corneration.from_corners(m, corners)
    report = is_corneration(m, L.corners)
    if not report.ok:
        raise AssertionError(f"circuit corners are not a corneration: {report.reason}")
    return L


def j_complement(L: Corneration) -> Corneration:
    """All corners of the same width not in ``L``; again a corneration."""
    j = L.width
    if j is None:
        raise WidthMismatch("the complement needs a uniform corneration")
    q = uniform_valence(L.map)
    if q is None:
        raise NonUniformValence("the complement needs a uniform valence")
    if 2 * j == q:
        raise StraightHasNoComplement("straight cornerations have no width complement")
    chosen = {c.key() for c in L.corners}
    complement = [c for c in all_j_corners(L.map, j) if c.key() not in chosen]
    K = Corneration.from_corners(L.map, complement)
    report = is_corneration(L.map, K.corners)
    if not report.ok:
        raise AssertionError("width complement failed to cover darts")
    return K


@dataclass(frozen=True)
class LocalCorneration:
    """The corners of a corneration at one vertex, up to renumbering.

    ``pairs`` lists the corner dart positions in the canonical rotation.
    ``classification`` names the standard local corneration the pairs are
    equivalent to (over all 2q numberings), if any; straight local
    cornerations are reported as Other with the flag set.
    """

    vertex: int
    pairs: tuple[tuple[int, int], ...]
    classification: str
    straight: bool


def local_corneration(L: Corneration, v: int) -> LocalCorneration:
    m = L.map
    j = L.width
    if j is None:
        raise WidthMismatch("local classification needs a uniform corneration")
    rotation = rotation_at_vertex(m, v)
    q = len(rotation)
    pos = {d: i for i, d in enumerate(rotation)}
    pairs = []
    for c in L.corners:
        if c.vertex == v:
            pairs.append(tuple(sorted((pos[c.darts[0]], pos[c.darts[1]]))))
    pairs = tuple(sorted(pairs))
    if 2 * j == q:
        return LocalCorneration(v, pairs, OTHER_LOCAL, True)

    odd_target = set(range(0, q, 2))
    even_target = {i for i in range(q) if i % 4 in (0, 3)}
    classification = OTHER_LOCAL
    for s in range(q):
        for direction in (1, -1):
            bases = set()
            for a, b in pairs:
                na = (direction * (a - s)) % q
                nb = (direction * (b - s)) % q
                base = na if (nb - na) % q == j else nb
                bases.add(base)
            if bases == odd_target:
                classification = STANDARD_ODD
            elif q % 4 == 0 and bases == even_target:
                classification = STANDARD_EVEN
    return LocalCorneration(v, pairs, classification, False)


# ---------------------------------------------------------------------------
# face patterns of wedge cornerations
# ---------------------------------------------------------------------------

PATTERN_TILES = {
    "A": (True,),
    "E": (False,),
    "B": (True, False),
    "C": (True, True, False),
    "D": (True, True, False, False),
}


@dataclass(frozen=True)
class FacePatternReport:
    per_face: dict
    configuration: Optional[int]

    @property
    def letters(self) -> frozenset:
        return frozenset(self.per_face.values())


def _matches_tile(seq: Sequence[bool], tile: Sequence[bool]) -> bool:
    t = len(tile)
    if len(seq) % t != 0:
        return False
    return any(
        all(seq[i] == tile[(i + r) % t] for i in range(len(seq))) for r in range(t)
    )


def face_patterns(L: Corneration) -> FacePatternReport:
    """Per-face in-wedge patterns of a width-1 corneration.

    Patterns: A all wedges in, B alternating, C two in one out, D two in
    two out, E all out; anything else is reported as "Other".  The global
    configuration (1) bipartite A/E, (2) all B, (3) C with E, (4) all D
    follows the classification of faces meeting a transitive corneration.
    """
    m = L.map
    if L.width != 1:
        raise NotWedgeCorneration("face patterns are defined for width-1 cornerations")
    inw = L.in_wedges()
    per_face = {}
    for face in cells(m, FACE):
        seq = [w in inw for w in face_boundary_wedges(m, face.id)]
        if all(seq):
            letter = "A"
        elif not any(seq):
            letter = "E"
        elif _matches_tile(seq, PATTERN_TILES["B"]):
            letter = "B"
        elif _matches_tile(seq, PATTERN_TILES["C"]):
            letter = "C"
        elif _matches_tile(seq, PATTERN_TILES["D"]):
            letter = "D"
        else:
            letter = "Other"
        per_face[face.id] = letter

    letters = set(per_face.values())
    face_of = m.cell_index(FACE)
    neighbors = {c.id: set() for c in cells(m, FACE)}
    for e in cells(m, EDGE):
        f = e.id
        a, b = face_of[f], face_of[m.r2[f]]
        neighbors[a].add(b)
        neighbors[b].add(a)

    configuration = None
    if letters == {"A", "E"}:
        proper = all(
            per_face[a] != per_face[b] for a in neighbors for b in neighbors[a]
        )
        if proper:
            configuration = 1
    elif letters == {"B"}:
        configuration = 2
    elif letters == {"C", "E"}:
        e_ok = all(
            per_face[b] == "C"
            for a in neighbors
            if per_face[a] == "E"
            for b in neighbors[a]
        )
        c_ok = all(
            {per_face[b] for b in neighbors[a]} == {"C", "E"}
            for a in neighbors
            if per_face[a] == "C"
        )
        if e_ok and c_ok:
            configuration = 3
    elif letters == {"D"}:
        configuration = 4
    return FacePatternReport(per_face, configuration)


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _require_symmetry_group(m: FlagMap, H: SymGroup) -> None:
    if H.map is not m and H.map != m:
        raise GroupNotSubgroup("the group belongs to a different map")
    if "is_sym" not in H._cache:
        H._cache["is_sym"] = H.is_map_symmetry_group()
    if not H._cache["is_sym"]:
        raise GroupNotSubgroup("elements do not commute with the involutions")


def corner_image_key(m: FlagMap, g, c: Corner) -> tuple:
    vertex_of = m.cell_index(VERTEX)
    dart_of = m.cell_index(DART)
    v = vertex_of[g[c.vertex]]
    d1, d2 = (dart_of[g[d]] for d in c.darts)
    return (v, tuple(sorted((d1, d2))))


def enumerate_invariant_cornerations(
    m: FlagMap, H: SymGroup, j: int
) -> list[Corneration]:
    """All j-uniform cornerations invariant under ``H``.

    Exact cover on orbits: rows are H-orbits of j-corners, columns are
    H-orbits of darts; a row covers each column a constant number of
    times, and a corneration is a row selection covering every column
    exactly once.
    """
    _require_symmetry_group(m, H)
    q = uniform_valence(m)
    if q is None:
        raise NonUniformValence("corneration enumeration needs a uniform valence")
    if not 1 <= j <= q // 2:
        raise WidthOutOfRange(f"width must satisfy 1 <= j <= {q // 2}, got {j}")
    if q % 2 != 0:
        return []

    corners = all_j_corners(m, j)
    key_to_index = {c.key(): i for i, c in enumerate(corners)}
    darts = [c.id for c in cells(m, DART)]
    dart_pos = {d: i for i, d in enumerate(darts)}

    gen_corner_perms = []
    gen_dart_perms = []
    dart_of = m.cell_index(DART)
    for g in H.generators:
        gen_corner_perms.append(
            tuple(key_to_index[corner_image_key(m, g, c)] for c in corners)
        )
        gen_dart_perms.append(tuple(dart_pos[dart_of[g[d]]] for d in darts))

    corner_orbits = _int_orbits(len(corners), gen_corner_perms)
    dart_orbits = _int_orbits(len(darts), gen_dart_perms)
    dart_orbit_of = [0] * len(darts)
    for oi, orbit in enumerate(dart_orbits):
        for d in orbit:
            dart_orbit_of[d] = oi

    rows = []
    for orbit in corner_orbits:
        cover = {}
        ok = True
        for ci in orbit:
            for d in corners[ci].darts:
                col = dart_orbit_of[dart_pos[d]]
                cover[col] = cover.get(col, 0) + 1
                if cover[col] > len(dart_orbits[col]):
                    ok = False
        if not ok:
            continue
        cols = set()
        for col, total in cover.items():
            multiplicity, rem = divmod(total, len(dart_orbits[col]))
            if rem != 0:
                raise AssertionError("orbit coverage is not constant on a dart orbit")
            if multiplicity > 1:
                ok = False
                break
            cols.add(col)
        if ok:
            rows.append((tuple(orbit), frozenset(cols)))

    solutions: list[tuple[int, ...]] = []
    _exact_cover(rows, len(dart_orbits), solutions)
    out = []
    for selection in solutions:
        chosen = []
        for ri in selection:
            chosen.extend(corners[ci] for ci in rows[ri][0])
        out.append(Corneration.from_corners(m, chosen))
    out.sort(key=Corneration.key)
    return out


def _int_orbits(n: int, perms) -> list[list[int]]:
    from .core import orbits as _orbits

    if not perms:
        return [[i] for i in range(n)]
    return _orbits(n, perms)


def _exact_cover(rows, n_cols, solutions, partial=None, covered=None, available=None):
    """All exact covers; rows are (payload, frozenset of columns)."""
    if partial is None:
        partial = []
        covered = set()
        available = list(range(len(rows)))
    if len(covered) == n_cols:
        solutions.append(tuple(sorted(partial)))
        return
    candidates_per_col = {}
    for col in range(n_cols):
        if col in covered:
            continue
        candidates_per_col[col] = [ri for ri in available if col in rows[ri][1]]
        if not candidates_per_col[col]:
            return
    col = min(candidates_per_col, key=lambda c: (len(candidates_per_col[c]), c))
    for ri in candidates_per_col[col]:
        cols = rows[ri][1]
        _exact_cover(
            rows,
            n_cols,
            solutions,
            partial + [ri],
            covered | cols,
            [rj for rj in available if not (rows[rj][1] & cols)],
        )


def corner_orbits(G: SymGroup, corners: Iterable[Corner]) -> list[list[Corner]]:
    """Orbit partition of a corner set under the induced action of ``G``."""
    pool = {c.key(): c for c in corners}
    m = G.map
    remaining = set(pool)
    out = []
    while remaining:
        start = min(remaining)
        orbit = {start}
        frontier = [start]
        while frontier:
            k = frontier.pop()
            for g in G.generators:
                img = corner_image_key(m, g, pool[k])
                if img not in pool:
                    raise ValueError("the corner set is not invariant under the group")
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        remaining -= orbit
        out.append([pool[k] for k in sorted(orbit)])
    return out


def corneration_stabilizer(A: SymGroup, L: Corneration) -> SymGroup:
    """The setwise stabilizer of ``L`` inside the group ``A``."""
    m = L.map
    target = {c.key() for c in L.corners}
    keep = []
    for g in A.elements:
        if all(corner_image_key(m, g, c) in target for c in L.corners):
            keep.append(g)
    return SymGroup(m, tuple(keep))


def is_transitive_on_corners(G: SymGroup, L: Corneration) -> bool:
    m = L.map
    keys = sorted(c.key() for c in L.corners)
    if not keys:
        return False
    reached = {keys[0]}
    frontier = [keys[0]]
    by_key = {c.key(): c for c in L.corners}
    while frontier:
        k = frontier.pop()
        c = by_key[k]
        for g in G.generators:
            img = corner_image_key(m, g, c)
            if img not in reached:
                reached.add(img)
                frontier.append(img)
    return len(reached) == len(keys)


@dataclass(frozen=True, eq=False)
class TransitiveCornerationRecord:
    corneration: Corneration
    aut: SymGroup
    transitive: bool
    symmetric: bool


def enumerate_transitive_cornerations(
    m: FlagMap, j: int, index_bound: int = 4, element_bound: int = 20000
) -> list[TransitiveCornerationRecord]:
    """Every j-corneration invariant under a small-index subgroup.

    Sweeps all subgroups of the symmetry group of index at most
    ``index_bound``; a transitive corneration is invariant under its own
    stabilizer, whose index is at most 4, so the sweep finds all of them.
    Each distinct corneration is returned once with its setwise stabilizer
    and transitivity flags (transitive on its corners, transitive on all
    darts).
    """
    A = automorphism_group(m)
    found: dict = {}
    for H in subgroups_up_to_index(A, index_bound, element_bound):
        for L in enumerate_invariant_cornerations(m, H, j):
            found.setdefault(L.key(), L)
    records = []
    for key in sorted(found):
        L = found[key]
        aut_L = corneration_stabilizer(A, L)
        transitive = is_transitive_on_corners(aut_L, L)
        symmetric = transitive and len(orbits_on(aut_L, DART)) == 1
        records.append(TransitiveCornerationRecord(L, aut_L, transitive, symmetric))
    return records


# ---------------------------------------------------------------------------
# symmetric cornerations from half-reflexible colorings
# ---------------------------------------------------------------------------


def symmetric_cornerations_from_coloring(m: FlagMap, j: int):
    """The two symmetric j-cornerations from a half-reflexible flag coloring.

    A half-reflexible group (of the map or of its Petrie dual) has two
    flag orbits; faces are monochromatic and adjacent faces differ.  For
    odd ``j`` the two interior boundary wedges of any j-corner share a
    color, and collecting the corners of each color yields two invariant,
    dart-transitively preserved cornerations.
    """
    q = uniform_valence(m)
    if q is None:
        raise NonUniformValence("the construction needs a uniform valence")
    if q % 2 != 0:
        raise WidthOutOfRange("odd valence admits no corneration")
    if j % 2 == 0 or not 1 <= j < q / 2:
        raise WidthOutOfRange(
            f"symmetric cornerations need an odd width below {q // 2}, got {j}"
        )
    G = is_face_reflexible(m)
    if G is None:
        pm = petrie(m)
        Gp = is_face_reflexible(pm)
        if Gp is None:
            raise NoHalfReflexiveGroup(
                "neither the map nor its Petrie dual is face-reflexible"
            )
        G = SymGroup(m, Gp.elements)
    orbit_of = flag_orbit_index(G)
    classes = sorted(set(orbit_of))
    if len(classes) != 2:
        raise AssertionError("a half-reflexible group must have two flag orbits")
    first = classes[0]

    piles = {True: [], False: []}
    for c in all_j_corners(m, j):
        colors = set()
        for w in c.interior_boundary_wedges:
            colors.add(orbit_of[w])
            colors.add(orbit_of[m.r1[w]])
        if len(colors) != 1:
            raise AssertionError("interior boundary wedges of an odd corner differ in color")
        piles[colors.pop() == first].append(c)
    out = []
    for flag_value in (True, False):
        L = Corneration.from_corners(m, piles[flag_value])
        report = is_corneration(m, L.corners)
        if not report.ok:
            raise AssertionError(f"color class is not a corneration: {report.reason}")
        out.append(L)
    return tuple(out)


# ---------------------------------------------------------------------------
# transfer along operators
# ---------------------------------------------------------------------------


def transfer(L: Corneration, target: Union[FlagMap, OperatorResult]):
    """Reinterpret a corneration on a Petrie dual or on hole components.

    A Petrie target shares darts and vertices, so the corner set carries
    over unchanged (widths included).  A hole result of width j turns each
    j-corner into a 1-corner of the component containing its vertex; the
    result is one corneration per component.
    """
    m = L.map
    if isinstance(target, FlagMap):
        if target.r1 != m.r1 or target.r2 != m.r2:
            raise ValueError("target map does not share darts with the corneration")
        corners = [corner_from_darts(target, c.darts) for c in L.corners]
        moved = Corneration.from_corners(target, corners)
        report = is_corneration(target, moved.corners)
        if not report.ok:
            raise AssertionError("petrie transfer broke the dart cover")
        return moved

    result = target
    if result.source != m:
        raise ValueError("the operator result belongs to a different map")
    if L.width != result.width:
        raise WidthMismatch(
            f"corneration width {L.width} does not match operator width {result.width}"
        )
    corr = result.correspondence
    piles: dict[int, list[Corner]] = {i: [] for i in range(len(result.maps))}
    for c in L.corners:
        images = []
        for d in c.darts:
            comp_a, fa = corr[d]
            comp_b, fb = corr[m.r2[d]]
            if comp_a != comp_b:
                raise AssertionError("a dart was split across components")
            images.append((comp_a, min(fa, fb)))
        comps = {comp for comp, _ in images}
        if len(comps) != 1:
            raise AssertionError("a corner was split across components")
        comp = comps.pop()
        new_corner = corner_from_darts(result.maps[comp], tuple(d for _, d in images))
        if new_corner.width != 1:
            raise AssertionError("hole transfer must produce wedges")
        piles[comp].append(new_corner)
    out = []
    for ci, component in enumerate(result.maps):
        moved = Corneration.from_corners(component, piles[ci])
        report = is_corneration(component, moved.corners)
        if not report.ok:
            raise AssertionError("hole transfer broke the dart cover")
        out.append(moved)
    return out
