"""Split graphs on the corners of a corneration.

The split graph of a corneration L and a disjoint corner set K is the
simple graph whose vertices are the corners of L, with an old edge for
each pair of L-corners sharing exactly one map edge and a new edge for
each K-corner joining the L-corners covering its two darts.  Old and new
pairs that coincide are merged into one edge with both provenances kept.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .core import DART, EDGE, FlagMap, cells, uniform_valence
from .cornerations import (
    Corner,
    Corneration,
    all_j_corners,
    corner_image_key,
    corner_of_wedge,
    is_transitive_on_corners,
    j_complement,
)
from .errors import (
    KIntersectsL,
    KNotInvariant,
    NotTransitive,
    WidthOutOfRange,
)
from .symmetry import SymGroup

OLD = "old"
NEW = "new"


@dataclass(frozen=True)
class EdgeProvenance:
    """Where a split-graph edge comes from: shared map edges, K-corners."""

    old: tuple
    new: tuple

    @property
    def kinds(self) -> tuple[str, ...]:
        out = []
        if self.old:
            out.append(OLD)
        if self.new:
            out.append(NEW)
        return tuple(out)


@dataclass(frozen=True, eq=False)
class SplitGraph:
    map: FlagMap
    base: Corneration
    vertices: tuple  # corner keys, sorted
    edges: dict  # frozenset of two corner keys -> EdgeProvenance

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def adjacency(self) -> dict:
        adj = {v: set() for v in self.vertices}
        for pair in self.edges:
            a, b = tuple(pair)
            adj[a].add(b)
            adj[b].add(a)
        return adj

    def degrees(self) -> dict:
        return {v: len(nbrs) for v, nbrs in self.adjacency().items()}

    def regular_valence(self) -> Optional[int]:
        degs = set(self.degrees().values())
        return degs.pop() if len(degs) == 1 else None

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency()
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.vertices)


def split(L: Corneration, K: Iterable[Corner]) -> SplitGraph:
    """The split graph of ``L`` and a disjoint corner set ``K``."""
    m = L.map
    K = list(K)
    l_keys = {c.key() for c in L.corners}
    for k in K:
        if k.key() in l_keys:
            raise KIntersectsL(f"{k} belongs to the corneration")

    edge_of = m.cell_index(EDGE)
    edges: dict = {}

    def other_edge(c: Corner, e: int) -> int:
        e1, e2 = (edge_of[d] for d in c.darts)
        return e2 if e1 == e else e1

    def add(a: Corner, b: Corner, kind: str, token):
        pair = frozenset((a.key(), b.key()))
        old, new = edges.get(pair, ((), ()))
        if kind == OLD:
            old = old + (token,)
        else:
            new = new + (token,)
        edges[pair] = (old, new)

    dart_of = m.cell_index(DART)
    for ecell in cells(m, EDGE):
        e = ecell.id
        c1 = L.corner_of_dart(dart_of[e])
        c2 = L.corner_of_dart(dart_of[m.r0[e]])
        if c1.key() == c2.key():
            raise AssertionError("one corner covered both darts of an edge")
        if other_edge(c1, e) != other_edge(c2, e):
            add(c1, c2, OLD, e)

    for k in K:
        d1, d2 = k.darts
        c1 = L.corner_of_dart(d1)
        c2 = L.corner_of_dart(d2)
        if c1.key() == c2.key():
            raise AssertionError("a corner outside L covered by a single L-corner")
        add(c1, c2, NEW, k.key())

    packed = {
        pair: EdgeProvenance(old, new) for pair, (old, new) in edges.items()
    }
    return SplitGraph(
        map=m,
        base=L,
        vertices=tuple(sorted(l_keys)),
        edges=packed,
    )


def _uniform_width(L: Corneration) -> tuple[int, int]:
    j = L.width
    q = uniform_valence(L.map)
    if j is None or q is None:
        raise WidthOutOfRange("split constructions need a uniform corneration")
    return j, q


def graph_A(L: Corneration) -> SplitGraph:
    """Split against the width complement of ``L`` (widths below q/2)."""
    j, q = _uniform_width(L)
    if 2 * j >= q:
        raise WidthOutOfRange("the complement construction needs a width below q/2")
    return split(L, j_complement(L).corners)


def graph_B(L: Corneration) -> SplitGraph:
    """Split against the set of all wedges (widths from 2 up to q/2)."""
    j, q = _uniform_width(L)
    if not 2 <= j <= q // 2:
        raise WidthOutOfRange("the wedge construction needs 2 <= width <= q/2")
    return split(L, all_j_corners(L.map, 1))


def _boundary_wedge_corners(L: Corneration, interior: bool) -> list[Corner]:
    m = L.map
    wedge_ids = set()
    for c in L.corners:
        chosen = c.interior_boundary_wedges if interior else c.exterior_boundary_wedges
        wedge_ids.update(chosen)
    return [corner_of_wedge(m, w) for w in sorted(wedge_ids)]


def graph_Ci(L: Corneration) -> SplitGraph:
    """Split against the interior boundary wedges of the corners of ``L``."""
    j, q = _uniform_width(L)
    if not 2 <= j < q / 2:
        raise WidthOutOfRange("the interior construction needs 2 <= width < q/2")
    return split(L, _boundary_wedge_corners(L, interior=True))


def graph_Cx(L: Corneration) -> SplitGraph:
    """Split against the exterior boundary wedges of the corners of ``L``."""
    j, q = _uniform_width(L)
    if not 2 <= j < q / 2:
        raise WidthOutOfRange("the exterior construction needs 2 <= width < q/2")
    return split(L, _boundary_wedge_corners(L, interior=False))


def is_locally_connected(S: SplitGraph) -> tuple[bool, Optional[int]]:
    """Whether the induced subgraph on the corners at each vertex connects.

    Returns ``(True, None)`` or ``(False, first failing vertex)``.
    """
    adj = S.adjacency()
    by_vertex: dict = {}
    for key in S.vertices:
        by_vertex.setdefault(key[0], []).append(key)
    for v in sorted(by_vertex):
        local = set(by_vertex[v])
        start = by_vertex[v][0]
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in local and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != local:
            return False, v
    return True, None


def verify_vertex_transitive(S: SplitGraph, G: SymGroup, K: Iterable[Corner]) -> bool:
    """Witness that ``G`` acts on the split graph vertex-transitively.

    Checks that ``G`` preserves the corneration and ``K`` setwise, that
    its induced action maps split-graph edges to edges, and that it is
    transitive on the vertices.  This certifies vertex-transitivity
    without computing the full automorphism group of the graph.
    """
    m = S.map
    L = S.base
    if not is_transitive_on_corners(G, L):
        raise NotTransitive("the group is not transitive on the corneration")
    k_keys = {c.key() for c in K}
    by_key = {c.key(): c for c in L.corners}
    k_by_key = {c.key(): c for c in K}
    for g in G.generators:
        for c in L.corners:
            if corner_image_key(m, g, c) not in by_key:
                raise NotTransitive("the group does not preserve the corneration")
        for c in K:
            if corner_image_key(m, g, c) not in k_keys:
                raise KNotInvariant("the new-corner set is not group-invariant")
        for pair in S.edges:
            a, b = tuple(pair)
            image = frozenset(
                (corner_image_key(m, g, by_key[a]), corner_image_key(m, g, by_key[b]))
            )
            if image not in S.edges:
                return False
    return True


@dataclass(frozen=True)
class CubicEntry:
    construction: str
    measured_valence: Optional[int]
    predicted_valence: int
    cubic: bool

    @property
    def matches(self) -> bool:
        return self.measured_valence == self.predicted_valence


@dataclass(frozen=True)
class CubicReport:
    entries: tuple[CubicEntry, ...]

    def cubic_constructions(self) -> tuple[str, ...]:
        return tuple(e.construction for e in self.entries if e.cubic)

    def all_match(self) -> bool:
        return all(e.matches for e in self.entries)


def predicted_new_degrees(q: int, j: int) -> dict:
    """New-edge degree of each construction for a transitive width-j L.

    Derived from the standard local cornerations.  The complement
    construction joins a corner to the corners 2j positions away, merging
    when ``4j = q``.  For odd widths the interior and exterior wedge sets
    are disjoint and contribute two neighbors each (the exterior pair
    merging at ``j = q/2 - 1``); for even widths they overlap in the
    wedges tying the consecutive corner pairs together, which caps the
    all-wedge degree one below the sum of the two counts.
    """
    out = {}
    if 2 * j < q:
        out["A"] = 1 if 4 * j == q else 2
    if 2 <= j <= q // 2:
        if 2 * j == q:
            out["B"] = 1 if q == 4 else 2
        elif j % 2 == 1:
            out["B"] = 3 if (q % 4 == 0 and j == q // 2 - 1) else 4
        else:
            out["B"] = 2 if j == 2 else 3
    if 2 <= j < q / 2:
        if j % 2 == 1:
            out["Ci"] = 2
            out["Cx"] = 1 if j == q // 2 - 1 else 2
        else:
            out["Ci"] = 1 if j == 2 else 2
            out["Cx"] = 2
    return out


def old_degree_deficit(L: Corneration) -> int:
    """How many old edges each corner loses to fully shared corner pairs.

    An old edge requires the two corners covering a map edge to share
    exactly that edge; when they share both of their edges (a pair of
    parallel edges spanned the same way at both ends) no old edge forms.
    For a transitive corneration the count is the same at every corner.
    """
    m = L.map
    edge_of = m.cell_index(EDGE)
    dart_of = m.cell_index(DART)
    c = min(L.corners, key=Corner.key)
    deficit = 0
    for d in c.darts:
        partner = L.corner_of_dart(dart_of[m.r0[d]])
        if {edge_of[x] for x in partner.darts} == {edge_of[x] for x in c.darts}:
            deficit += 1
    return deficit


def predicted_valences(q: int, j: int, deficit: int = 0) -> dict:
    """Expected split-graph valences: two old edges less any deficit,
    plus the construction's new-edge degree."""
    return {
        kind: 2 - deficit + new
        for kind, new in predicted_new_degrees(q, j).items()
    }


def predicted_local_connectivity(q: int, j: int) -> dict:
    """Expected local connectivity of the four constructions."""
    import math

    out = {}
    if 2 * j < q:
        out["A"] = math.gcd(q, j) == 1
    if 2 <= j <= q // 2:
        out["B"] = True
    if 2 <= j < q / 2:
        if j % 2 == 1:
            out["Ci"] = math.gcd(q, j - 1) == 2
            out["Cx"] = math.gcd(q, j + 1) == 2
        else:
            out["Ci"] = math.gcd(q, j - 2) == 4
            out["Cx"] = math.gcd(q, j + 2) == 4
    return out


_BUILDERS = {"A": graph_A, "B": graph_B, "Ci": graph_Ci, "Cx": graph_Cx}


def build_construction(L: Corneration, kind: str) -> SplitGraph:
    if kind not in _BUILDERS:
        raise ValueError(f"unknown construction {kind!r}; expected one of A, B, Ci, Cx")
    return _BUILDERS[kind](L)


def cubic_filter(m: FlagMap, L: Corneration) -> CubicReport:
    """Which of the four constructions are cubic for this corneration.

    Builds every construction defined at the corneration's width and
    compares the measured valence with the predicted one (accounting for
    parallel-edge deficits in the old edges).
    """
    j, q = _uniform_width(L)
    predictions = predicted_valences(q, j, old_degree_deficit(L))
    entries = []
    for kind in ("A", "B", "Ci", "Cx"):
        if kind not in predictions:
            continue
        S = build_construction(L, kind)
        measured = S.regular_valence()
        predicted = predictions[kind]
        entries.append(
            CubicEntry(kind, measured, predicted, measured == 3)
        )
    return CubicReport(tuple(entries))


def _as_networkx(S: SplitGraph):
    import networkx as nx

    pos = {key: i for i, key in enumerate(S.vertices)}
    g = nx.Graph()
    g.add_nodes_from(range(len(S.vertices)))
    for pair in S.edges:
        a, b = tuple(pair)
        g.add_edge(pos[a], pos[b])
    return g


def to_graph6(S: SplitGraph) -> str:
    """graph6 encoding of the split graph with canonically sorted vertices."""
    import networkx as nx

    return nx.to_graph6_bytes(_as_networkx(S), header=False).decode("ascii").strip()


def to_sparse6(S: SplitGraph) -> str:
    """sparse6 encoding, for catalogs preferring the sparse format."""
    import networkx as nx

    return nx.to_sparse6_bytes(_as_networkx(S), header=False).decode("ascii").strip()
