"""Generate the gated 162-edge valence-12 test map from scratch.

The map is reflexible, so its flags form a regular orbit of its symmetry
group and the three side involutions act by right multiplication.  The
group is the quotient of the full (2, 3, 12) triangle group by the
relation closing the zigzag paths after 9 steps; a plain coset
enumeration over the trivial subgroup yields the regular action, which is
written out as an ordinary map file.

Run from the repository root::

    python3 tests/make_census_map.py tests/data/map_3_12_9.map

The file is not committed: the batch suite treats the example as gated.
"""

import sys
from pathlib import Path


def coset_enumeration(n_gens, relators):
    """Regular action of the presented group, all generators involutions.

    Define-and-close enumeration: every live coset traces every relator,
    defining missing images on the way and identifying the walk's end
    with its start; coincidences propagate through a union-find.
    """
    neighbors = [[None] * n_gens]
    labels = [0]

    def find(c):
        while labels[c] != c:
            labels[c] = labels[labels[c]]
            c = labels[c]
        return c

    def define(c, g):
        neighbors.append([None] * n_gens)
        labels.append(len(labels))
        new = len(labels) - 1
        neighbors[c][g] = new
        neighbors[new][g] = c
        return new

    def unify(a, b):
        queue = [(a, b)]
        while queue:
            x, y = queue.pop()
            x, y = find(x), find(y)
            if x == y:
                continue
            if x > y:
                x, y = y, x
            labels[y] = x
            for g in range(n_gens):
                other = neighbors[y][g]
                if other is None:
                    continue
                mine = neighbors[x][g]
                if mine is None:
                    neighbors[x][g] = other
                    neighbors[find(other)][g] = x
                else:
                    queue.append((mine, other))

    def follow(c, g):
        c = find(c)
        nxt = neighbors[c][g]
        if nxt is None:
            nxt = define(c, g)
        return find(nxt)

    cursor = 0
    while cursor < len(labels):
        if find(cursor) != cursor:
            cursor += 1
            continue
        for relator in relators:
            start = find(cursor)
            c = start
            for g in relator:
                c = follow(c, g)
            unify(c, find(start))
            if find(cursor) != cursor:
                break
        cursor += 1

    alive = sorted(c for c in range(len(labels)) if find(c) == c)
    index = {c: i for i, c in enumerate(alive)}
    rows = []
    for c in alive:
        row = []
        for g in range(n_gens):
            img = neighbors[c][g]
            if img is None:
                raise AssertionError("enumeration left an undefined image")
            row.append(index[find(img)])
        rows.append(row)
    return rows


def main():
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("tests/data/map_3_12_9.map")
    r0, r1, r2 = 0, 1, 2
    relators = [
        (r0, r0),
        (r1, r1),
        (r2, r2),
        (r0, r2) * 2,
        (r0, r1) * 3,
        (r1, r2) * 12,
        (r0, r1, r2) * 9,
    ]
    rows = coset_enumeration(3, relators)
    n = len(rows)
    print(f"group order (= flags): {n}")
    perms = [tuple(rows[c][g] for c in range(n)) for g in range(3)]

    sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))
    from cornmaps.core import FlagMap, cells, euler_and_genus, uniform_valence, face_length
    from cornmaps.fileio import write_map

    m = FlagMap(n, perms[0], perms[1], perms[2], name="triangular_q12_zigzag9")
    m.require_valid()
    V = len(cells(m, "vertex"))
    E = len(cells(m, "edge"))
    F = len(cells(m, "face"))
    q = uniform_valence(m)
    p = {face_length(m, f.id) for f in cells(m, "face")}
    eg = euler_and_genus(m)
    print(f"V={V} E={E} F={F} valence={q} face length={p} chi={eg.chi} orientable={eg.orientable}")
    assert (V, E, F, q, p) == (27, 162, 108, 12, {3})
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(write_map(m), encoding="utf-8")
    print(f"wrote {target}")


if __name__ == "__main__":
    main()
