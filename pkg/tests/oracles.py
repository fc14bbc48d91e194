"""Brute-force reference computations.

Nothing here imports xpoly; each function works on plain tuples and sets so
the tests compare two independent routes.
"""

from itertools import combinations, product


def orbit(n, a, b):
    return frozenset(tuple(sorted((i % n, (i + a) % n, (i + a + b) % n))) for i in range(n))


def all_orbits(n):
    """Every distinct triangle orbit mod n, found from all gap compositions."""
    return {orbit(n, a, b) for a in range(1, n - 1) for b in range(1, n - a)}


def antipodal_free_triples(k):
    n = 2 * k
    return {t for t in combinations(range(n), 3)
            if all((y - x) % n != k for x, y in combinations(t, 2))}


def edge_degrees(triangles):
    deg = {}
    for t in triangles:
        for e in combinations(sorted(t), 2):
            deg[e] = deg.get(e, 0) + 1
    return deg


def _constraints(triangles):
    """Pairs of triangles sharing a degree-2 edge, with the relative sign required."""
    tris = sorted(tuple(sorted(t)) for t in triangles)
    where = {}
    for idx, t in enumerate(tris):
        for e in combinations(t, 2):
            where.setdefault(e, []).append(idx)

    def forward(t, u, v):
        x, y, z = t
        return (u, v) in ((x, y), (y, z), (z, x))

    out = []
    for (u, v), idxs in where.items():
        if len(idxs) == 2:
            i, j = idxs
            same_way = forward(tris[i], u, v) == forward(tris[j], u, v)
            # same traversal needs opposite signs
            out.append((i, j, -1 if same_way else 1))
    return tris, out


def orientable_by_enumeration(triangles):
    """Try all 2^F orientation choices.  Only for small F."""
    tris, cons = _constraints(triangles)
    for signs in product((1, -1), repeat=len(tris)):
        if all(signs[i] * signs[j] == r for i, j, r in cons):
            return True
    return False


def _constraint_groups(n_tris, cons):
    adj = {i: [] for i in range(n_tris)}
    for i, j, r in cons:
        adj[i].append(j)
        adj[j].append(i)
    seen, groups = set(), []
    for root in range(n_tris):
        if root in seen:
            continue
        order, frontier = [], [root]
        seen.add(root)
        while frontier:
            i = frontier.pop(0)
            order.append(i)
            for j in sorted(adj[i]):
                if j not in seen:
                    seen.add(j)
                    frontier.append(j)
        groups.append(order)
    return groups


def orientable_by_backtracking(triangles):
    """Complete search over orientation assignments.

    Independent groups of constrained triangles are searched separately;
    inside a group, both signs are tried for every triangle in turn and
    every constraint to an already-assigned triangle is checked.
    """
    tris, cons = _constraints(triangles)
    rel = {}
    for i, j, r in cons:
        rel.setdefault(i, []).append((j, r))
        rel.setdefault(j, []).append((i, r))

    def search(order):
        signs = {}

        def go(pos):
            if pos == len(order):
                return True
            t = order[pos]
            for s in (1, -1):
                if all(signs[u] * s == r for u, r in rel.get(t, ()) if u in signs):
                    signs[t] = s
                    if go(pos + 1):
                        return True
                    del signs[t]
            return False

        return go(0)

    return all(search(order) for order in _constraint_groups(len(tris), cons))


def orientable_by_gf2(triangles):
    """Solve s_i + s_j = c_ij over GF(2) by elimination on bitmasks."""
    tris, cons = _constraints(triangles)
    pivots = {}  # leading bit -> (row mask, rhs)
    for i, j, r in cons:
        row, rhs = (1 << i) | (1 << j), 0 if r == 1 else 1
        while row:
            lead = row.bit_length() - 1
            if lead not in pivots:
                pivots[lead] = (row, rhs)
                break
            prow, prhs = pivots[lead]
            row, rhs = row ^ prow, rhs ^ prhs
        else:
            if rhs:
                return False
    return True


def connected_vertex_classes(triangles):
    """Vertex sets of the components, by repeated merging."""
    groups = [set(t) for t in triangles]
    merged = True
    while merged:
        merged = False
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                if groups[i] & groups[j]:
                    groups[i] |= groups.pop(j)
                    merged = True
                    break
            if merged:
                break
    return sorted(sorted(g) for g in groups)
