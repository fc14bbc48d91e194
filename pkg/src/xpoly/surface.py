"""Surface recognition for small simplicial 2-complexes.

A complex is a surface when every edge lies in at most two triangles and
every vertex link is a single cycle (interior vertex) or a single simple
path (boundary vertex).  Connected surfaces are then named by Euler
characteristic, orientability and the number of boundary circles.
"""

from __future__ import annotations

import enum
from collections import Counter, deque
from dataclasses import dataclass
from itertools import combinations

from xpoly.complex import TwoComplex, components, link
from xpoly.cycles import Edge, Triangle
from xpoly.errors import EmptyComplex, ModulusMismatch, NotPseudomanifold
from xpoly.skeleton import SkeletonSpec


class Classification(str, enum.Enum):
    SPHERE = "Sphere"
    TORUS = "Torus"
    KLEIN_BOTTLE = "KleinBottle"
    PROJECTIVE_PLANE = "ProjectivePlane"
    MOEBIUS_STRIP = "MoebiusStrip"
    ANNULUS = "Annulus"
    DISK = "Disk"
    OTHER = "Other"


@dataclass(frozen=True)
class ComponentCertificate:
    vertices: int
    edges: int
    faces: int
    is_pseudomanifold: bool
    is_closed: bool
    links_ok: bool
    euler_characteristic: int
    orientable: bool | None
    boundary_components: int | None
    genus: int | None
    classification: Classification

    @property
    def is_surface(self) -> bool:
        return self.is_pseudomanifold and self.links_ok

    def label(self) -> str:
        if self.classification is not Classification.OTHER:
            return self.classification.value
        kind = {True: "orientable", False: "nonorientable", None: "non-surface"}[self.orientable]
        return f"Other(chi={self.euler_characteristic}, {kind}, boundary={self.boundary_components})"


@dataclass(frozen=True)
class SurfaceCertificate:
    components: tuple[ComponentCertificate, ...]

    @property
    def euler_characteristic(self) -> int:
        return sum(c.euler_characteristic for c in self.components)

    @property
    def is_surface(self) -> bool:
        return all(c.is_surface for c in self.components)

    @property
    def is_pseudomanifold(self) -> bool:
        return all(c.is_pseudomanifold for c in self.components)

    @property
    def is_closed(self) -> bool:
        return all(c.is_closed for c in self.components)

    @property
    def orientable(self) -> bool | None:
        values = [c.orientable for c in self.components]
        if None in values:
            return None
        return all(values)

    @property
    def boundary_components(self) -> int | None:
        values = [c.boundary_components for c in self.components]
        if None in values:
            return None
        return sum(values)

    def class_counts(self) -> Counter:
        return Counter(c.label() for c in self.components)

    @property
    def classification(self) -> str:
        """The common label of all components, or ``Mixed``."""
        labels = set(self.class_counts())
        return labels.pop() if len(labels) == 1 else "Mixed"

    def satisfies(self, policy) -> bool:
        return all(c.is_surface and c.classification in policy for c in self.components)


def _classify(chi: int, orientable: bool, boundary: int) -> tuple[int | None, Classification]:
    if orientable:
        twice_genus = 2 - chi - boundary
        if twice_genus < 0 or twice_genus % 2:
            return None, Classification.OTHER
        genus = twice_genus // 2
        named = {
            (0, 0): Classification.SPHERE,
            (1, 0): Classification.TORUS,
            (0, 1): Classification.DISK,
            (0, 2): Classification.ANNULUS,
        }
    else:
        genus = 2 - chi - boundary
        if genus < 1:
            return None, Classification.OTHER
        named = {
            (1, 0): Classification.PROJECTIVE_PLANE,
            (2, 0): Classification.KLEIN_BOTTLE,
            (1, 1): Classification.MOEBIUS_STRIP,
        }
    return genus, named.get((genus, boundary), Classification.OTHER)


def _link_ok(c: TwoComplex, v: int) -> bool:
    lk = link(c, v)
    adj = lk.adjacency()
    if any(len(nbrs) > 2 for nbrs in adj.values()):
        return False
    start = min(adj)
    seen = {start}
    todo = [start]
    while todo:
        for y in adj[todo.pop()]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    if len(seen) != len(adj):
        return False
    # connected with max degree 2: a cycle when edges == nodes, a path when one fewer
    return len(lk.edges) in (len(adj), len(adj) - 1)


def _direction(t: Triangle, u: int, v: int) -> int:
    x, y, z = t
    return 1 if (u, v) in ((x, y), (y, z), (z, x)) else -1


def orient(c: TwoComplex) -> dict[Triangle, int] | None:
    """Coherent orientation by propagation across degree-2 edges.

    Returns a sign per triangle (+1 means the sorted vertex order) or ``None``
    when propagation hits a contradiction.  Edges of degree other than two
    impose nothing, so callers must check the pseudomanifold property first.
    """
    signs: dict[Triangle, int] = {}
    for seed in sorted(c.triangles):
        if seed in signs:
            continue
        signs[seed] = 1
        queue = deque([seed])
        while queue:
            t = queue.popleft()
            for e in combinations(t, 2):
                incident = c.edges[e]
                if len(incident) != 2:
                    continue
                other = incident[0] if incident[1] == t else incident[1]
                # neighbours must run through the shared edge in opposite directions
                want = -signs[t] * _direction(t, *e) * _direction(other, *e)
                have = signs.get(other)
                if have is None:
                    signs[other] = want
                    queue.append(other)
                elif have != want:
                    return None
    return signs


def boundary_cycles(c: TwoComplex) -> list[list[Edge]]:
    """Split the degree-1 edges into closed edge cycles.

    Every vertex meets an even number of degree-1 edges in a pseudomanifold,
    so the split always succeeds; at a vertex with four or more the walk
    takes the smallest unused neighbour.
    """
    if any(len(ts) > 2 for ts in c.edges.values()):
        raise NotPseudomanifold("some edge lies in more than two triangles")
    free = {e for e, ts in c.edges.items() if len(ts) == 1}
    adj: dict[int, set[int]] = {}
    for x, y in free:
        adj.setdefault(x, set()).add(y)
        adj.setdefault(y, set()).add(x)
    out = []
    while free:
        start_edge = min(free)
        start, cur = start_edge
        free.discard(start_edge)
        adj[start].discard(cur)
        adj[cur].discard(start)
        cycle = [start_edge]
        while cur != start:
            nxt = start if start in adj[cur] else min(adj[cur])
            e = (min(cur, nxt), max(cur, nxt))
            free.discard(e)
            adj[cur].discard(nxt)
            adj[nxt].discard(cur)
            cycle.append(e)
            cur = nxt
        out.append(cycle)
    return out


def _certify_component(c: TwoComplex) -> ComponentCertificate:
    v, e, f = c.f_vector
    chi = v - e + f
    degrees = [len(ts) for ts in c.edges.values()]
    pseudo = max(degrees) <= 2
    closed = pseudo and min(degrees) == 2
    links_ok = all(_link_ok(c, x) for x in sorted(c.vertices))
    boundary = len(boundary_cycles(c)) if pseudo else None
    orientable = genus = None
    cls = Classification.OTHER
    if pseudo and links_ok:
        orientable = orient(c) is not None
        genus, cls = _classify(chi, orientable, boundary)
    return ComponentCertificate(
        vertices=v,
        edges=e,
        faces=f,
        is_pseudomanifold=pseudo,
        is_closed=closed,
        links_ok=links_ok,
        euler_characteristic=chi,
        orientable=orientable,
        boundary_components=boundary,
        genus=genus,
        classification=cls,
    )


def certify(c: TwoComplex) -> SurfaceCertificate:
    if not c.triangles:
        raise EmptyComplex("cannot certify an empty complex")
    return SurfaceCertificate(tuple(_certify_component(part) for part in components(c)))


def is_subcomplex_of_skeleton(c: TwoComplex, spec: SkeletonSpec) -> bool:
    if c.n != spec.modulus:
        raise ModulusMismatch(f"complex lives mod {c.n}, {spec.describe()} needs mod {spec.modulus}")
    return all(spec.contains(t) for t in c.triangles)
