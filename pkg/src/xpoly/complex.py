"""Explicit 2-complexes assembled from unions of difference cycles."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from xpoly.cycles import DifferenceCycle, Edge, Triangle, check_modulus, edge_class, expand
from xpoly.errors import DuplicateCycle, UnknownVertex


@dataclass(frozen=True)
class TwoComplex:
    """A pure 2-dimensional complex on vertex set Z_n.

    ``cycles`` is empty for restrictions (such as connected components) that
    are not themselves unions of whole orbits.
    """

    n: int
    triangles: frozenset[Triangle]
    cycles: frozenset[DifferenceCycle] = frozenset()
    edges: dict[Edge, tuple[Triangle, ...]] = field(init=False, repr=False, compare=False)
    vertices: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        incidence: dict[Edge, list[Triangle]] = defaultdict(list)
        for t in sorted(self.triangles):
            for e in combinations(t, 2):
                incidence[e].append(t)
        object.__setattr__(self, "edges", {e: tuple(ts) for e, ts in sorted(incidence.items())})
        object.__setattr__(self, "vertices", frozenset(v for t in self.triangles for v in t))

    @classmethod
    def from_triangles(cls, n: int, triangles: Iterable[Triangle]) -> "TwoComplex":
        return cls(n, frozenset(tuple(sorted(t)) for t in triangles))

    def __len__(self) -> int:
        return len(self.triangles)

    @property
    def f_vector(self) -> tuple[int, int, int]:
        return len(self.vertices), len(self.edges), len(self.triangles)

    def edge_degree(self, e: Edge) -> int:
        return len(self.edges.get(tuple(sorted(e)), ()))

    def edge_class(self, e: Edge) -> int:
        return edge_class(e, self.n)

    def sorted_cycles(self) -> list[DifferenceCycle]:
        return sorted(self.cycles)


@dataclass(frozen=True)
class VertexLink:
    vertex: int
    nodes: frozenset[int]
    edges: frozenset[Edge]

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {x: [] for x in sorted(self.nodes)}
        for x, y in sorted(self.edges):
            adj[x].append(y)
            adj[y].append(x)
        return adj


def build(n: int, cycles: Iterable[DifferenceCycle]) -> TwoComplex:
    cycles = list(cycles)
    check_modulus(cycles, n)
    if len(set(cycles)) != len(cycles):
        dupes = sorted({str(dc) for dc in cycles if cycles.count(dc) > 1})
        raise DuplicateCycle(f"cycles listed more than once: {', '.join(dupes)}")
    triangles: set[Triangle] = set()
    for dc in cycles:
        triangles |= expand(dc)
    return TwoComplex(n, frozenset(triangles), frozenset(cycles))


def link(c: TwoComplex, v: int) -> VertexLink:
    if v not in c.vertices:
        raise UnknownVertex(v)
    edges = set()
    for t in c.triangles:
        if v in t:
            x, y = (u for u in t if u != v)
            edges.add((x, y))
    return VertexLink(v, frozenset(u for e in edges for u in e), frozenset(edges))


def components(c: TwoComplex) -> list[TwoComplex]:
    """Connected components, ordered by their smallest vertex.

    Triangles are joined when they share a vertex, so a bowtie counts as one
    component; the surface checks reject it later.
    """
    parent = {v: v for v in c.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for x, y, z in c.triangles:
        for u in (y, z):
            ru, rx = find(u), find(x)
            if ru != rx:
                parent[max(ru, rx)] = min(ru, rx)

    groups: dict[int, list[Triangle]] = defaultdict(list)
    for t in c.triangles:
        groups[find(t[0])].append(t)
    out = []
    for root in sorted(groups):
        tris = frozenset(groups[root])
        out.append(TwoComplex(c.n, tris, c.cycles if len(groups) == 1 else frozenset()))
    return out
