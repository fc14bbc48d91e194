"""Partitions of skeleton triangle sets into cyclically symmetric surfaces.

Two constructions live here.  ``cross_partition`` groups the difference
cycles of the cross polytope into mirror pairs and boundary-matched achiral
pairs; ``simplex_partition`` groups those of the simplex into mirror pairs and
achiral singletons.  Every block is rebuilt and certified before it is
accepted, and the union of blocks is checked against a brute-force listing of
the skeleton.  ``search_partition`` is an exact-cover fallback and an
independent cross-check for small k.
"""

from __future__ import annotations

import logging
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from xpoly.complex import TwoComplex, build
from xpoly.cycles import DifferenceCycle, Triangle, mirror
from xpoly.errors import (
    ConstructionFailure,
    CertificationFailure,
    CoverageGap,
    CoverageOverlap,
    IneligibleK,
    NoPartitionFound,
    SearchTooLarge,
    SkeletonViolation,
)
from xpoly.skeleton import SkeletonKind, SkeletonSpec
from xpoly.surface import Classification, SurfaceCertificate, certify
from xpoly.symmetry import SymmetryAttestation, attest

log = logging.getLogger(__name__)

C = Classification
ORIENTABLE_GENUS_AT_MOST_1 = frozenset({C.SPHERE, C.TORUS})
EULER_GENUS_AT_MOST_2 = frozenset({C.SPHERE, C.TORUS, C.PROJECTIVE_PLANE, C.KLEIN_BOTTLE})
TORI_AND_MOEBIUS = frozenset({C.TORUS, C.MOEBIUS_STRIP})
MOEBIUS_ONLY = frozenset({C.MOEBIUS_STRIP})

POLICIES = {
    "orientable": ORIENTABLE_GENUS_AT_MOST_1,
    "euler": EULER_GENUS_AT_MOST_2,
    "tori-moebius": TORI_AND_MOEBIUS,
    "moebius": MOEBIUS_ONLY,
}

SEARCH_MAX_CYCLES = 64

_CLOSED = frozenset({C.SPHERE, C.TORUS, C.PROJECTIVE_PLANE, C.KLEIN_BOTTLE})


def policy_name(policy) -> str:
    for name, members in POLICIES.items():
        if members == policy:
            return name
    return ",".join(sorted(c.value for c in policy))


def default_policy(spec: SkeletonSpec) -> frozenset:
    if spec.kind is SkeletonKind.CROSS:
        return ORIENTABLE_GENUS_AT_MOST_1
    return TORI_AND_MOEBIUS


@dataclass(frozen=True)
class PartitionBlock:
    cycles: tuple[DifferenceCycle, ...]
    complex: TwoComplex
    certificate: SurfaceCertificate
    symmetry: SymmetryAttestation

    def __str__(self) -> str:
        return " ".join(str(dc) for dc in self.cycles)

    @property
    def triangle_count(self) -> int:
        return len(self.complex.triangles)


@dataclass(frozen=True)
class CoverageProof:
    expected: int
    covered: int
    missing: int
    overlapping: int
    outside: int

    @property
    def exact(self) -> bool:
        return self.expected == self.covered and not (self.missing or self.overlapping or self.outside)


@dataclass(frozen=True)
class Partition:
    spec: SkeletonSpec
    blocks: tuple[PartitionBlock, ...]
    coverage: CoverageProof
    policy: frozenset
    method: str

    @property
    def triangle_count(self) -> int:
        return sum(b.triangle_count for b in self.blocks)

    def blocks_by_class(self) -> Counter:
        return Counter(b.certificate.classification for b in self.blocks)

    def groupings(self) -> list[tuple[DifferenceCycle, ...]]:
        return [b.cycles for b in self.blocks]


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("XPOLY_THREADS", "1")))
    except ValueError:
        return 1


def make_block(n: int, cycles: Iterable[DifferenceCycle]) -> PartitionBlock:
    cycles = tuple(sorted(cycles))
    c = build(n, cycles)
    return PartitionBlock(cycles, c, certify(c), attest(c))


def make_blocks(n: int, groupings: Sequence[Iterable[DifferenceCycle]]) -> list[PartitionBlock]:
    """Certify groupings, in parallel up to ``XPOLY_THREADS``; order is kept."""
    threads = _threads()
    if threads == 1 or len(groupings) < 2:
        return [make_block(n, g) for g in groupings]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda g: make_block(n, g), groupings))


def _sort_groupings(groupings) -> list[tuple[DifferenceCycle, ...]]:
    return sorted((tuple(sorted(g)) for g in groupings), key=lambda g: g)


def coverage_proof(spec: SkeletonSpec, blocks: Sequence[PartitionBlock]) -> CoverageProof:
    """Compare block triangles against every 3-subset the skeleton admits.

    The expected set is listed directly from vertex triples, not from
    difference cycles.
    """
    n = spec.modulus
    expected = {t for t in combinations(range(n), 3) if spec.contains(t)}
    counts: Counter[Triangle] = Counter()
    for b in blocks:
        counts.update(b.complex.triangles)
    covered = set(counts)
    return CoverageProof(
        expected=len(expected),
        covered=sum(counts.values()),
        missing=len(expected - covered),
        overlapping=sum(1 for m in counts.values() if m > 1),
        outside=len(covered - expected),
    )


def _achiral(n: int, a: int) -> DifferenceCycle:
    return DifferenceCycle(n, (a, a, n - 2 * a))


def cross_groupings(k: int) -> list[tuple[DifferenceCycle, ...]]:
    """Mirror pairs plus the achiral pairs {(a:a:2k-2a), (k-a:k-a:2a)}, a < k/2.

    The two achiral members share the boundary edge class 2a = -2(k-a) mod 2k.
    For a = k/3 the partner is the short orbit (2k/3 : 2k/3 : 2k/3).
    """
    spec = SkeletonSpec(SkeletonKind.CROSS, k)
    n = spec.modulus
    groups = []
    for dc in spec.cycles():
        if not dc.is_achiral and dc < mirror(dc):
            groups.append((dc, mirror(dc)))
    for a in range(1, k):
        if 2 * a < k:
            groups.append((_achiral(n, a), _achiral(n, k - a)))
    return _sort_groupings(groups)


def simplex_groupings(k: int) -> list[tuple[DifferenceCycle, ...]]:
    spec = SkeletonSpec(SkeletonKind.SIMPLEX, k)
    groups = []
    for dc in spec.cycles():
        if dc.is_achiral:
            groups.append((dc,))
        elif dc < mirror(dc):
            groups.append((dc, mirror(dc)))
    return _sort_groupings(groups)


def failure_reason(block: PartitionBlock, policy) -> str | None:
    cert = block.certificate
    if cert.satisfies(policy):
        return None
    c = block.complex
    reasons = []
    thick = sorted({c.edge_class(e) for e, ts in c.edges.items() if len(ts) > 2})
    if thick:
        reasons.append(f"edges of gap class {', '.join(map(str, thick))} lie in more than two triangles")
    open_classes = sorted({c.edge_class(e) for e, ts in c.edges.items() if len(ts) == 1})
    if open_classes and all(cl in _CLOSED for cl in policy):
        reasons.append(
            f"not closed (degree-1 edges of gap class {', '.join(map(str, open_classes))})"
        )
    if not all(comp.links_ok for comp in cert.components):
        reasons.append("some vertex link is not a single cycle or path")
    if not reasons:
        allowed = ", ".join(sorted(p.value for p in policy))
        reasons.append(f"classified {cert.classification}, allowed: {allowed}")
    return "; ".join(reasons)


def _finish(spec, blocks, policy, method) -> Partition:
    proof = coverage_proof(spec, blocks)
    if not proof.exact:
        raise ConstructionFailure(f"{spec.describe()}: coverage check failed: {proof}")
    return Partition(spec, tuple(blocks), proof, frozenset(policy), method)


def cross_partition(k: int, policy=ORIENTABLE_GENUS_AT_MOST_1, search: bool = True) -> Partition:
    """Partition the triangles of the k-dimensional cross polytope.

    Every connected component of every block must be classified within
    ``policy``.  If the closed-form grouping has a rejected block and the
    cycle list is small enough, an exact-cover search is tried before
    giving up with ``ConstructionFailure``.
    """
    spec = SkeletonSpec(SkeletonKind.CROSS, k)
    policy = frozenset(policy)
    blocks = make_blocks(spec.modulus, cross_groupings(k))
    failures = [(i, b, failure_reason(b, policy)) for i, b in enumerate(blocks)]
    failures = [f for f in failures if f[2] is not None]
    if not failures:
        return _finish(spec, blocks, policy, "closed-form")

    detail = "; ".join(f"block {i + 1} {b}: {why}" for i, b, why in failures[:3])
    if len(failures) > 3:
        detail += f"; and {len(failures) - 3} more"
    log.info("closed form rejected for k=%d: %s", k, detail)
    if not search:
        raise ConstructionFailure(f"{spec.describe()}: closed form rejected ({detail})")
    try:
        return search_partition(spec, policy)
    except ConstructionFailure as exc:
        raise ConstructionFailure(
            f"{spec.describe()}: closed form rejected ({detail}); search: {exc}"
        ) from exc


def simplex_partition(k: int) -> Partition:
    """Tori from mirror pairs, Moebius strips from achiral cycles; k = 1, 5 mod 6."""
    if k < 5 or k % 6 not in (1, 5):
        raise IneligibleK(f"simplex partition needs k >= 5 with k = 1 or 5 mod 6, got k={k}")
    spec = SkeletonSpec(SkeletonKind.SIMPLEX, k)
    groupings = simplex_groupings(k)
    blocks = make_blocks(spec.modulus, groupings)
    for i, b in enumerate(blocks):
        role = MOEBIUS_ONLY if len(b.cycles) == 1 else frozenset({C.TORUS})
        why = failure_reason(b, role)
        if why is not None:
            raise ConstructionFailure(f"{spec.describe()}: block {i + 1} {b}: {why}")
    return _finish(spec, blocks, TORI_AND_MOEBIUS, "closed-form")


class _Search:
    def __init__(self, spec: SkeletonSpec, policy, cycles: list[DifferenceCycle]):
        self.spec = spec
        self.n = spec.modulus
        self.policy = frozenset(policy)
        self.cycles = cycles
        self.closed_only = all(p in _CLOSED for p in self.policy)
        # surfaces with chi >= 0 on at most n vertices have at most 2n triangles
        self.face_budget = None if C.OTHER in self.policy else 2 * self.n
        self.degree = {dc: self._degrees(dc) for dc in cycles}
        self.verdicts: dict[frozenset, PartitionBlock | None] = {}
        self.dead: set[frozenset] = set()

    def _degrees(self, dc: DifferenceCycle) -> dict[int, int]:
        n = self.n
        per_class = Counter(dc.edge_classes)
        return {
            d: dc.orbit_size * m // (n // 2 if 2 * d == n else n)
            for d, m in per_class.items()
        }

    def _accept(self, group: tuple[DifferenceCycle, ...]) -> PartitionBlock | None:
        key = frozenset(group)
        if key not in self.verdicts:
            block = make_block(self.n, group)
            self.verdicts[key] = block if block.certificate.satisfies(self.policy) else None
        return self.verdicts[key]

    def candidates(self, remaining: tuple[DifferenceCycle, ...]) -> list[PartitionBlock]:
        pivot, rest = remaining[0], remaining[1:]
        found: list[PartitionBlock] = []
        visited: set[frozenset] = set()

        def extend(group, degrees, faces):
            key = frozenset(group)
            if key in visited:
                return
            visited.add(key)
            odd = {d for d, m in degrees.items() if m % 2}
            if not (self.closed_only and odd):
                block = self._accept(group)
                if block is not None:
                    found.append(block)
                    return
            if not odd:
                return
            for dc in rest:
                if dc in key:
                    continue
                extra = self.degree[dc]
                if not odd.intersection(extra):
                    continue
                if any(degrees.get(d, 0) + m > 2 for d, m in extra.items()):
                    continue
                if self.face_budget is not None and faces + dc.orbit_size > self.face_budget:
                    continue
                merged = dict(degrees)
                for d, m in extra.items():
                    merged[d] = merged.get(d, 0) + m
                extend(group + (dc,), merged, faces + dc.orbit_size)

        extend((pivot,), dict(self.degree[pivot]), pivot.orbit_size)
        return sorted(found, key=lambda b: (len(b.cycles), b.cycles))

    def cover(self, remaining: tuple[DifferenceCycle, ...]) -> list[PartitionBlock] | None:
        if not remaining:
            return []
        key = frozenset(remaining)
        if key in self.dead:
            return None
        for block in self.candidates(remaining):
            used = set(block.cycles)
            sub = self.cover(tuple(dc for dc in remaining if dc not in used))
            if sub is not None:
                return [block] + sub
        self.dead.add(key)
        return None


def search_partition(spec: SkeletonSpec, policy, max_cycles: int = SEARCH_MAX_CYCLES) -> Partition:
    """Exact-cover backtracking over groupings of the skeleton's cycles.

    The smallest uncovered cycle is the pivot; blocks containing it are
    grown only through cycles that touch an edge class of odd degree, never
    pushing any class above degree two.  Candidates are tried smallest
    first, then lexicographically, so the result is deterministic.
    """
    cycles = spec.cycles()
    if len(cycles) > max_cycles:
        raise SearchTooLarge(
            f"{spec.describe()} has {len(cycles)} difference cycles, search is capped at {max_cycles}"
        )
    blocks = _Search(spec, policy, cycles).cover(tuple(cycles))
    if blocks is None:
        allowed = ", ".join(sorted(p.value for p in policy))
        raise NoPartitionFound(f"no partition of {spec.describe()} into blocks of class {allowed}")
    return _finish(spec, _sort_blocks(blocks), policy, "search")


def _sort_blocks(blocks):
    return sorted(blocks, key=lambda b: b.cycles)


def verify_partition(
    spec: SkeletonSpec,
    blocks: Sequence[Iterable[DifferenceCycle]],
    policy=None,
) -> Partition:
    """Rebuild, certify and coverage-check an externally supplied partition.

    Raises a ``VerificationError`` subclass naming the first offending block
    (zero-based ``block`` attribute, one-based in messages).
    """
    policy = default_policy(spec) if policy is None else frozenset(policy)
    n = spec.modulus
    groups = [list(g) for g in blocks]

    for i, g in enumerate(groups):
        for dc in g:
            if dc.n != n:
                raise SkeletonViolation(
                    f"block {i + 1}: {dc} lives mod {dc.n}, {spec.describe()} needs mod {n}", i
                )
            if spec.kind is SkeletonKind.CROSS and spec.k in dc.gaps:
                raise SkeletonViolation(
                    f"block {i + 1}: {dc} has gap {spec.k}, its triangles contain antipodal pairs", i
                )

    seen: dict[DifferenceCycle, int] = {}
    for i, g in enumerate(groups):
        if not g:
            raise CoverageGap(f"block {i + 1} is empty", i)
        for dc in g:
            if dc in seen:
                where = "twice" if seen[dc] == i else f"also in block {seen[dc] + 1}"
                raise CoverageOverlap(f"block {i + 1}: {dc} is listed {where}", i)
            seen[dc] = i

    missing = [dc for dc in spec.cycles() if dc not in seen]
    if missing:
        raise CoverageGap(
            f"{len(missing)} cycle(s) of {spec.describe()} not covered: "
            + " ".join(str(dc) for dc in missing)
        )

    built = make_blocks(n, groups)
    for i, b in enumerate(built):
        why = failure_reason(b, policy)
        if why is None and not b.symmetry.shift_invariant:
            why = "not invariant under the cyclic shift"
        if why is not None:
            raise CertificationFailure(f"block {i + 1} {b}: {why}", i)

    proof = coverage_proof(spec, built)
    if proof.overlapping:
        raise CoverageOverlap(f"{proof.overlapping} triangles are covered more than once")
    if proof.outside:
        raise SkeletonViolation(f"{proof.outside} triangles lie outside {spec.describe()}")
    if proof.missing:
        raise CoverageGap(f"{proof.missing} triangles of {spec.describe()} are not covered")
    return Partition(spec, tuple(built), proof, policy, "verified")
