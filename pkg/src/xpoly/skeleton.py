"""Triangle sets of the cross polytope and the simplex, indexed by difference cycles.

Vertices of the k-dimensional cross polytope are labeled by Z_2k with
antipodal (non-adjacent) pairs ``{i, i + k}``.  The shift ``i -> i + 1``
preserves this pairing, so Z_2k acts on the polytope.  The (k-1)-simplex has
vertex set Z_k and every 3-subset is a triangle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb

from xpoly.cycles import DifferenceCycle, Triangle, enumerate_all, expand
from xpoly.errors import IneligibleK


class SkeletonKind(str, enum.Enum):
    CROSS = "cross"
    SIMPLEX = "simplex"


@dataclass(frozen=True)
class SkeletonSpec:
    kind: SkeletonKind
    k: int

    def __post_init__(self):
        kind = SkeletonKind(self.kind)
        object.__setattr__(self, "kind", kind)
        minimum = 3 if kind is SkeletonKind.CROSS else 4
        if self.k < minimum:
            raise IneligibleK(f"{kind.value} skeleton needs k >= {minimum}, got k={self.k}")

    @property
    def modulus(self) -> int:
        return 2 * self.k if self.kind is SkeletonKind.CROSS else self.k

    @property
    def simplex_eligible(self) -> bool:
        """Whether the tori/Moebius-strip partition applies (k = 1, 5 mod 6)."""
        return self.kind is SkeletonKind.SIMPLEX and self.k % 6 in (1, 5)

    def cycles(self) -> list[DifferenceCycle]:
        if self.kind is SkeletonKind.CROSS:
            return cross_cycles(self.k)
        return simplex_cycles(self.k)

    def contains(self, t: Triangle) -> bool:
        if self.kind is SkeletonKind.SIMPLEX:
            return True
        return not any((y - x) % self.modulus == self.k for x, y in combinations(t, 2))

    def describe(self) -> str:
        if self.kind is SkeletonKind.CROSS:
            return f"cross polytope beta^{self.k}"
        return f"simplex Delta^{self.k - 1}"


@dataclass(frozen=True)
class LabelingConvention:
    k: int
    modulus: int
    antipodal_pairs: tuple[tuple[int, int], ...]
    text: str

    def shift_preserves_pairing(self) -> bool:
        pairs = set(self.antipodal_pairs)
        shifted = {tuple(sorted(((x + 1) % self.modulus, (y + 1) % self.modulus))) for x, y in pairs}
        return shifted == pairs


def vertex_labeling_convention(k: int) -> LabelingConvention:
    if k < 3:
        raise IneligibleK(f"cross polytope needs k >= 3, got k={k}")
    n = 2 * k
    pairs = tuple((i, i + k) for i in range(k))
    text = (
        f"vertices Z_{n}; antipodal pairs {{i, i+{k}}}; "
        f"Z_{n} acts by i -> i+1 mod {n}"
    )
    return LabelingConvention(k, n, pairs, text)


def cross_cycles(k: int) -> list[DifferenceCycle]:
    if k < 3:
        raise IneligibleK(f"cross polytope needs k >= 3, got k={k}")
    return [dc for dc in enumerate_all(2 * k) if k not in dc.gaps]


def simplex_cycles(k: int) -> list[DifferenceCycle]:
    if k < 4:
        raise IneligibleK(f"simplex skeleton needs k >= 4, got k={k}")
    return enumerate_all(k)


def triangle_count(spec: SkeletonSpec) -> int:
    k = spec.k
    if spec.kind is SkeletonKind.CROSS:
        return comb(2 * k, 3) - k * (2 * k - 2)
    return comb(k, 3)


def skeleton_triangles(spec: SkeletonSpec) -> frozenset[Triangle]:
    """All triangles of the skeleton, as the union of its cycle orbits."""
    out: set[Triangle] = set()
    for dc in spec.cycles():
        out |= expand(dc)
    return frozenset(out)
