"""Difference cycles of triangles over the cyclic group Z_n.

A difference cycle ``(a : b : c)`` with ``a + b + c = n`` stands for the
orbit ``{{i, i+a, i+a+b} mod n : i in Z_n}``.  Gap triples are identified up
to cyclic rotation only; ``(a : b : c)`` and its mirror ``(a : c : b)`` are
different orbits in general.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from xpoly.errors import InvalidGaps, ModulusMismatch, ParseError

Triangle = tuple[int, int, int]
Edge = tuple[int, int]

_CYCLE_RE = re.compile(r"^\s*\(\s*(\d+)\s*:\s*(\d+)\s*:\s*(\d+)\s*\)\s*$")


def _least_rotation(gaps: tuple[int, int, int]) -> tuple[int, int, int]:
    a, b, c = gaps
    return min((a, b, c), (b, c, a), (c, a, b))


@dataclass(frozen=True, order=True)
class DifferenceCycle:
    """A Z_n-orbit of triangles, stored by its lex-least gap rotation.

    Constructing from any rotation is allowed; ``gaps`` is canonicalized on
    the way in, so equality and hashing compare orbits.
    """

    n: int
    gaps: tuple[int, int, int]

    def __post_init__(self):
        if len(self.gaps) != 3:
            raise InvalidGaps(f"expected three gaps, got {self.gaps!r}")
        gaps = tuple(int(g) for g in self.gaps)
        if self.n < 3:
            raise InvalidGaps(f"modulus must be at least 3, got {self.n}")
        if min(gaps) < 1 or sum(gaps) != self.n:
            raise InvalidGaps(f"gaps {gaps} must be positive and sum to n={self.n}")
        object.__setattr__(self, "gaps", _least_rotation(gaps))

    def __str__(self) -> str:
        return "({} : {} : {})".format(*self.gaps)

    @property
    def is_achiral(self) -> bool:
        return mirror(self) == self

    @property
    def is_equilateral(self) -> bool:
        return self.gaps[0] == self.gaps[1] == self.gaps[2]

    @property
    def orbit_size(self) -> int:
        return self.n // 3 if self.is_equilateral else self.n

    @cached_property
    def edge_classes(self) -> tuple[int, int, int]:
        """Difference class ``min(d, n - d)`` of each gap, in gap order."""
        return tuple(min(g, self.n - g) for g in self.gaps)

    def base_triangle(self) -> Triangle:
        a, b, _ = self.gaps
        return (0, a, a + b)


def normalize(a: int, b: int, c: int, n: int) -> DifferenceCycle:
    return DifferenceCycle(n, (a, b, c))


def parse_cycle(text: str, n: int | None = None) -> DifferenceCycle:
    """Parse ``(a : b : c)``; whitespace around numbers and colons is optional.

    The modulus is the gap sum.  If ``n`` is given it must agree.
    """
    m = _CYCLE_RE.match(text)
    if m is None:
        raise ParseError(f"not a difference cycle: {text!r}")
    gaps = tuple(int(x) for x in m.groups())
    total = sum(gaps)
    if n is not None and total != n:
        raise ModulusMismatch(f"{text.strip()} has gap sum {total}, expected {n}")
    try:
        return DifferenceCycle(total, gaps)
    except InvalidGaps as exc:
        raise ParseError(str(exc)) from None


def make_triangle(vertices, n: int) -> Triangle:
    """Reduce three residues mod ``n`` and sort them; they must be distinct."""
    t = tuple(sorted(int(v) % n for v in vertices))
    if len(t) != 3 or len(set(t)) != 3:
        raise InvalidGaps(f"triangle {tuple(vertices)} needs three distinct residues mod {n}")
    return t


def expand(dc: DifferenceCycle) -> frozenset[Triangle]:
    n = dc.n
    x, y, z = dc.base_triangle()
    return frozenset(tuple(sorted(((x + i) % n, (y + i) % n, (z + i) % n))) for i in range(n))


def classify(t: Triangle, n: int) -> DifferenceCycle:
    x, y, z = sorted(t)
    if not (0 <= x < y < z < n):
        raise InvalidGaps(f"triangle {t} is not three distinct residues mod {n}")
    return DifferenceCycle(n, (y - x, z - y, n - z + x))


def mirror(dc: DifferenceCycle) -> DifferenceCycle:
    a, b, c = dc.gaps
    return DifferenceCycle(dc.n, (a, c, b))


def enumerate_all(n: int) -> list[DifferenceCycle]:
    if n < 3:
        raise InvalidGaps(f"modulus must be at least 3, got {n}")
    found = set()
    for a in range(1, n - 1):
        for b in range(1, n - a):
            found.add(DifferenceCycle(n, (a, b, n - a - b)))
    return sorted(found)


def shift_triangle(t: Triangle, s: int, n: int) -> Triangle:
    return tuple(sorted((v + s) % n for v in t))


def edge_class(edge: Edge, n: int) -> int:
    d = (edge[1] - edge[0]) % n
    return min(d, n - d)


def check_modulus(cycles, n: int) -> None:
    for dc in cycles:
        if dc.n != n:
            raise ModulusMismatch(f"{dc} lives mod {dc.n}, expected mod {n}")
