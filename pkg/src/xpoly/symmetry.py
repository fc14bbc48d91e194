"""Checks that a complex is invariant under the cyclic shift i -> i + 1."""

from __future__ import annotations

from dataclasses import dataclass

from xpoly.complex import TwoComplex
from xpoly.cycles import shift_triangle
from xpoly.errors import EmptyComplex


@dataclass(frozen=True)
class SymmetryAttestation:
    shift_invariant: bool
    vertex_transitive: bool
    vertex_set_full: bool
    order: int


def attest(c: TwoComplex) -> SymmetryAttestation:
    """Relabel every triangle by the shift and compare sets.

    The check is done on the explicit triangles, not inferred from the
    cycles the complex was built from.  Z_n acts on Z_n with a single orbit,
    so an invariant complex is vertex transitive exactly when it uses every
    residue.
    """
    if not c.triangles:
        raise EmptyComplex("cannot attest an empty complex")
    n = c.n
    shifted = {shift_triangle(t, 1, n) for t in c.triangles}
    invariant = shifted == c.triangles
    full = len(c.vertices) == n
    return SymmetryAttestation(
        shift_invariant=invariant,
        vertex_transitive=invariant and full,
        vertex_set_full=full,
        order=n,
    )
