"""Cyclically symmetric surface partitions of cross polytope and simplex 2-skeletons."""

__version__ = "0.1.0"

from xpoly.complex import TwoComplex, VertexLink, build, components, link
from xpoly.cycles import (
    DifferenceCycle,
    classify,
    enumerate_all,
    expand,
    mirror,
    normalize,
    parse_cycle,
)
from xpoly.decompose import (
    Partition,
    PartitionBlock,
    cross_partition,
    search_partition,
    simplex_partition,
    verify_partition,
)
from xpoly.skeleton import (
    SkeletonKind,
    SkeletonSpec,
    cross_cycles,
    simplex_cycles,
    triangle_count,
    vertex_labeling_convention,
)
from xpoly.surface import Classification, SurfaceCertificate, boundary_cycles, certify
from xpoly.symmetry import SymmetryAttestation, attest
