"""Partition documents: JSON interchange, the human table and OFF facet lists.

The JSON layout is described by ``docs/partition.schema.json``.  The table
is rendered from the document alone, so both encode the same data.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from xpoly import __version__
from xpoly.cycles import DifferenceCycle, parse_cycle
from xpoly.decompose import POLICIES, Partition, PartitionBlock, policy_name
from xpoly.errors import IneligibleK, ParseError
from xpoly.skeleton import SkeletonKind, SkeletonSpec, vertex_labeling_convention

FORMAT_NAME = "xpoly-partition"
FORMAT_VERSION = 1


def labeling_text(spec: SkeletonSpec) -> str:
    if spec.kind is SkeletonKind.CROSS:
        return vertex_labeling_convention(spec.k).text
    n = spec.modulus
    return f"vertices Z_{n}; every 3-subset is a triangle; Z_{n} acts by i -> i+1 mod {n}"


@dataclass
class Header:
    kind: str
    k: int
    modulus: int
    labeling: str
    policy: str
    method: str
    tool_version: str = __version__


@dataclass
class CertificateSummary:
    vertices: int
    edges: int
    faces: int
    euler_characteristic: int
    closed: bool
    orientable: bool | None
    boundary_components: int | None
    components: int
    classification: str
    component_classes: dict[str, int]


@dataclass
class SymmetrySummary:
    order: int
    shift_invariant: bool
    vertex_transitive: bool
    vertex_set_full: bool


@dataclass
class BlockRecord:
    cycles: list[str]
    triangles: int
    certificate: CertificateSummary
    symmetry: SymmetrySummary

    @classmethod
    def from_block(cls, block: PartitionBlock) -> "BlockRecord":
        cert = block.certificate
        v, e, f = block.complex.f_vector
        return cls(
            cycles=[str(dc) for dc in block.cycles],
            triangles=block.triangle_count,
            certificate=CertificateSummary(
                vertices=v,
                edges=e,
                faces=f,
                euler_characteristic=cert.euler_characteristic,
                closed=cert.is_closed,
                orientable=cert.orientable,
                boundary_components=cert.boundary_components,
                components=len(cert.components),
                classification=cert.classification,
                component_classes=dict(sorted(cert.class_counts().items())),
            ),
            symmetry=SymmetrySummary(
                order=block.symmetry.order,
                shift_invariant=block.symmetry.shift_invariant,
                vertex_transitive=block.symmetry.vertex_transitive,
                vertex_set_full=block.symmetry.vertex_set_full,
            ),
        )


@dataclass
class Totals:
    triangles: int
    blocks: int
    blocks_by_class: dict[str, int] = field(default_factory=dict)


@dataclass
class PartitionDocument:
    header: Header
    blocks: list[BlockRecord]
    totals: Totals

    @classmethod
    def from_partition(cls, p: Partition) -> "PartitionDocument":
        spec = p.spec
        header = Header(
            kind=spec.kind.value,
            k=spec.k,
            modulus=spec.modulus,
            labeling=labeling_text(spec),
            policy=policy_name(p.policy),
            method=p.method,
        )
        blocks = [BlockRecord.from_block(b) for b in p.blocks]
        totals = Totals(
            triangles=p.triangle_count,
            blocks=len(blocks),
            blocks_by_class=dict(sorted(p.blocks_by_class().items())),
        )
        return cls(header, blocks, totals)

    @property
    def spec(self) -> SkeletonSpec:
        return SkeletonSpec(SkeletonKind(self.header.kind), self.header.k)

    def groupings(self) -> list[list[DifferenceCycle]]:
        n = self.header.modulus
        return [[parse_cycle(s, n) for s in b.cycles] for b in self.blocks]

    def to_dict(self) -> dict:
        return {"format": FORMAT_NAME, "version": FORMAT_VERSION, **asdict(self)}

    @classmethod
    def from_dict(cls, data: dict) -> "PartitionDocument":
        blocks = [
            BlockRecord(
                cycles=list(b["cycles"]),
                triangles=b["triangles"],
                certificate=CertificateSummary(**b["certificate"]),
                symmetry=SymmetrySummary(**b["symmetry"]),
            )
            for b in data["blocks"]
        ]
        return cls(Header(**data["header"]), blocks, Totals(**data["totals"]))


def to_json(doc: PartitionDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2) + "\n"


def _yes_no(flag, yes, no, unknown="undetermined"):
    return unknown if flag is None else (yes if flag else no)


def to_table(doc: PartitionDocument) -> str:
    h = doc.header
    spec = doc.spec
    lines = [
        f"# xpoly {h.tool_version}",
        f"# {spec.describe()}, k = {h.k}, modulus {h.modulus}",
        f"# labeling: {h.labeling}",
        f"# policy: {h.policy}, method: {h.method}",
        "",
    ]
    for i, b in enumerate(doc.blocks, 1):
        c, s = b.certificate, b.symmetry
        parts = ", ".join(f"{m} x {name}" for name, m in c.component_classes.items())
        lines.append(f"Block {i}: {c.classification}")
        lines.extend(f"  {cyc}" for cyc in b.cycles)
        lines.append(
            f"  triangles {b.triangles}, f-vector ({c.vertices}, {c.edges}, {c.faces}), "
            f"chi {c.euler_characteristic}, {_yes_no(c.orientable, 'orientable', 'nonorientable')}, "
            f"{'closed' if c.closed else f'boundary circles {c.boundary_components}'}"
        )
        lines.append(
            f"  components {parts}; Z_{s.order} "
            f"{_yes_no(s.shift_invariant, 'shift invariant', 'NOT shift invariant')}, "
            f"{_yes_no(s.vertex_transitive, 'vertex transitive', 'NOT vertex transitive')}"
        )
        lines.append("")
    by_class = ", ".join(f"{name} {m}" for name, m in doc.totals.blocks_by_class.items())
    lines.append(f"Total: {doc.totals.triangles} triangles in {doc.totals.blocks} blocks ({by_class})")
    return "\n".join(lines) + "\n"


def to_off(p: Partition) -> str:
    """One facet-only OFF section per block; vertex coordinates are omitted.

    Each section is ``OFF``, then ``V F E`` counts, then one ``3 x y z`` line
    per triangle with vertices labeled by residues mod n.
    """
    out = []
    for i, b in enumerate(p.blocks, 1):
        v, e, f = b.complex.f_vector
        out.append(f"# block {i}: {b}")
        out.append("OFF")
        out.append(f"{p.spec.modulus} {f} {e}")
        out.extend("3 {} {} {}".format(*t) for t in sorted(b.complex.triangles))
        out.append("")
    return "\n".join(out)


def parse_partition_json(text: str):
    """Read a partition document or a bare block list.

    Returns ``(spec, groupings, policy_or_None)``.  The bare form is
    ``{"kind": "cross", "k": 3, "blocks": [["(1 : 1 : 4)", ...], ...]}``.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object")
    try:
        if "header" in data:
            doc = PartitionDocument.from_dict(data)
            kind, k = doc.header.kind, doc.header.k
            raw_blocks = [b.cycles for b in doc.blocks]
            policy = doc.header.policy
        else:
            kind, k = data["kind"], data["k"]
            raw_blocks = [b["cycles"] if isinstance(b, dict) else b for b in data["blocks"]]
            policy = data.get("policy")
        spec = SkeletonSpec(SkeletonKind(kind), int(k))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (ParseError, IneligibleK)):
            raise
        raise ParseError(f"malformed partition document: {exc!r}") from None
    if policy is not None and policy not in POLICIES:
        raise ParseError(f"unknown policy {policy!r}")
    groupings = []
    for i, block in enumerate(raw_blocks, 1):
        if not isinstance(block, list):
            raise ParseError(f"block {i} must be a list of cycles")
        try:
            groupings.append([parse_cycle(str(s)) for s in block])
        except ParseError as exc:
            raise ParseError(f"block {i}: {exc}") from None
    policy = POLICIES[policy] if policy is not None else None
    return spec, groupings, policy
