"""Command line front end.

Exit codes: 0 success, 1 I/O error, 2 ineligible input, 3 verification
rejected, 4 construction failure, 5 parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from xpoly import __version__
from xpoly.cycles import enumerate_all
from xpoly.decompose import (
    POLICIES,
    failure_reason,
    cross_partition,
    default_policy,
    make_block,
    search_partition,
    simplex_partition,
    verify_partition,
)
from xpoly.errors import (
    ConstructionFailure,
    IneligibleK,
    InvalidGaps,
    ParseError,
    VerificationError,
)
from xpoly.io import PartitionDocument, parse_partition_json, to_json, to_off, to_table
from xpoly.skeleton import SkeletonKind, SkeletonSpec

EXIT_OK = 0
EXIT_IO = 1
EXIT_INELIGIBLE = 2
EXIT_REJECTED = 3
EXIT_CONSTRUCTION = 4
EXIT_PARSE = 5


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def run_decompose(kind: str, k: int, fmt: str = "table", policy: str | None = None,
                  use_search: bool = False):
    """Build the partition and render it; returns the rendered text."""
    if kind == "simplex":
        if use_search:
            spec = SkeletonSpec(SkeletonKind.SIMPLEX, k)
            if k < 5 or k % 6 not in (1, 5):
                raise IneligibleK(f"simplex partition needs k >= 5 with k = 1 or 5 mod 6, got k={k}")
            partition = search_partition(spec, POLICIES[policy or "tori-moebius"])
        else:
            partition = simplex_partition(k)
    else:
        chosen = POLICIES[policy or "orientable"]
        if use_search:
            partition = search_partition(SkeletonSpec(SkeletonKind.CROSS, k), chosen)
        else:
            partition = cross_partition(k, chosen)
    if fmt == "off":
        return to_off(partition)
    doc = PartitionDocument.from_partition(partition)
    return to_json(doc) if fmt == "json" else to_table(doc)


def cmd_decompose(args) -> int:
    _emit(run_decompose(args.kind, args.k, args.format, args.policy, args.search), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    text = Path(args.file).read_text()
    spec, groupings, policy = parse_partition_json(text)
    if args.policy:
        policy = POLICIES[args.policy]
    if policy is None:
        policy = default_policy(spec)
    for i, group in enumerate(groupings, 1):
        label = " ".join(str(dc) for dc in group)
        try:
            block = make_block(spec.modulus, group)
        except Exception as exc:  # reported properly by verify_partition below
            print(f"block {i}: {label}: cannot build ({exc})")
            continue
        why = failure_reason(block, policy)
        verdict = "ok" if why is None else f"FAIL: {why}"
        print(f"block {i}: {label}: {block.certificate.classification}, {verdict}")
    try:
        partition = verify_partition(spec, groupings, policy)
    except VerificationError as exc:
        print(f"REJECTED [{exc.kind}]: {exc}")
        return EXIT_REJECTED
    print(
        f"ACCEPTED: {spec.describe()}, {len(partition.blocks)} blocks, "
        f"{partition.coverage.covered} of {partition.coverage.expected} triangles covered once"
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.n < 3:
        raise InvalidGaps(f"modulus must be at least 3, got {args.n}")
    rows = enumerate_all(args.n)
    if args.format == "json":
        payload = [
            {"cycle": str(dc), "orbit_size": dc.orbit_size, "achiral": dc.is_achiral}
            for dc in rows
        ]
        _emit(json.dumps(payload, indent=2) + "\n", None)
        return EXIT_OK
    for dc in rows:
        print(f"{str(dc):<16} orbit {dc.orbit_size:>3}  {'achiral' if dc.is_achiral else 'chiral'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xpoly",
        description="Cyclically symmetric surface partitions of cross polytope and simplex 2-skeletons.",
    )
    parser.add_argument("--version", action="version", version=f"xpoly {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="partition a skeleton into surfaces")
    p.add_argument("kind", choices=["cross", "simplex"])
    p.add_argument("k", type=int)
    p.add_argument("--format", choices=["table", "json", "off"], default="table")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--search", action="store_true", help="use exact-cover search instead of the closed form")
    p.add_argument("--policy", choices=sorted(POLICIES), help="allowed component classes")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="re-certify a partition document or bare block list")
    p.add_argument("file")
    p.add_argument("--policy", choices=sorted(POLICIES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list the difference cycles mod n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=["table", "json"], default="table")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (IneligibleK, InvalidGaps) as exc:
        print(f"ineligible input: {exc}", file=sys.stderr)
        return EXIT_INELIGIBLE
    except ConstructionFailure as exc:
        print(f"construction failure: {exc}", file=sys.stderr)
        return EXIT_CONSTRUCTION
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
