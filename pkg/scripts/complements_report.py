#!/usr/bin/env python3
"""Classify the complements of a matched pair up to deformation equivalence.

Enumerates every deformation map over the (finite) base field, groups the
deformed products into equivalence classes, prints one block per class with
its representative multiplication table, and cross-checks the partition
against pairwise isomorphism of the deformed algebras.

    python3 scripts/complements_report.py
    python3 scripts/complements_report.py --pair J17-pair --field F5
    python3 scripts/complements_report.py --pair my_pair.jpair --json
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass

from jalg import Field, QQ, catalog, factorization_index, iso_search, load_pair, r_deform
from jalg.catalog import names as catalog_names


@dataclass(frozen=True)
class ReportConfig:
    pair: str = "defmap-pair"
    field: str = "F5"
    as_json: bool = False


def parse_field(text: str) -> Field:
    return QQ if text == "Q" else Field(int(text.lstrip("F")))


def load(config: ReportConfig):
    field = parse_field(config.field)
    if config.pair in catalog_names():
        return catalog(config.pair, field=field)
    return load_pair(config.pair).to_field(field)


def run(config: ReportConfig) -> int:
    mp = load(config)
    t0 = time.perf_counter()
    report = factorization_index(mp)
    elapsed = time.perf_counter() - t0

    # independent cross-check: equivalence classes must agree with plain
    # isomorphism classes of the deformed products
    deformed = [r_deform(mp, r) for r in report.maps]
    for cls in report.classes:
        rep = deformed[cls[0]]
        for i in cls[1:]:
            if not iso_search(deformed[i], rep).is_isomorphic:
                print(f"PARTITION MISMATCH inside class of map {cls[0]}", file=sys.stderr)
                return 1

    if config.as_json:
        payload = {
            "pair": config.pair,
            "field": str(report.field),
            "maps": len(report.maps),
            "index": report.index,
            "classes": [
                {
                    "size": len(cls),
                    "representative": report.representatives[ci],
                    "members": list(cls),
                    "table": deformed[report.representatives[ci]].format_table(),
                }
                for ci, cls in enumerate(report.classes)
            ],
            "seconds": round(elapsed, 3),
        }
        print(json.dumps(payload, indent=2))
        return 0

    print(report.describe())
    print()
    for ci, cls in enumerate(report.classes):
        rep = report.representatives[ci]
        print(f"class {ci + 1} (size {len(cls)}), representative map {rep}:")
        print(f"  r: {report.maps[rep].describe()}")
        for line in deformed[rep].format_table().splitlines():
            print(f"  {line}")
        print()
    print(f"isomorphism cross-check passed ({elapsed:.2f}s)")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pair", default="defmap-pair",
                        help="catalog name or .jpair file (default: defmap-pair)")
    parser.add_argument("--field", default="F5", help="base field, e.g. F5, F7")
    parser.add_argument("--json", action="store_true", dest="as_json")
    args = parser.parse_args(argv)
    return run(ReportConfig(args.pair, args.field, args.as_json))


if __name__ == "__main__":
    raise SystemExit(main())
