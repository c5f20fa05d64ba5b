"""Regenerate the frozen data files (family catalogs and the M7 catalog).

Usage: ``python -m mpart.freeze [dest]`` where ``dest`` defaults to the
installed package data directory.  Output is deterministic, so re-running
over an unchanged implementation must reproduce the files byte for byte.
"""

from __future__ import annotations

import sys
from pathlib import Path

from .enumeration import enumerate_minimal_obstructions
from .families import FINITE_FAMILY_MAX_ORDER, M7_CATALOG_BOUND
from .pattern import parse_pattern


def regenerate(dest: Path) -> list[Path]:
    written = []
    families_dir = dest / "families"
    catalogs_dir = dest / "catalogs"
    families_dir.mkdir(parents=True, exist_ok=True)
    catalogs_dir.mkdir(parents=True, exist_ok=True)
    for i, max_order in sorted(FINITE_FAMILY_MAX_ORDER.items()):
        catalog = enumerate_minimal_obstructions(parse_pattern(f"M{i}"), max_order)
        path = families_dir / f"F{i}.cat"
        catalog.write(path)
        written.append(path)
    m7 = enumerate_minimal_obstructions(parse_pattern("M7"), M7_CATALOG_BOUND)
    m7.write(catalogs_dir / "M7.cat", catalogs_dir / "M7.certs")
    written += [catalogs_dir / "M7.cat", catalogs_dir / "M7.certs"]
    return written


def main(argv=None) -> int:
    args = sys.argv[1:] if argv is None else argv
    dest = Path(args[0]) if args else Path(__file__).parent / "data"
    for path in regenerate(dest):
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
