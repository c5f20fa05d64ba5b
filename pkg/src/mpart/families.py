"""Obstruction families for the ten canonical patterns.

M1-partitionable digraphs are exactly those with a bipartite underlying
graph, so the M1 obstructions form one infinite family: all superorientations
of the odd cycles.  Those are generated constructively here.

The remaining families are finite.  Their contents were derived once by the
enumeration oracle and frozen as catalog files shipped with the package
(``data/families/F<i>.cat``); a regeneration test guards the freeze.  The
strict-split pattern M7 has no family file of its own; its derived catalog up
to 5 vertices is frozen under ``data/catalogs`` together with the
per-deletion certificates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources

from .digraph import ArcState, Digraph, pair_count, pair_index
from .enumeration import ObstructionCatalog, parse_catalog

# Largest member order of each finite family, measured by the oracle.
FINITE_FAMILY_MAX_ORDER = {2: 3, 3: 4, 4: 3, 5: 3, 6: 2, 8: 4, 9: 3, 10: 4}

# Frozen search bound of the strict-split (M7) catalog.
M7_CATALOG_BOUND = 5


@dataclass(frozen=True)
class FamilySpec:
    """How the obstruction family of one canonical pattern is produced."""

    pattern_id: int
    kind: str  # finite-list | odd-cycle-superorientations | derived-by-enumeration
    max_order: int | None  # None when the family is infinite


FAMILY_SPECS = {
    1: FamilySpec(1, "odd-cycle-superorientations", None),
    7: FamilySpec(7, "derived-by-enumeration", M7_CATALOG_BOUND),
    **{
        i: FamilySpec(i, "finite-list", order)
        for i, order in FINITE_FAMILY_MAX_ORDER.items()
    },
}


def odd_cycle_superorientations(max_n: int) -> tuple[Digraph, ...]:
    """All superorientations of C3, C5, ... up to max_n vertices, deduped.

    Each cycle edge independently becomes a forward arc, a backward arc, or a
    digon; representatives are canonical and sorted by key.
    """
    if max_n < 3:
        raise ValueError(f"odd cycles need at least 3 vertices, got bound {max_n}")
    found: dict[str, None] = {}
    arc_states = (ArcState.BWD, ArcState.DIGON, ArcState.FWD)
    for k in range(3, max_n + 1, 2):
        edges = [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)]
        base = [ArcState.NONE] * pair_count(k)
        for assignment in itertools.product(arc_states, repeat=k):
            states = base.copy()
            for (i, j), s in zip(edges, assignment):
                states[pair_index(k, i, j)] = s
            found.setdefault(Digraph(k, tuple(states)).canonical().key)
    return tuple(Digraph.parse(key) for key in sorted(found))


# `family_m1` in the library API mirrors the F1 naming of the other families.
family_m1 = odd_cycle_superorientations


def _load_frozen(relative: str) -> str:
    return (resources.files("mpart") / "data" / relative).read_text()


def finite_family_catalog(i: int) -> ObstructionCatalog:
    """The frozen family F_i as a catalog (i in 2..6, 8..10)."""
    if i not in FINITE_FAMILY_MAX_ORDER:
        raise ValueError(f"no finite family is frozen for pattern index {i}")
    return parse_catalog(_load_frozen(f"families/F{i}.cat"))


def finite_family(i: int) -> tuple[Digraph, ...]:
    """Members of the frozen family F_i, sorted by canonical key."""
    return tuple(e.digraph for e in finite_family_catalog(i).entries)


def frozen_m7_catalog() -> ObstructionCatalog:
    """The frozen strict-split obstruction catalog with certificates."""
    return parse_catalog(
        _load_frozen("catalogs/M7.cat"), _load_frozen("catalogs/M7.certs")
    )
