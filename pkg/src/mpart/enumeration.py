"""Isomorph-free digraph generation and minimal-obstruction catalogs.

Generation packs each labeled digraph into an integer, two bits per pair with
pair (0,1) most significant, so integer order equals lexicographic order of
the rendered strings.  The canonical key of a labeled digraph is the minimum
of that code over all vertex permutations; iterating every code and reducing
with precomputed permutation actions (vectorized over the whole 4^(n(n-1)/2)
range) yields exactly one representative per isomorphism class.

Minimal obstructions up to n = 5 come from filtering the generated classes.
For n = 6 and 7, where direct generation is out of reach, each partitionable
class on n-1 vertices is extended by one vertex in all 4^(n-1) ways: every
proper induced subdigraph of a minimal obstruction is partitionable, so the
extensions cover all candidates.  Extensions are filtered before the
canonical dedupe; filtering first is orders of magnitude cheaper and the
resulting catalog is identical.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .digraph import Digraph, pair_count, pair_index
from .pattern import Pattern
from .solver import Partition, cached_solve, check_partition
from .version import __version__

DIRECT_GENERATION_LIMIT = 5
OBSTRUCTION_BOUND_LIMIT = 7


def _canonical_codes(n: int) -> np.ndarray:
    """Sorted canonical codes of all isomorphism classes on n >= 2 vertices."""
    npairs = pair_count(n)
    shifts = [2 * (npairs - 1 - k) for k in range(npairs)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    dtype = np.uint32 if 2 * npairs <= 32 else np.uint64
    codes = np.arange(4**npairs, dtype=dtype)
    mins = codes.copy()
    one = dtype(1)
    for perm in itertools.permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        out = np.zeros_like(codes)
        for s, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            field = (codes >> dtype(shifts[s])) & dtype(3)
            if a > b:
                a, b = b, a
                field = field ^ ((field & one) << one)  # swap FWD/BWD
            out |= field << dtype(shifts[pair_index(n, a, b)])
        np.minimum(mins, out, out=mins)
    return np.unique(mins)


@functools.lru_cache(maxsize=None)
def enumerate_digraphs(n: int) -> tuple[Digraph, ...]:
    """One canonical representative per isomorphism class, sorted by key."""
    if not 0 <= n <= DIRECT_GENERATION_LIMIT:
        raise ValueError(
            f"direct generation supports 0..{DIRECT_GENERATION_LIMIT} vertices, got {n}"
        )
    if n <= 1:
        return (Digraph(n, ()),)
    npairs = pair_count(n)
    shifts = [2 * (npairs - 1 - k) for k in range(npairs)]
    return tuple(
        Digraph(n, tuple(int(code >> s) & 3 for s in shifts))
        for code in _canonical_codes(n)
    )


def attach_vertex(parent: Digraph, attachment: tuple[int, ...]) -> Digraph:
    """Extend by one new last vertex; attachment[i] is the state of pair (i, new)."""
    old = parent.n
    states = []
    for i in range(old + 1):
        for j in range(i + 1, old + 1):
            states.append(attachment[i] if j == old else parent.states[pair_index(old, i, j)])
    return Digraph(old + 1, tuple(states))


# -- minimality ----------------------------------------------------------------


@dataclass(frozen=True)
class MinimalityCertificate:
    """Evidence that a digraph is a minimal obstruction for a pattern.

    ``deletions`` holds, for every vertex v, a partition witness for the
    digraph with v deleted; each witness re-checks with ``check_partition``
    alone.  ``nonpartitionable`` records that the digraph itself was solved
    and refused at build time (one-vertex deletions suffice for minimality
    because partitionability is hereditary).
    """

    nonpartitionable: bool
    deletions: tuple[tuple[int, Partition], ...]


def minimality_certificate(digraph: Digraph, pattern: Pattern) -> MinimalityCertificate | None:
    """Certificate if the digraph is a minimal obstruction, else None."""
    if cached_solve(digraph, pattern) is not None:
        return None
    deletions = []
    for v in range(digraph.n):
        witness = cached_solve(digraph.delete_vertex(v), pattern)
        if witness is None:
            return None
        deletions.append((v, witness))
    return MinimalityCertificate(True, tuple(deletions))


def is_minimal_obstruction(digraph: Digraph, pattern: Pattern) -> bool:
    if cached_solve(digraph, pattern) is not None:
        return False
    return all(
        cached_solve(digraph.delete_vertex(v), pattern) is not None
        for v in range(digraph.n)
    )


def verify_certificate(
    digraph: Digraph,
    pattern: Pattern,
    certificate: MinimalityCertificate,
    recheck_solver: bool = True,
) -> bool:
    """Re-validate a certificate; the witness checks need no solver at all."""
    if not certificate.nonpartitionable:
        return False
    if sorted(v for v, _ in certificate.deletions) != list(range(digraph.n)):
        return False
    for v, witness in certificate.deletions:
        if not check_partition(digraph.delete_vertex(v), pattern, witness):
            return False
    if recheck_solver and cached_solve(digraph, pattern) is not None:
        return False
    return True


# -- catalogs ------------------------------------------------------------------


@dataclass(frozen=True)
class CatalogEntry:
    digraph: Digraph  # canonical representative; its text is the catalog key
    certificate: MinimalityCertificate

    @property
    def key(self) -> str:
        return self.digraph.render()


@dataclass(frozen=True)
class ObstructionCatalog:
    """All minimal obstructions for a pattern up to a vertex bound."""

    pattern: Pattern
    bound: int
    entries: tuple[CatalogEntry, ...]

    def keys(self) -> tuple[str, ...]:
        return tuple(e.key for e in self.entries)

    def counts_by_order(self) -> dict[int, int]:
        counts = {n: 0 for n in range(1, self.bound + 1)}
        for e in self.entries:
            counts[e.digraph.n] += 1
        return counts

    def restricted(self, bound: int) -> "ObstructionCatalog":
        return ObstructionCatalog(
            self.pattern,
            min(bound, self.bound),
            tuple(e for e in self.entries if e.digraph.n <= bound),
        )

    # text formats: one digraph per line, sorted by key, '#' comment header

    def _header(self) -> list[str]:
        return [
            f"# pattern: {self.pattern.render()}",
            f"# bound: {self.bound}",
            f"# tool: mpart {__version__}",
        ]

    def render_catalog(self) -> str:
        return "\n".join(self._header() + [e.key for e in self.entries]) + "\n"

    def render_certificates(self) -> str:
        lines = self._header()
        for e in self.entries:
            for v, witness in e.certificate.deletions:
                parts = ",".join(str(p + 1) for p in witness)
                lines.append(f"{e.key} {v} {parts}" if parts else f"{e.key} {v} -")
        return "\n".join(lines) + "\n"

    def write(self, catalog_path, certificates_path=None) -> None:
        Path(catalog_path).write_text(self.render_catalog())
        if certificates_path is not None:
            Path(certificates_path).write_text(self.render_certificates())


def _parse_header(lines: list[str]) -> tuple[Pattern, int]:
    pattern = None
    bound = None
    for line in lines:
        if line.startswith("# pattern:"):
            pattern = Pattern.parse(line.split(":", 1)[1].strip())
        elif line.startswith("# bound:"):
            bound = int(line.split(":", 1)[1].strip())
    if pattern is None or bound is None:
        raise ValueError("catalog header must record pattern and bound")
    return pattern, bound


def load_catalog(catalog_path, certificates_path=None) -> ObstructionCatalog:
    """Read a catalog file (and optional certificate sidecar) back in."""
    text = Path(catalog_path).read_text()
    return parse_catalog(
        text,
        Path(certificates_path).read_text() if certificates_path is not None else None,
    )


def parse_catalog(text: str, certificates_text: str | None = None) -> ObstructionCatalog:
    lines = text.splitlines()
    pattern, bound = _parse_header([l for l in lines if l.startswith("#")])
    keys = [l.strip() for l in lines if l.strip() and not l.startswith("#")]
    witnesses: dict[str, list[tuple[int, Partition]]] = {k: [] for k in keys}
    checked = certificates_text is not None
    if certificates_text is not None:
        for line in certificates_text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, v, parts = line.split(" ")
            if key not in witnesses:
                raise ValueError(f"certificate for unknown catalog key {key!r}")
            witness = () if parts == "-" else tuple(int(p) - 1 for p in parts.split(","))
            witnesses[key].append((int(v), witness))
    entries = tuple(
        CatalogEntry(
            Digraph.parse(key),
            MinimalityCertificate(checked, tuple(witnesses[key])),
        )
        for key in keys
    )
    return ObstructionCatalog(pattern, bound, entries)


def catalog_diff(a: ObstructionCatalog, b: ObstructionCatalog) -> tuple[tuple[str, ...], tuple[str, ...]]:
    """Canonical keys present in only one catalog, each side sorted."""
    ka, kb = set(a.keys()), set(b.keys())
    return tuple(sorted(ka - kb)), tuple(sorted(kb - ka))


# -- obstruction search ----------------------------------------------------------


def _minimal_reps_direct(pattern: Pattern, n: int) -> list[Digraph]:
    return [d for d in enumerate_digraphs(n) if is_minimal_obstruction(d, pattern)]


def _partitionable_level(pattern: Pattern, n: int) -> list[Digraph]:
    """Canonical representatives of all partitionable classes on n vertices."""
    if n <= DIRECT_GENERATION_LIMIT:
        return [d for d in enumerate_digraphs(n) if cached_solve(d, pattern) is not None]
    found: dict[str, None] = {}
    for parent in _partitionable_level(pattern, n - 1):
        for attachment in itertools.product(range(4), repeat=parent.n):
            cand = attach_vertex(parent, attachment)
            if cached_solve(cand, pattern) is not None:
                found.setdefault(cand.canonical().key)
    return [Digraph.parse(k) for k in sorted(found)]


def _minimal_reps_augmented(pattern: Pattern, n: int) -> list[Digraph]:
    """Minimal obstructions on exactly n vertices via one-vertex extensions."""
    found: dict[str, None] = {}
    for parent in _partitionable_level(pattern, n - 1):
        for attachment in itertools.product(range(4), repeat=parent.n):
            cand = attach_vertex(parent, attachment)
            if cached_solve(cand, pattern) is not None:
                continue
            if is_minimal_obstruction(cand, pattern):
                found.setdefault(cand.canonical().key)
    return [Digraph.parse(k) for k in sorted(found)]


def enumerate_minimal_obstructions(pattern: Pattern, bound: int) -> ObstructionCatalog:
    """All minimal obstructions with at most ``bound`` vertices, certified."""
    if not 0 <= bound <= OBSTRUCTION_BOUND_LIMIT:
        raise ValueError(f"bound must lie in 0..{OBSTRUCTION_BOUND_LIMIT}, got {bound}")
    reps: list[Digraph] = []
    for n in range(1, min(bound, DIRECT_GENERATION_LIMIT) + 1):
        reps.extend(_minimal_reps_direct(pattern, n))
    for n in range(DIRECT_GENERATION_LIMIT + 1, bound + 1):
        reps.extend(_minimal_reps_augmented(pattern, n))
    entries = []
    for rep in reps:
        certificate = minimality_certificate(rep, pattern)
        assert certificate is not None
        entries.append(CatalogEntry(rep, certificate))
    entries.sort(key=lambda e: e.key)
    return ObstructionCatalog(pattern, bound, tuple(entries))
