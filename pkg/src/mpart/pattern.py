"""Patterns: m x m matrices over {0, 1, *} and the 2x2 symmetry classification.

Text form: rows joined by ``,`` with cells ``0``, ``1``, ``*`` (e.g. ``0*,*0``).
The ten canonical 2x2 zero-one-diagonal patterns carry the aliases ``M1``..
``M10`` and every parser here accepts an alias wherever a pattern is accepted.

Two patterns pose the same partition problem up to relabeling when one maps to
the other under the group generated by entrywise complement, transpose, and a
simultaneous row/column permutation (part swap for m = 2).  ``classify_2x2``
reduces any zero-one-diagonal 2x2 pattern to its canonical class under that
8-element group and reports the transform used.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum


class Cell(IntEnum):
    ZERO = 0
    ONE = 1
    STAR = 2


CELL_CHARS = "01*"
_CHAR_TO_CELL = {c: Cell(i) for i, c in enumerate(CELL_CHARS)}


@dataclass(frozen=True)
class Pattern:
    """Square matrix of cells constraining within-part and cross-part adjacency."""

    m: int
    cells: tuple[tuple[Cell, ...], ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError("pattern needs at least one part")
        if len(self.cells) != self.m or any(len(row) != self.m for row in self.cells):
            raise ValueError("pattern cells must form an m x m matrix")

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        rows = text.split(",")
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError(f"pattern text {text!r} is not square")
        try:
            cells = tuple(tuple(_CHAR_TO_CELL[c] for c in row) for row in rows)
        except KeyError as e:
            raise ValueError(f"invalid pattern cell {e.args[0]!r}") from None
        return cls(m, cells)

    def render(self) -> str:
        return ",".join("".join(CELL_CHARS[c] for c in row) for row in self.cells)

    def __str__(self) -> str:
        return self.render()

    def cell(self, i: int, j: int) -> Cell:
        return self.cells[i][j]

    def complement(self) -> "Pattern":
        """Swap 0 and 1 entrywise; * is fixed."""
        swap = {Cell.ZERO: Cell.ONE, Cell.ONE: Cell.ZERO, Cell.STAR: Cell.STAR}
        return Pattern(self.m, tuple(tuple(swap[c] for c in row) for row in self.cells))

    def transpose(self) -> "Pattern":
        return Pattern(self.m, tuple(zip(*self.cells)))

    def permute_parts(self, perm) -> "Pattern":
        """Relabel parts: part i becomes perm[i] (simultaneous row/column permutation)."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.m)):
            raise ValueError(f"{perm} is not a permutation of 0..{self.m - 1}")
        cells = [[Cell.STAR] * self.m for _ in range(self.m)]
        for i in range(self.m):
            for j in range(self.m):
                cells[perm[i]][perm[j]] = self.cells[i][j]
        return Pattern(self.m, tuple(tuple(row) for row in cells))

    def has_star_diagonal(self) -> bool:
        return any(self.cells[i][i] == Cell.STAR for i in range(self.m))


@dataclass(frozen=True)
class PatternTransform:
    """Element of the pattern symmetry group.

    Applied as: complement first, then transpose, then part permutation
    (old part index -> new part index).  The three generators commute for
    m = 2, so the order only matters as a convention.
    """

    complemented: bool = False
    transposed: bool = False
    part_permutation: tuple[int, ...] = (0, 1)

    def apply(self, pattern: Pattern) -> Pattern:
        out = pattern
        if self.complemented:
            out = out.complement()
        if self.transposed:
            out = out.transpose()
        return out.permute_parts(self.part_permutation)

    def compose(self, after: "PatternTransform") -> "PatternTransform":
        """Transform equal to applying self, then `after` (valid for m = 2)."""
        perm = tuple(after.part_permutation[p] for p in self.part_permutation)
        return PatternTransform(
            self.complemented ^ after.complemented,
            self.transposed ^ after.transposed,
            perm,
        )

    def inverse(self) -> "PatternTransform":
        inv = [0] * len(self.part_permutation)
        for i, p in enumerate(self.part_permutation):
            inv[p] = i
        return PatternTransform(self.complemented, self.transposed, tuple(inv))

    @property
    def generator_count(self) -> int:
        swapped = self.part_permutation != tuple(range(len(self.part_permutation)))
        return int(self.complemented) + int(self.transposed) + int(swapped)

    def describe(self) -> str:
        names = []
        if self.complemented:
            names.append("complement")
        if self.transposed:
            names.append("transpose")
        if self.part_permutation != tuple(range(len(self.part_permutation))):
            names.append("part-swap")
        return "+".join(names) if names else "identity"


IDENTITY_TRANSFORM = PatternTransform()

# The ten canonical 2x2 zero-one-diagonal patterns, in their published order.
_CANONICAL_TEXTS = (
    "0*,*0",  # M1
    "00,*0",  # M2
    "01,*0",  # M3
    "00,10",  # M4
    "01,10",  # M5
    "00,00",  # M6
    "0*,*1",  # M7
    "00,*1",  # M8
    "01,01",  # M9
    "00,01",  # M10
)

STAR_DIAGONAL = "STAR-DIAGONAL"


def canonical_patterns() -> list[Pattern]:
    """M1..M10, index i-1 holding Mi."""
    return [Pattern.parse(t) for t in _CANONICAL_TEXTS]


def canonical_name(i: int) -> str:
    if not 1 <= i <= 10:
        raise ValueError(f"canonical pattern index {i} outside 1..10")
    return f"M{i}"


def parse_pattern(text: str) -> Pattern:
    """Parse a pattern literal or an M1..M10 alias."""
    alias = text.strip().upper()
    if alias.startswith("M") and alias[1:].isdigit():
        i = int(alias[1:])
        if not 1 <= i <= 10:
            raise ValueError(f"unknown pattern alias {text!r}")
        return canonical_patterns()[i - 1]
    return Pattern.parse(text)


def symmetry_group(m: int = 2) -> list[PatternTransform]:
    """All combinations of complement, transpose, and a part permutation."""
    transforms = []
    for c, t in itertools.product((False, True), repeat=2):
        for perm in itertools.permutations(range(m)):
            transforms.append(PatternTransform(c, t, perm))
    return transforms


def zero_one_diagonal_patterns() -> list[Pattern]:
    """The 36 2x2 patterns with no * on the diagonal, lexicographic by text."""
    out = []
    for d1, d2 in itertools.product("01", repeat=2):
        for o1, o2 in itertools.product("01*", repeat=2):
            out.append(Pattern.parse(f"{d1}{o1},{o2}{d2}"))
    return sorted(out, key=lambda p: p.render())


def classify_2x2(pattern: Pattern) -> tuple[str, PatternTransform | None]:
    """Reduce a 2x2 pattern to STAR-DIAGONAL or its canonical class M1..M10.

    Returns the class name and the transform carrying the input onto the
    canonical representative (None for the star-diagonal case, where every
    digraph is partitionable and no reduction is needed).  Among the
    transforms that work, ties break toward identity, then fewest
    generators, then lexicographically smallest flags.
    """
    if pattern.m != 2:
        raise ValueError("classification is defined for 2x2 patterns only")
    if pattern.has_star_diagonal():
        return STAR_DIAGONAL, None
    canon = {p.render(): i + 1 for i, p in enumerate(canonical_patterns())}
    hits: list[tuple[int, PatternTransform]] = []
    for tf in symmetry_group(2):
        i = canon.get(tf.apply(pattern).render())
        if i is not None:
            hits.append((i, tf))
    if not hits:
        raise AssertionError(f"pattern {pattern} reaches no canonical representative")
    targets = {i for i, _ in hits}
    if len(targets) > 1:
        raise AssertionError(f"pattern {pattern} reaches several canonical classes {targets}")
    swapped = (1, 0)

    def rank(tf: PatternTransform):
        return (
            tf.generator_count,
            (tf.complemented, tf.transposed, tf.part_permutation == swapped),
        )

    best = min((tf for _, tf in hits), key=rank)
    return canonical_name(hits[0][0]), best
