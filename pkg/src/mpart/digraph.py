"""Loopless digraphs with digons: representation, structural ops, canonical forms.

A digraph on n labeled vertices is stored as one state per unordered vertex
pair {i, j} with i < j: no arc, an arc in either single direction, or a digon
(arcs both ways).  The text form is ``<n>:<pairs>`` where ``<pairs>`` has one
symbol per pair in row-major order (0,1),(0,2),...,(0,n-1),(1,2),...:

    ``.``  no arc          ``>``  arc i -> j
    ``<``  arc j -> i      ``=``  digon (both arcs)

State integers are chosen so that integer order equals the ASCII order of the
symbols; comparing state tuples is therefore the same as comparing rendered
strings, which is what canonical forms minimize over.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum

MAX_VERTICES = 12

STATE_CHARS = ".<=>"
_CHAR_TO_STATE = {c: s for s, c in enumerate(STATE_CHARS)}


class ArcState(IntEnum):
    """State of an unordered pair {i, j}, i < j.  Values follow ASCII order."""

    NONE = 0   # "."  no arc
    BWD = 1    # "<"  arc j -> i only
    DIGON = 2  # "="  arcs both ways
    FWD = 3    # ">"  arc i -> j only


def flip_state(s: int) -> int:
    """Swap FWD and BWD; NONE and DIGON are direction-symmetric."""
    return s ^ ((s & 1) << 1)


def complement_state(s: int) -> int:
    """NONE <-> DIGON and FWD <-> BWD, i.e. (x,y) is an arc iff it was not."""
    return s ^ 2


def pair_index(n: int, i: int, j: int) -> int:
    """Row-major index of pair (i, j), i < j, among the n*(n-1)/2 pairs."""
    return i * (2 * n - i - 1) // 2 + (j - i - 1)


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical key plus a vertex permutation realizing it.

    ``key`` is the rendered text of the canonical representative: the
    lexicographic minimum of ``render(permute(D, p))`` over all vertex
    permutations p.  ``witness`` is one permutation attaining the minimum,
    as a tuple mapping old vertex -> new vertex.
    """

    key: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class Digraph:
    """Immutable loopless digraph; digons allowed, no parallel arcs."""

    n: int
    states: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside supported range 0..{MAX_VERTICES}")
        if len(self.states) != pair_count(self.n):
            raise ValueError(
                f"expected {pair_count(self.n)} pair states for n={self.n}, got {len(self.states)}"
            )
        if any(not 0 <= s <= 3 for s in self.states):
            raise ValueError("pair states must be in 0..3")

    # -- text format ---------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Digraph":
        """Parse ``<n>:<pairs>`` text; inverse of :meth:`render`."""
        head, sep, body = text.partition(":")
        if not sep:
            raise ValueError(f"digraph text {text!r} lacks ':'")
        if not head.isdigit():
            raise ValueError(f"bad vertex count {head!r} in digraph text")
        n = int(head)
        if n > MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 0..{MAX_VERTICES}")
        if len(body) != pair_count(n):
            raise ValueError(
                f"digraph text {text!r} needs {pair_count(n)} pair symbols, got {len(body)}"
            )
        try:
            states = tuple(_CHAR_TO_STATE[c] for c in body)
        except KeyError as e:
            raise ValueError(f"invalid pair symbol {e.args[0]!r} in digraph text") from None
        return cls(n, states)

    def render(self) -> str:
        return f"{self.n}:{''.join(STATE_CHARS[s] for s in self.states)}"

    def __str__(self) -> str:
        return self.render()

    # -- basic queries -------------------------------------------------------

    def state(self, i: int, j: int) -> int:
        """State of the unordered pair, reoriented so vertex ``i`` plays the i<j role."""
        if i == j:
            raise ValueError("no loops: vertices must differ")
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise ValueError(f"vertex out of range for n={self.n}")
        if i < j:
            return self.states[pair_index(self.n, i, j)]
        return flip_state(self.states[pair_index(self.n, j, i)])

    def arc(self, x: int, y: int) -> bool:
        """True iff the arc x -> y is present."""
        return self.state(x, y) in (ArcState.FWD, ArcState.DIGON)

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs as ordered pairs, lexicographic."""
        return [(x, y) for x in range(self.n) for y in range(self.n) if x != y and self.arc(x, y)]

    # -- structural operations -----------------------------------------------

    def complement(self) -> "Digraph":
        return Digraph(self.n, tuple(complement_state(s) for s in self.states))

    def reverse(self) -> "Digraph":
        return Digraph(self.n, tuple(flip_state(s) for s in self.states))

    def induced(self, vertices) -> "Digraph":
        """Induced subdigraph on the given vertex set, relabeled in ascending order."""
        vs = sorted(set(vertices))
        if vs and not (0 <= vs[0] and vs[-1] < self.n):
            raise ValueError(f"vertex set {vs} out of range for n={self.n}")
        k = len(vs)
        states = tuple(
            self.states[pair_index(self.n, vs[a], vs[b])]
            for a in range(k)
            for b in range(a + 1, k)
        )
        return Digraph(k, states)

    def delete_vertex(self, v: int) -> "Digraph":
        return self.induced([u for u in range(self.n) if u != v])

    def permute(self, perm) -> "Digraph":
        """Relabel vertices: vertex v becomes perm[v]."""
        perm = tuple(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"{perm} is not a permutation of 0..{self.n - 1}")
        out = [0] * len(self.states)
        for i in range(self.n):
            for j in range(i + 1, self.n):
                s = self.states[pair_index(self.n, i, j)]
                a, b = perm[i], perm[j]
                if a < b:
                    out[pair_index(self.n, a, b)] = s
                else:
                    out[pair_index(self.n, b, a)] = flip_state(s)
        return Digraph(self.n, tuple(out))

    # -- canonical form ------------------------------------------------------

    def _oriented_matrix(self) -> list[list[int]]:
        """st[u][v] = state of {u,v} as seen with u in the i<j role."""
        st = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(i + 1, self.n):
                s = self.states[pair_index(self.n, i, j)]
                st[i][j] = s
                st[j][i] = flip_state(s)
        return st

    def canonical(self) -> CanonicalForm:
        """Branch-and-bound minimum of the rendered string over all relabelings.

        Canonical positions are filled left to right with original vertices;
        undecided pairs are padded with the minimal symbol, so the padded
        string is a pointwise (hence lexicographic) lower bound for every
        completion and the subtree can be pruned once it reaches the best
        string found so far.  Candidates at each level are tried in order of
        the pair states they contribute, which finds the minimum early.
        """
        n = self.n
        if n <= 1:
            return CanonicalForm(self.render(), tuple(range(n)))
        st = self._oriented_matrix()
        npairs = pair_count(n)
        index_of = [[pair_index(n, min(i, j), max(i, j)) for j in range(n)] for i in range(n)]
        chars = [0] * npairs
        placement: list[int] = []
        used = [False] * n
        best: list[int] | None = None
        best_placement: tuple[int, ...] = ()

        def extend() -> None:
            nonlocal best, best_placement
            p = len(placement)
            if p == n:
                if best is None or chars < best:
                    best = chars.copy()
                    best_placement = tuple(placement)
                return
            ranked = sorted(
                (tuple(st[placement[q]][v] for q in range(p)), v)
                for v in range(n)
                if not used[v]
            )
            new_idx = [index_of[q][p] for q in range(p)]
            for contrib, v in ranked:
                for q in range(p):
                    chars[new_idx[q]] = contrib[q]
                if best is not None and chars >= best:
                    continue
                used[v] = True
                placement.append(v)
                extend()
                placement.pop()
                used[v] = False
            for q in range(p):
                chars[new_idx[q]] = 0

        extend()
        assert best is not None
        rep = f"{n}:{''.join(STATE_CHARS[s] for s in best)}"
        # best_placement[p] = original vertex at canonical position p; invert
        # to get the old -> new map that permute() expects.
        witness = [0] * n
        for pos, v in enumerate(best_placement):
            witness[v] = pos
        return CanonicalForm(rep, tuple(witness))

    def canonical_key(self) -> str:
        return self.canonical().key

    def is_isomorphic(self, other: "Digraph") -> bool:
        if self.n != other.n:
            return False
        # FWD/BWD swap under relabeling, so only none/asymmetric/digon counts
        # are invariant.
        if sorted(min(s, flip_state(s)) for s in self.states) != sorted(
            min(s, flip_state(s)) for s in other.states
        ):
            return False
        return self.canonical().key == other.canonical().key


def all_labeled_digraphs(n: int):
    """Iterate every labeled digraph on n vertices (4^(n(n-1)/2) of them)."""
    for states in itertools.product(range(4), repeat=pair_count(n)):
        yield Digraph(n, states)
