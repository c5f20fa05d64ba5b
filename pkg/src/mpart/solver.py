"""Deciding whether a digraph admits a pattern partition.

A partition assigns each vertex a part index 0..m-1.  It is valid when every
vertex pair satisfies the pattern: a 0 (resp. 1) diagonal cell forces distinct
same-part vertices to be non-adjacent (resp. joined by a digon), and a 0
(resp. 1) off-diagonal cell M[i][j] forbids (resp. forces) the arc x -> y for
every x in part i, y in part j.  Stars impose nothing.

Two decision procedures share that pair predicate: a backtracking search for
arbitrary patterns on small digraphs, and a 2-SAT reduction for 2x2 patterns
(one boolean per vertex, one binary clause per forbidden joint placement of a
vertex pair).  ``solve`` dispatches between them and always validates its
witness before returning it.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .digraph import ArcState, Digraph, pair_index
from .pattern import Cell, Pattern

# A partition is a tuple of 0-based part indices, one per vertex.
Partition = tuple[int, ...]

# Backtracking explores at most m**n assignments; keep exhaustive runs snappy.
BRUTE_FORCE_STATE_LIMIT = 1 << 20


def _pair_ok(pattern: Pattern, state: int, p: int, q: int) -> bool:
    """May vertices x < y with pair state ``state`` sit in parts p and q?"""
    cells = pattern.cells
    if p == q:
        c = cells[p][p]
        if c == Cell.ZERO:
            return state == ArcState.NONE
        if c == Cell.ONE:
            return state == ArcState.DIGON
        return True
    fwd = state == ArcState.FWD or state == ArcState.DIGON  # x -> y
    bwd = state == ArcState.BWD or state == ArcState.DIGON  # y -> x
    c = cells[p][q]
    if c == Cell.ONE and not fwd:
        return False
    if c == Cell.ZERO and fwd:
        return False
    c = cells[q][p]
    if c == Cell.ONE and not bwd:
        return False
    if c == Cell.ZERO and bwd:
        return False
    return True


@functools.lru_cache(maxsize=256)
def _forbidden_placements(pattern: Pattern) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each pair state, the (p, q) part placements the pattern rules out."""
    return tuple(
        tuple(
            (p, q)
            for p in range(pattern.m)
            for q in range(pattern.m)
            if not _pair_ok(pattern, state, p, q)
        )
        for state in range(4)
    )


def check_partition(digraph: Digraph, pattern: Pattern, parts) -> bool:
    """True iff ``parts`` is a valid pattern partition of the digraph."""
    parts = tuple(parts)
    n = digraph.n
    if len(parts) != n:
        raise ValueError(f"partition covers {len(parts)} vertices, digraph has {n}")
    if any(not 0 <= p < pattern.m for p in parts):
        raise ValueError(f"part indices must lie in 0..{pattern.m - 1}")
    states = digraph.states
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if not _pair_ok(pattern, states[k], parts[i], parts[j]):
                return False
            k += 1
    return True


def solve_bruteforce(digraph: Digraph, pattern: Pattern) -> Partition | None:
    """Exhaustive backtracking; returns the lexicographically least valid partition."""
    n, m = digraph.n, pattern.m
    if m**n > BRUTE_FORCE_STATE_LIMIT:
        raise ValueError(
            f"brute-force search over {m}^{n} assignments exceeds the "
            f"{BRUTE_FORCE_STATE_LIMIT} state guard"
        )
    states = digraph.states
    parts = [0] * n

    def assign(v: int) -> bool:
        if v == n:
            return True
        for p in range(m):
            ok = True
            for u in range(v):
                if not _pair_ok(pattern, states[pair_index(n, u, v)], parts[u], p):
                    ok = False
                    break
            if ok:
                parts[v] = p
                if assign(v + 1):
                    return True
        return False

    if not assign(0):
        return None
    result = tuple(parts)
    assert check_partition(digraph, pattern, result)
    return result


# -- 2-SAT --------------------------------------------------------------------


@dataclass(frozen=True)
class TwoSatInstance:
    """2-CNF over one variable per vertex; true places the vertex in part 1.

    Literals are DIMACS-style: +-(v+1) for variable v.  Every clause has
    exactly two literals (possibly equal).
    """

    num_vars: int
    clauses: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class TwoSatResult:
    satisfiable: bool
    assignment: tuple[bool, ...] | None
    conflict_variable: int | None  # variable whose two literals share an SCC


def build_2sat(digraph: Digraph, pattern: Pattern) -> TwoSatInstance:
    """Clauses forbidding every invalid joint placement of each vertex pair."""
    if pattern.m != 2:
        raise ValueError("the 2-SAT reduction applies to 2x2 patterns only")
    forbidden = _forbidden_placements(pattern)
    n = digraph.n
    states = digraph.states
    clauses: list[tuple[int, int]] = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            for p, q in forbidden[states[k]]:
                # not(i in part p and j in part q); part 1 is the true literal
                lit_i = -(i + 1) if p == 1 else i + 1
                lit_j = -(j + 1) if q == 1 else j + 1
                clauses.append((lit_i, lit_j))
            k += 1
    return TwoSatInstance(n, tuple(clauses))


def _tarjan_components(num_nodes: int, adjacency: list[list[int]]) -> list[int]:
    """Iterative Tarjan; component ids come out in reverse topological order."""
    index = [-1] * num_nodes
    low = [0] * num_nodes
    on_stack = [False] * num_nodes
    comp = [-1] * num_nodes
    stack: list[int] = []
    counter = 0
    comps = 0
    for root in range(num_nodes):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, edge_pos = work[-1]
            if edge_pos == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            for pos in range(edge_pos, len(adjacency[node])):
                nxt = adjacency[node][pos]
                if index[nxt] == -1:
                    work[-1] = (node, pos + 1)
                    work.append((nxt, 0))
                    advanced = True
                    break
                if on_stack[nxt]:
                    low[node] = min(low[node], index[nxt])
            if advanced:
                continue
            work.pop()
            if low[node] == index[node]:
                while True:
                    top = stack.pop()
                    on_stack[top] = False
                    comp[top] = comps
                    if top == node:
                        break
                comps += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
    return comp


def solve_2sat(instance: TwoSatInstance) -> TwoSatResult:
    """Implication-graph decision; any returned assignment satisfies all clauses."""
    n = instance.num_vars
    # node 2v = variable v false, node 2v + 1 = variable v true; xor 1 negates
    adjacency: list[list[int]] = [[] for _ in range(2 * n)]

    def node(lit: int) -> int:
        v = abs(lit) - 1
        return 2 * v + (1 if lit > 0 else 0)

    for a, b in instance.clauses:
        adjacency[node(-a)].append(node(b))
        adjacency[node(-b)].append(node(a))
    comp = _tarjan_components(2 * n, adjacency)
    for v in range(n):
        if comp[2 * v] == comp[2 * v + 1]:
            return TwoSatResult(False, None, v)
    # Reverse topological component ids: pick each variable's later component.
    assignment = tuple(comp[2 * v + 1] < comp[2 * v] for v in range(n))
    for a, b in instance.clauses:
        lit_true = (assignment[abs(a) - 1]) == (a > 0)
        if not lit_true and (assignment[abs(b) - 1]) != (b > 0):
            raise AssertionError("2-SAT assignment failed clause re-check")
    return TwoSatResult(True, assignment, None)


# -- dispatch -----------------------------------------------------------------


def solve(digraph: Digraph, pattern: Pattern) -> Partition | None:
    """Partition witness or None; validated by ``check_partition`` either way."""
    if digraph.n == 0:
        return ()
    if pattern.m == 2:
        if pattern.has_star_diagonal():
            star = 0 if pattern.cells[0][0] == Cell.STAR else 1
            result = (star,) * digraph.n
        else:
            outcome = solve_2sat(build_2sat(digraph, pattern))
            if not outcome.satisfiable:
                return None
            result = tuple(int(b) for b in outcome.assignment)
    else:
        return solve_bruteforce(digraph, pattern)
    assert check_partition(digraph, pattern, result)
    return result


@functools.lru_cache(maxsize=1 << 18)
def cached_solve(digraph: Digraph, pattern: Pattern) -> Partition | None:
    """Memoized ``solve`` for enumeration workloads (inputs are immutable)."""
    return solve(digraph, pattern)


def is_partitionable(digraph: Digraph, pattern: Pattern) -> bool:
    return cached_solve(digraph, pattern) is not None


def find_embedded_minimal_obstruction(digraph: Digraph, pattern: Pattern) -> Digraph:
    """Shrink a non-partitionable digraph to an embedded minimal obstruction.

    Scans vertices in ascending index order, deleting any vertex whose removal
    keeps the digraph non-partitionable; kept vertices stay necessary because
    partitionability is hereditary.  Deterministic for a given input.
    """
    if cached_solve(digraph, pattern) is not None:
        raise ValueError("digraph is partitionable; nothing to extract")
    current = digraph
    i = 0
    while i < current.n:
        smaller = current.delete_vertex(i)
        if cached_solve(smaller, pattern) is None:
            current = smaller
        else:
            i += 1
    assert cached_solve(current, pattern) is None
    return current
