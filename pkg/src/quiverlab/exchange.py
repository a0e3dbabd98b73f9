"""Skew-symmetrizable exchange matrices, their mutation, and diagram combinatorics.

All vertex indices in this module are 0-based; 1-based conversion happens at
the CLI/service boundary only.  Entries are unbounded Python integers, so
mutation never overflows silently.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import (
    BoundsExceeded,
    DimensionMismatch,
    NoSymmetrizer,
    NotSignSkewSymmetric,
)

Rows = tuple[tuple[int, ...], ...]


def sgn(x: int) -> int:
    """Sign with sgn(0) = 0."""
    return (x > 0) - (x < 0)


def pos(x: int) -> int:
    """Positive part [x]_+ = max(x, 0)."""
    return x if x > 0 else 0


def _freeze(rows) -> Rows:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class ExchangeMatrix:
    """A validated skew-symmetrizable integer matrix B.

    ``symmetrizer`` is the componentwise-minimal positive integer vector d
    with d_i B_ij = -d_j B_ji; ``skew_symmetric`` records whether B is
    entrywise skew-symmetric.
    """

    n: int
    rows: Rows
    symmetrizer: tuple[int, ...]
    skew_symmetric: bool

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.rows[i][j] for i in range(self.n))


def _check_sign_pattern(rows: Rows) -> None:
    n = len(rows)
    for i in range(n):
        if rows[i][i] != 0:
            raise NotSignSkewSymmetric(f"diagonal entry ({i},{i}) = {rows[i][i]} is nonzero")
        for j in range(i + 1, n):
            a, b = rows[i][j], rows[j][i]
            if (a == 0) != (b == 0):
                raise NotSignSkewSymmetric(
                    f"entries ({i},{j})={a} and ({j},{i})={b} are not both zero")
            if a != 0 and sgn(a) == sgn(b):
                raise NotSignSkewSymmetric(
                    f"entries ({i},{j})={a} and ({j},{i})={b} have equal signs")


def _symmetrizer(rows: Rows) -> tuple[int, ...]:
    """Smallest positive integral d with d_i B_ij = -d_j B_ji.

    Propagates the forced ratios d_j/d_i = |B_ij|/|B_ji| over each connected
    component of the nonzero pattern and checks consistency on back edges
    (cycle-product consistency).  Each component is scaled independently to
    the minimal integer vector.
    """
    n = len(rows)
    ratio: list[Fraction | None] = [None] * n
    component: list[int] = [-1] * n
    for root in range(n):
        if ratio[root] is not None:
            continue
        ratio[root] = Fraction(1)
        component[root] = root
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if rows[i][j] == 0:
                    continue
                forced = ratio[i] * Fraction(abs(rows[i][j]), abs(rows[j][i]))
                if ratio[j] is None:
                    ratio[j] = forced
                    component[j] = root
                    queue.append(j)
                elif ratio[j] != forced:
                    raise NoSymmetrizer(
                        f"inconsistent weight ratios around a cycle through {i} and {j}")
    d = [0] * n
    for root in set(component):
        members = [i for i in range(n) if component[i] == root]
        denom_lcm = 1
        for i in members:
            q = ratio[i].denominator
            denom_lcm = denom_lcm * q // gcd(denom_lcm, q)
        scaled = [int(ratio[i] * denom_lcm) for i in members]
        g = 0
        for v in scaled:
            g = gcd(g, v)
        for i, v in zip(members, scaled):
            d[i] = v // g
    return tuple(d)


def validate(rows) -> ExchangeMatrix:
    """Validate a square integer matrix as skew-symmetrizable.

    Returns an :class:`ExchangeMatrix` with the gcd-reduced symmetrizer and
    the skew-symmetric flag.  Raises :class:`NotSignSkewSymmetric` or
    :class:`NoSymmetrizer` otherwise.
    """
    frozen = _freeze(rows)
    n = len(frozen)
    if n == 0 or any(len(row) != n for row in frozen):
        raise DimensionMismatch("matrix must be square and nonempty")
    _check_sign_pattern(frozen)
    d = _symmetrizer(frozen)
    skew = all(frozen[i][j] == -frozen[j][i] for i in range(n) for j in range(n))
    return ExchangeMatrix(n=n, rows=frozen, symmetrizer=d, skew_symmetric=skew)


def mutate_matrix(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at vertex k (0-based).

    B'_ij = -B_ij when i = k or j = k, and otherwise
    B'_ij = B_ij + [B_ik]_+ [B_kj]_+ - [-B_ik]_+ [-B_kj]_+.
    The symmetrizer is unchanged; the result is re-checked.
    """
    n = B.n
    if not 0 <= k < n:
        raise IndexError(f"vertex {k} out of range for n={n}")
    old = B.rows
    new = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-old[i][j])
            else:
                row.append(old[i][j]
                           + pos(old[i][k]) * pos(old[k][j])
                           - pos(-old[i][k]) * pos(-old[k][j]))
        new.append(tuple(row))
    rows = tuple(new)
    d = B.symmetrizer
    for i in range(n):
        for j in range(n):
            if d[i] * rows[i][j] != -d[j] * rows[j][i]:
                raise NotSignSkewSymmetric(
                    f"mutation broke the symmetrizer relation at ({i},{j})")
    skew = B.skew_symmetric
    return ExchangeMatrix(n=n, rows=rows, symmetrizer=d, skew_symmetric=skew)


def mutate_along(B: ExchangeMatrix, ks) -> ExchangeMatrix:
    for k in ks:
        B = mutate_matrix(B, k)
    return B


def permute_matrix(B: ExchangeMatrix, perm) -> ExchangeMatrix:
    """Simultaneous row/column relabeling: vertex i becomes perm[i]."""
    n = B.n
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    rows = tuple(tuple(B.rows[inv[i]][inv[j]] for j in range(n)) for i in range(n))
    d = tuple(B.symmetrizer[inv[i]] for i in range(n))
    return ExchangeMatrix(n=n, rows=rows, symmetrizer=d, skew_symmetric=B.skew_symmetric)


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class Diagram:
    """Weighted directed graph of an exchange matrix.

    Edge i -> j present iff B_ji > 0, carrying weight |B_ij * B_ji|.
    At most one edge per unordered pair.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...]  # (src, dst, weight), sorted

    @property
    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i, j, _ in self.edges)

    @property
    def undirected(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset((i, j)) for i, j, _ in self.edges)

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arc_set

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for i, j, _ in self.edges:
            if i == v:
                out.add(j)
            elif j == v:
                out.add(i)
        return out

    def successors(self, v: int) -> list[int]:
        return sorted(j for i, j, _ in self.edges if i == v)


def diagram(B: ExchangeMatrix) -> Diagram:
    """Diagram of B: edge i -> j iff B_ji > 0, weight |B_ij B_ji|."""
    edges = []
    for i in range(B.n):
        for j in range(B.n):
            if B.rows[j][i] > 0:
                edges.append((i, j, abs(B.rows[i][j] * B.rows[j][i])))
    return Diagram(n=B.n, edges=tuple(sorted(edges)))


def is_acyclic(D: Diagram) -> bool:
    """True iff the diagram has no directed cycle (Kahn peeling)."""
    indeg = [0] * D.n
    succ = [[] for _ in range(D.n)]
    for i, j, _ in D.edges:
        indeg[j] += 1
        succ[i].append(j)
    queue = deque(v for v in range(D.n) if indeg[v] == 0)
    seen = 0
    while queue:
        v = queue.popleft()
        seen += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == D.n


@dataclass(frozen=True)
class Cycle:
    """A chordless (induced) cycle, listed in cyclic order.

    The vertex list starts at the smallest vertex and proceeds toward its
    smaller cycle-neighbor, which makes the representation canonical.
    """

    vertices: tuple[int, ...]
    oriented: bool

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def edge_pairs(self) -> tuple[frozenset[int], ...]:
        m = len(self.vertices)
        return tuple(frozenset((self.vertices[a], self.vertices[(a + 1) % m]))
                     for a in range(m))


def _cycle_from_subset(D: Diagram, subset: tuple[int, ...]) -> Cycle | None:
    """Return the induced cycle on ``subset`` or None if it is not one."""
    sset = set(subset)
    adj: dict[int, list[int]] = {v: [] for v in subset}
    for i, j, _ in D.edges:
        if i in sset and j in sset:
            adj[i].append(j)
            adj[j].append(i)
    if any(len(vs) != 2 for vs in adj.values()):
        return None
    # walk around; connectivity check falls out of visiting everything
    start = min(subset)
    nxt = min(adj[start])
    order = [start, nxt]
    while True:
        prev, cur = order[-2], order[-1]
        a, b = adj[cur]
        follow = b if a == prev else a
        if follow == start:
            break
        if follow in order:
            return None
        order.append(follow)
    if len(order) != len(subset):
        return None
    m = len(order)
    forward = all(D.has_arc(order[a], order[(a + 1) % m]) for a in range(m))
    backward = all(D.has_arc(order[(a + 1) % m], order[a]) for a in range(m))
    return Cycle(vertices=tuple(order), oriented=forward or backward)


@lru_cache(maxsize=None)
def chordless_cycles(D: Diagram) -> tuple[Cycle, ...]:
    """All induced cycles of the diagram, classified by orientation.

    Subset enumeration: fine for the desk scale this package targets
    (n <= 12 or so); output is deterministic, sorted by (length, vertices).
    """
    found = []
    for size in range(3, D.n + 1):
        for subset in itertools.combinations(range(D.n), size):
            cyc = _cycle_from_subset(D, subset)
            if cyc is not None:
                found.append(cyc)
    found.sort(key=lambda c: (len(c.vertices), tuple(sorted(c.vertices))))
    return tuple(found)


def directed_paths(D: Diagram, max_len: int | None = None):
    """Iterate all simple directed paths with 2..max_len vertices.

    ``max_len`` defaults to n (a simple path can never be longer).  Paths
    follow arrow directions; order is deterministic (DFS over sorted
    vertices).
    """
    if max_len is None:
        max_len = D.n
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    yield from _directed_paths_all(D, max_len)


@lru_cache(maxsize=None)
def _directed_paths_all(D: Diagram, max_len: int) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []

    def extend(path: list[int]) -> None:
        if len(path) >= 2:
            out.append(tuple(path))
        if len(path) == max_len:
            return
        for w in D.successors(path[-1]):
            if w not in path:
                path.append(w)
                extend(path)
                path.pop()

    for v in range(D.n):
        extend([v])
    return tuple(out)


def induced_directed_paths(D: Diagram, max_len: int | None = None):
    """Directed paths that are full subdiagrams (no edges off the path).

    The positive-edge path invariants quantify over these: a simple
    directed path with a chord is not a path subdiagram, and the positive-
    edge bound genuinely fails for chorded paths.
    """
    if max_len is None:
        max_len = D.n
    if max_len < 2:
        raise ValueError("max_len must be at least 2")
    return _induced_directed_paths_all(D, max_len)


@lru_cache(maxsize=None)
def _induced_directed_paths_all(D: Diagram, max_len: int) -> tuple[tuple[int, ...], ...]:
    pairs = D.undirected
    out: list[tuple[int, ...]] = []

    def extend(path: list[int]) -> None:
        if len(path) >= 2:
            out.append(tuple(path))
        if len(path) == max_len:
            return
        for w in D.successors(path[-1]):
            if w in path:
                continue
            if any(frozenset((w, v)) in pairs for v in path[:-1]):
                continue  # chord: not an induced path
            path.append(w)
            extend(path)
            path.pop()

    for v in range(D.n):
        extend([v])
    return tuple(out)


# ---------------------------------------------------------------------------
# mutation classes


def canonical_form(B: ExchangeMatrix | Rows) -> Rows:
    """Lexicographic minimum of B over all simultaneous vertex permutations.

    Brute force over n! permutations; enforced for n <= 8 only.
    """
    rows = B.rows if isinstance(B, ExchangeMatrix) else _freeze(B)
    n = len(rows)
    if n > 8:
        raise ValueError("canonical_form is brute-force and limited to n <= 8")
    best: Rows | None = None
    rng = range(n)
    for perm in itertools.permutations(rng):
        cand = tuple(tuple(rows[perm[i]][perm[j]] for j in rng) for i in rng)
        if best is None or cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class MutationClassReport:
    """Breadth-first closure of a matrix under mutation, up to relabeling."""

    representatives: tuple[Rows, ...]
    class_size: int
    acyclic_witness: tuple[int, ...] | None
    truncated: bool
    max_class_size: int
    max_depth: int

    @property
    def acyclic_found(self) -> bool:
        return self.acyclic_witness is not None


def mutation_class(B: ExchangeMatrix, max_class_size: int = 1000,
                   max_depth: int = 64, strict: bool = False) -> MutationClassReport:
    """Enumerate the mutation class of B modulo simultaneous permutation.

    BFS over mutations, deduplicated by :func:`canonical_form`.  Records a
    witness walk to the first acyclic member found.  When the bounds cut the
    search, the report is flagged truncated; with ``strict=True`` a
    :class:`BoundsExceeded` carrying the partial report is raised instead.
    """
    if max_class_size <= 0 or max_depth <= 0:
        raise ValueError("bounds must be positive")
    start_canon = canonical_form(B)
    visited = {start_canon}
    queue: deque[tuple[ExchangeMatrix, tuple[int, ...]]] = deque([(B, ())])
    witness: tuple[int, ...] | None = () if is_acyclic(diagram(B)) else None
    truncated = False
    while queue:
        cur, walk = queue.popleft()
        at_depth_cap = len(walk) >= max_depth
        for k in range(B.n):
            nxt = mutate_matrix(cur, k)
            canon = canonical_form(nxt)
            if canon in visited:
                continue
            if at_depth_cap or len(visited) >= max_class_size:
                # a genuinely new member exists beyond the bounds
                truncated = True
                continue
            visited.add(canon)
            nwalk = walk + (k,)
            if witness is None and is_acyclic(diagram(nxt)):
                witness = nwalk
            queue.append((nxt, nwalk))
    report = MutationClassReport(
        representatives=tuple(sorted(visited)),
        class_size=len(visited),
        acyclic_witness=witness,
        truncated=truncated,
        max_class_size=max_class_size,
        max_depth=max_depth,
    )
    if strict and truncated:
        raise BoundsExceeded("mutation class search hit its bounds", report=report)
    return report
