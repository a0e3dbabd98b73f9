"""Quasi-Cartan companions: construction, mutation, admissibility, cuts.

A companion of a skew-symmetrizable B is a sign-symmetric integer matrix A
with diagonal 2 and |A_ij| = |B_ij| off the diagonal.  The free data is one
sign per edge of the diagram; admissibility constrains those signs on every
chordless cycle (odd number of positive edges on oriented cycles, even on
non-oriented ones), which is a linear parity system over GF(2).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import gf2
from .errors import DimensionMismatch, NotACompanion, NotAdmissible
from .exchange import (
    Cycle,
    Diagram,
    ExchangeMatrix,
    Rows,
    chordless_cycles,
    diagram,
    induced_directed_paths,
    mutate_matrix,
    pos,
    sgn,
)
from .rootsys import CartanMatrix
from .yseed import YSeed, sign_of

Edge = frozenset  # undirected edge {i, j}


@dataclass(frozen=True)
class QuasiCartan:
    """A verified quasi-Cartan companion, carrying the B it accompanies."""

    rows: Rows
    B: ExchangeMatrix

    @property
    def n(self) -> int:
        return self.B.n

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def positive_edges(self) -> frozenset[Edge]:
        n = self.n
        return frozenset(frozenset((i, j)) for i in range(n) for j in range(i + 1, n)
                         if self.rows[i][j] > 0)


def companion_defect(A: Rows, B: ExchangeMatrix) -> tuple[int, int] | None:
    """First entry violating the companion conditions, or None.

    Conditions: diagonal 2; |A_ij| = |B_ij| off-diagonal; sign symmetry
    sgn(A_ij) = sgn(A_ji) (which makes B's symmetrizer work for A too).
    """
    n = B.n
    if len(A) != n or any(len(row) != n for row in A):
        raise DimensionMismatch("companion candidate has the wrong shape")
    for i in range(n):
        if A[i][i] != 2:
            return (i, i)
        for j in range(n):
            if i == j:
                continue
            if abs(A[i][j]) != abs(B.rows[i][j]):
                return (i, j)
            if sgn(A[i][j]) != sgn(A[j][i]):
                return (i, j)
    return None


def is_companion_of(A, B: ExchangeMatrix) -> bool:
    """Check the quasi-Cartan companion conditions entrywise."""
    rows = tuple(tuple(int(x) for x in row) for row in A)
    return companion_defect(rows, B) is None


def make_companion(A, B: ExchangeMatrix) -> QuasiCartan:
    rows = tuple(tuple(int(x) for x in row) for row in A)
    defect = companion_defect(rows, B)
    if defect is not None:
        raise NotACompanion(f"entry {defect} violates the companion conditions",
                            entry=defect)
    return QuasiCartan(rows=rows, B=B)


def generalized_cartan(B: ExchangeMatrix) -> QuasiCartan:
    """The all-negative companion A_ij = -|B_ij| (no acyclicity required)."""
    n = B.n
    rows = tuple(tuple(2 if i == j else -abs(B.rows[i][j]) for j in range(n))
                 for i in range(n))
    return QuasiCartan(rows=rows, B=B)


# ---------------------------------------------------------------------------
# construction from c-vectors


def pairing_matrix(A0: CartanMatrix, s: YSeed) -> Rows:
    """Gram-type matrix of the c-vectors: entry (i, j) is c_i^T A0 c_j.

    For symmetric A0 this is the literal product; for symmetrizable A0 the
    d-weighted form c_i^T (D A0) c_j / d_i is used so the diagonal can stay
    2 (experimental scope).  Raises NotACompanion if the weighted entries
    fail to be integers.
    """
    n = A0.n
    C = s.cvectors
    if A0.symmetric:
        S = A0.rows
        d = (1,) * n
    else:
        S = A0.gram()
        d = A0.symmetrizer
    # SC[j] = S @ c_j, then entry (i,j) = c_i . SC[j] / d_i
    SC = [tuple(sum(S[a][b] * C[j][b] for b in range(n)) for a in range(n))
          for j in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            num = sum(C[i][a] * SC[j][a] for a in range(n))
            if num % d[i]:
                raise NotACompanion(
                    f"pairing ({i},{j}) = {num} is not divisible by d_{i} = {d[i]}",
                    entry=(i, j))
            row.append(num // d[i])
        rows.append(tuple(row))
    return tuple(rows)


def sign_rule_violations(A: Rows, s: YSeed) -> list[dict]:
    """Check the two companion sign rules on every nonzero entry of B.

    For B_ji != 0: if sgn(B_ji) = sgn(c_j) the pairing must equal -|B_ji|;
    if sgn(B_ji) = -sgn(c_j) it must equal -sgn(c_i) sgn(c_j) |B_ji|.
    """
    B = s.B
    out = []
    signs = [sign_of(c) for c in s.cvectors]
    for j in range(B.n):
        for i in range(B.n):
            b = B.rows[j][i]
            if b == 0 or i == j:
                continue
            if sgn(b) == signs[j]:
                expected = -abs(b)
                rule = "aligned"
            else:
                expected = -signs[i] * signs[j] * abs(b)
                rule = "opposed"
            if A[j][i] != expected:
                out.append({"j": j, "i": i, "rule": rule,
                            "pairing": A[j][i], "expected": expected})
    return out


def companion_from_cvectors(A0: CartanMatrix, s: YSeed) -> QuasiCartan:
    """Build and verify the companion defined by the seed's c-vectors.

    Verifies diagonal 2, |A_ij| = |B_ij|, and both sign rules on every
    edge; any violation raises :class:`NotACompanion` (an unreachable seed
    or an upstream bug).
    """
    rows = pairing_matrix(A0, s)
    defect = companion_defect(rows, s.B)
    if defect is not None:
        raise NotACompanion(
            f"c-vector pairing violates the companion conditions at {defect}",
            entry=defect)
    bad = sign_rule_violations(rows, s)
    if bad:
        v = bad[0]
        raise NotACompanion(
            f"sign rule broken at ({v['j']},{v['i']}): pairing {v['pairing']}, "
            f"expected {v['expected']}", entry=(v["j"], v["i"]))
    return QuasiCartan(rows=rows, B=s.B)


# ---------------------------------------------------------------------------
# companion mutation


@dataclass(frozen=True)
class EpsilonMutation:
    """Result of an epsilon-mutation; returned even when not a companion."""

    rows: Rows
    mutated_B: ExchangeMatrix
    is_companion: bool

    @property
    def companion(self) -> QuasiCartan | None:
        if not self.is_companion:
            return None
        return QuasiCartan(rows=self.rows, B=self.mutated_B)


def epsilon_mutate(A: QuasiCartan, B: ExchangeMatrix, k: int, eps: int) -> EpsilonMutation:
    """Sign-parameterized companion mutation at k.

    A'_ik = eps sgn(B_ki) A_ik, A'_kj = eps sgn(B_kj) A_kj, and
    A'_ij = A_ij - sgn(A_ik A_kj) [B_ik B_kj]_+ for i, j != k.  The result
    can fail to be a companion of the mutated matrix; the flag says whether
    it is.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if A.B is not B:
        _require_same_matrix(A, B)
    n = B.n
    old = A.rows
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k and j == k:
                row.append(old[k][k])
            elif j == k:
                row.append(eps * sgn(B.rows[k][i]) * old[i][k])
            elif i == k:
                row.append(eps * sgn(B.rows[k][j]) * old[k][j])
            else:
                row.append(old[i][j]
                           - sgn(old[i][k] * old[k][j]) * pos(B.rows[i][k] * B.rows[k][j]))
        rows.append(tuple(row))
    rows = tuple(rows)
    Bp = mutate_matrix(B, k)
    return EpsilonMutation(rows=rows, mutated_B=Bp,
                           is_companion=companion_defect(rows, Bp) is None)


def _require_same_matrix(A: QuasiCartan, B: ExchangeMatrix) -> None:
    if A.B.rows != B.rows:
        raise DimensionMismatch("companion was built for a different exchange matrix")


def mutate_basis(basis, A: QuasiCartan, B: ExchangeMatrix, k: int, eps: int):
    """Basis transformation matching the epsilon-mutation of the Gram form.

    e'_k = -e_k; e'_i = e_i - A_ki e_k when eps * B_ki > 0; e'_i = e_i
    otherwise.  With T the column matrix of the new basis, T^T (DA) T is
    the symmetrized form of the eps-mutated companion.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    _require_same_matrix(A, B)
    out = []
    ek = basis[k]
    for i, ei in enumerate(basis):
        if i == k:
            out.append(tuple(-x for x in ek))
        elif eps * B.rows[k][i] > 0:
            a = A.rows[k][i]
            out.append(tuple(x - a * y for x, y in zip(ei, ek)))
        else:
            out.append(tuple(ei))
    return tuple(out)


# ---------------------------------------------------------------------------
# admissibility


def positive_count(A: QuasiCartan | Rows, cycle: Cycle) -> int:
    rows = A.rows if isinstance(A, QuasiCartan) else A
    count = 0
    for e in cycle.edge_pairs:
        i, j = sorted(e)
        if rows[i][j] > 0:
            count += 1
    return count


def cycle_parity_ok(A: QuasiCartan | Rows, cycle: Cycle) -> bool:
    cnt = positive_count(A, cycle)
    return cnt % 2 == (1 if cycle.oriented else 0)


def is_admissible(A: QuasiCartan, B: ExchangeMatrix | None = None):
    """Odd positive-edge count on every oriented chordless cycle, even on
    every non-oriented one; returns (ok, violating cycle or None)."""
    B = A.B if B is None else B
    _require_same_matrix(A, B)
    for cycle in chordless_cycles(diagram(B)):
        if not cycle_parity_ok(A, cycle):
            return False, cycle
    return True, None


def triangle_condition(A: QuasiCartan, B: ExchangeMatrix, k: int) -> bool:
    """Parity condition on the triangles traversed through k.

    A triangle through k constrains the eps-mutation only when a directed
    path passes through k inside it (k neither source nor sink there);
    mutation at a source or sink of a triangle leaves those entries alone.
    With that quantifier the condition is exactly equivalent to the
    eps-mutation at k landing on a companion of the mutated matrix, for
    either eps.
    """
    _require_same_matrix(A, B)
    D = diagram(B)
    for cycle in chordless_cycles(D):
        if len(cycle) != 3 or k not in cycle.vertices:
            continue
        a, b = (v for v in cycle.vertices if v != k)
        k_in = D.has_arc(a, k) or D.has_arc(b, k)
        k_out = D.has_arc(k, a) or D.has_arc(k, b)
        if not (k_in and k_out):
            continue  # k is a source or sink of this triangle
        if not cycle_parity_ok(A, cycle):
            return False
    return True


def check_path_property(A: QuasiCartan, B: ExchangeMatrix | None = None) -> list[tuple[int, ...]]:
    """Directed path subdiagrams carrying two or more positive edges.

    Quantifies over induced paths (full subdiagrams): a chorded path can
    legitimately pick up two positive edges, so only the chordless ones
    carry the at-most-one guarantee.  Empty for companions built from
    c-vectors.
    """
    B = A.B if B is None else B
    _require_same_matrix(A, B)
    bad = []
    for path in induced_directed_paths(diagram(B)):
        positives = sum(1 for a in range(len(path) - 1)
                        if A.rows[path[a]][path[a + 1]] > 0)
        if positives >= 2:
            bad.append(path)
    return bad


@dataclass(frozen=True)
class AdmissibleCut:
    """Edge set meeting every oriented chordless cycle exactly once and
    every non-oriented one an even number of times."""

    edges: frozenset[Edge]

    def sorted_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(tuple(sorted(e)) for e in self.edges))


def admissible_cut(A: QuasiCartan, B: ExchangeMatrix | None = None) -> AdmissibleCut:
    """The positive-edge set of A, validated against the cut conditions.

    Note the cut condition on oriented cycles is *exactly one*, which is
    stronger than the odd-count admissibility condition; companions built
    from c-vectors always satisfy it.
    """
    B = A.B if B is None else B
    _require_same_matrix(A, B)
    cut = A.positive_edges()
    for cycle in chordless_cycles(diagram(B)):
        inside = sum(1 for e in cycle.edge_pairs if e in cut)
        if cycle.oriented and inside != 1:
            raise NotAdmissible(
                f"oriented cycle {cycle.vertices} carries {inside} cut edges, want 1",
                cycle=cycle)
        if not cycle.oriented and inside % 2:
            raise NotAdmissible(
                f"non-oriented cycle {cycle.vertices} carries {inside} cut edges, want even",
                cycle=cycle)
    return AdmissibleCut(edges=cut)


# ---------------------------------------------------------------------------
# sign changes


def sign_change(A: QuasiCartan, sigma) -> QuasiCartan:
    """Simultaneous row/column sign changes: entries become s_i s_j A_ij."""
    n = A.n
    if len(sigma) != n or any(s not in (1, -1) for s in sigma):
        raise ValueError("sigma must be n entries of +-1")
    rows = tuple(tuple(sigma[i] * sigma[j] * A.rows[i][j] for j in range(n))
                 for i in range(n))
    return QuasiCartan(rows=rows, B=A.B)


def sign_equivalent(A1: QuasiCartan, A2: QuasiCartan):
    """A sign vector with sign_change(A1, sigma) = A2, or None.

    Propagates forced signs over each connected component of the edge
    pattern (one free choice per component, resolved to +1 at the smallest
    vertex).
    """
    if A1.n != A2.n:
        raise DimensionMismatch("companions have different sizes")
    n = A1.n
    for i in range(n):
        for j in range(n):
            if abs(A1.rows[i][j]) != abs(A2.rows[i][j]):
                return None
    sigma = [0] * n
    for root in range(n):
        if sigma[root]:
            continue
        sigma[root] = 1
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or A1.rows[i][j] == 0:
                    continue
                forced = sigma[i] * sgn(A1.rows[i][j]) * sgn(A2.rows[i][j])
                if sigma[j] == 0:
                    sigma[j] = forced
                    stack.append(j)
                elif sigma[j] != forced:
                    return None
    return tuple(sigma)


# ---------------------------------------------------------------------------
# existence decision


@dataclass(frozen=True)
class ParityCertificate:
    """Chordless cycles whose parity requirements sum to a contradiction.

    Every edge appears an even number of times across the listed cycles
    while the required parities sum to 1 mod 2.
    """

    cycles: tuple[Cycle, ...]

    def parities(self) -> tuple[int, ...]:
        return tuple(1 if c.oriented else 0 for c in self.cycles)


@dataclass(frozen=True)
class CompanionSearch:
    companion: QuasiCartan | None
    certificate: ParityCertificate | None

    @property
    def found(self) -> bool:
        return self.companion is not None


def _edge_index(D: Diagram) -> dict[Edge, int]:
    return {frozenset((i, j)): t for t, (i, j, _) in enumerate(D.edges)}


def companion_from_signs(B: ExchangeMatrix, signs: dict) -> QuasiCartan:
    """Companion from an explicit edge-sign assignment.

    ``signs`` maps every undirected edge {i, j} of the diagram (as a
    frozenset or pair) to +1 or -1; the domain must be exactly the edge
    set.  This is the free data in a companion: entry (i, j) becomes
    sign * |B_ij|.
    """
    normalized = {frozenset(e): s for e, s in signs.items()}
    edges = {frozenset((i, j)) for i, j, _ in diagram(B).edges}
    if set(normalized) != edges:
        raise ValueError("sign assignment domain must be exactly the edge set")
    if any(s not in (1, -1) for s in normalized.values()):
        raise ValueError("signs must be +1 or -1")
    positive = frozenset(e for e, s in normalized.items() if s == 1)
    return _companion_with_positive(B, positive)


def _companion_with_positive(B: ExchangeMatrix, positive: frozenset[Edge]) -> QuasiCartan:
    n = B.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(2)
            elif frozenset((i, j)) in positive:
                row.append(abs(B.rows[i][j]))
            else:
                row.append(-abs(B.rows[i][j]))
        rows.append(tuple(row))
    return QuasiCartan(rows=tuple(rows), B=B)


def find_admissible_companion(B: ExchangeMatrix, cross_check: bool = False) -> CompanionSearch:
    """Decide whether B has an admissible companion.

    One GF(2) variable per edge (1 = positive sign), one parity equation
    per chordless cycle; a solution gives the companion, an inconsistency
    gives a certificate of cycles summing to 0 = 1.  The returned outcome
    is always self-validated; ``cross_check=True`` additionally runs the
    exhaustive sign search (feasible up to 20 edges) and asserts agreement.
    """
    D = diagram(B)
    cycles = chordless_cycles(D)
    index = _edge_index(D)
    rows = []
    rhs = []
    for cycle in cycles:
        mask = 0
        for e in cycle.edge_pairs:
            mask |= 1 << index[e]
        rows.append(mask)
        rhs.append(1 if cycle.oriented else 0)
    solution, cert = gf2.solve(rows, rhs, len(index))
    if solution is not None:
        positive = frozenset(e for e, t in index.items()
                             if (solution.assignment >> t) & 1)
        companion = _companion_with_positive(B, positive)
        ok, witness = is_admissible(companion)
        if not ok:
            raise AssertionError(f"parity solve produced a non-admissible companion "
                                 f"(cycle {witness.vertices})")
        result = CompanionSearch(companion=companion, certificate=None)
    else:
        chosen = tuple(cycles[r] for r in cert.equations)
        if not gf2.check_certificate(rows, rhs, cert.equations):
            raise AssertionError("parity solve produced an invalid certificate")
        result = CompanionSearch(companion=None,
                                 certificate=ParityCertificate(cycles=chosen))
    if cross_check and len(index) <= 20:
        exhaustive = exhaustive_admissible_companions(B)
        if bool(exhaustive) != result.found:
            raise AssertionError("parity solve disagrees with exhaustive search")
    return result


def exhaustive_admissible_companions(B: ExchangeMatrix) -> list[QuasiCartan]:
    """All admissible companions by brute force over edge signs (<= 20 edges)."""
    D = diagram(B)
    edges = sorted(frozenset((i, j)) for i, j, _ in D.edges)
    if len(edges) > 20:
        raise ValueError("exhaustive search limited to 20 edges")
    out = []
    for signs in itertools.product((False, True), repeat=len(edges)):
        positive = frozenset(e for e, flag in zip(edges, signs) if flag)
        companion = _companion_with_positive(B, positive)
        ok, _ = is_admissible(companion)
        if ok:
            out.append(companion)
    return out
