"""c-vector tuples, Y-seeds, and seed mutation along walks.

A Y-seed pairs a tuple of n sign-coherent nonzero integer vectors with a
skew-symmetrizable exchange matrix.  Mutation transforms both jointly; the
mutated tuple is re-checked for sign coherence because mutation of an
arbitrary sign-coherent tuple need not produce one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, MixedSigns, SignCoherenceLost, ZeroVector
from .exchange import ExchangeMatrix, mutate_matrix, permute_matrix, pos

Vector = tuple[int, ...]


def sign_of(c) -> int:
    """+1 for an all-nonnegative vector, -1 for all-nonpositive.

    Raises :class:`ZeroVector` on the zero vector and :class:`MixedSigns`
    when both strict signs occur, so the result is always well-defined.
    """
    has_pos = any(x > 0 for x in c)
    has_neg = any(x < 0 for x in c)
    if has_pos and has_neg:
        raise MixedSigns(f"vector {tuple(c)} has entries of both signs")
    if not has_pos and not has_neg:
        raise ZeroVector("zero vector has no sign")
    return 1 if has_pos else -1


def is_sign_coherent(c) -> bool:
    return not (any(x > 0 for x in c) and any(x < 0 for x in c))


@dataclass(frozen=True)
class YSeed:
    """A c-vector tuple paired with its exchange matrix."""

    cvectors: tuple[Vector, ...]
    B: ExchangeMatrix

    def __post_init__(self):
        n = self.B.n
        if len(self.cvectors) != n:
            raise DimensionMismatch(
                f"{len(self.cvectors)} c-vectors for an {n}x{n} matrix")
        for i, c in enumerate(self.cvectors):
            if len(c) != n:
                raise DimensionMismatch(f"c-vector {i} has length {len(c)}, want {n}")
            sign_of(c)  # raises ZeroVector / MixedSigns

    @property
    def n(self) -> int:
        return self.B.n


def initial_seed(B0: ExchangeMatrix) -> YSeed:
    """The seed with the standard basis as its c-vector tuple."""
    n = B0.n
    basis = tuple(tuple(1 if a == i else 0 for a in range(n)) for i in range(n))
    return YSeed(cvectors=basis, B=B0)


def mutate_seed(s: YSeed, k: int) -> YSeed:
    """Seed mutation at vertex k (0-based).

    c'_k = -c_k and c'_i = c_i + [sgn(c_k) B_ki]_+ c_k for i != k, with
    B' the matrix mutation.  Raises :class:`SignCoherenceLost` when the
    mutated tuple has a mixed-sign vector, which signals a non-seed input
    (for seeds reachable from an acyclic skew-symmetric initial seed it
    cannot happen).
    """
    n = s.n
    if not 0 <= k < n:
        raise IndexError(f"vertex {k} out of range for n={n}")
    ck = s.cvectors[k]
    eps = sign_of(ck)
    new_vectors = []
    for i, ci in enumerate(s.cvectors):
        if i == k:
            new_vectors.append(tuple(-x for x in ck))
            continue
        coef = pos(eps * s.B.rows[k][i])
        if coef:
            new_vectors.append(tuple(a + coef * b for a, b in zip(ci, ck)))
        else:
            new_vectors.append(ci)
    for i, c in enumerate(new_vectors):
        if not is_sign_coherent(c):
            raise SignCoherenceLost(
                f"mutation at {k} produced mixed-sign c-vector {c} at index {i}",
                index=i, vector=c)
        if all(x == 0 for x in c):
            raise SignCoherenceLost(
                f"mutation at {k} produced the zero c-vector at index {i}",
                index=i, vector=c)
    return YSeed(cvectors=tuple(new_vectors), B=mutate_matrix(s.B, k))


@dataclass(frozen=True)
class WalkRecord:
    """A walk in the mutation tree: the start seed and every step taken.

    Each step stores the vertex label and the seed it produced; replaying
    the reversed label sequence from the final seed returns the start.
    """

    start: YSeed
    steps: tuple[tuple[int, YSeed], ...]

    @property
    def final(self) -> YSeed:
        return self.steps[-1][1] if self.steps else self.start

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.steps)

    @property
    def seeds(self) -> tuple[YSeed, ...]:
        return (self.start,) + tuple(s for _, s in self.steps)


def apply_walk(s: YSeed, ks) -> WalkRecord:
    """Fold :func:`mutate_seed` over ``ks``, recording every intermediate seed.

    On sign-coherence failure the error is re-raised with the walk prefix up
    to and including the failing label.
    """
    steps = []
    cur = s
    for pos_idx, k in enumerate(ks):
        try:
            cur = mutate_seed(cur, k)
        except SignCoherenceLost as err:
            raise SignCoherenceLost(
                str(err), index=err.index, vector=err.vector,
                walk_prefix=tuple(ks[:pos_idx + 1])) from None
        steps.append((k, cur))
    return WalkRecord(start=s, steps=tuple(steps))


def permute_seed(s: YSeed, perm) -> YSeed:
    """Relabel vertices: vertex i becomes perm[i], coordinates included."""
    n = s.n
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    vectors = tuple(tuple(s.cvectors[inv[i]][inv[a]] for a in range(n))
                    for i in range(n))
    return YSeed(cvectors=vectors, B=permute_matrix(s.B, perm))
