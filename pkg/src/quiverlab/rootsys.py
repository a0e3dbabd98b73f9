"""Generalized Cartan matrices, reflections, and real-root certification.

The proven scope is symmetric A0 (coming from a skew-symmetric acyclic
exchange matrix), where the bilinear form is A0 itself and every real root
has squared norm 2.  Symmetrizable A0 is accepted with the d-weighted
symmetrized form; callers treating that case should regard it as
experimental.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatch, NotAcyclic, NotUnitNorm
from .exchange import ExchangeMatrix, diagram, is_acyclic

Vector = tuple[int, ...]


@dataclass(frozen=True)
class CartanMatrix:
    """Generalized Cartan matrix of an acyclic exchange matrix.

    Diagonal 2, off-diagonal A_ij = -|B_ij| <= 0; shares B's symmetrizer,
    so d_i A_ij = d_j A_ji.
    """

    n: int
    rows: tuple[Vector, ...]
    symmetrizer: tuple[int, ...]

    @property
    def symmetric(self) -> bool:
        return all(self.rows[i][j] == self.rows[j][i]
                   for i in range(self.n) for j in range(self.n))

    def gram(self) -> tuple[Vector, ...]:
        """Symmetrized Gram matrix S = D * A0 (equals A0 when symmetric)."""
        return tuple(tuple(self.symmetrizer[i] * x for x in row)
                     for i, row in enumerate(self.rows))


def cartan_of(B0: ExchangeMatrix) -> CartanMatrix:
    """A_ii = 2 and A_ij = -|B_ij|; defined only for acyclic diagrams."""
    if not is_acyclic(diagram(B0)):
        raise NotAcyclic("the diagram has an oriented cycle; no Cartan matrix")
    n = B0.n
    rows = tuple(tuple(2 if i == j else -abs(B0.rows[i][j]) for j in range(n))
                 for i in range(n))
    return CartanMatrix(n=n, rows=rows, symmetrizer=B0.symmetrizer)


def bilinear(A0: CartanMatrix, u, v) -> int:
    """u^T A0 v, exactly."""
    n = A0.n
    if len(u) != n or len(v) != n:
        raise DimensionMismatch("vector length does not match the matrix")
    return sum(u[i] * A0.rows[i][j] * v[j] for i in range(n) for j in range(n))


def reflect_simple(A0: CartanMatrix, i: int, v) -> Vector:
    """Simple reflection s_i, the linear extension of a_j -> a_j - A_ij a_i."""
    coef = sum(A0.rows[i][j] * v[j] for j in range(A0.n))
    return tuple(x - coef if j == i else x for j, x in enumerate(v))


def reflect_in_root(A0: CartanMatrix, c, v) -> Vector:
    """Reflection in a norm-2 root c: v - (c^T A0 v) c.

    Requires the symmetric form with c^T A0 c = 2; anything else raises
    :class:`NotUnitNorm`.
    """
    nrm = bilinear(A0, c, c)
    if nrm != 2:
        raise NotUnitNorm(f"c^T A0 c = {nrm}, need 2")
    coef = bilinear(A0, c, v)
    return tuple(x - coef * y for x, y in zip(v, c))


def height(v) -> int:
    return sum(abs(x) for x in v)


@dataclass(frozen=True)
class RootCertificate:
    """Replayable witness: start from sign * (simple root `base`) and apply
    the simple reflections in `word`, left to right."""

    base: int
    word: tuple[int, ...]
    sign: int

    def replay(self, A0: CartanMatrix) -> Vector:
        v = tuple(self.sign if a == self.base else 0 for a in range(A0.n))
        for i in self.word:
            v = reflect_simple(A0, i, v)
        return v


@dataclass(frozen=True)
class RootQuery:
    status: str  # "yes" | "no" | "unknown"
    witness: RootCertificate | None = None
    reason: str = ""


@dataclass
class RealRootIndex:
    """Incremental height-bounded closure of the positive real roots.

    Every positive real root of height <= H is reachable from a simple root
    through a chain of positive real roots of strictly increasing height, so
    once the frontier under a height bound empties, the set of stored roots
    of height <= H is complete and membership is decisive.
    """

    A0: CartanMatrix
    max_visited: int = 500_000
    _roots: dict[Vector, tuple[int, ...]] = field(default_factory=dict)
    _bases: dict[Vector, int] = field(default_factory=dict)
    _frontier: list[Vector] = field(default_factory=list)
    _explored_height: int = 0
    _exhausted: bool = False  # frontier emptied: the whole orbit is finite
    _overflowed: bool = False

    def __post_init__(self):
        n = self.A0.n
        for i in range(n):
            root = tuple(1 if a == i else 0 for a in range(n))
            self._roots[root] = ()
            self._bases[root] = i
            self._frontier.append(root)
        self._gram = self.A0.gram()
        self._norms = frozenset(2 * d for d in self.A0.symmetrizer)

    def expand(self, bound: int) -> None:
        if self._exhausted or self._overflowed or bound <= self._explored_height:
            return
        pending = list(self._frontier)
        deferred: set[Vector] = set()
        while pending:
            nxt: list[Vector] = []
            for v in pending:
                for i in range(self.A0.n):
                    w = reflect_simple(self.A0, i, v)
                    if any(x < 0 for x in w) or w in self._roots:
                        continue
                    if height(w) > bound:
                        deferred.add(v)  # revisit when the bound grows
                        continue
                    self._roots[w] = self._roots[v] + (i,)
                    self._bases[w] = self._bases[v]
                    nxt.append(w)
                    if len(self._roots) > self.max_visited:
                        self._overflowed = True
                        return
            pending = nxt
        self._frontier = sorted(deferred)
        self._explored_height = bound
        if not deferred:
            self._exhausted = True

    def certify(self, v, bound: int | None = None) -> RootQuery:
        """Decide real-root membership for v under a height bound."""
        v = tuple(v)
        if all(x == 0 for x in v):
            return RootQuery("no", reason="zero vector")
        if any(x > 0 for x in v) and any(x < 0 for x in v):
            return RootQuery("no", reason="mixed signs")
        sign = 1 if any(x > 0 for x in v) else -1
        u = v if sign == 1 else tuple(-x for x in v)
        gram = self._gram
        nrm = sum(gram[i][j] * u[i] * u[j]
                  for i in range(self.A0.n) for j in range(self.A0.n))
        if nrm not in self._norms:
            return RootQuery("no", reason=f"squared norm {nrm} not attained by a simple root")
        h = height(u)
        if bound is None:
            bound = max(h, 2 * self.A0.n)
        if not self._exhausted:
            if bound < h:
                return RootQuery(
                    "unknown", reason=f"height bound {bound} below height {h}")
            self.expand(bound)
        if u in self._roots:
            cert = RootCertificate(base=self._bases[u], word=self._roots[u], sign=sign)
            return RootQuery("yes", witness=cert)
        if self._exhausted:
            return RootQuery("no", reason="not a root of the (finite) positive system")
        if self._overflowed:
            return RootQuery("unknown", reason="visited-set cap hit before a decision")
        return RootQuery("no", reason=f"not in the complete height-{bound} orbit")


def is_real_root(A0: CartanMatrix, v, bound: int | None = None) -> RootQuery:
    """Breadth-first real-root certification with a height bound.

    "yes" always carries a replayable witness; "no" means either a failed
    necessary condition (norm, sign coherence) or exclusion from the
    complete bounded orbit; "unknown" means the bounds were insufficient.
    """
    return RealRootIndex(A0).certify(v, bound)
