"""GF(2) linear systems as int bitsets, with infeasibility certificates.

Rows are Python ints used as bitmasks over the variable indices.  Solving
tracks which combination of input equations produced each reduced row, so an
inconsistent system yields the subset of original equations whose sum is the
contradiction 0 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Gf2Solution:
    assignment: int  # bitmask over variables; free variables are 0


@dataclass(frozen=True)
class Gf2Certificate:
    """Indices of input equations summing to an inconsistent parity."""

    equations: tuple[int, ...]


def solve(rows: list[int], rhs: list[int], n_vars: int):
    """Solve M x = b over GF(2).

    Returns ``(Gf2Solution, None)`` when consistent (free variables set to
    zero) and ``(None, Gf2Certificate)`` when not.  The certificate is the
    elimination-produced zero-sum combination, greedily reduced to small
    support with the other left-nullspace combinations.
    """
    if len(rows) != len(rhs):
        raise ValueError("rows and rhs lengths differ")
    work = [(rows[r], rhs[r] & 1, 1 << r) for r in range(len(rows))]
    pivots: dict[int, tuple[int, int, int]] = {}  # col -> reduced row
    null_combos: list[int] = []
    contradiction: int | None = None
    for lhs, b, combo in work:
        for col, (plhs, pb, pcombo) in pivots.items():
            if (lhs >> col) & 1:
                lhs ^= plhs
                b ^= pb
                combo ^= pcombo
        if lhs == 0:
            if b == 0:
                null_combos.append(combo)
            elif contradiction is None:
                contradiction = combo
            else:
                null_combos.append(combo ^ contradiction)
            continue
        col = lhs.bit_length() - 1
        pivots[col] = (lhs, b, combo)
    if contradiction is not None:
        combo = contradiction
        improved = True
        while improved:
            improved = False
            for z in null_combos:
                cand = combo ^ z
                if cand.bit_count() < combo.bit_count():
                    combo = cand
                    improved = True
        eqs = tuple(r for r in range(len(rows)) if (combo >> r) & 1)
        return None, Gf2Certificate(equations=eqs)
    # every non-leading bit of a pivot row sits below its leading bit, so
    # assigning pivot variables in increasing column order is well-founded
    # (free variables stay zero)
    assignment = 0
    for col in sorted(pivots):
        lhs, b, _ = pivots[col]
        rest = lhs & ~(1 << col)
        if ((rest & assignment).bit_count() & 1) != b:
            assignment |= 1 << col
    return Gf2Solution(assignment=assignment), None


def check_certificate(rows: list[int], rhs: list[int], equations) -> bool:
    """True iff the given equations sum to 0 = 1 over GF(2)."""
    lhs = 0
    b = 0
    for r in equations:
        lhs ^= rows[r]
        b ^= rhs[r] & 1
    return lhs == 0 and b == 1
