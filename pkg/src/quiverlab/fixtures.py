"""Named example matrices used by tests, the CLI, and the session API."""

from __future__ import annotations

from .exchange import ExchangeMatrix, validate


def _path_quiver(n: int) -> list[list[int]]:
    # equioriented path 1 -> 2 -> ... -> n: arrow i -> i+1 means B[i+1][i] > 0
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i + 1][i] = 1
        rows[i][i + 1] = -1
    return rows


FIX_A2 = validate([[0, 1], [-1, 0]])
FIX_A3 = validate(_path_quiver(3))
FIX_A4 = validate(_path_quiver(4))
FIX_A5 = validate(_path_quiver(5))

# three leaves all pointing into the hub vertex 4
FIX_D4 = validate([
    [0, 0, 0, -1],
    [0, 0, 0, -1],
    [0, 0, 0, -1],
    [1, 1, 1, 0],
])

# oriented triangle 1 -> 2 -> 3 -> 1
FIX_C3 = validate([
    [0, -1, 1],
    [1, 0, -1],
    [-1, 1, 0],
])

# the four-vertex quiver with one oriented and three non-oriented triangles;
# it has no admissible companion (each edge lies on exactly two triangles,
# so the cycle parities sum to 1 = 0)
FIX_K4 = validate([
    [0, 1, -1, -1],
    [-1, 0, 1, -1],
    [1, -1, 0, -1],
    [1, 1, 1, 0],
])

# oriented triangle with all edge weights 4: mutation class of size one with
# no acyclic member, yet admissible companions exist
FIX_MARKOV = validate([
    [0, 2, -2],
    [-2, 0, 2],
    [2, -2, 0],
])

# smallest properly skew-symmetrizable example, symmetrizer (2, 1)
FIX_B2 = validate([[0, 1], [-2, 0]])


PRESETS: dict[str, ExchangeMatrix] = {
    "a2": FIX_A2,
    "a3": FIX_A3,
    "a4": FIX_A4,
    "a5": FIX_A5,
    "d4": FIX_D4,
    "c3": FIX_C3,
    "k4": FIX_K4,
    "markov": FIX_MARKOV,
    "b2": FIX_B2,
}


def preset(name: str) -> ExchangeMatrix:
    try:
        return PRESETS[name.lower()]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; have {sorted(PRESETS)}") from None
