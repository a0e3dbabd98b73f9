"""Parsing and serialization for matrices, seeds, companions, and reports.

Matrix inputs come in two equivalent shapes, accepted everywhere:

* text: first line ``n``, then n lines of n space-separated integers;
* object: ``{"n": int, "rows": [[int]]}`` (JSON).

All vertex indices are 1-based on the wire and in files.
"""

from __future__ import annotations

import json
import sys

from .errors import MalformedInput, QuiverlabError
from .exchange import ExchangeMatrix, validate
from .fixtures import PRESETS
from .yseed import YSeed


def parse_matrix_text(text: str) -> ExchangeMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedInput("empty matrix input")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise MalformedInput(f"first line must be the size, got {lines[0]!r}") from None
    if n <= 0:
        raise MalformedInput(f"matrix size must be positive, got {n}")
    if len(lines) != n + 1:
        raise MalformedInput(f"expected {n} rows after the size line, got {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise MalformedInput(f"non-integer entry in row {ln!r}") from None
        if len(row) != n:
            raise MalformedInput(f"row {ln!r} has {len(row)} entries, want {n}")
        rows.append(row)
    return validate(rows)


def parse_matrix_obj(obj) -> ExchangeMatrix:
    if not isinstance(obj, dict) or "rows" not in obj:
        raise MalformedInput('matrix object must be {"n": int, "rows": [[int]]}')
    rows = obj["rows"]
    n = obj.get("n", len(rows))
    if not isinstance(rows, list) or len(rows) != n:
        raise MalformedInput(f"rows count does not match n = {n}")
    try:
        return validate(rows)
    except QuiverlabError:
        raise
    except (TypeError, ValueError) as err:
        raise MalformedInput(f"bad matrix object: {err}") from None


def parse_matrix(text: str) -> ExchangeMatrix:
    """Accept either the text format or a JSON matrix object."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as err:
            raise MalformedInput(f"bad JSON: {err}") from None
        return parse_matrix_obj(obj)
    return parse_matrix_text(text)


def load_matrix(source: str) -> ExchangeMatrix:
    """Read a matrix from a file path, '-' for stdin, or a preset name."""
    if source == "-":
        return parse_matrix(sys.stdin.read())
    try:
        with open(source, "r", encoding="utf-8") as fh:
            return parse_matrix(fh.read())
    except FileNotFoundError:
        if source.lower() in PRESETS:
            return PRESETS[source.lower()]
        raise MalformedInput(f"no such file or preset: {source}") from None


def matrix_to_obj(B: ExchangeMatrix) -> dict:
    return {"n": B.n, "rows": [list(row) for row in B.rows]}


def matrix_to_text(B: ExchangeMatrix) -> str:
    lines = [str(B.n)]
    lines += [" ".join(str(x) for x in row) for row in B.rows]
    return "\n".join(lines) + "\n"


def seed_to_obj(s: YSeed) -> dict:
    return {"c": [list(c) for c in s.cvectors], "B": matrix_to_obj(s.B)}


def parse_walk(ks) -> tuple[int, ...]:
    """1-based walk labels from the wire -> 0-based internal labels."""
    out = []
    for k in ks:
        if not isinstance(k, int) or isinstance(k, bool):
            raise MalformedInput(f"walk labels must be integers, got {k!r}")
        out.append(k - 1)
    return tuple(out)


def walk_to_wire(ks) -> list[int]:
    return [k + 1 for k in ks]


def edge_pairs_to_wire(pairs) -> list[list[int]]:
    """Sorted 1-based [[i, j], ...] for a collection of undirected edges."""
    return sorted([min(e) + 1, max(e) + 1] for e in (tuple(p) for p in pairs))


def canonical_json(obj) -> str:
    """Deterministic JSON: sorted keys, compact separators."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
