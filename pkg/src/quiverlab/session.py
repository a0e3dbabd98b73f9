"""Exploration sessions: a finite subtree of the mutation tree with a cursor.

A session starts from an initial matrix with the standard-basis seed and
grows one node per distinct walk.  Mutating with the label leading back to
the parent is an undo; mutating with a previously explored label replays the
stored child instead of recomputing.  State serialization is a pure function
of (initial matrix, path), so the service answer for any session can be
reproduced offline byte for byte.
"""

from __future__ import annotations

import json
import time
import uuid
from dataclasses import dataclass, field

from .companion import (
    QuasiCartan,
    admissible_cut,
    companion_from_cvectors,
    find_admissible_companion,
    is_admissible,
)
from .errors import NotAdmissible, QuiverlabError
from .exchange import ExchangeMatrix, chordless_cycles, diagram, is_acyclic
from .io import edge_pairs_to_wire, matrix_to_obj, parse_matrix_obj, walk_to_wire
from .rootsys import cartan_of
from .yseed import YSeed, initial_seed, mutate_seed


@dataclass
class SessionNode:
    seed: YSeed
    parent: "SessionNode | None" = None
    label: int | None = None  # 0-based edge label from the parent
    children: dict[int, "SessionNode"] = field(default_factory=dict)

    @property
    def path(self) -> tuple[int, ...]:
        node, labels = self, []
        while node.parent is not None:
            labels.append(node.label)
            node = node.parent
        return tuple(reversed(labels))


@dataclass
class Session:
    session_id: str
    root: SessionNode
    current: SessionNode
    created: float

    @classmethod
    def create(cls, B0: ExchangeMatrix, session_id: str | None = None) -> "Session":
        root = SessionNode(seed=initial_seed(B0))
        return cls(session_id=session_id or uuid.uuid4().hex,
                   root=root, current=root, created=time.time())

    @property
    def B0(self) -> ExchangeMatrix:
        return self.root.seed.B

    def mutate(self, k: int) -> SessionNode:
        """Move along edge k: to the parent when k led here (involution),
        to a stored child when one exists, else compute and attach."""
        cur = self.current
        if cur.parent is not None and cur.label == k:
            self.current = cur.parent
        elif k in cur.children:
            self.current = cur.children[k]
        else:
            child = SessionNode(seed=mutate_seed(cur.seed, k), parent=cur, label=k)
            cur.children[k] = child
            self.current = child
        return self.current

    def undo(self) -> SessionNode:
        if self.current.parent is None:
            raise QuiverlabError("already at the initial seed")
        self.current = self.current.parent
        return self.current

    def state(self) -> dict:
        return build_state(self.current.seed, self.B0, self.current.path)

    def to_obj(self) -> dict:
        return {
            "id": self.session_id,
            "created": self.created,
            "B0": matrix_to_obj(self.B0),
            "nodes": _tree_to_obj(self.root),
            "cursor": walk_to_wire(self.current.path),
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "Session":
        B0 = parse_matrix_obj(obj["B0"])
        session = cls.create(B0, session_id=obj["id"])
        session.created = obj.get("created", session.created)
        _tree_from_obj(session.root, obj.get("nodes", {}))
        node = session.root
        for k in obj.get("cursor", []):
            node = node.children[k - 1]
        session.current = node
        return session


def _tree_to_obj(node: SessionNode) -> dict:
    return {str(k + 1): _tree_to_obj(child) for k, child in sorted(node.children.items())}


def _tree_from_obj(node: SessionNode, obj: dict) -> None:
    for key, sub in obj.items():
        k = int(key) - 1
        child = SessionNode(seed=mutate_seed(node.seed, k), parent=node, label=k)
        node.children[k] = child
        _tree_from_obj(child, sub)


def build_state(seed: YSeed, B0: ExchangeMatrix, path) -> dict:
    """The wire-format state for a seed reached from B0 by ``path``.

    Pure: replaying the history labels through the library produces the
    same object, byte for byte under canonical JSON.
    """
    B = seed.B
    D = diagram(B)
    cycles = [{"vertices": [v + 1 for v in c.vertices], "oriented": c.oriented}
              for c in chordless_cycles(D)]
    companion_obj = None
    cut_obj = None
    admissible = False
    certificate_obj = None
    source = None
    comp: QuasiCartan | None = None
    if is_acyclic(diagram(B0)):
        comp = companion_from_cvectors(cartan_of(B0), seed)
        source = "cvectors"
    else:
        search = find_admissible_companion(B)
        if search.found:
            comp = search.companion
            source = "parity-solve"
        else:
            certificate_obj = {
                "cycles": [{"vertices": [v + 1 for v in c.vertices],
                            "oriented": c.oriented}
                           for c in search.certificate.cycles],
                "parities": list(search.certificate.parities()),
            }
    if comp is not None:
        companion_obj = {"A": [list(row) for row in comp.rows], "source": source}
        admissible = is_admissible(comp)[0]
        try:
            cut_obj = [list(p) for p in edge_pairs_to_wire(
                admissible_cut(comp).edges)]
        except NotAdmissible:
            cut_obj = None
    return {
        "B": matrix_to_obj(B),
        "c": [list(c) for c in seed.cvectors],
        "companion": companion_obj,
        "cut": cut_obj,
        "admissible": admissible,
        "certificate": certificate_obj,
        "cycles": cycles,
        "history": walk_to_wire(path),
        "edges": [{"from": i + 1, "to": j + 1, "weight": w} for i, j, w in D.edges],
    }


def replay_state(B0: ExchangeMatrix, history) -> dict:
    """Recompute the state for a 1-based history offline."""
    seed = initial_seed(B0)
    path = []
    for k in history:
        seed = mutate_seed(seed, k - 1)
        path.append(k - 1)
    return build_state(seed, B0, tuple(path))


def save_store(store: dict[str, Session], path: str) -> None:
    obj = {"sessions": [s.to_obj() for s in store.values()]}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, sort_keys=True)


def load_store(path: str) -> dict[str, Session]:
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    out = {}
    for sobj in obj.get("sessions", []):
        session = Session.from_obj(sobj)
        out[session.session_id] = session
    return out
