"""Identity suite: replay mutation walks and check every exact invariant.

Checks run at every step of a walk from an acyclic initial seed, each with a
stable id.  A failing or indeterminate check becomes a report entry carrying
a minimal replay (initial matrix plus walk prefix); nothing is thrown for
individual check outcomes.

State checks (on the seed after each step, and on the initial seed):

* ``sign-coherence``    mutation kept every c-vector sign-coherent
* ``root-norm``         every c-vector has the squared norm of its slot's simple root
* ``real-root``         height-bounded certification of every c-vector
* ``companion-entries`` the c-vector pairing matrix is a companion of B
* ``edge-sign-rules``   both companion sign rules on every nonzero entry
* ``cycle-parity``      oriented chordless cycles odd, non-oriented even
* ``cut-exactly-one``   positive edges cut each oriented cycle exactly once
* ``path-positives``    no induced directed path carries two positive edges

Transition checks (for the step seed -> mutate(seed, k)):

* ``companion-commutes``  pairing after the step equals the eps-mutation of
  the previous pairing with eps = sgn(c_k)
* ``reflection-image``    changed c-vectors are reflections in c_k
* ``epsilon-sign-flip``   the two eps-mutations differ by the sign change at k
* ``epsilon-roundtrip``   an eps-mutation that lands on a companion is undone
  by the opposite eps
* ``epsilon-admissible``  eps-mutations of an admissible companion are
  admissible companions of the mutated matrix
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .companion import (
    QuasiCartan,
    companion_defect,
    cycle_parity_ok,
    epsilon_mutate,
    pairing_matrix,
    positive_count,
    sign_change,
    sign_rule_violations,
)
from .errors import NotACompanion, NotAcyclic, NotSkewSymmetric, SignCoherenceLost
from .exchange import (ExchangeMatrix, chordless_cycles, diagram,
                       induced_directed_paths, is_acyclic)
from .io import matrix_to_obj, walk_to_wire
from .rootsys import CartanMatrix, RealRootIndex, cartan_of, height
from .yseed import YSeed, initial_seed, mutate_seed, sign_of

CHECK_IDS = (
    "sign-coherence", "root-norm", "real-root", "companion-entries",
    "edge-sign-rules", "cycle-parity", "cut-exactly-one", "path-positives",
    "companion-commutes", "reflection-image", "epsilon-sign-flip",
    "epsilon-roundtrip", "epsilon-admissible",
)


@dataclass(frozen=True)
class CheckResult:
    check: str
    status: str  # "pass" | "fail" | "unknown"
    detail: dict | None = None

    def to_obj(self) -> dict:
        obj = {"check": self.check, "status": self.status}
        if self.detail is not None:
            obj["detail"] = self.detail
        return obj


@dataclass(frozen=True)
class StepReport:
    step: int  # 0 is the initial state
    k: int | None  # 1-based label on the wire, None for the initial state
    checks: tuple[CheckResult, ...]

    def to_obj(self) -> dict:
        return {"step": self.step, "k": self.k,
                "checks": [c.to_obj() for c in self.checks]}


@dataclass(frozen=True)
class TrialReport:
    trial: int
    walk: tuple[int, ...]  # 1-based labels
    problems: tuple[dict, ...]
    steps: tuple[StepReport, ...] | None = None  # full detail in walk mode

    def to_obj(self) -> dict:
        obj = {"trial": self.trial, "walk": list(self.walk),
               "problems": [dict(p) for p in self.problems]}
        if self.steps is not None:
            obj["steps"] = [s.to_obj() for s in self.steps]
        return obj


@dataclass(frozen=True)
class VerificationReport:
    mode: str  # "walk" | "fuzz" | "conjecture"
    initial: dict
    seed: int | None
    bounds: dict
    trials: tuple[TrialReport, ...]
    summary: dict

    @property
    def failures(self) -> int:
        return self.summary["failures"]

    @property
    def unknowns(self) -> int:
        return self.summary["unknowns"]

    @property
    def clean(self) -> bool:
        return self.failures == 0 and self.unknowns == 0

    def to_obj(self) -> dict:
        return {"mode": self.mode, "initial": self.initial, "seed": self.seed,
                "bounds": self.bounds, "summary": self.summary,
                "trials": [t.to_obj() for t in self.trials]}


@dataclass
class _Context:
    A0: CartanMatrix
    gram: tuple
    slot_norms: tuple[int, ...]
    root_index: RealRootIndex
    height_factor: int
    B0_obj: dict
    experimental: bool
    root_bound: int = 0
    counts: dict = field(default_factory=dict)
    problems: list = field(default_factory=list)

    def bump(self, check: str, status: str) -> None:
        bucket = self.counts.setdefault(check, {"pass": 0, "fail": 0, "unknown": 0})
        bucket[status] += 1


def _replay(ctx: _Context, walk, upto: int) -> dict:
    return {"B0": ctx.B0_obj, "walk": walk_to_wire(walk[:upto])}


def _pair_general(gram, d, u, i, v) -> tuple[int, int]:
    """(numerator, denominator) of the slot-i weighted pairing of u and v."""
    n = len(u)
    num = sum(u[a] * gram[a][b] * v[b] for a in range(n) for b in range(n))
    return num, d[i]


def _reflect_general(gram, c, v):
    """Reflection of v in c under the symmetric Gram form; None if the
    coefficient 2 (c,v) / (c,c) is not an integer."""
    n = len(c)
    cc = sum(c[a] * gram[a][b] * c[b] for a in range(n) for b in range(n))
    cv = sum(c[a] * gram[a][b] * v[b] for a in range(n) for b in range(n))
    if cc <= 0 or (2 * cv) % cc:
        return None
    coef = 2 * cv // cc
    return tuple(x - coef * y for x, y in zip(v, c))


def _unchecked(pairing, B: ExchangeMatrix) -> QuasiCartan:
    return QuasiCartan(rows=pairing, B=B)


def _state_checks(ctx: _Context, seed: YSeed, pairing, pairing_err,
                  walk, step: int) -> list[CheckResult]:
    out = [CheckResult("sign-coherence", "pass")]
    gram = ctx.gram
    n = seed.n

    bad_norm = None
    for i, c in enumerate(seed.cvectors):
        nrm = sum(c[a] * gram[a][b] * c[b] for a in range(n) for b in range(n))
        if nrm != ctx.slot_norms[i]:
            bad_norm = {"index": i + 1, "vector": list(c), "norm": nrm,
                        "expected": ctx.slot_norms[i]}
            break
    if bad_norm is None:
        out.append(CheckResult("root-norm", "pass"))
    else:
        bad_norm["replay"] = _replay(ctx, walk, step)
        out.append(CheckResult("root-norm", "fail", bad_norm))

    statuses = {"yes": 0, "no": 0, "unknown": 0}
    first_bad = None
    bound = ctx.root_bound
    for i, c in enumerate(seed.cvectors):
        q = ctx.root_index.certify(c, bound)
        key = q.status if q.status in ("yes", "no") else "unknown"
        statuses[key] += 1
        if key != "yes" and first_bad is None:
            first_bad = {"index": i + 1, "vector": list(c), "reason": q.reason}
    ctx.counts.setdefault("real-root-vectors", {"yes": 0, "no": 0, "unknown": 0})
    for key, cnt in statuses.items():
        ctx.counts["real-root-vectors"][key] += cnt
    if statuses["no"]:
        first_bad["replay"] = _replay(ctx, walk, step)
        out.append(CheckResult("real-root", "fail", first_bad))
    elif statuses["unknown"]:
        first_bad["replay"] = _replay(ctx, walk, step)
        out.append(CheckResult("real-root", "unknown", first_bad))
    else:
        out.append(CheckResult("real-root", "pass"))

    if pairing is None:
        detail = {"error": pairing_err, "replay": _replay(ctx, walk, step)}
        out.append(CheckResult("companion-entries", "fail", detail))
        return out

    defect = companion_defect(pairing, seed.B)
    if defect is None:
        out.append(CheckResult("companion-entries", "pass"))
    else:
        i, j = defect
        detail = {"entry": [i + 1, j + 1], "value": pairing[i][j],
                  "replay": _replay(ctx, walk, step)}
        out.append(CheckResult("companion-entries", "fail", detail))

    violations = sign_rule_violations(pairing, seed)
    if not violations:
        out.append(CheckResult("edge-sign-rules", "pass"))
    else:
        v = violations[0]
        detail = {"entry": [v["j"] + 1, v["i"] + 1], "rule": v["rule"],
                  "pairing": v["pairing"], "expected": v["expected"],
                  "replay": _replay(ctx, walk, step)}
        out.append(CheckResult("edge-sign-rules", "fail", detail))

    cycles = chordless_cycles(diagram(seed.B))
    parity_bad = None
    cut_bad = None
    for cyc in cycles:
        cnt = positive_count(pairing, cyc)
        want = 1 if cyc.oriented else 0
        if parity_bad is None and cnt % 2 != want:
            parity_bad = {"cycle": [v + 1 for v in cyc.vertices],
                          "oriented": cyc.oriented, "positives": cnt}
        if cut_bad is None:
            if (cyc.oriented and cnt != 1) or (not cyc.oriented and cnt % 2):
                cut_bad = {"cycle": [v + 1 for v in cyc.vertices],
                           "oriented": cyc.oriented, "positives": cnt}
    if parity_bad is None:
        out.append(CheckResult("cycle-parity", "pass"))
    else:
        parity_bad["replay"] = _replay(ctx, walk, step)
        out.append(CheckResult("cycle-parity", "fail", parity_bad))
    if cut_bad is None:
        out.append(CheckResult("cut-exactly-one", "pass"))
    else:
        cut_bad["replay"] = _replay(ctx, walk, step)
        out.append(CheckResult("cut-exactly-one", "fail", cut_bad))

    path_bad = None
    for path in induced_directed_paths(diagram(seed.B)):
        positives = sum(1 for a in range(len(path) - 1)
                        if pairing[path[a]][path[a + 1]] > 0)
        if positives >= 2:
            path_bad = {"path": [v + 1 for v in path], "positives": positives,
                        "replay": _replay(ctx, walk, step)}
            break
    if path_bad is None:
        out.append(CheckResult("path-positives", "pass"))
    else:
        out.append(CheckResult("path-positives", "fail", path_bad))
    return out


def _transition_checks(ctx: _Context, prev: YSeed, prev_pairing, k: int,
                       new: YSeed, new_pairing, walk, step: int) -> list[CheckResult]:
    out = []
    if prev_pairing is None or new_pairing is None:
        return out  # companion construction already failed; no derived checks
    eps = sign_of(prev.cvectors[k])
    A_prev = _unchecked(prev_pairing, prev.B)

    mut = epsilon_mutate(A_prev, prev.B, k, eps)
    if mut.rows == new_pairing:
        out.append(CheckResult("companion-commutes", "pass"))
    else:
        bad = next((i, j) for i in range(prev.n) for j in range(prev.n)
                   if mut.rows[i][j] != new_pairing[i][j])
        detail = {"k": k + 1, "eps": eps, "entry": [bad[0] + 1, bad[1] + 1],
                  "mutated": mut.rows[bad[0]][bad[1]],
                  "pairing": new_pairing[bad[0]][bad[1]],
                  "replay": _replay(ctx, walk, step)}
        out.append(CheckResult("companion-commutes", "fail", detail))

    refl_bad = None
    ck = prev.cvectors[k]
    for i in range(prev.n):
        if new.cvectors[i] == prev.cvectors[i]:
            continue
        image = _reflect_general(ctx.gram, ck, prev.cvectors[i])
        if image != new.cvectors[i]:
            refl_bad = {"index": i + 1, "k": k + 1,
                        "vector": list(prev.cvectors[i]),
                        "mutated": list(new.cvectors[i]),
                        "reflected": list(image) if image else None,
                        "replay": _replay(ctx, walk, step)}
            break
    if refl_bad is None:
        out.append(CheckResult("reflection-image", "pass"))
    else:
        out.append(CheckResult("reflection-image", "fail", refl_bad))

    plus = epsilon_mutate(A_prev, prev.B, k, 1)
    minus = epsilon_mutate(A_prev, prev.B, k, -1)
    sigma = tuple(-1 if i == k else 1 for i in range(prev.n))
    flipped = sign_change(_unchecked(plus.rows, plus.mutated_B), sigma)
    if flipped.rows == minus.rows:
        out.append(CheckResult("epsilon-sign-flip", "pass"))
    else:
        out.append(CheckResult("epsilon-sign-flip", "fail",
                               {"k": k + 1, "replay": _replay(ctx, walk, step)}))

    roundtrip_bad = None
    for e, m in ((1, plus), (-1, minus)):
        if not m.is_companion:
            continue
        back = epsilon_mutate(m.companion, m.mutated_B, k, -e)
        if back.rows != prev_pairing:
            roundtrip_bad = {"k": k + 1, "eps": e,
                             "replay": _replay(ctx, walk, step)}
            break
    if roundtrip_bad is None:
        out.append(CheckResult("epsilon-roundtrip", "pass"))
    else:
        out.append(CheckResult("epsilon-roundtrip", "fail", roundtrip_bad))

    prev_admissible = all(cycle_parity_ok(prev_pairing, cyc)
                          for cyc in chordless_cycles(diagram(prev.B)))
    if prev_admissible and companion_defect(prev_pairing, prev.B) is None:
        adm_bad = None
        for e, m in ((1, plus), (-1, minus)):
            if not m.is_companion:
                adm_bad = {"k": k + 1, "eps": e, "why": "not a companion",
                           "replay": _replay(ctx, walk, step)}
                break
            ok = all(cycle_parity_ok(m.rows, cyc)
                     for cyc in chordless_cycles(diagram(m.mutated_B)))
            if not ok:
                adm_bad = {"k": k + 1, "eps": e, "why": "not admissible",
                           "replay": _replay(ctx, walk, step)}
                break
        if adm_bad is None:
            out.append(CheckResult("epsilon-admissible", "pass"))
        else:
            out.append(CheckResult("epsilon-admissible", "fail", adm_bad))
    return out


def _run_trial(ctx: _Context, B0: ExchangeMatrix, walk, trial: int,
               collect_steps: bool) -> TrialReport:
    seeds = [initial_seed(B0)]
    coherence_failure = None
    for pos_idx, k in enumerate(walk):
        try:
            seeds.append(mutate_seed(seeds[-1], k))
        except SignCoherenceLost as err:
            coherence_failure = (pos_idx, err)
            break
    walk = tuple(walk[:len(seeds) - 1 + (1 if coherence_failure else 0)])

    maxh = max(height(c) for s in seeds for c in s.cvectors)
    ctx.root_bound = ctx.height_factor * maxh

    pairings = []
    pairing_errs = []
    for s in seeds:
        try:
            pairings.append(pairing_matrix(ctx.A0, s))
            pairing_errs.append(None)
        except NotACompanion as err:
            pairings.append(None)
            pairing_errs.append(str(err))

    steps: list[StepReport] = []
    trial_problems: list[dict] = []

    def record(step_idx: int, k_label, results: list[CheckResult]) -> None:
        for res in results:
            ctx.bump(res.check, res.status)
            if res.status != "pass":
                entry = {"trial": trial, "step": step_idx,
                         "check": res.check, "status": res.status}
                if res.detail:
                    entry["detail"] = res.detail
                trial_problems.append(entry)
        if collect_steps:
            steps.append(StepReport(step=step_idx, k=k_label, checks=tuple(results)))

    record(0, None, _state_checks(ctx, seeds[0], pairings[0], pairing_errs[0], walk, 0))
    for t in range(1, len(seeds)):
        k = walk[t - 1]
        results = _transition_checks(ctx, seeds[t - 1], pairings[t - 1], k,
                                     seeds[t], pairings[t], walk, t)
        results += _state_checks(ctx, seeds[t], pairings[t], pairing_errs[t], walk, t)
        record(t, k + 1, results)

    if coherence_failure is not None:
        pos_idx, err = coherence_failure
        detail = {"index": (err.index + 1) if err.index is not None else None,
                  "vector": list(err.vector) if err.vector else None,
                  "replay": _replay(ctx, walk, pos_idx + 1)}
        res = CheckResult("sign-coherence", "fail", detail)
        record(len(seeds), walk[pos_idx] + 1, [res])

    for p in trial_problems:
        ctx.problems.append(p)
    return TrialReport(trial=trial, walk=tuple(walk_to_wire(walk)),
                       problems=tuple(trial_problems),
                       steps=tuple(steps) if collect_steps else None)


def _prepare(B0: ExchangeMatrix, *, require_skew: bool, height_factor: int) -> _Context:
    if not is_acyclic(diagram(B0)):
        raise NotAcyclic("verification needs an acyclic initial diagram")
    if require_skew and not B0.skew_symmetric:
        raise NotSkewSymmetric(
            "this entry point covers the proven skew-symmetric scope; "
            "use conjecture_search for skew-symmetrizable input")
    A0 = cartan_of(B0)
    d = (1,) * B0.n if A0.symmetric else A0.symmetrizer
    return _Context(
        A0=A0,
        gram=A0.rows if A0.symmetric else A0.gram(),
        slot_norms=tuple(2 * x for x in d),
        root_index=RealRootIndex(A0),
        height_factor=height_factor,
        B0_obj=matrix_to_obj(B0),
        experimental=not B0.skew_symmetric,
    )


def _finish(ctx: _Context, mode: str, B0, seed, bounds,
            trials: list[TrialReport]) -> VerificationReport:
    failures = sum(1 for p in ctx.problems if p["status"] == "fail")
    unknowns = sum(1 for p in ctx.problems if p["status"] == "unknown")
    checks = {k: dict(v) for k, v in sorted(ctx.counts.items()) if k != "real-root-vectors"}
    summary = {
        "checks": checks,
        "real_root_vectors": dict(ctx.counts.get(
            "real-root-vectors", {"yes": 0, "no": 0, "unknown": 0})),
        "trials": len(trials),
        "steps": sum(len(t.walk) for t in trials),
        "failures": failures,
        "unknowns": unknowns,
        "experimental": ctx.experimental,
    }
    return VerificationReport(mode=mode, initial=matrix_to_obj(B0), seed=seed,
                              bounds=bounds, trials=tuple(trials), summary=summary)


def verify_walk(B0: ExchangeMatrix, ks, *, height_factor: int = 4,
                _mode: str = "walk", _require_skew: bool = True) -> VerificationReport:
    """Replay one walk (0-based labels) and run every check at every step."""
    ctx = _prepare(B0, require_skew=_require_skew, height_factor=height_factor)
    trial = _run_trial(ctx, B0, tuple(ks), 0, collect_steps=True)
    bounds = {"depth": len(tuple(ks)), "trials": 1, "height_factor": height_factor}
    return _finish(ctx, _mode, B0, None, bounds, [trial])


def random_walk(n: int, depth: int, rng: random.Random) -> tuple[int, ...]:
    """Uniform walk with no immediate backtracking (mutation is involutive)."""
    walk = []
    prev = None
    for _ in range(depth):
        choices = [v for v in range(n) if v != prev]
        k = rng.choice(choices)
        walk.append(k)
        prev = k
    return tuple(walk)


def _fuzz(B0: ExchangeMatrix, depth: int, trials: int, seed: int, mode: str,
          require_skew: bool, height_factor: int,
          collect_steps: bool) -> VerificationReport:
    if depth < 0 or trials < 0:
        raise ValueError("depth and trials must be nonnegative")
    ctx = _prepare(B0, require_skew=require_skew, height_factor=height_factor)
    reports = []
    for t in range(trials):
        rng = random.Random(f"{seed}:{t}")
        walk = random_walk(B0.n, depth, rng) if B0.n > 1 else ()
        reports.append(_run_trial(ctx, B0, walk, t, collect_steps))
    bounds = {"depth": depth, "trials": trials, "height_factor": height_factor}
    return _finish(ctx, mode, B0, seed, bounds, reports)


def fuzz(B0: ExchangeMatrix, depth: int, trials: int, seed: int, *,
         height_factor: int = 4, collect_steps: bool = False) -> VerificationReport:
    """Run every check over seeded random walks; reproducible from the seed."""
    return _fuzz(B0, depth, trials, seed, "fuzz", True, height_factor, collect_steps)


def conjecture_search(B0: ExchangeMatrix, depth: int, trials: int, seed: int, *,
                      height_factor: int = 4,
                      collect_steps: bool = False) -> VerificationReport:
    """Same checks for skew-symmetrizable input, labeled experimental.

    Failures here are candidate counterexamples to the expectation that the
    skew-symmetric statements carry over; they come back as report entries
    with full replay data, never as exceptions.
    """
    return _fuzz(B0, depth, trials, seed, "conjecture", False, height_factor,
                 collect_steps)


@dataclass(frozen=True)
class PropPMReport:
    passed: bool
    sign_flip_ok: bool
    roundtrip_ok: bool
    detail: dict | None = None


def verify_prop_pm(A: QuasiCartan, B: ExchangeMatrix, k: int) -> PropPMReport:
    """Check both companion-mutation clauses for one (A, B, k) triple:
    the two eps-mutations differ by the sign change at k, and whichever of
    them is a companion of the mutated matrix is undone by the opposite eps.
    """
    plus = epsilon_mutate(A, B, k, 1)
    minus = epsilon_mutate(A, B, k, -1)
    sigma = tuple(-1 if i == k else 1 for i in range(B.n))
    flip_ok = sign_change(_unchecked(plus.rows, plus.mutated_B), sigma).rows == minus.rows
    roundtrip_ok = True
    detail = None
    for e, m in ((1, plus), (-1, minus)):
        if not m.is_companion:
            continue
        back = epsilon_mutate(m.companion, m.mutated_B, k, -e)
        if back.rows != A.rows:
            roundtrip_ok = False
            detail = {"eps": e}
            break
    if not flip_ok:
        detail = {"clause": "sign-flip"}
    return PropPMReport(passed=flip_ok and roundtrip_ok,
                        sign_flip_ok=flip_ok, roundtrip_ok=roundtrip_ok,
                        detail=detail)
