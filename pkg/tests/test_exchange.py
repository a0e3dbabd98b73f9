"""Exchange matrices: validation, mutation, diagrams, cycles, classes."""

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverlab import (
    DimensionMismatch,
    NoSymmetrizer,
    NotSignSkewSymmetric,
    canonical_form,
    chordless_cycles,
    diagram,
    directed_paths,
    induced_directed_paths,
    is_acyclic,
    mutate_matrix,
    mutation_class,
    permute_matrix,
    validate,
)
from quiverlab.errors import BoundsExceeded

from conftest import random_skew_symmetric, random_skew_symmetrizable


# --- validate ---------------------------------------------------------------

def test_validate_skew_symmetric(a2):
    assert a2.skew_symmetric
    assert a2.symmetrizer == (1, 1)


def test_validate_rejects_symmetric_sign_pattern():
    with pytest.raises(NotSignSkewSymmetric):
        validate([[0, 1], [1, 0]])


def test_validate_rejects_nonzero_diagonal():
    with pytest.raises(NotSignSkewSymmetric):
        validate([[1, 1], [-1, 0]])


def test_validate_rejects_zero_mismatch():
    with pytest.raises(NotSignSkewSymmetric):
        validate([[0, 1], [0, 0]])


def test_validate_b2_symmetrizer(b2):
    # d_1 * 1 = d_2 * 2 over positive integers, gcd-reduced
    assert b2.symmetrizer == (2, 1)
    assert not b2.skew_symmetric


def test_validate_no_symmetrizer():
    # triangle with inconsistent cycle product: |B_12/B_21| * |B_23/B_32|
    # * |B_31/B_13| != 1
    with pytest.raises(NoSymmetrizer):
        validate([
            [0, 1, -1],
            [-2, 0, 1],
            [1, -1, 0],
        ])


def test_validate_rejects_nonsquare():
    with pytest.raises(DimensionMismatch):
        validate([[0, 1]])


def test_validate_symmetrizer_componentwise():
    # two independent blocks scale independently
    B = validate([
        [0, 1, 0, 0],
        [-2, 0, 0, 0],
        [0, 0, 0, 3],
        [0, 0, -1, 0],
    ])
    assert B.symmetrizer == (2, 1, 1, 3)


# --- mutation ---------------------------------------------------------------

def test_mutate_a2_flips_signs(a2):
    assert mutate_matrix(a2, 0).rows == ((0, -1), (1, 0))


def test_mutate_c3_opens_cycle(c3):
    # the oriented triangle opens into a path
    assert mutate_matrix(c3, 0).rows == ((0, 1, -1), (-1, 0, 0), (1, 0, 0))


def test_mutation_keeps_symmetrizer(b2):
    mutated = mutate_matrix(b2, 0)
    assert mutated.symmetrizer == b2.symmetrizer
    # validate accepts the output and reproduces the same symmetrizer
    assert validate(mutated.rows).symmetrizer == b2.symmetrizer


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 5), st.data())
def test_mutation_involution(seed, n, data):
    B = random_skew_symmetrizable(random.Random(seed), n)
    k = data.draw(st.integers(0, n - 1))
    assert mutate_matrix(mutate_matrix(B, k), k).rows == B.rows


def test_mutate_out_of_range(a2):
    with pytest.raises(IndexError):
        mutate_matrix(a2, 2)


def test_source_mutation_reverses_incident_arrows(a3):
    # vertex 1 (0-based 0) is a source of the A3 path; mutation there only
    # reverses its incident arrow
    before = diagram(a3).arc_set
    after = diagram(mutate_matrix(a3, 0)).arc_set
    assert (0, 1) in before and (1, 0) in after
    assert before - {(0, 1)} == after - {(1, 0)}


# --- diagram ----------------------------------------------------------------

def test_diagram_a2_single_edge(a2):
    # B_12 = 1 > 0 means an edge from 2 to 1
    assert diagram(a2).edges == ((1, 0, 1),)


def test_diagram_k4_edges(k4):
    arcs = diagram(k4).arc_set
    expected = {(0, 2), (2, 3), (2, 1), (0, 3), (1, 0), (1, 3)}
    assert arcs == expected
    assert all(w == 1 for _, _, w in diagram(k4).edges)


def test_diagram_weights(markov, b2):
    assert {w for _, _, w in diagram(markov).edges} == {4}
    assert {w for _, _, w in diagram(b2).edges} == {2}


def test_acyclicity(a3, c3, k4):
    assert is_acyclic(diagram(a3))
    assert not is_acyclic(diagram(c3))
    assert not is_acyclic(diagram(k4))


# --- chordless cycles --------------------------------------------------------

def brute_force_chordless_cycles(D):
    """Independent oracle: check every vertex subset directly."""
    found = []
    und = {frozenset((i, j)) for i, j, _ in D.edges}
    for size in range(3, D.n + 1):
        for subset in itertools.combinations(range(D.n), size):
            inside = [e for e in und if e <= set(subset)]
            degree = {v: sum(1 for e in inside if v in e) for v in subset}
            if len(inside) != size or any(d != 2 for d in degree.values()):
                continue
            # connected single cycle iff edges == vertices and all degree 2
            # (two disjoint triangles need 6 vertices, caught by edge count)
            comp = {subset[0]}
            grew = True
            while grew:
                grew = False
                for e in inside:
                    if comp & e and not e <= comp:
                        comp |= e
                        grew = True
            if comp != set(subset):
                continue
            # orientation: every vertex has in-degree 1 and out-degree 1
            indeg = {v: 0 for v in subset}
            outdeg = {v: 0 for v in subset}
            for i, j, _ in D.edges:
                if frozenset((i, j)) in inside:
                    outdeg[i] += 1
                    indeg[j] += 1
            oriented = all(indeg[v] == 1 and outdeg[v] == 1 for v in subset)
            found.append((frozenset(subset), oriented))
    return sorted(found, key=lambda x: (len(x[0]), sorted(x[0])))


def test_cycles_a3_empty(a3):
    assert chordless_cycles(diagram(a3)) == ()


def test_cycles_c3_oriented(c3):
    cycles = chordless_cycles(diagram(c3))
    assert len(cycles) == 1
    assert set(cycles[0].vertices) == {0, 1, 2}
    assert cycles[0].oriented


def test_cycles_k4_frozen(k4):
    cycles = chordless_cycles(diagram(k4))
    classified = {tuple(sorted(c.vertices)): c.oriented for c in cycles}
    assert classified == {
        (0, 1, 2): True,
        (0, 1, 3): False,
        (0, 2, 3): False,
        (1, 2, 3): False,
    }


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(3, 6))
def test_cycles_match_brute_force(seed, n):
    B = random_skew_symmetric(random.Random(seed), n)
    D = diagram(B)
    ours = sorted(((frozenset(c.vertices), c.oriented) for c in chordless_cycles(D)),
                  key=lambda x: (len(x[0]), sorted(x[0])))
    assert ours == brute_force_chordless_cycles(D)


def test_cycle_members_have_degree_two(k4):
    for cycle in chordless_cycles(diagram(k4)):
        inside = set(cycle.vertices)
        und = [e for e in diagram(k4).undirected if e <= inside]
        for v in inside:
            assert sum(1 for e in und if v in e) == 2


# --- directed paths ----------------------------------------------------------

def test_paths_a3(a3):
    paths = set(directed_paths(diagram(a3), 3))
    assert paths == {(0, 1), (1, 2), (0, 1, 2)}


def test_paths_c3(c3):
    paths = set(directed_paths(diagram(c3), 3))
    assert paths == {(0, 1), (1, 2), (2, 0),
                     (0, 1, 2), (1, 2, 0), (2, 0, 1)}


def test_paths_edgeless():
    B = validate([[0, 0], [0, 0]])
    assert list(directed_paths(diagram(B), 2)) == []


def test_paths_max_len_validation(a3):
    with pytest.raises(ValueError):
        list(directed_paths(diagram(a3), 1))


def test_induced_paths_exclude_chords(k4):
    # 1 -> 3 -> 2 has chord {1, 2}, so it is not an induced path
    induced = set(induced_directed_paths(diagram(k4)))
    assert (0, 2, 1) not in induced
    assert (0, 2) in induced
    # every induced path is a simple path
    assert induced <= set(directed_paths(diagram(k4)))


# --- canonical forms and classes ---------------------------------------------

def test_canonical_form_permutation_invariant(a3):
    base = canonical_form(a3)
    for perm in itertools.permutations(range(3)):
        assert canonical_form(permute_matrix(a3, perm)) == base


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 5), st.data())
def test_canonical_form_random_invariance(seed, n, data):
    B = random_skew_symmetrizable(random.Random(seed), n)
    perm = data.draw(st.permutations(range(n)))
    assert canonical_form(permute_matrix(B, tuple(perm))) == canonical_form(B)


def test_canonical_form_size_guard():
    B = validate([[0] * 9 for _ in range(9)])
    with pytest.raises(ValueError):
        canonical_form(B)


def test_class_a2(a2):
    report = mutation_class(a2, 10, 10)
    assert report.class_size == 1
    assert report.acyclic_found
    assert not report.truncated


def test_class_a3(a3):
    # three path orientation types plus the oriented triangle
    report = mutation_class(a3, 100, 32)
    assert report.class_size == 4
    assert report.acyclic_witness == ()
    assert not report.truncated


def test_class_markov(markov):
    report = mutation_class(markov, 100, 32)
    assert report.class_size == 1
    assert not report.acyclic_found
    assert not report.truncated


def test_class_truncation_and_strict(a3):
    report = mutation_class(a3, 2, 32)
    assert report.truncated
    assert report.class_size == 2
    with pytest.raises(BoundsExceeded) as err:
        mutation_class(a3, 2, 32, strict=True)
    assert err.value.report.class_size == 2


def test_class_witness_replays_to_acyclic(c3):
    report = mutation_class(c3, 100, 32)
    B = c3
    for k in report.acyclic_witness:
        B = mutate_matrix(B, k)
    assert is_acyclic(diagram(B))


def test_validate_accepts_every_mutation(b2):
    B = b2
    rng = random.Random(5)
    for _ in range(40):
        B = mutate_matrix(B, rng.randrange(B.n))
        again = validate(B.rows)
        assert again.symmetrizer == b2.symmetrizer
