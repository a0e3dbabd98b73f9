"""Shared fixtures and strategies for the test suite."""

from __future__ import annotations

import itertools
import random

import pytest

from quiverlab import fixtures, validate


@pytest.fixture
def a2():
    return fixtures.FIX_A2


@pytest.fixture
def a3():
    return fixtures.FIX_A3


@pytest.fixture
def a4():
    return fixtures.FIX_A4


@pytest.fixture
def d4():
    return fixtures.FIX_D4


@pytest.fixture
def c3():
    return fixtures.FIX_C3


@pytest.fixture
def k4():
    return fixtures.FIX_K4


@pytest.fixture
def markov():
    return fixtures.FIX_MARKOV


@pytest.fixture
def b2():
    return fixtures.FIX_B2


def random_skew_symmetrizable(rng: random.Random, n: int, max_entry: int = 3,
                              max_d: int = 3):
    """A random valid exchange matrix built from a symmetrizer.

    For i < j pick t_ij and set B_ij = t * d_j/g, B_ji = -t * d_i/g with
    g = gcd(d_i, d_j), which satisfies d_i B_ij = -d_j B_ji by construction.
    """
    from math import gcd

    d = [rng.randint(1, max_d) for _ in range(n)]
    rows = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        t = rng.randint(-max_entry, max_entry)
        if t == 0:
            continue
        g = gcd(d[i], d[j])
        rows[i][j] = t * d[j] // g
        rows[j][i] = -t * d[i] // g
    return validate(rows)


def random_skew_symmetric(rng: random.Random, n: int, max_entry: int = 2):
    rows = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        t = rng.randint(-max_entry, max_entry)
        rows[i][j] = t
        rows[j][i] = -t
    return validate(rows)
