"""Shared fixtures: the worked matrices used across the suite."""

from __future__ import annotations

import random

import pytest

from affold import make_exchange_matrix


@pytest.fixture
def b_example_4x4():
    """The 4x4 complete-graph quiver whose mu_3 image is printed explicitly."""
    return make_exchange_matrix(
        [[0, -1, 1, 1], [1, 0, -1, -1], [-1, 1, 0, 1], [-1, 1, -1, 0]]
    )


MU3_IMAGE = [[0, 0, -1, 2], [0, 0, 1, -1], [1, -1, 0, -1], [-2, 1, 1, 0]]


@pytest.fixture
def q_admissible_a22():
    """The Z/2Z-admissible A~{2,2} quiver (arrows 2->1, 2->4, 3->1, 3->4)."""
    return make_exchange_matrix(
        [[0, -1, -1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, -1, -1, 0]]
    )


@pytest.fixture
def e6_admissible():
    """The E~6 quiver folded to G~2 in the worked example."""
    return make_exchange_matrix(
        [
            [0, 1, 0, 1, 0, 1, 0],
            [-1, 0, -1, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0],
            [-1, 0, 0, 0, -1, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [-1, 0, 0, 0, 0, 0, -1],
            [0, 0, 0, 0, 0, 1, 0],
        ]
    )


@pytest.fixture
def six_cycle():
    """Directed 6-cycle 1 -> 2 -> ... -> 6 -> 1."""
    rows = [[0] * 6 for _ in range(6)]
    for i in range(6):
        rows[i][(i + 1) % 6] = 1
        rows[(i + 1) % 6][i] = -1
    return make_exchange_matrix(rows)


A22_QUIVERS = {
    # the four pairwise non-isomorphic members of the A~{2,2} class
    "first": [[0, 1, 1, 0], [-1, 0, 0, 1], [-1, 0, 0, 1], [0, -1, -1, 0]],
    "second": [[0, -1, -1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, -1, -1, 0]],
    "third": [[0, 1, -1, 1], [-1, 0, 0, 1], [1, 0, 0, -1], [-1, -1, 1, 0]],
    "fourth": [[0, -1, -1, 2], [1, 0, 0, -1], [1, 0, 0, -1], [-2, 1, 1, 0]],
}


def random_skew_symmetric(rng: random.Random, n: int, top: int = 2):
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = rng.randint(-top, top)
            rows[i][j] = v
            rows[j][i] = -v
    return make_exchange_matrix(rows)


def random_skew_symmetrizable(rng: random.Random, n: int):
    """Random symmetrizable matrix built from a random d-vector."""
    d = [rng.choice([1, 1, 2, 3]) for _ in range(n)]
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            # d[i]*b[i][j] must equal -d[j]*b[j][i]
            from math import gcd

            g = gcd(d[i], d[j])
            step = rng.randint(-2, 2)
            rows[i][j] = step * (d[j] // g)
            rows[j][i] = -step * (d[i] // g)
    return make_exchange_matrix(rows)
