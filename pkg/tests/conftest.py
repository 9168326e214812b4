"""Shared helpers: independent oracles and small random-matrix generators.

The oracles here deliberately reimplement functionality from scratch
(permutation-expansion determinants, subset-product minors for diagonal
matrices) so that library results are checked against arithmetic that
shares no code with the implementation under test.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from seprkit.exact import GaussianRational
from seprkit.matrix import HermitianMatrix


def permutation_sign(perm) -> int:
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def oracle_det(rows) -> GaussianRational:
    """Determinant by full permutation expansion (independent oracle)."""
    n = len(rows)
    total = GaussianRational(0)
    for perm in permutations(range(n)):
        prod = GaussianRational(1)
        for i, j in enumerate(perm):
            prod = prod * GaussianRational._coerce(rows[i][j])
        total = total + (prod if permutation_sign(perm) > 0 else -prod)
    return total


def oracle_principal_minor(matrix: HermitianMatrix, subset) -> Fraction:
    """Principal minor via the permutation-expansion oracle (0-based subset)."""
    rows = [[matrix.entries[i][j] for j in subset] for i in subset]
    value = oracle_det(rows)
    assert value.im == 0
    return value.re


def oracle_minors_by_order(matrix: HermitianMatrix):
    """All principal minors per order, via the oracle only."""
    n = matrix.n
    return [
        [oracle_principal_minor(matrix, s) for s in combinations(range(n), k)]
        for k in range(1, n + 1)
    ]


def random_hermitian(rng: random.Random, n: int, *, real: bool, scale: int = 2) -> HermitianMatrix:
    """Random test matrix with small integer (or Gaussian-integer) entries."""
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = GaussianRational(rng.randint(-scale, scale))
        for j in range(i + 1, n):
            re = rng.randint(-scale, scale)
            im = 0 if real else rng.randint(-scale, scale)
            v = GaussianRational(re, im)
            rows[i][j] = v
            rows[j][i] = v.conjugate()
    return HermitianMatrix(rows)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
