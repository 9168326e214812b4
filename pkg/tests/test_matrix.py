import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

from conftest import oracle_minors_by_order, oracle_principal_minor, random_hermitian
from seprkit.exact import GaussianRational, I
from seprkit.matrix import (
    HermitianMatrix,
    IndexSetError,
    MatrixFormatError,
    SingularMatrixError,
    grid_rank,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
)

F_VIER_ONE = HermitianMatrix(
    [[2, 5, 1, 1], [5, Fraction(1, 2), 1, 1], [1, 1, 1, 2], [1, 1, 2, 1]]
)

FIVE_ONE_BASE = HermitianMatrix(
    [
        [1, -2, 2, 1, 1],
        [-2, 1, 2, 1, 1],
        [2, 2, 1, 1, 1],
        [1, 1, 1, -1, 2],
        [1, 1, 1, 2, -1],
    ]
)


def test_construction_rejects_non_hermitian():
    with pytest.raises(MatrixFormatError) as err:
        HermitianMatrix([[0, 1], [2, 0]])
    assert "(1,2)" in str(err.value)
    with pytest.raises(MatrixFormatError):
        HermitianMatrix([[I]])  # non-real diagonal
    with pytest.raises(MatrixFormatError):
        HermitianMatrix([[0, 1], [1, 0], [0, 0]])


def test_principal_submatrix_examples():
    d = HermitianMatrix.diagonal([1, -1, -1, 0])
    assert d.principal_submatrix((1, 4)) == HermitianMatrix.diagonal([1, 0])
    assert F_VIER_ONE.principal_submatrix((3, 4)) == HermitianMatrix([[1, 2], [2, 1]])
    assert d.principal_submatrix((1, 2, 3, 4)) == d


def test_principal_submatrix_rejects_bad_sets():
    d = HermitianMatrix.diagonal([1, 2])
    for bad in ((), (0,), (3,), (2, 1), (1, 1)):
        with pytest.raises(IndexSetError):
            d.principal_submatrix(bad)


def test_determinant_examples():
    m = HermitianMatrix([[GaussianRational(0), I], [-I, GaussianRational(0)]])
    assert m.determinant() == Fraction(-1)
    assert HermitianMatrix.zero(3).determinant() == 0
    det = F_VIER_ONE.determinant()
    assert det == oracle_principal_minor(F_VIER_ONE, (0, 1, 2, 3))
    assert det > 0  # matches the positive final term of its sign sequence


def test_all_principal_minors_examples():
    d = HermitianMatrix.diagonal([1, -1, -1, 0])
    k1 = d.all_principal_minors(1)
    assert [v for _, v in k1] == [1, -1, -1, 0]
    # diagonal triple-product oracle
    vals = [Fraction(1), Fraction(-1), Fraction(-1), Fraction(0)]
    expected = [vals[a] * vals[b] * vals[c] for a, b, c in combinations(range(4), 3)]
    assert [v for _, v in d.all_principal_minors(3)] == expected
    assert len(d.all_principal_minors(2)) == 6
    assert [idx for idx, _ in d.all_principal_minors(2)] == [
        (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
    ]
    for bad in (0, 5, -1):
        with pytest.raises(ValueError):
            d.all_principal_minors(bad)


def test_minors_match_oracle_random():
    rng = random.Random(12345)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = random_hermitian(rng, n, real=bool(rng.getrandbits(1)))
        got = [[v for _, v in m.all_principal_minors(k)] for k in range(1, n + 1)]
        assert got == oracle_minors_by_order(m)


def test_fractional_entries_minors_match_oracle():
    rng = random.Random(99)
    for _ in range(10):
        rows = [[None] * 3 for _ in range(3)]
        for i in range(3):
            rows[i][i] = GaussianRational(Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
            for j in range(i + 1, 3):
                v = GaussianRational(
                    Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                    Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
                )
                rows[i][j] = v
                rows[j][i] = v.conjugate()
        m = HermitianMatrix(rows)
        assert [v for _, v in m.all_principal_minors(3)] == [
            oracle_principal_minor(m, (0, 1, 2))
        ]
        assert m.determinant() == oracle_principal_minor(m, (0, 1, 2))


def test_rank_examples():
    assert HermitianMatrix.zero(4).rank() == 0
    assert HermitianMatrix.diagonal([1, -1, -1, 0]).rank() == 3
    assert FIVE_ONE_BASE.rank() == 5


def test_rank_is_principal_random():
    rng = random.Random(777)
    for _ in range(40):
        n = rng.randint(1, 6)
        m = random_hermitian(rng, n, real=bool(rng.getrandbits(1)))
        largest = 0
        for k in range(1, n + 1):
            if any(v != 0 for _, v in m.all_principal_minors(k)):
                largest = k
        assert m.rank() == largest


def test_rank_drop_on_deletion_random():
    rng = random.Random(4242)
    for _ in range(25):
        n = rng.randint(2, 5)
        m = random_hermitian(rng, n, real=bool(rng.getrandbits(1)))
        r = m.rank()
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                assert grid_rank(m.submatrix_grid(i, j)) >= r - 2


def test_same_sign_at_rank_random():
    rng = random.Random(31337)
    for _ in range(40):
        n = rng.randint(1, 6)
        m = random_hermitian(rng, n, real=bool(rng.getrandbits(1)))
        r = m.rank()
        if r == 0:
            continue
        signs = {(v > 0) - (v < 0) for _, v in m.all_principal_minors(r) if v != 0}
        assert len(signs) == 1


def test_inverse_examples():
    ident = HermitianMatrix.identity(3)
    assert ident.inverse() == ident
    assert HermitianMatrix.diagonal([2]).inverse() == HermitianMatrix.diagonal([Fraction(1, 2)])
    inv = FIVE_ONE_BASE.inverse()
    prod_rows = [
        [
            sum(
                (FIVE_ONE_BASE.entries[i][k] * inv.entries[k][j] for k in range(5)),
                GaussianRational(0),
            )
            for j in range(5)
        ]
        for i in range(5)
    ]
    assert HermitianMatrix(prod_rows) == HermitianMatrix.identity(5)
    with pytest.raises(SingularMatrixError):
        HermitianMatrix.zero(2).inverse()


def test_determinant_permutation_invariant():
    rng = random.Random(2024)
    m = random_hermitian(rng, 4, real=False)
    d = m.determinant()
    for perm in permutations(range(1, 5)):
        assert m.permute(perm).determinant() == d


def test_transforms():
    assert HermitianMatrix.diagonal([1]).duplicate_last() == HermitianMatrix([[1, 1], [1, 1]])
    assert HermitianMatrix.diagonal([1, -1, -1]).direct_sum(
        HermitianMatrix.zero(1)
    ) == HermitianMatrix.diagonal([1, -1, -1, 0])
    rng = random.Random(5)
    m = random_hermitian(rng, 4, real=False)
    assert m.permute((1, 2, 3, 4)) == m
    assert m.negate().negate() == m
    with pytest.raises(ValueError):
        m.permute((1, 1, 2, 3))


def test_duplicate_last_complex_stays_hermitian():
    m = HermitianMatrix([[0, 1, 1], [1, 0, I], [1, -I, 0]])
    bordered = m.duplicate_last()
    assert bordered.n == 4
    # appended column is the old last column; corner repeats the diagonal
    assert bordered.entries[0][3] == GaussianRational(1)
    assert bordered.entries[1][3] == I
    assert bordered.entries[3][1] == -I
    assert bordered.entries[3][3] == GaussianRational(0)


def test_json_roundtrip(tmp_path):
    rng = random.Random(8)
    m = random_hermitian(rng, 3, real=False)
    path = tmp_path / "m.json"
    path.write_text(matrix_to_json(m))
    assert load_matrix(path) == m


def test_json_loader_rejects():
    with pytest.raises(MatrixFormatError):
        matrix_from_json("[]")
    with pytest.raises(MatrixFormatError):
        matrix_from_json('{"n": 2}')
    with pytest.raises(MatrixFormatError):
        matrix_from_json('{"n": 2, "entries": [[["0","0"],["1","0"]]]}')
    with pytest.raises(MatrixFormatError) as err:
        matrix_from_json(
            '{"n": 2, "entries": [[["0","0"],["x","0"]], [["1","0"],["0","0"]]]}'
        )
    assert "(1,2)" in str(err.value)
    # Hermitian violation is position-specific
    with pytest.raises(MatrixFormatError) as err:
        matrix_from_json(
            '{"n": 2, "entries": [[["0","0"],["1","0"]], [["2","0"],["0","0"]]]}'
        )
    assert "(1,2)" in str(err.value)
    with pytest.raises(MatrixFormatError):
        matrix_from_json("not json")
