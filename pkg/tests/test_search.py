import pytest

from seprkit.classify import Field, forbidden_order2, forbidden_order3
from seprkit.exact import GaussianRational, I
from seprkit.matrix import HermitianMatrix
from seprkit.search import (
    COMPLEX_DEFAULT_POOL,
    REAL_DEFAULT_POOL,
    SearchConfig,
    attainability_census,
    exhaustive_matrices,
    find_witness,
    hunt_counterexamples,
    singular_completions,
)
from seprkit.sepr import compute_sepr, parse_sequence


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(n=2, pool=(), field=Field.HERMITIAN)
    with pytest.raises(ValueError):
        SearchConfig(n=2, pool=(I,), field=Field.REAL_SYMMETRIC)
    with pytest.raises(ValueError):
        SearchConfig(n=0, pool=REAL_DEFAULT_POOL, field=Field.HERMITIAN)
    with pytest.raises(ValueError):
        SearchConfig(n=2, pool=REAL_DEFAULT_POOL, field=Field.HERMITIAN, mode="walk")
    with pytest.raises(ValueError):
        SearchConfig(n=(2, 3), pool=REAL_DEFAULT_POOL, field=Field.HERMITIAN, mode="exhaustive")


def test_exhaustive_enumeration_counts():
    # real 3x3 over {-1,0,1}: 3 diagonal + 3 upper slots, 3 values each
    pool = tuple(GaussianRational(v) for v in (-1, 0, 1))
    count = sum(1 for _ in exhaustive_matrices(3, pool, Field.REAL_SYMMETRIC))
    assert count == 3**6
    # complex 2x2 over {0, 1, -1, i, -i}: diagonal uses the 3 distinct real
    # parts, the single upper slot all 5 entries
    cpool = (
        GaussianRational(0),
        GaussianRational(1),
        GaussianRational(-1),
        I,
        -I,
    )
    count = sum(1 for _ in exhaustive_matrices(2, cpool, Field.HERMITIAN))
    assert count == 3 * 3 * 5


def test_find_zero_matrix():
    cfg = SearchConfig(
        n=2,
        pool=(GaussianRational(0),),
        field=Field.HERMITIAN,
        target=parse_sequence("NN"),
        mode="exhaustive",
        budget=10,
    )
    hit = find_witness(cfg)
    assert hit is not None
    assert hit.matrix == HermitianMatrix.zero(2)
    assert str(hit.sepr) == "NN" and hit.position == 1


def test_forbidden_target_never_found():
    pool = tuple(GaussianRational(v) for v in (-1, 0, 1))
    for n in (2, 3):
        cfg = SearchConfig(
            n=n,
            pool=pool,
            field=Field.REAL_SYMMETRIC,
            target=parse_sequence("A*N"),
            mode="exhaustive",
            budget=10**6,
            subsequence=True,
        )
        assert find_witness(cfg) is None


def test_find_witness_soundness_and_determinism():
    cfg = SearchConfig(
        n=(3, 5),
        pool=COMPLEX_DEFAULT_POOL,
        field=Field.HERMITIAN,
        target=parse_sequence("NA+"),
        mode="random",
        budget=4000,
        seed=99,
        subsequence=True,
    )
    hit1 = find_witness(cfg)
    hit2 = find_witness(cfg)
    assert hit1 is not None
    assert hit1.matrix == hit2.matrix and hit1.position == hit2.position
    # soundness: the reported sequence re-verifies and contains the target
    s = compute_sepr(hit1.matrix)
    assert s == hit1.sepr
    assert s.find(parse_sequence("NA+")) == hit1.position


def test_negation_closure_of_found_witness():
    cfg = SearchConfig(
        n=3,
        pool=REAL_DEFAULT_POOL,
        field=Field.REAL_SYMMETRIC,
        target=parse_sequence("A+A*A-"),
        mode="random",
        budget=5000,
        seed=5,
    )
    hit = find_witness(cfg)
    assert hit is not None
    negged = compute_sepr(hit.matrix.negate())
    expected = [t.negated if j % 2 == 0 else t for j, t in enumerate(hit.sepr.terms)]
    assert list(negged.terms) == expected


def test_hunt_determinism_and_cleanliness():
    cfg = SearchConfig(
        n=(1, 4),
        pool=REAL_DEFAULT_POOL,
        field=Field.REAL_SYMMETRIC,
        mode="random",
        budget=120,
        seed=321,
    )
    rep1 = hunt_counterexamples(cfg)
    rep2 = hunt_counterexamples(cfg)
    assert rep1.samples == rep2.samples == 120
    assert rep1.check_counts == rep2.check_counts
    assert rep1.clean and rep2.clean


def test_hunt_exhaustive_small():
    pool = tuple(GaussianRational(v) for v in (-1, 0, 1))
    cfg = SearchConfig(
        n=2,
        pool=pool,
        field=Field.REAL_SYMMETRIC,
        mode="exhaustive",
        budget=10**6,
    )
    rep = hunt_counterexamples(cfg, permutation_samples=2)
    assert rep.samples == 3**3
    assert rep.clean


def test_singular_completions_are_singular():
    pool = tuple(GaussianRational(v) for v in (-1, 0, 1))
    seen = 0
    for m in singular_completions(pool):
        assert m.determinant() == 0
        seen += 1
        if seen >= 50:
            break
    assert seen == 50


def test_census_order2():
    for field in Field:
        rep = attainability_census(2, field, search_budget=500)
        assert rep.total == 45
        assert rep.witnessed == 45
        assert rep.violations == []
        assert rep.source_of(parse_sequence("NN")) is not None
        lines = list(rep.lines())
        assert len(lines) == 45
        assert all(len(line.split("\t")) == 3 for line in lines)


def test_census_determinism():
    rep1 = attainability_census(3, Field.REAL_SYMMETRIC, search_budget=300, seed=9)
    rep2 = attainability_census(3, Field.REAL_SYMMETRIC, search_budget=300, seed=9)
    assert [r.line() for r in rep1.rows] == [r.line() for r in rep2.rows]


def test_census_rejects_bad_order():
    with pytest.raises(ValueError):
        attainability_census(4, Field.HERMITIAN)


def test_census_targets_exclude_forbidden():
    rep = attainability_census(2, Field.HERMITIAN, search_budget=100)
    patterns = {r.pattern for r in rep.rows}
    assert patterns.isdisjoint(forbidden_order2(Field.HERMITIAN))
    rep = attainability_census(3, Field.REAL_SYMMETRIC, search_budget=100)
    assert {r.pattern for r in rep.rows}.isdisjoint(forbidden_order3(Field.REAL_SYMMETRIC))
